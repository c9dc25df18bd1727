"""Shift-invariant laws on bi-infinite {0,1} sequences and their volume reweighting.

A sequence alpha codes a chain of building blocks N_{alpha_i}; pointing the glued
space at a uniform point size-biases the block under the root by its volume.
"""
import math
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple

import networkx as nx
import numpy as np

from src.errors import InvalidArgumentError
from src.unimodular.mtp import TransportFunction

logger = logging.getLogger('belyi-lab')


def _exact(x: Any) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class ShiftMeasure(ABC):
    """Shift-invariant probability measure on {0,1}^Z"""

    kind: str = ""

    @abstractmethod
    def marginal_one(self) -> Fraction:
        """P(alpha_0 = 1)"""

    @abstractmethod
    def sample_window(self, window: int, rng: np.random.Generator) -> np.ndarray:
        """alpha_{-window..window} under the stationary law"""

    @abstractmethod
    def sample_given_center(self, bit: int, window: int, rng: np.random.Generator) -> np.ndarray:
        """alpha_{-window..window} conditioned on alpha_0 = bit"""

    @abstractmethod
    def is_induced_from_lattice(self) -> bool:
        """True when the law lives on the shift orbit of a periodic sequence"""

    @property
    @abstractmethod
    def label(self) -> str:
        pass


class BernoulliShift(ShiftMeasure):
    kind = "bernoulli"

    def __init__(self, p: Any):
        if not 0 <= p <= 1:
            raise InvalidArgumentError(f"bernoulli p must lie in [0, 1], got {p}")
        self.p = p

    def marginal_one(self) -> Fraction:
        return _exact(self.p)

    def sample_window(self, window: int, rng: np.random.Generator) -> np.ndarray:
        return (rng.random(2 * window + 1) < float(self.p)).astype(np.int8)

    def sample_given_center(self, bit: int, window: int, rng: np.random.Generator) -> np.ndarray:
        word = self.sample_window(window, rng)
        word[window] = bit
        return word

    def is_induced_from_lattice(self) -> bool:
        return self.p in (0, 1)

    @property
    def label(self) -> str:
        return f"bernoulli({self.p})"


class MarkovShift(ShiftMeasure):
    """Stationary two-state Markov chain"""
    kind = "markov"

    def __init__(self, matrix: Sequence[Sequence[Any]]):
        rows = [list(row) for row in matrix]
        if len(rows) != 2 or any(len(row) != 2 for row in rows):
            raise InvalidArgumentError("markov matrix must be 2x2")
        if any(x < 0 for row in rows for x in row):
            raise InvalidArgumentError("markov matrix entries must be nonnegative")
        if any(not math.isclose(float(sum(row)), 1.0, abs_tol=1e-12) for row in rows):
            raise InvalidArgumentError(f"markov matrix rows must sum to 1, got {rows}")
        self.matrix = rows
        a, b = _exact(rows[0][1]), _exact(rows[1][0])
        if a + b == 0:
            raise InvalidArgumentError("identity transition matrix has no unique stationary law")
        self.stationary = (b / (a + b), a / (a + b))

    def marginal_one(self) -> Fraction:
        return self.stationary[1]

    def _step(self, state: int, kernel: List[List[float]], rng: np.random.Generator) -> int:
        return int(rng.random() < kernel[state][1])

    def _reversed_kernel(self) -> List[List[float]]:
        pi = [float(x) for x in self.stationary]
        kernel = [[0.0, 0.0], [0.0, 0.0]]
        for i in range(2):
            if pi[i] == 0:
                kernel[i] = [float(x) for x in self.matrix[i]]
                continue
            for j in range(2):
                kernel[i][j] = pi[j] * float(self.matrix[j][i]) / pi[i]
        return kernel

    def sample_given_center(self, bit: int, window: int, rng: np.random.Generator) -> np.ndarray:
        word = np.zeros(2 * window + 1, dtype=np.int8)
        word[window] = bit
        forward = [[float(x) for x in row] for row in self.matrix]
        backward = self._reversed_kernel()
        for i in range(window + 1, 2 * window + 1):
            word[i] = self._step(word[i - 1], forward, rng)
        for i in range(window - 1, -1, -1):
            word[i] = self._step(word[i + 1], backward, rng)
        return word

    def sample_window(self, window: int, rng: np.random.Generator) -> np.ndarray:
        bit = int(rng.random() < float(self.marginal_one()))
        return self.sample_given_center(bit, window, rng)

    def is_induced_from_lattice(self) -> bool:
        # catena deterministica sul supporto della legge stazionaria
        support = [i for i in range(2) if self.stationary[i] > 0]
        return all(_exact(self.matrix[i][j]) in (0, 1) for i in support for j in range(2))

    @property
    def label(self) -> str:
        return f"markov({self.matrix})"


class PeriodicShift(ShiftMeasure):
    """Uniform measure on the shift orbit of a periodic sequence"""
    kind = "periodic"

    def __init__(self, word: str):
        if not word or set(word) - {'0', '1'}:
            raise InvalidArgumentError(f"periodic word must be a nonempty string over 0/1, got {word!r}")
        self.word = word
        self._bits = np.array([int(c) for c in word], dtype=np.int8)

    def marginal_one(self) -> Fraction:
        return Fraction(self.word.count('1'), len(self.word))

    def _read(self, phase: int, window: int) -> np.ndarray:
        idx = (phase + np.arange(-window, window + 1)) % len(self.word)
        return self._bits[idx]

    def sample_window(self, window: int, rng: np.random.Generator) -> np.ndarray:
        return self._read(int(rng.integers(len(self.word))), window)

    def sample_given_center(self, bit: int, window: int, rng: np.random.Generator) -> np.ndarray:
        phases = [i for i, c in enumerate(self.word) if int(c) == bit]
        if not phases:
            raise InvalidArgumentError(f"word {self.word!r} never takes the value {bit}")
        return self._read(phases[int(rng.integers(len(phases)))], window)

    def is_induced_from_lattice(self) -> bool:
        return True

    @property
    def label(self) -> str:
        return f"periodic({self.word})"


@dataclass(frozen=True)
class BlockSystem:
    vol0: float
    vol1: float

    def __post_init__(self):
        if not (self.vol0 > 0 and self.vol1 > 0):
            raise InvalidArgumentError(f"block volumes must be positive, got {self.vol0}, {self.vol1}")

    def volume(self, bit: int) -> float:
        return self.vol1 if bit else self.vol0


def window_volume(word: Sequence[int], blocks: BlockSystem) -> float:
    return float(sum(blocks.volume(int(bit)) for bit in word))


@dataclass(frozen=True)
class ReweightedLaw:
    """Law nu' = vol(N_{alpha_0}) d nu / normalization"""
    nu: ShiftMeasure
    blocks: BlockSystem
    p_one: Fraction

    def sample(self, window: int, rng: np.random.Generator) -> np.ndarray:
        bit = int(rng.random() < float(self.p_one))
        return self.nu.sample_given_center(bit, window, rng)


def reweight(nu: ShiftMeasure, blocks: BlockSystem) -> ReweightedLaw:
    p1 = nu.marginal_one()
    p0 = 1 - p1
    vol0, vol1 = _exact(blocks.vol0), _exact(blocks.vol1)
    return ReweightedLaw(nu=nu, blocks=blocks, p_one=vol1 * p1 / (vol0 * p0 + vol1 * p1))


@dataclass(frozen=True)
class PointedSequence:
    word: Tuple[int, ...]
    offset: int = 0  # il punto base sta nel blocco centrale


def sample_pointed_sequence(law: ReweightedLaw, window: int, seed: int) -> PointedSequence:
    """Central window of a nu'-distributed sequence; deterministic given seed"""
    if window < 1:
        raise InvalidArgumentError(f"window must be positive, got {window}")
    rng = np.random.default_rng(seed)
    return PointedSequence(word=tuple(int(b) for b in law.sample(window, rng)))


def sample_pointed_sequences(law: ReweightedLaw, window: int, samples: int, seed: int) -> List[PointedSequence]:
    if window < 1:
        raise InvalidArgumentError(f"window must be positive, got {window}")
    rng = np.random.default_rng(seed)
    return [PointedSequence(word=tuple(int(b) for b in law.sample(window, rng))) for _ in range(samples)]


def window_graph(word: Sequence[int]) -> Tuple[nx.Graph, int]:
    """Labelled path on positions -w..w, rooted at 0"""
    window = len(word) // 2
    graph = nx.path_graph(range(-window, window + 1))
    for position, bit in zip(range(-window, window + 1), word):
        graph.nodes[position]['label'] = int(bit)
    return graph, 0


@dataclass
class ShiftMTPReport:
    label: str
    transport: str
    samples: int
    mean_out: float
    mean_in: float
    mean_difference: float
    standard_error: float

    @property
    def within_3_sigma(self) -> bool:
        if self.standard_error == 0:
            return self.mean_difference == 0
        return abs(self.mean_difference) <= 3 * self.standard_error

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "transport": self.transport,
            "samples": self.samples,
            "mean_out": self.mean_out,
            "mean_in": self.mean_in,
            "mean_difference": self.mean_difference,
            "standard_error": self.standard_error,
            "within_3_sigma": self.within_3_sigma,
        }


def shift_mtp_check(nu: ShiftMeasure, f: TransportFunction, window: int, samples: int, seed: int) -> ShiftMTPReport:
    """Monte Carlo mass transport on labelled path windows of a shift-invariant law"""
    if window <= f.radius:
        raise InvalidArgumentError(f"window {window} must exceed the transport radius {f.radius}")
    if samples < 2:
        raise InvalidArgumentError(f"need at least 2 samples, got {samples}")
    rng = np.random.default_rng(seed)
    # solo i vertici entro distanza 2*raggio dalla radice possono scambiare massa con essa
    reach = 2 * f.radius
    out_mass = np.empty(samples)
    in_mass = np.empty(samples)
    for i in range(samples):
        graph, root = window_graph(nu.sample_window(window, rng))
        near = [v for v in graph.nodes if abs(v - root) <= reach]
        out_mass[i] = float(sum(f(graph, root, q) for q in near))
        in_mass[i] = float(sum(f(graph, p, root) for p in near))
    diff = out_mass - in_mass
    return ShiftMTPReport(
        label=nu.label,
        transport=f.name,
        samples=samples,
        mean_out=float(out_mass.mean()),
        mean_in=float(in_mass.mean()),
        mean_difference=float(diff.mean()),
        standard_error=float(diff.std(ddof=1) / math.sqrt(samples)),
    )
