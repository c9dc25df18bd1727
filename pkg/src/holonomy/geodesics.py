import math
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from src.config.models.budget import DEFAULT_MAX_WALKS
from src.errors import BudgetExceededError, InvalidArgumentError
from src.holonomy.turn_word import TurnWord, is_proper_power, length_from_trace, minimal_rotation
from src.ribbon.ribbon_graph import RibbonGraph, surface_invariants

logger = logging.getLogger('belyi-lab')

# tolleranza relativa sul confronto tra traccia intera e 2cosh(R/2)
TRACE_GUARD = 1e-12


@dataclass(frozen=True)
class ClosedGeodesic:
    """Primitive unoriented closed geodesic of the punctured surface"""
    word: TurnWord
    trace: int
    length: float
    darts: Tuple[int, ...] = field(compare=False)  # ciclo canonico di dart uscenti


@dataclass
class WalkClasses:
    """Primitive unoriented closed walk classes up to a combinatorial length"""
    hyperbolic: List[ClosedGeodesic]
    parabolic: List[Tuple[int, ...]]
    nodes_visited: int


@dataclass(frozen=True)
class BrooksBound:
    bound: int
    valid_assuming_cusp_width: bool


def trace_cutoff(R: float) -> float:
    """Largest |trace| of a closed geodesic of length <= R"""
    try:
        return 2.0 * math.cosh(R / 2.0)
    except OverflowError:
        raise InvalidArgumentError(f"R={R} is beyond floating point range")


def _trace_within(trace: int, cap: float) -> bool:
    return abs(trace) <= cap * (1.0 + TRACE_GUARD)


def walk_length_cutoff(R: float) -> int:
    """Longest closed walk that can carry a geodesic of length <= R.

    A mixed word of length k has trace at least k + 1 (attained by L^(k-1) R).
    """
    return max(1, math.floor(trace_cutoff(R) * (1.0 + TRACE_GUARD)) - 1)


def _canonical_cycle(g: RibbonGraph, walk: Tuple[int, ...]) -> Tuple[int, ...]:
    """Minimal rotation of the outgoing dart cycle or of the reversed walk"""
    alpha = g.alpha
    reverse = tuple(alpha[d] for d in reversed(walk))
    return min(minimal_rotation(walk), minimal_rotation(reverse))


def _turn_word(g: RibbonGraph, walk: Tuple[int, ...]) -> TurnWord:
    letters = []
    k = len(walk)
    for i, d in enumerate(walk):
        letters.append('L' if walk[(i + 1) % k] == g.sigma[g.alpha[d]] else 'R')
    return TurnWord(''.join(letters))


def enumerate_closed_walk_classes(g: RibbonGraph,
                                  k_max: int,
                                  trace_cap: Optional[float] = None,
                                  max_walks: int = DEFAULT_MAX_WALKS) -> WalkClasses:
    """Depth-first enumeration of closed non-backtracking walks of length <= k_max.

    Each oriented cycle is generated from its smallest outgoing dart; products of
    L and R are entrywise monotone, so a partial walk whose holonomy trace already
    exceeds trace_cap is pruned.

    Args:
        g: ribbon graph
        k_max: maximal combinatorial length
        trace_cap: optional bound on |trace| of the hyperbolic classes kept
        max_walks: cap on visited search nodes
    Returns:
        WalkClasses with hyperbolic geodesics sorted by (trace, word) and
        parabolic (pure-turn) classes sorted by their canonical dart cycle
    """
    if k_max < 1:
        raise InvalidArgumentError(f"k_max must be positive, got {k_max}")
    sigma, sigma_inv, alpha = g.sigma, g.sigma_inverse, g.alpha
    hyperbolic: Dict[Tuple[int, ...], ClosedGeodesic] = {}
    parabolic = set()
    nodes = 0

    for d0 in range(g.num_darts):
        # (cammino, matrice parziale a b c d delle svolte gia' decise)
        stack = [((d0,), 1, 0, 0, 1)]
        while stack:
            walk, a, b, c, d = stack.pop()
            nodes += 1
            if nodes > max_walks:
                raise BudgetExceededError(max_walks, nodes, "geodesic enumeration")
            x = alpha[walk[-1]]
            left, right = sigma[x], sigma_inv[x]

            # chiusura del cammino su d0
            if d0 in (left, right):
                # L = [[1,1],[0,1]], R = [[1,0],[1,1]]
                trace = (a + d + c) if d0 == left else (a + d + b)
                _record_closed_walk(g, walk, trace, trace_cap, hyperbolic, parabolic)

            if len(walk) == k_max:
                continue
            for y, letter in ((left, 'L'), (right, 'R')):
                if y < d0:
                    continue
                if letter == 'L':
                    na, nb, nc, nd = a, a + b, c, c + d
                else:
                    na, nb, nc, nd = a + b, b, c + d, d
                if trace_cap is not None and na + nd > 2 and not _trace_within(na + nd, trace_cap):
                    continue
                stack.append((walk + (y,), na, nb, nc, nd))

    logger.debug(f"Closed walk enumeration up to length {k_max}: {nodes} nodes, "
                 f"{len(hyperbolic)} hyperbolic and {len(parabolic)} parabolic classes")
    geodesics = sorted(hyperbolic.values(), key=lambda geo: (geo.trace, geo.word.letters, geo.darts))
    return WalkClasses(hyperbolic=geodesics, parabolic=sorted(parabolic), nodes_visited=nodes)


def _record_closed_walk(g: RibbonGraph,
                        walk: Tuple[int, ...],
                        trace: int,
                        trace_cap: Optional[float],
                        hyperbolic: Dict[Tuple[int, ...], ClosedGeodesic],
                        parabolic: set) -> None:
    if is_proper_power(walk):
        return
    key = _canonical_cycle(g, walk)
    if abs(trace) == 2:
        parabolic.add(key)
        return
    if key in hyperbolic:
        return
    if trace_cap is not None and not _trace_within(trace, trace_cap):
        return
    word = _turn_word(g, walk).canonical()
    hyperbolic[key] = ClosedGeodesic(word=word, trace=abs(trace), length=length_from_trace(trace), darts=key)


def enumerate_geodesics(g: RibbonGraph, R: float, max_walks: int = DEFAULT_MAX_WALKS) -> List[ClosedGeodesic]:
    """Primitive unoriented closed geodesics of length <= R"""
    if not R > 0:
        raise InvalidArgumentError(f"R must be positive, got {R}")
    if R / 2.0 > math.log(max(max_walks, 1)) + 1.0:
        # la sola lunghezza di taglio (> e^(R/2) - 1) supera gia' il budget di nodi
        raise BudgetExceededError(max_walks, max_walks + 1, f"geodesic enumeration at R={R}")
    classes = enumerate_closed_walk_classes(g, walk_length_cutoff(R), trace_cutoff(R), max_walks)
    return classes.hyperbolic


def count_NR(g: RibbonGraph, R: float, max_walks: int = DEFAULT_MAX_WALKS) -> int:
    return len(enumerate_geodesics(g, R, max_walks))


def systole(g: RibbonGraph, R_cap: float, max_walks: int = DEFAULT_MAX_WALKS) -> Optional[float]:
    """Shortest closed geodesic length if it is at most R_cap, otherwise None"""
    geodesics = enumerate_geodesics(g, R_cap, max_walks)
    if not geodesics:
        return None
    return min(geo.length for geo in geodesics)


def bound_NR_compactified(g: RibbonGraph, R: float, max_walks: int = DEFAULT_MAX_WALKS) -> BrooksBound:
    """Upper bound N_R(S_C) <= N_2R(S).

    The inequality needs embedded cusp neighbourhoods of a fixed width, which is not
    checked per sample; the flag only records whether S_C is hyperbolic at all.
    """
    if not R > 0:
        raise InvalidArgumentError(f"R must be positive, got {R}")
    invariants = surface_invariants(g)
    return BrooksBound(
        bound=count_NR(g, 2.0 * R, max_walks),
        valid_assuming_cusp_width=invariants.hyperbolic_compactification,
    )


def compactified_ratio_bound(g: RibbonGraph, R: float, max_walks: int = DEFAULT_MAX_WALKS) -> Optional[float]:
    """2 N_2R(S) / vol S, an upper bound for N_R(S_C) / vol S_C once vol S_C >= vol S / 2.

    Returns None for non-hyperbolic compactifications.
    """
    invariants = surface_invariants(g)
    if not invariants.hyperbolic_compactification:
        logger.debug(f"Compactification of genus {invariants.genus} is not hyperbolic, no ratio bound")
        return None
    bound = bound_NR_compactified(g, R, max_walks)
    return 2.0 * bound.bound / invariants.vol_S


def geodesic_rows(geodesics: List[ClosedGeodesic]) -> List[Dict[str, str]]:
    """CSV rows (word, trace, length) sorted by (length, word)"""
    ordered = sorted(geodesics, key=lambda geo: (geo.length, geo.word.letters))
    return [
        {"word": geo.word.letters, "trace": str(geo.trace), "length": repr(geo.length)}
        for geo in ordered
    ]
