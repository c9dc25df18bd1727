import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple, TypeVar

from src.errors import InvalidArgumentError

T = TypeVar('T')

ALPHABET = frozenset('LR')
_SWAP = str.maketrans('LR', 'RL')


def minimal_rotation(seq: Sequence[T]) -> Tuple[T, ...]:
    """Lexicographically smallest cyclic rotation of a sequence"""
    items = tuple(seq)
    return min(items[i:] + items[:i] for i in range(len(items)))


def is_proper_power(seq: Sequence[T]) -> bool:
    """True if seq = u^m for some shorter u and m >= 2"""
    items = tuple(seq)
    k = len(items)
    for p in range(1, k // 2 + 1):
        if k % p == 0 and items[:p] * (k // p) == items:
            return True
    return False


@dataclass(frozen=True)
class TurnWord:
    """Cyclic word over {L, R} recording the turns of a closed non-backtracking walk"""
    letters: str

    def __post_init__(self):
        if not self.letters:
            raise InvalidArgumentError("turn word must be nonempty")
        if not set(self.letters) <= ALPHABET:
            raise InvalidArgumentError(f"turn word must use only L and R, got {self.letters!r}")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.letters

    def reversed_swapped(self) -> 'TurnWord':
        """Word read by the same walk in the opposite direction"""
        return TurnWord(self.letters[::-1].translate(_SWAP))

    def canonical(self) -> 'TurnWord':
        """Minimal rotation of the word or of its reversed-swapped form"""
        forward = ''.join(minimal_rotation(self.letters))
        backward = ''.join(minimal_rotation(self.reversed_swapped().letters))
        return TurnWord(min(forward, backward))

    @property
    def is_primitive(self) -> bool:
        return not is_proper_power(self.letters)

    @property
    def is_pure(self) -> bool:
        """All letters equal: the walk goes around a face"""
        return len(set(self.letters)) == 1


@dataclass(frozen=True)
class HolonomyMatrix:
    """Element of SL(2, Z) with exact integer entries"""
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise InvalidArgumentError(f"holonomy matrix must have determinant 1: {self.as_tuple()}")

    def __matmul__(self, other: 'HolonomyMatrix') -> 'HolonomyMatrix':
        return HolonomyMatrix(
            a=self.a * other.a + self.b * other.c,
            b=self.a * other.b + self.b * other.d,
            c=self.c * other.a + self.d * other.c,
            d=self.c * other.b + self.d * other.d,
        )

    @property
    def determinant(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return self.a, self.b, self.c, self.d


IDENTITY = HolonomyMatrix(1, 0, 0, 1)
GENERATORS = {
    'L': HolonomyMatrix(1, 1, 0, 1),
    'R': HolonomyMatrix(1, 0, 1, 1),
}


def word_to_matrix(word: TurnWord) -> HolonomyMatrix:
    """Product of the generator matrices in word order"""
    matrix = IDENTITY
    for letter in word.letters:
        matrix = matrix @ GENERATORS[letter]
    return matrix


class ConjugacyType(Enum):
    HYPERBOLIC = "hyperbolic"
    PARABOLIC = "parabolic"
    ELLIPTIC = "elliptic"


@dataclass(frozen=True)
class Classification:
    kind: ConjugacyType
    length: Optional[float] = None  # solo per gli iperbolici


def length_from_trace(trace: int) -> float:
    """Translation length 2 arccosh(|tr| / 2) of a hyperbolic element"""
    return 2.0 * math.acosh(abs(trace) / 2.0)


def classify_matrix(matrix: HolonomyMatrix) -> Classification:
    t = abs(matrix.trace)
    if t > 2:
        return Classification(ConjugacyType.HYPERBOLIC, length_from_trace(t))
    if t == 2:
        return Classification(ConjugacyType.PARABOLIC)
    return Classification(ConjugacyType.ELLIPTIC)
