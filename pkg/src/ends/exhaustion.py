"""Finite truncations of a compact exhaustion K_1 c K_2 c ... of a surface.

Each node is a complementary component at its depth; its children are the
components it splits into one level deeper. A node records the handles that
appear in it and whether it is a cusp leaf (a punctured disc, never split).
End invariants are read off trends over the last few levels.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from src.ends.classifier import SurfaceType, classify
from src.ends.descriptor import CuspEnds, EndsDescriptor, NonCuspEnds
from src.errors import AmbiguousDescriptorError, InvalidArgumentError

logger = logging.getLogger('belyi-lab')

DEFAULT_STABILITY_WINDOW = 3


@dataclass
class ExhaustionNode:
    handles_added: int = 0
    cusp_leaf: bool = False
    children: List['ExhaustionNode'] = field(default_factory=list)

    def __post_init__(self):
        if self.handles_added < 0:
            raise InvalidArgumentError(f"handles_added must be nonnegative, got {self.handles_added}")
        if self.cusp_leaf and self.children:
            raise InvalidArgumentError("a cusp leaf cannot have children")

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"handles_added": self.handles_added}
        if self.cusp_leaf:
            data["cusp_leaf"] = True
        if self.children:
            data["children"] = [child.to_dict() for child in self.children]
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ExhaustionNode':
        if not isinstance(data, dict):
            raise InvalidArgumentError(f"exhaustion node must be an object, got {type(data).__name__}")
        return cls(
            handles_added=int(data.get('handles_added', 0)),
            cusp_leaf=bool(data.get('cusp_leaf', False)),
            children=[cls.from_dict(child) for child in data.get('children', [])],
        )


@dataclass
class ExhaustionTree:
    root: ExhaustionNode

    @property
    def height(self) -> int:
        def _height(node: ExhaustionNode) -> int:
            return 1 + max((_height(c) for c in node.children), default=-1)
        return _height(self.root)

    def levels(self, depth: int) -> List[List[Tuple[ExhaustionNode, Tuple[ExhaustionNode, ...]]]]:
        """Nodes at each level 0..depth, each with its ancestor path (root first, itself last)"""
        result = [[(self.root, (self.root,))]]
        for _ in range(depth):
            result.append([
                (child, path + (child,))
                for node, path in result[-1]
                for child in node.children
            ])
        return result

    def to_dict(self) -> Dict[str, Any]:
        return self.root.to_dict()

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ExhaustionTree':
        if 'root' in data and 'handles_added' not in data:
            data = data['root']
        return cls(root=ExhaustionNode.from_dict(data))


@dataclass
class ExhaustionResult:
    descriptor: EndsDescriptor
    stable: bool


def _descriptor_at(tree: ExhaustionTree, depth: int, window: int) -> EndsDescriptor:
    levels = tree.levels(depth)
    branches = [path for node, path in levels[depth] if not node.cusp_leaf]
    counts = [sum(1 for node, _ in level if not node.cusp_leaf) for level in levels]
    handles = sum(node.handles_added for level in levels for node, _ in level)
    cusps = sum(1 for level in levels for node, _ in level if node.cusp_leaf)
    recent = range(max(1, depth - window + 1), depth + 1)

    if not branches:
        return EndsDescriptor(
            total_genus=handles,
            noncusp_ends=NonCuspEnds.ZERO,
            cusp_ends=CuspEnds.FINITE if cusps else CuspEnds.NONE,
            cusp_count=cusps or None,
            finite_type=(handles, cusps),
        )

    tail = counts[max(0, depth - window + 1):]
    if len(tail) >= 2 and all(a < b for a, b in zip(tail, tail[1:])):
        noncusp = NonCuspEnds.CANTOR
    elif len(branches) == 1:
        noncusp = NonCuspEnds.ONE
    elif len(branches) == 2:
        noncusp = NonCuspEnds.TWO
    else:
        noncusp = NonCuspEnds.MANY_ISOLATED

    # un ramo accumula genere se ha guadagnato un'ansa nelle ultime `window` generazioni
    infinite_genus = [any(path[j].handles_added > 0 for j in recent) for path in branches]
    # un ramo vede cusp densi se un suo antenato recente ha generato una foglia cusp
    dense_cusps = [
        any(child.cusp_leaf for j in recent for child in path[j - 1].children)
        for path in branches
    ]

    if cusps == 0:
        cusp_ends, cusp_count = CuspEnds.NONE, None
    elif all(dense_cusps):
        cusp_ends, cusp_count = CuspEnds.INFINITE_DENSE, None
    elif any(dense_cusps):
        cusp_ends, cusp_count = CuspEnds.INFINITE_SPARSE, None
    else:
        cusp_ends, cusp_count = CuspEnds.FINITE, cusps

    every_infinite = all(infinite_genus)
    return EndsDescriptor(
        total_genus=None if any(infinite_genus) else handles,
        noncusp_ends=noncusp,
        every_end_infinite_genus=every_infinite,
        some_end_genus_zero=not every_infinite,
        cusp_ends=cusp_ends,
        cusp_count=cusp_count,
    )


def descriptor_from_exhaustion(tree: ExhaustionTree,
                               depth: int,
                               window: int = DEFAULT_STABILITY_WINDOW) -> ExhaustionResult:
    """End invariants read at the given depth of an exhaustion tree

    Args:
        tree: truncated exhaustion
        depth: level to read, at most the tree height
        window: number of consecutive levels over which trends are judged
    Returns:
        ExhaustionResult: descriptor, and whether it agrees on the last `window` levels
    """
    if depth < 1 or depth > tree.height:
        raise InvalidArgumentError(f"depth must be in [1, {tree.height}], got {depth}")
    if window < 2:
        raise InvalidArgumentError(f"stability window must be at least 2, got {window}")
    descriptor = _descriptor_at(tree, depth, window)
    if descriptor.noncusp_ends == NonCuspEnds.ZERO:
        # nessun ramo aperto: i livelli successivi sono vuoti
        stable = True
    elif depth + 1 < window:
        stable = False
    else:
        stable = all(_descriptor_at(tree, j, window) == descriptor for j in range(depth - window + 1, depth))
    logger.debug(f"Exhaustion depth {depth}: {descriptor.to_dict()} stable={stable}")
    return ExhaustionResult(descriptor=descriptor, stable=stable)


def classify_exhaustion(tree: ExhaustionTree,
                        depth: Optional[int] = None,
                        window: int = DEFAULT_STABILITY_WINDOW) -> SurfaceType:
    """Classifies the surface read from an exhaustion; unstable readings are ambiguous"""
    result = descriptor_from_exhaustion(tree, depth or tree.height, window)
    if not result.stable:
        raise AmbiguousDescriptorError(
            f"end invariants not stable over the last {window} levels: {result.descriptor.to_dict()}")
    return classify(result.descriptor)


def linear_tree(depth: int, handles_per_level: int = 1) -> ExhaustionTree:
    """Single branch; every level below the root adds the given number of handles"""
    if depth < 1:
        raise InvalidArgumentError(f"depth must be positive, got {depth}")
    node = ExhaustionNode(handles_added=handles_per_level)
    for _ in range(depth - 1):
        node = ExhaustionNode(handles_added=handles_per_level, children=[node])
    return ExhaustionTree(root=ExhaustionNode(children=[node]))


def binary_tree(depth: int, handles_per_level: int = 0, cusps: bool = False) -> ExhaustionTree:
    """Complete binary splitting; optionally every component also sheds a cusp leaf"""
    def _build(level: int) -> ExhaustionNode:
        node = ExhaustionNode(handles_added=handles_per_level if level > 0 else 0)
        if level < depth:
            node.children = [_build(level + 1), _build(level + 1)]
            if cusps:
                node.children.append(ExhaustionNode(cusp_leaf=True))
        return node
    return ExhaustionTree(root=_build(0))
