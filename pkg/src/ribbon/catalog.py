from src.ribbon.ribbon_graph import RibbonGraph


def theta_graph(planar: bool = False) -> RibbonGraph:
    """Two vertices joined by three parallel edges.

    With aligned rotations the thickened graph is a once-punctured torus (one face);
    reversing the rotation at the second vertex gives the thrice-punctured sphere.
    """
    second = (5, 3, 4) if planar else (4, 5, 3)
    return RibbonGraph(n=1, sigma=(1, 2, 0) + second, alpha=(3, 4, 5, 0, 1, 2))


def dumbbell() -> RibbonGraph:
    """A loop at each of two vertices plus the edge joining them"""
    return RibbonGraph(n=1, sigma=(1, 2, 0, 4, 5, 3), alpha=(1, 0, 5, 4, 3, 2))


def k33() -> RibbonGraph:
    """Complete bipartite graph K_{3,3}: simple, girth 4"""
    sigma = []
    for v in range(6):
        sigma.extend([3 * v + 1, 3 * v + 2, 3 * v])
    alpha = [0] * 18
    for a in range(3):
        for b in range(3, 6):
            left, right = 3 * a + (b - 3), 3 * b + a
            alpha[left], alpha[right] = right, left
    return RibbonGraph(n=3, sigma=tuple(sigma), alpha=tuple(alpha))
