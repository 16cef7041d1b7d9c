"""Dynkin diagrams of the four classical families, and their root systems.

Roots are integer coordinate tuples in the simple-root basis alpha_1..alpha_n.
The Cartan convention is cartan[i][j] = <alpha_i^vee, alpha_j>, so the simple
reflection acts by s_i(alpha_j) = alpha_j - cartan[i][j] * alpha_i.  Nodes are
numbered 1..rank in Bourbaki order: A_n is the path 1-2-...-n; B_n and C_n end
with the multiple edge between n-1 and n (B_n carries the short root at node
n, so cartan[n][n-1] = -2 and cartan[n-1][n] = -1; C_n is the transpose); D_n
attaches the two leaves n-1 and n to the branch node n-2.

D_2 and D_3 are degenerate shapes (A_1+A_1 and a relabelled A_3); they are
constructible because the counting routines sample them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

FAMILIES = ("A", "B", "C", "D")

MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 2}


@dataclass(frozen=True)
class DynkinDiagram:
    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def entry(self, i: int, j: int) -> int:
        """Cartan entry <alpha_i^vee, alpha_j>, 1-based."""
        return self.cartan[i - 1][j - 1]

    def adjacent(self, i: int, j: int) -> bool:
        return i != j and self.cartan[i - 1][j - 1] != 0

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(j for j in range(1, self.rank + 1) if self.adjacent(i, j))

    def simple_root(self, i: int) -> tuple[int, ...]:
        if not 1 <= i <= self.rank:
            raise ValueError(f"node {i} out of range for {self.name}")
        return tuple(1 if j == i else 0 for j in range(1, self.rank + 1))

    def __repr__(self) -> str:
        return f"DynkinDiagram({self.name})"


def _edges(family: str, rank: int) -> list[tuple[int, int, int, int]]:
    """Edges as (i, j, cartan_ij, cartan_ji) with i < j."""
    edges = []
    if family == "A":
        edges = [(i, i + 1, -1, -1) for i in range(1, rank)]
    elif family in ("B", "C"):
        edges = [(i, i + 1, -1, -1) for i in range(1, rank - 1)]
        if family == "B":
            # short root at node rank: <alpha_n^vee, alpha_{n-1}> = -2
            edges.append((rank - 1, rank, -1, -2))
        else:
            edges.append((rank - 1, rank, -2, -1))
    elif family == "D":
        edges = [(i, i + 1, -1, -1) for i in range(1, rank - 2)]
        if rank >= 3:
            edges.append((rank - 2, rank - 1, -1, -1))
            edges.append((rank - 2, rank, -1, -1))
        # rank 2: two isolated nodes, no edges
    return edges


@lru_cache(maxsize=None)
def build_diagram(family: str, rank: int) -> DynkinDiagram:
    """Construct the classical diagram of the given family and rank."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if rank < MIN_RANK[family]:
        raise ValueError(f"family {family} requires rank >= {MIN_RANK[family]}, got {rank}")
    cartan = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j, cij, cji in _edges(family, rank):
        cartan[i - 1][j - 1] = cij
        cartan[j - 1][i - 1] = cji
    return DynkinDiagram(family, rank, tuple(tuple(row) for row in cartan))


def parse_diagram_name(name: str) -> DynkinDiagram:
    """Parse a CLI diagram name such as "A3" or "D5"."""
    name = name.strip()
    if len(name) < 2 or name[0].upper() not in FAMILIES:
        raise ValueError(f"bad diagram name {name!r}; expected e.g. A3, B4, D5")
    try:
        rank = int(name[1:])
    except ValueError:
        raise ValueError(f"bad diagram name {name!r}; expected e.g. A3, B4, D5") from None
    return build_diagram(name[0].upper(), rank)


def reflect_root(diagram: DynkinDiagram, i: int, root: tuple[int, ...]) -> tuple[int, ...]:
    """Image of a root vector under the simple reflection s_i."""
    if not 1 <= i <= diagram.rank:
        raise ValueError(f"reflection index {i} out of range for {diagram.name}")
    if len(root) != diagram.rank:
        raise ValueError(f"root has length {len(root)}, expected {diagram.rank}")
    row = diagram.cartan[i - 1]
    pairing = sum(row[j] * root[j] for j in range(diagram.rank))
    return tuple(
        c - pairing if j == i - 1 else c for j, c in enumerate(root)
    )


def is_positive(root: tuple[int, ...]) -> bool:
    return any(c > 0 for c in root) and all(c >= 0 for c in root)


def is_negative(root: tuple[int, ...]) -> bool:
    return any(c < 0 for c in root) and all(c <= 0 for c in root)


@lru_cache(maxsize=None)
def all_roots(diagram: DynkinDiagram) -> frozenset[tuple[int, ...]]:
    """Close the simple roots under all simple reflections."""
    seen = {diagram.simple_root(i) for i in range(1, diagram.rank + 1)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(1, diagram.rank + 1):
                image = reflect_root(diagram, i, r)
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    return frozenset(seen)


@lru_cache(maxsize=None)
def positive_roots(diagram: DynkinDiagram) -> tuple[tuple[int, ...], ...]:
    """All positive roots, sorted by (height, coordinates) for determinism."""
    pos = [r for r in all_roots(diagram) if is_positive(r)]
    pos.sort(key=lambda r: (sum(r), r))
    return tuple(pos)
