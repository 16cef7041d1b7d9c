"""Dynkin supports, the equivalence that transports factors along support
isomorphisms, canonical class representatives, and stabilizer counting.

The support of w is the subdiagram induced by the letters of any reduced
word.  Components are classified by shape: at most one component can carry
the multiple edge (types B/C) or the branch node (type D, at least four
vertices); every other component is a path, i.e. type A.  Each component
carries the factor of w it supports; factors on different components
commute and multiply to w.

Two elements are equivalent when some isomorphism of their supports carries
one to the other.  Isomorphisms are products of a matching between
components of equal shape and a diagram automorphism per component: the
flip of A_r, the leaf swap of D_r, the full leg symmetry of the 4-vertex
star, and nothing for B/C tails, whose edge is directed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from .counting import enumerate_embeddings
from .rootsys import MIN_RANK, DynkinDiagram, build_diagram
from .weyl import (
    WeylElement,
    canonical_reduced_word,
    from_word,
    support_letters,
)


@dataclass(frozen=True)
class Component:
    kind: str                    # A, B, C, or D
    size: int
    vertices: tuple[int, ...]    # ambient vertices in canonical order
    word: tuple[int, ...]        # factor's canonical word in ambient letters
    abstract_word: tuple[int, ...]
    key: tuple                   # (kind, size, orbit-minimal abstract word)

    @property
    def label(self) -> str:
        return f"{self.kind}{self.size}"

    def abstract_diagram(self) -> DynkinDiagram:
        return build_diagram(self.kind, self.size)


@dataclass(frozen=True)
class DecoratedSupport:
    family: str
    components: tuple[Component, ...]

    @property
    def n_vertices(self) -> int:
        return sum(c.size for c in self.components)

    @property
    def n_components(self) -> int:
        return len(self.components)

    def profile(self) -> str:
        return "+".join(c.label for c in self.components) if self.components else "-"

    def multiplicities(self) -> dict[int, tuple[int, ...]]:
        """For each size j, the group sizes of equal type-A_j factors."""
        groups: dict[tuple, int] = {}
        for c in self.components:
            if c.kind == "A":
                groups[c.key] = groups.get(c.key, 0) + 1
        out: dict[int, list[int]] = {}
        for (kind, size, _), count in groups.items():
            out.setdefault(size, []).append(count)
        return {j: tuple(sorted(v, reverse=True)) for j, v in out.items()}

    def class_signature(self) -> tuple:
        return (self.family, tuple(sorted(c.key for c in self.components)))


def component_automorphisms(kind: str, size: int) -> tuple[tuple[int, ...], ...]:
    """Diagram automorphisms of one abstract component, as 1-based image tuples."""
    idt = tuple(range(1, size + 1))
    if kind in ("B", "C"):
        return (idt,)
    if kind == "A":
        if size == 1:
            return (idt,)
        return (idt, tuple(range(size, 0, -1)))
    if kind == "D":
        if size == 4:
            # branch node 2 fixed, legs 1, 3, 4 fully symmetric
            out = []
            for legs in permutations((1, 3, 4)):
                image = [0] * 4
                image[1] = 2
                for src, dst in zip((1, 3, 4), legs):
                    image[src - 1] = dst
                out.append(tuple(image))
            return tuple(out)
        swap = list(range(1, size + 1))
        swap[-2], swap[-1] = swap[-1], swap[-2]
        return (idt, tuple(swap))
    raise ValueError(kind)


def _component_vertex_order(diagram: DynkinDiagram, vertices: list[int]) -> tuple[str, int, tuple[int, ...]]:
    """Classify one connected component and fix a canonical vertex order."""
    size = len(vertices)
    vset = set(vertices)
    degree = {
        a: sum(1 for b in vertices if b != a and diagram.adjacent(a, b)) for a in vertices
    }
    multi = any(
        diagram.entry(a, b) * diagram.entry(b, a) == 2
        for a in vertices
        for b in vertices
        if a != b
    )
    branch = next((a for a in vertices if degree[a] == 3), None)
    if multi:
        # tail of the ambient B/C diagram; ascending order puts the
        # double edge at the far end, matching the abstract diagram
        return diagram.family, size, tuple(sorted(vertices))
    if branch is not None:
        leaves = sorted(v for v in diagram.neighbors(branch) if v in vset and degree[v] == 1 and v > branch)
        leg = sorted(vset - set(leaves))
        return "D", size, tuple(leg) + tuple(leaves)
    if size == 1:
        return "A", 1, (vertices[0],)
    ends = [a for a in vertices if degree[a] == 1]
    walks = []
    for start in ends:
        walk = [start]
        while len(walk) < size:
            nxt = next(
                b for b in diagram.neighbors(walk[-1]) if b in vset and b not in walk
            )
            walk.append(nxt)
        walks.append(tuple(walk))
    return "A", size, min(walks)


def _component_key(kind: str, size: int, abstract_word: tuple[int, ...]) -> tuple:
    abstract = build_diagram(kind, size)
    best = None
    for auto in component_automorphisms(kind, size):
        relabelled = tuple(auto[letter - 1] for letter in abstract_word)
        cw = canonical_reduced_word(from_word(abstract, relabelled))
        if best is None or cw < best:
            best = cw
    return (kind, size, best)


@lru_cache(maxsize=None)
def dynkin_support(w: WeylElement) -> DecoratedSupport:
    """Components and per-component factors, from the canonical reduced word."""
    diagram = w.diagram
    letters = support_letters(w)
    remaining = set(letters)
    groups = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        frontier = [seed]
        while frontier:
            a = frontier.pop()
            for b in diagram.neighbors(a):
                if b in remaining and b not in comp:
                    comp.add(b)
                    frontier.append(b)
        remaining -= comp
        groups.append(sorted(comp))
    word = canonical_reduced_word(w)
    components = []
    for group in groups:
        kind, size, ordered = _component_vertex_order(diagram, group)
        index_of = {vertex: t + 1 for t, vertex in enumerate(ordered)}
        factor_word = tuple(letter for letter in word if letter in index_of)
        abstract_word = tuple(index_of[letter] for letter in factor_word)
        key = _component_key(kind, size, abstract_word)
        components.append(
            Component(kind, size, ordered, factor_word, abstract_word, key)
        )
    components.sort(key=lambda c: (c.key, c.vertices))
    return DecoratedSupport(diagram.family, tuple(components))


def _isomorphism_search(w: WeylElement, target: WeylElement, count_all: bool) -> int:
    """Count decorated support isomorphisms carrying w to target (stop at 1 if not count_all)."""
    sup_w = dynkin_support(w)
    sup_t = dynkin_support(target)
    if sorted((c.kind, c.size) for c in sup_w.components) != sorted(
        (c.kind, c.size) for c in sup_t.components
    ):
        return 0
    groups: dict[tuple[str, int], tuple[list, list]] = {}
    for c in sup_w.components:
        groups.setdefault((c.kind, c.size), ([], []))[0].append(c)
    for c in sup_t.components:
        groups.setdefault((c.kind, c.size), ([], []))[1].append(c)
    if any(len(a) != len(b) for a, b in groups.values()):
        return 0
    shapes = sorted(groups)
    matchings_per_shape = [
        [list(zip(groups[s][0], perm)) for perm in permutations(groups[s][1])]
        for s in shapes
    ]
    word = canonical_reduced_word(w)
    found = 0
    for matching_combo in product(*matchings_per_shape):
        pairs = [pair for shape_match in matching_combo for pair in shape_match]
        auto_choices = [component_automorphisms(cw.kind, cw.size) for cw, _ in pairs]
        for autos in product(*auto_choices):
            vertex_map = {}
            for (cw, ct), auto in zip(pairs, autos):
                for t, vertex in enumerate(cw.vertices, start=1):
                    vertex_map[vertex] = ct.vertices[auto[t - 1] - 1]
            image = from_word(target.diagram, tuple(vertex_map[x] for x in word))
            if image == target:
                found += 1
                if not count_all:
                    return found
    return found


def equivalent(w: WeylElement, other: WeylElement) -> bool:
    """True when a support isomorphism carries w to other (same family required)."""
    if w.diagram.family != other.diagram.family:
        raise ValueError("equivalence is defined within a single family")
    if w.length != other.length:
        return False
    return _isomorphism_search(w, other, count_all=False) > 0


def automorphism_count(w: WeylElement) -> int:
    """Number of decorated support automorphisms fixing w."""
    if w.is_identity:
        return 1
    return _isomorphism_search(w, w, count_all=True)


def transport(support: DecoratedSupport, embedding, ambient: DynkinDiagram) -> WeylElement:
    """Carry the factors of a support along an embedding into an ambient diagram."""
    word = []
    for component, image in zip(support.components, embedding):
        word.extend(image[t - 1] for t in component.abstract_word)
    return from_word(ambient, word)


@lru_cache(maxsize=None)
def canonical_class_rep(w: WeylElement) -> tuple[WeylElement, tuple]:
    """Equivalence-class representative in the rank-2k group, plus a stable key.

    The representative is the transported element whose canonical reduced
    word is lexicographically minimal over all embeddings of the support
    into the rank-2k diagram of the same family.
    """
    family = w.diagram.family
    k = w.length
    rank = max(2 * k, MIN_RANK[family])
    ambient = build_diagram(family, rank)
    support = dynkin_support(w)
    shapes = [c.abstract_diagram() for c in support.components]
    best_word = None
    best = None
    for embedding in enumerate_embeddings(shapes, ambient):
        candidate = transport(support, embedding, ambient)
        cw = canonical_reduced_word(candidate)
        if best_word is None or cw < best_word:
            best_word = cw
            best = candidate
    return best, (family, best_word)
