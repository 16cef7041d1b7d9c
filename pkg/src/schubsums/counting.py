"""Embedding enumeration and the class-counting polynomial.

An embedding of a support diagram into an ambient diagram is an injective
vertex map that preserves and reflects the full Cartan data: matching
entries within each component (including multiplicity and direction of the
B/C double edge) and zero entries between distinct components.  Embeddings
are enumerated as explicit vertex maps, so two orientations of the same
image count separately; this is what transporting factors requires.

The closed-form count for all-type-A supports into a path counts each
component placement once, without orientations; the two conventions differ
by a factor of 2 per component with a nontrivial flip, and the test suite
checks exactly that relation.
"""

from __future__ import annotations

from .polyring import UniPolyQ, interpolate
from .rootsys import MIN_RANK, DynkinDiagram, build_diagram
from .weyl import WeylElement


def _component_placements(shape: DynkinDiagram, ambient: DynkinDiagram) -> list[tuple[int, ...]]:
    """All vertex maps of one connected shape into the ambient diagram."""
    size = shape.rank
    out: list[tuple[int, ...]] = []

    def assign(image: list[int]):
        t = len(image)
        if t == size:
            out.append(tuple(image))
            return
        for cand in range(1, ambient.rank + 1):
            if cand in image:
                continue
            ok = True
            for s, placed in enumerate(image, start=1):
                if ambient.entry(placed, cand) != shape.entry(s, t + 1) or ambient.entry(
                    cand, placed
                ) != shape.entry(t + 1, s):
                    ok = False
                    break
            if ok:
                image.append(cand)
                assign(image)
                image.pop()

    assign([])
    return out


def enumerate_embeddings(shapes, ambient: DynkinDiagram) -> list[tuple[tuple[int, ...], ...]]:
    """All embeddings of a disjoint union of component shapes, as vertex maps.

    shapes is a sequence of DynkinDiagram components; the result is a list
    of per-component vertex tuples.  Images of distinct components must be
    disjoint and mutually non-adjacent.
    """
    placements = [_component_placements(shape, ambient) for shape in shapes]
    out: list[tuple[tuple[int, ...], ...]] = []

    def combine(idx: int, chosen: list[tuple[int, ...]], used: set[int]):
        if idx == len(placements):
            out.append(tuple(chosen))
            return
        for cand in placements[idx]:
            if any(v in used for v in cand):
                continue
            if any(
                ambient.adjacent(a, b) for a in cand for prev in chosen for b in prev
            ):
                continue
            chosen.append(cand)
            used.update(cand)
            combine(idx + 1, chosen, used)
            chosen.pop()
            used.difference_update(cand)

    combine(0, [], set())
    return out


def count_embeddings(shapes, ambient: DynkinDiagram) -> int:
    return len(enumerate_embeddings(shapes, ambient))


def type_a_embedding_count(sizes, k: int) -> int:
    """Closed-form count of component placements of A-type parts into A_k.

    Components are labelled but carry no orientation: the value is the
    falling factorial (k+1-k')...(k+2-k'-c) for k' total vertices in c
    components, and 0 when the components do not fit.
    """
    sizes = list(sizes)
    if any(s < 1 for s in sizes):
        raise ValueError("component sizes must be positive")
    kp = sum(sizes)
    c = len(sizes)
    if k + 1 - kp < c:
        return 0
    value = 1
    for i in range(c):
        value *= k + 1 - kp - i
    return value


def flip_orientation_factor(shapes) -> int:
    """Product of component diagram automorphism counts (the oriented/unoriented ratio)."""
    factor = 1
    for shape in shapes:
        if shape.family == "A":
            factor *= 1 if shape.rank == 1 else 2
        elif shape.family == "D":
            factor *= 6 if shape.rank == 4 else 2
    return factor


def n_w_count(w: WeylElement, n: int) -> int:
    """Number of elements of the rank-n group equivalent to w, by transport and dedupe."""
    from .support import automorphism_count, dynkin_support, transport

    family = w.diagram.family
    if n < MIN_RANK[family]:
        raise ValueError(f"rank {n} is not valid for family {family}")
    ambient = build_diagram(family, n)
    support = dynkin_support(w)
    shapes = [c.abstract_diagram() for c in support.components]
    embeddings = enumerate_embeddings(shapes, ambient)
    elements = {transport(support, embedding, ambient) for embedding in embeddings}
    # orbit-stabilizer consistency: every member is hit automorphism-many times
    assert len(embeddings) == len(elements) * automorphism_count(w)
    return len(elements)


_THRESHOLD_SHIFT = {"A": -1, "B": 0, "C": 0, "D": 1}


def n_w_threshold(w: WeylElement) -> int:
    """Rank from which the class count agrees with a polynomial."""
    from .support import dynkin_support

    return dynkin_support(w).n_vertices + _THRESHOLD_SHIFT[w.diagram.family]


def n_w_polynomial(w: WeylElement) -> UniPolyQ:
    """The eventual polynomial for the class count, by exact interpolation.

    Degree equals the number of support components; sampling starts at the
    threshold (clamped to the smallest constructible rank) with one more
    sample than the degree.
    """
    from .support import dynkin_support

    family = w.diagram.family
    support = dynkin_support(w)
    p = support.n_components
    threshold = n_w_threshold(w)
    start = max(threshold, MIN_RANK[family])
    samples = [(n, n_w_count(w, n)) for n in range(start, start + p + 1)]
    return interpolate(samples, threshold=threshold)


def parse_support_spec(spec: str) -> list[DynkinDiagram]:
    """Parse a CLI support description such as "A1+A2" or "B2+A1"."""
    shapes = []
    for chunk in spec.split("+"):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError(f"empty component in support spec {spec!r}")
        family, rank = chunk[0].upper(), chunk[1:]
        shapes.append(build_diagram(family, int(rank)))
    return shapes
