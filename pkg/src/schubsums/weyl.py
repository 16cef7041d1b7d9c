"""Weyl group elements, Coxeter length, reduced words, and Bruhat order.

Elements are stored as integer matrices acting on the simple-root basis, one
uniform faithful representation for all four classical families.  The product
convention: from_word([a, b]) is the element applying s_b to roots first and
s_a second, i.e. the matrix product M_a * M_b acting on coordinate columns.
For type A this makes from_word(A3, [1, 2, 3, 1]) the permutation 3241 in
one-line notation, which pins the convention against the worked restriction
example in the test suite.
"""

from __future__ import annotations

from functools import lru_cache

from .rootsys import DynkinDiagram, build_diagram, positive_roots


class WeylElement:
    """A group element; hashable, immutable, compared by matrix and diagram."""

    __slots__ = ("diagram", "matrix", "length")

    def __init__(self, diagram: DynkinDiagram, matrix: tuple[tuple[int, ...], ...], length: int):
        self.diagram = diagram
        self.matrix = matrix
        self.length = length

    def __eq__(self, other):
        return (
            isinstance(other, WeylElement)
            and self.matrix == other.matrix
            and self.diagram == other.diagram
        )

    def __hash__(self):
        return hash((self.diagram.family, self.diagram.rank, self.matrix))

    def __repr__(self):
        word = ",".join(map(str, canonical_reduced_word(self))) or "e"
        return f"<{self.diagram.name}:{word}>"

    @property
    def is_identity(self) -> bool:
        return self.length == 0

    def apply(self, root: tuple[int, ...]) -> tuple[int, ...]:
        """Image of a root coordinate vector under this element."""
        return tuple(
            sum(row[c] * root[c] for c in range(len(root))) for row in self.matrix
        )

    def root_image(self, i: int) -> tuple[int, ...]:
        """Image of the simple root alpha_i (column i of the matrix)."""
        return tuple(row[i - 1] for row in self.matrix)

    def times_simple(self, i: int) -> "WeylElement":
        """Right multiplication by s_i, with incremental length update."""
        cartan_row = self.diagram.cartan[i - 1]
        col = self.root_image(i)
        new_matrix = tuple(
            tuple(row[j] - cartan_row[j] * row[i - 1] for j in range(len(row)))
            for row in self.matrix
        )
        going_up = all(c >= 0 for c in col)
        return WeylElement(self.diagram, new_matrix, self.length + (1 if going_up else -1))

    def right_descents(self) -> tuple[int, ...]:
        """Indices i with length(w * s_i) < length(w), i.e. w(alpha_i) < 0."""
        out = []
        for i in range(1, self.diagram.rank + 1):
            if all(c <= 0 for c in self.root_image(i)):
                out.append(i)
        return tuple(out)

    def inverse(self) -> "WeylElement":
        word = canonical_reduced_word(self)
        return from_word(self.diagram, tuple(reversed(word)))


def identity(diagram: DynkinDiagram) -> WeylElement:
    n = diagram.rank
    matrix = tuple(tuple(1 if r == c else 0 for c in range(n)) for r in range(n))
    return WeylElement(diagram, matrix, 0)


def from_word(diagram: DynkinDiagram, word) -> WeylElement:
    """Product s_{word[0]} * s_{word[1]} * ... (rightmost letter acts first)."""
    w = identity(diagram)
    for letter in word:
        if not 1 <= letter <= diagram.rank:
            raise ValueError(f"letter {letter} out of range for {diagram.name}")
        w = w.times_simple(letter)
    return w


def length_by_roots(w: WeylElement) -> int:
    """Count of positive roots sent negative; the definition of Coxeter length."""
    count = 0
    for r in positive_roots(w.diagram):
        image = w.apply(r)
        if all(c <= 0 for c in image):
            count += 1
    return count


@lru_cache(maxsize=None)
def canonical_reduced_word(w: WeylElement) -> tuple[int, ...]:
    """Deterministic reduced word: peel the smallest right descent, then reverse."""
    collected = []
    cur = w
    while cur.length > 0:
        i = cur.right_descents()[0]
        collected.append(i)
        cur = cur.times_simple(i)
    collected.reverse()
    return tuple(collected)


def all_reduced_words(w: WeylElement) -> tuple[tuple[int, ...], ...]:
    """Every reduced word of w.  Exponential; intended for small-rank checks."""
    if w.length == 0:
        return ((),)
    out = []
    for i in w.right_descents():
        for prefix in all_reduced_words(w.times_simple(i)):
            out.append(prefix + (i,))
    return tuple(out)


def support_letters(w: WeylElement) -> tuple[int, ...]:
    """Simple reflections occurring in any reduced word of w, sorted."""
    return tuple(sorted(set(canonical_reduced_word(w))))


def sort_key(w: WeylElement):
    return (w.length, canonical_reduced_word(w))


@lru_cache(maxsize=None)
def lower_interval(w: WeylElement) -> frozenset[WeylElement]:
    """The lower Bruhat interval {y : y <= w}, via the subword-property DP."""
    elements = {identity(w.diagram)}
    for letter in canonical_reduced_word(w):
        grown = set(elements)
        for u in elements:
            us = u.times_simple(letter)
            if us.length > u.length:
                grown.add(us)
        elements = grown
    return frozenset(elements)


def bruhat_leq(v: WeylElement, w: WeylElement) -> bool:
    if v.diagram != w.diagram:
        raise ValueError("Bruhat comparison across different diagrams")
    if v.length > w.length:
        return False
    if v.length == w.length:
        return v == w
    return v in lower_interval(w)


def lower_interval_from_word(w: WeylElement, word: tuple[int, ...]) -> frozenset[WeylElement]:
    """Same DP seeded with an arbitrary reduced word of w (for word-independence checks)."""
    elements = {identity(w.diagram)}
    for letter in word:
        grown = set(elements)
        for u in elements:
            us = u.times_simple(letter)
            if us.length > u.length:
                grown.add(us)
        elements = grown
    return frozenset(elements)


@lru_cache(maxsize=None)
def length_sphere(diagram: DynkinDiagram, k: int) -> frozenset[WeylElement]:
    """All elements of length exactly k, by BFS with length-increase pruning."""
    if k < 0:
        raise ValueError("length must be nonnegative")
    if k == 0:
        return frozenset({identity(diagram)})
    out = set()
    for w in length_sphere(diagram, k - 1):
        for i in range(1, diagram.rank + 1):
            ws = w.times_simple(i)
            if ws.length > w.length:
                out.add(ws)
    return frozenset(out)


def full_group(diagram: DynkinDiagram) -> tuple[WeylElement, ...]:
    """Every element, in (length, canonical word) order.  Small ranks only."""
    out = []
    k = 0
    while True:
        sphere = length_sphere(diagram, k)
        if not sphere:
            break
        out.extend(sorted(sphere, key=sort_key))
        k += 1
    return tuple(out)


def classical_order(family: str, rank: int) -> int:
    """|W| for the classical families."""
    import math

    if family == "A":
        return math.factorial(rank + 1)
    if family in ("B", "C"):
        return 2**rank * math.factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * math.factorial(rank)
    raise ValueError(family)


def element_to_permutation(w: WeylElement) -> tuple[int, ...]:
    """One-line notation on 1..rank+1 for type A elements."""
    if w.diagram.family != "A":
        raise ValueError("one-line notation is defined for type A only")
    n = w.diagram.rank + 1
    perm = list(range(1, n + 1))
    # rightmost letter of the word acts first: compose value swaps right-to-left
    for letter in reversed(canonical_reduced_word(w)):
        perm = [letter + 1 if v == letter else letter if v == letter + 1 else v for v in perm]
    return tuple(perm)


def permutation_to_element(diagram: DynkinDiagram, oneline) -> WeylElement:
    """Inverse of element_to_permutation: build the element from one-line notation."""
    if diagram.family != "A":
        raise ValueError("one-line notation is defined for type A only")
    n = diagram.rank + 1
    if sorted(oneline) != list(range(1, n + 1)):
        raise ValueError(f"{oneline} is not a permutation of 1..{n}")
    p = list(oneline)
    collected = []
    while True:
        descent = next((i for i in range(1, n) if p[i - 1] > p[i]), None)
        if descent is None:
            break
        collected.append(descent)
        p[descent - 1], p[descent] = p[descent], p[descent - 1]
    collected.reverse()
    return from_word(diagram, collected)
