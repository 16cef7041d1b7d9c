"""Equivariant restrictions of Schubert classes at torus fixed points.

Two evaluation strategies are provided and must agree:

* restrict: a subword dynamic program over products of prefix-transported
  positive roots r(j) = (s_{b_1}...s_{b_{j-1}})(alpha_{b_j}).  States are
  keyed by the partial subword product, which merges the exponentially many
  subwords into Bruhat-interval-many states.
* restrict_direct: literal right-to-left composition of the operators
  "multiply by alpha_{b_i} after reflecting" / "reflect only" onto the
  constant 1, summed over reduced subwords.  Retained purely as an oracle.

Operator strings act on 1 at the right, so the rightmost operator applies
first; the A_3 worked example in the tests pins this convention.
"""

from __future__ import annotations

from functools import lru_cache

from .polyring import MultiPoly, apply_reflection
from .rootsys import is_positive
from .weyl import WeylElement, canonical_reduced_word, from_word, identity


def inversion_roots(w: WeylElement, word: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Prefix-transported roots r(j) for a reduced word of w; all positive."""
    _require_reduced(w, word)
    roots = []
    prefix = identity(w.diagram)
    for letter in word:
        r = prefix.root_image(letter)
        if not is_positive(r):
            raise ValueError(f"word {word} is not reduced for {w!r}")
        roots.append(r)
        prefix = prefix.times_simple(letter)
    return roots


def _require_reduced(w: WeylElement, word) -> None:
    if len(word) != w.length or from_word(w.diagram, word) != w:
        raise ValueError(f"word {tuple(word)} is not a reduced word for {w!r}")


def restrict_along(v: WeylElement, w: WeylElement, word: tuple[int, ...]) -> MultiPoly:
    """Subword DP evaluation of the restriction of v at w along a fixed word."""
    if v.diagram != w.diagram:
        raise ValueError("restriction requires elements over the same diagram")
    n = w.diagram.rank
    if v.length > w.length:
        return MultiPoly.zero(n)
    roots = inversion_roots(w, word)
    state = {identity(w.diagram): MultiPoly.one(n)}
    remaining = len(word)
    for letter, root in zip(word, roots):
        remaining -= 1
        root_poly = MultiPoly.from_linear(root)
        grown = {}
        for u, poly in state.items():
            # skip this position
            if u.length + remaining >= v.length:
                acc = grown.get(u)
                grown[u] = poly if acc is None else acc + poly
            # take this position if it extends a reduced subword
            us = u.times_simple(letter)
            if us.length > u.length and us.length <= v.length:
                contribution = poly * root_poly
                acc = grown.get(us)
                grown[us] = contribution if acc is None else acc + contribution
        state = grown
    return state.get(v, MultiPoly.zero(n))


@lru_cache(maxsize=None)
def restrict(v: WeylElement, w: WeylElement) -> MultiPoly:
    """The restriction polynomial of v at w; zero unless v <= w in Bruhat order."""
    return restrict_along(v, w, canonical_reduced_word(w))


def restrict_direct(v: WeylElement, w: WeylElement, word: tuple[int, ...]) -> MultiPoly:
    """Oracle evaluation by literal operator composition over reduced subwords."""
    if v.diagram != w.diagram:
        raise ValueError("restriction requires elements over the same diagram")
    _require_reduced(w, word)
    diagram = w.diagram
    n = diagram.rank
    total = MultiPoly.zero(n)
    for positions in _reduced_subwords(v, word):
        chosen = set(positions)
        poly = MultiPoly.one(n)
        for idx in range(len(word) - 1, -1, -1):
            letter = word[idx]
            poly = apply_reflection(diagram, letter, poly)
            if idx in chosen:
                poly = poly * MultiPoly.variable(n, letter)
        total = total + poly
    return total


def _reduced_subwords(v: WeylElement, word) -> list[tuple[int, ...]]:
    """Position tuples whose letters form a reduced word for v."""
    out = []

    def extend(idx, element, positions):
        if element == v and len(positions) == v.length:
            out.append(tuple(positions))
            return
        if idx == len(word) or len(positions) >= v.length:
            return
        extend(idx + 1, element, positions)
        bumped = element.times_simple(word[idx])
        if bumped.length > element.length:
            positions.append(idx)
            extend(idx + 1, bumped, positions)
            positions.pop()

    extend(0, identity(v.diagram), [])
    return out
