"""Independent type-A oracle for ordinary structure constants.

Works in the coinvariant ring of the symmetric group S_m on x_1..x_m:
Schubert polynomial representatives are built by divided differences from
the staircase monomial, products are reduced modulo the symmetric-function
relations h_{m-j+1}(x_1..x_j) (whose leading terms x_j^{m-j+1} cut out the
sub-staircase monomial basis), and the result is expanded in the Schubert
basis by exact rational linear algebra.  Shares nothing with the GKM
triangular solve except raw polynomial arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from .polyring import MultiPoly, exact_divide


def inversions(perm: tuple[int, ...]) -> int:
    return sum(
        1
        for a in range(len(perm))
        for b in range(a + 1, len(perm))
        if perm[a] > perm[b]
    )


def code(perm: tuple[int, ...]) -> tuple[int, ...]:
    """Lehmer code: c_i = #{j > i : w(j) < w(i)}."""
    m = len(perm)
    return tuple(
        sum(1 for b in range(a + 1, m) if perm[b] < perm[a]) for a in range(m)
    )


def perm_from_code(c: tuple[int, ...]) -> tuple[int, ...]:
    values = list(range(1, len(c) + 1))
    out = []
    for ci in c:
        out.append(values.pop(ci))
    return tuple(out)


def _swap_vars(p: MultiPoly, i: int) -> MultiPoly:
    """Exchange x_i and x_{i+1} (1-based)."""
    terms = {}
    for e, coeff in p.terms.items():
        e2 = list(e)
        e2[i - 1], e2[i] = e2[i], e2[i - 1]
        terms[tuple(e2)] = coeff
    return MultiPoly(p.nvars, terms)


def divided_difference(p: MultiPoly, i: int) -> MultiPoly:
    """(p - s_i p) / (x_i - x_{i+1}); always an exact division."""
    numerator = p - _swap_vars(p, i)
    if not numerator:
        return MultiPoly.zero(p.nvars)
    denom = MultiPoly.variable(p.nvars, i) - MultiPoly.variable(p.nvars, i + 1)
    return exact_divide(numerator, denom)


@lru_cache(maxsize=None)
def schubert_polynomial(perm: tuple[int, ...]) -> MultiPoly:
    """Schubert polynomial of a permutation of 1..m, in m variables."""
    m = len(perm)
    longest = tuple(range(m, 0, -1))
    if perm == longest:
        e = tuple(m - a - 1 for a in range(m))
        return MultiPoly(m, {e: 1})
    ascent = next(a for a in range(1, m) if perm[a - 1] < perm[a])
    higher = list(perm)
    higher[ascent - 1], higher[ascent] = higher[ascent], higher[ascent - 1]
    return divided_difference(schubert_polynomial(tuple(higher)), ascent)


@lru_cache(maxsize=None)
def _complete_homogeneous(degree: int, nvars_used: int, nvars: int) -> MultiPoly:
    """h_degree(x_1..x_{nvars_used}) inside a ring with nvars variables."""
    terms = {}
    for combo in combinations_with_replacement(range(nvars_used), degree):
        e = [0] * nvars
        for j in combo:
            e[j] += 1
        terms[tuple(e)] = 1
    return MultiPoly(nvars, terms)


def reduce_coinvariant(p: MultiPoly) -> MultiPoly:
    """Reduce modulo (e_1..e_m) onto the sub-staircase basis x^a, a_j <= m-j.

    Rewrites any occurrence of x_j^{m-j+1} using the Groebner relation
    h_{m-j+1}(x_1..x_j); each step strictly lowers the offending monomial in
    the order with x_m > ... > x_1, so the loop terminates.
    """
    m = p.nvars
    current = p
    while True:
        offender = None
        for e in current.terms:
            for j in range(m, 0, -1):
                if e[j - 1] > m - j:
                    offender = (e, j)
                    break
            if offender:
                break
        if offender is None:
            return current
        e, j = offender
        coeff = current.terms[e]
        rest = list(e)
        rest[j - 1] -= m - j + 1
        correction = MultiPoly(m, {tuple(rest): coeff}) * _complete_homogeneous(m - j + 1, j, m)
        current = current - correction


def _permutations_of_length(m: int, d: int) -> list[tuple[int, ...]]:
    from itertools import permutations

    return [p for p in permutations(range(1, m + 1)) if inversions(p) == d]


@lru_cache(maxsize=None)
def _reduced_schubert(perm: tuple[int, ...]) -> MultiPoly:
    return reduce_coinvariant(schubert_polynomial(perm))


def schubert_expand(p: MultiPoly) -> dict[tuple[int, ...], int]:
    """Expand a polynomial in the Schubert basis of the coinvariant ring of S_m.

    The reduced Schubert representatives of each degree form a basis of that
    degree's graded piece, so the coefficients solve a square linear system;
    Gaussian elimination over exact rationals, integrality checked at the end.
    """
    m = p.nvars
    reduced = reduce_coinvariant(p)
    if not reduced:
        return {}
    if not reduced.is_homogeneous():
        raise ValueError("expected a homogeneous polynomial")
    d = reduced.degree()
    perms = _permutations_of_length(m, d)
    basis = [_reduced_schubert(perm) for perm in perms]
    monomials = sorted({e for q in basis for e in q.terms} | set(reduced.terms))
    rows = [
        [Fraction(q.terms.get(e, 0)) for q in basis] + [Fraction(reduced.terms.get(e, 0))]
        for e in monomials
    ]
    ncols = len(perms)
    pivot_row = 0
    pivots = []
    for col in range(ncols):
        pivot = next((r for r in range(pivot_row, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        lead = rows[pivot_row][col]
        rows[pivot_row] = [x / lead for x in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[pivot_row])]
        pivots.append(col)
        pivot_row += 1
    if any(all(x == 0 for x in row[:-1]) and row[-1] != 0 for row in rows):
        raise ValueError("inconsistent expansion: not in the Schubert span")
    solution = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        solution[col] = rows[r][-1]
    out = {}
    for perm, coeff in zip(perms, solution):
        if coeff:
            if coeff.denominator != 1:
                raise ValueError("non-integer Schubert coefficient")
            out[perm] = int(coeff)
    return out


def oracle_product_expansion(u: tuple[int, ...], v: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """All constants c_{u,v}^w for w in S_m, from the coinvariant sub ring."""
    product = schubert_polynomial(u) * schubert_polynomial(v)
    return schubert_expand(product)


def oracle_constant(u: tuple[int, ...], v: tuple[int, ...], w: tuple[int, ...]) -> int:
    """The ordinary constant for one-line permutations u, v, w of equal size."""
    if inversions(w) != inversions(u) + inversions(v):
        return 0
    return oracle_product_expansion(u, v).get(w, 0)
