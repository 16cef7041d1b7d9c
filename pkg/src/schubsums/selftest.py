"""Built-in property suite at reduced desk scale, for `schubsums selftest`."""

from __future__ import annotations

from fractions import Fraction

from .coinvariant import oracle_constant
from .counting import n_w_count, n_w_polynomial, n_w_threshold
from .gamma import expected_lead, gamma_bruteforce, gamma_polynomial
from .polyring import MultiPoly, apply_reflection
from .restriction import inversion_roots, restrict, restrict_direct
from .rootsys import MIN_RANK, build_diagram, is_positive, positive_roots, reflect_root
from .schubert import equivariant_constant, inner_sum, ordinary_constant, solve_constants
from .support import canonical_class_rep, equivalent
from .weyl import (
    bruhat_leq,
    canonical_reduced_word,
    classical_order,
    element_to_permutation,
    from_word,
    full_group,
    length_sphere,
    lower_interval,
)


def _checks():
    a3 = build_diagram("A", 3)
    b3 = build_diagram("B", 3)

    def root_counts():
        expected = {("A", 3): 6, ("A", 4): 10, ("B", 3): 9, ("C", 3): 9, ("D", 4): 12}
        return all(
            len(positive_roots(build_diagram(f, r))) == n for (f, r), n in expected.items()
        )

    yield "positive root counts", root_counts

    def reflection_involution():
        for diagram in (a3, b3):
            for i in range(1, diagram.rank + 1):
                for r in positive_roots(diagram):
                    if reflect_root(diagram, i, reflect_root(diagram, i, r)) != r:
                        return False
        return True

    yield "reflection involution", reflection_involution

    def group_orders():
        for family, rank in (("A", 3), ("B", 3), ("C", 3), ("D", 4)):
            if len(full_group(build_diagram(family, rank))) != classical_order(family, rank):
                return False
        return True

    yield "group orders", group_orders

    def word_roundtrip():
        for w in full_group(b3):
            word = canonical_reduced_word(w)
            if len(word) != w.length or from_word(b3, word) != w:
                return False
        return True

    yield "canonical word round-trip", word_roundtrip

    def worked_example():
        v = from_word(a3, [1, 3])
        w = from_word(a3, [1, 2, 3, 1])
        expected = (
            MultiPoly.variable(3, 1) + MultiPoly.variable(3, 2)
        ) * (MultiPoly.variable(3, 1) + MultiPoly.variable(3, 2) + MultiPoly.variable(3, 3))
        if element_to_permutation(w) != (3, 2, 4, 1):
            return False
        return (
            restrict(v, w) == expected
            and restrict_direct(v, w, (1, 2, 3, 1)) == expected
        )

    yield "worked restriction example", worked_example

    def restriction_support():
        group = full_group(a3)
        for v in group:
            for w in group:
                if bool(restrict(v, w)) != bruhat_leq(v, w):
                    return False
        return True

    yield "restriction vanishing", restriction_support

    def strategies_agree():
        a2 = build_diagram("A", 2)
        group = full_group(a2)
        for v in group:
            for w in group:
                if restrict(v, w) != restrict_direct(v, w, canonical_reduced_word(w)):
                    return False
        return True

    yield "restriction strategies agree", strategies_agree

    def positivity():
        for w in full_group(b3):
            roots = inversion_roots(w, canonical_reduced_word(w))
            if not all(is_positive(r) for r in roots):
                return False
        return True

    yield "inversion root positivity", positivity

    def gkm_identity():
        top = from_word(a3, [1, 2, 1, 3, 2, 1])
        group = full_group(a3)
        for u in (from_word(a3, [1]), from_word(a3, [2, 1])):
            v = from_word(a3, [2])
            table = solve_constants(u, v, top)
            for x in group:
                lhs = restrict(u, x) * restrict(v, x)
                rhs = MultiPoly.zero(3)
                for y, cy in table.items():
                    if cy:
                        rhs = rhs + cy * restrict(y, x)
                if lhs != rhs:
                    return False
        return True

    yield "GKM defining identity (sample)", gkm_identity

    def oracle_agreement():
        group = full_group(a3)
        for u in group:
            for v in group:
                for w in group:
                    if u.length + v.length != w.length or w.length > 2:
                        continue
                    got = ordinary_constant(u, v, w)
                    want = oracle_constant(
                        element_to_permutation(u),
                        element_to_permutation(v),
                        element_to_permutation(w),
                    )
                    if got != want or got < 0:
                        return False
        return True

    yield "coinvariant oracle agreement (length <= 2)", oracle_agreement

    def embedding_stability():
        a2 = build_diagram("A", 2)
        a4 = build_diagram("A", 4)
        group = full_group(a2)
        shift = {1: 2, 2: 3}
        for u in group:
            for v in group:
                for w in group:
                    small = equivariant_constant(u, v, w)
                    big = equivariant_constant(
                        *(
                            from_word(a4, [shift[x] for x in canonical_reduced_word(y)])
                            for y in (u, v, w)
                        )
                    )
                    if small.rename_variables(4, shift) != big:
                        return False
        return True

    yield "embedding stability A2 -> A4", embedding_stability

    def power_of_two():
        for family in ("A", "B"):
            for k in (1, 2):
                rank = max(2 * k, MIN_RANK[family])
                diagram = build_diagram(family, rank)
                w = from_word(diagram, range(1, 2 * k, 2))
                if inner_sum(w) != 2**k:
                    return False
        return True

    yield "A_1^k inner sums", power_of_two

    def counting_polynomials():
        for family, word in (("A", [1, 3]), ("A", [1, 2]), ("B", [1, 2]), ("D", [1, 2])):
            rank = max(max(word) + 1, MIN_RANK[family])
            w = from_word(build_diagram(family, rank), word)
            poly = n_w_polynomial(w)
            start = max(n_w_threshold(w), MIN_RANK[family])
            for n in range(start, start + 4):
                if poly(n) != n_w_count(w, n):
                    return False
        return True

    yield "counting polynomial vs counts", counting_polynomials

    def class_reps():
        a5 = build_diagram("A", 5)
        w = from_word(a5, [2, 4])
        rep, key = canonical_class_rep(w)
        return (
            key == ("A", (1, 3))
            and equivalent(w, from_word(a5, [1, 3]))
            and rep.diagram.rank == 4
        )

    yield "canonical class representative", class_reps

    def gamma_matches():
        grid = {"A": (2, range(1, 5)), "B": (1, range(2, 5)), "D": (1, range(2, 5))}
        for family, (kmax, ns) in grid.items():
            for k in range(kmax + 1):
                result = gamma_polynomial(family, k)
                if (result.polynomial.degree, result.polynomial.lead_coefficient) != expected_lead(k):
                    return False
                for n in ns:
                    if n < result.threshold:
                        continue
                    if result.polynomial(n) != gamma_bruteforce(family, k, n):
                        return False
        return True

    yield "gamma polynomial vs oracle (reduced grid)", gamma_matches

    def reference_values():
        g1 = gamma_polynomial("A", 1).polynomial
        g2 = gamma_polynomial("A", 2).polynomial
        return (
            g1.coeffs == (Fraction(0), Fraction(2))
            and g2.coeffs == (Fraction(-6), Fraction(4), Fraction(2))
            and gamma_bruteforce("A", 2, 2) == 10
        )

    yield "derived reference values", reference_values

    def reflection_substitution():
        p = MultiPoly.variable(3, 2) + MultiPoly.variable(3, 3)
        q = apply_reflection(a3, 1, p)
        expected = (
            MultiPoly.variable(3, 1) + MultiPoly.variable(3, 2) + MultiPoly.variable(3, 3)
        )
        return q == expected and apply_reflection(a3, 1, q) == p

    yield "reflection substitution", reflection_substitution

    def interval_sizes():
        a2 = build_diagram("A", 2)
        return (
            len(lower_interval(from_word(a2, [1, 2]))) == 4
            and len(length_sphere(a2, 2)) == 2
        )

    yield "interval and sphere sizes", interval_sizes


def run_selftest() -> bool:
    ok = True
    for name, check in _checks():
        passed = check()
        print(f"{'ok  ' if passed else 'FAIL'} {name}")
        ok = ok and passed
    print("selftest:", "all checks passed" if ok else "FAILURES")
    return ok
