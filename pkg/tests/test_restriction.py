import pytest

from schubsums.polyring import MultiPoly
from schubsums.restriction import (
    inversion_roots,
    restrict,
    restrict_along,
    restrict_direct,
)
from schubsums.rootsys import build_diagram, is_positive
from schubsums.weyl import (
    all_reduced_words,
    bruhat_leq,
    canonical_reduced_word,
    from_word,
    full_group,
    identity,
)

A1 = build_diagram("A", 1)
A2 = build_diagram("A", 2)
A3 = build_diagram("A", 3)


def var(i, n=3):
    return MultiPoly.variable(n, i)


def test_inversion_roots_examples():
    assert inversion_roots(from_word(A1, [1]), (1,)) == [(1,)]
    w = from_word(A2, [1, 2])
    assert inversion_roots(w, (1, 2)) == [(1, 0), (1, 1)]
    w0 = from_word(A2, [1, 2, 1])
    assert inversion_roots(w0, (1, 2, 1)) == [(1, 0), (1, 1), (0, 1)]


def test_inversion_roots_rejects_nonreduced():
    w = from_word(A2, [1])
    with pytest.raises(ValueError):
        inversion_roots(w, (1, 2))
    with pytest.raises(ValueError):
        inversion_roots(from_word(A2, [1, 2]), (2, 1))


def test_worked_example_both_strategies():
    v = from_word(A3, [1, 3])
    w = from_word(A3, [1, 2, 3, 1])
    expected = (var(1) + var(2)) * (var(1) + var(2) + var(3))
    assert restrict(v, w) == expected
    assert restrict_direct(v, w, (1, 2, 3, 1)) == expected


def test_worked_example_term_by_term():
    # the two reduced subwords contribute a1*(a1+a2+a3) and a2*(a1+a2+a3)
    w = from_word(A3, [1, 2, 3, 1])
    roots = inversion_roots(w, (1, 2, 3, 1))
    assert roots == [(1, 0, 0), (1, 1, 0), (1, 1, 1), (0, 1, 0)]
    term1 = MultiPoly.from_linear(roots[0]) * MultiPoly.from_linear(roots[2])
    term2 = MultiPoly.from_linear(roots[2]) * MultiPoly.from_linear(roots[3])
    assert term1 + term2 == restrict(from_word(A3, [1, 3]), w)


def test_identity_restrictions():
    w = from_word(A3, [1, 2, 3, 1])
    assert restrict(identity(A3), w) == MultiPoly.one(3)
    assert restrict_direct(identity(A3), w, (1, 2, 3, 1)) == MultiPoly.one(3)
    assert restrict(identity(A3), identity(A3)) == MultiPoly.one(3)


def test_simple_reflection_in_longest_element():
    w0 = from_word(A2, [1, 2, 1])
    assert restrict(from_word(A2, [1]), w0) == MultiPoly.variable(2, 1) + MultiPoly.variable(2, 2)


def test_diagram_mismatch():
    with pytest.raises(ValueError):
        restrict(from_word(A2, [1]), from_word(A3, [1]))


def test_strategies_agree_on_all_of_a3():
    group = full_group(A3)
    for v in group:
        for w in group:
            word = canonical_reduced_word(w)
            assert restrict(v, w) == restrict_direct(v, w, word)


def test_positivity_of_inversion_roots():
    for name in ("A3", "B3", "D4"):
        family, rank = name[0], int(name[1])
        diagram = build_diagram(family, rank)
        for w in full_group(diagram):
            for r in inversion_roots(w, canonical_reduced_word(w)):
                assert is_positive(r)


def test_support_vanishing_iff_not_leq():
    group = full_group(A3)
    for v in group:
        for w in group:
            assert bool(restrict(v, w)) == bruhat_leq(v, w)


def test_support_vanishing_sampled_b3():
    B3 = build_diagram("B", 3)
    w = from_word(B3, [3, 2, 3, 1])
    for v in full_group(B3):
        if v.length > 2:
            continue
        assert bool(restrict(v, w)) == bruhat_leq(v, w)


def test_word_independence():
    for w in full_group(A3):
        words = all_reduced_words(w)
        if len(words) < 2:
            continue
        reference = restrict_along(from_word(A3, [1]), w, words[0])
        for word in words[1:]:
            for v in full_group(A3):
                if v.length <= 2:
                    assert restrict_along(v, w, word) == restrict_along(v, w, words[0])
            break  # one alternative word per element keeps this quick


def test_diagonal_is_product_of_inversion_roots():
    for w in full_group(A3):
        word = canonical_reduced_word(w)
        expected = MultiPoly.one(3)
        for r in inversion_roots(w, word):
            expected = expected * MultiPoly.from_linear(r)
        diag = restrict(w, w)
        assert diag == expected
        assert diag.is_homogeneous()
        assert diag.degree() == w.length or w.is_identity


def test_homogeneity_of_restrictions():
    group = full_group(A3)
    for v in group:
        for w in group:
            poly = restrict(v, w)
            if poly:
                assert poly.is_homogeneous()
                assert poly.degree() == v.length


def test_parabolic_factorization_a1_a1():
    # w = s1 x s3 inside A3: restrictions factor over the two commuting parts
    w = from_word(A3, [1, 3])
    s1 = from_word(A3, [1])
    s3 = from_word(A3, [3])
    e = identity(A3)
    for vp, vpp in [(e, e), (s1, e), (e, s3), (s1, s3)]:
        v = from_word(A3, canonical_reduced_word(vp) + canonical_reduced_word(vpp))
        assert restrict(v, w) == restrict(vp, s1) * restrict(vpp, s3) or (
            restrict(v, w) == restrict(vp, from_word(A3, [1])) * restrict(vpp, s3)
        )
