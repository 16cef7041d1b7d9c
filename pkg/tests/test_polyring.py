import random
from fractions import Fraction

import pytest

from schubsums.polyring import (
    ExactDivisionError,
    MultiPoly,
    UniPolyQ,
    apply_reflection,
    exact_divide,
    interpolate,
)
from schubsums.rootsys import build_diagram

A3 = build_diagram("A", 3)


def var(i, n=3):
    return MultiPoly.variable(n, i)


def random_poly(rng, nvars=2, nterms=4, maxdeg=2, maxcoeff=5):
    terms = {}
    for _ in range(nterms):
        e = tuple(rng.randint(0, maxdeg) for _ in range(nvars))
        terms[e] = rng.randint(-maxcoeff, maxcoeff)
    return MultiPoly(nvars, terms)


def test_zero_polynomial_is_empty_map():
    p = var(1) - var(1)
    assert not p
    assert p.terms == {}
    assert p.degree() == -1


def test_arithmetic_basics():
    p = (var(1) + var(2)) * (var(1) - var(2))
    assert p == var(1) * var(1) - var(2) * var(2)
    assert (p - p) == MultiPoly.zero(3)
    assert 2 * var(1) == var(1) + var(1)


def test_homogeneity_report():
    assert (var(1) * var(2)).is_homogeneous()
    assert not (var(1) + MultiPoly.one(3)).is_homogeneous()


def test_apply_reflection_examples():
    assert apply_reflection(A3, 1, var(2) + var(3)) == var(1) + var(2) + var(3)
    assert apply_reflection(A3, 1, MultiPoly.one(3)) == MultiPoly.one(3)
    assert apply_reflection(A3, 1, var(1)) == -var(1)


def test_apply_reflection_is_involution():
    rng = random.Random(7)
    for _ in range(25):
        p = MultiPoly(3, random_poly(rng, nvars=3).terms)
        for i in (1, 2, 3):
            assert apply_reflection(A3, i, apply_reflection(A3, i, p)) == p


def test_exact_divide_examples():
    p = var(1) * var(1) + var(1) * var(2)
    assert exact_divide(p, var(1)) == var(1) + var(2)
    assert exact_divide(MultiPoly.zero(3), var(1)) == MultiPoly.zero(3)
    q = (var(1) + var(2)) * (var(1) + var(2) + var(3))
    assert exact_divide(q, var(1) + var(2)) == var(1) + var(2) + var(3)


def test_exact_divide_roundtrip_random():
    rng = random.Random(11)
    for _ in range(40):
        p = random_poly(rng)
        q = random_poly(rng)
        if not q:
            continue
        assert exact_divide(p * q, q) == p


def test_exact_divide_failure_signalled():
    with pytest.raises(ExactDivisionError):
        exact_divide(var(1), var(2))
    with pytest.raises(ExactDivisionError):
        exact_divide(var(1), MultiPoly.constant(3, 2))
    with pytest.raises(ExactDivisionError):
        exact_divide(var(1), MultiPoly.zero(3))


def test_interpolate_examples():
    assert interpolate([(1, 2), (2, 4)]).coeffs == (Fraction(0), Fraction(2))
    assert interpolate([(0, 1), (1, 1), (2, 1)]).coeffs == (Fraction(1),)
    gamma2 = interpolate([(1, 0), (2, 10), (3, 24), (4, 42)])
    assert gamma2.coeffs == (Fraction(-6), Fraction(4), Fraction(2))


def test_interpolate_reproduces_samples():
    samples = [(0, Fraction(1, 2)), (1, 3), (2, 7), (5, -4)]
    poly = interpolate(samples)
    for x, y in samples:
        assert poly(x) == Fraction(y)


def test_interpolate_duplicate_points():
    with pytest.raises(ValueError):
        interpolate([(1, 1), (1, 2)])


def test_unipoly_integer_count_evaluation():
    half = UniPolyQ([Fraction(1), Fraction(-3, 2), Fraction(1, 2)], threshold=1)
    for n in range(1, 8):
        value = half.evaluate_count(n)
        assert value == (n - 1) * (n - 2) // 2
    with pytest.raises(ValueError):
        UniPolyQ([Fraction(1, 2)], threshold=0).evaluate_count(1)


def test_unipoly_json_roundtrip():
    poly = UniPolyQ([Fraction(-6), Fraction(4), Fraction(2)], threshold=1)
    assert UniPolyQ.from_json(poly.to_json()) == poly


def test_unipoly_leading_coefficient_trimmed():
    poly = UniPolyQ([1, 2, 0, 0])
    assert poly.degree == 1
    assert poly.lead_coefficient == 2


def test_multipoly_json_roundtrip():
    p = (var(1) + var(2)) * (var(1) + 2 * var(3)) - MultiPoly.constant(3, 7)
    assert MultiPoly.from_json_terms(3, p.to_json_terms()) == p
