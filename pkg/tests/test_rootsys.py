import pytest

from schubsums.rootsys import (
    build_diagram,
    is_positive,
    parse_diagram_name,
    positive_roots,
    reflect_root,
)


def alpha(diagram, i):
    return diagram.simple_root(i)


def test_a5_is_a_path():
    d = build_diagram("A", 5)
    for i in range(1, 6):
        for j in range(1, 6):
            if i == j:
                assert d.entry(i, j) == 2
            elif abs(i - j) == 1:
                assert d.entry(i, j) == -1
            else:
                assert d.entry(i, j) == 0


def test_a1_single_node():
    assert build_diagram("A", 1).cartan == ((2,),)


def test_d5_branch_node():
    d = build_diagram("D", 5)
    assert d.neighbors(3) == (2, 4, 5)
    assert d.neighbors(4) == (3,)
    assert d.neighbors(5) == (3,)


def test_b_c_multiple_edge_direction():
    b = build_diagram("B", 3)
    c = build_diagram("C", 3)
    assert b.entry(3, 2) == -2 and b.entry(2, 3) == -1
    assert c.entry(3, 2) == -1 and c.entry(2, 3) == -2


def test_d2_d3_degenerate_shapes():
    d2 = build_diagram("D", 2)
    assert d2.neighbors(1) == () and d2.neighbors(2) == ()
    d3 = build_diagram("D", 3)
    assert d3.neighbors(1) == (2, 3)


@pytest.mark.parametrize(
    "family,rank", [("A", 0), ("B", 1), ("C", 1), ("D", 1), ("E", 6)]
)
def test_invalid_diagrams_rejected(family, rank):
    with pytest.raises(ValueError):
        build_diagram(family, rank)


def test_parse_diagram_name():
    assert parse_diagram_name("A3").name == "A3"
    assert parse_diagram_name("d5").name == "D5"
    with pytest.raises(ValueError):
        parse_diagram_name("Q3")
    with pytest.raises(ValueError):
        parse_diagram_name("A")


def test_reflection_examples():
    d = build_diagram("A", 3)
    assert reflect_root(d, 1, alpha(d, 2)) == (1, 1, 0)
    assert reflect_root(d, 1, alpha(d, 1)) == (-1, 0, 0)
    assert reflect_root(d, 1, alpha(d, 3)) == (0, 0, 1)


def test_reflection_out_of_range():
    d = build_diagram("A", 2)
    with pytest.raises(ValueError):
        reflect_root(d, 3, alpha(d, 1))


def test_reflection_is_involution_and_closed():
    for name in ("A3", "B3", "C3", "D4"):
        d = parse_diagram_name(name)
        roots = positive_roots(d)
        for i in range(1, d.rank + 1):
            for r in roots:
                image = reflect_root(d, i, r)
                assert reflect_root(d, i, image) == r
                # image is again a root: sign-coherent and in the closure
                assert is_positive(image) or is_positive(tuple(-c for c in image))


def test_positive_root_counts():
    for n in range(1, 7):
        assert len(positive_roots(build_diagram("A", n))) == n * (n + 1) // 2
    for n in range(2, 7):
        assert len(positive_roots(build_diagram("B", n))) == n * n
        assert len(positive_roots(build_diagram("C", n))) == n * n
        assert len(positive_roots(build_diagram("D", n))) == n * (n - 1)


def test_b2_positive_roots_explicit():
    d = build_diagram("B", 2)
    assert set(positive_roots(d)) == {(1, 0), (0, 1), (1, 1), (1, 2)}


def test_a1_positive_roots():
    assert positive_roots(build_diagram("A", 1)) == ((1,),)
