from itertools import product

import pytest

from schubsums.rootsys import build_diagram
from schubsums.weyl import (
    all_reduced_words,
    bruhat_leq,
    canonical_reduced_word,
    classical_order,
    element_to_permutation,
    from_word,
    full_group,
    identity,
    length_by_roots,
    length_sphere,
    lower_interval,
    lower_interval_from_word,
    permutation_to_element,
)

A2 = build_diagram("A", 2)
A3 = build_diagram("A", 3)
B2 = build_diagram("B", 2)
B3 = build_diagram("B", 3)


def bfs_word_length(diagram, target):
    """Oracle: minimal word length reaching target, by plain BFS over products."""
    frontier = {identity(diagram)}
    seen = set(frontier)
    depth = 0
    while target not in seen:
        depth += 1
        frontier = {
            w.times_simple(i)
            for w in frontier
            for i in range(1, diagram.rank + 1)
        } - seen
        seen |= frontier
    return depth


def dot_leq(p, q):
    """Ehresmann's criterion for Bruhat order on one-line permutations."""
    m = len(p)
    for i in range(1, m):
        a = sorted(p[:i], reverse=True)
        b = sorted(q[:i], reverse=True)
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


def test_from_word_examples():
    w = from_word(A3, [1, 2, 3, 1])
    assert w.length == 4
    assert element_to_permutation(w) == (3, 2, 4, 1)
    assert from_word(A3, []) == identity(A3)
    assert from_word(A3, [1, 1]) == identity(A3)


def test_from_word_rejects_bad_letters():
    with pytest.raises(ValueError):
        from_word(A3, [0])
    with pytest.raises(ValueError):
        from_word(A3, [4])


def test_length_matches_root_counting():
    for w in full_group(B3):
        assert w.length == length_by_roots(w)


def test_b2_longest_element():
    w = from_word(B2, [1, 2, 1, 2])
    assert w.length == 4
    assert bfs_word_length(B2, w) == 4
    assert len(full_group(B2)) == 8


def test_canonical_word_examples():
    assert canonical_reduced_word(identity(A3)) == ()
    assert canonical_reduced_word(from_word(A3, [2])) == (2,)
    w = from_word(A3, [1, 2, 3, 1])
    word = canonical_reduced_word(w)
    assert len(word) == 4
    assert from_word(A3, word) == w


def test_canonical_word_roundtrip_everywhere():
    for diagram in (A3, B3):
        for w in full_group(diagram):
            word = canonical_reduced_word(w)
            assert len(word) == w.length
            assert from_word(diagram, word) == w


def test_bruhat_examples():
    v = from_word(A3, [1, 3])
    w = from_word(A3, [1, 2, 3, 1])
    assert bruhat_leq(v, w)
    assert bruhat_leq(identity(A3), w)
    assert not bruhat_leq(from_word(A2, [2]), from_word(A2, [1]))


def test_bruhat_diagram_mismatch():
    with pytest.raises(ValueError):
        bruhat_leq(from_word(A2, [1]), from_word(A3, [1]))


def test_bruhat_matches_dot_criterion_on_a3():
    group = full_group(A3)
    for v in group:
        for w in group:
            expected = dot_leq(element_to_permutation(v), element_to_permutation(w))
            assert bruhat_leq(v, w) == expected


def test_bruhat_poset_axioms():
    for diagram in (A3, B3):
        group = full_group(diagram)
        leq = {(v, w): bruhat_leq(v, w) for v, w in product(group, repeat=2)}
        for v in group:
            assert leq[v, v]
        for v, w in product(group, repeat=2):
            if leq[v, w] and leq[w, v]:
                assert v == w
        for v, w, x in product(group, repeat=3):
            if leq[v, w] and leq[w, x]:
                assert leq[v, x]


def test_interval_independent_of_seed_word():
    for w in full_group(A3):
        reference = lower_interval(w)
        for word in all_reduced_words(w):
            assert lower_interval_from_word(w, word) == reference


def test_lower_interval_examples():
    assert lower_interval(identity(A3)) == frozenset({identity(A3)})
    a1 = build_diagram("A", 1)
    assert len(lower_interval(from_word(a1, [1]))) == 2
    interval = lower_interval(from_word(A2, [1, 2]))
    assert interval == {
        identity(A2),
        from_word(A2, [1]),
        from_word(A2, [2]),
        from_word(A2, [1, 2]),
    }


def test_length_sphere_examples():
    assert length_sphere(A3, 0) == frozenset({identity(A3)})
    assert len(length_sphere(A3, 1)) == 3
    assert length_sphere(A2, 2) == {from_word(A2, [1, 2]), from_word(A2, [2, 1])}


def test_sphere_sizes_sum_to_group_order():
    cases = [("A", r) for r in range(1, 5)]
    cases += [(f, r) for f in ("B", "C", "D") for r in range(2, 5)]
    for family, rank in cases:
        diagram = build_diagram(family, rank)
        assert len(full_group(diagram)) == classical_order(family, rank)


def test_one_line_permutation_roundtrip():
    for w in full_group(A3):
        assert permutation_to_element(A3, element_to_permutation(w)) == w
    with pytest.raises(ValueError):
        permutation_to_element(A3, (1, 1, 2, 3))


def test_all_reduced_words_are_reduced():
    w = from_word(A3, [1, 2, 1])
    words = set(all_reduced_words(w))
    assert words == {(1, 2, 1), (2, 1, 2)}
