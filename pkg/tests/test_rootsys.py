"""Root system and Weyl group tests.

The generation oracle is independent of the string-closure construction: the
full root set is the orbit of the simple roots under simple reflections.
"""
from __future__ import annotations

import random

import pytest

from qkseidel.rootsys import (
    build_root_system,
    descent_set,
    inversions,
    length,
    longest_element,
    root_is_positive,
    special_nodes,
    weyl_from_word,
)

DESK_TYPES = [
    ("A", 1), ("A", 2), ("A", 3), ("A", 4), ("A", 5),
    ("B", 2), ("B", 3), ("B", 4), ("B", 5),
    ("C", 2), ("C", 3), ("C", 4), ("C", 5),
    ("D", 3), ("D", 4), ("D", 5),
    ("G", 2), ("F", 4),
]


def positive_root_count(type_label: str, rank: int) -> int:
    if type_label == "E":
        return {6: 36, 7: 63, 8: 120}[rank]
    return {
        "A": rank * (rank + 1) // 2,
        "B": rank * rank,
        "C": rank * rank,
        "D": rank * (rank - 1),
        "F": 24,
        "G": 6,
    }[type_label]


def weyl_order(type_label: str, rank: int) -> int:
    import math

    return {
        "A": math.factorial(rank + 1),
        "B": 2 ** rank * math.factorial(rank),
        "C": 2 ** rank * math.factorial(rank),
        "D": 2 ** (rank - 1) * math.factorial(rank),
        "G": 12,
        "F": 1152,
    }[type_label]


def orbit_roots(rs) -> set:
    """Oracle: the root set as the reflection orbit of the simple roots."""
    frontier = [rs.simple_root(i) for i in rs.nodes]
    seen = set(frontier)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in rs.nodes:
                img = rs.simple_reflection(i).act_root(beta)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return {b for b in seen if root_is_positive(b)}


@pytest.mark.parametrize("type_label,rank", DESK_TYPES)
def test_positive_roots_match_reflection_orbit(type_label, rank):
    rs = build_root_system(type_label, rank)
    assert set(rs.positive_roots) == orbit_roots(rs)
    assert len(rs.positive_roots) == positive_root_count(type_label, rank)


def test_positive_root_counts_examples():
    assert len(build_root_system("A", 2).positive_roots) == 3
    assert len(build_root_system("D", 5).positive_roots) == 20  # n(n-1) for D_n
    assert len(build_root_system("C", 2).positive_roots) == 4


def test_highest_root_examples():
    assert build_root_system("C", 2).highest_root == (2, 1)
    assert build_root_system("B", 3).highest_root == (1, 2, 2)
    assert build_root_system("D", 5).highest_root == (1, 2, 2, 1, 1)
    assert build_root_system("G", 2).highest_root == (3, 2)
    assert build_root_system("F", 4).highest_root == (2, 3, 4, 2)
    assert build_root_system("A", 5).highest_root == (1, 1, 1, 1, 1)


@pytest.mark.parametrize("type_label,rank", DESK_TYPES)
def test_highest_root_dominates(type_label, rank):
    rs = build_root_system(type_label, rank)
    theta = rs.highest_root
    for beta in rs.positive_roots:
        assert all(b <= t for b, t in zip(beta, theta))
    # dominance on the coroot side as well
    assert all(rs.pair_coroot_root(j, theta) >= 0 for j in rs.nodes)


def test_invalid_type_rank_rejected():
    for bad in [("B", 1), ("C", 1), ("D", 2), ("E", 5), ("E", 9), ("F", 3), ("G", 3), ("H", 3)]:
        with pytest.raises(ValueError):
            build_root_system(*bad)


def test_weyl_group_orders():
    for type_label, rank in [("A", 2), ("A", 3), ("B", 3), ("C", 2), ("C", 3), ("D", 4), ("G", 2)]:
        rs = build_root_system(type_label, rank)
        assert len(rs.weyl_group()) == weyl_order(type_label, rank)


def all_reduced_words(w):
    """Every reduced word, by recursion on left descents."""
    if w.is_identity:
        return [()]
    rs = w.rs
    out = []
    for i in rs.nodes:
        si_w = rs.simple_reflection(i) * w
        if si_w.length() < w.length():
            out.extend((i,) + rest for rest in all_reduced_words(si_w))
    return out


@pytest.mark.parametrize("type_label,rank", [("A", 2), ("C", 2), ("A", 3)])
def test_reduced_word_is_lex_least_among_all(type_label, rank):
    rs = build_root_system(type_label, rank)
    for w in rs.weyl_group():
        words = all_reduced_words(w)
        assert all(len(word) == w.length() for word in words)
        assert min(words) == w.reduced_word()
        for word in words:
            assert weyl_from_word(rs, word) == w


@pytest.mark.parametrize("type_label,rank", DESK_TYPES)
def test_length_equals_inversion_count_random_words(type_label, rank):
    rng = random.Random(20260819)
    rs = build_root_system(type_label, rank)
    for _ in range(40):
        word = [rng.choice(rs.nodes) for _ in range(rng.randrange(13))]
        w = weyl_from_word(rs, word)
        assert length(w) == len(inversions(w)) <= len(word)
        assert weyl_from_word(rs, w.reduced_word()) == w
        assert length(w.inverse()) == length(w)


def test_descents_are_word_final_letters():
    rs = build_root_system("C", 3)
    rng = random.Random(7)
    for _ in range(30):
        w = weyl_from_word(rs, [rng.choice(rs.nodes) for _ in range(10)])
        for k in rs.nodes:
            shorter = length(w * rs.simple_reflection(k)) < length(w)
            assert (k in descent_set(w)) == shorter


def test_longest_elements():
    rs = build_root_system("A", 3)
    w0 = longest_element(rs)
    assert length(w0) == len(rs.positive_roots)
    assert w0 * w0 == rs.identity_weyl()
    # parabolic {1,3} in A3 is A1 x A1
    wj = longest_element(rs, [1, 3])
    assert wj == weyl_from_word(rs, [1, 3])
    assert longest_element(rs, []) == rs.identity_weyl()
    with pytest.raises(ValueError):
        longest_element(rs, [0, 1])


def check_inversion_identity(rs):
    """Inv(vw) = (Inv(w) \\ (-w^{-1}Inv(v))) + ((w^{-1}Inv(v)) \\ Inv(w)).

    All sets live inside the positive roots; the pieces are disjoint.
    """
    group = rs.weyl_group()
    for v in group:
        inv_v = set(v.inversions())
        for w in group:
            winv = w.inverse()
            inv_w = set(w.inversions())
            w_inv_v = {winv.act_root(beta) for beta in inv_v if root_is_positive(winv.act_root(beta))}
            neg_w_inv_v = {
                tuple(-c for c in winv.act_root(beta))
                for beta in inv_v
                if not root_is_positive(winv.act_root(beta))
            }
            first = inv_w - neg_w_inv_v
            second = w_inv_v - inv_w
            assert not (first & second)
            assert set((v * w).inversions()) == first | second


def test_inversion_identity_for_products():
    for type_label, rank in [("A", 2), ("C", 2), ("A", 3)]:
        check_inversion_identity(build_root_system(type_label, rank))


def test_coweight_action_respects_pairing():
    rng = random.Random(11)
    for type_label, rank in [("A", 3), ("B", 3), ("D", 4), ("G", 2)]:
        rs = build_root_system(type_label, rank)
        for _ in range(25):
            w = weyl_from_word(rs, [rng.choice(rs.nodes) for _ in range(8)])
            cw = tuple(rng.randrange(-3, 4) for _ in rs.nodes)
            beta = rng.choice(rs.positive_roots)
            assert rs.pairing(w.act_coweight(cw), w.act_root(beta)) == rs.pairing(cw, beta)


def test_coroot_table_against_pairings():
    """<beta^vee, gamma> computed from the table must match 2(beta,gamma)/(beta,beta).

    Verified indirectly: the reflection s_beta built from the table coroot must
    permute the roots and fix beta's orthogonal complement pairing-wise.
    """
    for type_label, rank in [("B", 3), ("C", 3), ("G", 2), ("F", 4), ("D", 4)]:
        rs = build_root_system(type_label, rank)
        roots = set(rs.positive_roots) | {tuple(-c for c in b) for b in rs.positive_roots}
        for beta in rs.positive_roots:
            covec = rs.coroot(beta)
            fc = rs.coroots_to_coweight(covec)
            assert rs.pairing(fc, beta) == 2
            for gamma in rs.positive_roots:
                img = tuple(
                    g - rs.pairing(fc, gamma) * b for g, b in zip(gamma, beta)
                )
                assert img in roots


def test_coweight_to_coroots_membership():
    rs = build_root_system("C", 2)
    # omega_1^vee = alpha_1^vee + alpha_2^vee lies in the coroot lattice
    assert rs.coweight_to_coroots((1, 0)) == (1, 1)
    # omega_2^vee does not; reported as non-membership, not an error
    assert rs.coweight_to_coroots((0, 1)) is None
    assert rs.coweight_to_coroots((0, 2)) == (1, 2)


def test_theta_coroot_examples():
    assert build_root_system("A", 2).highest_root_coroot == (1, 1)
    assert build_root_system("C", 2).highest_root_coroot == (1, 1)
    assert build_root_system("G", 2).highest_root_coroot == (1, 2)
    assert build_root_system("B", 3).highest_root_coroot == (1, 2, 1)


def test_special_nodes_by_type():
    assert special_nodes(build_root_system("A", 4)) == (1, 2, 3, 4)
    assert special_nodes(build_root_system("C", 2)) == (2,)
    assert special_nodes(build_root_system("C", 3)) == (3,)
    assert special_nodes(build_root_system("B", 3)) == (1,)
    assert special_nodes(build_root_system("D", 5)) == (1, 4, 5)
    assert special_nodes(build_root_system("D", 4)) == (1, 3, 4)
    assert special_nodes(build_root_system("G", 2)) == ()
    assert special_nodes(build_root_system("F", 4)) == ()


@pytest.mark.parametrize("type_label,rank", DESK_TYPES)
def test_special_iff_theta_coefficient_one(type_label, rank):
    rs = build_root_system(type_label, rank)
    for i in rs.nodes:
        assert (i in special_nodes(rs)) == (rs.highest_root[i - 1] == 1)
