import math

import pytest

from starcayley.perm import (CapExceeded, Flag, Lambda, Perm, PermGroup,
                             canonical_flag, closure, compose, flag_count,
                             flag_stabilizer, is_k_homogeneous,
                             is_k_transitive, is_sharply_k_transitive,
                             is_sharply_lambda_transitive, orbit_of_set,
                             orbit_of_tuple, tuple_stabilizer_is_trivial)
from starcayley.witness_groups import mathieu11, mathieu12, psl2


def test_perm_validation():
    with pytest.raises(ValueError):
        Perm([1, 1, 2])
    with pytest.raises(ValueError):
        Perm([2, 3, 4])
    assert Perm([2, 1, 3]).degree == 3


def test_identity_and_inverse():
    p = Perm.from_cycles(5, (1, 3, 4), (2, 5))
    assert (p * p.inverse()).is_identity()
    assert (p.inverse() * p).is_identity()
    assert compose(Perm.identity(5), p) == p
    assert compose(p, Perm.identity(5)) == p


def test_involution_composes_to_identity():
    t = Perm.from_cycles(2, (1, 2))
    assert compose(t, t).is_identity()


def test_compose_convention_fixed():
    # (p * q)(x) = p(q(x)): q first.  Hand evaluation of both orders pins
    # the convention: the 3-cycle after the transposition gives [3,2,1].
    p = Perm.from_cycles(3, (1, 2, 3))
    q = Perm.from_cycles(3, (1, 2))
    assert compose(p, q).to_list() == [3, 2, 1]
    assert compose(q, p).to_list() == [1, 3, 2]


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose(Perm.identity(3), Perm.identity(4))


def test_cycles_roundtrip():
    p = Perm.from_cycles(6, (1, 4), (2, 3, 5))
    assert Perm.from_cycles(6, *p.cycles()) == p
    assert p.order() == 6
    assert p.fixed_points() == frozenset({6})


def test_closure_s3():
    g = closure([Perm.from_cycles(3, (1, 2)), Perm.from_cycles(3, (1, 2, 3))])
    assert g.order == 6
    assert g.identity() in g


def test_closure_contains_inverses_and_products():
    g = closure([Perm.from_cycles(4, (1, 2, 3, 4)), Perm.from_cycles(4, (1, 2))])
    assert g.order == 24
    for a in g.elements:
        assert a.inverse() in g
    # spot-check products on a small slice
    for a in g.elements[:6]:
        for b in g.elements[:6]:
            assert a * b in g


def test_closure_cap():
    with pytest.raises(CapExceeded):
        closure([Perm.from_cycles(5, (1, 2)), Perm.from_cycles(5, (1, 2, 3, 4, 5))],
                cap=10)


def test_lagrange_on_small_groups():
    for gens, degree in [
        ([(1, 2)], 2),
        ([(1, 2), (1, 2, 3)], 3),
        ([(1, 2, 3, 4)], 4),
    ]:
        g = closure([Perm.from_cycles(degree, c) for c in gens])
        assert math.factorial(degree) % g.order == 0


def test_symmetric_on_subset():
    g = PermGroup.symmetric_on([2, 3, 4], 9)
    assert g.order == 6
    assert all(p.acts_within({2, 3, 4}) for p in g)


def test_orbits():
    gens = [Perm.from_cycles(4, (1, 2, 3, 4))]
    assert len(orbit_of_tuple(gens, (1,))) == 4
    assert len(orbit_of_set(gens, {1, 2})) == 4


def test_k_transitivity_symmetric_group():
    s3 = PermGroup.symmetric(3)
    assert is_k_transitive(s3, 3)
    assert is_sharply_k_transitive(s3, 3)


def test_k_transitivity_witnesses():
    # PSL(2,8) is 4-homogeneous but not 4-transitive on its 9 points;
    # M11 is sharply 4-transitive on 11.
    g = psl2(8)
    assert is_k_homogeneous(g, 4)
    assert not is_k_transitive(g, 4)
    m11 = mathieu11()
    assert is_k_transitive(m11, 4)
    assert is_sharply_k_transitive(m11, 4)
    assert tuple_stabilizer_is_trivial(m11, (1, 2, 3, 4))


def test_sharp_transitivity_order_mismatch():
    s4 = PermGroup.symmetric(4)
    assert is_k_transitive(s4, 2)
    assert not is_sharply_k_transitive(s4, 2)  # order 24 != P(4,2) = 12


def test_any_transitive_group_is_1_homogeneous():
    g = closure([Perm.from_cycles(5, (1, 2, 3, 4, 5))])
    assert is_k_homogeneous(g, 1)


def test_lambda_validation():
    with pytest.raises(ValueError):
        Lambda((0, 2))
    with pytest.raises(ValueError):
        Flag((frozenset({1, 2}), frozenset({2, 3})))
    assert Lambda((5, 3, 1)).total == 9


def test_flag_count():
    assert flag_count((5, 3, 1), 9) == math.factorial(9) // (
        math.factorial(5) * math.factorial(3))
    assert flag_count((2, 2), 4) == 6
    # ignored remainder: pick an ordered pair of singletons out of 4 points
    assert flag_count((1, 1), 4) == 12


def test_flag_stabilizer_trivial_when_blocks_are_singletons():
    s3 = PermGroup.symmetric(3)
    flag = Flag((frozenset({1}), frozenset({2}), frozenset({3})))
    assert flag_stabilizer(s3, flag).order == 1


def test_flag_stabilizer_s4_two_blocks():
    # Brute force over all 24 elements: exactly id, (1 2), (3 4), (1 2)(3 4)
    # map {1,2} onto itself and {3,4} onto itself.  (Allowing the blocks to
    # swap would give the order-8 partition stabilizer instead; an ordered
    # flag keeps each block in place.)
    s4 = PermGroup.symmetric(4)
    flag = Flag((frozenset({1, 2}), frozenset({3, 4})))
    stab = flag_stabilizer(s4, flag)
    assert stab.order == 4
    expected = {
        Perm.identity(4),
        Perm.from_cycles(4, (1, 2)),
        Perm.from_cycles(4, (3, 4)),
        Perm.from_cycles(4, (1, 2), (3, 4)),
    }
    assert set(stab.elements) == expected


def test_psl28_flag_stabilizer_trivial():
    flag = canonical_flag((5, 3, 1), 9)
    assert flag_stabilizer(psl2(8), flag).order == 1


def test_sharply_lambda_transitive_psl28():
    g = psl2(8)
    assert is_sharply_lambda_transitive(g, (5, 3, 1))
    assert is_sharply_lambda_transitive(g, Lambda((5, 3, 1)))
    # invariant under reordering the parts
    assert is_sharply_lambda_transitive(g, (3, 5, 1))
    assert is_sharply_lambda_transitive(g, (1, 3, 5))


def test_sharply_lambda_transitive_fallback_path():
    # order != tuple count forces the explicit-orbit fallback, which can
    # only answer False
    s4 = PermGroup.symmetric(4)
    assert not is_sharply_lambda_transitive(s4, (2, 2))


def test_sharp_implies_transitive_and_order():
    for g, k in [(mathieu11(), 4), (mathieu12(), 5)]:
        assert is_sharply_k_transitive(g, k)
        assert is_k_transitive(g, k)
        assert g.order == math.perm(g.degree, k)


def test_group_serialization_roundtrip():
    g = closure([Perm.from_cycles(4, (1, 2, 3)), Perm.from_cycles(4, (2, 3, 4))],
                name="A4")
    data = g.to_dict()
    assert data["degree"] == 4 and data["name"] == "A4"
    assert PermGroup.from_dict(data).order == g.order
