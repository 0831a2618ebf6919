"""The explicit witness permutation groups: affine and projective (semi)linear
groups over small fields, affine groups over GF(2)^d, and the two sharply
transitive Mathieu groups.

Every constructor returns a fully enumerated :class:`~starcayley.perm.PermGroup`
acting on 1-based points.  Projective groups act on the q+1 points of the
projective line in the fixed order of :func:`starcayley.gf.proj_line`
(finite points by element code, infinity last); affine groups over GF(q) act
on the q finite points in the same order.

Constructors are cached: groups are immutable, so sharing is safe.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .gf import Field, SemilinearMap, field_of_order
from .perm import Perm, PermGroup, closure, is_sharply_k_transitive


def _perm_of(field: Field, a, b, c, d, frob_exp=0) -> Perm:
    return Perm(SemilinearMap(field, a, b, c, d, frob_exp).to_images())


def _affine_perm(field: Field, a: int, b: int, frob_exp: int = 0) -> Perm:
    """x -> a x^s + b on the q finite points only."""
    img = []
    for x in field.elements():
        xs = field.frobenius(x, frob_exp)
        img.append(field.add(field.mul(a, xs), b) + 1)
    return Perm(img)


def pgl_order(q: int) -> int:
    return (q + 1) * q * (q - 1)


def psl_order(q: int) -> int:
    return pgl_order(q) // math.gcd(2, q - 1)


def pgammal_order(q: int) -> int:
    return pgl_order(q) * field_of_order(q).m


def agl1_order(q: int) -> int:
    return q * (q - 1)


def agammal1_order(q: int) -> int:
    return agl1_order(q) * field_of_order(q).m


def agl_d2_order(d: int) -> int:
    n = 1 << d
    order = n
    for i in range(d):
        order *= n - (1 << i)
    return order


@lru_cache(maxsize=None)
def pgl2(q: int) -> PermGroup:
    """PGL(2,q) acting on the q+1 points of the projective line."""
    f = field_of_order(q)
    g = f.primitive_element()
    gens = [_perm_of(f, 1, 1, 0, 1),   # x -> x + 1
            _perm_of(f, g, 0, 0, 1),   # x -> g x
            _perm_of(f, 0, 1, 1, 0)]   # x -> 1/x
    group = closure(gens, name=f"PGL(2,{q})")
    assert group.order == pgl_order(q), group.order
    return group


@lru_cache(maxsize=None)
def psl2(q: int) -> PermGroup:
    """PSL(2,q) on the projective line.

    For even q the determinant-1 action coincides with PGL(2,q); only odd q
    gives the index-2 subgroup.  Generated by x -> x+1, x -> g^2 x and
    x -> -1/x, all of determinant 1.
    """
    f = field_of_order(q)
    if f.p == 2:
        group = pgl2(q)
        return PermGroup(group.degree, group.generators, group.elements,
                         name=f"PSL(2,{q})")
    g = f.primitive_element()
    gens = [_perm_of(f, 1, 1, 0, 1),
            _perm_of(f, f.mul(g, g), 0, 0, 1),
            _perm_of(f, 0, f.neg(1), 1, 0)]
    group = closure(gens, name=f"PSL(2,{q})")
    assert group.order == psl_order(q), group.order
    return group


@lru_cache(maxsize=None)
def pgammal2(q: int) -> PermGroup:
    """PGammaL(2,q): PGL(2,q) extended by the Frobenius x -> x^p."""
    f = field_of_order(q)
    gens = list(pgl2(q).generators)
    if f.m > 1:
        gens.append(_perm_of(f, 1, 0, 0, 1, frob_exp=1))
    group = closure(gens, name=f"PGammaL(2,{q})")
    assert group.order == pgammal_order(q), group.order
    return group


@lru_cache(maxsize=None)
def agl1(q: int) -> PermGroup:
    """AGL(1,q): the maps x -> a x + b (a nonzero) on the q field points."""
    f = field_of_order(q)
    g = f.primitive_element()
    gens = [_affine_perm(f, 1, 1), _affine_perm(f, g, 0)]
    group = closure(gens, name=f"AGL(1,{q})")
    assert group.order == agl1_order(q), group.order
    return group


@lru_cache(maxsize=None)
def agammal1(q: int) -> PermGroup:
    """AGammaL(1,q): AGL(1,q) extended by the Frobenius."""
    f = field_of_order(q)
    gens = list(agl1(q).generators)
    if f.m > 1:
        gens.append(_affine_perm(f, 1, 0, frob_exp=1))
    group = closure(gens, name=f"AGammaL(1,{q})")
    assert group.order == agammal1_order(q), group.order
    return group


@lru_cache(maxsize=None)
def agl(d: int) -> PermGroup:
    """AGL(d,2): affine maps v -> Av + b of GF(2)^d.

    Points are indexed 1 .. 2^d by the binary code of the vector plus one.
    Generated by the translation by e0, the cyclic coordinate shift, and one
    transvection (e1 -> e0 + e1); the order assertion certifies that these
    really generate the full group.
    """
    if d < 1:
        raise ValueError("need d >= 1")
    size = 1 << d

    def as_perm(f) -> Perm:
        return Perm(tuple(f(x) + 1 for x in range(size)))

    gens = [as_perm(lambda x: x ^ 1)]
    if d > 1:
        mask = size - 1
        gens.append(as_perm(lambda x: ((x << 1) | (x >> (d - 1))) & mask))
        gens.append(as_perm(lambda x: x ^ ((x >> 1) & 1)))
    group = closure(gens, name=f"AGL({d},2)")
    assert group.order == agl_d2_order(d), group.order
    return group


# ---------------------------------------------------------------------------
# Mathieu groups from embedded generator data.  The literals themselves are
# not trusted: each constructor certifies the order and the sharp 4-/5-
# transitivity before returning, so any corruption fails loudly at build time.

_M11_GENERATORS = (
    ((1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11),),
    ((3, 7, 11, 8), (4, 10, 5, 6)),
)

_M12_EXTRA_GENERATOR = ((1, 12), (2, 11), (3, 6), (4, 8), (5, 9), (7, 10))


@lru_cache(maxsize=None)
def mathieu11() -> PermGroup:
    """The sharply 4-transitive Mathieu group on 11 points, order 7920."""
    gens = [Perm.from_cycles(11, *cycs) for cycs in _M11_GENERATORS]
    group = closure(gens, name="M11")
    if group.order != 7920 or not is_sharply_k_transitive(group, 4):
        raise AssertionError("embedded M11 generator data failed verification")
    return group


@lru_cache(maxsize=None)
def mathieu12() -> PermGroup:
    """The sharply 5-transitive Mathieu group on 12 points, order 95040."""
    gens = [Perm.from_cycles(12, *cycs) for cycs in _M11_GENERATORS]
    gens.append(Perm.from_cycles(12, *_M12_EXTRA_GENERATOR))
    group = closure(gens, name="M12")
    if group.order != 95040 or not is_sharply_k_transitive(group, 5):
        raise AssertionError("embedded M12 generator data failed verification")
    return group
