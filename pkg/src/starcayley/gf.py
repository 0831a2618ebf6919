"""Small finite fields GF(p^m), their projective lines, and semilinear maps.

Field elements are encoded as integers 0 .. p^m - 1: the base-p digits of the
code, least significant first, are the coefficients of the polynomial residue.
For p = 2 this is the usual bitmask encoding.  All arithmetic is table-driven,
which keeps group construction fast for the field sizes this package needs
(q <= 1024).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

MAX_TABLE_Q = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _poly_rem(a: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    # mod is monic of degree len(mod)-1
    a = list(a)
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            for j in range(dm):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    return a[:dm] + [0] * max(0, dm - len(a))


def _is_irreducible(mod: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1 .. deg/2."""
    m = len(mod) - 1
    if m < 1 or mod[m] != 1:
        return False
    for deg in range(1, m // 2 + 1):
        for code in range(p ** deg):
            div = [(code // p ** i) % p for i in range(deg)] + [1]
            if all(c == 0 for c in _poly_rem(mod, div, p)):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """The monic irreducible of degree m with the smallest coefficient code."""
    if m == 1:
        return (0, 1)
    for code in range(p ** m):
        mod = tuple((code // p ** i) % p for i in range(m)) + (1,)
        if _is_irreducible(mod, p):
            return mod
    raise AssertionError(f"no irreducible of degree {m} over GF({p})")


class Field:
    """GF(p^m) with integer-coded elements and table-driven arithmetic.

    Immutable once built: the tables are filled in the constructor and only
    read afterwards.
    """

    def __init__(self, p: int, m: int, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        q = p ** m
        if q > MAX_TABLE_Q:
            raise ValueError(f"field size {q} exceeds the table budget {MAX_TABLE_Q}")
        if modulus is None:
            modulus = smallest_irreducible(p, m)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1 or modulus[m] != 1:
                raise ValueError(f"modulus must be monic of degree {m}")
            if not _is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.q = q
        self.modulus = modulus
        self._add = [[self._add_slow(x, y) for y in range(q)] for x in range(q)]
        self._mul = [[self._mul_slow(x, y) for y in range(q)] for x in range(q)]
        self._neg = [next(y for y in range(q) if self._add[x][y] == 0)
                     for x in range(q)]
        self._inv = [0] * q
        for x in range(1, q):
            self._inv[x] = next(y for y in range(1, q) if self._mul[x][y] == 1)
        self._frob = [self.pow(x, p) for x in range(q)]
        gen = self.primitive_element()
        if self.mult_order(gen) != q - 1:
            raise AssertionError("multiplicative group has wrong order")

    # slow digit arithmetic, used only to fill the tables
    def _digits(self, x: int) -> list[int]:
        return [(x // self.p ** i) % self.p for i in range(self.m)]

    def _code(self, digits: Sequence[int]) -> int:
        v = 0
        for d in reversed(list(digits)):
            v = v * self.p + d % self.p
        return v

    def _add_slow(self, x: int, y: int) -> int:
        return self._code([(a + b) % self.p
                           for a, b in zip(self._digits(x), self._digits(y))])

    def _mul_slow(self, x: int, y: int) -> int:
        prod = _poly_mul(self._digits(x), self._digits(y), self.p)
        return self._code(_poly_rem(prod, self.modulus, self.p))

    # public arithmetic
    def add(self, x: int, y: int) -> int:
        return self._add[x][y]

    def sub(self, x: int, y: int) -> int:
        return self._add[x][self._neg[y]]

    def neg(self, x: int) -> int:
        return self._neg[x]

    def mul(self, x: int, y: int) -> int:
        return self._mul[x][y]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._inv[x]

    def div(self, x: int, y: int) -> int:
        return self._mul[x][self.inv(y)]

    def pow(self, x: int, e: int) -> int:
        r = 1
        b = x
        while e:
            if e & 1:
                r = self._mul[r][b]
            b = self._mul[b][b]
            e >>= 1
        return r

    def frobenius(self, x: int, e: int = 1) -> int:
        """x -> x^(p^e)."""
        for _ in range(e % self.m):
            x = self._frob[x]
        return x

    def mult_order(self, x: int) -> int:
        if x == 0:
            raise ValueError("0 has no multiplicative order")
        o, y = 1, x
        while y != 1:
            y = self._mul[y][x]
            o += 1
        return o

    def primitive_element(self) -> int:
        if self.q == 2:
            return 1
        for g in range(2, self.q):
            if self.mult_order(g) == self.q - 1:
                return g
        raise AssertionError("no multiplicative generator found")

    def elements(self) -> range:
        return range(self.q)

    def element_name(self, x: int) -> str:
        """Readable polynomial form, e.g. 'z^2+z+1'."""
        if x == 0:
            return "0"
        terms = []
        for i in reversed(range(self.m)):
            c = (x // self.p ** i) % self.p
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                z = "z" if i == 1 else f"z^{i}"
                terms.append(z if c == 1 else f"{c}{z}")
        return "+".join(terms)

    def to_dict(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @classmethod
    def from_dict(cls, data: dict) -> "Field":
        return cls(data["p"], data["m"], data["modulus"])

    def __eq__(self, other) -> bool:
        return (isinstance(other, Field) and self.p == other.p
                and self.m == other.m and self.modulus == other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.q})"


# the two pinned binary fields come with fixed moduli so that every group
# built on them is byte-reproducible: z^3+z+1 and z^5+z^2+1
PINNED_MODULI = {
    (2, 3): (1, 1, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
}


@lru_cache(maxsize=None)
def field(p: int, m: int, modulus: tuple | None = None) -> Field:
    if modulus is None:
        modulus = PINNED_MODULI.get((p, m))
    return Field(p, m, modulus)


def field_of_order(q: int) -> Field:
    p, m = _factor_prime_power(q)
    return field(p, m)


def _factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            m = 0
            while q % p == 0:
                q //= p
                m += 1
            if q != 1:
                raise ValueError("not a prime power")
            return p, m
    raise ValueError("not a prime power")


# ---------------------------------------------------------------------------
# the projective line


@dataclass(frozen=True, order=True)
class ProjPoint:
    """A point of P^1(F): [x : 1] in canonical affine form, or [1 : 0]."""

    at_infinity: bool
    x: int = 0

    @classmethod
    def finite(cls, x: int) -> "ProjPoint":
        return cls(False, x)

    @classmethod
    def infinity(cls) -> "ProjPoint":
        return cls(True, 0)

    def __repr__(self) -> str:
        return "inf" if self.at_infinity else f"[{self.x}:1]"


def proj_line(f: Field) -> list[ProjPoint]:
    """The q+1 points of P^1(F) in their fixed order: finite points by
    ascending element code, then the point at infinity last."""
    return [ProjPoint.finite(x) for x in f.elements()] + [ProjPoint.infinity()]


@dataclass(frozen=True)
class SemilinearMap:
    """[x:y] -> [a x^s + b y^s : c x^s + d y^s] with s the frob_exp-th Frobenius power."""

    field: Field
    a: int
    b: int
    c: int
    d: int
    frob_exp: int = 0

    def __post_init__(self):
        f = self.field
        det = f.sub(f.mul(self.a, self.d), f.mul(self.b, self.c))
        if det == 0:
            raise ValueError("singular matrix")
        object.__setattr__(self, "frob_exp", self.frob_exp % f.m)

    def apply(self, point: ProjPoint) -> ProjPoint:
        f = self.field
        if point.at_infinity:
            if self.c == 0:
                return ProjPoint.infinity()
            return ProjPoint.finite(f.div(self.a, self.c))
        xs = f.frobenius(point.x, self.frob_exp)
        num = f.add(f.mul(self.a, xs), self.b)
        den = f.add(f.mul(self.c, xs), self.d)
        if den == 0:
            return ProjPoint.infinity()
        return ProjPoint.finite(f.div(num, den))

    def to_images(self) -> tuple[int, ...]:
        """The induced permutation of the projective line in one-line notation:
        point i (1-based in the proj_line order) maps to image i."""
        f = self.field
        q = f.q
        img = [0] * (q + 1)
        for x in range(q):
            p = self.apply(ProjPoint.finite(x))
            img[x] = q + 1 if p.at_infinity else p.x + 1
        p = self.apply(ProjPoint.infinity())
        img[q] = q + 1 if p.at_infinity else p.x + 1
        return tuple(img)
