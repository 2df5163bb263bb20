"""Exact arithmetic in GF(p^k) and linear algebra over it.

Elements are integers 0..q-1 read as base-p coefficient vectors: the
integer sum(c_i * p**i) stands for the polynomial sum(c_i * x**i).
Arithmetic is reduced by the monic irreducible degree-k polynomial whose
non-leading coefficient vector has the smallest base-p integer encoding;
the ascending deterministic search makes element encodings reproducible
across runs.  Field orders are capped at 2**16, which is far beyond what
the constructions here need.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import DaisyError

ORDER_CAP = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def is_prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, k) with q = p**k and p prime, or None."""
    if q < 2:
        return None
    p = 2
    while p * p <= q:
        if q % p == 0:
            k = 0
            m = q
            while m % p == 0:
                m //= p
                k += 1
            return (p, k) if m == 1 else None
        p += 1
    return (q, 1)  # q itself is prime


# --- polynomial helpers over GF(p), coefficient tuples, index i = coeff of x^i ---

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    # b must be nonzero
    a = list(a)
    db, lead = len(b) - 1, b[-1]
    inv_lead = pow(lead, p - 2, p)
    quot = [0] * max(0, len(a) - db)
    while len(a) - 1 >= db and _poly_trim(a):
        da = len(a) - 1
        coef = (a[-1] * inv_lead) % p
        quot[da - db] = coef
        for i in range(db + 1):
            a[da - db + i] = (a[da - db + i] - coef * b[i]) % p
        _poly_trim(a)
    return quot, a


def _int_to_poly(m: int, p: int) -> list[int]:
    digits = []
    while m:
        m, d = divmod(m, p)
        digits.append(d)
    return digits


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg//2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for low in range(p ** d):
            divisor = _int_to_poly(low, p) + [0] * (d - len(_int_to_poly(low, p)))
            divisor = divisor[:d] + [1]
            _, rem = _poly_divmod(list(poly), divisor, p)
            if not rem:
                return False
    return True


@lru_cache(maxsize=None)
def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    if k == 1:
        return (0, 1)  # x itself; reduction mod x is arithmetic mod p
    for low in range(p ** k):
        coeffs = _int_to_poly(low, p)
        coeffs += [0] * (k - len(coeffs))
        cand = tuple(coeffs[:k]) + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise DaisyError(f"no irreducible polynomial of degree {k} over GF({p})")  # unreachable


class FiniteField:
    """GF(p^k) with integer-coded elements 0..q-1.

    Immutable after construction; all operations are pure, so instances
    are safe to share across threads.
    """

    __slots__ = ("p", "k", "q", "modulus", "_mul_table", "_inv_table")

    def __init__(self, p: int, k: int):
        if not is_prime(p):
            raise DaisyError(f"characteristic {p} is not prime")
        if k < 1:
            raise DaisyError(f"extension degree must be positive, got {k}")
        q = p ** k
        if q > ORDER_CAP:
            raise DaisyError(f"field order {q} exceeds cap {ORDER_CAP}")
        self.p = p
        self.k = k
        self.q = q
        self.modulus = _smallest_irreducible(p, k)
        if q <= 256:
            mul = [[0] * q for _ in range(q)]
            for a in range(q):
                for b in range(a, q):
                    v = self._mul_raw(a, b)
                    mul[a][b] = v
                    mul[b][a] = v
            self._mul_table = mul
            inv = [0] * q
            for a in range(1, q):
                inv[a] = self._pow_raw(a, q - 2)
            self._inv_table = inv
        else:
            self._mul_table = None
            self._inv_table = None

    def __repr__(self):
        return f"FiniteField(p={self.p}, k={self.k})"

    def _check(self, a: int):
        if not 0 <= a < self.q:
            raise DaisyError(f"element code {a} out of range for GF({self.q})")

    def digits(self, a: int) -> tuple[int, ...]:
        """Base-p coefficient vector of an element, length k."""
        self._check(a)
        out = []
        for _ in range(self.k):
            a, d = divmod(a, self.p)
            out.append(d)
        return tuple(out)

    def add(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if self.k == 1:
            return (a + b) % self.p
        p, out, mult = self.p, 0, 1
        for _ in range(self.k):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if self.k == 1:
            return (a - b) % self.p
        p, out, mult = self.p, 0, 1
        for _ in range(self.k):
            out += ((a - b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    def _mul_raw(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        if k == 1:
            return (a * b) % p
        da = self.digits(a)
        db = self.digits(b)
        conv = [0] * (2 * k - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    conv[i + j] = (conv[i + j] + ai * bj) % p
        # reduce by the monic modulus: x^k = -(low-order part)
        mod_low = self.modulus[:-1]
        for i in range(2 * k - 2, k - 1, -1):
            c = conv[i]
            if c:
                conv[i] = 0
                for j, mj in enumerate(mod_low):
                    conv[i - k + j] = (conv[i - k + j] - c * mj) % p
        out, mult = 0, 1
        for i in range(k):
            out += conv[i] * mult
            mult *= p
        return out

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            self._check(a)
            self._check(b)
            return self._mul_table[a][b]
        self._check(a)
        self._check(b)
        return self._mul_raw(a, b)

    def _pow_raw(self, a: int, e: int) -> int:
        out = 1
        base = a
        while e:
            if e & 1:
                out = self._mul_raw(out, base)
            base = self._mul_raw(base, base)
            e >>= 1
        return out

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self._mul_table is not None:
            out, base = 1, a
            while e:
                if e & 1:
                    out = self._mul_table[out][base]
                base = self._mul_table[base][base]
                e >>= 1
            return out
        return self._pow_raw(a, e)

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise DaisyError("inverse of zero")
        if self._inv_table is not None:
            return self._inv_table[a]
        return self._pow_raw(a, self.q - 2)


@lru_cache(maxsize=None)
def field_make(p: int, k: int) -> FiniteField:
    """Cached constructor; fields are immutable so sharing is safe."""
    return FiniteField(p, k)


def field_of_order(q: int) -> FiniteField:
    pk = is_prime_power(q)
    if pk is None:
        raise DaisyError(f"{q} is not a prime power")
    return field_make(*pk)


@dataclass(frozen=True)
class GFVector:
    """A coordinate vector over a finite field, coordinates integer-coded."""

    field: FiniteField
    coords: tuple[int, ...]

    def __post_init__(self):
        for c in self.coords:
            if not 0 <= c < self.field.q:
                raise DaisyError(f"coordinate {c} out of range for GF({self.field.q})")


def rank(field: FiniteField, rows: Sequence[Sequence[int]]) -> int:
    """Rank of a list of coordinate vectors, by Gaussian elimination."""
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    for row in mat:
        if len(row) != ncols:
            raise DaisyError("mismatched vector dimensions")
    rnk = 0
    for col in range(ncols):
        pivot = None
        for i in range(rnk, len(mat)):
            if mat[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[rnk], mat[pivot] = mat[pivot], mat[rnk]
        inv = field.inv(mat[rnk][col])
        mat[rnk] = [field.mul(inv, v) for v in mat[rnk]]
        for i in range(len(mat)):
            if i != rnk and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [field.sub(v, field.mul(f, w)) for v, w in zip(mat[i], mat[rnk])]
        rnk += 1
        if rnk == len(mat):
            break
    return rnk


def linearly_independent(vecs: Sequence[GFVector]) -> bool:
    """True iff no nontrivial linear combination of the vectors vanishes."""
    if not vecs:
        raise DaisyError("need at least one vector")
    field = vecs[0].field
    dim = len(vecs[0].coords)
    for v in vecs:
        if v.field is not field and (v.field.p, v.field.k) != (field.p, field.k):
            raise DaisyError("vectors from different fields")
        if len(v.coords) != dim:
            raise DaisyError("mismatched vector dimensions")
    if len(vecs) > dim:
        return False
    return rank(field, [v.coords for v in vecs]) == len(vecs)
