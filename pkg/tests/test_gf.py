"""Field arithmetic tests: exhaustive axiom checks and independent
polynomial-arithmetic oracles."""

import pytest

from daisy.errors import DaisyError
from daisy.gf import (FiniteField, GFVector, field_make, field_of_order,
                      is_prime_power, linearly_independent, rank)

PRIME_POWERS_64 = [q for q in range(2, 65) if is_prime_power(q)]


def test_prime_power_detection():
    assert is_prime_power(8) == (2, 3)
    assert is_prime_power(49) == (7, 2)
    assert is_prime_power(64) == (2, 6)
    for q in (1, 6, 10, 12, 100):
        assert is_prime_power(q) is None or q in (1,)
    assert is_prime_power(1) is None
    assert is_prime_power(6) is None


def test_field_make_validation():
    with pytest.raises(DaisyError):
        field_make(4, 1)  # not prime
    with pytest.raises(DaisyError):
        field_make(2, 0)
    with pytest.raises(DaisyError):
        field_make(2, 17)  # 2^17 over the order cap


def test_gf2_and_gf3_basics():
    f2 = field_make(2, 1)
    assert f2.add(1, 1) == 0
    f3 = field_make(3, 1)
    assert f3.mul(2, 2) == 1
    f5 = field_make(5, 1)
    assert f5.inv(2) == 3


def test_gf4_modulus_and_multiplication():
    f4 = field_make(2, 2)
    # only irreducible monic quadratic over GF(2): x^2 + x + 1
    assert f4.modulus == (1, 1, 1)
    # x * x = x + 1 under that modulus: codes 2 * 2 -> 3
    assert f4.mul(2, 2) == 3


def _poly_mul_mod_oracle(a_digits, b_digits, modulus, p):
    # schoolbook convolution then long division -- independent of gf.py's
    # in-place reduction
    conv = [0] * (len(a_digits) + len(b_digits) - 1)
    for i, ai in enumerate(a_digits):
        for j, bj in enumerate(b_digits):
            conv[i + j] = (conv[i + j] + ai * bj) % p
    mod = list(modulus)
    while len(conv) >= len(mod):
        lead = conv[-1]
        if lead:
            shift = len(conv) - len(mod)
            for i, mi in enumerate(mod):
                conv[shift + i] = (conv[shift + i] - lead * mi) % p
        conv.pop()
    return conv


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2)])
def test_multiplication_matches_polynomial_oracle(p, k):
    f = field_make(p, k)
    for a in range(f.q):
        for b in range(f.q):
            da = list(f.digits(a))
            db = list(f.digits(b))
            want = _poly_mul_mod_oracle(da, db, f.modulus, p)
            want += [0] * (k - len(want))
            got = f.digits(f.mul(a, b))
            assert tuple(want[:k]) == got


@pytest.mark.parametrize("q", PRIME_POWERS_64)
def test_field_axioms_exhaustive(q):
    import numpy as np
    f = field_of_order(q)
    add = np.array([[f.add(a, b) for b in range(q)] for a in range(q)])
    mul = np.array([[f.mul(a, b) for b in range(q)] for a in range(q)])
    # commutativity
    assert (add == add.T).all() and (mul == mul.T).all()
    # identities
    assert (add[0] == np.arange(q)).all() and (mul[1] == np.arange(q)).all()
    # associativity via fancy indexing: (a+b)+c == a+(b+c)
    assert (add[add, :] == add[:, add].transpose(1, 0, 2)).all()
    assert (mul[mul, :] == mul[:, mul].transpose(1, 0, 2)).all()
    # distributivity: a*(b+c) == a*b + a*c
    left = mul[:, add]                      # [a, b, c] -> a*(b+c)
    right = add[mul[:, :, None], mul[:, None, :]]
    assert (left == right).all()
    # additive and multiplicative inverses
    for a in range(q):
        assert 0 in add[a]
        if a:
            assert f.mul(a, f.inv(a)) == 1
    with pytest.raises(DaisyError):
        f.inv(0)


def _span_size_oracle(f, rows):
    # enumerate every linear combination
    from itertools import product
    seen = set()
    dim = len(rows[0])
    for coeffs in product(range(f.q), repeat=len(rows)):
        v = tuple()
        acc = [0] * dim
        for c, row in zip(coeffs, rows):
            acc = [f.add(x, f.mul(c, y)) for x, y in zip(acc, row)]
        seen.add(tuple(acc))
    return len(seen)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_rank_matches_span_enumeration(q):
    import random
    f = field_of_order(q)
    rng = random.Random(q)
    for _ in range(40):
        nvec = rng.randrange(1, 4)
        dim = rng.randrange(nvec, 5)
        rows = [tuple(rng.randrange(q) for _ in range(dim)) for _ in range(nvec)]
        if q ** nvec > 10 ** 5:
            continue
        r = rank(f, rows)
        assert q ** r == _span_size_oracle(f, rows)


def test_linear_independence_examples():
    f2 = field_make(2, 1)
    basis = [GFVector(f2, (1, 0, 0)), GFVector(f2, (0, 1, 0)), GFVector(f2, (0, 0, 1))]
    assert linearly_independent(basis)
    dep = [GFVector(f2, (1, 0, 0)), GFVector(f2, (0, 1, 0)), GFVector(f2, (1, 1, 0))]
    assert not linearly_independent(dep)
    f3 = field_make(3, 1)
    # (1,0,2) = (1,1,0) - (0,1,1) over GF(3)
    trip = [GFVector(f3, (1, 1, 0)), GFVector(f3, (0, 1, 1)), GFVector(f3, (1, 0, 2))]
    assert not linearly_independent(trip)


def test_linear_independence_validation():
    f = field_make(2, 1)
    with pytest.raises(DaisyError):
        linearly_independent([])
    with pytest.raises(DaisyError):
        linearly_independent([GFVector(f, (1, 0)), GFVector(f, (1, 0, 0))])
    with pytest.raises(DaisyError):
        GFVector(f, (2, 0))  # coordinate out of range
