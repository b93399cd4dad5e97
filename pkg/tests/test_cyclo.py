"""Cyclotomic-integer arithmetic: golden values, ring axioms, expansions."""
from __future__ import annotations

import random

import pytest

from qperiod.cyclo import (
    CyclotomicInt,
    NotDivisibleError,
    binomial_expansion_identity,
    cyclo_from_json,
    cyclo_to_json,
    divide_by_one_minus_xi,
    ideal_member,
    make,
    ohtsuki_expansion,
    one_minus_xi,
)

RS = (5, 7, 11)


def rand_elt(r: int, rng: random.Random, lo: int = -9, hi: int = 9) -> CyclotomicInt:
    return CyclotomicInt(r, tuple(rng.randint(lo, hi) for _ in range(r - 1)))


# -- construction and canonical form ---------------------------------------


def test_make_reduces_high_powers():
    # xi^5 = 1 at r=5; xi^4 folds into the basis
    assert make(5, {5: 1}) == CyclotomicInt.one(5)
    assert make(5, {4: 1}) == CyclotomicInt(5, (-1, -1, -1, -1))
    assert make(5, {-1: 1}) == make(5, {4: 1})


def test_make_accumulates_colliding_powers():
    # 1 - xi^5 = 0 exactly, even though both monomials land on power 0
    assert make(5, [(0, 1), (5, -1)]).is_zero


def test_product_golden_value():
    # (1 + xi)(1 + xi^4) = 1 - xi^2 - xi^3 at r = 5
    x = make(5, {0: 1, 1: 1})
    y = make(5, {0: 1, 4: 1})
    assert (x * y).coeffs == (1, 0, -1, -1)


def test_invalid_r_rejected():
    with pytest.raises(ValueError):
        CyclotomicInt.zero(6)
    with pytest.raises(ValueError):
        CyclotomicInt.zero(2)
    with pytest.raises(ValueError):
        CyclotomicInt(5, (1, 2, 3))


def test_mixed_ring_rejected():
    with pytest.raises(ValueError):
        CyclotomicInt.one(5) + CyclotomicInt.one(7)
    with pytest.raises(ValueError):
        CyclotomicInt.one(5) * CyclotomicInt.one(7)


@pytest.mark.parametrize("r", RS)
def test_ring_axioms_random_triples(r):
    # 200 random triples per ring: associativity, commutativity,
    # distributivity, and the defining relation sum xi^i = 0
    rng = random.Random(1000 + r)
    for _ in range(200):
        x, y, z = (rand_elt(r, rng) for _ in range(3))
        assert (x + y) + z == x + (y + z)
        assert x + y == y + x
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        assert x * (y + z) == x * y + x * z
    assert make(r, {i: 1 for i in range(r)}).is_zero


@pytest.mark.parametrize("r", RS)
def test_canonical_form_is_stable_under_relation(r):
    # adding any multiple of 1 + xi + ... + xi^(r-1) cannot change an element
    rng = random.Random(2000 + r)
    for _ in range(50):
        x = rand_elt(r, rng)
        shift = rng.randint(-5, 5)
        monos = list(enumerate(x.coeffs)) + [(i, shift) for i in range(r)]
        assert make(r, monos) == x


# -- structure maps ---------------------------------------------------------


def test_conjugate_golden_value():
    x = make(5, {0: 1, 1: 2, 2: 2, 3: 1})
    assert x.conjugate() == make(5, {0: 1, 4: 2, 3: 2, 2: 1})
    assert x.conjugate().coeffs == (-1, -2, -1, 0)


@pytest.mark.parametrize("r", RS)
def test_galois_is_ring_automorphism(r):
    rng = random.Random(3000 + r)
    for _ in range(60):
        x, y = rand_elt(r, rng), rand_elt(r, rng)
        j = rng.randrange(1, r)
        assert (x * y).galois(j) == x.galois(j) * y.galois(j)
        assert (x + y).galois(j) == x.galois(j) + y.galois(j)


@pytest.mark.parametrize("r", RS)
def test_conjugate_is_involution(r):
    rng = random.Random(4000 + r)
    for _ in range(40):
        x = rand_elt(r, rng)
        assert x.conjugate().conjugate() == x


def test_galois_rejects_zero_exponent():
    with pytest.raises(ValueError):
        CyclotomicInt.one(5).galois(5)


@pytest.mark.parametrize("r", RS)
def test_epsilon_is_ring_map_to_z_mod_r(r):
    rng = random.Random(5000 + r)
    for _ in range(60):
        x, y = rand_elt(r, rng), rand_elt(r, rng)
        assert (x + y).epsilon_residue() == (x.epsilon_residue() + y.epsilon_residue()) % r
        assert (x * y).epsilon_residue() == (x.epsilon_residue() * y.epsilon_residue()) % r
    assert make(r, {1: 1}).epsilon_residue() == 1


def test_divisible_by():
    x = make(5, {0: 10, 1: -5, 3: 15})
    assert x.divisible_by(5)
    assert not x.divisible_by(3)
    with pytest.raises(ValueError):
        x.divisible_by(0)


def test_complex_eval_on_near_full_sum():
    import cmath

    for r in (5, 7):
        x = make(r, {i: 1 for i in range(r - 1)})
        expect = -cmath.exp(2j * cmath.pi * (r - 1) / r)
        assert abs(x.complex_eval() - expect) < 1e-12


def test_complex_eval_respects_galois_choice():
    x = make(7, {1: 1})
    import cmath

    assert abs(x.complex_eval(3) - cmath.exp(2j * cmath.pi * 3 / 7)) < 1e-12
    with pytest.raises(ValueError):
        x.complex_eval(7)


# -- division by (1 - xi) and the digit expansion ---------------------------


def test_divide_golden_values():
    # (1 - xi^3) / (1 - xi) = 1 + xi + xi^2
    x = make(5, {0: 1, 3: -1})
    assert divide_by_one_minus_xi(x) == make(5, {0: 1, 1: 1, 2: 1})
    # (2 xi + 2 xi^2 + xi^3) / (1 - xi) = xi^3 + xi^2 - 1
    y = make(5, {1: 2, 2: 2, 3: 1})
    assert divide_by_one_minus_xi(y) == make(5, {0: -1, 2: 1, 3: 1})


def test_divide_rejects_nonmembers():
    with pytest.raises(NotDivisibleError):
        divide_by_one_minus_xi(CyclotomicInt.one(5))


@pytest.mark.parametrize("r", RS)
def test_divide_inverts_multiplication(r):
    rng = random.Random(6000 + r)
    for _ in range(60):
        w = rand_elt(r, rng)
        assert divide_by_one_minus_xi(one_minus_xi(r) * w) == w


def test_expansion_golden_value():
    # 1 + xi = 2 - (1 - xi), so the digits open with [2, r-1 mod r = 4, ...]
    exp = ohtsuki_expansion(make(5, {0: 1, 1: 1}))
    assert exp.a == (2, 4, 0, 0)


@pytest.mark.parametrize("r", RS)
def test_expansion_roundtrip_random(r):
    # 100 random elements per ring reconstruct exactly
    rng = random.Random(7000 + r)
    for _ in range(100):
        x = rand_elt(r, rng, -50, 50)
        exp = ohtsuki_expansion(x)
        assert all(0 <= a < r for a in exp.a)
        assert len(exp.a) == r - 1
        assert exp.reconstruct() == x


@pytest.mark.parametrize("r", RS)
def test_expansion_digits_well_defined_mod_r(r):
    # perturbing x by r * z never changes a_n mod r for n <= r-2
    rng = random.Random(8000 + r)
    for _ in range(30):
        x, z = rand_elt(r, rng), rand_elt(r, rng)
        assert ohtsuki_expansion(x).a == ohtsuki_expansion(x + z * r).a


@pytest.mark.parametrize("r", (3, 5, 7, 11, 13))
def test_integer_r_has_vanishing_digits(r):
    # every digit of the constant r vanishes, the digit-level trace of
    # r = (unit) * (1 - xi)^(r-1)
    exp = ohtsuki_expansion(CyclotomicInt.from_int(r, r))
    assert exp.a == (0,) * (r - 1)


@pytest.mark.parametrize("r", (3, 5, 7, 11, 13))
def test_binomial_expansion_identity(r):
    assert binomial_expansion_identity(r)


# -- ideal membership -------------------------------------------------------


def half_trace_generator(r: int, p: int) -> CyclotomicInt:
    """(xi + xi^-1)^p - (xi + xi^-1), the quotient-criterion generator."""
    h = make(r, {1: 1, r - 1: 1})
    return h**p - h


def test_ideal_member_trivial_cases():
    one = CyclotomicInt.one(5)
    assert ideal_member(one * 3, 3, CyclotomicInt.zero(5))
    assert ideal_member(one - 1, 3, CyclotomicInt.zero(5))
    assert not ideal_member(one, 3, CyclotomicInt.zero(5))


def test_ideal_member_with_constant_gcd_accepts_everything():
    # at (p, r) = (3, 5) the generator is coprime to the cyclotomic
    # polynomial mod 3, so the ideal is the whole ring
    g = half_trace_generator(5, 3)
    assert ideal_member(CyclotomicInt.one(5), 3, g)


def test_ideal_member_with_nonconstant_gcd_rejects_one():
    # (p, r) = (5, 3) and (11, 5): the generator shares a factor with the
    # cyclotomic polynomial mod p and the unit stays outside
    for p, r in ((5, 3), (11, 5)):
        g = half_trace_generator(r, p)
        assert not ideal_member(CyclotomicInt.one(r), p, g)
        assert ideal_member(CyclotomicInt.from_int(r, p), p, g)


def test_ideal_member_contains_generator_combinations():
    rng = random.Random(42)
    r, p = 7, 5
    g = half_trace_generator(r, p)
    for _ in range(25):
        u, v = rand_elt(r, rng), rand_elt(r, rng)
        assert ideal_member(u * g + v * p, p, g)


def test_ideal_member_validates_inputs():
    with pytest.raises(ValueError):
        ideal_member(CyclotomicInt.one(5), 4, CyclotomicInt.zero(5))
    with pytest.raises(ValueError):
        ideal_member(CyclotomicInt.one(5), 3, CyclotomicInt.zero(7))


# -- serialization ----------------------------------------------------------


def test_json_roundtrip_small_and_huge():
    x = make(5, {0: 1, 1: 2**60, 3: -7})
    obj = cyclo_to_json(x)
    assert isinstance(obj["coeffs"][1], str)  # beyond 2^53 travels as text
    assert isinstance(obj["coeffs"][0], int)
    assert cyclo_from_json(obj) == x


def test_json_rejects_malformed():
    with pytest.raises(ValueError):
        cyclo_from_json({"r": 5})
