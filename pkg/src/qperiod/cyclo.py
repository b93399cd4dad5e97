"""Exact arithmetic in Z[xi] for xi a primitive r-th root of unity, r prime.

Elements are integer coordinate vectors in the canonical basis
1, xi, ..., xi^(r-2).  Because r is prime, the minimal polynomial of xi is
1 + T + ... + T^(r-1), so xi^(r-1) = -(1 + xi + ... + xi^(r-2)) and every
element has exactly one coordinate vector.  That makes equality testing,
integer divisibility, and the (1 - xi)-adic expansion coefficientwise.

The (1 - xi)-adic expansion writes x as

    x = a_0 + a_1 (1 - xi) + ... + a_{r-2} (1 - xi)^{r-2} + x' (1 - xi)^{r-1}

with each a_n in [0, r).  The digits are produced by alternating the
coefficient-sum residue map (xi -> 1) with exact division by (1 - xi).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .modular import decode_int, encode_int, fp_divides, fp_gcd, fp_trim, is_prime


class NotDivisibleError(ValueError):
    """Raised when exact division by (1 - xi) is requested outside its ideal."""


def _check_r(r: int) -> None:
    if r < 3 or not is_prime(r):
        raise ValueError(f"r must be a prime >= 3, got {r}")


@dataclass(frozen=True)
class CyclotomicInt:
    """An element of Z[xi] in canonical coordinates.

    coeffs[i] holds the coefficient of xi^i for 0 <= i <= r-2.  Instances
    are immutable; all operations return new values, so sharing across
    threads is safe.
    """

    r: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_r(self.r)
        if len(self.coeffs) != self.r - 1:
            raise ValueError(
                f"need {self.r - 1} coefficients for r={self.r}, got {len(self.coeffs)}"
            )

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, r: int) -> CyclotomicInt:
        _check_r(r)
        return cls(r, (0,) * (r - 1))

    @classmethod
    def one(cls, r: int) -> CyclotomicInt:
        return cls.from_int(r, 1)

    @classmethod
    def from_int(cls, r: int, n: int) -> CyclotomicInt:
        _check_r(r)
        return cls(r, (n,) + (0,) * (r - 2))

    @classmethod
    def power(cls, r: int, k: int) -> CyclotomicInt:
        """The basis vector for xi^k, any integer k."""
        return make(r, {k: 1})

    # -- ring operations ----------------------------------------------------

    def _check_same_ring(self, other: CyclotomicInt) -> None:
        if self.r != other.r:
            raise ValueError(f"mixed rings: r={self.r} vs r={other.r}")

    def __add__(self, other: CyclotomicInt | int) -> CyclotomicInt:
        if isinstance(other, int):
            other = CyclotomicInt.from_int(self.r, other)
        self._check_same_ring(other)
        return CyclotomicInt(self.r, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CyclotomicInt:
        return CyclotomicInt(self.r, tuple(-a for a in self.coeffs))

    def __sub__(self, other: CyclotomicInt | int) -> CyclotomicInt:
        if isinstance(other, int):
            other = CyclotomicInt.from_int(self.r, other)
        return self + (-other)

    def __rsub__(self, other: int) -> CyclotomicInt:
        return CyclotomicInt.from_int(self.r, other) - self

    def __mul__(self, other: CyclotomicInt | int) -> CyclotomicInt:
        if isinstance(other, int):
            return CyclotomicInt(self.r, tuple(other * a for a in self.coeffs))
        self._check_same_ring(other)
        r = self.r
        acc = [0] * r
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    acc[(i + j) % r] += a * b
        return _fold_power_vector(r, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> CyclotomicInt:
        if n < 0:
            raise ValueError("negative powers leave Z[xi]")
        out = CyclotomicInt.one(self.r)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- structure maps -----------------------------------------------------

    def galois(self, j: int) -> CyclotomicInt:
        """The automorphism xi -> xi^j; j must be invertible mod r."""
        if j % self.r == 0:
            raise ValueError("galois exponent must be nonzero mod r")
        return make(self.r, {(i * j) % self.r: c for i, c in enumerate(self.coeffs)})

    def conjugate(self) -> CyclotomicInt:
        """Complex conjugation, xi -> xi^(r-1)."""
        return self.galois(self.r - 1)

    def epsilon_residue(self) -> int:
        """Image in Z/r under xi -> 1, as a representative in [0, r)."""
        return sum(self.coeffs) % self.r

    def divisible_by(self, m: int) -> bool:
        """Whether x lies in the ideal m Z[xi], i.e. every coordinate does."""
        if m <= 0:
            raise ValueError("divisor must be a positive integer")
        return all(c % m == 0 for c in self.coeffs)

    def complex_eval(self, which_root: int = 1) -> complex:
        """Numeric image under xi -> exp(2 pi i k / r), gcd(k, r) = 1."""
        if math.gcd(which_root, self.r) != 1:
            raise ValueError("which_root must be invertible mod r")
        w = 2j * cmath.pi * which_root / self.r
        return sum(c * cmath.exp(w * i) for i, c in enumerate(self.coeffs))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*xi")
            else:
                parts.append(f"{c}*xi^{i}")
        return " + ".join(parts) if parts else "0"


def _fold_power_vector(r: int, acc: list[int]) -> CyclotomicInt:
    # acc has length r; eliminate the xi^(r-1) coordinate with the relation
    # xi^(r-1) = -(1 + xi + ... + xi^(r-2))
    top = acc[r - 1]
    return CyclotomicInt(r, tuple(acc[i] - top for i in range(r - 1)))


def make(r: int, monomials: Mapping[int, int] | Iterable[tuple[int, int]]) -> CyclotomicInt:
    """Build the canonical form of sum c * xi^power from (power, c) data.

    Powers may be any integers; they are reduced mod r and like powers
    accumulate before canonicalization.
    """
    _check_r(r)
    items = monomials.items() if isinstance(monomials, Mapping) else monomials
    acc = [0] * r
    for power, c in items:
        acc[power % r] += c
    return _fold_power_vector(r, acc)


def one_minus_xi(r: int) -> CyclotomicInt:
    return make(r, {0: 1, 1: -1})


def divide_by_one_minus_xi(x: CyclotomicInt) -> CyclotomicInt:
    """Exact quotient x / (1 - xi); requires the coefficient sum of x to
    vanish mod r, which characterizes membership in the ideal (1 - xi).

    The canonical polynomial of x gains an exact factor of (1 - T) after
    subtracting (sum/r) copies of 1 + T + ... + T^(r-1), and the quotient
    coefficients are plain partial sums.
    """
    r = x.r
    s = sum(x.coeffs)
    if s % r != 0:
        raise NotDivisibleError(
            f"element with coefficient-sum residue {s % r} is not divisible by (1 - xi)"
        )
    c = s // r
    g = [x.coeffs[i] - c for i in range(r - 1)] + [-c]
    out = []
    run = 0
    for i in range(r - 1):
        run += g[i]
        out.append(run)
    if run + g[r - 1] != 0:
        raise AssertionError("division bookkeeping failed")  # unreachable
    return CyclotomicInt(r, tuple(out))


@dataclass(frozen=True)
class OhtsukiExpansion:
    """Digits of the (1 - xi)-adic expansion.

    a[n] in [0, r) is the coefficient of (1 - xi)^n for n = 0 .. r-2, and
    remainder is the exact cofactor of (1 - xi)^(r-1).
    """

    r: int
    a: tuple[int, ...]
    remainder: CyclotomicInt

    def reconstruct(self) -> CyclotomicInt:
        """Resum digits and remainder; inverse of ohtsuki_expansion."""
        r = self.r
        base = one_minus_xi(r)
        out = CyclotomicInt.zero(r)
        pw = CyclotomicInt.one(r)
        for an in self.a:
            out = out + pw * an
            pw = pw * base
        return out + pw * self.remainder


def ohtsuki_expansion(x: CyclotomicInt) -> OhtsukiExpansion:
    """Peel off r-1 digits of the (1 - xi)-adic expansion of x.

    Each step takes the coefficient-sum residue as the digit and divides the
    remainder exactly by (1 - xi); the subtraction makes the division legal.
    """
    r = x.r
    digits = []
    cur = x
    for _ in range(r - 1):
        an = cur.epsilon_residue()
        digits.append(an)
        cur = divide_by_one_minus_xi(cur - an)
    return OhtsukiExpansion(r, tuple(digits), cur)


def ideal_member(x: CyclotomicInt, p: int, gen: CyclotomicInt) -> bool:
    """Whether x lies in the ideal (p, gen) of Z[xi].

    Modulo p the ring becomes GF(p)[T] / (1 + T + ... + T^(r-1)), where the
    ideal generated by gen is principal with generator
    g = gcd(gen, 1 + T + ... + T^(r-1)); membership is divisibility by g.
    A constant gcd means the ideal is the whole ring mod p, and a zero
    generator leaves the pure congruence x = 0 mod p.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    x._check_same_ring(gen)
    r = x.r
    phi = [1] * r
    gen_p = fp_trim(list(gen.coeffs), p)
    x_p = fp_trim(list(x.coeffs), p)
    g = fp_gcd(phi, gen_p, p)
    if len(g) == 1:
        return True
    return fp_divides(g, x_p, p)


def binomial_expansion_identity(r: int) -> bool:
    """Check 1 + T + ... + T^(r-1) = sum_{k=1}^{r} C(r, k) (T - 1)^(k-1)
    as an exact identity in Z[T]."""
    lhs = [1] * r
    rhs = [0] * r
    pw = [1]  # (T - 1)^(k-1)
    for k in range(1, r + 1):
        cc = math.comb(r, k)
        for i, c in enumerate(pw):
            rhs[i] += cc * c
        nxt = [0] * (len(pw) + 1)
        for i, c in enumerate(pw):
            nxt[i] -= c
            nxt[i + 1] += c
        pw = nxt
    return lhs == rhs


# ---------------------------------------------------------------------------
# serialization

def cyclo_to_json(x: CyclotomicInt) -> dict:
    return {"r": x.r, "coeffs": [encode_int(c) for c in x.coeffs]}


def cyclo_from_json(obj: Mapping) -> CyclotomicInt:
    try:
        r = decode_int(obj["r"])
        coeffs = tuple(decode_int(c) for c in obj["coeffs"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed cyclotomic record: {exc}") from exc
    return CyclotomicInt(r, coeffs)
