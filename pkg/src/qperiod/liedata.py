"""Root systems from Cartan matrices, their numerical constants, and the
Gauss sums controlling the unknot normalization of the projective
quantum invariants.

Conventions: the symmetrized bilinear form is (alpha_i|alpha_j) =
d_i a_{ij}, so short roots have square length 2 and (rho|alpha_i) = d_i.
All root and weight coordinates are taken in the simple-root basis;
positive roots then have nonnegative integer coordinates.
"""
from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .cyclo import CyclotomicInt, cyclo_from_json, cyclo_to_json, make
from .modular import is_prime

RANK_CAPS = {"A": (1, 6), "B": (2, 5), "C": (2, 5), "D": (4, 5), "F": (4, 4), "G": (2, 2)}


def _cartan_and_symmetrizers(family: str, rank: int) -> tuple[list[list[int]], list[int]]:
    lo, hi = RANK_CAPS.get(family, (0, -1))
    if not lo <= rank <= hi:
        raise ValueError(f"unsupported root system {family}{rank}")
    a = [[2 * (i == j) for j in range(rank)] for i in range(rank)]

    def chain(i: int, j: int) -> None:
        a[i][j] = a[j][i] = -1

    if family in ("A", "B", "C", "D"):
        for i in range(rank - 1):
            chain(i, i + 1)
    if family == "A":
        d = [1] * rank
    elif family == "B":
        # last simple root short; double arrow toward it
        a[rank - 1][rank - 2] = -2
        d = [2] * (rank - 1) + [1]
    elif family == "C":
        a[rank - 2][rank - 1] = -2
        d = [1] * (rank - 1) + [2]
    elif family == "D":
        a[rank - 1][rank - 2] = a[rank - 2][rank - 1] = 0
        chain(rank - 3, rank - 1)
        d = [1] * rank
    elif family == "G":
        a = [[2, -1], [-3, 2]]
        d = [3, 1]
    else:  # F
        a = [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, -1], [0, 0, -1, 2]]
        d = [2, 2, 1, 1]
    return a, d


@dataclass(frozen=True)
class RootSystem:
    """Simple root system with the symmetrized invariant form."""

    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]
    positive_roots: tuple[tuple[int, ...], ...]
    rho_coords: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        l = self.rank
        for i in range(l):
            for j in range(l):
                if self.d[i] * self.cartan[i][j] != self.d[j] * self.cartan[j][i]:
                    raise ValueError("symmetrized Cartan matrix is not symmetric")
        simple = {tuple(1 * (k == i) for k in range(l)) for i in range(l)}
        roots = set(self.positive_roots)
        if not simple <= roots:
            raise ValueError("simple roots missing from the positive roots")
        for beta in roots:
            if any(c < 0 for c in beta):
                raise ValueError("positive root with a negative coordinate")
        for i in range(l):
            e_i = tuple(1 * (k == i) for k in range(l))
            if self.bilinear(self.rho_coords, e_i) != self.d[i]:
                raise ValueError("(rho|alpha_i) = d_i violated")

    def bilinear(self, x, y):
        """(x|y) for coordinate vectors in the simple-root basis."""
        total = 0
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if yj:
                    total += xi * yj * self.d[i] * self.cartan[i][j]
        return total

    def pairing(self, beta, i: int) -> int:
        """<beta, alpha_i^vee>, integral on the root lattice."""
        return sum(self.cartan[i][j] * c for j, c in enumerate(beta))


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Generate positive roots by reflection closure from the simple roots
    and solve for rho; supports types A1..A6, B2..B5, C2..C5, D4..D5, F4, G2."""
    a, d = _cartan_and_symmetrizers(family, rank)
    simple = [tuple(1 * (k == i) for k in range(rank)) for i in range(rank)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        beta = frontier.pop()
        for i in range(rank):
            coef = sum(a[i][j] * c for j, c in enumerate(beta))
            new = list(beta)
            new[i] -= coef
            cand = tuple(new)
            if cand not in roots and all(c >= 0 for c in cand) and any(cand):
                roots.add(cand)
                frontier.append(cand)
    positive = tuple(sorted(roots, key=lambda b: (sum(b), b)))
    twice_rho = [sum(b[i] for b in positive) for i in range(rank)]
    rho = tuple(Fraction(c, 2) for c in twice_rho)
    return RootSystem(family, rank, tuple(tuple(row) for row in a), tuple(d), positive, rho)


@dataclass(frozen=True)
class LieConstants:
    """d = max symmetrizer, D = weight-form denominator bound, Coxeter and
    dual Coxeter numbers, |X/Y|, and the Weyl group order."""

    d: int
    D: int
    h: int
    h_dual: int
    det_cartan: int
    weyl_order: int


def _det_fraction(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    m = [row[:] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] * inv
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return det


def _solve_linear(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(rows)
    m = [row[:] + [rhs[i]] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if m[r][col])
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


@lru_cache(maxsize=None)
def constants(rs: RootSystem) -> LieConstants:
    l = rs.rank
    d_max = max(rs.d)
    lengths = [rs.bilinear(b, b) for b in rs.positive_roots]
    short_len = min(lengths)
    short = [b for b, ln in zip(rs.positive_roots, lengths) if ln == short_len]
    top_height = max(sum(b) for b in short)
    top_short = [b for b in short if sum(b) == top_height]
    if len(top_short) != 1:
        raise AssertionError("highest short root is not unique")
    h = 1 + int(rs.bilinear(top_short[0], rs.rho_coords))
    pairings = [rs.bilinear(b, rs.rho_coords) for b in rs.positive_roots]
    h_dual_frac = 1 + Fraction(max(pairings), d_max)
    if h_dual_frac.denominator != 1:
        raise AssertionError("dual Coxeter number came out fractional")
    gram = [[Fraction(rs.d[i] * rs.cartan[i][j]) for j in range(l)] for i in range(l)]
    det = _det_fraction([[Fraction(c) for c in row] for row in rs.cartan])
    if det.denominator != 1:
        raise AssertionError("Cartan determinant came out fractional")
    denom = 1
    weights = [_solve_linear(gram, [Fraction(rs.d[i]) * (j == i) for j in range(l)]) for i in range(l)]
    for i in range(l):
        for j in range(l):
            denom = lcm(denom, (rs.d[j] * weights[i][j]).denominator)
    two_rho = tuple(int(2 * c) for c in rs.rho_coords)
    orbit = {two_rho}
    frontier = [two_rho]
    while frontier:
        x = frontier.pop()
        for i in range(l):
            coef = rs.pairing(x, i)
            y = list(x)
            y[i] -= coef
            cand = tuple(y)
            if cand not in orbit:
                orbit.add(cand)
                frontier.append(cand)
    return LieConstants(d_max, denom, h, int(h_dual_frac), int(det), len(orbit))


def _require_admissible_size(rs: RootSystem, r: int) -> None:
    if not is_prime(r):
        raise ValueError(f"r = {r} is not prime")
    cs = constants(rs)
    if r <= cs.d * cs.h_dual:
        raise ValueError(f"r = {r} must exceed d*h_dual = {cs.d * cs.h_dual}")


def gauss_sum(rs: RootSystem, r: int) -> CyclotomicInt:
    """Sum of xi^((mu|mu)/2 + (mu|rho)) over the r^l root-lattice cosets."""
    _require_admissible_size(rs, r)
    l = rs.rank
    gram = [[rs.d[i] * rs.cartan[i][j] for j in range(l)] for i in range(l)]
    counts = [0] * r
    for mu in itertools.product(range(r), repeat=l):
        q = 0
        for i in range(l):
            ci = mu[i]
            if ci:
                row = gram[i]
                q += ci * (ci * row[i] + 2 * sum(mu[j] * row[j] for j in range(i + 1, l)))
        if q % 2:
            raise RuntimeError("(mu|mu) came out odd on the root lattice")
        e = q // 2 + sum(c * di for c, di in zip(mu, rs.d))
        counts[e % r] += 1
    return make(r, enumerate(counts))


def kernel_size(rs: RootSystem, r: int) -> int:
    """r^(l - rank of the Gram matrix over the r-element field)."""
    if not is_prime(r):
        raise ValueError(f"r = {r} is not prime")
    l = rs.rank
    m = [[rs.d[i] * rs.cartan[i][j] % r for j in range(l)] for i in range(l)]
    rank = 0
    row = 0
    for col in range(l):
        pivot = next((k for k in range(row, l) if m[k][col]), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = pow(m[row][col], -1, r)
        m[row] = [x * inv % r for x in m[row]]
        for k in range(l):
            if k != row and m[k][col]:
                f = m[k][col]
                m[k] = [(x - f * y) % r for x, y in zip(m[k], m[row])]
        rank += 1
        row += 1
    return r ** (l - rank)


def _as_q_poly(x: CyclotomicInt) -> list[Fraction]:
    return [Fraction(c) for c in x.coeffs]


def _q_trim(f: list[Fraction]) -> list[Fraction]:
    while f and not f[-1]:
        f.pop()
    return f


def _q_divmod(f: list[Fraction], g: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    f = _q_trim(f[:])
    q = [Fraction(0)] * max(0, len(f) - len(g) + 1)
    inv = 1 / g[-1]
    while len(f) >= len(g):
        shift = len(f) - len(g)
        c = f[-1] * inv
        q[shift] = c
        for i, gc in enumerate(g):
            f[shift + i] -= c * gc
        _q_trim(f)
    return _q_trim(q), f


def _try_exact_divide(num: CyclotomicInt, den: CyclotomicInt) -> CyclotomicInt | None:
    """num/den in Z[xi] if the quotient is integral, else None.

    Inverts den modulo the r-th cyclotomic polynomial over the rationals
    (extended Euclid), multiplies, and checks integrality."""
    r = num.r
    phi = [Fraction(1)] * r
    g = _q_trim(_as_q_poly(den))
    if not g:
        raise ZeroDivisionError("division by zero in Z[xi]")
    # extended Euclid for u with u*g = 1 mod phi
    r0, r1 = phi, g
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while _q_trim(r1[:]):
        q, rem = _q_divmod(r0, r1)
        r0, r1 = r1, rem
        prod = [Fraction(0)] * (len(q) + len(s1))
        for i, qc in enumerate(q):
            if qc:
                for j, sc in enumerate(s1):
                    prod[i + j] += qc * sc
        s0, s1 = s1, _q_trim([a - b for a, b in zip(s0 + [Fraction(0)] * len(prod), prod + [Fraction(0)] * len(s0))])
    if len(r0) != 1:
        raise ZeroDivisionError("denominator is a zero divisor mod the cyclotomic polynomial")
    scale = 1 / r0[0]
    u = [c * scale for c in s0]
    f = _as_q_poly(num)
    prod = [Fraction(0)] * (len(f) + len(u))
    for i, fc in enumerate(f):
        if fc:
            for j, uc in enumerate(u):
                prod[i + j] += fc * uc
    _, rem = _q_divmod(prod, phi)
    rem += [Fraction(0)] * (r - 1 - len(rem))
    if any(c.denominator != 1 for c in rem):
        return None
    return CyclotomicInt(r, tuple(int(c) for c in rem[: r - 1]))


def f_unknot(rs: RootSystem, r: int, sign: int = 1) -> tuple[CyclotomicInt, CyclotomicInt]:
    """Unknot normalization value as an exact (numerator, denominator)
    pair: gamma over prod(1 - xi^(alpha|rho)), conjugated for sign -1.
    When the quotient lies in Z[xi] the denominator returned is 1."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    _require_admissible_size(rs, r)
    gamma = gauss_sum(rs, r)
    if sign == -1:
        gamma = gamma.conjugate()
    den = CyclotomicInt.one(r)
    for beta in rs.positive_roots:
        e = int(rs.bilinear(beta, rs.rho_coords)) * sign
        factor = make(r, [(0, 1), (e % r, -1)])
        if factor.is_zero:
            raise ZeroDivisionError("vanishing factor in the unknot denominator")
        den = den * factor
    exact = _try_exact_divide(gamma, den)
    if exact is not None:
        return exact, CyclotomicInt.one(r)
    return gamma, den


def verify_gauss_magnitude(rs: RootSystem, r: int, tol: float = 1e-9) -> bool:
    """|gamma|^2 = kernel_size * r^l numerically, allowing the vanishing branch."""
    gamma = complex(gauss_sum(rs, r).complex_eval())
    if abs(gamma) < tol:
        return True
    return abs(abs(gamma) ** 2 - kernel_size(rs, r) * r**rs.rank) < tol


def verify_ratio(rs: RootSystem, r: int, tol: float = 1e-9) -> tuple[bool | None, int]:
    """Check F(+)/F(-) = (sign) * xi^(-((r+1)^2+2)|rho|^2) numerically.

    Returns (True, +-1) when confirmed, (None, 0) when either value is too
    small to divide (indeterminate), (False, 0) on mismatch.  Raises if
    the exponent is not an integer, which would require 2r-th roots."""
    if r == 2:
        raise ValueError("odd prime required")
    _require_admissible_size(rs, r)
    rho_sq = rs.bilinear(rs.rho_coords, rs.rho_coords)
    exponent = ((r + 1) ** 2 + 2) * Fraction(rho_sq)
    if exponent.denominator != 1:
        raise ValueError(f"exponent ((r+1)^2+2)|rho|^2 = {exponent} is not integral")
    num, den = f_unknot(rs, r, 1)
    f_plus = num.complex_eval() / den.complex_eval()
    num_m, den_m = f_unknot(rs, r, -1)
    f_minus = num_m.complex_eval() / den_m.complex_eval()
    if abs(f_minus) < tol or abs(f_plus) < tol:
        return None, 0
    ratio = f_plus / f_minus
    target = cmath.exp(-2j * cmath.pi * (int(exponent) % r) / r)
    if abs(ratio - target) < tol:
        return True, 1
    if abs(ratio + target) < tol:
        return True, -1
    return False, 0


def admissible_r(rs: RootSystem, r: int) -> bool:
    """Prime r large enough and coprime to |X/Y| and the Weyl order."""
    if not is_prime(r):
        return False
    cs = constants(rs)
    return r > cs.d * cs.h_dual and gcd(r, cs.det_cartan * cs.weyl_order) == 1


@dataclass(frozen=True)
class GaussReport:
    """Summary of the Gauss-sum checks for one (root system, r) pair."""

    family: str
    rank: int
    r: int
    gamma: CyclotomicInt
    ker_size: int
    group_size: int
    magnitude_ok: bool
    ratio_ok: bool
    omega_sign: int

    def to_json(self) -> dict:
        return {
            "type": self.family,
            "rank": self.rank,
            "r": self.r,
            "gamma": cyclo_to_json(self.gamma),
            "ker": self.ker_size,
            "magnitude_ok": self.magnitude_ok,
            "ratio_ok": self.ratio_ok,
            "omega": self.omega_sign,
        }


def gauss_report(rs: RootSystem, r: int, tol: float = 1e-9) -> GaussReport:
    gamma = gauss_sum(rs, r)
    ratio_ok, omega = verify_ratio(rs, r, tol)
    return GaussReport(
        family=rs.family,
        rank=rs.rank,
        r=r,
        gamma=gamma,
        ker_size=kernel_size(rs, r),
        group_size=r**rs.rank,
        magnitude_ok=verify_gauss_magnitude(rs, r, tol),
        ratio_ok=bool(ratio_ok),
        omega_sign=omega,
    )


def gauss_report_from_json(obj: dict) -> GaussReport:
    """Rebuild a report from its serialized form; the group size r^rank
    is recomputed since it is derived data."""
    return GaussReport(
        family=obj["type"],
        rank=obj["rank"],
        r=obj["r"],
        gamma=cyclo_from_json(obj["gamma"]),
        ker_size=obj["ker"],
        group_size=obj["r"] ** obj["rank"],
        magnitude_ok=obj["magnitude_ok"],
        ratio_ok=obj["ratio_ok"],
        omega_sign=obj["omega"],
    )
