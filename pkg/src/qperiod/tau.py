"""Closed-form quantum invariants of the two Brieskorn homology spheres
at prime roots of unity, Ohtsuki coefficient tables, the conjugation
obstruction to r-periodicity, the quotient congruence for prime-fold
branched covers, and CRT lifting of the resulting discriminants.

The series summed here terminate: for n >= r-1 the factor window
[n+1, 2n+1] has length >= r, hence contains a multiple of r and the term
vanishes.  The global (1-xi)^{-1} prefactor is absorbed exactly by
replacing the first window factor (1-xi^(n+1)) with the geometric sum
1 + xi + ... + xi^n, which stays in Z[xi] for every n.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cyclo import (
    CyclotomicInt,
    cyclo_from_json,
    cyclo_to_json,
    ideal_member,
    make,
    ohtsuki_expansion,
)
from .liedata import RootSystem, admissible_r, build_root_system, constants
from .modular import crt_symmetric, decode_int, encode_int, factorize, is_prime

MANIFOLDS = ("poincare", "brieskorn_2_3_7", "s3")

CANDIDATE_V_RULE = (
    "v = -2*a1/a0 mod r, the unique twist matching the first-order rule "
    "a1(xi^v * conj(x)) = -a1(x) - v*a0(x)"
)


@dataclass(frozen=True)
class TauValue:
    """One manifold invariant at one prime level."""

    manifold_id: str
    r: int
    value: CyclotomicInt

    def __post_init__(self) -> None:
        if self.value.r != self.r:
            raise ValueError("value lives at the wrong root of unity")

    def to_json(self) -> dict:
        return {"manifold": self.manifold_id, "r": self.r, "value": cyclo_to_json(self.value)}


def tau_value_from_json(obj: dict) -> TauValue:
    return TauValue(obj["manifold"], obj["r"], cyclo_from_json(obj["value"]))


def _require_level(r: int) -> None:
    if not is_prime(r) or r < 5:
        raise ValueError(f"r = {r} must be a prime >= 5")


def _geometric(r: int, n: int) -> CyclotomicInt:
    return make(r, [(j, 1) for j in range(n + 1)])


def _window(r: int, n: int) -> CyclotomicInt:
    """(1+xi+...+xi^n) * prod_{k=n+2}^{2n+1} (1 - xi^k)."""
    term = _geometric(r, n)
    for k in range(n + 2, 2 * n + 2):
        term = term * make(r, [(0, 1), (k, -1)])
        if term.is_zero:
            break
    return term


def _tau_sum(r: int, front_exponent) -> CyclotomicInt:
    total = CyclotomicInt.zero(r)
    for n in range(r - 1):
        term = CyclotomicInt.power(r, front_exponent(n) % r) * _window(r, n)
        total = total + term
    return total


def tau_poincare(r: int) -> TauValue:
    """Invariant of the Poincare sphere (-1 surgery on the left trefoil)."""
    _require_level(r)
    return TauValue("poincare", r, _tau_sum(r, lambda n: n))


def tau_brieskorn237(r: int) -> TauValue:
    """Invariant of the Brieskorn sphere Sigma(2,3,7)."""
    _require_level(r)
    return TauValue("brieskorn_2_3_7", r, _tau_sum(r, lambda n: -n * (n + 2)))


def tau_s3(r: int) -> TauValue:
    """Normalization baseline: the empty surgery has invariant 1."""
    if not is_prime(r):
        raise ValueError(f"r = {r} must be prime")
    return TauValue("s3", r, CyclotomicInt.one(r))


def tau_for(manifold_id: str, r: int) -> TauValue:
    if manifold_id == "poincare":
        return tau_poincare(r)
    if manifold_id == "brieskorn_2_3_7":
        return tau_brieskorn237(r)
    if manifold_id == "s3":
        return tau_s3(r)
    raise ValueError(f"unknown manifold {manifold_id!r}")


# ---------------------------------------------------------------------------
# coefficient tables


def coeff_table(x: CyclotomicInt, depth: int) -> tuple[tuple[int, int], ...]:
    """Rows (n, a_n) of the Ohtsuki expansion of x, n = 0..depth."""
    if not 0 <= depth <= x.r - 2:
        raise ValueError(f"depth must lie in [0, {x.r - 2}]")
    digits = ohtsuki_expansion(x).a
    return tuple((n, digits[n]) for n in range(depth + 1))


def twist_conjugate(x: CyclotomicInt, v: int) -> CyclotomicInt:
    """xi^v times the complex conjugate of x."""
    return CyclotomicInt.power(x.r, v % x.r) * x.conjugate()


# ---------------------------------------------------------------------------
# the conjugation obstruction


@dataclass(frozen=True)
class ObstructionReport:
    """Search result for x = xi^v * conj(x) mod r over all twists v.

    An empty admissible_v set at an admissible level r rules out
    r-periodicity of the manifold carrying x.  a_table holds the
    coefficient rows of x itself; twisted_tables the rows of the twisted
    conjugates for each admissible v.
    """

    r: int
    admissible_v: tuple[int, ...]
    a_table: tuple[tuple[int, int], ...]
    twisted_tables: tuple[tuple[int, tuple[tuple[int, int], ...]], ...]
    verdict: str

    def to_json(self, manifold: str) -> dict:
        return {
            "manifold": manifold,
            "r": self.r,
            "verdict": self.verdict,
            "admissible_v": [int(v) for v in self.admissible_v],
            "a": [[n, a] for n, a in self.a_table],
        }


def obstruction_from_json(obj: dict) -> ObstructionReport:
    """Rebuild the report from its serialized form.

    The per-twist tables are derived data and not serialized, so they
    come back empty."""
    return ObstructionReport(
        obj["r"],
        tuple(obj["admissible_v"]),
        tuple((n, a) for n, a in obj["a"]),
        (),
        obj["verdict"],
    )


def obstruction_test(x: CyclotomicInt, r: int, rs: RootSystem | None = None) -> ObstructionReport:
    if rs is None:
        rs = build_root_system("A", 1)
    if x.r != r:
        raise ValueError("x lives at the wrong root of unity")
    depth = min(3, r - 2)
    table = coeff_table(x, depth)
    found = tuple(v for v in range(r) if (x - twist_conjugate(x, v)).divisible_by(r))
    twisted = tuple((v, coeff_table(twist_conjugate(x, v), depth)) for v in found)
    if not admissible_r(rs, r):
        verdict = "inadmissible_r"
    elif found:
        verdict = "not_obstructed"
    else:
        verdict = "obstructed"
    return ObstructionReport(r, found, table, twisted, verdict)


# ---------------------------------------------------------------------------
# the quotient congruence


def quotient_congruence_test(
    x_m: CyclotomicInt,
    x_m_prime: CyclotomicInt,
    p: int,
    r: int,
    rs: RootSystem | None = None,
) -> tuple[int, ...]:
    """All u in [0, 2r) with x_m = (-xi)^u * (x_m')^p modulo the ideal
    (p, (xi+xi^-1)^p - (xi+xi^-1)) of Z[xi].

    An empty result is evidence (in the Z[xi] image of the full ring)
    against the manifold of x_m being a p-fold cyclic branched cover of
    the manifold of x_m'."""
    if rs is None:
        rs = build_root_system("A", 1)
    if not is_prime(p):
        raise ValueError(f"p = {p} must be prime")
    if x_m.r != r or x_m_prime.r != r:
        raise ValueError("invariants live at the wrong root of unity")
    if (r * constants(rs).weyl_order) % p == 0:
        raise ValueError(f"p = {p} must not divide r times the Weyl order")
    half_trace = make(r, {1: 1, r - 1: 1})
    gen = half_trace**p - half_trace
    power = x_m_prime**p
    found = []
    for u in range(2 * r):
        shifted = CyclotomicInt.power(r, u % r) * power
        if u % 2:
            shifted = -shifted
        if ideal_member(x_m - shifted, p, gen):
            found.append(u)
    return tuple(found)


# ---------------------------------------------------------------------------
# discriminant lifting


@dataclass(frozen=True)
class DiscriminantReport:
    """Per-prime twisted-conjugate defects, CRT-lifted to an integer.

    Any admissible prime period of the manifold must divide `lifted`;
    residues rows are (r, v, delta) with delta = a3(x) - a3(xi^v conj x)
    taken mod r at the rule-selected twist v."""

    manifold_id: str
    candidate_v_rule: str
    residues: tuple[tuple[int, int, int], ...]
    dropped: tuple[int, ...]
    lifted: int
    factorization: tuple[tuple[int, int], ...]

    def to_json(self) -> dict:
        return {
            "manifold": self.manifold_id,
            "rule": self.candidate_v_rule,
            "residues": [[r, v, delta] for r, v, delta in self.residues],
            "dropped": [int(r) for r in self.dropped],
            "lifted": encode_int(self.lifted),
            "factors": [[p, e] for p, e in self.factorization],
        }


def discriminant_from_json(obj: dict) -> DiscriminantReport:
    return DiscriminantReport(
        obj["manifold"],
        obj["rule"],
        tuple((r, v, d) for r, v, d in obj["residues"]),
        tuple(obj["dropped"]),
        decode_int(obj["lifted"]),
        tuple((p, e) for p, e in obj["factors"]),
    )


def crt_lift(residues, magnitude_bound: int | None = None) -> int:
    """Symmetric-representative CRT over pairwise distinct prime moduli."""
    pairs = tuple(residues)
    moduli = [m for m, _ in pairs]
    if len(set(moduli)) != len(moduli):
        raise ValueError("repeated modulus")
    for m in moduli:
        if not is_prime(m):
            raise ValueError(f"modulus {m} is not prime")
    return crt_symmetric(pairs, magnitude_bound)


def period_discriminant(manifold_id: str, primes) -> DiscriminantReport:
    """CRT-lift the twisted-conjugate defect of the level-r invariants to
    a single integer whose prime factors bound the possible periods."""
    prime_list = sorted(set(primes))
    for r in prime_list:
        if not is_prime(r) or r <= 4:
            raise ValueError(f"level {r} must be a prime > 4")
    rows = []
    dropped = []
    for r in prime_list:
        x = tau_for(manifold_id, r).value
        digits = ohtsuki_expansion(x).a
        a0, a1, a3 = digits[0], digits[1], digits[3]
        if a0 % r == 0:
            dropped.append(r)
            continue
        v = (-2 * a1 * pow(a0, -1, r)) % r
        twisted_digits = ohtsuki_expansion(twist_conjugate(x, v)).a
        delta = (a3 - twisted_digits[3]) % r
        rows.append((r, v, delta))
    if not rows:
        raise ValueError("no usable levels: every prime was dropped")
    lifted = crt_lift((r, delta) for r, _, delta in rows)
    factors = factorize(abs(lifted)) if lifted else ()
    return DiscriminantReport(
        manifold_id,
        CANDIDATE_V_RULE,
        tuple(rows),
        tuple(dropped),
        lifted,
        factors,
    )
