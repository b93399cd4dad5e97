"""Survey the Gauss-sum magnitude and ratio checks across every supported
root system at its two smallest admissible primes (levels capped so the
r^rank coset sum stays fast).

Run as: python3 scripts/gauss_survey.py
"""
from __future__ import annotations

from qperiod.liedata import RANK_CAPS, build_root_system, constants, gauss_report
from qperiod.modular import is_prime

COSET_CAP = 200_000


def small_admissible_levels(rs, count: int = 2):
    cs = constants(rs)
    found = []
    r = cs.d * cs.h_dual + 1
    while len(found) < count and r ** rs.rank <= COSET_CAP:
        if is_prime(r) and (cs.det_cartan * cs.weyl_order) % r != 0:
            found.append(r)
        r += 1
    return found


def main() -> None:
    rows = []
    for family, (lo, hi) in sorted(RANK_CAPS.items()):
        for rank in range(lo, hi + 1):
            rs = build_root_system(family, rank)
            for r in small_admissible_levels(rs):
                rep = gauss_report(rs, r)
                rows.append(
                    (
                        f"{family}{rank}",
                        r,
                        rep.ker_size,
                        rep.group_size,
                        "ok" if rep.magnitude_ok else "BAD",
                        "ok" if rep.ratio_ok else "indeterminate",
                        rep.omega_sign if rep.ratio_ok else "-",
                    )
                )
    header = ("system", "r", "ker", "group", "magnitude", "ratio", "omega")
    text_rows = [header] + [tuple(str(c) for c in row) for row in rows]
    widths = [max(len(row[i]) for row in text_rows) for i in range(len(header))]
    for row in text_rows:
        print("  ".join(s.rjust(w) for s, w in zip(row, widths)))


if __name__ == "__main__":
    main()
