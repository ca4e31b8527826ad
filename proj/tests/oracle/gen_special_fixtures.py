#!/usr/bin/env python3
"""Regenerates tests/fixtures/special_functions.csv.

erf is summed from its Maclaurin series in 60-digit arithmetic; erfc and
ierfc follow from it. mpmath's own erfc is used only as a cross-check.
"""
import pathlib

from mpmath import mp, mpf, exp, sqrt, pi, nstr, fabs
import mpmath

mp.dps = 60


def erf_series(x):
    # erf(x) = 2/sqrt(pi) * sum (-1)^k x^(2k+1) / (k! (2k+1))
    x = mpf(x)
    total = mpf(0)
    term = x
    k = 0
    while True:
        contrib = term / (2 * k + 1)
        total += contrib
        if k > 10 and fabs(contrib) < mpf(10) ** (-55):
            break
        k += 1
        term *= -x * x / k
    return 2 / sqrt(pi) * total


def main():
    out = pathlib.Path(__file__).resolve().parent.parent / "fixtures" / "special_functions.csv"
    xs = [mpf(i) / 20 for i in range(-120, 121)]
    xs += [mpf("0.46875"), mpf("4.0001"), mpf("5.9999"), mpf("1e-8"), mpf("-1e-8")]
    xs = sorted(set(xs))
    lines = ["x,erf,erfc,ierfc"]
    for x in xs:
        e = erf_series(x)
        ec = 1 - e
        assert fabs(ec - mpmath.erfc(x)) <= fabs(ec) * mpf(10) ** (-30)
        if x >= 0:
            ie = nstr(exp(-x * x) / sqrt(pi) - x * ec, 20, min_fixed=1, max_fixed=0)
        else:
            ie = "nan"
        lines.append(",".join([
            nstr(x, 20, min_fixed=1, max_fixed=0),
            nstr(e, 20, min_fixed=1, max_fixed=0),
            nstr(ec, 20, min_fixed=1, max_fixed=0),
            ie,
        ]))
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(xs)} rows to {out}")


if __name__ == "__main__":
    main()
