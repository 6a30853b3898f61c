#!/usr/bin/env python3
"""Smoke test for the turankit_py extension module.

Builds nothing itself: run `cargo build --release -p turankit-py` first.
The compiled cdylib is copied next to a temp dir under the importable name
`turankit_py.so` and exercised end to end.
"""

import json
import math
import shutil
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        REPO / "target" / "release" / "libturankit_py.so",
        REPO / "target" / "debug" / "libturankit_py.so",
    ]
    src = next((p for p in candidates if p.exists()), None)
    if src is None:
        sys.exit(
            "libturankit_py.so not found; run `cargo build --release -p turankit-py` first"
        )
    tmp = Path(tempfile.mkdtemp(prefix="turankit-py-"))
    shutil.copy(src, tmp / "turankit_py.so")
    sys.path.insert(0, str(tmp))
    import turankit_py

    return turankit_py


def approx(a, b, tol=1e-12):
    assert abs(a - b) <= tol, f"{a} != {b} (tol {tol})"


def main():
    tk = load_module()

    # Legendre scheme basics
    leg = tk.Scheme.jacobi(0.0)
    assert leg.label() == "jacobi:0"
    approx(leg.alpha(1), 1.0 / 3.0)
    approx(leg.gamma(1), 2.0 / 3.0)

    # P_4(0) = 3/8 and normalization at x = 1
    p = leg.eval_p(4, 0.0)
    approx(p[4], 0.375, 1e-15)
    assert all(abs(v - 1.0) < 1e-10 for v in leg.eval_p(50, 1.0))

    # Chebyshev: normalized Turán determinant is identically 1
    cheb = tk.Scheme.jacobi(-0.5)
    for n in (1, 7, 40):
        approx(cheb.normalized_turan(n, 0.3), 1.0, 1e-12)

    # endpoint reference values agree with the recurrence engine
    f0, f1 = tk.jacobi_endpoints(0.0, 10)
    approx(leg.normalized_turan(10, 0.0), f0, 1e-13)
    approx(leg.normalized_turan(10, 1.0), f1, 1e-10)

    # descriptor parsing: JSON and shorthand give the same table
    a = tk.Scheme.parse('{"family":"q_ultra","q":0.5,"beta":0.25}')
    b = tk.Scheme.parse("qultra:0.5,0.25")
    approx(a.alpha(5), b.alpha(5), 0.0)

    # orthonormal round trip
    lam = leg.to_orthonormal()
    approx(lam.lambda_(0), math.sqrt(1.0 / 3.0), 1e-15)
    back = lam.to_scheme()
    approx(back.alpha(7), leg.alpha(7), 1e-12)

    # theorem verification round trip
    verdict, report = tk.verify("thm2", "jacobi:0", n_max=60, grid_points=101)
    assert verdict == "pass", report
    cert = json.loads(report)
    approx(cert["constant"], 0.6, 1e-15)

    verdict, _ = tk.verify("thm2", "jacobi:-0.75", n_max=30, grid_points=51)
    assert verdict == "inapplicable"

    verdict, report = tk.verify("nonmono", "remark28:0.05", n_max=3, grid_points=400)
    scan = json.loads(report)
    assert not scan["is_monotone"]

    # scan output shape
    csv = tk.scan_csv("jacobi:0", n_max=5, grid_points=11, grid_spacing="uniform")
    lines = csv.strip().splitlines()
    assert lines[0] == "n,x,delta,normalized"
    assert len(lines) == 1 + 5 * 11

    # density of the constant-lambda table: (2/pi) sqrt(1-x^2)
    flat = tk.Orthonormal.from_table([0.5] * 220, 0.5)
    est = json.loads(flat.density(200, grid_points=101))
    mid = est["grid"].index(0.0)
    approx(est["g"][mid], 2.0 / math.pi, 1e-13)

    scan = json.loads(flat.lb_scan(200))
    assert scan["verdict"] == "pass"

    print("smoke test: all checks passed")


if __name__ == "__main__":
    main()
