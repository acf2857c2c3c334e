"""Smoke test for the `landau` extension module.

Build and run from the repository root:

    cargo build --release -p landau-py --features extension-module
    cp target/release/liblandau_py.so python/landau.so
    python3 python/smoke_test.py
"""

import math
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import landau  # noqa: E402


def main():
    assert abs(landau.m0() - 1.1296) < 5e-5
    assert abs(landau.m0_prime() - 2.2976) < 5e-5

    r = landau.theorem_radius("F", M=1.0)
    assert (r.rho, r.sigma) == (1.0, 1.0), r

    b = landau.theorem_radius("B", M=2.0)
    literal = math.pi / (math.pi + 64 + 4 * math.sqrt(2 * math.pi + 256))
    assert abs(b.rho - literal) < 1e-12, (b.rho, literal)

    d = landau.theorem_radius("D", M1=1.0, M2=2.0)
    assert 0 < d.rho < 1 and abs(d.residual) < 1e-10

    try:
        landau.theorem_radius("T28", M1=1.0, M2=0.5)
    except ValueError as e:
        assert "M2 >= 1" in str(e)
    else:
        raise AssertionError("domain guard did not fire")

    rows = landau.remark_chain("R213", [2.5, 5.0, 10.0])
    assert all(row["status"] == "pass" for row in rows), rows

    strip = landau.CorpusMap("vstrip", M=2.0)
    _, a1, b1 = strip.coefficients(n_max=3)[0]
    assert abs(abs(a1) + abs(b1) - 8 / math.pi) < 1e-8

    f = landau.CorpusMap("f_an", M=2.0, a=1.0, n=3)
    assert all(audit["pass"] for audit in f.audits(16))
    lam, big_lam, jac = f.distortion(0.3 + 0.1j)
    assert abs(abs(jac) - lam * big_lam) <= 1e-14 * lam * big_lam

    rep = landau.verify_configuration("T210", M=1.5)
    assert rep["injectivity"]["pass"] and rep["coverage"]["pass"], rep

    classical = landau.CorpusMap("landau_classic", M=2.0)
    r0 = 1 / (2 + math.sqrt(3))
    assert classical.injectivity_scan(0.99 * r0)["pass"]
    assert classical.schlicht_scan(r0, 0.99 * 2 * r0 * r0)["pass"]

    print("python smoke test passed:", landau.__version__, sorted(landau.theorem_ids()))


if __name__ == "__main__":
    main()
