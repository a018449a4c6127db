"""Smoke test for the pyqf48 extension.

Build and install first:

    pip install maturin
    maturin build --release -m crates/py/Cargo.toml
    pip install target/wheels/pyqf48-*.whl

then run `python python/smoke_test.py`.
"""

import json
from fractions import Fraction

import pyqf48


def brute_count(coeffs, family, n):
    # independent enumeration in Python, small n only
    count = 0
    r = int(n**0.5) + 1
    rng = range(-r, r + 1)
    if family == "q1":
        a, b, c, d = coeffs
        for x in rng:
            for y in rng:
                for z in rng:
                    for w in rng:
                        if a * x * x + b * y * y + c * z * z + d * w * w == n:
                            count += 1
    else:
        raise ValueError(family)
    return count


def main():
    assert pyqf48.kronecker_symbol(-4, 3) == -1
    assert pyqf48.kronecker_symbol(8, 3) == -1
    assert len(pyqf48.catalogue()) == 124

    for space, dim in [("chi0", 14), ("chi8", 12), ("chi12", 14), ("chi24", 12)]:
        assert pyqf48.basis_rank(space, 60) == dim
        assert len(pyqf48.basis_names(space)) == dim

    f = pyqf48.QuadForm("q1:1,1,1,4")
    assert f.space == "chi0"
    assert f.count(1) == 6
    theta = f.theta(30)
    for n in range(12):
        assert theta[n] == brute_count(f.coefficients, "q1", n), n

    dec = f.decompose(60)
    assert dec.coefficients[2] == Fraction(5, 8)
    assert dec.coefficients[9] == 2
    for n in (1, 7, 250):
        assert dec.coefficient_at(n) == f.count(n), n

    q2 = pyqf48.QuadForm("q2:1,2")
    assert pyqf48.evaluate("N2_1_2", 9) == q2.count(9)
    assert pyqf48.evaluate("N1_1_2_4_4_closed", 20) == pyqf48.QuadForm("q1:1,2,4,4").count(20)

    phi = pyqf48.expand("phi(1,2)", 10)
    assert phi[0] == 1 and phi[1] == 24

    report = json.loads(pyqf48.verify_tables(["C"], 60))
    assert len(report) == 4 and all(not r["diffs"] for r in report)

    try:
        pyqf48.QuadForm("q7:1")
    except ValueError:
        pass
    else:
        raise AssertionError("malformed form accepted")

    print("pyqf48 smoke test ok")


if __name__ == "__main__":
    main()
