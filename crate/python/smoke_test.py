"""Smoke test for the invariant_lab_py extension module.

Build the module first, e.g.

    cargo build --release -p invariant-lab-py --features extension-module
    cp target/release/libinvariant_lab_py.so python/invariant_lab_py.so
    python3 python/smoke_test.py

or `maturin develop -m crates/python/Cargo.toml`.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import invariant_lab_py as il


def main():
    rep = il.invariants_of(15)
    assert rep.invariants == [0, 1, 6, 10], rep
    assert rep.paper_invariants == [1, 6, 10, 15]
    assert rep.paper_anti_invariants == [14, 9, 5, 0]
    assert rep.paper_tuples == [(0, 1), (5, 6), (9, 10), (14, 15)]
    assert len(rep) == 4
    assert il.enumerate_invariants_bruteforce(15).invariants == rep.invariants

    assert il.is_invariant(6, 15) and not il.is_invariant(7, 15)
    assert il.is_anti_invariant(0, 15)
    assert il.anti_of(6, 15) == 9
    assert il.tuples_of(35) == [(34, 0), (0, 1), (14, 15), (20, 21)]
    assert il.power_stability_check(10, 15, 48)

    cert = il.certify_composite(36, 105)
    assert (cert.factor_a, cert.factor_b) == (3, 35)
    assert il.primality_by_invariants(15).witness == 6
    assert il.primality_by_invariants(49) is None

    assert il.euler_phi(105) == 48
    assert il.generalized_euler_residue(3, 105) == 36
    assert il.expected_idempotent(35, 105) == 70
    assert (35, 70) in il.euler_classification(105)
    assert il.verify_generalization(105)
    assert il.multiplier_exponent_check(5, 35, 1)

    t = il.subgroup_table(35, 5)
    assert t.table[0] == [25, 15, 5, 30, 20, 10]
    assert (t.identity, t.anti_identity) == (15, 20)
    assert (5, 10) in t.inverses

    assert il.omega_paper(561) == 80
    assert il.carmichael_lambda(8) == 2
    rec = il.hypothesis_check(561)
    assert (rec.ratio, rec.korselt, rec.fermat_verified) == (7, True, True)
    assert [r.m for r in il.scan_carmichael(2, 2000)] == [561, 1105, 1729]
    assert il.factorize(561) == [(3, 1), (11, 1), (17, 1)]
    assert il.crt_combine([(0, 5), (1, 7)]) == (15, 35)
    g, u, v = il.extended_gcd(5, 7)
    assert u * 5 + v * 7 == g == 1

    for bad in (lambda: il.anti_of(7, 15), lambda: il.subgroup_table(35, 6)):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")
    try:
        il.enumerate_invariants_bruteforce(101, bound=100)
    except il.BoundExceeded:
        pass
    else:
        raise AssertionError("expected BoundExceeded")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
