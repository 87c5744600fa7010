"""Smoke test for the qtab extension module.

Build and install first:  pip install --no-build-isolation -e crates/py
"""

from fractions import Fraction

import qtab


def main():
    pi = qtab.Permutation("513697428")
    assert pi.descents() == [1, 5, 6, 7] and pi.maj() == 19

    p, q = qtab.rs(pi)
    assert p.shape() == q.shape()
    assert qtab.rs_inverse(p, q) == pi
    assert qtab.rs(pi.inverse()) == (q, p)

    assert qtab.j2_series(15)[-1] == 5005
    assert qtab.j_set(qtab.Permutation("2143")) == [0, 1, 2, 3, 4]
    assert qtab.is_j2_set([0, 1, 3]) and not qtab.is_j2_set([0, 2])
    assert qtab.profile([0, 1, 2, 3, 5, 6, 9, 13, 17, 18, 19, 20, 22])[1] == "(2,2',5',4,3,3',2',1)"

    assert qtab.t_count(10) == 9496
    assert sum(qtab.t_poly(6)) == qtab.t_count(6)
    assert sum(qtab.a_poly(4).values()) == 24

    checked, failures = qtab.verify("permcont1", 5)
    assert checked > 0 and failures == []

    half = Fraction(1, 2)
    assert qtab.t_ratio(2, 12) == qtab.t_ratio(half, 12)
    assert abs(qtab.t_ratio(half, 30) - half) < Fraction(1, 10**4)
    assert qtab.qlim1_rhs(qtab.Permutation("21"), 1) == half
    a = qtab.Tableau([[1, 2], [3]])
    assert qtab.m3_rhs(a, 1) == Fraction(1, 3)
    assert qtab.m3_lhs(a, "1/2", 6) == Fraction(qtab.m3_lhs(a, half, 6))
    holds, margin = qtab.check_bound(half)
    assert holds and margin > 0
    shifted, doubled = qtab.eq8_check(1, 500)
    assert abs(shifted - 1) < Fraction(1, 10) and abs(doubled - 1) < Fraction(1, 10)
    assert qtab.conjecture_probe([qtab.Tableau("1")] * 3, 5) == 1

    try:
        qtab.t_ratio(0.5, 3)
    except ValueError:
        pass
    else:
        raise AssertionError("floats must be rejected")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
