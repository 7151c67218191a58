#!/usr/bin/env python3
"""Brute-force reference values frozen into the unit tests under tests/.

Everything here is computed from scratch with fractions.Fraction: orbit
points are sorted to find atoms, no closed forms are used.
"""
from fractions import Fraction as F


def cf_value(elements):
    x = F(0)
    for e in reversed(elements):
        x = 1 / (e + x)
    return x


def frac(x):
    return x - (x.numerator // x.denominator)


def nearest(x):
    f = frac(x)
    return min(f, 1 - f)


def denominators(elements):
    q = [1, elements[0]]
    for e in elements[1:]:
        q.append(e * q[-1] + q[-2])
    return q


def undetermined(alpha, j):
    """Atom of the step-j partition split by the next boundary {-(j+1)alpha}."""
    bounds = sorted({frac(-i * alpha) for i in range(-1, j + 1)})
    p = frac(-(j + 1) * alpha)
    for k, lo in enumerate(bounds):
        hi = bounds[k + 1] if k + 1 < len(bounds) else F(1)
        if lo <= p < hi:
            return lo, hi
    raise AssertionError


def contains(arc, x):
    lo, hi = arc
    return lo <= x < hi


def show(name, value):
    if isinstance(value, F):
        print(f"{name} = {value.numerator}/{value.denominator}  ~ {float(value):.12f}")
    else:
        print(f"{name} = {value}")


def main():
    golden = cf_value([1] * 40 + [10**6])
    q = denominators([1] * 40)
    show("golden-40", golden)
    theta = [abs(q[k] * golden - round(q[k] * golden)) for k in range(8)]
    show("theta_3", theta[3])
    show("theta_4", theta[4])
    show("theta_5", theta[5])
    show("<<6a>>", nearest(6 * golden))
    show("{8a}", frac(8 * golden))
    v6 = undetermined(golden, 6)
    show("V_6 left", v6[0])
    show("V_6 right", v6[1])
    show("V_6 length", v6[1] - v6[0])
    for j in (0, 1, 2, 3):
        lo, hi = undetermined(golden, j)
        show(f"V_{j} length", hi - lo)

    total = sum((hi - lo for lo, hi in (undetermined(golden, j) for j in range(1, 89))), F(0))
    show("sum_{j=1}^{88} lambda(V_j)", total)

    x = F(1, 3)
    arcs = [undetermined(golden, j) for j in range(1, 81)]
    show("count(1/3, 80)", sum(contains(a, x) for a in arcs))
    show("sum_{j=1}^{80}", sum((hi - lo for lo, hi in arcs), F(0)))

    # Kesten example: {-l alpha} for l in J^4_1 = [5, 8) inside [0, 1/2)
    show("kesten [0,1/2) J^4_1", sum(frac(-l * golden) < F(1, 2) for l in range(5, 8)))

    # h_4 = sum over depths 8..12 (J^4_2) of the arc lengths, depth d = step d - 2
    h4 = sum((hi - lo for lo, hi in (undetermined(golden, d - 2) for d in range(8, 13))), F(0))
    show("h_4", h4)
    show("q_4 theta_3", 5 * theta[3])

    two = cf_value([2, 2, 10**6])
    show("[2,2] value", two)
    q2 = denominators([2, 2])
    show("[2,2] sum_{j=1}^{q_2-1}", sum((hi - lo for lo, hi in (undetermined(two, j) for j in range(1, q2[2]))), F(0)))

    a = F(2, 5)
    show("code(2/5, 0, 5)", "".join("0" if frac(i * a) < a else "1" for i in range(5)))


if __name__ == "__main__":
    main()
