#!/usr/bin/env python3
"""Regenerate the golden series files with plain Fraction arithmetic."""

import json
import sys
from fractions import Fraction as F
from itertools import combinations
from pathlib import Path

OUT = Path(__file__).resolve().parent / "data"


def trunc(p, order):
    p = list(p[: order + 1])
    return p + [F(0)] * (order + 1 - len(p))


def add(p, q):
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]


def mul(p, q, order):
    out = [F(0)] * (order + 1)
    for i, x in enumerate(p[: order + 1]):
        if x:
            for j, y in enumerate(q[: order + 1 - i]):
                out[i + j] += x * y
    return out


def pmul(p, q):
    return mul(p, q, len(p) + len(q) - 2)


def mono(c, e):
    return [F(0)] * e + [F(c)]


def inverse(p, order):
    p = trunc(p, order)
    out = [F(0)] * (order + 1)
    out[0] = 1 / p[0]
    for n in range(1, order + 1):
        out[n] = -sum(p[k] * out[n - k] for k in range(1, n + 1)) / p[0]
    return out


def fmt(x):
    x = F(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def dump(name, coeffs, order, scale=1):
    coeffs = trunc(coeffs, order)
    (OUT / f"{name}.json").write_text(
        json.dumps({"coeffs": [fmt(c) for c in coeffs], "order": order, "scale": scale}) + "\n"
    )


def convergent(terms, b0, N):
    # A_{-1} = 1, A_0 = b0, B_{-1} = 0, B_0 = 1
    A_prev, A = [F(1)], list(b0)
    B_prev, B = [F(0)], [F(1)]
    for n in range(1, N + 1):
        a_n, b_n = terms(n)
        A, A_prev = add(pmul(b_n, A), pmul(a_n, A_prev)), A
        B, B_prev = add(pmul(b_n, B), pmul(a_n, B_prev)), B
    return A, B


def gaussian_by_subsets(n, m):
    c = [0] * (m * (n - m) + 1)
    for s in combinations(range(1, n + 1), m):
        c[sum(s) - m * (m + 1) // 2] += 1
    return [F(x) for x in c]


def main():
    OUT.mkdir(exist_ok=True)
    dump("gaussian_12_5", gaussian_by_subsets(12, 5), 35)

    # (q/2; q)_6
    p = [F(1)]
    for k in range(1, 7):
        p = mul(p, add([F(1)], mono(F(-1, 2), k)), 40)
    dump("poch_half_6", p, 30)

    # sum q^(n^2 + n) / (q;q)_n
    order = 60
    total = [F(0)] * (order + 1)
    poch = [F(1)]
    n = 0
    while n * n + n <= order:
        if n:
            poch = mul(poch, add([F(1)], mono(-1, n)), order)
        total = add(total, mul(mono(1, n * n + n), inverse(poch, order), order))
        n += 1
    dump("rr_H_60", total, order)

    # 1/1 + (-ab+cq)/(a+b+dq) + ... with fixed rational parameters
    a, b, c, d = F(1, 2), F(-3), F(2, 3), F(5)

    def h_terms(n):
        if n == 1:
            return [F(1)], [F(1)]
        k = n - 1
        return add([-a * b], mono(c, k)), add([a + b], mono(d, k))

    A, B = convergent(h_terms, [F(0)], 6)
    dump("H_A6", A, 40)
    dump("H_B6", B, 40)

    def h1_terms(n):
        if n == 1:
            return [F(1)], [F(1)]
        k = n - 2
        return add(mono(-a * b, 2 * k + 1), mono(c, k)), add(mono(a + b, k + 1), [d])

    C, D = convergent(h1_terms, [F(0)], 6)
    dump("H1_C6", C, 40)
    dump("H1_D6", D, 40)

    def q2q3_terms(n):
        if n == 1:
            return [F(1)], [F(1)]
        return mono(-1, 2 * n - 3), add([F(1)], mono(1, n - 1))

    A, B = convergent(q2q3_terms, [F(0)], 12)
    dump("Q2Q3_ratio12", mul(A, inverse(B, 25), 25), 25)
    return 0


if __name__ == "__main__":
    sys.exit(main())
