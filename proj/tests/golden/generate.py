#!/usr/bin/env python3
"""Regenerates the P_k / PP_k golden tables with sympy.

Independent of the C++ library: the formula is evaluated as a rational
function, and each P_k is cross-checked against a brute-force descent
census of small B_{n,k} before it is written.
"""
import itertools
import json
import pathlib

import sympy as sp

u, x = sp.symbols("u x")
KMAX = 8
HERE = pathlib.Path(__file__).resolve().parent


def eulerian(n):
    if n == 0:
        return sp.Integer(1)
    total = sp.Integer(0)
    for perm in itertools.permutations(range(n)):
        d = sum(perm[i] > perm[i + 1] for i in range(n - 1))
        total += x**d
    return sp.expand(total)


EULER = [eulerian(n) for n in range(KMAX + 1)]


def formula(k, modulus):
    um = u**modulus
    expr = 0
    for j in range(k + 1):
        inner = sum(sp.binomial(i, j) * u**-i for i in range(j, k + 1))
        expr += EULER[k - j].subs(x, um) * (um - 1) ** j * inner
    expr = sp.cancel(sp.together(sp.expand(expr)))
    poly = sp.Poly(expr, u)
    return [int(c) for c in reversed(poly.all_coeffs())]


def census(n, k):
    counts = {}
    for perm in itertools.permutations(range(1, n + 1)):
        if max(i + 1 - p for i, p in enumerate(perm)) > k:
            continue
        d = sum(perm[i] > perm[i + 1] for i in range(n - 1))
        counts[d] = counts.get(d, 0) + 1
    return [counts.get(d, 0) for d in range(max(counts) + 1)]


def multisect_check(p, k):
    geo = sp.Poly(sum(u**i for i in range(k + 1)), u)
    base = sp.Poly(sum(c * u**i for i, c in enumerate(p)), u)
    for n in range(max(k, 1), min(k + 3, 8) + 1):
        full = [int(c) for c in reversed((base * geo ** (n - k)).all_coeffs())]
        got = full[:: k + 1]
        while got and got[-1] == 0:
            got.pop()
        assert got == census(n, k), (k, n)


def main():
    note = (
        "Row k holds the coefficients of P_k (degree k^2) or PP_k (degree k^2+k), "
        "lowest power first, as decimal strings. Some published tables list these "
        "polynomials one row lower (the row labelled k shows degree (k-1)^2); the "
        "values here follow the defining formula, so P_1 = 1+u and P_2 = 1+u+2u^2+u^3+u^4."
    )
    p_rows, pp_rows = [], []
    for k in range(KMAX + 1):
        p = formula(k, k + 1)
        pp = formula(k, k + 2)
        assert len(p) == k * k + 1 and len(pp) == k * k + k + 1
        multisect_check(p, k)
        p_rows.append({"k": k, "coefficients": [str(c) for c in p]})
        pp_rows.append({"k": k, "coefficients": [str(c) for c in pp]})
    for name, rows in (("pk_table.json", p_rows), ("pp_table.json", pp_rows)):
        doc = {"note": note, "rows": rows}
        (HERE / name).write_text(json.dumps(doc, indent=2) + "\n")

    # Degenerate corner of the a,b identity: both sides at a = b = 0.
    lhs = EULER[0]
    rhs = x * EULER[0] + sp.binomial(0, 0) * (1 - x)
    corner = {
        "note": "Both sides of the a,b Eulerian identity at a = b = 0, expanded in x.",
        "a": 0,
        "b": 0,
        "lhs": str(sp.expand(lhs)),
        "rhs": str(sp.expand(rhs)),
        "residual": [str(c) for c in sp.Poly(sp.expand(lhs - rhs), x).all_coeffs()[::-1]]
        if sp.expand(lhs - rhs) != 0 else [],
    }
    (HERE / "ab_identity_corner.json").write_text(json.dumps(corner, indent=2) + "\n")


if __name__ == "__main__":
    main()
