"""Writes tests/support/frozen_factor_degrees.inc from sympy's factorizations of
x^m - r over GF(p). Rerun only to regenerate; the output is checked in."""

import sympy
from sympy import Poly, symbols

x = symbols("x")
rows = []
for p in sympy.primerange(2, 32):
    for m in range(1, 7):
        for r in range(p):
            _, factors = Poly(x**m - r, x, modulus=p).factor_list()
            degs = sorted((f.degree(), e) for f, e in factors)
            flat = ", ".join("{%d, %d}" % d for d in degs)
            rows.append("    {%d, %d, %d, {%s}}," % (p, m, r, flat))

with open("tests/support/frozen_factor_degrees.inc", "w") as out:
    out.write("// Generated by tests/scripts/freeze_factor_degrees.py (sympy). Do not edit.\n")
    out.write("// {p, m, r, {{degree, multiplicity}, ...}} for x^m - r over F_p.\n")
    out.write("\n".join(rows) + "\n")
print(len(rows))
