#!/usr/bin/env python3
"""Independent oracle for the cubic-with-given-contour example.

Solves  H1*D_a(G1) + H2*D_a(G2) = L1*G1 + L2*G2  for linear H_i and
constant L_i with sympy linear algebra, then checks every candidate F
through ideal membership (D_a F in (G1, G2)) with a Groebner basis.

Prints the solution space and the verdict on the printed data. Run:
    python3 tests/oracles/example1_oracle.py
"""

import sympy as sp

x = sp.symbols("x0:4")
G1 = x[0] ** 2 - x[1] ** 2 - x[2] ** 2 + x[3] ** 2
G2 = x[1] ** 2 + x[2] ** 2 + x[3] ** 2 - 2 * x[0] * x[1]
a = (1, -1, 0, -1)


def D(f):
    return sum(ai * sp.diff(f, xi) for ai, xi in zip(a, x))


alpha = sp.symbols("alpha0:4")
beta = sp.symbols("beta0:4")
gamma, delta = sp.symbols("gamma delta")
H1 = sum(c * xi for c, xi in zip(alpha, x))
H2 = sum(c * xi for c, xi in zip(beta, x))
expr = sp.expand(H1 * D(G1) + H2 * D(G2) - gamma * G1 - delta * G2)
eqs = sp.Poly(expr, *x).coeffs()
unknowns = list(alpha) + list(beta) + [gamma, delta]
sol = sp.linsolve(eqs, unknowns)
(vec,) = sol
free = sorted(set().union(*(sp.sympify(v).free_symbols for v in vec)), key=str)
print("solution dimension:", len(free))
subs = {free[0]: 1}
h1 = sp.expand(H1.subs(dict(zip(unknowns, vec))).subs(subs))
h2 = sp.expand(H2.subs(dict(zip(unknowns, vec))).subs(subs))
print("H1 =", h1)
print("H2 =", h2)
F = sp.expand(h1 * G1 + h2 * G2)
print("F  =", F)

GB = sp.groebner([G1, G2], *x, order="grevlex")


def contour_in_ideal(f):
    return GB.reduce(sp.expand(D(f)))[1] == 0


printed_H = (x[0] - 2 * x[1] - x[3], x[0] + x[1] - x[3])
printed_F = (-x[0] ** 3 - x[1] ** 3 + 2 * x[0] * x[2] ** 2 - x[1] * x[2] ** 2 + x[0] ** 2 * x[3]
             + 2 * x[0] * x[1] * x[3] - 2 * x[1] ** 2 * x[3] - 2 * x[2] ** 2 * x[3] + 3 * x[0] * x[3] ** 2)
corrected_F = printed_F - 3 * x[0] * x[3] ** 2 + 3 * x[1] * x[3] ** 2

print("printed H-sum is a solution:", contour_in_ideal(printed_H[0] * G1 + printed_H[1] * G2))
print("printed F is a solution:", contour_in_ideal(printed_F))
print("corrected F is a solution:", contour_in_ideal(corrected_F))
print("corrected F proportional to oracle F:", sp.simplify(corrected_F / F).is_constant())
