"""Independent oracle for frozen test values.

Brute-force staircase counting on monomial ideals plus sympy Groebner bases.
Run once; the printed values are pasted into the C++ tests.
"""
import itertools
from math import comb

import sympy as sp


def minimalize(gens):
    gens = sorted(set(gens), key=lambda g: (sum(g), g))
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def product(a, b):
    return minimalize([tuple(x + y for x, y in zip(p, q)) for p in a for q in b])


def power(a, n, nvars):
    r = [tuple([0] * nvars)]
    for _ in range(n):
        r = product(r, a)
    return r


def in_ideal(m, gens):
    return any(all(x >= y for x, y in zip(m, g)) for g in gens)


def monomials(nvars, deg):
    for c in itertools.product(range(deg + 1), repeat=nvars):
        if sum(c) == deg:
            yield c


def colength(gens, nvars, maxdeg=80):
    # number of standard monomials (ideal must be m-primary)
    return sum(1 for d in range(maxdeg) for m in monomials(nvars, d) if not in_ideal(m, gens))


def length_quotient(u, ju, nvars, maxdeg=80):
    return sum(1 for d in range(maxdeg) for m in monomials(nvars, d)
               if in_ideal(m, u) and not in_ideal(m, ju))


def mixed_value(J, fam, n, nvars):
    u = power(J, n[0], nvars)
    for I, k in zip(fam, n[1:]):
        u = product(u, power(I, k, nvars))
    return length_quotient(u, product(J, u), nvars)


m2 = [(1, 0), (0, 1)]
print("golden H(n0,n1) for J=m, I=(x^2,y^3):")
for n0 in range(0, 7):
    print(" ", [mixed_value(m2, [[(2, 0), (0, 3)]], (n0, n1), 2) for n1 in range(0, 7)])
print("closed form n0+2n1+1 check at (4..7)^2:",
      all(mixed_value(m2, [[(2, 0), (0, 3)]], (a, b), 2) == a + 2 * b + 1
          for a in range(4, 8) for b in range(4, 8)))
print("U = m*(x2,y3): ell(U/mU) =", mixed_value(m2, [[(2, 0), (0, 3)]], (1, 1), 2))
print("(x),(y) instance H at (3,2,5):", mixed_value(m2, [[(1, 0)], [(0, 1)]], (3, 2, 5), 2))

for name, J in [("(x^2,y^3)", [(2, 0), (0, 3)]), ("(x^2,y)", [(2, 0), (0, 1)])]:
    seq = [colength(power(J, n, 2), 2) for n in range(1, 10)]
    # second difference of colength = 2!*lead coeff = e
    d2 = [seq[i + 2] - 2 * seq[i + 1] + seq[i] for i in range(len(seq) - 2)]
    print("colength A/J^n for J=", name, seq, "second diffs", d2)

print("graded piece (x^2,y^3) in degree 3:", sum(1 for m in monomials(2, 3) if in_ideal(m, [(2, 0), (0, 3)])))

x, y, z = sp.symbols("x y z")
G = sp.groebner([x**2 + y**2, x * y], x, y, order="grevlex", modulus=32003)
print("GB(x^2+y^2, xy) grevlex:", G.exprs)
G = sp.groebner([x - y, y - x], x, y, order="grevlex", modulus=32003)
print("GB(x-y, y-x):", G.exprs)
print("y^3 reduced:", G.reduce(y**3) if False else sp.groebner([x**2 + y**2, x * y], x, y, order="grevlex", modulus=32003).reduce(y**3))

# free algebra closed form, Example 3.7 style tables (J=m on k[y1..yd])
def free_H(d, t, n):
    val = comb(n[0] + d - 1, d - 1)
    for ti, ni in zip(t, n[1:]):
        val *= comb(ni + ti - 1, ti - 1)
    return val

def mixed_diff(f, k, base):
    total = 0
    for offs in itertools.product(*[range(ki + 1) for ki in k]):
        sign = (-1) ** (sum(k) - sum(offs))
        coef = 1
        for ki, o in zip(k, offs):
            coef *= comb(ki, o)
        total += sign * coef * f(tuple(b + o for b, o in zip(base, offs)))
    return total

for d, t in [(2, (2,)), (3, (2,)), (2, (3,)), (3, (1, 1))]:
    ell = d + sum(ti - 1 for ti in t)
    types = [k for k in itertools.product(range(ell), repeat=len(t) + 1) if sum(k) == ell - 1]
    print("free d=%d t=%s ell=%d" % (d, t, ell),
          {k: mixed_diff(lambda n: free_H(d, t, n), k, (5,) * (len(t) + 1)) for k in types})

# J=(x^2,y) on k[x,y], t=(2,): H = ell(J^n/J^{n+1}) * (m+1)
J = [(2, 0), (0, 1)]
def hj(n):
    return length_quotient(power(J, n[0], 2), power(J, n[0] + 1, 2), 2) * comb(n[1] + 1, 1)
print("free J=(x^2,y) d=2 t=2: e(1,1) =", mixed_diff(hj, (1, 1), (4, 4)))
