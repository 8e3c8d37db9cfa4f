#!/usr/bin/env python3
"""Tour of the exact-arithmetic layer: fields, polynomials, factorization."""

from orbitcodes import GF, Poly, factor, gcd, irreducibles, is_irreducible, order

# Fields are presented as F_p[x] modulo a monic irreducible; the default
# modulus is the irreducible with the smallest coefficient code, so GF(4)
# always comes out as F_2[x]/(x^2+x+1).
f4 = GF(2, 2)
print("GF(4) modulus coefficients (ascending):", f4.modulus)

# Elements are integer codes 0..q-1; code 2 is x, code 3 is x+1.
print("x * x in GF(4) =", f4.mul(2, 2), "(x^2 reduces to x+1, which is code 3)")
print("inverse of x in GF(4) =", f4.inv(2))

f2 = GF(2)
f = Poly(f2, [1, 1, 0, 1])  # 1 + x + x^3
print("\nworking over GF(2) with f =", f)
print("f irreducible?", is_irreducible(f))
print("f has multiplicative order", order(f), "(x^7 = 1 mod f, no smaller power)")

print("\nmonic irreducibles over GF(2) by degree:")
for d in (1, 2, 3, 4):
    print(f"  degree {d}:", ", ".join(str(p) for p in irreducibles(f2, d)))

g = Poly(f2, [1, 0, 0, 0, 0, 0, 1])  # x^6 + 1
print("\nfactoring", g, "over GF(2):")
for p, e in factor(g):
    print(f"  ({p})^{e}")
print("gcd(x^6+1, x^3+1) =", gcd(g, Poly(f2, [1, 0, 0, 1])))

f3 = GF(3)
h = Poly(f3, [2, 0, 1])  # x^2 - 1
print("\nover GF(3),", h, "splits as", [(str(p), e) for p, e in factor(h)])
