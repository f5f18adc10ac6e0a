"""Classical primary decomposition for the two supported classes:
monomial ideals (any number of variables) and univariate ideals.

Run:  python3 demos/02_decomposition.py
"""

from grady import (GF, QQ, Ideal, PolynomialRing, associated_primes,
                   classical_decomposition, minimal_primes,
                   monomial_dimension, monomial_primary_decomposition,
                   monomial_radical, univariate_primary_decomposition)

# ---------------------------------------------------------------------
# Monomial ideals decompose by splitting mixed generators.
R = PolynomialRing(QQ, ("x", "y"))
N = Ideal(R, ["x^4", "x^3*y"])
dec = monomial_primary_decomposition(N)
print("N =", N)
for c in dec.components:
    print(f"  component {c.component}  with radical {c.radical}")
print("intersection check:", dec.intersection() == N)

# ---------------------------------------------------------------------
# The split order is a real choice: different orders may give different
# minimal primary decompositions of the same ideal.
R3 = PolynomialRing(GF(5), ("x", "y", "z"))
I = Ideal(R3, ["x^3*y", "x*y*z", "y^2"])
first = monomial_primary_decomposition(I, split="first")
last = monomial_primary_decomposition(I, split="last")
print("\nsplit='first':", [str(c.component) for c in first.components])
print("split='last' :", [str(c.component) for c in last.components])
print("both are correct:", first.check() and last.check())

# Associated primes do not depend on that choice.
print("Ass =", [str(P) for P in associated_primes(I)])
print("Min =", [str(P) for P in minimal_primes(I)])
print("radical =", monomial_radical(I))
print("dimension =", monomial_dimension(I))

# ---------------------------------------------------------------------
# On a line everything is principal; factoring drives the decomposition.
R5 = PolynomialRing(GF(5), ("x",))
dec = univariate_primary_decomposition(Ideal(R5, ["x^2 * (x - 1)^3"]))
print("\nover F5:")
for c in dec.components:
    print(f"  {c.component}  radical {c.radical}  [{c.status}]")

# Over Q only rational roots can be certified; a nonlinear squarefree
# factor survives as one component marked "assumed".
RQ = PolynomialRing(QQ, ("x",))
dec = univariate_primary_decomposition(Ideal(RQ, ["(x^2 - 2)*(x - 1)^2"]))
print("over Q:")
for c in dec.components:
    print(f"  {c.component}  radical {c.radical}  [{c.status}]")

# The dispatcher picks the right class and refuses everything else.
try:
    classical_decomposition(Ideal(R, ["x^2 + y^3"]))
except Exception as exc:
    print("\nout of class:", type(exc).__name__, "-", exc)
