"""Tour of the star operator: the largest homogeneous ideal inside a
given ideal, for gradings by Z^r plus torsion.

Run:  python3 demos/01_star_basics.py
"""

from grady import (GF, QQ, GradedRing, GradingGroup, Ideal, PolynomialRing,
                   homogeneous_components, is_g_ideal, star)

# ---------------------------------------------------------------------
# The running example: k[x, y] with its fine Z^2 grading, deg x = (1,0),
# deg y = (0,1).  Homogeneous then means "generated by monomials".
R = PolynomialRing(QQ, ("x", "y"))
fine = GradedRing(R, GradingGroup(2, ()), [((1, 0), ()), ((0, 1), ())])

q = Ideal(R, ["x^4", "x^3*y", "x^2*y^2+x*y^3", "y^4"])
print("q  =", q)
print("is q homogeneous?", is_g_ideal(q, fine))

# the mixed generator splits into two components, neither inside q alone
mixed = q.generators[2]
for deg, comp in homogeneous_components(mixed, fine).items():
    print(f"  component of {mixed} in degree {deg}: {comp}")

qs = star(q, fine)
print("q* =", qs)
print("q* is homogeneous:", is_g_ideal(qs, fine))
print("q* is strictly smaller:", qs != q and qs <= q)

# ---------------------------------------------------------------------
# A free Z-grading with no torsion can leave nothing behind: on k[t]
# with deg t = 1 the only homogeneous polynomials in (t - 1) are 0.
Rt = PolynomialRing(QQ, ("t",))
torus = GradedRing(Rt, GradingGroup(1, ()), [((1,), ())])
print("\nstar((t - 1)) under deg t = 1:", star(Ideal(Rt, ["t - 1"]), torus))

# ---------------------------------------------------------------------
# Torsion changes the picture: grade k[x] by Z/2 with deg x = 1.  Now
# even polynomials are homogeneous, and (x - 1) contains x^2 - 1.
for field, label in ((QQ, "Q"), (GF(5), "F5")):
    Rx = PolynomialRing(field, ("x",))
    z2 = GradedRing(Rx, GradingGroup(0, (2,)), [((), (1,))])
    print(f"star((x - 1)) over {label} under Z/2:",
          star(Ideal(Rx, ["x - 1"]), z2))

# Bigger torsion keeps more: under Z/3 the answer is (x^3 - 1).
Rx = PolynomialRing(QQ, ("x",))
z3 = GradedRing(Rx, GradingGroup(0, (3,)), [((), (1,))])
print("star((x - 1)) under Z/3:", star(Ideal(Rx, ["x - 1"]), z3))

# ---------------------------------------------------------------------
# Monomial ideals are homogeneous for every grading, so star fixes them.
weird = GradedRing(R, GradingGroup(1, (2,)), [((2,), (1,)), ((-1,), (0,))])
I = Ideal(R, ["x^2", "x*y^3"])
print("\nmonomial ideal is star-fixed:", star(I, weird) == I)
