"""Fitting ideals of a presentation matrix, and the graded consistency
check for matrices between graded free modules.

Run:  python3 demos/04_fitting.py
"""

from grady import (QQ, GradedRing, GradingGroup, Ideal, PolynomialRing,
                   PresentationMatrix, fitting_ideal, graded_matrix_check,
                   map_entries)

R = PolynomialRing(QQ, ("x", "y"))

# ---------------------------------------------------------------------
# Fitt_j is generated by the (rows - j)-minors, with the conventions
# Fitt_j = (1) once rows - j <= 0 and (0) once the minors outgrow the
# matrix.
M = PresentationMatrix(R, [["x", "y"], ["y", "x"]])
for j in range(-1, 4):
    print(f"Fitt_{j} =", fitting_ideal(M, j))

# A zero presentation of a free module:
Z = PresentationMatrix(R, [["0"], ["0"]])
print("\nzero 2x1 map: Fitt_2 =", fitting_ideal(Z, 2),
      " Fitt_1 =", fitting_ideal(Z, 1))

# ---------------------------------------------------------------------
# With row and column degrees attached, every entry must be homogeneous
# of degree row - column; then all Fitting ideals are homogeneous.
graded = GradedRing(R, GradingGroup(1, ()), [((1,), ()), ((1,), ())])
G = PresentationMatrix(R, [["x", "y"], ["y", "x"]],
                       row_degrees=[((1,), ()), ((1,), ())],
                       col_degrees=[((0,), ()), ((0,), ())])
report = graded_matrix_check(G, graded)
print("\ngraded check:", report["status"])
for check in report["checks"]:
    print(f"  {check['name']}: {check['status']}")

# A wrong entry is reported, not raised:
bad = PresentationMatrix(PolynomialRing(QQ, ("x",)), [["x + 1"]],
                         row_degrees=[((1,), ())],
                         col_degrees=[((0,), ())])
line_graded = GradedRing(PolynomialRing(QQ, ("x",)), GradingGroup(1, ()),
                         [((1,), ())])
print("\nnon-homogeneous entry:",
      graded_matrix_check(bad, line_graded)["status"])

# ---------------------------------------------------------------------
# Fitting ideals commute with specialization; check x -> 0 by hand.
line = PolynomialRing(QQ, ("y",))
spec = map_entries(M, lambda f: f.substitute({"x": 0}).map_to(line),
                   ring=line)
for j in (0, 1):
    image = Ideal(line, [f.substitute({"x": 0}).map_to(line)
                         for f in fitting_ideal(M, j).generators])
    print(f"Fitt_{j} specializes consistently:",
          image == fitting_ideal(spec, j))
