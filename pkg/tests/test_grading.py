"""Gradings, homogeneous components, and the star operator."""

import random

import pytest

from grady.grading import (GradedRing, GradingGroup, Hdeg, component_filter,
                           degree_of, homogeneous_components, is_g_ideal,
                           is_homogeneous, star)
from grady.groebner import Ideal, colon, intersect
from grady.poly import GF, QQ, PolynomialRing, parse_polynomial

from conftest import line_with_torsion


def test_grading_group_basics():
    G = GradingGroup(1, (2,))
    assert G.degree((3,), (5,)) == Hdeg((3,), (1,))   # residue reduced
    a = G.degree((1,), (1,))
    assert G.add(a, a) == Hdeg((2,), (0,))
    assert G.scale(a, 3) == Hdeg((3,), (1,))
    assert G.zero == Hdeg((0,), (0,))
    with pytest.raises(ValueError):
        G.degree((1, 2), (0,))
    with pytest.raises(ValueError):
        GradingGroup(-1)
    with pytest.raises(ValueError):
        GradingGroup(0, (1,))


def test_graded_ring_validation(Rxy):
    G = GradingGroup(1, ())
    with pytest.raises(ValueError):
        GradedRing(Rxy, G, [((1,), ())])    # one degree missing


def test_homogeneous_components(Rxy, fine_xy):
    f = parse_polynomial("x^2*y^2 + x*y^3 + x^2", Rxy)
    comps = homogeneous_components(f, fine_xy)
    assert len(comps) == 3
    assert comps[Hdeg((2, 2), ())] == parse_polynomial("x^2*y^2", Rxy)
    assert is_homogeneous(parse_polynomial("x^2*y^2", Rxy), fine_xy)
    assert not is_homogeneous(f, fine_xy)
    assert degree_of(f, fine_xy) is None
    assert degree_of(parse_polynomial("x*y^3", Rxy), fine_xy) == \
        Hdeg((1, 3), ())


def test_is_g_ideal(q_ideal, q_star, fine_xy):
    assert not is_g_ideal(q_ideal, fine_xy)
    assert is_g_ideal(q_star, fine_xy)


def test_component_filter_is_contained_in_star(q_ideal, fine_xy):
    F = component_filter(q_ideal, fine_xy)
    S = star(q_ideal, fine_xy)
    assert F <= S and S <= q_ideal


def test_star_of_running_example(q_ideal, q_star, fine_xy):
    assert star(q_ideal, fine_xy) == q_star
    assert q_ideal != q_star


def test_star_on_the_torus_line():
    ring = PolynomialRing(QQ, ("t",))
    graded = GradedRing(ring, GradingGroup(1, ()), [((1,), ())])
    assert star(Ideal(ring, ["t - 1"]), graded).is_zero


@pytest.mark.parametrize("field", [QQ, GF(5)])
def test_star_under_torsion_two(field):
    ring, graded = line_with_torsion(field, 2)
    S = star(Ideal(ring, ["x - 1"]), graded)
    assert S == Ideal(ring, ["x^2 - 1"])


def test_star_under_torsion_three():
    ring, graded = line_with_torsion(QQ, 3)
    S = star(Ideal(ring, ["x - 1"]), graded)
    assert S == Ideal(ring, ["x^3 - 1"])


def test_star_fixes_monomial_ideals(Rxy):
    graded = GradedRing(Rxy, GradingGroup(1, (2,)),
                        [((2,), (1,)), ((-1,), (0,))])
    I = Ideal(Rxy, ["x^2", "x*y^3"])
    assert star(I, graded) == I


def test_star_with_mixed_grading(Rxy):
    graded = GradedRing(Rxy, GradingGroup(1, (2,)),
                        [((1,), (1,)), ((1,), (0,))])
    I = Ideal(Rxy, ["x^2 - y^2"])
    assert star(I, graded) == I     # already homogeneous
    J = Ideal(Rxy, ["x - y"])
    S = star(J, graded)
    assert S == Ideal(Rxy, ["x^2 - y^2"])   # forced to even torsion degree


def test_star_of_unit_and_zero(Rxy, fine_xy):
    assert star(Ideal(Rxy, ["1"]), fine_xy).is_unit
    assert star(Ideal(Rxy), fine_xy).is_zero


def test_star_rejects_foreign_ring(Rxy, fine_xy):
    other = PolynomialRing(QQ, ("a",))
    with pytest.raises(ValueError):
        star(Ideal(other, ["a"]), fine_xy)


def _random_setup(rng):
    n = rng.choice((1, 2))
    ring = PolynomialRing(GF(5), ("x", "y")[:n])
    r, s = rng.choice(((1, 0), (0, 1), (1, 1)))
    moduli = (rng.choice((2, 3)),) if s else ()
    group = GradingGroup(r, moduli)
    degs = [(tuple(rng.randint(-2, 2) for _ in range(r)),
             tuple(rng.randrange(m) for m in moduli))
            for _ in range(n)]
    graded = GradedRing(ring, group, degs)

    def rand_poly():
        f = ring.zero()
        for _ in range(rng.randint(1, 2)):
            m = tuple(rng.randint(0, 3) for _ in range(n))
            f = f + ring.monomial(m, ring.field.from_int(rng.randint(1, 4)))
        return f

    return ring, graded, rand_poly


def test_star_laws_random_sample():
    rng = random.Random(42)
    done = 0
    while done < 25:
        ring, graded, rand_poly = _random_setup(rng)
        I = Ideal(ring, [rand_poly() for _ in range(rng.randint(1, 2))])
        if I.is_unit:
            continue
        done += 1
        S = star(I, graded)
        assert S <= I
        assert is_g_ideal(S, graded)
        assert star(S, graded) == S
        K = Ideal(ring, [rand_poly()])
        assert star(intersect(I, K), graded) == \
            intersect(S, star(K, graded))
        m = ring.monomial(tuple(rng.randint(0, 2)
                                for _ in range(ring.nvars)))
        assert star(colon(I, m), graded) == colon(S, m)
