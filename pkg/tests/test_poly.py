import random
from fractions import Fraction

import pytest

from skewrec import (
    ConjClass,
    FieldContext,
    LeftPoly,
    NoRootsFound,
    OctonionAlgebra,
    QuaternionAlgebra,
    UnsupportedDegree,
    companion_poly,
    conj_class,
    divide_by_linear,
    factor_central_quartic,
    quadratic_roots,
)
from conftest import rand_quat, rand_invertible_quat

Q = FieldContext.rational()
H = QuaternionAlgebra(-1, -1)
I, J, K = H.e1, H.e2, H.e3


def x_minus(lam):
    return LeftPoly.x_minus(lam)


def test_product_order_matters():
    assert x_minus(J) * x_minus(I) == LeftPoly(H, [-K, -(I + J), 1])
    assert x_minus(I) * x_minus(J) == LeftPoly(H, [K, -(I + J), 1])
    p = LeftPoly(H, [1 + K, -I, 1])
    one = LeftPoly(H, [1])
    assert p * one == p and one * p == p


def test_left_evaluation():
    p = LeftPoly(H, [1 + K, -I, 1])  # x^2 - i x + (1 + ij)
    assert p.eval(J).is_zero()
    assert p.eval(I + J).is_zero()
    assert p.eval(I) == 1 + K  # nonzero: e1 is not a root


def test_conjugate_polynomial():
    p = LeftPoly(H, [1 + K, -I, 1])
    assert p.conj() == LeftPoly(H, [1 - K, I, 1])
    assert p.conj().conj() == p
    central = LeftPoly(H, [2, -3, 1])
    assert central.conj() == central


def test_companion_polynomial():
    p = LeftPoly(H, [-K, -(I + J), 1])  # x^2 - (i+j)x - ij
    assert companion_poly(p) == LeftPoly(Q, [1, 0, 2, 0, 1])  # (x^2+1)^2
    assert companion_poly(x_minus(I)) == LeftPoly(Q, [1, 0, 1])


def test_companion_polynomial_central_random():
    rng = random.Random(13)
    for _ in range(50):
        p = x_minus(rand_quat(rng, H)) * x_minus(rand_quat(rng, H))
        c = companion_poly(p)
        assert isinstance(c.carrier, FieldContext)
        assert c == companion_poly(p.conj())


def test_companion_polynomial_octonion():
    O = OctonionAlgebra(-1, -1, -1)
    alpha = -1 - O.element([0, 0, 0, 1, 0, 0, 0, 0])
    beta = O.element([0, 1, 0, 0, 0, 0, 0, 0])
    p = LeftPoly(O, [-alpha, -beta, 1])
    c = companion_poly(p)
    assert c == LeftPoly(Q, [2, 0, 3, 0, 1])  # (x^2+1)(x^2+2)


def test_divide_by_linear():
    p = LeftPoly(H, [-K, -(I + J), 1])
    g, r = divide_by_linear(p, I)
    assert g == x_minus(J) and r.is_zero()
    g, r = divide_by_linear(LeftPoly(H, [1, 0, 1]), H.one())
    assert r == 2
    const = LeftPoly(H, [J])
    g, r = divide_by_linear(const, I)
    assert g.is_zero() and r == J


def test_divide_by_linear_roundtrip():
    rng = random.Random(37)
    for _ in range(60):
        p = LeftPoly(H, [rand_quat(rng, H) for _ in range(4)])
        lam = rand_quat(rng, H)
        g, r = divide_by_linear(p, lam)
        assert g * x_minus(lam) + LeftPoly(H, [r]) == p
        assert r == p.eval(lam)


def test_factor_central_quartic_examples():
    assert factor_central_quartic(LeftPoly(Q, [1, 0, 2, 0, 1])) == [
        (LeftPoly(Q, [1, 0, 1]), 2)
    ]
    assert factor_central_quartic(LeftPoly(Q, [-1, 0, 0, 0, 1])) == [
        (LeftPoly(Q, [-1, 1]), 1),
        (LeftPoly(Q, [1, 1]), 1),
        (LeftPoly(Q, [1, 0, 1]), 1),
    ]
    assert factor_central_quartic(LeftPoly(Q, [1, 0, 0, 0, 1])) == [
        (LeftPoly(Q, [1, 0, 0, 0, 1]), 1)
    ]
    # biquadratic with a nontrivial cross split
    assert factor_central_quartic(LeftPoly(Q, [4, 0, 0, 0, 1])) == [
        (LeftPoly(Q, [2, -2, 1]), 1),
        (LeftPoly(Q, [2, 2, 1]), 1),
    ]


def test_factor_central_quartic_random_roundtrip():
    rng = random.Random(41)
    pool = [
        LeftPoly(Q, [Fraction(rng.randint(-4, 4)), 1]),
        LeftPoly(Q, [1, 0, 1]),
        LeftPoly(Q, [1, 1, 1]),
        LeftPoly(Q, [2, -2, 1]),
        LeftPoly(Q, [Fraction(1, 2), 1]),
    ]
    for _ in range(120):
        nfac = rng.randint(1, 4)
        chosen = []
        prod = LeftPoly(Q, [1])
        for _ in range(nfac):
            f = rng.choice(pool)
            if prod.degree + f.degree > 4:
                continue
            chosen.append(f)
            prod = prod * f
        if prod.degree < 1:
            continue
        factors = factor_central_quartic(prod)
        rebuilt = LeftPoly(Q, [1])
        for f, mult in factors:
            for _ in range(mult):
                rebuilt = rebuilt * f
        assert rebuilt == prod
        for f, _ in factors:
            assert f.is_monic()


def test_factor_degree_guard():
    with pytest.raises(UnsupportedDegree):
        factor_central_quartic(LeftPoly(Q, [1, 0, 0, 0, 0, 1]))
    with pytest.raises(ValueError):
        factor_central_quartic(LeftPoly(Q, [1, 2]) * LeftPoly(Q, [1, 2]))  # not monic


def test_quadratic_roots_two_distinct_classes():
    p = LeftPoly(H, [1 + K, -I, 1])
    rep = quadratic_roots(H, p)
    assert [lam for lam, _ in rep.isolated] == [J, I + J]
    assert rep.isolated[0][1] == ConjClass(t=Q.zero(), n=Q.one())
    assert rep.isolated[1][1] == ConjClass(t=Q.zero(), n=Q.scalar(2))
    assert rep.jordan is None and rep.spherical is None


def test_quadratic_roots_jordan():
    p = LeftPoly(H, [-K, -(I + J), 1])
    rep = quadratic_roots(H, p)
    assert [lam for lam, _ in rep.isolated] == [I]
    assert rep.jordan == (I, 2)
    g, r = divide_by_linear(p, I)
    assert r.is_zero() and g == x_minus(J)  # forced split (x - j)(x - i)


def test_quadratic_roots_spherical():
    p = LeftPoly(H, [1, 0, 1])  # x^2 + 1
    rep = quadratic_roots(H, p)
    assert rep.spherical is not None
    cls, (lam, mu) = rep.spherical
    assert cls == ConjClass(t=Q.zero(), n=Q.one())
    assert (lam, mu) == (I, -I)
    assert not rep.isolated


def test_quadratic_roots_central_rational():
    p = x_minus(H.scalar(1)) * x_minus(H.scalar(2))
    rep = quadratic_roots(H, p)
    assert sorted(lam.scalar_part().u for lam, _ in rep.isolated) == [1, 2]


def test_quadratic_roots_none():
    p = LeftPoly(H, [-I, 0, 1])  # x^2 - i, companion quartic x^4 + 1
    with pytest.raises(NoRootsFound):
        quadratic_roots(H, p)


def test_quadratic_roots_planted_root_recovered():
    # one factor root is always recovered, whatever the second factor does
    rng = random.Random(43)
    for _ in range(60):
        lam = rand_quat(rng, H)
        mu = rand_quat(rng, H)
        if lam.is_zero() or mu.is_zero():
            continue
        p = x_minus(mu) * x_minus(lam)
        rep = quadratic_roots(H, p)
        roots = [r for r, _ in rep.isolated]
        if rep.jordan:
            roots.append(rep.jordan[0])
        if rep.spherical:
            roots.extend(rep.spherical[1])
        assert any(r == lam for r in roots) or (
            rep.spherical is not None and conj_class(lam) == rep.spherical[0]
        )


def test_quadratic_roots_report_invariants():
    rng = random.Random(47)
    checked = 0
    for _ in range(40):
        lam, mu = rand_quat(rng, H), rand_quat(rng, H)
        if lam.is_zero() or mu.is_zero():
            continue
        p = x_minus(mu) * x_minus(lam)
        rep = quadratic_roots(H, p)
        comp = companion_poly(p)
        for root, cls in rep.isolated:
            assert p.eval(root).is_zero()
            # the root's class shows up among the central factors
            match = False
            for f, _ in rep.central_factors:
                if f.degree == 2 and cls == ConjClass(t=-f.coeffs[1], n=f.coeffs[0]):
                    match = True
                if f.degree == 1 and cls == ConjClass(central=-f.coeffs[0]):
                    match = True
            assert match
            assert LeftPoly(H, list(comp.coeffs)).eval(root).is_zero()
        checked += 1
    assert checked > 30


def test_quadratic_roots_at_most_two_per_class():
    rng = random.Random(53)
    for _ in range(40):
        lam, mu = rand_quat(rng, H), rand_quat(rng, H)
        if lam.is_zero() or mu.is_zero():
            continue
        rep = quadratic_roots(H, x_minus(mu) * x_minus(lam))
        seen = {}
        for _root, cls in rep.isolated:
            seen[cls] = seen.get(cls, 0) + 1
        assert all(v <= 2 for v in seen.values())
