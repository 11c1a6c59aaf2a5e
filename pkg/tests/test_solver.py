import random
from fractions import Fraction

import pytest

from skewrec import (
    NoRepresentative,
    AssocForm,
    FieldContext,
    LeftPoly,
    LamViolation,
    NoRootsFound,
    OctSplitForm,
    OctonionAlgebra,
    QuaternionAlgebra,
    RecurrenceSpec,
    ScalarValue,
    Term,
    UnsupportedOrder,
    ValidationError,
    eval_closed_form,
    iterate_oracle,
    primitive_char_poly,
    promote_field_quadratic,
    solve,
    solve_diagonalizable,
    solve_jordan,
    verify_closed_form,
)
from conftest import adjoin_root, rand_quat, rand_quat_common_den

Q = FieldContext.rational()
H = QuaternionAlgebra(-1, -1)
I, J, K = H.e1, H.e2, H.e3
O = OctonionAlgebra(-1, -1, -1)
OI = O.element([0, 1, 0, 0, 0, 0, 0, 0])
OJ = O.element([0, 0, 1, 0, 0, 0, 0, 0])
OK = O.element([0, 0, 0, 1, 0, 0, 0, 0])
L = O.ell0

DIAG = RecurrenceSpec(H, 2, (-1 - K, I), (1, 1))
JORDAN = RecurrenceSpec(H, 2, (K, I + J), (1, 0))
FIB = RecurrenceSpec(Q, 2, (1, 1), (0, 1))


def test_primitive_char_poly():
    assert primitive_char_poly(DIAG) == LeftPoly(H, [1 + K, -I, 1])
    assert primitive_char_poly(FIB) == LeftPoly(Q, [-1, -1, 1])
    spec = RecurrenceSpec(H, 1, (J,), (1,))
    assert primitive_char_poly(spec) == LeftPoly(H, [-J, 1])


def test_spec_validation():
    with pytest.raises(ValidationError):
        RecurrenceSpec(H, 2, (H.zero(), I), (1, 1))  # rhs[0] = 0
    with pytest.raises(ValidationError):
        RecurrenceSpec(H, 2, (I,), (1, 1))  # arity
    with pytest.raises(UnsupportedOrder):
        RecurrenceSpec(O, 3, (L, L, L), (1, 1, 1))
    with pytest.raises(ValidationError):
        RecurrenceSpec(O, 2, (L, L), (1, 1), roots=((L, 1), (L, 1)))
    with pytest.raises(ValidationError):
        RecurrenceSpec(H, 2, (I, J), (1, 1), height=0)


def test_iterate_oracle():
    assert iterate_oracle(FIB, 10) == 55
    assert iterate_oracle(FIB, 0) == 0 and iterate_oracle(FIB, 1) == 1
    assert iterate_oracle(DIAG, 2) == -1 + I - K
    assert iterate_oracle(DIAG, 0) == 1


def test_promote_golden_ratio():
    promoted = promote_field_quadratic(FIB)
    ctx = promoted.algebra
    assert ctx.kind == "quadratic" and ctx.d == 5
    (r1, m1), (r2, m2) = promoted.roots
    assert (m1, m2) == (1, 1)
    assert r1 == ScalarValue(ctx, Fraction(1, 2), Fraction(1, 2))
    assert r2 == ScalarValue(ctx, Fraction(1, 2), Fraction(-1, 2))


def test_promote_rational_and_repeated():
    spec = RecurrenceSpec(Q, 2, (-2, 3), (0, 1))  # x^2 - 3x + 2
    promoted = promote_field_quadratic(spec)
    assert promoted.algebra == Q
    assert [r for r, _ in promoted.roots] == [Q.scalar(2), Q.scalar(1)]
    spec = RecurrenceSpec(Q, 2, (-1, 2), (1, 5))  # x^2 - 2x + 1
    promoted = promote_field_quadratic(spec)
    assert promoted.roots == ((Q.scalar(1), 2),)


def test_promote_negative_discriminant():
    spec = RecurrenceSpec(Q, 2, (-1, 0), (0, 1))  # x^2 + 1
    with pytest.raises(NoRootsFound):
        promote_field_quadratic(spec)


def test_promote_inside_quadratic_context():
    ctx = FieldContext.quadratic(5)
    # x^2 - x - 1 splits over Q(rt5) without further promotion
    spec = RecurrenceSpec(ctx, 2, (1, 1), (0, 1))
    promoted = promote_field_quadratic(spec)
    assert promoted.algebra == ctx
    assert promoted.roots[0][0] == ScalarValue(ctx, Fraction(1, 2), Fraction(1, 2))
    # x^2 - 3x + 1 has discriminant 5, a square in Q(rt5)
    spec = RecurrenceSpec(ctx, 2, (-1, 3), (0, 1))
    assert verify_closed_form(spec, solve(spec), 20).ok
    # x^2 - x - 7 has discriminant 29; no further extension is attempted
    with pytest.raises(NoRootsFound):
        promote_field_quadratic(RecurrenceSpec(ctx, 2, (7, 1), (0, 1)))


def test_solve_two_distinct_roots():
    cf = solve(DIAG)
    assert isinstance(cf, AssocForm)
    assert [t.base for t in cf.terms] == [J, I + J]
    assert [t.right for t in cf.terms] == [1 + I - K, K - I]
    assert verify_closed_form(DIAG, cf, 64).ok


def test_solve_repeated_root():
    cf = solve(JORDAN)
    degrees = sorted(t.degree for t in cf.terms)
    assert degrees == [0, 1]
    assert all(t.base == I for t in cf.terms)
    assert verify_closed_form(JORDAN, cf, 64).ok
    other = RecurrenceSpec(H, 2, (K, I + J), (0, 1))
    assert verify_closed_form(other, solve(other), 64).ok


def test_jordan_path_with_simple_roots_matches_diagonalizable():
    roots = [J, I + J]
    via_jordan = solve_jordan(DIAG, [(r, 1) for r in roots])
    via_diag = solve_diagonalizable(DIAG, roots)
    for k in range(17):
        assert eval_closed_form(via_jordan, k) == eval_closed_form(via_diag, k)


def test_solve_spherical():
    spec = RecurrenceSpec(H, 2, (-1, 0), (H.one(), K))
    cf = solve(spec)
    assert [t.base for t in cf.terms] == [I, -I]
    assert verify_closed_form(spec, cf, 32).ok
    # spherical class with fractional representatives: x^2 - x + 1
    spec = RecurrenceSpec(H, 2, (-1, 1), (I, J))
    cf = solve(spec)
    assert verify_closed_form(spec, cf, 32).ok
    for t in cf.terms:
        assert t.base.trace() == 1 and t.base.norm() == 1


def test_solve_field_paths():
    cf = solve(FIB)
    assert eval_closed_form(cf, 30) == 832040
    spec = RecurrenceSpec(Q, 2, (-1, 2), (1, 5))
    cf = solve(spec)
    assert verify_closed_form(spec, cf, 32).ok
    assert sorted(t.degree for t in cf.terms) == [0, 1]


def test_solve_order_one():
    spec = RecurrenceSpec(H, 1, (I,), (1 + J,))
    cf = solve(spec)
    assert len(cf.terms) == 1 and cf.terms[0].base == I
    assert verify_closed_form(spec, cf, 20).ok


def test_solve_order_three_with_user_roots():
    lams = [I, 1 + J, H.scalar(2)]
    p = LeftPoly.x_minus(lams[0])
    p = adjoin_root(p, lams[1])
    p = adjoin_root(p, lams[2])
    spec = RecurrenceSpec(H, 3, tuple(-c for c in p.coeffs[:3]), (1, I, J),
                          roots=tuple((lam, 1) for lam in lams))
    cf = solve(spec)
    assert verify_closed_form(spec, cf, 24).ok


def test_solve_field_jordan_order_three_with_user_roots():
    p = LeftPoly(Q, [-2, 5, -4, 1])  # (x-1)^2 (x-2)
    spec = RecurrenceSpec(Q, 3, tuple(-c for c in p.coeffs[:3]), (3, 1, 4),
                          roots=((1, 2), (2, 1)))
    cf = solve(spec)
    assert verify_closed_form(spec, cf, 24).ok


def test_solve_requires_roots_for_high_order():
    with pytest.raises(UnsupportedOrder):
        solve(RecurrenceSpec(Q, 3, (1, 1, 1), (0, 0, 1)))
    with pytest.raises(UnsupportedOrder):
        solve(RecurrenceSpec(H, 3, (I, J, K), (1, 0, 0)))


def test_solve_rejects_wrong_user_roots():
    with pytest.raises(ValidationError):
        solve(RecurrenceSpec(H, 2, (-1 - K, I), (1, 1), roots=((I, 1), (J, 1))))


def test_lam_violation():
    y = H.element([0, Fraction(3, 5), Fraction(4, 5), 0])
    spec = RecurrenceSpec(H, 3, (I, -1, I), (1, 0, 0),
                          roots=((I, 1), (J, 1), (y, 1)))
    with pytest.raises(LamViolation):
        solve(spec)


def test_no_roots_found():
    with pytest.raises(NoRootsFound):
        solve(RecurrenceSpec(H, 2, (I, 0), (1, 1)))


def test_octonion_two_distinct_roots():
    spec = RecurrenceSpec(O, 2, (-1 - OK, OI), (1, L))
    cf = solve(spec)
    assert isinstance(cf, OctSplitForm)
    assert len(cf.main.terms) == 2 and len(cf.tail.terms) == 2
    assert all(t.degree == 0 for t in cf.main.terms + cf.tail.terms)
    assert verify_closed_form(spec, cf, 32).ok
    for n in range(33):
        known = ((OJ ** n) * (1 - OK) + ((OI + OJ) ** n) * OK
                 + (OI * ((-OJ) ** n) - OI * ((OI - OJ) ** n)) * L)
        assert eval_closed_form(cf, n) == known


def test_octonion_repeated_root():
    spec = RecurrenceSpec(O, 2, (OK, OI + OJ), (1, L))
    cf = solve(spec)
    assert verify_closed_form(spec, cf, 32).ok
    degrees = [t.degree for t in cf.main.terms + cf.tail.terms]
    assert max(degrees) == 1 and all(d <= 1 for d in degrees)


def test_octonion_central_coefficients():
    spec = RecurrenceSpec(O, 2, (-1, 0), (1, L))
    cf = solve(spec)
    assert not cf.tail.terms
    assert verify_closed_form(spec, cf, 32).ok
    spec = RecurrenceSpec(O, 2, (-5, 2), (OI, L))  # x^2 - 2x + 5, class (2, 5)
    cf = solve(spec)
    assert verify_closed_form(spec, cf, 32).ok
    # x^2 + 3x - 2 would need trace -3 and norm -2, impossible in a definite
    # algebra, and its discriminant 17 is not a rational square either
    with pytest.raises(NoRepresentative):
        solve(RecurrenceSpec(O, 2, (2, -3), (OI, L)))


def test_closed_form_reproduces_initials():
    rng = random.Random(3)
    for _ in range(20):
        lam, mu = rand_quat(rng, H), rand_quat(rng, H)
        if lam.is_zero() or mu.is_zero():
            continue
        p = LeftPoly.x_minus(mu) * LeftPoly.x_minus(lam)
        inits = (rand_quat(rng, H), rand_quat(rng, H))
        spec = RecurrenceSpec(H, 2, (-p.coeffs[0], -p.coeffs[1]), inits)
        cf = solve(spec)
        assert eval_closed_form(cf, 0) == inits[0]
        assert eval_closed_form(cf, 1) == inits[1]


def test_verify_detects_perturbation():
    cf = solve(DIAG)
    bad_terms = (Term(cf.terms[0].poly, cf.terms[0].base, cf.terms[0].right + 1),
                 cf.terms[1])
    bad = AssocForm(cf.carrier, bad_terms)
    report = verify_closed_form(DIAG, bad, 16)
    assert not report.ok and report.first_failure is not None
    assert report.first_failure < DIAG.order
    assert verify_closed_form(DIAG, cf, 0).ok  # kmax=0 checks only a_0


def test_shift_property():
    rng = random.Random(5)
    for _ in range(15):
        lam, mu = rand_quat(rng, H), rand_quat(rng, H)
        if lam.is_zero() or mu.is_zero():
            continue
        p = LeftPoly.x_minus(mu) * LeftPoly.x_minus(lam)
        rhs = (-p.coeffs[0], -p.coeffs[1])
        inits = (rand_quat(rng, H), rand_quat(rng, H))
        spec = RecurrenceSpec(H, 2, rhs, inits)
        shifted = RecurrenceSpec(H, 2, rhs,
                                 (iterate_oracle(spec, 1), iterate_oracle(spec, 2)))
        cf, cf_shift = solve(spec), solve(shifted)
        for k in range(17):
            assert eval_closed_form(cf_shift, k) == eval_closed_form(cf, k + 1)


def test_right_superposition():
    rng = random.Random(7)
    for _ in range(15):
        lam, mu = rand_quat(rng, H), rand_quat(rng, H)
        if lam.is_zero() or mu.is_zero():
            continue
        p = LeftPoly.x_minus(mu) * LeftPoly.x_minus(lam)
        rhs = (-p.coeffs[0], -p.coeffs[1])
        a = (rand_quat(rng, H), rand_quat(rng, H))
        b = (rand_quat(rng, H), rand_quat(rng, H))
        cf_a = solve(RecurrenceSpec(H, 2, rhs, a))
        cf_b = solve(RecurrenceSpec(H, 2, rhs, b))
        spec_sum = RecurrenceSpec(H, 2, rhs, (a[0] + b[0], a[1] + b[1]))
        assert [t.base for t in cf_a.terms] == [t.base for t in cf_b.terms]
        summed = AssocForm(H, tuple(
            Term(ta.poly, ta.base, ta.right + tb.right)
            for ta, tb in zip(cf_a.terms, cf_b.terms)))
        assert verify_closed_form(spec_sum, summed, 16).ok


def test_solver_verifies_against_oracle_randomized():
    rng = random.Random(11)
    done = 0
    while done < 40:
        lam, mu = rand_quat(rng, H), rand_quat(rng, H)
        if lam.is_zero() or mu.is_zero():
            continue
        p = LeftPoly.x_minus(mu) * LeftPoly.x_minus(lam)
        if p.coeffs[0].is_zero():
            continue
        spec = RecurrenceSpec(H, 2, (-p.coeffs[0], -p.coeffs[1]),
                              (rand_quat(rng, H), rand_quat(rng, H)))
        assert verify_closed_form(spec, solve(spec), 32).ok
        done += 1
