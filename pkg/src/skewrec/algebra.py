"""Quaternion algebras (a,b | Q) and their Cayley-Dickson octonion doubles.

Conventions.  A quaternion algebra has basis 1, e1, e2, e3 with

    e1*e1 = a,   e2*e2 = b,   e3 = e1*e2 = -e2*e1,

so e3*e3 = -a*b.  Doubling with a parameter g adjoins a unit l0 with
l0*l0 = g and multiplication

    (q + r*l0)(s + t*l0) = q*s + g*conj(t)*r + (t*q + r*conj(s))*l0.

Conjugation negates everything except the scalar coordinate; the trace
T(x) = x + conj(x) and norm N(x) = x*conj(x) are always central scalars.
Octonions are not associative, only alternative, so octonion products are
written strictly as binary operations throughout.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .errors import (
    ContextMismatch,
    DegenerateFrame,
    DivisionByZero,
    InternalError,
    NoRepresentative,
    Singular,
    ValidationError,
    ZeroDivisor,
)
from .matlin import DMatrix, mat_inverse
from .scalar import FieldContext, ScalarValue


class QuaternionAlgebra:
    """The four-dimensional algebra (a,b | Q) with a, b nonzero rationals."""

    __slots__ = ("ctx", "a", "b")

    def __init__(self, a, b, ctx: FieldContext | None = None):
        ctx = ctx if ctx is not None else FieldContext.rational()
        if ctx.kind != "rational":
            raise ValidationError("quaternion algebras are only instantiated over Q")
        a = ctx.scalar(a)
        b = ctx.scalar(b)
        if a.is_zero() or b.is_zero():
            raise ValidationError("structure constants a, b must be nonzero")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("QuaternionAlgebra is immutable")

    def element(self, coords) -> QuatValue:
        w, x, y, z = (self.ctx.scalar(c) for c in coords)
        return QuatValue(self, w, x, y, z)

    def scalar(self, c) -> QuatValue:
        return self.element([c, 0, 0, 0])

    def zero(self) -> QuatValue:
        return self.scalar(0)

    def one(self) -> QuatValue:
        return self.scalar(1)

    @property
    def e1(self) -> QuatValue:
        return self.element([0, 1, 0, 0])

    @property
    def e2(self) -> QuatValue:
        return self.element([0, 0, 1, 0])

    @property
    def e3(self) -> QuatValue:
        return self.element([0, 0, 0, 1])

    def basis(self) -> list[QuatValue]:
        return [self.one(), self.e1, self.e2, self.e3]

    def coerce(self, v) -> QuatValue:
        if isinstance(v, QuatValue):
            if v.alg == self:
                return v
            raise ContextMismatch(f"value from {v.alg} used in {self}")
        return self.scalar(self.ctx.scalar(v))

    def from_coords(self, coords) -> QuatValue:
        coords = list(coords)
        if len(coords) != 4:
            raise ValueError("quaternion needs 4 coordinates")
        return self.element(coords)

    def __eq__(self, other):
        if not isinstance(other, QuaternionAlgebra):
            return NotImplemented
        return self.ctx == other.ctx and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash(("quat", self.a, self.b))

    def __repr__(self):
        return f"({self.a},{self.b} | {self.ctx})"


class QuatValue:
    """Element w + x*e1 + y*e2 + z*e3 of a quaternion algebra."""

    __slots__ = ("alg", "w", "x", "y", "z")

    ASSOCIATIVE = True

    def __init__(self, alg, w, x, y, z):
        object.__setattr__(self, "alg", alg)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)

    def __setattr__(self, name, value):
        raise AttributeError("QuatValue is immutable")

    def _coerce(self, other):
        if isinstance(other, QuatValue):
            if other.alg == self.alg:
                return other
            raise ContextMismatch(f"{self.alg} vs {other.alg}")
        if isinstance(other, (int, Fraction, ScalarValue)):
            return self.alg.scalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        ctx = self.alg.ctx
        # coordinates live over Q (enforced by the algebra), so the pieces
        # below work on raw fractions and retag; this path is hot
        return QuatValue(self.alg,
                         ScalarValue(ctx, self.w.u + o.w.u),
                         ScalarValue(ctx, self.x.u + o.x.u),
                         ScalarValue(ctx, self.y.u + o.y.u),
                         ScalarValue(ctx, self.z.u + o.z.u))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        ctx = self.alg.ctx
        return QuatValue(self.alg,
                         ScalarValue(ctx, self.w.u - o.w.u),
                         ScalarValue(ctx, self.x.u - o.x.u),
                         ScalarValue(ctx, self.y.u - o.y.u),
                         ScalarValue(ctx, self.z.u - o.z.u))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        alg = self.alg
        ctx = alg.ctx
        a, b = alg.a.u, alg.b.u
        ab = a * b
        w1, x1, y1, z1 = self.w.u, self.x.u, self.y.u, self.z.u
        w2, x2, y2, z2 = o.w.u, o.x.u, o.y.u, o.z.u
        return QuatValue(
            alg,
            ScalarValue(ctx, w1 * w2 + a * (x1 * x2) + b * (y1 * y2) - ab * (z1 * z2)),
            ScalarValue(ctx, w1 * x2 + x1 * w2 - b * (y1 * z2) + b * (z1 * y2)),
            ScalarValue(ctx, w1 * y2 + y1 * w2 + a * (x1 * z2) - a * (z1 * x2)),
            ScalarValue(ctx, w1 * z2 + z1 * w2 + x1 * y2 - y1 * x2),
        )

    def __rmul__(self, other):
        # only scalars land here, and those are central
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, ScalarValue)):
            inv = self.alg.ctx.scalar(other).inverse()
            return self * inv
        return NotImplemented

    def __neg__(self):
        return QuatValue(self.alg, -self.w, -self.x, -self.y, -self.z)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.alg.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> QuatValue:
        return QuatValue(self.alg, self.w, -self.x, -self.y, -self.z)

    def trace(self) -> ScalarValue:
        return self.w + self.w

    def norm(self) -> ScalarValue:
        a, b = self.alg.a.u, self.alg.b.u
        w, x, y, z = self.w.u, self.x.u, self.y.u, self.z.u
        return ScalarValue(self.alg.ctx,
                           w * w - a * (x * x) - b * (y * y) + a * b * (z * z))

    def inverse(self) -> QuatValue:
        if self.is_zero():
            raise DivisionByZero("division by the zero quaternion")
        n = self.norm()
        if n.is_zero():
            raise ZeroDivisor(f"{self} has norm 0, so (a,b) is not a division algebra")
        return self.conj() / n

    def scalar_part(self) -> ScalarValue:
        return self.w

    def pure(self) -> QuatValue:
        return QuatValue(self.alg, self.alg.ctx.zero(), self.x, self.y, self.z)

    def is_zero(self) -> bool:
        return self.w.is_zero() and self.is_pure_zero()

    def is_pure_zero(self) -> bool:
        return self.x.is_zero() and self.y.is_zero() and self.z.is_zero()

    def is_central(self) -> bool:
        return self.is_pure_zero()

    def coords(self) -> list[Fraction]:
        out = []
        for c in (self.w, self.x, self.y, self.z):
            out.extend(c.coords())
        return out

    @property
    def carrier(self) -> QuaternionAlgebra:
        return self.alg

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, ScalarValue)):
            other = self.alg.scalar(other)
        if isinstance(other, QuatValue):
            if other.alg != self.alg:
                return False
            return (self.w == other.w and self.x == other.x
                    and self.y == other.y and self.z == other.z)
        return NotImplemented

    def __bool__(self):
        return not self.is_zero()

    def __hash__(self):
        return hash(("quatval", self.w, self.x, self.y, self.z))

    def __str__(self):
        return "[" + ",".join(str(c) for c in (self.w, self.x, self.y, self.z)) + "]"

    __repr__ = __str__


class OctonionAlgebra:
    """Cayley-Dickson double of a quaternion algebra with parameter gamma."""

    __slots__ = ("base", "gamma")

    def __init__(self, a, b, gamma, ctx: FieldContext | None = None):
        base = QuaternionAlgebra(a, b, ctx)
        gamma = base.ctx.scalar(gamma)
        if gamma.is_zero():
            raise ValidationError("doubling parameter gamma must be nonzero")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "gamma", gamma)

    def __setattr__(self, name, value):
        raise AttributeError("OctonionAlgebra is immutable")

    @property
    def ctx(self) -> FieldContext:
        return self.base.ctx

    def pair(self, first, second) -> OctValue:
        return OctValue(self, self.base.coerce(first), self.base.coerce(second))

    def element(self, coords) -> OctValue:
        coords = list(coords)
        if len(coords) != 8:
            raise ValueError("octonion needs 8 coordinates")
        return self.pair(self.base.element(coords[:4]), self.base.element(coords[4:]))

    def scalar(self, c) -> OctValue:
        return self.pair(self.base.scalar(c), self.base.zero())

    def embed(self, q: QuatValue) -> OctValue:
        return self.pair(q, self.base.zero())

    def zero(self) -> OctValue:
        return self.scalar(0)

    def one(self) -> OctValue:
        return self.scalar(1)

    @property
    def ell0(self) -> OctValue:
        return self.pair(self.base.zero(), self.base.one())

    def basis(self) -> list[OctValue]:
        qb = self.base.basis()
        zero = self.base.zero()
        return [self.pair(q, zero) for q in qb] + [self.pair(zero, q) for q in qb]

    def coerce(self, v) -> OctValue:
        if isinstance(v, OctValue):
            if v.alg == self:
                return v
            raise ContextMismatch(f"value from {v.alg} used in {self}")
        if isinstance(v, QuatValue):
            if v.alg == self.base:
                return self.embed(v)
            raise ContextMismatch(f"quaternion from {v.alg} used in {self}")
        return self.scalar(self.ctx.scalar(v))

    def from_coords(self, coords) -> OctValue:
        return self.element(coords)

    def __eq__(self, other):
        if not isinstance(other, OctonionAlgebra):
            return NotImplemented
        return self.base == other.base and self.gamma == other.gamma

    def __hash__(self):
        return hash(("oct", self.base, self.gamma))

    def __repr__(self):
        return f"({self.base.a},{self.base.b},{self.gamma} | {self.ctx})"


class OctValue:
    """Element q + r*l0 of an octonion algebra, stored as the pair (q, r)."""

    __slots__ = ("alg", "first", "second")

    ASSOCIATIVE = False

    def __init__(self, alg, first: QuatValue, second: QuatValue):
        object.__setattr__(self, "alg", alg)
        object.__setattr__(self, "first", first)
        object.__setattr__(self, "second", second)

    def __setattr__(self, name, value):
        raise AttributeError("OctValue is immutable")

    def _coerce(self, other):
        if isinstance(other, OctValue):
            if other.alg == self.alg:
                return other
            raise ContextMismatch(f"{self.alg} vs {other.alg}")
        if isinstance(other, QuatValue):
            if other.alg == self.alg.base:
                return self.alg.embed(other)
            raise ContextMismatch(f"{self.alg} vs {other.alg}")
        if isinstance(other, (int, Fraction, ScalarValue)):
            return self.alg.scalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return OctValue(self.alg, self.first + o.first, self.second + o.second)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return OctValue(self.alg, self.first - o.first, self.second - o.second)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        g = self.alg.gamma
        q, r = self.first, self.second
        s, t = o.first, o.second
        return OctValue(self.alg,
                        q * s + (t.conj() * r) * g,
                        t * q + r * s.conj())

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, ScalarValue)):
            inv = self.alg.ctx.scalar(other).inverse()
            return OctValue(self.alg, self.first * inv, self.second * inv)
        return NotImplemented

    def __neg__(self):
        return OctValue(self.alg, -self.first, -self.second)

    def __pow__(self, k):
        # powers of a single element live in an associative subalgebra, so
        # square-and-multiply is unambiguous even though the algebra is not
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.alg.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> OctValue:
        return OctValue(self.alg, self.first.conj(), -self.second)

    def trace(self) -> ScalarValue:
        return self.first.trace()

    def norm(self) -> ScalarValue:
        return self.first.norm() - self.alg.gamma * self.second.norm()

    def inverse(self) -> OctValue:
        if self.is_zero():
            raise DivisionByZero("division by the zero octonion")
        n = self.norm()
        if n.is_zero():
            raise ZeroDivisor(f"{self} has norm 0, so the algebra is not division")
        return self.conj() / n

    def scalar_part(self) -> ScalarValue:
        return self.first.w

    def pure(self) -> OctValue:
        return OctValue(self.alg, self.first.pure(), self.second)

    def is_zero(self) -> bool:
        return self.first.is_zero() and self.second.is_zero()

    def is_central(self) -> bool:
        return self.first.is_central() and self.second.is_zero()

    def coords(self) -> list[Fraction]:
        return self.first.coords() + self.second.coords()

    @property
    def carrier(self) -> OctonionAlgebra:
        return self.alg

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, ScalarValue, QuatValue)):
            try:
                other = self._coerce(other)
            except ContextMismatch:
                return False
        if isinstance(other, OctValue):
            if other.alg != self.alg:
                return False
            return self.first == other.first and self.second == other.second
        return NotImplemented

    def __bool__(self):
        return not self.is_zero()

    def __hash__(self):
        return hash(("octval", self.first, self.second))

    def __str__(self):
        cs = (self.first.w, self.first.x, self.first.y, self.first.z,
              self.second.w, self.second.x, self.second.y, self.second.z)
        return "[" + ",".join(str(c) for c in cs) + "]"

    __repr__ = __str__


# ---------------------------------------------------------------------------
# conjugacy classes


class ConjClass:
    """Conjugacy-class label: a central scalar, or a (trace, norm) pair.

    Two non-central quaternions are conjugate exactly when they share reduced
    trace and norm, provided the algebra is division; in a split algebra the
    label can lump together genuinely non-conjugate elements, which is the
    same caveat attached to ZeroDivisor.
    """

    __slots__ = ("central", "t", "n")

    def __init__(self, central=None, t=None, n=None):
        if (central is None) == (t is None):
            raise ValueError("give either a central scalar or a (t, n) pair")
        object.__setattr__(self, "central", central)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("ConjClass is immutable")

    @property
    def is_central(self) -> bool:
        return self.central is not None

    def min_poly_is_irreducible(self) -> bool:
        """Whether x^2 - t x + n has no roots in the base field."""
        if self.is_central:
            return False
        disc = self.t * self.t - 4 * self.n
        return not disc.is_square()

    def __eq__(self, other):
        if not isinstance(other, ConjClass):
            return NotImplemented
        if self.is_central != other.is_central:
            return False
        if self.is_central:
            return self.central == other.central
        return self.t == other.t and self.n == other.n

    def __hash__(self):
        if self.is_central:
            return hash(("class", self.central))
        return hash(("class", self.t, self.n))

    def __repr__(self):
        if self.is_central:
            return f"ConjClass(central={self.central})"
        return f"ConjClass(t={self.t}, n={self.n})"


def conj_class(x: QuatValue) -> ConjClass:
    """Class label of a quaternion: itself if central, else (trace, norm)."""
    if x.is_central():
        return ConjClass(central=x.scalar_part())
    return ConjClass(t=x.trace(), n=x.norm())


def same_class(x: QuatValue, y: QuatValue) -> bool:
    return conj_class(x) == conj_class(y)


def spherical_representative(alg: QuaternionAlgebra, t, n, height: int = 20):
    """Two distinct elements with trace t and norm n, via bounded search.

    Looks for lam = t/2 + (p1*e1 + p2*e2 + p3*e3)/q with integer numerators
    and denominator bounded by `height`; the partner is t - lam.  Raises
    NoRepresentative when the search space is exhausted.
    """
    t = alg.ctx.scalar(t)
    n = alg.ctx.scalar(n)
    a = alg.a.u
    b = alg.b.u
    m = (n - t * t / 4).u
    for q in range(1, height + 1):
        mq = m * q * q
        for p2 in range(0, height + 1):
            for p3 in range(0, height + 1):
                val = (mq + b * p2 * p2 - a * b * p3 * p3) / (-a)
                if val < 0 or val.denominator != 1:
                    continue
                p1 = isqrt(val.numerator)
                if p1 * p1 != val.numerator or p1 > height:
                    continue
                if p1 == 0 and p2 == 0 and p3 == 0:
                    continue  # pure part must be nonzero to keep the pair distinct
                y = alg.element([0, Fraction(p1, q), Fraction(p2, q), Fraction(p3, q)])
                lam = alg.scalar(t / 2) + y
                return lam, alg.scalar(t) - lam
    raise NoRepresentative(
        f"search exhausted up to height {height}: no element of trace {t} "
        f"and norm {n} in {alg}"
    )


# ---------------------------------------------------------------------------
# quaternion frames inside an octonion algebra


def polar_form(x, y) -> ScalarValue:
    """Bilinear form attached to the norm: B(x, y) = N(x+y) - N(x) - N(y)."""
    return (x * y.conj()).trace()


def _orthogonalize(x: OctValue, against) -> OctValue:
    out = x
    for v in against:
        bv = polar_form(v, v)
        if bv.is_zero():
            raise DegenerateFrame(f"cannot orthogonalize against isotropic {v}")
        out = out - v * (polar_form(out, v) / bv)
    return out


def _standard_pure(alg: OctonionAlgebra) -> list[OctValue]:
    b = alg.basis()
    return [b[1], b[2], b[3], b[4], b[5], b[6], b[7]]


def _central_square(x: OctValue, what: str) -> ScalarValue:
    sq = x * x
    if not sq.is_central():
        raise InternalError(f"{what} squared is not central")
    return sq.scalar_part()


class SubalgebraFrame:
    """A quaternion subalgebra Q' = span(1, u, w, u*w) of an octonion algebra,
    together with a trace-zero unit ell orthogonal to it, so that the whole
    algebra splits as Q' + Q'*ell.

    The 8x8 basis matrix maps frame coordinates over
    {1, u, w, u*w, ell, u*ell, w*ell, (u*w)*ell} to standard coordinates;
    `decompose` inverts it and `embed` applies the first half.
    """

    __slots__ = ("oct", "u", "w", "uw", "ell", "a_prime", "b_prime",
                 "gamma_prime", "quat", "basis", "basis_inv")

    def __init__(self, oct_alg: OctonionAlgebra, u: OctValue, w: OctValue,
                 ell: OctValue):
        object.__setattr__(self, "oct", oct_alg)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "ell", ell)
        uw = u * w
        object.__setattr__(self, "uw", uw)
        a_p = _central_square(u, "frame generator u")
        b_p = _central_square(w, "frame generator w")
        g_p = _central_square(ell, "frame unit ell")
        object.__setattr__(self, "a_prime", a_p)
        object.__setattr__(self, "b_prime", b_p)
        object.__setattr__(self, "gamma_prime", g_p)
        object.__setattr__(self, "quat", QuaternionAlgebra(a_p, b_p, oct_alg.ctx))
        vecs = [oct_alg.one(), u, w, uw,
                ell, u * ell, w * ell, uw * ell]
        ctx = oct_alg.ctx
        entries = []
        cols = [v.coords() for v in vecs]
        for i in range(8):
            for j in range(8):
                entries.append(ScalarValue(ctx, cols[j][i]))
        basis = DMatrix(8, 8, entries)
        try:
            basis_inv = mat_inverse(basis)
        except Singular as exc:
            raise DegenerateFrame("frame vectors are linearly dependent") from exc
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "basis_inv", basis_inv)

    def __setattr__(self, name, value):
        raise AttributeError("SubalgebraFrame is immutable")

    def decompose(self, x: OctValue) -> tuple[QuatValue, QuatValue]:
        """Write x = embed(q) + embed(s)*ell and return (q, s)."""
        ctx = self.oct.ctx
        coords = [ScalarValue(ctx, c) for c in self.oct.coerce(x).coords()]
        c = self.basis_inv.apply(coords)
        return self.quat.element(c[:4]), self.quat.element(c[4:])

    def embed(self, q: QuatValue) -> OctValue:
        """Map frame-quaternion coordinates back into the octonion algebra."""
        q = self.quat.coerce(q)
        out = self.oct.one() * q.w
        out = out + self.u * q.x
        out = out + self.w * q.y
        out = out + self.uw * q.z
        return out

    def contains(self, x: OctValue) -> bool:
        return self.decompose(x)[1].is_zero()

    def __repr__(self):
        return f"SubalgebraFrame(u={self.u}, w={self.w}, ell={self.ell})"


def build_frame(alg: OctonionAlgebra, alpha, beta) -> SubalgebraFrame:
    """A frame whose quaternion part contains both alpha and beta.

    Deterministic construction: u is the pure part of beta (falling back to
    the pure part of alpha, then to e1); w is the pure part of alpha
    orthogonalized against u (falling back to the first standard pure basis
    vector that survives orthogonalization); ell is the first standard basis
    vector that is independent of span(1, u, w, u*w) and keeps nonzero norm
    after orthogonalization.
    """
    alpha = alg.coerce(alpha)
    beta = alg.coerce(beta)

    u = beta.pure()
    if u.is_zero():
        u = alpha.pure()
    if u.is_zero():
        u = alg.embed(alg.base.e1)
    if u.norm().is_zero():
        raise DegenerateFrame(f"generator {u} is isotropic")

    w0 = alpha.pure()
    w = None
    if not w0.is_zero():
        cand = _orthogonalize(w0, [u])
        if not cand.is_zero():
            w = cand
    if w is None:
        for s in _standard_pure(alg):
            cand = _orthogonalize(s, [u])
            if not cand.is_zero():
                w = cand
                break
    if w is None:
        raise DegenerateFrame("no vector independent of u survived orthogonalization")
    if w.norm().is_zero():
        raise DegenerateFrame(f"orthogonalization produced isotropic {w}")

    span = [alg.one(), u, w, u * w]
    ell = None
    qb = alg.basis()
    for s in [qb[4], qb[5], qb[6], qb[7], qb[1], qb[2], qb[3]]:
        cand = _orthogonalize(s, span)
        if not cand.is_zero() and not cand.norm().is_zero():
            ell = cand
            break
    if ell is None:
        raise DegenerateFrame("no usable doubling unit orthogonal to the frame")

    frame = SubalgebraFrame(alg, u, w, ell)
    for gen in (alpha, beta):
        if not frame.decompose(gen)[1].is_zero():
            raise InternalError("frame does not contain its own generators")
    return frame
