"""Exact scalar rings: Gaussian rationals and dual numbers.

Plain rationals are ``fractions.Fraction``.  The two classes here cover the
scalars the rest of the package needs beyond that: Q(i) for basis
normalizations involving sqrt(-1), and Q[eps]/(eps^2) for first-order
deformation checks.  Both coerce ints and Fractions on the fly so polynomial
and matrix code can use literal 0 and 1.
"""

from __future__ import annotations

from fractions import Fraction


def _as_fraction(v):
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError("expected int or Fraction, got %r" % (v,))


def rational_str(q: Fraction) -> str:
    """Serialize a rational as ``num/den``, omitting ``/den`` when den == 1."""
    q = _as_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def rational_from_str(s: str) -> Fraction:
    return Fraction(s.strip())


class GaussianRational:
    """An element a + b*i of Q(i), with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _as_fraction(re)
        self.im = _as_fraction(im)

    @staticmethod
    def _coerce(v):
        if isinstance(v, GaussianRational):
            return v
        if isinstance(v, (int, Fraction)):
            return GaussianRational(v)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def is_rational(self) -> bool:
        return self.im == 0

    def __repr__(self):
        return "GaussianRational(%s, %s)" % (self.re, self.im)

    def __str__(self):
        if self.im == 0:
            return rational_str(self.re)
        im = rational_str(self.im)
        if self.re == 0:
            return "%s*i" % im
        sign = "+" if self.im > 0 else "-"
        return "%s%s%s*i" % (rational_str(self.re), sign, rational_str(abs(self.im)))


I = GaussianRational(0, 1)


def gaussian_from_str(s: str) -> GaussianRational:
    """Parse ``a+b*i`` (either part optional, signs allowed)."""
    s = s.strip().replace(" ", "")
    if not s:
        raise ValueError("empty Gaussian rational")
    # split into signed chunks at top level
    chunks = []
    start = 0
    for k, ch in enumerate(s):
        if ch in "+-" and k > start and s[k - 1] not in "+-/*^eE":
            chunks.append(s[start:k])
            start = k
    chunks.append(s[start:])
    re = Fraction(0)
    im = Fraction(0)
    for c in chunks:
        if c in ("i", "+i"):
            im += 1
        elif c == "-i":
            im -= 1
        elif c.endswith("*i"):
            im += Fraction(c[:-2])
        elif c.endswith("i"):
            im += Fraction(c[:-1])
        else:
            re += Fraction(c)
    return GaussianRational(re, im)


class DualNumber:
    """An element a + b*eps of Q[eps]/(eps^2).

    Invertible exactly when the constant part a is nonzero.
    """

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = _as_fraction(a)
        self.b = _as_fraction(b)

    @staticmethod
    def _coerce(v):
        if isinstance(v, DualNumber):
            return v
        if isinstance(v, (int, Fraction)):
            return DualNumber(v)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualNumber(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualNumber(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return DualNumber(self.a * o.a, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.a == 0:
            raise ZeroDivisionError("dual number with zero constant part is not a unit")
        return DualNumber(self.a / o.a, (self.b * o.a - self.a * o.b) / (o.a * o.a))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return DualNumber(-self.a, -self.b)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_unit(self) -> bool:
        return self.a != 0

    def __repr__(self):
        return "DualNumber(%s, %s)" % (self.a, self.b)

    def __str__(self):
        if self.b == 0:
            return rational_str(self.a)
        b = rational_str(self.b)
        if self.a == 0:
            return "%s*eps" % b
        sign = "+" if self.b > 0 else "-"
        return "%s%s%s*eps" % (rational_str(self.a), sign, rational_str(abs(self.b)))


EPS = DualNumber(0, 1)
