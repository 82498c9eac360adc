"""Exact Gaussian-rational scalars with a high-precision approximate tier.

An exact scalar is stored as a Gaussian integer over a positive integer
denominator, ``(re + im*i) / den``, kept reduced so that
``gcd(re, im, den) == 1``.  Keeping a single denominator makes the common
operations (add, multiply) a handful of integer ops plus one gcd, which
matters because every Holant sum bottoms out here.

Approximate scalars wrap an :mod:`mpmath` complex evaluated in a private
context at 128 bits of mantissa.  They only appear when requested
explicitly (:meth:`Scalar.approx`, :func:`nth_root_real`) and are contagious:
any operation with an approximate operand yields an approximate result.

Equality between two exact scalars is exact.  As soon as one side is
approximate, ``a == b`` means ``|a - b| <= TAU * max(1, |a|, |b|)``.
"""

from fractions import Fraction
from math import gcd
from numbers import Rational

from mpmath.ctx_mp import MPContext

from .errors import DivisionByZero, NonPositiveRadicand

__all__ = ["Scalar", "as_scalar", "nth_root_real", "is_zero", "TAU",
           "ZERO", "ONE", "I"]

TAU = 1e-9
PRECISION_BITS = 128

_ctx = MPContext()
_ctx.prec = PRECISION_BITS


def _normalized(re, im, den):
    if den == 0:
        raise DivisionByZero("zero denominator")
    if den < 0:
        re, im, den = -re, -im, -den
    g = gcd(gcd(re, im), den)
    if g > 1:
        re //= g
        im //= g
        den //= g
    return re, im, den


def _fmt_rational(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _split_complex(body):
    """Split ``"<re><sign><im>"`` (the trailing ``i`` already removed)."""
    k = len(body) - 1
    while k > 0:
        if body[k] in "+-" and body[k - 1] not in "eE":
            return body[:k], body[k:]
        k -= 1
    return "", body


def _imag_text(text):
    if text in ("", "+"):
        return "1"
    if text == "-":
        return "-1"
    return text


class Scalar:
    """A complex number, either exact (Gaussian rational) or approximate.

    ``Scalar(re, im)`` builds an exact value from ints, Fractions or
    rational strings; use :meth:`approx` or :meth:`parse` for the rest.
    Instances are immutable.
    """

    __slots__ = ("_re", "_im", "_den", "_z")

    def __init__(self, re=0, im=0):
        if isinstance(re, Scalar) and im == 0:
            self._re, self._im, self._den, self._z = re._re, re._im, re._den, re._z
            return
        fr, fi = Fraction(re), Fraction(im)
        den = fr.denominator * fi.denominator // gcd(fr.denominator, fi.denominator)
        self._re, self._im, self._den = _normalized(
            fr.numerator * (den // fr.denominator),
            fi.numerator * (den // fi.denominator),
            den,
        )
        self._z = None

    @classmethod
    def _exact(cls, re, im, den):
        s = object.__new__(cls)
        s._re, s._im, s._den = _normalized(re, im, den)
        s._z = None
        return s

    @classmethod
    def _wrap(cls, z):
        s = object.__new__(cls)
        s._re = s._im = s._den = None
        s._z = _ctx.mpc(z)
        return s

    @classmethod
    def approx(cls, re=0, im=0):
        """Approximate scalar from floats, mpmath numbers, strings or Scalars."""
        if isinstance(re, Scalar):
            re = re._as_mpc()
        if isinstance(im, Scalar):
            im = im._as_mpc()
        if isinstance(re, Fraction):
            re = _ctx.mpf(re.numerator) / re.denominator
        if isinstance(im, Fraction):
            im = _ctx.mpf(im.numerator) / im.denominator
        return cls._wrap(_ctx.mpc(re) + _ctx.mpc(im) * 1j)

    @classmethod
    def parse(cls, text):
        """Parse the textual form written by ``str()``.

        Exact values look like ``3``, ``-1/2``, ``1/2+3/4i``, ``-i``;
        approximate values carry a ``~`` prefix: ``~0.79370052598``.
        """
        s = str(text).strip().replace(" ", "")
        approximate = s.startswith("~")
        if approximate:
            s = s[1:]
        if not s:
            raise ValueError(f"empty scalar literal: {text!r}")
        if s.endswith("i"):
            re_text, im_text = _split_complex(s[:-1])
            im_text = _imag_text(im_text)
        else:
            re_text, im_text = s, "0"
        re_text = re_text or "0"
        try:
            if approximate:
                return cls._wrap(_ctx.mpc(_ctx.mpf(re_text), _ctx.mpf(im_text)))
            return cls(Fraction(re_text), Fraction(im_text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad scalar literal: {text!r}") from exc

    # -- inspection -------------------------------------------------------

    @property
    def is_exact(self):
        return self._z is None

    @property
    def real(self):
        if self._z is None:
            return Fraction(self._re, self._den)
        return self._z.real

    @property
    def imag(self):
        if self._z is None:
            return Fraction(self._im, self._den)
        return self._z.imag

    def to_approx(self):
        return self if self._z is not None else Scalar._wrap(self._as_mpc())

    def _as_mpc(self):
        if self._z is not None:
            return self._z
        return _ctx.mpc(_ctx.mpf(self._re) / self._den, _ctx.mpf(self._im) / self._den)

    def __complex__(self):
        return complex(self._as_mpc())

    def __abs__(self):
        return abs(self._as_mpc())

    def conjugate(self):
        if self._z is None:
            return Scalar._exact(self._re, -self._im, self._den)
        return Scalar._wrap(_ctx.conj(self._z))

    def is_zero(self):
        if self._z is None:
            return self._re == 0 and self._im == 0
        return abs(self._z) <= TAU

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._z is None and other._z is None:
            d1, d2 = self._den, other._den
            if d1 == d2:
                return Scalar._exact(self._re + other._re, self._im + other._im, d1)
            return Scalar._exact(self._re * d2 + other._re * d1,
                                 self._im * d2 + other._im * d1, d1 * d2)
        return Scalar._wrap(self._as_mpc() + other._as_mpc())

    __radd__ = __add__

    def __neg__(self):
        if self._z is None:
            return Scalar._exact(-self._re, -self._im, self._den)
        return Scalar._wrap(-self._z)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._z is None and other._z is None:
            a, b, c, d = self._re, self._im, other._re, other._im
            return Scalar._exact(a * c - b * d, a * d + b * c, self._den * other._den)
        return Scalar._wrap(self._as_mpc() * other._as_mpc())

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise DivisionByZero(f"division of {self} by zero")
        if self._z is None and other._z is None:
            a, b, p = self._re, self._im, self._den
            c, d, q = other._re, other._im, other._den
            # (a+bi)/p / ((c+di)/q) = (a+bi)(c-di) q / (p (c^2+d^2))
            return Scalar._exact((a * c + b * d) * q, (b * c - a * d) * q,
                                 p * (c * c + d * d))
        return Scalar._wrap(self._as_mpc() / other._as_mpc())

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return ONE / (self ** -n)
        if self._z is not None:
            return Scalar._wrap(self._z ** n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._z is None and other._z is None:
            return (self._re == other._re and self._im == other._im
                    and self._den == other._den)
        a, b = self._as_mpc(), other._as_mpc()
        return abs(a - b) <= TAU * max(1, abs(a), abs(b))

    def __hash__(self):
        if self._z is not None:
            raise TypeError("approximate scalars are not hashable")
        if self._im == 0:
            return hash(Fraction(self._re, self._den))
        return hash((Fraction(self._re, self._den), Fraction(self._im, self._den)))

    # -- text ----------------------------------------------------------------

    def __str__(self):
        if self._z is not None:
            re, im = self._z.real, self._z.imag
            out = "~" + _ctx.nstr(re, 30)
            if im != 0:
                sign = "-" if im < 0 else "+"
                out += sign + _ctx.nstr(abs(im), 30) + "i"
            return out
        re, im = self.real, self.imag
        if im == 0:
            return _fmt_rational(re)
        if im == 1:
            im_text = "i"
        elif im == -1:
            im_text = "-i"
        else:
            im_text = _fmt_rational(im) + "i"
        if re == 0:
            return im_text
        if not im_text.startswith("-"):
            im_text = "+" + im_text
        return _fmt_rational(re) + im_text

    def __repr__(self):
        return f"Scalar({str(self)!r})"

    def __reduce__(self):
        return (Scalar.parse, (str(self),))


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Rational)):
        return Scalar(x)
    if isinstance(x, (float, complex)) or type(x).__module__.startswith("mpmath"):
        return Scalar.approx(x)
    return NotImplemented


def as_scalar(x):
    """Coerce ints, Fractions, floats, complexes and literals to a Scalar."""
    if isinstance(x, str):
        return Scalar.parse(x)
    s = _coerce(x)
    if s is NotImplemented:
        raise TypeError(f"cannot convert {type(x).__name__} to Scalar")
    return s


def is_zero(a):
    return as_scalar(a).is_zero()


def nth_root_real(x, n):
    """Positive real ``n``-th root of a positive rational, as an approximate scalar."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"root index must be a positive integer, got {n!r}")
    q = as_scalar(x)
    if not q.is_exact or q.imag != 0:
        raise NonPositiveRadicand(f"radicand must be a positive rational, got {x}")
    r = q.real
    if r <= 0:
        raise NonPositiveRadicand(f"radicand must be positive, got {r}")
    return Scalar._wrap(_ctx.root(_ctx.mpf(r.numerator) / r.denominator, n))


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)
