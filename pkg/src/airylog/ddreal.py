"""Double-double ("compensated") real arithmetic.

A value is carried as an unevaluated sum hi + lo of two binary64 numbers
with |lo| <= ulp(hi)/2, giving roughly 32 significant decimal digits.  The
error-free transforms (two_sum / two_prod via Dekker splitting) are the
classical ones; see Dekker (1971) and the QD library of Hida, Li & Bailey.

Two layers are exposed:

* module-level functions on ``(hi, lo)`` tuples -- used in inner loops
  where attribute access would dominate the cost;
* the :class:`XReal` wrapper with operator overloading for everything else.

All operations are pure; instances are immutable.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

_SPLITTER = 134217729.0  # 2**27 + 1


def _two_sum(a: float, b: float):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _quick_two_sum(a: float, b: float):
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def _split(a: float):
    c = _SPLITTER * a
    abig = c - a
    ahi = c - abig
    return ahi, a - ahi


def _two_prod(a: float, b: float):
    p = a * b
    ahi, alo = _split(a)
    bhi, blo = _split(b)
    return p, ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo


def dd_add(a, b):
    s, e = _two_sum(a[0], b[0])
    t, f = _two_sum(a[1], b[1])
    e += t
    s, e = _quick_two_sum(s, e)
    e += f
    return _quick_two_sum(s, e)


def dd_add_f(a, b: float):
    s, e = _two_sum(a[0], b)
    e += a[1]
    return _quick_two_sum(s, e)


def dd_neg(a):
    return (-a[0], -a[1])


def dd_sub(a, b):
    return dd_add(a, (-b[0], -b[1]))


def dd_mul(a, b):
    p, e = _two_prod(a[0], b[0])
    e += a[0] * b[1] + a[1] * b[0]
    return _quick_two_sum(p, e)


def dd_mul_f(a, b: float):
    p, e = _two_prod(a[0], b)
    e += a[1] * b
    return _quick_two_sum(p, e)


def dd_div(a, b):
    q1 = a[0] / b[0]
    r = dd_sub(a, dd_mul_f(b, q1))
    q2 = (r[0] + r[1]) / b[0]
    return _quick_two_sum(q1, q2)


def dd_div_f(a, b: float):
    q1 = a[0] / b
    p, e = _two_prod(q1, b)
    r = dd_sub(a, (p, e))
    q2 = (r[0] + r[1]) / b
    return _quick_two_sum(q1, q2)


def dd_sqr(a):
    p, e = _two_prod(a[0], a[0])
    e += 2.0 * a[0] * a[1]
    return _quick_two_sum(p, e)


def dd_sqrt(a):
    if a[0] < 0.0:
        raise ValueError("dd_sqrt of negative value")
    if a[0] == 0.0:
        return (0.0, 0.0)
    x = math.sqrt(a[0])
    # one Newton step on x -> (x + a/x)/2 doubles the accuracy of the seed
    r = dd_div(a, (x, 0.0))
    s, e = _two_sum(r[0], x)
    return dd_mul_f((s, e + r[1]), 0.5)


def dd_from_fraction(fr: Fraction):
    hi = fr.numerator / fr.denominator
    rem = fr - Fraction(hi)
    lo = rem.numerator / rem.denominator
    return _quick_two_sum(hi, lo) if abs(hi) >= abs(lo) else _two_sum(hi, lo)


def dd_from_str(s: str):
    return dd_from_fraction(Fraction(s))


# exp/ln: enough range for this package (arguments stay within |x| < 700).

_LN2 = dd_from_str(
    "0.69314718055994530941723212145817656807550013436025525412068"
)
_EXP_COEFFS = 26  # Taylor terms after range reduction; |r| <= ln2/2


def dd_exp(a):
    if a[0] > 709.0:
        raise OverflowError("dd_exp overflow")
    if a[0] < -709.0:
        return (0.0, 0.0)
    k = round((a[0] + a[1]) / _LN2[0])
    r = dd_sub(a, dd_mul_f(_LN2, float(k)))
    # Taylor sum of exp(r), |r| <= ~0.347
    term = (1.0, 0.0)
    total = (1.0, 0.0)
    for i in range(1, _EXP_COEFFS):
        term = dd_div_f(dd_mul(term, r), float(i))
        total = dd_add(total, term)
        if abs(term[0]) < 1e-36 * abs(total[0]):
            break
    return dd_mul_f(total, math.ldexp(1.0, k))  # scaling by 2**k is exact


def dd_ln(a):
    if a[0] <= 0.0:
        raise ValueError("dd_ln of non-positive value")
    y = (math.log(a[0]), 0.0)
    # two Newton steps: y <- y + a*exp(-y) - 1
    for _ in range(2):
        ey = dd_exp(dd_neg(y))
        y = dd_add(y, dd_add_f(dd_mul(a, ey), -1.0))
    return y


def dd_powi(a, n: int):
    if n == 0:
        return (1.0, 0.0)
    inv = n < 0
    n = abs(n)
    result = (1.0, 0.0)
    base = a
    while n:
        if n & 1:
            result = dd_mul(result, base)
        base = dd_sqr(base)
        n >>= 1
    return dd_div((1.0, 0.0), result) if inv else result


Scalar = Union["XReal", int, float, Fraction]


class XReal:
    """Extended-precision real: hi + lo pair of binary64 values.

    ``lo`` is zero when extended precision is disabled (plain promotion of
    a float).  Arithmetic is associative only up to the ~1e-32 relative
    rounding of the representation; summation helpers in
    :mod:`airylog.kernel` state their error model explicitly.
    """

    __slots__ = ("hi", "lo")

    def __init__(self, hi: float, lo: float = 0.0):
        self.hi = float(hi)
        self.lo = float(lo)

    # -- construction ----------------------------------------------------
    @classmethod
    def from_pair(cls, pair) -> "XReal":
        x = object.__new__(cls)
        x.hi, x.lo = pair
        return x

    @classmethod
    def from_fraction(cls, fr: Fraction) -> "XReal":
        return cls.from_pair(dd_from_fraction(fr))

    @classmethod
    def parse(cls, s: str) -> "XReal":
        return cls.from_pair(dd_from_str(s))

    @staticmethod
    def _coerce(v: Scalar):
        if isinstance(v, XReal):
            return (v.hi, v.lo)
        if isinstance(v, Fraction):
            return dd_from_fraction(v)
        if isinstance(v, int) and abs(v) > 2**53:
            return dd_from_fraction(Fraction(v))
        return (float(v), 0.0)

    @property
    def pair(self):
        return (self.hi, self.lo)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other: Scalar):
        return XReal.from_pair(dd_add(self.pair, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other: Scalar):
        return XReal.from_pair(dd_sub(self.pair, self._coerce(other)))

    def __rsub__(self, other: Scalar):
        return XReal.from_pair(dd_sub(self._coerce(other), self.pair))

    def __mul__(self, other: Scalar):
        return XReal.from_pair(dd_mul(self.pair, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar):
        return XReal.from_pair(dd_div(self.pair, self._coerce(other)))

    def __rtruediv__(self, other: Scalar):
        return XReal.from_pair(dd_div(self._coerce(other), self.pair))

    def __neg__(self):
        return XReal(-self.hi, -self.lo)

    def __abs__(self):
        return -self if self.hi < 0 else self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("XReal ** only supports integer exponents")
        return XReal.from_pair(dd_powi(self.pair, n))

    def sqrt(self) -> "XReal":
        return XReal.from_pair(dd_sqrt(self.pair))

    def exp(self) -> "XReal":
        return XReal.from_pair(dd_exp(self.pair))

    def ln(self) -> "XReal":
        return XReal.from_pair(dd_ln(self.pair))

    # -- comparisons (on the exact represented value) --------------------
    def _cmp(self, other: Scalar) -> int:
        o = self._coerce(other)
        d = dd_sub(self.pair, o)
        v = d[0] if d[0] != 0.0 else d[1]
        return (v > 0) - (v < 0)

    def __eq__(self, other):
        try:
            return self._cmp(other) == 0
        except TypeError:
            return NotImplemented

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        return hash((self.hi, self.lo))

    def __float__(self):
        return self.hi + self.lo

    def __repr__(self):
        return f"XReal({self.hi!r}, {self.lo!r})"

    def __format__(self, spec):
        return format(float(self), spec)


ZERO = XReal(0.0)
ONE = XReal(1.0)

# Trusted literal constants (40 digits).
PI = XReal.parse("3.141592653589793238462643383279502884197169399375105820975")
TWO_PI = XReal.from_pair(dd_mul_f(PI.pair, 2.0))
SQRT3 = XReal.from_pair(dd_sqrt((3.0, 0.0)))
SQRT_PI = XReal.from_pair(dd_sqrt(PI.pair))
EULER_GAMMA = XReal.parse(
    "0.5772156649015328606065120900824024310421593359399235988058"
)
LN3 = XReal.from_pair(dd_ln((3.0, 0.0)))
