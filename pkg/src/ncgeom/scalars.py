"""Exact arithmetic in the rational function field Q(q).

Polynomials in ``q`` with integer coefficients are plain tuples of ints in
ascending degree order with no trailing zeros; the zero polynomial is ``()``.
:class:`ScalarQ` keeps a numerator/denominator pair of such tuples in a
canonical form:

* the numerator and denominator share no common factor in Z[q]
  (polynomial gcd and integer content both removed),
* the denominator has a positive leading coefficient,
* zero is ``() / (1,)``.

Z[q] is a UFD whose units are +-1, so the form above is unique and two
scalars are equal exactly when their tuples agree.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Union

PolyZ = tuple  # tuple[int, ...], ascending degree

_ONE: PolyZ = (1,)


class PoleError(ZeroDivisionError):
    """Evaluation hit a zero of the denominator."""


# ---------------------------------------------------------------------------
# PolyZ helpers
# ---------------------------------------------------------------------------

def _trim(c: list) -> PolyZ:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def padd(a: PolyZ, b: PolyZ) -> PolyZ:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def psub(a: PolyZ, b: PolyZ) -> PolyZ:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, x in enumerate(b):
        out[i] -= x
    return _trim(out)


def pneg(a: PolyZ) -> PolyZ:
    return tuple(-x for x in a)


def pscale(a: PolyZ, k: int) -> PolyZ:
    if k == 0:
        return ()
    return tuple(k * x for x in a)


def pmul(a: PolyZ, b: PolyZ) -> PolyZ:
    if not a or not b:
        return ()
    if len(a) == 1:
        return pscale(b, a[0])
    if len(b) == 1:
        return pscale(a, b[0])
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def pshift(a: PolyZ, k: int) -> PolyZ:
    """Multiply by q**k (k >= 0)."""
    if not a or k == 0:
        return a
    return (0,) * k + a


def valuation(a: PolyZ) -> int:
    """Largest k with q**k dividing a; 0 for the zero polynomial."""
    for i, x in enumerate(a):
        if x:
            return i
    return 0


def content(a: PolyZ) -> int:
    g = 0
    for x in a:
        g = math.gcd(g, x)
        if g == 1:
            break
    return g


def primitive(a: PolyZ) -> PolyZ:
    """Divide out the content and make the leading coefficient positive."""
    if not a:
        return a
    c = content(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return a
    return tuple(x // c for x in a)


def pdivexact(a: PolyZ, b: PolyZ) -> PolyZ:
    """Exact division a / b in Z[q]; raises ArithmeticError if inexact."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    if len(b) == 1:
        k = b[0]
        if any(x % k for x in a):
            raise ArithmeticError("inexact polynomial division")
        return tuple(x // k for x in a)
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    quo = [0] * (len(a) - db) if len(a) > db else []
    for i in range(len(a) - 1 - db, -1, -1):
        top = rem[i + db]
        if top == 0:
            continue
        if top % lb:
            raise ArithmeticError("inexact polynomial division")
        f = top // lb
        quo[i] = f
        for j, y in enumerate(b):
            rem[i + j] -= f * y
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return _trim(quo)


def _prem(a: PolyZ, b: PolyZ) -> PolyZ:
    """Pseudo-remainder of a by b (deg a >= deg b >= 0)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        top = r[-1]
        shift = len(r) - 1 - db
        r = [lb * x for x in r]
        for j, y in enumerate(b):
            r[shift + j] -= top * y
        r = list(_trim(r))
    return tuple(r)


def poly_gcd(a: PolyZ, b: PolyZ) -> PolyZ:
    """Primitive gcd in Z[q] with positive leading coefficient; gcd(0, 0) = 0.

    The integer content is deliberately dropped: the result is the gcd of the
    primitive parts.
    """
    return _poly_gcd(_trim(list(a)), _trim(list(b)))


@lru_cache(maxsize=65536)
def _poly_gcd(a: PolyZ, b: PolyZ) -> PolyZ:
    if not a:
        return primitive(b)
    if not b:
        return primitive(a)
    # monomial shortcut: the only primitive divisors of c*q^k are q^j
    if len(b) - valuation(b) == 1 or len(a) - valuation(a) == 1:
        return (0,) * min(valuation(a), valuation(b)) + (1,)
    a, b = primitive(a), primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return _ONE
        r = _prem(a, b)
        a, b = b, primitive(r)
    return primitive(a)


def render_poly(a: PolyZ, var: str = "q") -> str:
    """Canonical text, decreasing degree: ``q^2 - 1``, ``-3*q + 2``."""
    if not a:
        return "0"
    parts = []
    for deg in range(len(a) - 1, -1, -1):
        c = a[deg]
        if c == 0:
            continue
        mag = abs(c)
        if deg == 0:
            body = str(mag)
        else:
            mono = var if deg == 1 else f"{var}^{deg}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def poly_eval(a: PolyZ, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------
# ScalarQ
# ---------------------------------------------------------------------------

def _normalize(num: PolyZ, den: PolyZ) -> tuple[PolyZ, PolyZ]:
    if not den:
        raise ZeroDivisionError("scalar division by zero")
    if not num:
        return (), _ONE
    if den is _ONE or den == _ONE:
        return num, _ONE
    g = _poly_gcd(num, den)
    if g != _ONE:
        num = pdivexact(num, g)
        den = pdivexact(den, g)
    c = math.gcd(content(num), content(den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    return num, den


ScalarLike = Union["ScalarQ", int, Fraction]


class ScalarQ:
    """An element of Q(q) in canonical form. Immutable."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: PolyZ = (), den: PolyZ = _ONE, *, _normal: bool = False):
        if not _normal:
            num, den = _normalize(_trim(list(num)), _trim(list(den)))
        self.num = num
        self.den = den
        self._hash = None

    # constructors ---------------------------------------------------------
    @classmethod
    def from_int(cls, k: int) -> "ScalarQ":
        return cls((k,) if k else (), _ONE, _normal=True)

    @classmethod
    def from_fraction(cls, f) -> "ScalarQ":
        f = Fraction(f)
        return cls((f.numerator,), (f.denominator,))

    @classmethod
    def coerce(cls, x) -> "ScalarQ":
        if isinstance(x, ScalarQ):
            return x
        if isinstance(x, int):
            return cls.from_int(x)
        if isinstance(x, Rational):
            return cls.from_fraction(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to ScalarQ")

    # predicates -------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == _ONE and self.den == _ONE

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def __bool__(self) -> bool:
        return bool(self.num)

    # arithmetic -------------------------------------------------------------
    def __neg__(self) -> "ScalarQ":
        return ScalarQ(pneg(self.num), self.den, _normal=True)

    def __add__(self, other) -> "ScalarQ":
        if not isinstance(other, ScalarQ):
            try:
                other = ScalarQ.coerce(other)
            except TypeError:
                return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            if self.den == _ONE:
                return ScalarQ(padd(self.num, other.num), _ONE, _normal=True)
            return ScalarQ(padd(self.num, other.num), self.den)
        num = padd(pmul(self.num, other.den), pmul(other.num, self.den))
        return ScalarQ(num, pmul(self.den, other.den))

    __radd__ = __add__

    def __sub__(self, other) -> "ScalarQ":
        if not isinstance(other, ScalarQ):
            try:
                other = ScalarQ.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "ScalarQ":
        return ScalarQ.coerce(other) - self

    def __mul__(self, other) -> "ScalarQ":
        if not isinstance(other, ScalarQ):
            try:
                other = ScalarQ.coerce(other)
            except TypeError:
                return NotImplemented
        if not self.num or not other.num:
            return ZERO
        if self.den == _ONE and other.den == _ONE:
            return ScalarQ(pmul(self.num, other.num), _ONE, _normal=True)
        # cross-cancel keeps the intermediate sizes down
        g1 = _poly_gcd(self.num, other.den)
        g2 = _poly_gcd(other.num, self.den)
        n1, d2 = self.num, other.den
        n2, d1 = other.num, self.den
        if g1 != _ONE:
            n1, d2 = pdivexact(n1, g1), pdivexact(d2, g1)
        if g2 != _ONE:
            n2, d1 = pdivexact(n2, g2), pdivexact(d1, g2)
        return ScalarQ(pmul(n1, n2), pmul(d1, d2))

    __rmul__ = __mul__

    def inverse(self) -> "ScalarQ":
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(q)")
        return ScalarQ(self.den, self.num)

    def __truediv__(self, other) -> "ScalarQ":
        if not isinstance(other, ScalarQ):
            try:
                other = ScalarQ.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "ScalarQ":
        return ScalarQ.coerce(other) / self

    def __pow__(self, k: int) -> "ScalarQ":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def mul_qpow(self, k: int) -> "ScalarQ":
        """Multiply by q**k without a general gcd."""
        if k == 0 or not self.num:
            return self
        num, den = self.num, self.den
        if k > 0:
            v = valuation(den)
            c = min(k, v)
            if c:
                den = den[c:]
            return ScalarQ(pshift(num, k - c), den, _normal=True)
        k = -k
        v = valuation(num)
        c = min(k, v)
        if c:
            num = num[c:]
        return ScalarQ(num, pshift(den, k - c), _normal=True)

    # comparison / hashing ---------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, ScalarQ):
            try:
                other = ScalarQ.coerce(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = self._hash = hash((self.num, self.den))
        return h

    # rendering --------------------------------------------------------------
    def render(self) -> str:
        """``num/den``; ``/1`` suppressed, multi-term parts parenthesized."""
        n = render_poly(self.num)
        if self.den == _ONE:
            return n
        d = render_poly(self.den)
        if _needs_parens(self.num):
            n = f"({n})"
        if _needs_parens(self.den) or len(self.den) > 1 and self.den[-1] != 1:
            d = f"({d})"
        return f"{n}/{d}"

    __str__ = render

    def __repr__(self) -> str:
        return f"ScalarQ({self.render()!r})"

    def evaluate(self, q0):
        return scalar_eval(self, q0)


def _needs_parens(p: PolyZ) -> bool:
    return sum(1 for x in p if x) > 1


ZERO = ScalarQ((), _ONE, _normal=True)
ONE = ScalarQ(_ONE, _ONE, _normal=True)
Q = ScalarQ((0, 1), _ONE, _normal=True)


@lru_cache(maxsize=None)
def qpow(k: int) -> ScalarQ:
    """q**k for any integer k."""
    if k >= 0:
        return ScalarQ((0,) * k + (1,), _ONE, _normal=True)
    return ScalarQ(_ONE, (0,) * (-k) + (1,), _normal=True)


def scalar(x) -> ScalarQ:
    return ScalarQ.coerce(x)


def scalar_arith(op: str, a: ScalarLike, b: ScalarLike) -> ScalarQ:
    a, b = ScalarQ.coerce(a), ScalarQ.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown scalar operation {op!r}")


def scalar_eval(a: ScalarQ, q0):
    """Substitute q = q0 (an exact rational or a complex double).

    Raises PoleError when the denominator vanishes at q0.
    """
    if isinstance(q0, (int, Rational)) and not isinstance(q0, bool):
        q0 = Fraction(q0)
    d = poly_eval(a.den, q0)
    if d == 0:
        raise PoleError(f"{a.render()} has a pole at q = {q0}")
    return poly_eval(a.num, q0) / d
