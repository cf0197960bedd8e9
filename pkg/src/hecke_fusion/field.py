"""
Exact coefficient arithmetic.

Three layers, composable into towers such as Q(q)(z):

* ``QQ`` -- arbitrary precision rationals (``gmpy2.mpq``).
* :class:`Poly` -- dense univariate polynomials over any exact field.
* :class:`RatFunc` -- reduced fractions of polynomials with a monic
  denominator, living in a :class:`FractionField`.

A fraction field is itself a valid coefficient domain, so
``frac_field(frac_field(QQ, 'q'), 'z')`` is the field of rational functions
in ``z`` whose coefficients are rational functions in ``q``.

Every value is immutable and every operation returns a canonical form, so
``==`` decides equality of field elements.
"""

from __future__ import annotations

from functools import lru_cache
from numbers import Rational
from typing import Any, Sequence

from gmpy2 import lcm, mpq, mpz

__all__ = [
    "QQ", "QRat", "Poly", "RatFunc", "FractionField", "frac_field",
    "PoleError", "bracket", "eval_at", "q_integer", "q_factorial", "q_power",
    "domain_of", "ratfunc_to_json", "ratfunc_from_json", "common_denominator",
]

QRat = type(mpq(0))


class PoleError(ZeroDivisionError):
    """A denominator vanished: division by zero or evaluation at a pole.

    ``order`` is the vanishing order of the denominator at the offending
    point when it is known (0 for a plain division by zero).
    """

    def __init__(self, message: str, order: int = 0):
        super().__init__(message)
        self.order = order


class RationalField:
    """The field Q, realized by ``gmpy2.mpq``."""

    zero = mpq(0)
    one = mpq(1)
    name = "QQ"

    def __call__(self, x: Any) -> QRat:
        return self.convert(x)

    def convert(self, x: Any) -> QRat:
        if isinstance(x, QRat):
            return x
        if isinstance(x, (int, Rational)) or type(x).__name__ == "mpz":
            return mpq(x)
        if isinstance(x, str):
            return mpq(x)
        raise TypeError(f"cannot convert {x!r} to a rational")

    def to_json(self, x: QRat) -> str:
        return f"{x.numerator}/{x.denominator}"

    def from_json(self, data: Any) -> QRat:
        if isinstance(data, int):
            return mpq(data)
        return mpq(str(data))

    def format(self, x: QRat) -> str:
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def __repr__(self) -> str:
        return "QQ"


QQ = RationalField()


def domain_of(x: Any):
    """The coefficient domain an element lives in."""
    if isinstance(x, RatFunc):
        return x.field
    return QQ


# --------------------------------------------------------------------------
# polynomials


def _trim(c: list) -> tuple:
    while c and not c[-1]:
        c.pop()
    return tuple(c)


class Poly:
    """Dense polynomial; ``coeffs[i]`` multiplies ``var**i``.

    The zero polynomial has an empty coefficient tuple, otherwise the
    leading coefficient is nonzero.
    """

    __slots__ = ("coeffs", "domain")

    def __init__(self, coeffs: Sequence, domain):
        self.coeffs = coeffs if type(coeffs) is tuple else _trim(list(coeffs))
        self.domain = domain

    @classmethod
    def constant(cls, c, domain) -> Poly:
        return cls((c,) if c else (), domain)

    # basic queries
    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1]

    def is_one(self) -> bool:
        c = self.coeffs
        return len(c) == 1 and c[0] == self.domain.one

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # ring operations
    def __add__(self, other: Poly) -> Poly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        c = list(a)
        for i, x in enumerate(b):
            c[i] = c[i] + x
        if len(a) == len(b):
            return Poly(_trim(c), self.domain)
        return Poly(tuple(c), self.domain)

    def __neg__(self) -> Poly:
        return Poly(tuple(-x for x in self.coeffs), self.domain)

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly((), self.domain)
        if len(b) == 1:
            s = b[0]
            return Poly(tuple(x * s for x in a), self.domain)
        if len(a) == 1:
            s = a[0]
            return Poly(tuple(s * x for x in b), self.domain)
        zero = self.domain.zero
        c = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                c[i + j] = c[i + j] + x * y
        return Poly(tuple(c), self.domain)

    def scale(self, s) -> Poly:
        if not s:
            return Poly((), self.domain)
        return Poly(tuple(x * s for x in self.coeffs), self.domain)

    def monic(self) -> Poly:
        if not self.coeffs or self.coeffs[-1] == self.domain.one:
            return self
        inv = self.domain.one / self.coeffs[-1]
        return Poly(tuple(x * inv for x in self.coeffs[:-1]) + (self.domain.one,), self.domain)

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        b = other.coeffs
        if not b:
            raise PoleError("polynomial division by zero")
        db = len(b) - 1
        r = list(self.coeffs)
        if len(r) - 1 < db:
            return Poly((), self.domain), self
        inv = self.domain.one / b[-1]
        monic_b = inv == self.domain.one
        q = [self.domain.zero] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if not c:
                continue
            if not monic_b:
                c = c * inv
            q[i - db] = c
            off = i - db
            for j in range(db):
                if b[j]:
                    r[off + j] = r[off + j] - c * b[j]
            r[i] = self.domain.zero
        return Poly(_trim(q), self.domain), Poly(_trim(r[:db]), self.domain)

    def __floordiv__(self, other: Poly) -> Poly:
        return self.divmod(other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return self.divmod(other)[1]

    def exquo(self, other: Poly) -> Poly:
        """Exact quotient; the caller guarantees divisibility."""
        if other.is_one():
            return self
        quo, rem = self.divmod(other)
        assert not rem, "inexact polynomial division"
        return quo

    def __call__(self, x):
        acc = self.domain.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm (exact, deterministic)."""
    if a.degree < b.degree:
        a, b = b, a
    if not b:
        return a.monic() if a else a
    if b.degree == 0 or a.degree == 0:
        return Poly((a.domain.one,), a.domain)
    if a == b:
        return a.monic()
    while b:
        if b.degree == 0:
            return Poly((a.domain.one,), a.domain)
        a, b = b, a.divmod(b)[1].monic()
    return a.monic()


# --------------------------------------------------------------------------
# rational functions


class FractionField:
    """The field K(var) of rational functions over an exact field K."""

    def __init__(self, base, var: str):
        self.base = base
        self.var = var
        self._zero_poly = Poly((), base)
        self._one_poly = Poly((base.one,), base)
        self.zero = RatFunc(self._zero_poly, self._one_poly, self, _canonical=True)
        self.one = RatFunc(self._one_poly, self._one_poly, self, _canonical=True)

    @property
    def name(self) -> str:
        return f"{self.base.name}({self.var})"

    def __repr__(self) -> str:
        return self.name

    def gen(self) -> RatFunc:
        return RatFunc(Poly((self.base.zero, self.base.one), self.base), self._one_poly, self,
                       _canonical=True)

    def poly(self, coeffs: Sequence) -> Poly:
        conv = self.base.convert
        return Poly([conv(c) for c in coeffs], self.base)

    def from_polys(self, num: Poly, den: Poly) -> RatFunc:
        return RatFunc(num, den, self)

    def from_coeffs(self, num: Sequence, den: Sequence = (1,)) -> RatFunc:
        return RatFunc(self.poly(num), self.poly(den), self)

    def convert(self, x: Any) -> RatFunc:
        if isinstance(x, RatFunc):
            if x.field is self:
                return x
            if x.field == self.base:
                return self.constant(x)
            raise TypeError(f"cannot coerce element of {x.field} into {self}")
        return self.constant(self.base.convert(x))

    __call__ = convert

    def constant(self, c) -> RatFunc:
        if not c:
            return self.zero
        return RatFunc(Poly((c,), self.base), self._one_poly, self, _canonical=True)

    def to_json(self, x: RatFunc) -> dict:
        return ratfunc_to_json(x)

    def from_json(self, data: Any) -> RatFunc:
        return ratfunc_from_json(data, self)

    def format(self, x: RatFunc) -> str:
        return str(x)


@lru_cache(maxsize=None)
def frac_field(base, var: str) -> FractionField:
    """The (cached, hence identity-comparable) field ``base(var)``."""
    return FractionField(base, var)


class RatFunc:
    """An element ``num/den`` of a :class:`FractionField`.

    Canonical form: ``gcd(num, den) = 1`` and ``den`` monic; zero is ``0/1``.
    """

    __slots__ = ("num", "den", "field")

    def __init__(self, num: Poly, den: Poly, field: FractionField, _canonical: bool = False):
        if not _canonical:
            if not den:
                raise PoleError("zero denominator")
            if not num:
                den = field._one_poly
            elif not den.is_one():
                g = poly_gcd(num, den)
                if not g.is_one():
                    num = num.exquo(g)
                    den = den.exquo(g)
                lc = den.lc
                if lc != field.base.one:
                    inv = field.base.one / lc
                    num = num.scale(inv)
                    den = den.scale(inv)
        self.num = num
        self.den = den
        self.field = field

    # coercion helper
    def _coerce(self, other) -> RatFunc | None:
        if isinstance(other, RatFunc):
            if other.field is self.field:
                return other
            if other.field == self.field.base:
                return self.field.constant(other)
            if self.field == other.field.base:
                return None
            raise TypeError(f"incompatible fields {self.field} and {other.field}")
        try:
            return self.field.constant(self.field.base.convert(other))
        except TypeError:
            return None

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc) or other.field is not self.field:
            try:
                other = self._coerce(other)
            except TypeError:
                return False
            if other is None:
                return False
        return self.num.coeffs == other.num.coeffs and self.den.coeffs == other.den.coeffs

    def __hash__(self) -> int:
        if self.den.is_one() and len(self.num.coeffs) <= 1:
            return hash(self.num.coeffs[0]) if self.num.coeffs else hash(0)
        return hash((self.num.coeffs, self.den.coeffs))

    def is_constant(self) -> bool:
        return self.den.is_one() and self.num.degree <= 0

    def constant_value(self):
        """The base-field value of a constant element."""
        assert self.is_constant()
        return self.num.coeffs[0] if self.num.coeffs else self.field.base.zero

    def __add__(self, other) -> RatFunc:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        F = self.field
        a, b, c, d = self.num, self.den, o.num, o.den
        if b.is_one() and d.is_one():
            return RatFunc(a + c, b, F, _canonical=True)
        if d.is_one():
            return RatFunc(a + c * b, b, F, _canonical=True)
        if b.is_one():
            return RatFunc(a * d + c, d, F, _canonical=True)
        # Henrici
        g = poly_gcd(b, d)
        if g.is_one():
            return RatFunc(a * d + c * b, b * d, F, _canonical=True)
        b1 = b.exquo(g)
        d1 = d.exquo(g)
        t = a * d1 + c * b1
        if not t:
            return F.zero
        g2 = poly_gcd(t, g)
        if not g2.is_one():
            t = t.exquo(g2)
            g = g.exquo(g2)
        return RatFunc(t, b1 * d1 * g, F, _canonical=True)

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        return RatFunc(-self.num, self.den, self.field, _canonical=True)

    def __sub__(self, other) -> RatFunc:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> RatFunc:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> RatFunc:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        F = self.field
        if not self.num or not o.num:
            return F.zero
        a, b, c, d = self.num, self.den, o.num, o.den
        if b.is_one() and d.is_one():
            return RatFunc(a * c, b, F, _canonical=True)
        g1 = poly_gcd(a, d)
        g2 = poly_gcd(c, b)
        if not g1.is_one():
            a = a.exquo(g1)
            d = d.exquo(g1)
        if not g2.is_one():
            c = c.exquo(g2)
            b = b.exquo(g2)
        return RatFunc(a * c, b * d, F, _canonical=True)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if not self.num:
            raise PoleError("division by zero in " + self.field.name)
        num, den = self.den, self.num
        lc = den.lc
        one = self.field.base.one
        if lc != one:
            inv = one / lc
            num = num.scale(inv)
            den = den.scale(inv)
        return RatFunc(num, den, self.field, _canonical=True)

    def __truediv__(self, other) -> RatFunc:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> RatFunc:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int) -> RatFunc:
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __repr__(self) -> str:
        return f"RatFunc({self})"

    def __str__(self) -> str:
        num = _format_poly(self.num, self.field)
        if self.den.is_one():
            return num
        den = _format_poly(self.den, self.field)
        if len(self.num.coeffs) > 1 and _has_plus(num):
            num = f"({num})"
        if _has_plus(den) or "*" in den:
            den = f"({den})"
        return f"{num}/{den}"


def _has_plus(s: str) -> bool:
    return " + " in s or " - " in s


def _format_coeff(c, base) -> str:
    if isinstance(c, RatFunc):
        s = str(c)
        return f"({s})" if (_has_plus(s) or "/" in s) else s
    return base.format(c) if hasattr(base, "format") else str(c)


def _format_poly(p: Poly, field: FractionField) -> str:
    if not p.coeffs:
        return "0"
    var = field.var
    parts = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if not c:
            continue
        if i == 0:
            mono = ""
        elif i == 1:
            mono = var
        else:
            mono = f"{var}^{i}"
        neg = False
        if not isinstance(c, RatFunc) and c < 0:
            neg, c = True, -c
        elif isinstance(c, RatFunc) and c.is_constant() and c.constant_value() < 0:
            neg, c = True, -c
        cs = _format_coeff(c, field.base)
        if mono and cs == "1":
            term = mono
        elif mono:
            term = f"{cs}*{mono}"
        else:
            term = cs
        if not parts:
            parts.append(f"-{term}" if neg else term)
        else:
            parts.append(("- " if neg else "+ ") + term)
    return " ".join(parts)


# --------------------------------------------------------------------------
# helpers built on the field


def q_power(q, c: int):
    """``q**c`` for a field element ``q`` and any integer ``c``."""
    if c >= 0:
        return q ** c
    return domain_of(q).one / (q ** (-c))


def bracket(x, q):
    """The bracket ``(1 - q)/(1 - x)``; raises :class:`PoleError` at ``x = 1``."""
    one = domain_of(x).one if isinstance(x, RatFunc) else domain_of(q).one
    den = one - x
    if not den:
        raise PoleError("bracket has a pole at x = 1", order=1)
    return (one - q) / den


def q_integer(m: int, q):
    """``[m]_q = (1 - q^m)/(1 - q) = 1 + q + ... + q^(m-1)``."""
    acc = domain_of(q).zero
    p = domain_of(q).one
    for _ in range(m):
        acc = acc + p
        p = p * q
    return acc


def q_factorial(n: int, q=None):
    """``[1]_q [2]_q ... [n]_q``; ``q`` defaults to the generator of Q(q)."""
    if n < 1:
        raise ValueError("q_factorial needs n >= 1")
    if q is None:
        q = frac_field(QQ, "q").gen()
    acc = domain_of(q).one
    for m in range(1, n + 1):
        acc = acc * q_integer(m, q)
    return acc


def eval_at(f: RatFunc, point):
    """Substitute ``point`` (an element of the base field) for the variable.

    Raises :class:`PoleError` carrying the vanishing order of the
    denominator when ``point`` is a pole of ``f``.
    """
    base = f.field.base
    point = base.convert(point) if not isinstance(point, RatFunc) or point.field is not base else point
    d = f.den(point)
    if d:
        return f.num(point) / d
    # f is reduced, so the numerator does not vanish; report the pole order
    lin = Poly((-point, base.one), base)
    order, den = 0, f.den
    while True:
        quo, rem = den.divmod(lin)
        if rem:
            break
        order += 1
        den = quo
    raise PoleError(f"pole of order {order} at {f.field.var} = {point}", order=order)


def ratfunc_to_json(f: RatFunc) -> dict:
    base = f.field.base
    return {
        "num": [base.to_json(c) for c in f.num.coeffs],
        "den": [base.to_json(c) for c in f.den.coeffs],
    }


def ratfunc_from_json(data: dict, field: FractionField) -> RatFunc:
    base = field.base
    num = Poly([base.from_json(c) for c in data["num"]], base)
    den = Poly([base.from_json(c) for c in data["den"]], base)
    return RatFunc(num, den, field)


def value_to_json(x):
    """JSON for a coefficient of any supported domain."""
    if isinstance(x, RatFunc):
        return ratfunc_to_json(x)
    return QQ.to_json(x)


def value_from_json(data, domain):
    return domain.from_json(data)


def common_denominator(values, domain):
    """The lcm of the denominators, as an element of ``domain``.

    Multiplying every value by it leaves only polynomials (or integers),
    whose products need no gcd.
    """
    if isinstance(domain, FractionField):
        acc = domain._one_poly
        for v in values:
            d = v.den
            if d.is_one():
                continue
            g = poly_gcd(acc, d)
            acc = (acc * d.exquo(g)).monic()
        return RatFunc(acc, domain._one_poly, domain, _canonical=True)
    acc = mpz(1)
    for v in values:
        acc = lcm(acc, v.denominator)
    return mpq(acc)


def is_rational(x) -> bool:
    return isinstance(x, QRat)

