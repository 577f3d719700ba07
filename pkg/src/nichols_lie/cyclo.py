"""Exact arithmetic in the cyclotomic field Q(zeta_L).

Every scalar in the package (braiding entries, bilinear-form values,
coproduct coefficients) is a :class:`Cyclotomic`.  An element is stored as
an integer vector over the power basis ``1, z, ..., z^(phi(L)-1)`` together
with a positive common denominator, always reduced modulo the L-th
cyclotomic polynomial.  Equality is therefore a plain tuple comparison.

A computation session fixes one conductor; mixing elements of different
conductors raises :class:`ConductorMismatchError`.

>>> F = CyclotomicField(6)
>>> w = F.root(3, 1)
>>> 1 + w + w**2
0
>>> (1 - w**2) * (1 - w)
3
"""

import cmath
import re
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd

from .errors import (
    ConductorMismatchError,
    CyclotomicZeroDivisionError,
    DomainError,
    LiteralParseError,
)

__all__ = [
    "Cyclotomic",
    "CyclotomicField",
    "cyclotomic_polynomial",
    "make_root",
    "parse_literal",
    "literal_orders",
    "session_conductor",
]


def _lcm(a, b):
    return a * b // gcd(a, b)


def _poly_divexact(num, den):
    """Exact division of integer polynomials (low degree first), den monic."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise DomainError("cyclotomic polynomial needs n >= 1")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


class CyclotomicField:
    """The field Q(zeta_L) for a fixed conductor L.

    Instances are cached per conductor, so ``CyclotomicField(12) is
    CyclotomicField(12)``.
    """

    _instances = {}

    def __new__(cls, conductor):
        conductor = int(conductor)
        if conductor < 1:
            raise DomainError("conductor must be a positive integer")
        inst = cls._instances.get(conductor)
        if inst is None:
            inst = super().__new__(cls)
            inst._setup(conductor)
            cls._instances[conductor] = inst
        return inst

    def _setup(self, L):
        self.conductor = L
        self.modulus = cyclotomic_polynomial(L)
        self.degree = phi = len(self.modulus) - 1
        # x^e reduced mod Phi_L, for e = phi .. 2*phi - 2 (product overflow range)
        red = {}
        vec = [-c for c in self.modulus[:phi]]  # x^phi
        for e in range(phi, 2 * phi - 1):
            red[e] = tuple(vec)
            top = vec[-1]
            vec = [0] + vec[:-1]
            if top:
                for i in range(phi):
                    vec[i] -= top * self.modulus[i]
        self._overflow = [(e, red[e]) for e in range(2 * phi - 2, phi - 1, -1)]
        # z^k for every k mod L
        powers = []
        vec = [0] * phi
        vec[0] = 1
        for _ in range(L):
            powers.append(tuple(vec))
            top = vec[-1]
            vec = [0] + vec[:-1]
            if top:
                for i in range(phi):
                    vec[i] -= top * self.modulus[i]
        self._powers = powers
        self._zero_vec = (0,) * phi
        self.zero = Cyclotomic._raw(self, self._zero_vec, 1)
        self.one = Cyclotomic._raw(self, powers[0], 1)
        self._root_cache = {}

    def __repr__(self):
        return f"CyclotomicField({self.conductor})"

    def _mulvec(self, a, b):
        """Product of two integer coefficient vectors, reduced mod Phi_L."""
        phi = self.degree
        prod = [0] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        for e, vec in self._overflow:
            c = prod[e]
            if c:
                for i, r in enumerate(vec):
                    if r:
                        prod[i] += c * r
        return tuple(prod[:phi])

    def __reduce__(self):
        return (CyclotomicField, (self.conductor,))

    # -- constructors -------------------------------------------------
    def zeta_power(self, k):
        """zeta_L^k for any integer k."""
        k %= self.conductor
        el = self._root_cache.get(k)
        if el is None:
            el = Cyclotomic._raw(self, self._powers[k], 1)
            self._root_cache[k] = el
        return el

    def root(self, order, exponent=1):
        """zeta_order^exponent, embedded in this field."""
        order = int(order)
        if order < 1 or self.conductor % order:
            raise ConductorMismatchError(
                f"root order {order} does not divide the conductor {self.conductor}"
            )
        return self.zeta_power((self.conductor // order) * exponent)

    def __call__(self, value):
        """Coerce an int, Fraction or Cyclotomic into the field."""
        if isinstance(value, Cyclotomic):
            if value.field is not self:
                raise ConductorMismatchError(
                    f"element of conductor {value.field.conductor} used in field "
                    f"of conductor {self.conductor}"
                )
            return value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return Cyclotomic._raw(self, (value,) + self._zero_vec[1:], 1)
        if isinstance(value, Fraction):
            return Cyclotomic._make(
                self, (value.numerator,) + self._zero_vec[1:], value.denominator
            )
        raise TypeError(f"cannot coerce {type(value).__name__} into {self!r}")

    def from_coeffs(self, coeffs):
        """Build sum c_k zeta_L^k from a mapping k -> rational (any k)."""
        acc = [Fraction(0)] * self.degree
        for k, c in coeffs.items():
            c = Fraction(c)
            if not c:
                continue
            for i, r in enumerate(self._powers[k % self.conductor]):
                if r:
                    acc[i] += c * r
        den = reduce(_lcm, (c.denominator for c in acc), 1)
        return Cyclotomic._make(
            self, tuple(int(c * den) for c in acc), den
        )

    def parse(self, text):
        return parse_literal(text, self.conductor)


def session_conductor(orders):
    """lcm of the given root orders, doubled if needed so that -1 is present."""
    L = 2
    for n in orders:
        L = _lcm(L, int(n))
    return L


def make_root(order, exponent, conductor):
    """zeta_order^exponent inside Q(zeta_conductor)."""
    return CyclotomicField(conductor).root(order, exponent)


class Cyclotomic:
    """Immutable element of Q(zeta_L)."""

    __slots__ = ("field", "_num", "_den", "_hash")

    @classmethod
    def _raw(cls, field, num, den):
        self = object.__new__(cls)
        self.field = field
        self._num = num
        self._den = den
        self._hash = None
        return self

    @classmethod
    def _make(cls, field, num, den):
        if den != 1:
            g = den
            for c in num:
                if c:
                    g = gcd(g, c)
                    if g == 1:
                        break
            if den < 0:
                g = -g
            if g != 1:
                num = tuple(c // g for c in num)
                den //= g
        return cls._raw(field, tuple(num), den)

    # -- inspection ---------------------------------------------------
    @property
    def conductor(self):
        return self.field.conductor

    @property
    def coeffs(self):
        """Sparse map exponent -> Fraction over the reduced power basis."""
        return {
            k: Fraction(c, self._den) for k, c in enumerate(self._num) if c
        }

    def is_zero(self):
        return not any(self._num)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self):
        return not any(self._num[1:])

    def key(self):
        """Total order key, used only for canonical sorting."""
        return (self._den, self._num)

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.field is not self.field:
                raise ConductorMismatchError(
                    f"conductors {self.field.conductor} and "
                    f"{other.field.conductor} differ"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d1, d2 = self._den, other._den
        if d1 == d2:
            return Cyclotomic._make(
                self.field, tuple(a + b for a, b in zip(self._num, other._num)), d1
            )
        return Cyclotomic._make(
            self.field,
            tuple(a * d2 + b * d1 for a, b in zip(self._num, other._num)),
            d1 * d2,
        )

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.field, tuple(-a for a in self._num), self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if type(other) is int:
            return Cyclotomic._make(self.field, tuple(a * other for a in self._num), self._den)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic._make(
            self.field, self.field._mulvec(self._num, other._num), self._den * other._den
        )

    __rmul__ = __mul__

    def inv(self):
        """Multiplicative inverse; raises on zero."""
        if self.is_zero():
            raise CyclotomicZeroDivisionError("inverse of zero in cyclotomic field")
        F = self.field
        phi = F.degree
        if self.is_rational():
            return Cyclotomic._make(
                F, (self._den,) + F._zero_vec[1:], self._num[0]
            )
        # columns: self * z^j ; solve M x = e_0 over Q
        cols = [F._mulvec(self._num, F._powers[j]) for j in range(phi)]
        rows = [[Fraction(cols[j][i]) for j in range(phi)] + [Fraction(i == 0)]
                for i in range(phi)]
        for c in range(phi):
            p = next(r for r in range(c, phi) if rows[r][c])
            rows[c], rows[p] = rows[p], rows[c]
            pv = rows[c][c]
            rows[c] = [x / pv for x in rows[c]]
            for r in range(phi):
                if r != c and rows[r][c]:
                    f = rows[r][c]
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
        sol = [rows[i][phi] for i in range(phi)]
        den = reduce(_lcm, (x.denominator for x in sol), 1)
        # the scale of self was dropped via its numerator only
        num = tuple(int(x * den) * self._den for x in sol)
        return Cyclotomic._make(F, num, den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inv()

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            return self.inv() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparison ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return (
                self.field is other.field
                and self._den == other._den
                and self._num == other._num
            )
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self._num[0], self._den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._num[0], self._den))
            else:
                self._hash = hash((self.field.conductor, self._num, self._den))
        return self._hash

    # -- number theory ------------------------------------------------
    def order(self):
        """Multiplicative order if self is a root of unity, else None."""
        if self.is_zero():
            raise DomainError("order of zero is undefined")
        m = _lcm(2, self.field.conductor)
        if self ** m != 1:
            return None
        for d in _divisors(m):
            if self ** d == 1:
                return d
        return None  # pragma: no cover

    def discrete_log(self):
        """k with self == zeta_L^k, or None when self is not such a power."""
        F = self.field
        if self._den != 1:
            return None
        for k, vec in enumerate(F._powers):
            if vec == self._num:
                return k
        return None

    # -- rendering ----------------------------------------------------
    def to_complex(self):
        L = self.field.conductor
        z = cmath.exp(2j * cmath.pi / L)
        return sum(c * z ** k for k, c in enumerate(self._num)) / self._den

    def literal(self):
        """Canonical text literal, parseable by :func:`parse_literal`."""
        if self.is_zero():
            return "0"
        L = self.field.conductor
        if sum(1 for c in self._num if c) > 1:
            # roots of unity read better as a single power than in the basis
            for sign, x in (("", self), ("-", -self)):
                k = x.discrete_log()
                if k:
                    return sign + _root_atom(k, L)
        parts = []
        for k, c in enumerate(self._num):
            if not c:
                continue
            coef = Fraction(c, self._den)
            if k == 0:
                atom = None
            else:
                atom = _root_atom(k, L)
            mag = abs(coef)
            if atom is None:
                body = str(mag)
            elif mag == 1:
                body = atom
            else:
                body = f"{mag}*{atom}"
            parts.append((coef < 0, body))
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __str__(self):
        return self.literal()

    def __repr__(self):
        return f"Cyclotomic({self.literal()!r}, L={self.field.conductor})"

    def approx(self, digits=6):
        z = self.to_complex()
        return f"{z.real:.{digits}f}{z.imag:+.{digits}f}i"


def _root_atom(k, L):
    """zeta_L^k written with the reduced order, e.g. z3^2 rather than z6^4."""
    g = gcd(k, L)
    n, e = L // g, k // g
    if n == 2:
        return "-1"
    return f"z{n}" if e == 1 else f"z{n}^{e}"


# -- literal grammar ---------------------------------------------------------
#   expr   := ['+'|'-'] term (('+'|'-') term)*
#   term   := factor ('*' factor)*
#   factor := INT ['/' INT] | 'z' INT ['^' ['-'] INT]

_TOKEN = re.compile(r"\s*(?:(\d+)|(z)|([-+*/^]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise LiteralParseError(f"unexpected character {text[bad]!r}", text, bad)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("z", None, start))
        else:
            tokens.append((m.group(3), None, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


def _parse_terms(text):
    """Parse into a list of (Fraction coefficient, [(order, exponent), ...])."""
    toks = _tokenize(text)
    i = 0

    def peek():
        return toks[i]

    def take(kind):
        nonlocal i
        tok = toks[i]
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[0])
            raise LiteralParseError(f"expected {kind}, found {what}", text, tok[2])
        i += 1
        return tok

    def factor():
        nonlocal i
        tok = peek()
        if tok[0] == "int":
            i += 1
            num = tok[1]
            if peek()[0] == "/":
                i += 1
                den = take("int")
                if den[1] == 0:
                    raise LiteralParseError("zero denominator", text, den[2])
                return Fraction(num, den[1]), None
            return Fraction(num), None
        if tok[0] == "z":
            i += 1
            order = take("int")
            if order[1] == 0:
                raise LiteralParseError("root order must be positive", text, order[2])
            exp = 1
            if peek()[0] == "^":
                i += 1
                sign = 1
                if peek()[0] == "-":
                    i += 1
                    sign = -1
                exp = sign * take("int")[1]
            return Fraction(1), (order[1], exp)
        what = "end of input" if tok[0] == "end" else repr(tok[0])
        raise LiteralParseError(f"expected a number or z-literal, found {what}", text, tok[2])

    def term(sign):
        nonlocal i
        coef, roots = Fraction(sign), []
        while True:
            c, r = factor()
            coef *= c
            if r is not None:
                roots.append(r)
            if peek()[0] != "*":
                return coef, roots
            i += 1

    terms = []
    sign = 1
    if peek()[0] in "+-":
        sign = -1 if peek()[0] == "-" else 1
        i += 1
    terms.append(term(sign))
    while peek()[0] in ("+", "-"):
        sign = -1 if peek()[0] == "-" else 1
        i += 1
        terms.append(term(sign))
    if peek()[0] != "end":
        raise LiteralParseError(f"unexpected token {peek()[0]!r}", text, peek()[2])
    return terms


def literal_orders(text):
    """Root orders mentioned by a literal (used to pick a session conductor)."""
    return sorted({n for _, roots in _parse_terms(str(text)) for n, _ in roots})


def parse_literal(text, conductor=None):
    """Parse a literal such as ``-z24^4`` or ``1 - z3^2``."""
    text = str(text)
    terms = _parse_terms(text)
    if conductor is None:
        conductor = session_conductor(n for _, roots in terms for n, _ in roots)
    F = CyclotomicField(conductor)
    acc = F.zero
    for coef, roots in terms:
        val = F(coef)
        for n, e in roots:
            val = val * F.root(n, e)
        acc = acc + val
    return acc
