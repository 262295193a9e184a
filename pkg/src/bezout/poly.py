"""Exact univariate polynomials over the rationals.

Coefficients are stored in ascending order: ``coeffs[j]`` is the coefficient
of ``z**j``.  The zero polynomial has no coefficients and no degree; asking
for its degree returns the :data:`ZERO_DEGREE` marker rather than an integer.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import ParseError, PreconditionError

RationalLike = Union[int, Fraction, str]


class _ZeroDegree:
    """Degree marker of the zero polynomial.  Refuses arithmetic and ordering."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO_DEGREE"

    def __reduce__(self):
        return (_ZeroDegree, ())


ZERO_DEGREE = _ZeroDegree()


def to_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational coefficient")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(q: Fraction) -> str:
    """Reduced ``"p/q"`` form, or plain ``"p"`` for integers."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Polynomial:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [to_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> Polynomial:
        return cls(())

    @classmethod
    def constant(cls, c: RationalLike) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, power: int, c: RationalLike = 1) -> Polynomial:
        return cls([0] * power + [c])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self):
        return degree(self)

    def coeff(self, j: int) -> Fraction:
        """Coefficient of ``z**j``; zero beyond the stored range."""
        if 0 <= j < len(self._coeffs):
            return self._coeffs[j]
        return Fraction(0)

    def padded(self, length: int) -> list[Fraction]:
        if length < len(self._coeffs):
            raise PreconditionError(f"polynomial of degree {len(self._coeffs) - 1} does not fit in {length} coefficients")
        return list(self._coeffs) + [Fraction(0)] * (length - len(self._coeffs))

    def leading(self) -> Fraction:
        if not self._coeffs:
            raise PreconditionError("the zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def monic(self) -> Polynomial:
        lc = self.leading()
        return Polynomial(c / lc for c in self._coeffs)

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self._coeffs), len(other._coeffs))
        return Polynomial(self.coeff(j) + other.coeff(j) for j in range(n))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self._coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dg = len(other._coeffs) - 1
        lc = other._coeffs[-1]
        if len(rem) <= dg:
            return Polynomial(), self
        quot = [Fraction(0)] * (len(rem) - dg)
        for k in range(len(rem) - 1, dg - 1, -1):
            c = rem[k] / lc
            quot[k - dg] = c
            if c:
                for j, b in enumerate(other._coeffs):
                    rem[k - dg + j] -= c * b
        return Polynomial(quot), Polynomial(rem[:dg])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: Polynomial) -> Polynomial:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __call__(self, z: RationalLike) -> Fraction:
        return evaluate(self, z)

    # comparison / display

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(format_rational(c) for c in self._coeffs)}])"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self, var: str = "z") -> str:
        """Canonical text that :func:`parse_poly` reads back to the same polynomial."""
        if self.is_zero():
            return "0"
        parts = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = format_rational(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{format_rational(mag)}*{power}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)


def _coerce(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Polynomial.constant(x)
    return NotImplemented


class HomogeneousPoly:
    """Binary form ``sum_j coeffs[j] * y**(n-j) * z**j`` of total degree ``n``."""

    __slots__ = ("coeffs", "n")

    def __init__(self, coeffs: Sequence[RationalLike], n: int):
        if len(coeffs) != n + 1:
            raise ValueError(f"a form of degree {n} needs exactly {n + 1} coefficients, got {len(coeffs)}")
        self.coeffs = tuple(to_rational(c) for c in coeffs)
        self.n = n

    def y_multiplicity(self) -> int:
        """Largest e with y**e dividing the form (trailing zero coefficients)."""
        e = 0
        for c in reversed(self.coeffs):
            if c != 0:
                break
            e += 1
        return e

    def dehomogenize(self) -> Polynomial:
        """Set y = 1."""
        return Polynomial(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomogeneousPoly):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.n, self.coeffs))

    def __repr__(self) -> str:
        return f"HomogeneousPoly([{', '.join(format_rational(c) for c in self.coeffs)}], n={self.n})"


def degree(p: Polynomial):
    if p.is_zero():
        return ZERO_DEGREE
    return len(p.coeffs) - 1


def evaluate(p: Polynomial, z: RationalLike) -> Fraction:
    """Horner evaluation at an exact rational point."""
    z = to_rational(z)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * z + c
    return acc


def euclid_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic greatest common divisor by the Euclidean remainder sequence."""
    if f.is_zero() and g.is_zero():
        raise PreconditionError("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def cofactors(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Return ``(fhat, ghat, h)`` with ``h = gcd(f, g)``, ``f = fhat*h``, ``g = ghat*h``."""
    h = euclid_gcd(f, g)
    return f.exact_div(h), g.exact_div(h), h


def homogenize(p: Polynomial, n: int) -> HomogeneousPoly:
    if p.is_zero():
        raise PreconditionError("cannot homogenize the zero polynomial")
    if n < 1:
        raise PreconditionError("homogenization degree must be positive")
    d = degree(p)
    if n < d:
        raise PreconditionError(f"homogenization degree {n} is below deg p = {d}")
    return HomogeneousPoly(p.padded(n + 1), n)


# parsing

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*^()]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            col = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[col]!r}", col, text)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, var: str):
        self.text = text
        self.var = var
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, tok) -> ParseError:
        return ParseError(message, tok[2], self.text)

    def parse(self) -> Polynomial:
        result = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise self.fail(f"unexpected {tok[1]!r}", tok)
        return result

    def expr(self) -> Polynomial:
        acc = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("+", "-"):
            self.take()
            inner = self.factor()
            return -inner if tok[1] == "-" else inner
        base = self.primary()
        while self.peek()[:2] == ("op", "^"):
            self.take()
            exp_tok = self.take()
            if exp_tok[0] != "num" or "/" in exp_tok[1]:
                raise self.fail("exponent must be a nonnegative integer", exp_tok)
            base = base ** int(exp_tok[1])
        return base

    def primary(self) -> Polynomial:
        tok = self.take()
        kind, value, pos = tok
        if kind == "num":
            num, _, den = value.partition("/")
            if den and int(den) == 0:
                raise self.fail("zero denominator", tok)
            return Polynomial.constant(Fraction(int(num), int(den) if den else 1))
        if kind == "name":
            if value != self.var:
                raise self.fail(f"unknown symbol {value!r}", tok)
            return Polynomial.monomial(1)
        if tok[:2] == ("op", "("):
            inner = self.expr()
            close = self.take()
            if close[:2] != ("op", ")"):
                raise self.fail("expected ')'", close)
            return inner
        if kind == "end":
            raise self.fail("unexpected end of input", tok)
        raise self.fail(f"unexpected {value!r}", tok)


def parse_poly(text: str, var: str = "z") -> Polynomial:
    """Parse and expand a polynomial expression in ``var``.

    Grammar: ``+ - *`` between terms, ``^`` with a nonnegative integer
    exponent, parentheses, and rational literals ``p`` or ``p/q``.
    """
    if len(var) != 1 or not var.isalpha():
        raise ValueError(f"variable must be a single letter, got {var!r}")
    return _Parser(text, var).parse()
