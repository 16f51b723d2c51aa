"""Exact polynomial arithmetic over the integers.

``IntPoly`` is a univariate polynomial in ``q``, ``BiPoly`` a bivariate
polynomial in ``(x, y)`` and ``RatFunc`` a reduced quotient of two
``IntPoly`` values.  All three are immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import DivisionByZero, NonIntegerCoefficients, NotAPolynomial

_NEG_INF = float("-inf")


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _render_term(coeff: int, mono: str, first: bool) -> str:
    sign = "-" if coeff < 0 else ("" if first else "+")
    a = abs(coeff)
    if not mono:
        return f"{sign}{a}"
    if a == 1:
        return f"{sign}{mono}"
    return f"{sign}{a}{mono}"


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


class IntPoly:
    """Polynomial in q with unbounded integer coefficients.

    ``coeffs[d]`` is the coefficient of ``q**d``; trailing zeros are stripped so
    the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _strip(int(c) for c in coeffs)

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def q(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def monomial(cls, d: int, c: int = 1) -> IntPoly:
        return cls([0] * d + [c])

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else _NEG_INF

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c:
                parts.append(_render_term(c, _power("q", d), not parts))
        return "".join(parts)

    @staticmethod
    def _coerce(other) -> IntPoly:
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly.const(other)
        raise TypeError(f"cannot combine IntPoly with {type(other).__name__}")

    def __add__(self, other) -> IntPoly:
        o = self._coerce(other).coeffs
        a = self.coeffs
        if len(a) < len(o):
            a, o = o, a
        out = list(a)
        for i, c in enumerate(o):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> IntPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> IntPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        o = self._coerce(other).coeffs
        a = self.coeffs
        if not a or not o:
            return IntPoly()
        out = [0] * (len(a) + len(o) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(o):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPoly:
        if n < 0:
            raise ValueError("negative power")
        result = IntPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        return poly_eval(self, x)

    def divmod_exact_lead(self, other: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Division by a polynomial whose leading coefficient is +-1."""
        if not other:
            raise DivisionByZero("polynomial division by zero")
        if abs(other.leading) != 1:
            raise ValueError("divisor must have unit leading coefficient")
        rem = list(self.coeffs)
        d = len(other.coeffs) - 1
        lead = other.leading
        quot = [0] * max(len(rem) - d, 0)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i] * lead
            if c:
                quot[i - d] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - d + j] -= c * b
        return IntPoly(quot), IntPoly(rem)

    def exact_div(self, other: IntPoly) -> IntPoly:
        """Quotient self/other, raising NotAPolynomial if it is not in Z[q]."""
        if not other:
            raise DivisionByZero("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        d = len(other.coeffs) - 1
        lead = other.leading
        quot = [Fraction(0)] * max(len(rem) - d, 0)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i] / lead
            if c:
                quot[i - d] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - d + j] -= c * b
        if any(rem) or any(c.denominator != 1 for c in quot):
            raise NotAPolynomial(f"{self} is not divisible by {other} in Z[q]")
        return IntPoly(int(c) for c in quot)

    def primitive(self) -> IntPoly:
        """Divide out the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.leading < 0:
            c = -c
        return IntPoly(x // c for x in self.coeffs)


def poly_eval(p: IntPoly, q0):
    """Horner evaluation; exact for ints and Fractions."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * q0 + c
    return acc


def poly_interpolate(points: Sequence[tuple[int, int]]) -> IntPoly:
    """Lagrange interpolation through integer points.

    Returns the unique polynomial of degree < len(points); raises
    NonIntegerCoefficients if any of its coefficients is not an integer.
    """
    if not points:
        raise ValueError("need at least one point")
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    n = len(points)
    total = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        # basis numerator prod_{j != i} (q - xj), built in ascending order
        basis = [Fraction(1)]
        denom = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for d in range(len(basis) - 1):
                basis[d] -= xj * basis[d + 1]
            denom *= xi - xj
        scale = Fraction(yi, denom)
        for d, c in enumerate(basis):
            total[d] += scale * c
    if any(c.denominator != 1 for c in total):
        raise NonIntegerCoefficients(f"interpolant has coefficients {[str(c) for c in total]}")
    return IntPoly(int(c) for c in total)


def _prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder of a by b."""
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    lb = b.leading
    while len(rem) - 1 >= db and rem:
        c = rem[-1]
        shift = len(rem) - 1 - db
        rem = [x * lb for x in rem]
        for j, y in enumerate(b.coeffs):
            rem[shift + j] -= c * y
        rem = list(_strip(rem))
    return IntPoly(rem)


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Greatest common divisor in Q[q], returned primitive with positive lead."""
    a, b = a.primitive(), b.primitive()
    while b:
        a, b = b, _prem(a, b).primitive()
    return a.primitive()


class RatFunc:
    """Reduced rational function num/den in q.

    Canonical form: gcd(num, den) is a unit in Q[q], the integer contents are
    coprime and den has positive leading coefficient.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, _reduced: bool = False):
        num = IntPoly._coerce(num)
        den = IntPoly._coerce(den)
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    @classmethod
    def normalize(cls, num: IntPoly, den: IntPoly) -> RatFunc:
        return cls(num, den)

    def is_polynomial(self) -> bool:
        return self.den.coeffs == (1,)

    def assert_polynomial(self) -> IntPoly:
        if not self.is_polynomial():
            raise NotAPolynomial(f"({self.num})/({self.den}) is not a polynomial")
        return self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, IntPoly)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash(("RatFunc", self.num.coeffs, self.den.coeffs))

    def __repr__(self) -> str:
        return f"RatFunc({self.num!s}, {self.den!s})"

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"

    @staticmethod
    def _coerce(other) -> RatFunc:
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, IntPoly)):
            return RatFunc(other, 1, _reduced=True) if isinstance(other, IntPoly) else RatFunc(other)
        if isinstance(other, Fraction):
            return RatFunc(other.numerator, other.denominator)
        raise TypeError(f"cannot combine RatFunc with {type(other).__name__}")

    def __add__(self, other) -> RatFunc:
        o = self._coerce(other)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other) -> RatFunc:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> RatFunc:
        return self._coerce(other) - self

    def __mul__(self, other) -> RatFunc:
        o = self._coerce(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RatFunc:
        o = self._coerce(other)
        if not o:
            raise DivisionByZero("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> RatFunc:
        return self._coerce(other) / self


def _reduce(num: IntPoly, den: IntPoly) -> tuple[IntPoly, IntPoly]:
    if not num:
        return IntPoly(), IntPoly.const(1)
    if len(den.coeffs) > 1 and len(num.coeffs) > 0:
        g = poly_gcd(num, den)
        if len(g.coeffs) > 1:
            num = num.exact_div(g)
            den = den.exact_div(g)
    c = gcd(num.content(), den.content())
    if den.leading < 0:
        c = -c
    if c != 1:
        num = IntPoly(x // c for x in num.coeffs)
        den = IntPoly(x // c for x in den.coeffs)
    return num, den


def ratfunc_normalize(num: IntPoly, den: IntPoly) -> RatFunc:
    return RatFunc(num, den)


class BiPoly:
    """Polynomial in (x, y); ``terms`` maps (i, j) to the coefficient of x^i y^j."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self.terms = {k: int(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def const(cls, c: int) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> BiPoly:
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> BiPoly:
        return cls({(0, 1): 1})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BiPoly.const(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(("BiPoly", frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"BiPoly({dict(sorted(self.terms.items()))})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, key=lambda ij: (-ij[0], -ij[1])):
            mono = _power("x", i) + _power("y", j)
            parts.append(_render_term(self.terms[(i, j)], mono, not parts))
        return "".join(parts)

    @staticmethod
    def _coerce(other) -> BiPoly:
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, int):
            return BiPoly.const(other)
        raise TypeError(f"cannot combine BiPoly with {type(other).__name__}")

    def __add__(self, other) -> BiPoly:
        out = dict(self.terms)
        for k, v in self._coerce(other).terms.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> BiPoly:
        return self + (-self._coerce(other))

    def __mul__(self, other) -> BiPoly:
        o = self._coerce(other)
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in o.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> BiPoly:
        result = BiPoly.const(1)
        for _ in range(n):
            result = result * self
        return result

    def evaluate(self, x, y):
        return sum(c * x**i * y**j for (i, j), c in self.terms.items())

    def specialize_x(self, x0: int) -> IntPoly:
        """Substitute x = x0 and return the result as a polynomial in q = y."""
        out: dict[int, int] = {}
        for (i, j), c in self.terms.items():
            out[j] = out.get(j, 0) + c * x0**i
        deg = max(out, default=-1)
        return IntPoly(out.get(d, 0) for d in range(deg + 1))


def parse_intpoly(text: str) -> IntPoly:
    """Inverse of ``str(IntPoly)``; accepts the same 'q^2+5q+11' syntax."""
    s = text.replace(" ", "")
    if s in ("", "0"):
        return IntPoly()
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict[int, int] = {}
    i = 0
    while i < len(s):
        sign = -1 if s[i] == "-" else 1
        i += 1
        j = i
        while j < len(s) and s[j] not in "+-":
            j += 1
        term = s[i:j]
        i = j
        if "q" in term:
            c_str, _, e_str = term.partition("q")
            c = int(c_str) if c_str else 1
            e = int(e_str[1:]) if e_str.startswith("^") else 1
        else:
            c, e = int(term), 0
        coeffs[e] = coeffs.get(e, 0) + sign * c
    deg = max(coeffs)
    return IntPoly(coeffs.get(d, 0) for d in range(deg + 1))
