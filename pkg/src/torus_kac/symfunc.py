"""Rogers-Szego generating functions for supernova Kac polynomials.

Symmetric polynomials in k alphabets are kept in the monomial basis
``m_{lam^1}(x_1) ... m_{lam^k}(x_k)`` with each alphabet truncated to r
variables, which is exact for the degrees <= r used here.

The log series is taken in the variable ``V = U/(q-1)`` so that every
intermediate coefficient has an integer denominator; the powers of (q-1)
come back in a single reduction per coefficient at the end, which is where
integrality is asserted.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import permutations
from math import comb
from typing import Iterator, Mapping

from .errors import NonPolynomialCoefficient, NotAPartition, NotAPolynomial, SizeMismatch
from .exactmath import IntPoly, RatFunc
from .quiver import MultiPartition

Part = tuple[int, ...]
Key = tuple[Part, ...]


def q_factorial(n: int) -> IntPoly:
    """(1-q)(1-q^2)...(1-q^n)."""
    out = IntPoly.const(1)
    for i in range(1, n + 1):
        out = out * (IntPoly.const(1) - IntPoly.monomial(i))
    return out


def q_multinomial(s: int, lam: Part) -> IntPoly:
    if sum(lam) != s:
        raise SizeMismatch(f"{lam} is not a partition of {s}")
    den = IntPoly.const(1)
    for part in lam:
        den = den * q_factorial(part)
    return q_factorial(s).exact_div(den)


def partitions(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Part]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first, None if max_len is None else max_len - 1):
            yield (first,) + rest


def _arrangements(lam: Part, n: int) -> set[tuple[int, ...]]:
    return set(permutations(lam + (0,) * (n - len(lam))))


@lru_cache(maxsize=None)
def monomial_product(n: int, lam: Part, nu: Part) -> tuple[tuple[Part, int], ...]:
    """Structure constants of m_lam * m_nu in n variables, by expanding exponent vectors."""
    if len(lam) > n or len(nu) > n:
        return ()
    hits: Counter = Counter()
    for a in _arrangements(lam, n):
        for b in _arrangements(nu, n):
            hits[tuple(x + y for x, y in zip(a, b))] += 1
    out: Counter = Counter()
    for vec, c in hits.items():
        key = tuple(sorted((x for x in vec if x), reverse=True))
        out[key] += c
    # each monomial of m_kappa is hit equally often; divide by the orbit size
    result = []
    for kappa, c in sorted(out.items()):
        orbit = len(_arrangements(kappa, n))
        assert c % orbit == 0
        result.append((kappa, c // orbit))
    return tuple(result)


class SymPoly:
    """Sum of coeff * m_{lam^1}(x_1)...m_{lam^k}(x_k), coefficients in Q(q)."""

    __slots__ = ("k", "nvars", "coeffs")

    def __init__(self, k: int, nvars: int, coeffs: Mapping[Key, RatFunc] | None = None):
        self.k = k
        self.nvars = nvars
        self.coeffs: dict[Key, RatFunc] = {key: c for key, c in (coeffs or {}).items() if c}

    @classmethod
    def one(cls, k: int, nvars: int) -> SymPoly:
        return cls(k, nvars, {((),) * k: RatFunc(1)})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymPoly):
            return NotImplemented
        return (self.k, self.nvars, self.coeffs) == (other.k, other.nvars, other.coeffs)

    def __repr__(self) -> str:
        return f"SymPoly(k={self.k}, {format_sympoly(self)})"

    def __add__(self, other: SymPoly) -> SymPoly:
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out[key] + c if key in out else c
        return SymPoly(self.k, self.nvars, out)

    def scale(self, c) -> SymPoly:
        return SymPoly(self.k, self.nvars, {key: v * c for key, v in self.coeffs.items()})

    def __mul__(self, other: SymPoly) -> SymPoly:
        n = self.nvars
        acc: dict[Key, RatFunc] = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                prod = c1 * c2
                expansions = [monomial_product(n, a, b) for a, b in zip(k1, k2)]
                for key, mult in _tensor(expansions):
                    term = prod * mult
                    acc[key] = acc[key] + term if key in acc else term
        return SymPoly(self.k, n, acc)

    def coefficient(self, key: Key) -> RatFunc:
        return self.coeffs.get(key, RatFunc(0))


def _tensor(expansions) -> Iterator[tuple[Key, int]]:
    if not expansions:
        yield (), 1
        return
    head, *tail = expansions
    for rest, m in _tensor(tail):
        for kappa, c in head:
            yield (kappa,) + rest, c * m


def rogers_szego(s: int, nvars: int) -> SymPoly:
    """R_s = sum over partitions lam of s of [s; lam]_q m_lam (single alphabet)."""
    return SymPoly(1, nvars, {(lam,): RatFunc(q_multinomial(s, lam)) for lam in partitions(s, max_len=nvars)})


def _rogers_szego_product(s: int, k: int, nvars: int) -> SymPoly:
    single = [(lam, q_multinomial(s, lam)) for lam in partitions(s, max_len=nvars)]
    coeffs: dict[Key, RatFunc] = {}

    def rec(depth: int, key: Key, c: IntPoly):
        if depth == k:
            coeffs[key] = RatFunc(c)
            return
        for lam, m in single:
            rec(depth + 1, key + (lam,), c * m)

    rec(0, (), IntPoly.const(1))
    return SymPoly(k, nvars, coeffs)


class USeries:
    """Truncated exponential generating function: terms[s] multiplies U^s/s!, s = 0..order."""

    def __init__(self, order: int, terms: list[SymPoly]):
        self.order = order
        self.terms = terms

    def __mul__(self, other: USeries) -> USeries:
        k, n = self.terms[0].k, self.terms[0].nvars
        out = []
        for s in range(self.order + 1):
            acc = SymPoly(k, n)
            for j in range(s + 1):
                a, b = self.terms[j], other.terms[s - j]
                if a.coeffs and b.coeffs:
                    acc = acc + (a * b).scale(comb(s, j))
            out.append(acc)
        return USeries(self.order, out)

    def __add__(self, other: USeries) -> USeries:
        return USeries(self.order, [a + b for a, b in zip(self.terms, other.terms)])

    def scale(self, c) -> USeries:
        return USeries(self.order, [t.scale(c) for t in self.terms])


def log_one_plus(series: USeries) -> USeries:
    """log(1 + S) = sum_{m >= 1} (-1)^{m+1} S^m / m, for S without constant term."""
    assert not series.terms[0].coeffs
    total = series
    power = series
    for m in range(2, series.order + 1):
        power = power * series
        total = total + power.scale(RatFunc((-1) ** (m + 1)) / m)
    return total


@lru_cache(maxsize=None)
def genfun_series(r: int, k: int) -> USeries:
    """The EGF coefficients A_1..A_r of (q-1) log sum_s R_s(x_1)...R_s(x_k) (U/(q-1))^s/s!.

    ``terms[0]`` is empty; every stored coefficient is a polynomial in q.
    """
    if r < 1 or k < 1:
        raise ValueError("need r >= 1 and k >= 1")
    n = r
    terms = [SymPoly(k, n)] + [_rogers_szego_product(s, k, n) for s in range(1, r + 1)]
    logv = log_one_plus(USeries(r, terms))
    qm1 = IntPoly((-1, 1))
    out = [SymPoly(k, n)]
    for s in range(1, r + 1):
        # coefficient of U^s/s! is (q-1) * L_s / (q-1)^s
        scale_den = qm1 ** (s - 1)
        coeffs = {}
        for key, c in logv.terms[s].coeffs.items():
            reduced = RatFunc(c.num, c.den * scale_den)
            try:
                reduced.assert_polynomial()
            except NotAPolynomial as exc:
                raise NonPolynomialCoefficient(f"A_{s}[{key}] = {reduced} is not in Z[q]") from exc
            coeffs[key] = reduced
        out.append(SymPoly(k, n, coeffs))
    return USeries(r, out)


def sorted_tilde(mu: MultiPartition) -> Key:
    """Each (r - |mu^i|, mu^i_1, ...) sorted into a partition of r.

    h_lambda does not depend on the order of its parts, so sorting is harmless;
    only a negative first entry (|mu^i| > r) is rejected.
    """
    key = []
    for leg in mu.legs:
        if mu.r < leg.size:
            raise NotAPartition(f"(r - |mu|, mu) = {(mu.r - leg.size,) + leg.parts} has a negative part")
        key.append(tuple(sorted((p for p in (mu.r - leg.size,) + leg.parts if p), reverse=True)))
    return tuple(key)


def kac_via_genfun(mu: MultiPartition) -> IntPoly:
    """Coefficient of m_{sort(tilde mu^1)}(x_1)...m_{sort(tilde mu^k)}(x_k) in A_r."""
    key = sorted_tilde(mu)
    series = genfun_series(mu.r, mu.k)
    return series.terms[mu.r].coefficient(key).assert_polynomial()


def format_key(key: Key) -> str:
    return "".join("m[" + ",".join(str(p) for p in lam) + "]" for lam in key)


def format_sympoly(sp: SymPoly) -> str:
    return " + ".join(f"({c}){format_key(key)}" for key, c in sorted(sp.coeffs.items())) or "0"


def genfun_lines(r: int, k: int) -> list[str]:
    """Text rendering used by the CLI: a header per A_s, then 'm[...]: poly' lines."""
    series = genfun_series(r, k)
    lines = []
    for s in range(1, r + 1):
        lines.append(f"A_{s}:")
        for key, c in sorted(series.terms[s].coeffs.items()):
            lines.append(f"{format_key(key)}: {c}")
    return lines
