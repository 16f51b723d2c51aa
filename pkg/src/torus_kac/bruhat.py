"""Parabolic cross-sections of S_r, inversion graphs and echelon forms over F_p.

Permutations are in one-line notation with 1-based values: ``w[j-1] = w(j)``.
Row blocks of a composition ``(c_1, ..., c_d)`` are read top-down in the
reversed order ``c_d, c_{d-1}, ..., c_1``; the same reversed order splits the
values ``1..r`` into blocks for the cross-section.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .errors import InvalidInput, NotEchelon, RankDeficient
from .graph import ColoredMultigraph

Permutation = tuple[int, ...]
PermTuple = tuple[Permutation, ...]


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise InvalidInput(f"negative part in {parts}")
        object.__setattr__(self, "parts", tuple(p for p in parts if p))

    @property
    def total(self) -> int:
        return sum(self.parts)


def value_blocks(c: Composition) -> list[range]:
    blocks = []
    start = 1
    for size in reversed(c.parts):
        blocks.append(range(start, start + size))
        start += size
    return blocks


def check_permutation(w: Sequence[int]) -> Permutation:
    w = tuple(int(x) for x in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise InvalidInput(f"{list(w)} is not a permutation of 1..{len(w)}")
    return w


def inverse(w: Permutation) -> Permutation:
    inv = [0] * len(w)
    for j, x in enumerate(w, start=1):
        inv[x - 1] = j
    return tuple(inv)


def _in_section(w: Permutation, blocks: list[range]) -> bool:
    winv = inverse(w)
    for b in blocks:
        pos = [winv[i - 1] for i in b]
        if any(a > b_ for a, b_ in zip(pos, pos[1:])):
            return False
    return True


def cross_section(c: Composition) -> list[Permutation]:
    """All w in S_r with w^{-1} increasing on every value block, sorted lexicographically.

    Built directly: choose which positions carry each block's values, then fill
    them in increasing order.  The result has multinomial(r; c) elements.
    """
    r = c.total
    if r < 1:
        raise InvalidInput("composition must have positive total")
    blocks = value_blocks(c)
    out: list[Permutation] = []

    def place(bi: int, free: tuple[int, ...], w: list[int]):
        if bi == len(blocks):
            out.append(tuple(w))
            return
        block = blocks[bi]
        for chosen in combinations(free, len(block)):
            for pos, val in zip(chosen, block):
                w[pos - 1] = val
            rest = tuple(p for p in free if p not in chosen)
            place(bi + 1, rest, w)

    place(0, tuple(range(1, r + 1)), [0] * r)
    out.sort()
    return out


def cross_section_bruteforce(c: Composition) -> list[Permutation]:
    """Filter all of S_r by the defining monotonicity condition (test oracle)."""
    blocks = value_blocks(c)
    return sorted(w for w in permutations(range(1, c.total + 1)) if _in_section(w, blocks))


def inversions(w: Sequence[int]) -> set[tuple[int, int]]:
    """{(i, j) : j < i and w(j) > w(i)}."""
    r = len(w)
    return {(i, j) for i in range(1, r + 1) for j in range(1, i) if w[j - 1] > w[i - 1]}


def inversion_count(w: Sequence[int]) -> int:
    r = len(w)
    return sum(1 for i in range(r) for j in range(i) if w[j] > w[i])


def inversion_graph(wt: Sequence[Sequence[int]]) -> ColoredMultigraph:
    """Edge {i, j} of color t for every inversion (i, j) of w_t (colors are 1-based)."""
    if not wt:
        raise InvalidInput("need at least one permutation")
    r = len(wt[0])
    if any(len(w) != r for w in wt):
        raise InvalidInput("all permutations in a tuple must have the same size")
    edges = []
    for t, w in enumerate(wt, start=1):
        edges.extend((j, i, t) for i, j in inversions(w))
    return ColoredMultigraph(r, edges)


def w0_conjugate(w: Sequence[int]) -> Permutation:
    r = len(w)
    return tuple(r + 1 - w[r - j] for j in range(1, r + 1))


def format_perm(w: Sequence[int]) -> str:
    if len(w) <= 9:
        return "".join(str(x) for x in w)
    return "[" + ",".join(str(x) for x in w) + "]"


def parse_perm(text: str) -> Permutation:
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise InvalidInput(f"unterminated permutation {text!r}")
        vals = [int(x) for x in text[1:-1].split(",") if x.strip()]
    else:
        if not text.isdigit():
            raise InvalidInput(f"bad permutation {text!r}")
        vals = [int(ch) for ch in text]
    return check_permutation(vals)


def parse_perm_tuple(text: str) -> PermTuple:
    """'34512' or '132,312' or '[10,1,...];[...]'; tuples split on ';' or ','."""
    text = text.strip()
    if text.startswith("["):
        items = [t for t in text.split(";") if t.strip()]
    else:
        items = [t for t in text.replace(";", ",").split(",") if t.strip()]
    wt = tuple(parse_perm(t) for t in items)
    if not wt:
        raise InvalidInput("empty permutation tuple")
    if len({len(w) for w in wt}) != 1:
        raise InvalidInput("permutations of different sizes")
    return wt


# ---------------------------------------------------------------------------
# Row echelon forms over F_p


@dataclass(frozen=True)
class FFMatrix:
    p: int
    rows: tuple[tuple[int, ...], ...]

    def __init__(self, p: int, rows: Iterable[Iterable[int]]):
        if p < 2 or p > 97 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise InvalidInput(f"{p} is not a prime in [2, 97]")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "rows", tuple(tuple(int(x) % p for x in row) for row in rows))
        if len({len(r) for r in self.rows}) > 1:
            raise InvalidInput("ragged matrix")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __matmul__(self, other: FFMatrix) -> FFMatrix:
        p = self.p
        cols = list(zip(*other.rows))
        return FFMatrix(p, [[sum(a * b for a, b in zip(row, col)) % p for col in cols] for row in self.rows])

    def to_json(self) -> str:
        return json.dumps({"p": self.p, "rows": [list(r) for r in self.rows]})

    @classmethod
    def from_json(cls, text: str) -> FFMatrix:
        data = json.loads(text)
        return cls(int(data["p"]), data["rows"])

    @classmethod
    def identity(cls, p: int, n: int) -> FFMatrix:
        return cls(p, [[int(i == j) for j in range(n)] for i in range(n)])


def row_blocks(s: Composition) -> list[range]:
    """Row index ranges (0-based): first s_d rows, then s_{d-1}, ..."""
    blocks = []
    start = 0
    for size in reversed(s.parts):
        blocks.append(range(start, start + size))
        start += size
    return blocks


def pivot(row: Sequence[int]) -> int | None:
    """Column of the rightmost nonzero entry (0-based)."""
    for j in range(len(row) - 1, -1, -1):
        if row[j]:
            return j
    return None


def is_echelon(A: FFMatrix, s: Composition) -> bool:
    if s.total != len(A.rows):
        return False
    pivots = []
    for row in A.rows:
        pc = pivot(row)
        if pc is None or row[pc] != 1:
            return False
        pivots.append(pc)
    for i, pc in enumerate(pivots):
        if any(A.rows[k][pc] for k in range(i + 1, len(A.rows))):
            return False
    for block in row_blocks(s):
        ps = [pivots[i] for i in block]
        if any(a >= b for a, b in zip(ps, ps[1:])):
            return False
    return True


def in_parabolic(g: FFMatrix, s: Composition) -> bool:
    """Block lower-triangular with respect to the row blocks of s, and invertible."""
    blocks = row_blocks(s)
    where = {i: bi for bi, b in enumerate(blocks) for i in b}
    for i, row in enumerate(g.rows):
        for j, x in enumerate(row):
            if x and where[j] > where[i]:
                return False
    return _rank(g) == len(g.rows)


def _rank(A: FFMatrix) -> int:
    p = A.p
    m = [list(r) for r in A.rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def echelon_normal_form(A: FFMatrix, s: Composition) -> tuple[FFMatrix, FFMatrix]:
    """Return (g, E) with g in P_s and E = gA in row echelon form w.r.t. s.

    Every operation applied to the rows of A is mirrored on an identity matrix,
    which ends up as g.  Rows may only absorb multiples of rows from earlier
    blocks or mix within their own block, so g is block lower-triangular.
    """
    p = A.p
    n, ncols = A.shape
    if s.total != n:
        raise InvalidInput(f"composition total {s.total} != row count {n}")
    if _rank(A) < n:
        raise RankDeficient(f"matrix has rank < {n}")
    rows = [list(r) for r in A.rows]
    gmat = [[int(i == j) for j in range(n)] for i in range(n)]

    def axpy(dst: int, f: int, src: int):
        if f % p:
            rows[dst] = [(a - f * b) % p for a, b in zip(rows[dst], rows[src])]
            gmat[dst] = [(a - f * b) % p for a, b in zip(gmat[dst], gmat[src])]

    def scale(i: int, f: int):
        rows[i] = [a * f % p for a in rows[i]]
        gmat[i] = [a * f % p for a in gmat[i]]

    done: list[tuple[int, int]] = []  # (pivot column, row index) of finished rows
    for block in row_blocks(s):
        idx = list(block)
        # clear earlier pivot columns, rightmost first: each step only touches columns to its left
        for i in idx:
            for pc, src in sorted(done, reverse=True):
                axpy(i, rows[i][pc], src)
        # within the block: repeatedly extract the row with the smallest rightmost pivot
        remaining = idx[:]
        ordered: list[int] = []
        while remaining:
            # Gaussian elimination on rightmost pivots among remaining rows
            best = min(remaining, key=lambda i: (pivot(rows[i]), i))
            pc = pivot(rows[best])
            scale(best, pow(rows[best][pc], -1, p))
            for i in remaining:
                if i != best:
                    axpy(i, rows[i][pc], best)
            remaining.remove(best)
            ordered.append(best)
        # clear pivot columns in the other rows of the block, rightmost pivot first
        for a in sorted(ordered, key=lambda i: pivot(rows[i]), reverse=True):
            pc = pivot(rows[a])
            for b in ordered:
                if b != a and rows[b][pc]:
                    axpy(b, rows[b][pc], a)
        # place rows so pivots increase down the block
        perm = sorted(ordered, key=lambda i: pivot(rows[i]))
        new_rows = [rows[i] for i in perm]
        new_g = [gmat[i] for i in perm]
        for slot, i in enumerate(idx):
            rows[i], gmat[i] = new_rows[slot], new_g[slot]
        done.extend((pivot(rows[i]), i) for i in idx)
    E = FFMatrix(p, rows)
    g = FFMatrix(p, gmat)
    return g, E


def complete_echelon(E: FFMatrix, s0: int, s: Composition | None = None) -> FFMatrix:
    """Append s0 unit rows (in increasing non-pivot columns) below an echelon matrix E.

    The result is the unique invertible r x r matrix in echelon form with respect
    to (s0, s_1, ..., s_d) whose first rows are E.
    """
    n, r = E.shape
    if s is None:
        s = Composition([1] * n)
    if s0 != r - n:
        raise InvalidInput(f"s0 must equal r - n = {r - n}")
    if n and not is_echelon(E, s):
        raise NotEchelon("input is not in row echelon form")
    pivots = {pivot(row) for row in E.rows}
    extra = [[int(j == c) for j in range(r)] for c in range(r) if c not in pivots]
    full = FFMatrix(E.p, list(E.rows) + extra)
    assert is_echelon(full, Composition((s0,) + s.parts))
    return full


def permutation_matrix(w: Sequence[int], p: int = 2) -> FFMatrix:
    """a(w)_{ij} = delta_{i, w(j)}."""
    r = len(w)
    return FFMatrix(p, [[int(i == w[j - 1]) for j in range(1, r + 1)] for i in range(1, r + 1)])
