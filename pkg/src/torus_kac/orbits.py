"""Finite-field brute-force counts that check the Kac polynomial pipelines.

Two oracles are provided: a per-cell count of unipotent coordinates whose
nonzero pattern gives a connected graph, and a torus-orbit count on products
of partial flag varieties over F_p.  Both are plain enumerations and share
no code with the graph or symmetric-function engines.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Sequence

from .bruhat import check_permutation, inversions
from .errors import BadPrime, InvalidInput, TooLarge
from .exactmath import IntPoly, poly_eval, poly_interpolate
from .quiver import MultiPartition, build_supernova, delta
from .symfunc import q_multinomial

Subspace = tuple[tuple[int, ...], ...]
FlagPoint = tuple[tuple[Subspace, ...], ...]

DEFAULT_CELL_BUDGET = 10**8
DEFAULT_FLAG_BUDGET = 10**7


def _require_prime(p: int) -> None:
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise InvalidInput(f"{p} is not prime")


@lru_cache(maxsize=None)
def stirling2(r: int, m: int) -> int:
    if r == m:
        return 1
    if r == 0 or m == 0:
        return 0
    return m * stirling2(r - 1, m) + stirling2(r - 1, m - 1)


def gm_orbit_count(r: int) -> IntPoly:
    """sum_{m=3}^r S(r, m) C_m(q) with C_m = (q-2)(q-3)...(q-(m-2)), C_3 = 1."""
    if r < 3:
        raise InvalidInput("need r >= 3")
    total = IntPoly()
    for m in range(3, r + 1):
        c = IntPoly.const(1)
        for j in range(2, m - 1):
            c = c * IntPoly((-j, 1))
        total = total + c * stirling2(r, m)
    return total


# ---------------------------------------------------------------------------
# per-cell oracle


def oracle_cell_count(wt: Sequence[Sequence[int]], p: int, budget: int = DEFAULT_CELL_BUDGET) -> int:
    """Number of u in prod_t U_{w_t}(F_p) whose nonzero-coordinate graph is connected."""
    _require_prime(p)
    wt = [check_permutation(w) for w in wt]
    if not wt or len({len(w) for w in wt}) != 1:
        raise InvalidInput("need a nonempty tuple of permutations of one size")
    r = len(wt[0])
    edges = [e for w in wt for e in sorted(inversions(w))]
    if p ** len(edges) > budget:
        raise TooLarge(f"{p}^{len(edges)} assignments exceed the budget {budget}")
    count = 0
    for values in product(range(p), repeat=len(edges)):
        parent = list(range(r + 1))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        comps = r
        for (i, j), x in zip(edges, values):
            if x:
                a, b = find(i), find(j)
                if a != b:
                    parent[a] = b
                    comps -= 1
        if comps == 1:
            count += 1
    return count


# ---------------------------------------------------------------------------
# flag varieties over F_p


def rref(rows: Iterable[Sequence[int]], p: int) -> Subspace:
    """Reduced row echelon form (leftmost pivots, pivots 1), zero rows dropped."""
    m = [[x % p for x in row] for row in rows]
    if not m:
        return ()
    ncols = len(m[0])
    out: list[list[int]] = []
    for c in range(ncols):
        piv = next((i for i, row in enumerate(m) if row[c]), None)
        if piv is None:
            continue
        row = m.pop(piv)
        inv = pow(row[c], -1, p)
        row = [x * inv % p for x in row]
        for other in m + out:
            f = other[c]
            if f:
                for j in range(ncols):
                    other[j] = (other[j] - f * row[j]) % p
        out.append(row)
    return tuple(tuple(row) for row in out)


def _subspaces(cols: Sequence[int], d: int, r: int, p: int) -> Iterable[list[list[int]]]:
    """All d-dimensional subspaces of the span of e_c (c in cols), as RREF bases in F_p^r."""
    for pivots in combinations(range(len(cols)), d):
        free = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, len(cols)) if j not in pivots]
        for values in product(range(p), repeat=len(free)):
            rows = [[0] * r for _ in range(d)]
            for i, pc in enumerate(pivots):
                rows[i][cols[pc]] = 1
            for (i, j), x in zip(free, values):
                rows[i][cols[j]] = x
            yield rows


def flag_dims(c: Sequence[int]) -> list[int]:
    """Proper partial sums of a composition: the subspace dimensions of its flags."""
    parts = [x for x in c if x]
    dims, acc = [], 0
    for x in parts[:-1]:
        acc += x
        dims.append(acc)
    return dims


def enumerate_flags(dims: Sequence[int], r: int, p: int) -> list[tuple[Subspace, ...]]:
    """All chains V_1 < V_2 < ... with dim V_j = dims[j], each stored in RREF."""
    out: list[tuple[Subspace, ...]] = []

    def rec(j: int, chain: list[Subspace], prev: int):
        if j == len(dims):
            out.append(tuple(chain))
            return
        last = chain[-1] if chain else ()
        pivots = {next(c for c, x in enumerate(row) if x) for row in last}
        cols = [c for c in range(r) if c not in pivots]
        for extra in _subspaces(cols, dims[j] - prev, r, p):
            chain.append(rref(list(last) + extra, p))
            rec(j + 1, chain, dims[j])
            chain.pop()

    rec(0, [], 0)
    return out


def _scale_column(flag: tuple[Subspace, ...], c: int, g: int, p: int) -> tuple[Subspace, ...]:
    return tuple(
        rref([tuple(x * g % p if j == c else x for j, x in enumerate(row)) for row in sub], p) for sub in flag
    )


def _primitive_root(p: int) -> int:
    factors = {d for d in range(2, p) if (p - 1) % d == 0 and all(d % e for e in range(2, d))}
    return next(g for g in range(2, p) if all(pow(g, (p - 1) // f, p) != 1 for f in factors)) if p > 2 else 1


def _flag_types(mu: MultiPartition) -> list[list[int]]:
    bad = [i + 1 for i, n in enumerate(mu.sizes()) if n > mu.r]
    if bad:
        raise InvalidInput(f"legs {bad} have |mu^i| > r = {mu.r}")
    return [flag_dims(mu.tilde(i)) for i in range(mu.k)]


def flag_point_count(mu: MultiPartition, p: int) -> int:
    total = 1
    for i in range(mu.k):
        parts = tuple(sorted((x for x in mu.tilde(i) if x), reverse=True))
        total *= poly_eval(q_multinomial(mu.r, parts), p)
    return total


def _orbit_components(points: list, gens, act) -> tuple[list[int], dict]:
    index = {pt: i for i, pt in enumerate(points)}
    parent = list(range(len(points)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, pt in enumerate(points):
        for gen in gens:
            a, b = find(i), find(index[act(pt, gen)])
            if a != b:
                parent[a] = b
    roots = [find(i) for i in range(len(points))]
    return roots, index


def _free_orbits(mu: MultiPartition, p: int, budget: int) -> tuple[list[FlagPoint], int]:
    """Representatives of T(F_p)-orbits whose stabilizer is the scalars."""
    if p == 2:
        raise BadPrime("p = 2: the torus over F_2 is trivial")
    _require_prime(p)
    types = _flag_types(mu)
    npts = flag_point_count(mu, p)
    if npts > budget:
        raise TooLarge(f"{npts} flag points exceed the budget {budget}")
    r = mu.r
    per_leg = [enumerate_flags(d, r, p) for d in types]
    points: list[FlagPoint] = list(product(*per_leg))
    assert len(points) == npts
    g = _primitive_root(p)
    gens = [(c, g) for c in range(r)]

    def act(pt: FlagPoint, gen) -> FlagPoint:
        c, x = gen
        return tuple(_scale_column(f, c, x, p) for f in pt)

    roots, _ = _orbit_components(points, gens, act)
    sizes = Counter(roots)
    free = (p - 1) ** (r - 1)
    reps = [points[root] for root, size in sorted(sizes.items()) if size == free]
    return reps, len(sizes)


def oracle_flag_orbits(mu: MultiPartition, p: int, budget: int = DEFAULT_FLAG_BUDGET) -> int:
    """Number of T(F_p)-orbits on the product of flag varieties with stabilizer Z(F_p)."""
    reps, _ = _free_orbits(mu, p, budget)
    return len(reps)


def _single_orbit_size(flag: tuple[Subspace, ...], r: int, p: int) -> int:
    g = _primitive_root(p)
    seen = {flag}
    stack = [flag]
    while stack:
        f = stack.pop()
        for c in range(r):
            h = _scale_column(f, c, g, p)
            if h not in seen:
                seen.add(h)
                stack.append(h)
    return len(seen)


def flag_orbit_strata(mu: MultiPartition, p: int, budget: int = DEFAULT_FLAG_BUDGET) -> dict[int, int]:
    """Free orbits grouped by the torus-orbit dimension of their first-leg projection."""
    reps, _ = _free_orbits(mu, p, budget)
    strata: Counter = Counter()
    for pt in reps:
        size = _single_orbit_size(pt[0], mu.r, p)
        dim = 0
        while size % (p - 1) == 0 and size > 1:
            size //= p - 1
            dim += 1
        if size != 1:
            raise AssertionError("first-leg orbit size is not a power of p - 1")
        strata[dim] += 1
    return dict(sorted(strata.items()))


def kac_via_oracle(mu: MultiPartition, primes: Sequence[int], budget: int = DEFAULT_FLAG_BUDGET) -> IntPoly:
    """Interpolate the orbit counts at the given primes."""
    qv, v = build_supernova(mu)
    need = max(delta(qv, v) + 2, 1)
    primes = sorted(set(primes))
    if len(primes) < need:
        raise InvalidInput(f"need at least {need} primes for degree {need - 1}")
    return poly_interpolate([(p, oracle_flag_orbits(mu, p, budget)) for p in primes])
