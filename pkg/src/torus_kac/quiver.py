"""Supernova quivers, their Cartan form, Weyl reflections and root classification.

Vertices are tuples: ``(l,)`` for the short-leg tip ``(l)``, ``l = 1..r``, and
``(i, j)`` for the long-leg vertex ``(i;j)``, with ``(i, 0)`` the hub.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import HypothesisViolated, InternalNonTermination, InvalidInput, ZeroVector

Vertex = tuple[int, ...]


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise InvalidInput(f"negative part in {parts}")
        parts = tuple(p for p in parts if p)
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidInput(f"parts {parts} are not weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class MultiPartition:
    r: int
    legs: tuple[Partition, ...]

    def __init__(self, r: int, legs: Iterable[Iterable[int] | Partition]):
        if r < 1:
            raise InvalidInput("r must be positive")
        legs = tuple(leg if isinstance(leg, Partition) else Partition(leg) for leg in legs)
        if not legs:
            raise InvalidInput("need at least one leg")
        if any(leg.size == 0 for leg in legs):
            raise InvalidInput("every leg must be a nonzero partition")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "legs", legs)

    @property
    def k(self) -> int:
        return len(self.legs)

    def sizes(self) -> list[int]:
        return [leg.size for leg in self.legs]

    def tilde(self, i: int) -> tuple[int, ...]:
        """(r - n_i, mu^i_1, mu^i_2, ...), zero first part kept."""
        leg = self.legs[i]
        return (self.r - leg.size,) + leg.parts

    def __str__(self) -> str:
        return f"r={self.r}; mu=" + "|".join(",".join(str(p) for p in leg.parts) for leg in self.legs)

    def as_lists(self) -> list[list[int]]:
        return [list(leg.parts) for leg in self.legs]


_MP_RE = re.compile(r"^\s*r\s*=\s*(\d+)\s*;\s*mu\s*=\s*([\d,|\s]+)$")


def parse_multipartition(text: str) -> MultiPartition:
    """Parse 'r=5; mu=2' or 'r=3; mu=1|1' (legs split by '|', parts by ',')."""
    m = _MP_RE.match(text)
    if not m:
        raise InvalidInput(f"cannot parse multipartition {text!r}")
    r = int(m.group(1))
    legs = []
    for leg in m.group(2).split("|"):
        parts = [int(x) for x in leg.replace(" ", "").split(",") if x]
        if not parts:
            raise InvalidInput(f"empty leg in {text!r}")
        legs.append(sorted(parts, reverse=True))
    return MultiPartition(r, legs)


class DimVector(Mapping):
    """Immutable integer vector indexed by quiver vertices; missing keys read as 0."""

    __slots__ = ("_coords",)

    def __init__(self, coords: Mapping[Vertex, int] | Iterable[tuple[Vertex, int]] = ()):
        items = coords.items() if isinstance(coords, Mapping) else coords
        self._coords = {k: int(v) for k, v in items if v}

    def __getitem__(self, key: Vertex) -> int:
        return self._coords.get(key, 0)

    def __iter__(self):
        return iter(sorted(self._coords))

    def __len__(self) -> int:
        return len(self._coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DimVector):
            return NotImplemented
        return self._coords == other._coords

    def __hash__(self) -> int:
        return hash(frozenset(self._coords.items()))

    def __repr__(self) -> str:
        return f"DimVector({dict(sorted(self._coords.items()))})"

    def __neg__(self) -> DimVector:
        return DimVector({k: -v for k, v in self._coords.items()})

    def __add__(self, other: DimVector) -> DimVector:
        out = dict(self._coords)
        for k, v in other._coords.items():
            out[k] = out.get(k, 0) + v
        return DimVector(out)

    def scale(self, c: int) -> DimVector:
        return DimVector({k: c * v for k, v in self._coords.items()})

    def support(self) -> set[Vertex]:
        return set(self._coords)

    def is_zero(self) -> bool:
        return not self._coords


def unit(vertex: Vertex) -> DimVector:
    return DimVector({vertex: 1})


@dataclass(frozen=True)
class SupernovaQuiver:
    r: int
    leg_lengths: tuple[int, ...]
    vertices: tuple[Vertex, ...] = field(init=False)
    neighbors: Mapping[Vertex, tuple[Vertex, ...]] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        verts: list[Vertex] = [(l,) for l in range(1, self.r + 1)]
        for i, s in enumerate(self.leg_lengths, start=1):
            verts.extend((i, j) for j in range(s + 1))
        nbrs: dict[Vertex, list[Vertex]] = {v: [] for v in verts}
        for e in self.edge_list():
            a, b = e
            nbrs[a].append(b)
            nbrs[b].append(a)
        object.__setattr__(self, "vertices", tuple(verts))
        object.__setattr__(self, "neighbors", {v: tuple(n) for v, n in nbrs.items()})

    @property
    def k(self) -> int:
        return len(self.leg_lengths)

    def edge_list(self) -> list[tuple[Vertex, Vertex]]:
        edges = []
        for i, s in enumerate(self.leg_lengths, start=1):
            edges.extend(((l,), (i, 0)) for l in range(1, self.r + 1))
            edges.extend(((i, j), (i, j + 1)) for j in range(s))
        return edges

    def multiplicity(self, a: Vertex, b: Vertex) -> int:
        return self.neighbors[a].count(b)

    def cartan(self, a: Vertex, b: Vertex) -> int:
        return 2 if a == b else -self.multiplicity(a, b)


def build_supernova(mu: MultiPartition, strict: bool = False) -> tuple[SupernovaQuiver, DimVector]:
    """The supernova quiver of mu and its dimension vector v_mu.

    With ``strict=True`` legs with |mu^i| > r are rejected.
    """
    if strict:
        bad = [i + 1 for i, n in enumerate(mu.sizes()) if n > mu.r]
        if bad:
            raise InvalidInput(f"legs {bad} have |mu^i| > r = {mu.r}")
    qv = SupernovaQuiver(mu.r, tuple(len(leg) - 1 for leg in mu.legs))
    coords: dict[Vertex, int] = {(l,): 1 for l in range(1, mu.r + 1)}
    for i, leg in enumerate(mu.legs, start=1):
        remaining = leg.size
        coords[(i, 0)] = remaining
        for j, part in enumerate(leg.parts[:-1], start=1):
            remaining -= part
            coords[(i, j)] = remaining
    return qv, DimVector(coords)


def cartan_pairing(qv: SupernovaQuiver, a: DimVector, b: DimVector) -> int:
    total = 0
    for u in a:
        au = a[u]
        total += 2 * au * b[u]
        for nb in qv.neighbors[u]:
            total -= au * b[nb]
    return total


def delta(qv: SupernovaQuiver, v: DimVector) -> int:
    pair = cartan_pairing(qv, v, v)
    assert pair % 2 == 0
    return -pair // 2


def pairing_with_unit(qv: SupernovaQuiver, v: DimVector, vertex: Vertex) -> int:
    """(v, e_vertex) without building the unit vector."""
    return 2 * v[vertex] - sum(v[nb] for nb in qv.neighbors[vertex])


def reflect(qv: SupernovaQuiver, v: DimVector, vertex: Vertex) -> DimVector:
    c = pairing_with_unit(qv, v, vertex)
    if not c:
        return v
    return v + DimVector({vertex: -c})


class RootTag(enum.Enum):
    REAL = "Real"
    FUNDAMENTAL_IMAGINARY = "FundamentalImaginary"
    IMAGINARY = "Imaginary"
    NOT_A_ROOT = "NotARoot"


@dataclass(frozen=True)
class RootClass:
    tag: RootTag
    witness: tuple[Vertex, ...]

    @property
    def is_root(self) -> bool:
        return self.tag is not RootTag.NOT_A_ROOT

    @property
    def is_imaginary(self) -> bool:
        return self.tag in (RootTag.IMAGINARY, RootTag.FUNDAMENTAL_IMAGINARY)


def _support_connected(qv: SupernovaQuiver, v: DimVector) -> bool:
    supp = v.support()
    if not supp:
        return False
    start = next(iter(supp))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in qv.neighbors[x]:
            if y in supp and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen == supp


def _is_simple(v: DimVector) -> bool:
    return len(v) == 1 and next(iter(v.values())) == 1


def classify_root(qv: SupernovaQuiver, v: DimVector) -> RootClass:
    """Reduce v towards the fundamental domain by reflections that lower its height."""
    if v.is_zero():
        raise ZeroVector("the zero vector is never a root")
    values = list(v.values())
    if any(x < 0 for x in values):
        if any(x > 0 for x in values):
            return RootClass(RootTag.NOT_A_ROOT, ())
        v = -v
    cap = 10 * sum(v.values())
    witness: list[Vertex] = []
    while True:
        if _is_simple(v):
            return RootClass(RootTag.REAL, tuple(witness))
        if not _support_connected(qv, v):
            return RootClass(RootTag.NOT_A_ROOT, tuple(witness))
        vertex = next((u for u in qv.vertices if pairing_with_unit(qv, v, u) > 0), None)
        if vertex is None:
            tag = RootTag.FUNDAMENTAL_IMAGINARY if not witness else RootTag.IMAGINARY
            return RootClass(tag, tuple(witness))
        v = reflect(qv, v, vertex)
        witness.append(vertex)
        if any(x < 0 for x in v.values()):
            return RootClass(RootTag.NOT_A_ROOT, tuple(witness))
        if len(witness) > cap:
            raise InternalNonTermination(f"root reduction exceeded {cap} steps")


def in_fundamental_domain_direct(qv: SupernovaQuiver, v: DimVector) -> bool:
    """M_Gamma membership straight from its definition."""
    if v.is_zero() or any(x < 0 for x in v.values()):
        return False
    if not _support_connected(qv, v):
        return False
    return all(pairing_with_unit(qv, v, u) <= 0 for u in qv.vertices)


def in_fundamental_domain(qv: SupernovaQuiver, v: DimVector) -> bool:
    """Closed-form membership test via the hub, tip and leg-concavity inequalities."""
    r = qv.r
    short_total = sum(v[(l,)] for l in range(1, r + 1))
    hub_total = sum(v[(i, 0)] for i in range(1, qv.k + 1))
    ok = True
    for i, s in enumerate(qv.leg_lengths, start=1):
        if -2 * v[(i, 0)] + v[(i, 1)] + short_total < 0:
            ok = False
        for j in range(s):
            # convention v_{(i; s_i + 1)} = 0 is automatic since missing keys read 0
            if v[(i, j)] - v[(i, j + 1)] < v[(i, j + 1)] - v[(i, j + 2)]:
                ok = False
    if any(hub_total < 2 * v[(l,)] for l in range(1, r + 1)):
        ok = False
    direct = in_fundamental_domain_direct(qv, v)
    if ok != direct:
        raise AssertionError(f"closed-form and direct fundamental-domain tests disagree on {v!r}")
    return ok


def vmu_in_M(mu: MultiPartition) -> bool:
    """r >= |mu^i| + mu^i_1 for every leg (needs k > 1 or a hub label > 1)."""
    if mu.k == 1 and mu.legs[0].size == 1:
        raise HypothesisViolated("k = 1 with |mu^1| = 1; use in_fundamental_domain instead")
    return all(mu.r >= leg.size + leg.parts[0] for leg in mu.legs)
