"""Kac polynomials of supernova quivers as sums over Bruhat cells.

For each tuple ``w`` in the product of cross-sections ``S_{tilde mu^i}`` the
cell contributes the external-activity subgraph sum of its inversion graph;
cells whose total inversion count is below ``r - 1`` cannot be connected and
are skipped before any graph is built.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .bruhat import Composition, PermTuple, cross_section, format_perm, inversion_graph, inversions
from .errors import Disconnected, HypothesisViolated, InvalidInput
from .exactmath import IntPoly
from .graph import (
    ColoredMultigraph,
    _component_count,
    _subgraph_sum_vertex,
    external_activity_subgraph_sum,
    external_activity_tutte,
    is_connected,
)
from .quiver import MultiPartition, build_supernova, in_fundamental_domain, vmu_in_M


@dataclass(frozen=True)
class CellReport:
    tuple: PermTuple
    inversion_count: int
    connected: bool
    rw: IntPoly

    def to_dict(self) -> dict:
        return {
            "w": [format_perm(w) for w in self.tuple],
            "inv": self.inversion_count,
            "rw": list(self.rw.coeffs),
        }


def rw_polynomial(wt: Sequence[Sequence[int]]) -> IntPoly:
    """R_w(q): the connected-subgraph sum of the inversion graph (0 if disconnected)."""
    return external_activity_subgraph_sum(inversion_graph(wt))


def tilde_compositions(mu: MultiPartition) -> list[Composition]:
    bad = [i + 1 for i, n in enumerate(mu.sizes()) if n > mu.r]
    if bad:
        raise InvalidInput(f"legs {bad} have |mu^i| > r = {mu.r}")
    return [Composition(mu.tilde(i)) for i in range(mu.k)]


def outside_fundamental_domain(mu: MultiPartition) -> bool:
    try:
        return not vmu_in_M(mu)
    except HypothesisViolated:
        qv, v = build_supernova(mu)
        return not in_fundamental_domain(qv, v)


# per-leg data: (permutation, inversion pairs as (j, i) with j < i, inversion count)
_LegCell = tuple[tuple[int, ...], tuple[tuple[int, int], ...], int]


def _leg_cells(c: Composition) -> list[_LegCell]:
    cells = []
    for w in cross_section(c):
        inv = tuple(sorted((j, i) for i, j in inversions(w)))
        cells.append((w, inv, len(inv)))
    return cells


def _walk(r: int, legs: list[list[_LegCell]], first: Sequence[_LegCell], include_all: bool):
    """Sum R_w over the product, restricted to the given first-leg cells."""
    need = r - 1
    k = len(legs)
    # suffix maxima of inversion counts, for pruning
    best = [0] * (k + 1)
    for t in range(k - 1, -1, -1):
        best[t] = best[t + 1] + max(c[2] for c in legs[t])
    total = IntPoly()
    reports: list[CellReport] = []

    def rec(t: int, chosen: list[_LegCell], inv_so_far: int):
        nonlocal total
        if t == k:
            wt = tuple(c[0] for c in chosen)
            if inv_so_far < need:
                if include_all:
                    reports.append(CellReport(wt, inv_so_far, False, IntPoly()))
                return
            pairs = tuple(sorted(p for c in chosen for p in c[1]))
            connected = _component_count(r, pairs) == 1
            rw = _subgraph_sum_vertex(r, pairs) if connected else IntPoly()
            total = total + rw
            if connected or include_all:
                reports.append(CellReport(wt, inv_so_far, connected, rw))
            return
        pool = first if t == 0 else legs[t]
        for cell in pool:
            if not include_all and inv_so_far + cell[2] + best[t + 1] < need:
                continue
            chosen.append(cell)
            rec(t + 1, chosen, inv_so_far + cell[2])
            chosen.pop()

    rec(0, [], 0)
    return total, reports


def _walk_task(args):
    return _walk(*args)


def kac_polynomial(
    mu: MultiPartition, threads: int = 1, include_all: bool = False
) -> tuple[IntPoly, list[CellReport]]:
    """A_{Gamma, v_mu}(q) as the sum of R_w over the product cross-section.

    Returns the polynomial and the per-cell reports (connected cells only unless
    ``include_all``), sorted by tuple.  The result does not depend on ``threads``.
    """
    comps = tilde_compositions(mu)
    legs = [_leg_cells(c) for c in comps]
    r = mu.r
    if threads <= 1 or len(legs[0]) < 2:
        total, reports = _walk(r, legs, legs[0], include_all)
    else:
        chunks = [legs[0][i::threads] for i in range(threads)]
        jobs = [(r, legs, chunk, include_all) for chunk in chunks if chunk]
        with ProcessPoolExecutor(max_workers=len(jobs)) as pool:
            results = list(pool.map(_walk_task, jobs))
        total = IntPoly()
        reports = []
        for poly, reps in results:
            total = total + poly
            reports.extend(reps)
    reports.sort(key=lambda c: c.tuple)
    return total, reports


def kac_report(mu: MultiPartition, threads: int = 1, include_all: bool = False) -> dict:
    poly, cells = kac_polynomial(mu, threads=threads, include_all=include_all)
    return {
        "r": mu.r,
        "mu": mu.as_lists(),
        "kac": list(poly.coeffs),
        "warning_outside_M": outside_fundamental_domain(mu),
        "cells": [c.to_dict() for c in cells],
    }


def kac_report_json(mu: MultiPartition, threads: int = 1, include_all: bool = False) -> str:
    return json.dumps(kac_report(mu, threads=threads, include_all=include_all))


def kac_all_ones(g: ColoredMultigraph) -> IntPoly:
    """Kac polynomial for the all-ones dimension vector: T_g(1, q)."""
    if g.has_loops():
        raise InvalidInput("quiver graphs are loop-free")
    if not is_connected(g):
        raise Disconnected("the all-ones vector of a disconnected graph is not a root")
    return external_activity_tutte(g)


def supernova_graph(mu: MultiPartition) -> ColoredMultigraph:
    """Underlying graph of the supernova quiver, vertices numbered 1..|I|."""
    qv, _ = build_supernova(mu)
    idx = {v: i + 1 for i, v in enumerate(qv.vertices)}
    return ColoredMultigraph(len(idx), [(idx[a], idx[b], 0) for a, b in qv.edge_list()])


def default_threads() -> int:
    env = os.environ.get("TORUS_KAC_THREADS")
    return int(env) if env else 1
