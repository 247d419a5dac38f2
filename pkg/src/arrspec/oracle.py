"""Brute-force verification of arrangement-graph spectra.

The graph is built straight from its definition.  Its spectrum is then
measured in one of two ways.  Up to the exact limit, the nullity of A - eI
is computed for each predicted eigenvalue by fraction-free elimination.
Above that, a dense floating-point eigensolve is used, followed by
integer rounding.
"""
from __future__ import annotations

from bisect import bisect_left
import itertools
from collections import Counter
from dataclasses import dataclass, field
from math import factorial
from typing import IO

import numpy as np
import scipy.sparse as sp

from . import limits
from .elimination import integer_rank
from .errors import IntegralityError, LimitError
from .spectrum import Spectrum, spectrum

__all__ = [
    "ArrangementGraph",
    "EigenRecord",
    "VerificationReport",
    "build_graph",
    "dump_adjacency",
    "exact_multiplicity",
    "float_spectrum",
    "load_adjacency",
    "verify",
]


@dataclass(frozen=True)
class ArrangementGraph:
    """A(n,k) with vertices in lexicographic order of their value tuples."""

    n: int
    k: int
    vertices: tuple[tuple[int, ...], ...]
    neighbors: tuple[tuple[int, ...], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self.neighbors) // 2

    def degree(self, i: int) -> int:
        return len(self.neighbors[i])

    def adjacent(self, i: int, j: int) -> bool:
        return j in self._neighbor_sets[i]

    @property
    def _neighbor_sets(self) -> list[frozenset[int]]:
        cached = self.__dict__.get("_nbsets")
        if cached is None:
            cached = [frozenset(nb) for nb in self.neighbors]
            object.__setattr__(self, "_nbsets", cached)
        return cached

    def adjacency_dense(self, dtype=np.float64) -> np.ndarray:
        N = self.vertex_count
        a = np.zeros((N, N), dtype=dtype)
        for i, nb in enumerate(self.neighbors):
            a[i, list(nb)] = 1
        return a

    def adjacency_sparse(self) -> sp.csr_matrix:
        N = self.vertex_count
        indptr = np.zeros(N + 1, dtype=np.int64)
        indptr[1:] = np.cumsum([len(nb) for nb in self.neighbors])
        indices = np.fromiter(itertools.chain.from_iterable(self.neighbors), dtype=np.int64,
                              count=int(indptr[-1]))
        data = np.ones(len(indices), dtype=np.int64)
        return sp.csr_matrix((data, indices, indptr), shape=(N, N))


def build_graph(n: int, k: int, vertex_limit: int | None = None) -> ArrangementGraph:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    N = factorial(n) // factorial(n - k)
    cap = limits.get("VERTEX_LIMIT", vertex_limit)
    if N > cap:
        raise LimitError(
            f"A({n},{k}) has {N} vertices, above the vertex limit {cap}; "
            f"raise it to at least {N} (ARRSPEC_VERTEX_LIMIT) and expect about "
            f"{8 * N * N / 2**20:.0f} MiB for a dense float matrix"
        )
    vertices = tuple(itertools.permutations(range(1, n + 1), k))
    # two injections agree off position i exactly when they share v[:i] + v[i+1:];
    # such a pair differs at i (injectivity), so it agrees on exactly k-1 points
    groups = []
    for i in range(k):
        by_rest: dict[tuple[int, ...], list[int]] = {}
        for j, v in enumerate(vertices):
            by_rest.setdefault(v[:i] + v[i + 1:], []).append(j)
        groups.append([by_rest[v[:i] + v[i + 1:]] for v in vertices])
    neighbors = []
    for j in range(N):
        nb = []
        for per_position in groups:
            nb += per_position[j]
        nb.sort()
        # j sits in each of its own k groups
        at = bisect_left(nb, j)
        del nb[at:at + k]
        neighbors.append(tuple(nb))
    return ArrangementGraph(n, k, vertices, tuple(neighbors))


def float_spectrum(g: ArrangementGraph, float_limit: int | None = None,
                   tolerance: float | None = None) -> dict[int, int]:
    """Integer-rounded eigenvalue multiplicities from a dense eigensolve.

    Raises IntegralityError if some eigenvalue lies more than
    ``tolerance * |V|`` from the nearest integer.
    """
    N = g.vertex_count
    cap = limits.get("FLOAT_LIMIT", float_limit)
    tol = limits.get("FLOAT_TOLERANCE", tolerance)
    if N > cap:
        raise LimitError(f"{N} vertices exceed the float limit {cap} (ARRSPEC_FLOAT_LIMIT)")
    values = np.linalg.eigvalsh(g.adjacency_dense())
    rounded = np.rint(values)
    worst = float(np.max(np.abs(values - rounded), initial=0.0))
    if worst > tol * max(N, 1):
        raise IntegralityError(
            f"eigenvalue off an integer by {worst:.3g} (allowed {tol * N:.3g}) for A({g.n},{g.k})"
        )
    counts = Counter(int(x) for x in rounded)
    return {e: counts[e] for e in sorted(counts, reverse=True)}


def exact_multiplicity(g: ArrangementGraph, e: int, exact_limit: int | None = None,
                       backend: str = "auto") -> int:
    """Nullity of A - eI over the rationals."""
    N = g.vertex_count
    cap = limits.get("EXACT_LIMIT", exact_limit)
    if N > cap:
        raise LimitError(f"{N} vertices exceed the exact limit {cap} (ARRSPEC_EXACT_LIMIT)")
    rows = []
    for i, nb in enumerate(g.neighbors):
        row = dict.fromkeys(nb, 1)
        if e:
            row[i] = -e
        rows.append(row)
    return N - integer_rank(rows, N, backend=backend)


@dataclass(frozen=True)
class EigenRecord:
    eigenvalue: int
    predicted: int
    observed: int
    method: str  # "exact-nullity" or "float-eig"

    @property
    def matched(self) -> bool:
        return self.predicted == self.observed


@dataclass
class VerificationReport:
    n: int
    k: int
    vertex_count: int
    method: str
    records: list[EigenRecord] = field(default_factory=list)
    moments: dict[int, tuple[int, int]] = field(default_factory=dict)
    unaccounted: int = 0

    @property
    def moment_mismatches(self) -> dict[int, tuple[int, int]]:
        return {p: pair for p, pair in self.moments.items() if pair[0] != pair[1]}

    @property
    def matched_count(self) -> int:
        return sum(r.matched for r in self.records)

    @property
    def passed(self) -> bool:
        return (
            all(r.matched for r in self.records)
            and self.unaccounted == 0
            and not self.moment_mismatches
        )

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} A({self.n},{self.k}) |V|={self.vertex_count}: "
            f"{self.matched_count}/{len(self.records)} lines matched ({self.method})"
        )


def _graph_moments(g: ArrangementGraph) -> dict[int, int]:
    """trace(A^p) for p = 0..3, by direct integer matrix computation."""
    a = g.adjacency_sparse()
    a2 = a @ a
    return {
        0: g.vertex_count,
        1: int(a.diagonal().sum()),
        2: int(a2.diagonal().sum()),
        3: int(a2.multiply(a.T).sum()),
    }


def verify(n: int, k: int, exact_limit: int | None = None, float_limit: int | None = None,
           tolerance: float | None = None, vertex_limit: int | None = None,
           predicted: Spectrum | None = None) -> VerificationReport:
    """Check the formula spectrum of A(n,k) against the brute-force graph.

    A mismatch produces a failing report; only limit and numerical errors raise.
    """
    exact_cap = limits.get("EXACT_LIMIT", exact_limit)
    float_cap = limits.get("FLOAT_LIMIT", float_limit)
    N = factorial(n) // factorial(n - k) if 1 <= k <= n else 0
    if N > max(exact_cap, float_cap):
        raise LimitError(
            f"A({n},{k}) has {N} vertices, above both the exact limit {exact_cap} "
            f"and the float limit {float_cap}"
        )
    g = build_graph(n, k, vertex_limit=max(limits.get("VERTEX_LIMIT", vertex_limit), N))
    pred = predicted if predicted is not None else spectrum(n, k)
    expected = pred.as_dict()

    if N <= exact_cap:
        method = "exact-nullity"
        records = [
            EigenRecord(e, m, exact_multiplicity(g, e, exact_limit=exact_cap), method)
            for e, m in expected.items()
        ]
        observed_total = sum(r.observed for r in records)
    else:
        method = "float-eig"
        observed = float_spectrum(g, float_limit=float_cap, tolerance=tolerance)
        keys = sorted(set(expected) | set(observed), reverse=True)
        records = [EigenRecord(e, expected.get(e, 0), observed.get(e, 0), method) for e in keys]
        observed_total = sum(observed.values())

    measured = _graph_moments(g)
    moments = {p: (measured[p], pred.moment(p)) for p in measured}
    return VerificationReport(
        n, k, N, method, records, moments, unaccounted=N - observed_total
    )


def dump_adjacency(g: ArrangementGraph, fh: IO[str]) -> None:
    """Write "n k |V|" then one line of 0-based neighbour indices per vertex."""
    fh.write(f"{g.n} {g.k} {g.vertex_count}\n")
    for nb in g.neighbors:
        fh.write(" ".join(map(str, nb)) + "\n")


def load_adjacency(fh: IO[str]) -> tuple[int, int, list[list[int]]]:
    header = fh.readline().split()
    n, k, count = (int(x) for x in header)
    rows: list[list[int]] = []
    for _ in range(count):
        rows.append([int(x) for x in fh.readline().split()])
    return n, k, rows
