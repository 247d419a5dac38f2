"""Horizontal-strip extensions of a partition (Pieri's rule).

Inducing S^lambda (tensored with the trivial module of the complementary
symmetric group) from S_k x S_{n-k} up to S_n decomposes multiplicity-free
into the S^mu with mu/lambda a horizontal strip of size n-k.
"""
from __future__ import annotations

from typing import Iterable

from .partitions import Partition

__all__ = ["extensions", "is_extension", "mu_of_lambda"]


def is_extension(lam: Iterable[int], mu: Iterable[int]) -> bool:
    """True iff Y(mu) is Y(lam) plus at most one box in each column.

    Checked through the interlacing mu_1 >= lam_1 >= mu_2 >= lam_2 >= ...
    """
    lam, mu = Partition(lam), Partition(mu)
    if len(mu) > len(lam) + 1:
        return False
    rows = max(len(lam), len(mu))
    return all(mu.part(i) >= lam.part(i) >= mu.part(i + 1) for i in range(rows))


def extensions(lam: Iterable[int], n: int) -> list[Partition]:
    """Every mu of weight n with is_extension(lam, mu), reverse-lexicographic.

    Built row by row: mu_1 >= lam_1 is unbounded above and mu_{i+1} ranges
    over [lam_{i+1}, lam_i], so the only search is distributing the n - k
    extra boxes.  Row i+1 (for i >= 1) can absorb at most lam_i - lam_{i+1},
    and these capacities sum to lam_1.
    """
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    k = lam.weight
    if n < k:
        raise ValueError(f"cannot extend a partition of {k} to n={n}")
    base = list(lam) + [0]
    # row i >= 1 absorbs at most lam_{i-1} - lam_i boxes; rows with zero
    # capacity are forced, so only the remaining rows are searched
    free = [0] + [i for i in range(1, len(base)) if base[i - 1] > base[i]]
    caps = [None] + [base[i - 1] - base[i] for i in free[1:]]
    tail_cap = [0] * (len(free) + 1)
    for j in range(len(free) - 1, 0, -1):
        tail_cap[j] = tail_cap[j + 1] + caps[j]

    out: list[Partition] = []
    mu = base[:]
    last = len(free) - 1

    def place(j: int, remaining: int) -> None:
        row = free[j]
        if j == last:
            # the final free row takes whatever is left (within its capacity)
            if j == 0 or remaining <= caps[j]:
                mu[row] = base[row] + remaining
                out.append(Partition._trusted(tuple(mu[:-1]) if mu[-1] == 0 else tuple(mu)))
                mu[row] = base[row]
            return
        hi = remaining if j == 0 else min(remaining, caps[j])
        lo = max(0, remaining - tail_cap[j + 1])
        for extra in range(hi, lo - 1, -1):
            mu[row] = base[row] + extra
            place(j + 1, remaining - extra)
        mu[row] = base[row]

    place(0, n - k)
    return out


def mu_of_lambda(lam: Iterable[int], n: int) -> Partition:
    """The extension (n-k, lam_1, ..., lam_q) obtained by adding one box per column."""
    lam = Partition(lam)
    top = n - lam.weight
    if top < lam.part(0):
        raise ValueError(f"n - k = {top} is smaller than the first part of {tuple(lam)}")
    return Partition((top,) + tuple(lam))
