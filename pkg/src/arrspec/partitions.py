"""Integer partitions and the symmetric-group data indexed by them.

A partition is stored as a non-increasing tuple of positive parts; the empty
tuple is the partition of 0.  Irreducible representations of S_m are indexed
by partitions of m, and the two quantities needed downstream are computed
here: the dimension of S^lambda (hook length formula) and the scalar by which
the sum of all transpositions acts on S^lambda.
"""
from __future__ import annotations

from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator

from . import limits
from .errors import InternalError, LimitError

__all__ = [
    "Partition",
    "binom2",
    "conjugate",
    "dimension",
    "enumerate_partitions",
    "hook_lengths",
    "transposition_content",
]


class Partition(tuple):
    """A non-increasing tuple of positive integers.

    Equality, hashing and ordering are the tuple ones, so sorting partitions
    of the same integer in descending order gives reverse-lexicographic order.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must be non-increasing, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: tuple[int, ...]) -> "Partition":
        # for parts already known to be valid, e.g. built by the enumerators
        return tuple.__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """0-based row length, zero past the last row."""
        return self[i] if i < len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


def _partitions_bounded(m: int, largest: int) -> Iterator[tuple[int, ...]]:
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions_bounded(m - first, first):
            yield (first,) + rest


def enumerate_partitions(m: int, limit: int | None = None) -> list[Partition]:
    """All partitions of *m*, largest first part first.

    >>> enumerate_partitions(3)
    [Partition((3,)), Partition((2, 1)), Partition((1, 1, 1))]
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    cap = limits.get("PARTITION_LIMIT", limit)
    if m > cap:
        raise LimitError(f"m={m} exceeds the partition limit {cap} (ARRSPEC_PARTITION_LIMIT)")
    return _cached_partitions(m)


@lru_cache(maxsize=None)
def _cached_partitions(m: int) -> list[Partition]:
    # callers receive a shared list; Partition values are immutable
    return [Partition._trusted(p) for p in _partitions_bounded(m, m)]


def binom2(p: int) -> int:
    """p(p-1)/2 for any integer p, including negatives."""
    return p * (p - 1) // 2


def conjugate(parts: Iterable[int]) -> Partition:
    """Transpose of the Young diagram."""
    parts = tuple(parts)
    if not parts:
        return Partition()
    return Partition(sum(1 for p in parts if p > j) for j in range(parts[0]))


def transposition_content(parts: Iterable[int]) -> int:
    """binom(m,2) * chi(tau)/chi(1) for the irreducible S^lambda of S_m.

    Evaluated row by row as sum_j [binom2(lambda_j - j + 1) - binom2(j)], which
    is an exact integer.  Python integers cannot overflow, so no width check
    is needed.
    """
    return _content(tuple(parts))


@lru_cache(maxsize=1 << 20)
def _content(lam: tuple[int, ...]) -> int:
    return sum(binom2(p - j + 1) - binom2(j) for j, p in enumerate(lam, start=1))


def hook_lengths(parts: Iterable[int]) -> list[list[int]]:
    lam = tuple(parts)
    conj = conjugate(lam)
    return [[lam[i] - j + conj[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))]


@lru_cache(maxsize=1 << 20)
def _dimension(lam: tuple[int, ...]) -> int:
    m = sum(lam)
    hooks = prod(h for row in hook_lengths(lam) for h in row)
    quotient, remainder = divmod(factorial(m), hooks)
    if remainder:
        raise InternalError(f"hook product {hooks} does not divide {m}! for {lam}")
    return quotient


def dimension(parts: Iterable[int]) -> int:
    """Dimension of S^lambda, i.e. the number of standard Young tableaux."""
    lam = tuple(parts if isinstance(parts, Partition) else Partition(parts))
    if not lam:
        raise ValueError("dimension needs a non-empty partition")
    return _dimension(lam)
