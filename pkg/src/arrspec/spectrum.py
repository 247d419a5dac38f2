"""Exact spectrum of the arrangement graph A(n,k) from representation theory.

Each pair (lambda, mu) with lambda |- k and mu/lambda a horizontal strip of
size n-k contributes the integer eigenvalue

    content(mu) - content(lambda) - binom2(n-k)

with multiplicity dim(S^lambda) * dim(S^mu), where content() is the
transposition content.  Pairs landing on the same eigenvalue are merged
into one SpectralLine that keeps every witness.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Iterable

from . import limits
from .errors import InternalError, LimitError, ThresholdError
from .partitions import Partition, _content, _dimension, binom2, dimension, enumerate_partitions, transposition_content
from .pieri import extensions, is_extension, mu_of_lambda

__all__ = [
    "SpectralLine",
    "Spectrum",
    "eigenvalue",
    "minus_k_multiplicity",
    "negative_lines",
    "spectrum",
    "threshold",
]

Witness = tuple[Partition, Partition]


@dataclass(frozen=True)
class SpectralLine:
    eigenvalue: int
    multiplicity: int
    witnesses: tuple[Witness, ...] = ()


@dataclass(frozen=True)
class Spectrum:
    n: int
    k: int
    lines: tuple[SpectralLine, ...] = field(default_factory=tuple)

    @property
    def vertex_count(self) -> int:
        return sum(line.multiplicity for line in self.lines)

    def as_dict(self) -> dict[int, int]:
        """Eigenvalue -> multiplicity, in descending eigenvalue order."""
        return {line.eigenvalue: line.multiplicity for line in self.lines}

    def moment(self, power: int) -> int:
        """sum of e**power * mult, i.e. trace(A**power)."""
        return sum(line.eigenvalue ** power * line.multiplicity for line in self.lines)

    def line(self, value: int) -> SpectralLine | None:
        for line in self.lines:
            if line.eigenvalue == value:
                return line
        return None


def _check_nk(n: int, k: int, max_n: int | None = None) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    cap = limits.get("MAX_N", max_n)
    if n > cap:
        raise LimitError(f"n={n} exceeds the configured limit {cap} (ARRSPEC_MAX_N)")


def eigenvalue(lam: Iterable[int], mu: Iterable[int], n: int, k: int) -> int:
    lam, mu = Partition(lam), Partition(mu)
    if not k < n:
        raise ValueError(f"eigenvalue formula needs k < n, got n={n}, k={k}")
    if lam.weight != k or mu.weight != n:
        raise ValueError(f"weights of {tuple(lam)}, {tuple(mu)} do not match k={k}, n={n}")
    if not is_extension(lam, mu):
        raise ValueError(f"{tuple(mu)} is not a horizontal-strip extension of {tuple(lam)}")
    return transposition_content(mu) - transposition_content(lam) - binom2(n - k)


def spectrum(n: int, k: int, max_n: int | None = None) -> Spectrum:
    """Spectrum of A(n,k), lines sorted by descending eigenvalue."""
    _check_nk(n, k, max_n)
    if k == n:
        # no two injections I_n -> I_n agree on exactly n-1 points
        return Spectrum(n, k, (SpectralLine(0, factorial(n)),))

    mult: dict[int, int] = {}
    wits: dict[int, list[Witness]] = {}
    shift = binom2(n - k)
    for lam in enumerate_partitions(k):
        c_lam = _content(lam) + shift
        d_lam = _dimension(lam)
        for mu in extensions(lam, n):
            e = _content(mu) - c_lam
            if e in mult:
                mult[e] += d_lam * _dimension(mu)
                wits[e].append((lam, mu))
            else:
                mult[e] = d_lam * _dimension(mu)
                wits[e] = [(lam, mu)]

    lines = tuple(
        SpectralLine(e, mult[e], tuple(wits[e])) for e in sorted(mult, reverse=True)
    )
    expected = factorial(n) // factorial(n - k)
    result = Spectrum(n, k, lines)
    if result.vertex_count != expected:
        raise InternalError(f"multiplicities sum to {result.vertex_count}, expected {expected}")
    return result


def threshold(k: int) -> int:
    """k(k+1)(k+5)/6: beyond this n, -k is the only negative eigenvalue."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    numerator = k * (k + 1) * (k + 5)
    if numerator % 6:
        raise InternalError(f"k(k+1)(k+5) = {numerator} is not divisible by 6")
    return numerator // 6


def negative_lines(n: int, k: int, max_n: int | None = None) -> list[SpectralLine]:
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got n={n}, k={k}")
    return [line for line in spectrum(n, k, max_n).lines if line.eigenvalue < 0]


def minus_k_multiplicity(n: int, k: int, enforce_threshold: bool = True) -> int:
    """Sum over lambda |- k of dim(lambda) * dim((n-k, lambda_1, ..., lambda_q)).

    This equals the multiplicity of -k only when n > threshold(k); pass
    ``enforce_threshold=False`` to evaluate the sum below that range anyway.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if enforce_threshold and n <= threshold(k):
        raise ThresholdError(
            f"n={n} is not above threshold({k})={threshold(k)}; "
            "the multiplicity formula is only established beyond it"
        )
    return sum(dimension(lam) * dimension(mu_of_lambda(lam, n)) for lam in enumerate_partitions(k))
