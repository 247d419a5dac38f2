from math import comb

import pytest

from arrspec import dimension, enumerate_partitions, extensions, is_extension, mu_of_lambda

from oracles import strip_by_columns


def test_is_extension_examples():
    assert is_extension((2,), (2, 2))
    assert not is_extension((1,), (1, 1, 1))
    assert is_extension((3, 1), (3, 1))
    assert not is_extension((2, 2), (3, 1))


def test_extensions_examples():
    assert extensions((1,), 3) == [(3,), (2, 1)]
    assert extensions((2,), 4) == [(4,), (3, 1), (2, 2)]
    assert extensions((1, 1), 4) == [(3, 1), (2, 1, 1)]
    assert extensions((), 3) == [(3,)]


def test_extensions_rejects_small_n():
    with pytest.raises(ValueError):
        extensions((2, 1), 2)


def test_interlacing_equals_column_rule():
    for n in range(0, 11):
        mus = enumerate_partitions(n)
        for k in range(0, n + 1):
            for lam in enumerate_partitions(k):
                for mu in mus:
                    assert is_extension(lam, mu) == strip_by_columns(tuple(lam), tuple(mu)), (lam, mu)


def test_extensions_equals_filter():
    for n in range(1, 11):
        mus = enumerate_partitions(n)
        for k in range(0, n + 1):
            for lam in enumerate_partitions(k):
                expected = [mu for mu in mus if strip_by_columns(tuple(lam), tuple(mu))]
                assert extensions(lam, n) == expected


def test_extension_structure():
    for n in range(1, 13):
        for k in range(1, n + 1):
            for lam in enumerate_partitions(k):
                exts = extensions(lam, n)
                assert len(exts) == len(set(exts))
                for mu in exts:
                    assert len(mu) <= len(lam) + 1
                    assert mu[0] >= n - k
                if n == k:
                    assert exts == [lam]


@pytest.mark.parametrize("n", range(2, 9))
def test_pieri_dimension_bookkeeping(n):
    for k in range(1, n):
        for lam in enumerate_partitions(k):
            assert sum(dimension(mu) for mu in extensions(lam, n)) == comb(n, k) * dimension(lam)


def test_mu_of_lambda():
    assert mu_of_lambda((1,), 5) == (4, 1)
    assert mu_of_lambda((2, 2), 9) == (5, 2, 2)
    with pytest.raises(ValueError):
        mu_of_lambda((3,), 5)
    for k in range(1, 7):
        for lam in enumerate_partitions(k):
            mu = mu_of_lambda(lam, 2 * k + 1)
            assert is_extension(lam, mu)
            assert mu in extensions(lam, 2 * k + 1)
