import random
from fractions import Fraction

import pytest

from tangential.exactalg import (DimensionError, SparseMatrix, in_span,
                                 rank_and_kernel, rank_naive)


def dense(rows):
    return SparseMatrix.from_dense(rows)


def test_identity_has_full_rank():
    rank, kernel = rank_and_kernel(dense([[1, 0], [0, 1]]))
    assert rank == 2 and kernel == []


def test_proportional_rows():
    rank, kernel = rank_and_kernel(dense([[1, 2], [2, 4]]))
    assert rank == 1
    assert len(kernel) == 1
    assert kernel[0] == [Fraction(2), Fraction(-1)]


def test_zero_matrix():
    rank, kernel = rank_and_kernel(SparseMatrix(3, 3))
    assert rank == 0 and len(kernel) == 3
    for i, vec in enumerate(kernel):
        assert vec[i] == 1 and sum(map(abs, vec)) == 1


def test_empty_matrix():
    assert rank_and_kernel(SparseMatrix(0, 0)) == (0, [])
    rank, kernel = rank_and_kernel(SparseMatrix(0, 2))
    assert rank == 0 and len(kernel) == 2


def test_kernel_postconditions_random():
    rng = random.Random(31)
    for _ in range(40):
        nr, nc = rng.randint(1, 9), rng.randint(1, 9)
        rows = [[Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                 if rng.random() < 0.6 else 0 for _ in range(nc)]
                for _ in range(nr)]
        m = dense(rows)
        rank, kernel = rank_and_kernel(m)
        assert rank + len(kernel) == nc
        for vec in kernel:
            assert all(v == 0 for v in m.mul_vector(vec))
        # independent by construction: each vector is 1 at its own free column
        free_support = [tuple(i for i, v in enumerate(vec) if v) for vec in kernel]
        assert len(set(free_support)) == len(free_support) or not kernel


def test_rank_invariant_under_permutation_and_scaling():
    rng = random.Random(7)
    for _ in range(25):
        nr, nc = rng.randint(2, 8), rng.randint(2, 8)
        rows = [[Fraction(rng.randint(-4, 4)) for _ in range(nc)] for _ in range(nr)]
        m = dense(rows)
        base, _ = rank_and_kernel(m)
        rng.shuffle(rows)
        scaled = [[v * Fraction(rng.randint(1, 5)) for v in row] for row in rows]
        cols = list(range(nc))
        rng.shuffle(cols)
        permuted = [[row[c] for c in cols] for row in scaled]
        got, _ = rank_and_kernel(dense(permuted))
        assert got == base


def test_fraction_free_matches_naive_on_fifty_random_matrices():
    rng = random.Random(50)
    for _ in range(50):
        rows = [[Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                 for _ in range(10)] for _ in range(10)]
        m = dense(rows)
        ff, _ = rank_and_kernel(m, method="fraction_free")
        assert ff == rank_naive(m)


def test_certified_matches_fraction_free():
    rng = random.Random(99)
    for _ in range(25):
        nr, nc = rng.randint(1, 12), rng.randint(1, 12)
        rows = [[Fraction(rng.randint(-97, 97), rng.randint(1, 97))
                 if rng.random() < 0.5 else 0 for _ in range(nc)]
                for _ in range(nr)]
        m = dense(rows)
        r1, k1 = rank_and_kernel(m, method="fraction_free")
        r2, k2 = rank_and_kernel(m, method="certified")
        assert r1 == r2
        assert len(k1) == len(k2)
        for vec in k2:
            assert all(v == 0 for v in m.mul_vector(vec))


def test_kernel_reproducible():
    rng = random.Random(3)
    rows = [[Fraction(rng.randint(-5, 5)) for _ in range(7)] for _ in range(4)]
    m = dense(rows)
    out1 = rank_and_kernel(m)
    out2 = rank_and_kernel(dense(rows))
    assert out1 == out2


def test_in_span_examples():
    assert in_span([0, 0], [[1, 2]])
    assert not in_span([1, 0], [[0, 1]])
    assert in_span([1, 1], [[1, 0], [0, 1]])
    assert in_span([Fraction(1, 2), Fraction(1, 3)],
                   [[3, 2]]) is True
    assert not in_span([1, 1, 1], [])
    assert in_span([0, 0, 0], [])


def test_in_span_dimension_error():
    with pytest.raises(DimensionError):
        in_span([1, 0], [[1, 0, 0]])


def test_mul_vector_dimension_error():
    with pytest.raises(DimensionError):
        dense([[1, 2]]).mul_vector([1])


def test_dump_and_load_roundtrip():
    m = dense([[Fraction(1, 2), 0], [0, Fraction(-3, 4)]])
    text = m.dump()
    lines = text.strip().splitlines()
    assert lines[0] == "2 2 2"
    assert SparseMatrix.load(text) == m


def test_entries_validation():
    with pytest.raises(DimensionError):
        SparseMatrix(1, 1, {(0, 5): Fraction(1)})
