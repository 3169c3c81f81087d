import json
import random
from fractions import Fraction
from math import comb, factorial

import pytest

from tangential.symfun import (CharacterTable, FeasibilityError, NPartition,
                               all_shapes, character, character_table,
                               coordinate_mult, count_ssyt, cycle_types,
                               dim_gl, dominates, kostka, kostka_matrix,
                               mult_in_sym, mult_in_sym_characters,
                               mult_in_sym_weights, partitions,
                               sym_space_dimension, veronese_k1q)


def test_partitions_examples():
    assert partitions(4, 2) == [(2, 2), (3, 1), (4,)]
    assert partitions(0, 3) == [()]
    assert partitions(3, 1) == [(3,)]
    assert partitions(5) == partitions(5, 5)


def test_dim_gl_examples():
    assert dim_gl((4, 4), 2) == 1
    assert dim_gl((2, 1), 3) == 8
    assert dim_gl((1, 1, 1), 2) == 0


def test_dim_gl_against_ssyt_enumeration():
    for lam in [(2, 1), (3,), (2, 2), (3, 1), (2, 1, 1)]:
        for m in (1, 2, 3):
            assert dim_gl(lam, m) == count_ssyt(lam, m)


def test_character_values_on_s3():
    assert character((2, 1), (1, 1, 1)) == 2
    assert character((2, 1), (2, 1)) == 0
    assert character((2, 1), (3,)) == -1


def test_character_size_mismatch():
    with pytest.raises(ValueError):
        character((2, 1), (2, 2))


def test_character_orthogonality_up_to_six():
    for r in range(1, 7):
        assert character_table(r).verify_orthogonality()


def test_class_sizes_sum_to_group_order():
    for r in range(1, 7):
        assert sum(size for _, size in cycle_types(r)) == factorial(r)


def test_kostka_values():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((3,), (1, 1, 1)) == 1
    assert kostka((2, 2), (1, 1, 1, 1)) == 2
    assert kostka((2, 2), (2, 2)) == 1
    assert kostka((2, 2), (3, 1)) == 0


def test_kostka_unitriangular():
    for n in (3, 4, 5):
        for lam in partitions(n):
            assert kostka(lam, lam) == 1
            for mu in partitions(n):
                if kostka(lam, mu):
                    assert dominates(lam, mu)


def test_character_table_cache_roundtrip(tmp_path):
    t = character_table(4, cache=str(tmp_path))
    files = list(tmp_path.iterdir())
    assert len(files) == 1
    t2 = character_table(4, cache=str(tmp_path))
    assert t2.values == t.values
    # corrupt cache is ignored, cold recompute stays correct
    files[0].write_text("{broken")
    t3 = character_table(4, cache=str(tmp_path))
    assert t3.values == t.values


def test_kostka_matrix_cache(tmp_path):
    k = kostka_matrix(4, cache=str(tmp_path))
    k2 = kostka_matrix(4, cache=str(tmp_path))
    assert k == k2
    assert k[((2, 2), (1, 1, 1, 1))] == 2


def test_coordinate_mult_rule():
    # all one-row: e=0, f=0
    lam = NPartition([(4,), (4,)])
    assert coordinate_mult(lam, 4, (1, 1)) == 1
    # a single hook factor: e=1 < 2 = 2f
    lam = NPartition([(11, 1), (12,)])
    assert coordinate_mult(lam, 4, (3, 3)) == 0
    # e = r boundary
    lam = NPartition([(1, 1), (1, 1), (2,)])
    assert coordinate_mult(lam, 2, (1, 1, 1)) == 1
    # e > r
    lam = NPartition([(1, 1), (1, 1), (1, 1)])
    assert coordinate_mult(lam, 2, (1, 1, 1)) == 0
    # three rows kill
    lam = NPartition([(2, 1, 1), (4,)])
    assert coordinate_mult(lam, 4, (1, 1)) == 0


def test_coordinate_mult_validates_sizes():
    with pytest.raises(ValueError):
        coordinate_mult(NPartition([(3,)]), 2, (2,))


def test_veronese_k1q():
    assert veronese_k1q(4, 1) == [(4, 4)]
    assert veronese_k1q(5, 1) == [(6, 4)]
    assert veronese_k1q(6, 1) == [(8, 4), (6, 6)]
    assert veronese_k1q(2, 1) == []
    assert veronese_k1q(2, 2) == [(2, 2, 2)]
    assert veronese_k1q(3, 2) == [(5, 2, 2), (4, 4, 1)]
    assert veronese_k1q(4, 2) == [(8, 2, 2), (6, 6)]
    assert veronese_k1q(3, 3) == [(6, 6)]
    assert veronese_k1q(4, 3) == []
    with pytest.raises(ValueError):
        veronese_k1q(3, 4)
    with pytest.raises(ValueError):
        veronese_k1q(1, 1)


def test_mult_cauchy():
    for r in (2, 3):
        for lam1 in partitions(r):
            for lam2 in partitions(r):
                lam = NPartition([lam1, lam2])
                expected = 1 if lam1 == lam2 else 0
                assert mult_in_sym_weights(lam, r, (1, 1)) == expected
                assert mult_in_sym_characters(lam, r, (1, 1)) == expected


def test_mult_sym_cube_of_quadric():
    expected = {(6,): 1, (4, 2): 1, (2, 2, 2): 1}
    for lam in partitions(6, 3):
        lam_n = NPartition([lam])
        want = expected.get(lam, 0)
        assert mult_in_sym_weights(lam_n, 3, (2,)) == want
        assert mult_in_sym_characters(lam_n, 3, (2,)) == want


def test_mult_paper_values():
    # four hook factors in degree three: multiplicity 3
    lam = NPartition([(2, 1)] * 4)
    assert mult_in_sym(lam, 3, (1, 1, 1, 1), path="weights") == 3
    assert mult_in_sym(lam, 3, (1, 1, 1, 1), path="characters") == 3
    # same shape padded with a one-row factor
    lam5 = NPartition([(2, 1)] * 4 + [(3,)])
    assert mult_in_sym_characters(lam5, 3, (1, 1, 1, 1, 1)) == 3
    # the paired (3d-2, 2) shapes: multiplicity 2
    assert mult_in_sym(NPartition([(4, 2), (4, 2)]), 3, (2, 2)) == 2
    assert mult_in_sym(NPartition([(4, 2), (4, 2)]), 3, (2, 2),
                       path="characters") == 2
    assert mult_in_sym(NPartition([(4, 2), (2, 1), (2, 1)]), 3, (2, 1, 1)) == 2


def test_mult_one_row_is_one():
    for r in (1, 2, 3, 4):
        for d in [(1,), (2,), (3,)]:
            lam = NPartition([(r * d[0],)])
            assert mult_in_sym_weights(lam, r, d) == 1
            assert mult_in_sym_characters(lam, r, d) == 1


def test_mult_paths_agree_small_sweep():
    for d in [(1,), (2,), (3,), (1, 1), (2, 1), (2, 2), (1, 1, 1)]:
        for r in (2, 3):
            for lam in all_shapes(r, d, tuple(min(3, r) for _ in d)):
                w = mult_in_sym_weights(lam, r, d)
                c = mult_in_sym_characters(lam, r, d)
                assert w == c, (d, r, lam)


def test_coordinate_mult_below_sym_multiplicity():
    for d in [(1, 1), (2,), (1, 1, 1)]:
        for r in (2, 3):
            for lam in all_shapes(r, d, tuple(min(3, r) for _ in d)):
                assert coordinate_mult(lam, r, d) <= mult_in_sym_weights(lam, r, d)


def test_dimension_identity_desk_specs():
    cases = [((1, 1), (2, 2), 4), ((2,), (2,), 4), ((1, 1), (2, 3), 3),
             ((3,), (2,), 4), ((1, 1, 1), (2, 2, 2), 3), ((2, 1), (2, 2), 3),
             ((4,), (2,), 3), ((2,), (3,), 3)]
    for d, m, rmax in cases:
        for r in range(1, rmax + 1):
            total = 0
            for lam in all_shapes(r, d, tuple(min(mj, r) for mj in m)):
                mult = mult_in_sym_characters(lam, r, d)
                if mult:
                    prod = mult
                    for j, comp in enumerate(lam.components):
                        prod *= dim_gl(comp, m[j])
                    total += prod
            assert total == sym_space_dimension(d, m, r), (d, m, r)


def test_npartition_derived_quantities():
    lam = NPartition([(6, 2), (12, 4), (7, 1)])
    assert lam.e == 7
    assert lam.f((1, 2, 1)) == 2
    assert lam.max_rows() == 2
    lam0 = NPartition([(4,), (8,)])
    assert lam0.e == 0 and lam0.f((1, 2)) == 0


def test_weight_cap_raises():
    lam = NPartition([(9, 9, 9, 9)] * 4)
    with pytest.raises(FeasibilityError):
        mult_in_sym_weights(lam, 4, (9, 9, 9, 9))
