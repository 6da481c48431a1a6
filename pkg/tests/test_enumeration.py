import pytest

from arcnest import ArcDiagram, ObjectClass, brute_force_count, decompose, is_admissible, joint_table, sequence
from arcnest.enumeration import (
    involutions,
    objects,
    seq_enhanced_matchings,
    seq_enhanced_set_partitions,
    seq_matchings,
    seq_set_partitions,
    series_N_S,
    series_O,
    series_T,
    set_partitions,
)

M, P, S = ObjectClass.MATCHING, ObjectClass.SET_PARTITION, ObjectClass.PERMUTATION

MATCHINGS = [1, 1, 2, 4, 10, 26, 76, 232, 756, 2548, 8906, 31846, 116422, 432758, 1634944]
ENHANCED_MATCHINGS = [1, 1, 2, 4, 10, 25, 67, 180, 496, 1370, 3863, 10881, 31448, 90280]
ENHANCED_PARTITIONS = [1, 1, 2, 5, 15, 44, 147, 439, 1484, 4469, 15217]
INVOLUTIONS = [1, 1, 2, 4, 10, 26, 76, 232, 764]
A124500 = [1, 1, 2, 4, 10, 25, 67, 180, 496]
A148351 = [1, 1, 2, 5, 15, 44, 147]


def test_published_sequences():
    assert seq_matchings(14) == MATCHINGS
    assert seq_enhanced_matchings(13) == ENHANCED_MATCHINGS
    assert seq_enhanced_set_partitions(10) == ENHANCED_PARTITIONS


def test_agreement_with_involutions_and_oeis():
    assert MATCHINGS[:8] == INVOLUTIONS[:8]
    assert (MATCHINGS[8], INVOLUTIONS[8]) == (756, 764)
    assert ENHANCED_MATCHINGS[:9] == A124500
    assert ENHANCED_PARTITIONS[:7] == A148351


def test_set_partition_small_terms():
    seq = seq_set_partitions(8)
    assert seq[:4] == [1, 1, 2, 5]


def test_sequence_result():
    res = sequence(M, False, 5)
    assert res.terms == (1, 1, 2, 4, 10) and res.terms[0] == 1
    with pytest.raises(ValueError):
        sequence(S, False, 5)
    with pytest.raises(ValueError):
        sequence(M, False, 0)


@pytest.mark.parametrize("cls,enhanced,top", [(M, False, 9), (M, True, 9), (P, False, 8), (P, True, 8)])
def test_brute_force_matches_series(cls, enhanced, top):
    seq = sequence(cls, enhanced, top + 1).terms
    assert [brute_force_count(cls, enhanced, n) for n in range(top + 1)] == list(seq)


def test_brute_force_examples():
    assert brute_force_count(M, False, 8) == 756
    assert brute_force_count(P, True, 5) == 44
    assert brute_force_count(M, False, 0) == 1
    assert brute_force_count(P, True, 3) == 5


def test_resource_guard(monkeypatch):
    monkeypatch.setenv("ARCNEST_MAX_N", "4")
    with pytest.raises(ValueError):
        brute_force_count(M, False, 5)
    with pytest.raises(ValueError):
        joint_table(M, 6)


def test_indecomposable_block_counts():
    # O + T at x=y=z=p=1 counts admissible matchings whose whole vertex range is one interval
    blocks = (series_O(9) + series_T(9)).sequence()
    for n in range(2, 10):
        brute = sum(1 for arcs in involutions(n)
                    if len(decompose(ArcDiagram(n, arcs))) == 1
                    and is_admissible(M, ArcDiagram(n, arcs)).admissible)
        assert blocks[n] == brute


def test_indecomposable_partition_counts():
    chains = series_N_S(8).sequence()
    for n in range(1, 9):
        brute = sum(1 for d in objects(P, n) if len(decompose(d)) == 1 and is_admissible(P, d).admissible)
        assert chains[n] == brute


def test_enumerators():
    assert sum(1 for _ in involutions(8)) == 764
    assert sum(1 for _ in set_partitions(7)) == 877
    assert sum(1 for _ in objects(S, 5)) == 120
    assert sum(1 for _ in objects(M, 8, perfect=True)) == 105


def test_joint_table_small():
    table = joint_table(M, 4)
    assert table == [[0, 0, 0], [0, 1, 1], [0, 1, 0]]


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_joint_table_symmetric_admissible(n):
    t = joint_table(M, n, admissible_only=True)
    assert t == [list(r) for r in zip(*t)]


def test_joint_table_partial_matchings_and_partitions():
    for cls, n in [(M, 7), (P, 6)]:
        t = joint_table(cls, n, admissible_only=True, perfect=False)
        assert t == [list(r) for r in zip(*t)]


def test_joint_table_permutations():
    t = joint_table(S, 3)
    assert t == [list(r) for r in zip(*t)]
    assert sum(map(sum, t)) == 6
    t = joint_table(S, 5, admissible_only=True)
    assert t == [list(r) for r in zip(*t)]
