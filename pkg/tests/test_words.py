import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from krshuffle.words import (
    ExtSeq,
    Word,
    d_stat,
    dinv,
    dinv_at_cell,
    dinv_triples,
    e_stat,
    format_seq,
    is_cyclic_mdyck,
    parse_extseq,
    parse_word,
    peaks,
    recursion_measure,
    rotate,
    rotate_word,
    rotation_defect,
    truncate,
)


def test_word_validation():
    with pytest.raises(ValueError):
        Word(2, (3,))
    with pytest.raises(ValueError):
        Word(0, ())
    with pytest.raises(ValueError):
        ExtSeq(1, (-1,))


def test_truncate():
    assert truncate(ExtSeq(3, (1, 5, 1, 2, 3, 0, 4))).letters == (1, 3, 1, 2, 3, 0, 3)
    assert truncate(ExtSeq(2, (0, 0, 0))).letters == (0, 0, 0)
    assert truncate(ExtSeq(2, (7,))).letters == (2,)


def test_rotate():
    assert rotate(ExtSeq(3, (1, 5, 1, 2, 3, 0, 4))).entries == (5, 1, 2, 3, 0, 4, 0)
    assert rotate(ExtSeq(3, (0, 3))).entries == (3,)
    assert rotate(ExtSeq(2, (2, 2, 2))).entries == (2, 2, 1)
    with pytest.raises(ValueError, match="empty sequence"):
        rotate(ExtSeq(2, ()))


def test_e_stat_counts_strict_descents_below_m():
    # pairs i < j with v_j < v_i <= m - 1
    assert e_stat(Word(1, (1, 0))) == 0
    assert e_stat(Word(3, (1, 1, 2))) == 0
    assert e_stat(Word(3, (2, 1))) == 1
    assert e_stat(Word(3, (2, 3, 1, 0))) == 3


def test_dinv_examples():
    assert dinv(ExtSeq(1, (0, 0))) == 1
    assert dinv(ExtSeq(1, (0, 1))) == 0
    assert dinv(ExtSeq(2, ())) == 0


def test_d_stat_examples():
    s = ExtSeq(1, (0, 0))
    assert d_stat(s, 1) == 1
    assert d_stat(s, 2) == 0
    assert d_stat(ExtSeq(4, (0,)), 1) == 0
    with pytest.raises(IndexError):
        d_stat(s, 3)


def test_cyclic_condition_and_peaks():
    assert is_cyclic_mdyck(ExtSeq(2, (0, 2)))
    assert peaks(ExtSeq(2, (0, 2))) == {2}
    assert is_cyclic_mdyck(ExtSeq(1, (0, 0)))
    assert peaks(ExtSeq(1, (0, 0))) == {1, 2}
    assert not is_cyclic_mdyck(ExtSeq(2, (0, 5)))


def test_recursion_measure():
    assert recursion_measure(Word(1, (1, 0))) == (2, 1, 1)
    assert recursion_measure(Word(1, ())) == (0, 0, 0)
    assert recursion_measure(Word(3, (3, 3))) == (2, 6, 0)


def test_text_format_round_trip():
    w = parse_word("m=2 v=2,1,0")
    assert w == Word(2, (2, 1, 0))
    assert format_seq(w.m, w.letters) == "m=2 v=2,1,0"
    assert parse_extseq("m=3 sigma=1,5,0").entries == (1, 5, 0)
    with pytest.raises(ValueError):
        parse_word("v=2,1")


def test_rotation_defect_example():
    # sigma_1 strictly between 0 and m: dinv is unchanged here although d(sigma, 1) = 1
    s = ExtSeq(2, (1, 2))
    assert dinv(s) == dinv(rotate(s)) == 1
    assert d_stat(s, 1) == 1
    assert rotation_defect(s) == 0


def _all_sequences(n_max, m_max):
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            for s in itertools.product(range(2 * m + 2), repeat=n):
                yield ExtSeq(m, s)


def test_rotation_defect_law_exhaustive():
    for s in _all_sequences(4, 3):
        assert dinv(s) - dinv(rotate(s)) == rotation_defect(s), s
        if s.entries[0] >= s.m:
            assert dinv(s) == dinv(rotate(s))
        if s.entries[0] == 0:
            assert rotation_defect(s) == d_stat(s, 1)


def test_truncation_rotation_law_exhaustive():
    for s in _all_sequences(4, 3):
        v = truncate(s)
        got = truncate(rotate(s)).letters
        if s.entries[0] <= s.m:
            assert got == rotate_word(v).letters
        else:
            assert got == v.letters[1:] + (s.m,)


def test_cyclic_condition_rotates_with_peaks():
    for s in _all_sequences(4, 2):
        if s.entries[0] < 1 or not is_cyclic_mdyck(s):
            continue
        r = rotate(s)
        n = len(s)
        assert is_cyclic_mdyck(r)
        assert peaks(r) == {(i - 2) % n + 1 for i in peaks(s)}


sequences = st.integers(1, 3).flatmap(
    lambda m: st.lists(st.integers(0, 2 * m + 3), min_size=1, max_size=6).map(lambda xs: ExtSeq(m, tuple(xs)))
)


@given(sequences)
def test_cell_and_triple_dinv_agree(s):
    assert dinv(s) == dinv_triples(s)


@given(sequences)
def test_d_stat_is_top_cell_count(s):
    for i in range(1, len(s) + 1):
        assert d_stat(s, i) == dinv_at_cell(s, i, 0)


@given(sequences)
def test_dinv_is_sum_over_cells(s):
    total = sum(dinv_at_cell(s, i, leg) for i in range(1, len(s) + 1) for leg in range(s.entries[i - 1] + 1))
    assert total == dinv(s)
