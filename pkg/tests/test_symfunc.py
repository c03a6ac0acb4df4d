import itertools

import pytest

from conftest import same
from krshuffle.dyck import DyckSeq, enumerate_dyck, schroder
from krshuffle.errors import ConsistencyError
from krshuffle.qtalg import ONE, Q, T, QtaPoly
from krshuffle.recursion import g_series
from krshuffle.symfunc import (
    Composition,
    SymInHBasis,
    TruncatedExpansion,
    canonical_representative,
    compare_printed_corrections,
    corrections,
    d_gamma,
    dyck_projection,
    gessel_qsym,
    generalized_hook_series,
    hook_series,
    monomial_qsym,
    pair_hke_combinatorial,
    pair_hke_generic,
    printed_corrections,
    restricted_constraints,
    restricted_shuffle_series,
    shuffle_pairing,
    tracked_correction,
)
from krshuffle.sums import enumerate_seq_m
from krshuffle.words import Word


def test_composition_subset_bijection():
    for n in range(1, 6):
        for k in range(n):
            for subset in itertools.combinations(range(1, n), k):
                c = Composition.from_subset(subset, n)
                assert c.n == n and c.to_subset() == frozenset(subset)
    assert Composition.from_subset({1}, 2).parts == (1, 1)
    assert Composition.from_subset((), 3).parts == (3,)
    with pytest.raises(ValueError):
        Composition((0, 2))


def test_monomial_and_gessel_examples():
    m3 = monomial_qsym(Composition((3,)), 2)
    assert set(m3.terms) == {(3, 0), (0, 3)}
    assert gessel_qsym(Composition((1, 1)), 3) == monomial_qsym(Composition((1, 1)), 3)
    q2 = gessel_qsym(Composition((2,)), 3)
    assert q2 == monomial_qsym(Composition((2,)), 3) + monomial_qsym(Composition((1, 1)), 3)
    assert len(q2.terms) == 6


def test_d_gamma_examples():
    assert d_gamma(DyckSeq(1, (0,)), 2) == monomial_qsym(Composition((1,)), 2)
    # pi = (1, 2) has dinv 1 and descent {1}; pi = (2, 1) has dinv 0 and no descent
    expected = gessel_qsym(Composition((1, 1)), 3).scale(T) + gessel_qsym(Composition((2,)), 3)
    assert d_gamma(DyckSeq(1, (0, 0)), 3) == expected
    assert d_gamma(DyckSeq(1, (0, 1)), 3) == gessel_qsym(Composition((1, 1)), 3).scale(Q)


def test_d_gamma_is_symmetric():
    for m in (1, 2):
        for n in range(1, 5):
            for g in enumerate_dyck(n, m):
                assert d_gamma(g, n + 2).is_symmetric(), g


def test_asymmetric_expansion_detected():
    f = monomial_qsym(Composition((2, 1)), 3)
    assert not f.is_symmetric()
    with pytest.raises(ValueError, match="symmetric"):
        pair_hke_generic(f, 1)


def test_h_basis_arithmetic():
    assert SymInHBasis.e(2).coeffs == {(1, 1): 1, (2,): -1}
    assert SymInHBasis.e(3).coeffs == {(1, 1, 1): 1, (2, 1): -2, (3,): 1}
    prod = SymInHBasis.h(1) * SymInHBasis.e(1)
    assert prod.coeffs == {(1, 1): 1}
    assert SymInHBasis({(1, 2): 1}).coeffs == {(2, 1): 1}
    assert prod.to_json_dict() == {"1,1": 1}


def _e_expansion(n, num_vars):
    return monomial_qsym(Composition((1,) * n), num_vars)


def test_generic_pairing_examples():
    assert pair_hke_generic(_e_expansion(3, 3), 0) == ONE
    assert pair_hke_generic(_e_expansion(2, 2), 1) == ONE
    d = d_gamma(DyckSeq(1, (0, 0)), 2)
    assert pair_hke_generic(d, 1) == ONE + T


def test_generic_pairing_preconditions():
    with pytest.raises(ValueError, match="variables"):
        pair_hke_generic(TruncatedExpansion(2, {}), 0, n=3)
    mixed = _e_expansion(2, 3) + monomial_qsym(Composition((1,)), 3)
    with pytest.raises(ValueError, match="homogeneous"):
        pair_hke_generic(mixed, 0)
    with pytest.raises(ValueError):
        TruncatedExpansion(2, {(1,): ONE})


def test_combinatorial_pairing_examples():
    assert pair_hke_combinatorial(DyckSeq(1, (0, 0)), 1) == ONE + T
    assert pair_hke_combinatorial(DyckSeq(1, (0, 1)), 1) == Q
    from krshuffle.dyck import dinv_gamma

    for g in enumerate_dyck(3, 2):
        assert pair_hke_combinatorial(g, 0) == QtaPoly.monomial(g.area, dinv_gamma(g), 0)


def test_two_pairing_routes_agree():
    for m in (1, 2):
        for n in range(1, 5):
            for g in enumerate_dyck(n, m):
                f = d_gamma(g, n)
                for k in range(n + 1):
                    assert pair_hke_combinatorial(g, k) == pair_hke_generic(f, k), (g, k)


def test_shuffle_pairing_examples():
    assert shuffle_pairing(2, 1, 0) == Q + T
    assert shuffle_pairing(2, 1, 1) == ONE + Q + T
    assert shuffle_pairing(2, 1, 2) == ONE
    for m in (1, 2):
        for n in range(1, 4):
            for k in range(n + 1):
                assert shuffle_pairing(n, m, k) == schroder(n, m, k)


def test_projection_and_representative():
    assert dyck_projection((2, 0, 1)) == (0, 1, 1)
    assert canonical_representative((2, 0, 1), 1) == (2, 2, 0)
    for m in (1, 2):
        for n in range(1, 4):
            for v in itertools.product(range(m + 1), repeat=n):
                if all(x == m for x in v):
                    continue
                for s in enumerate_seq_m(Word(m, v)):
                    DyckSeq(m, dyck_projection(s.entries))


def test_corrections_examples():
    for m in (1, 2, 3):
        for n in range(1, 5):
            assert corrections(Word(m, (m,) * (n - 1) + (m - 1,))) == (0, 0)
            cq, _ = corrections(Word(m, (m - 1,) + (m,) * (n - 1)))
            assert cq == n - 1
    assert corrections(Word(1, (0, 1))) == (1, 0)
    with pytest.raises(ValueError):
        corrections(Word(2, (2, 2)))


def test_corrections_are_well_defined_and_match_closed_forms():
    for m in (1, 2, 3):
        for n in range(1, 5):
            for v in itertools.product(range(m + 1), repeat=n):
                if all(x == m for x in v):
                    continue
                w = Word(m, v)
                assert corrections(w) == printed_corrections(w), w
                assert compare_printed_corrections(w)


def test_tracked_rotation_count():
    cq, ct, steps = tracked_correction((2, 0, 1), 1)
    assert steps == 3 * (1 - 0) - 2
    assert (cq, ct) == corrections(Word(1, (1, 0, 1)))


def test_restricted_constraints():
    pinned, lower = restricted_constraints(Word(1, (1, 0)))
    assert pinned == {} and lower == {2: 0}
    pinned, lower = restricted_constraints(Word(1, (0, 0)))
    assert pinned == {2: 0} and lower == {}


def test_restricted_shuffle_examples():
    assert same(restricted_shuffle_series(Word(1, (1, 0))), "(1+a)*(q+t+a)")
    assert same(restricted_shuffle_series(Word(1, (0, 0))), "(t+a)*(1+a)")
    assert restricted_shuffle_series(Word(2, (1, 0))) == g_series(2, (1, 0))
    with pytest.raises(ValueError):
        restricted_shuffle_series(Word(1, (1, 1)))


def test_connection_with_recursion():
    for m in (1, 2):
        for n in range(1, 5):
            for v in itertools.product(range(m + 1), repeat=n):
                if all(x == m for x in v):
                    continue
                assert restricted_shuffle_series(Word(m, v)) == g_series(m, v), (m, v)


def test_bad_correction_is_a_hard_failure(monkeypatch):
    import krshuffle.symfunc as sf

    monkeypatch.setattr(sf, "corrections", lambda v: (50, 0))
    with pytest.raises(ConsistencyError):
        sf.restricted_shuffle_series(Word(1, (0, 0)))


def test_hook_series():
    for n in range(1, 5):
        for i in range(1, n + 1):
            assert hook_series(n, i) == g_series(1, (1,) * (n - i) + (0,) + (1,) * (i - 1)), (n, i)


def test_generalized_hook_series():
    for m in (2, 3):
        for n in range(1, 4):
            for i in range(1, n + 1):
                for k in range(m):
                    word = (m,) * (n - i) + (k,) + (m,) * (i - 1)
                    assert generalized_hook_series(n, m, i, k) == g_series(m, word), (m, n, i, k)
    with pytest.raises(ValueError):
        generalized_hook_series(2, 2, 1, 2)


def test_expansion_json():
    d = d_gamma(DyckSeq(1, (0, 1)), 2)
    assert d.to_json_dict() == {"1,1": [[1, 0, 0, "1"]]}
