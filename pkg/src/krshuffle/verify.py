"""Cross-route verification suites.

Every check compares two independent computations and yields a
``Check`` record; nothing here raises on a mismatch, the caller decides.
Checks over many inputs run through ``parallel_map``, which honours the
KR_THREADS environment variable.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, List, Tuple

from .dyck import DyckSeq, catalan, enumerate_dyck, schroder, schroder_by_peaks
from .qtalg import QSeries, q_expansion
from .recursion import f_series, g_series
from .sums import f_sum_truncated, g_sum
from .symfunc import d_gamma, pair_hke_combinatorial, pair_hke_generic, restricted_shuffle_series
from .words import (
    ExtSeq,
    Word,
    d_stat,
    dinv,
    dinv_at_cell,
    dinv_triples,
    is_cyclic_mdyck,
    peaks,
    rotate,
    rotate_word,
    rotation_defect,
    truncate,
)


@dataclass(frozen=True)
class Check:
    suite: str
    label: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        tail = f"  {self.detail}" if self.detail else ""
        return f"[{'ok' if self.ok else 'FAIL'}] {self.suite} {self.label}{tail}"


def worker_count() -> int:
    raw = os.environ.get("KR_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def parallel_map(fn: Callable, items: Iterable) -> List:
    items = list(items)
    workers = worker_count()
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def words(n_max: int, m_max: int, include_all_m: bool = True) -> Iterator[Word]:
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            for letters in itertools.product(range(m + 1), repeat=n):
                if not include_all_m and all(x == m for x in letters):
                    continue
                yield Word(m, letters)


def _label(v: Word) -> str:
    return f"m={v.m} v={','.join(map(str, v.letters))}"


def _nonnegative(s: QSeries, depth: int) -> bool:
    return all(c.is_nonnegative() for c in q_expansion(s, depth).values())


# -- recursion vs. state sum ----------------------------------------------

def _check_f(args: Tuple[Word, int]) -> Check:
    v, depth = args
    by_recursion = q_expansion(f_series(v.m, v), depth)
    by_sum = f_sum_truncated(v.m, v, depth)
    bad = [d for d in range(depth + 1) if by_recursion[d] != by_sum[d]]
    detail = f"q-degrees {bad} differ" if bad else ""
    return Check("recursion-vs-sum", f"f {_label(v)}", not bad, detail)


def _check_g(v: Word) -> Check:
    ok = g_series(v.m, v) == g_sum(v.m, v)
    return Check("recursion-vs-sum", f"g {_label(v)}", ok, "" if ok else "g_sum != g_series")


def check_f_words(n_max: int, m_max: int, depth: int) -> List[Check]:
    return parallel_map(_check_f, [(v, depth) for v in words(n_max, m_max)])


def check_g_words(n_max: int, m_max: int) -> List[Check]:
    return parallel_map(_check_g, list(words(n_max, m_max, include_all_m=False)))


def check_positivity(n_max: int, m_max: int, depth: int, g_n_max: int = None) -> List[Check]:
    out = []
    for v in words(n_max, m_max):
        ok = _nonnegative(f_series(v.m, v), depth)
        out.append(Check("positivity", f"f {_label(v)}", ok))
    for v in words(n_max if g_n_max is None else g_n_max, m_max, include_all_m=False):
        ok = _nonnegative(g_series(v.m, v), depth)
        out.append(Check("positivity", f"g {_label(v)}", ok))
    return out


# -- Catalan and Schroder ---------------------------------------------------

def canonical_word(n: int, m: int) -> Word:
    return Word(m, (m,) * (n - 1) + (m - 1,))


def check_catalan(n_max: int, m_max: int, symmetry_n_max: int = None) -> List[Check]:
    out = []
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            lhs = g_series(m, canonical_word(n, m)).at_a_zero()
            ok = lhs == QSeries(catalan(n, m))
            out.append(Check("catalan", f"n={n} m={m} g at a=0", ok))
        for n in range(1, (symmetry_n_max or n_max) + 1):
            c = catalan(n, m)
            out.append(Check("catalan", f"n={n} m={m} q<->t symmetry", c.swap_qt() == c))
    return out


def check_schroder(n_max: int, m_max: int) -> List[Check]:
    out = []
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            g = g_series(m, canonical_word(n, m))
            for k in range(n + 1):
                target = g.a_part(k)
                via_pf = QSeries(schroder(n, m, k))
                via_peaks = QSeries(schroder_by_peaks(n, m, k))
                ok = target == via_pf == via_peaks
                out.append(Check("schroder", f"n={n} m={m} k={k}", ok))
    return out


# -- shuffle side -------------------------------------------------------------

def _check_connection(v: Word) -> Check:
    ok = restricted_shuffle_series(v) == g_series(v.m, v)
    return Check("connection", _label(v), ok)


def check_connection(n_max: int, m_max: int) -> List[Check]:
    return parallel_map(_check_connection, list(words(n_max, m_max, include_all_m=False)))


def _check_pairing(gamma: DyckSeq) -> Check:
    n = gamma.n
    sym = d_gamma(gamma, n + 2)
    if not sym.is_symmetric():
        return Check("pairing", str(gamma), False, "D_gamma not symmetric")
    f = d_gamma(gamma, n)
    bad = [k for k in range(n + 1) if pair_hke_combinatorial(gamma, k) != pair_hke_generic(f, k)]
    return Check("pairing", str(gamma), not bad, f"k={bad} differ" if bad else "")


def check_pairing(n_max: int, m_max: int) -> List[Check]:
    gammas = [g for m in range(1, m_max + 1) for n in range(1, n_max + 1) for g in enumerate_dyck(n, m)]
    return parallel_map(_check_pairing, gammas)


# -- statistic laws -----------------------------------------------------------

def sequences(n_max: int, m_max: int) -> Iterator[ExtSeq]:
    """Every sigma with entries <= 2m + 1, 1 <= n <= n_max, m <= m_max."""
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            for s in itertools.product(range(2 * m + 2), repeat=n):
                yield ExtSeq(m, s)


def rotation_law_counterexamples(n_max: int, m_max: int, limit: int = 5) -> List[ExtSeq]:
    """sigma where dinv(sigma) - dinv(rotate(sigma)) differs from the d_stat-based prediction
    (0 when sigma_1 >= m, d(sigma, 1) otherwise)."""
    out = []
    for sigma in sequences(n_max, m_max):
        s1 = sigma.entries[0]
        predicted = 0 if s1 >= sigma.m else d_stat(sigma, 1)
        if dinv(sigma) - dinv(rotate(sigma)) != predicted:
            out.append(sigma)
            if len(out) >= limit:
                break
    return out


def _stat_laws(args: Tuple[int, int]) -> Dict[str, List[Tuple[int, ...]]]:
    m, n = args
    failures: Dict[str, List[Tuple[int, ...]]] = {
        "rotation-defect": [], "truncation": [], "cells-vs-triples": [],
        "top-cell": [], "cyclic-rotation": [],
    }
    for s in itertools.product(range(2 * m + 2), repeat=n):
        sigma = ExtSeq(m, s)
        rotated = rotate(sigma)
        if dinv(sigma) - dinv(rotated) != rotation_defect(sigma):
            failures["rotation-defect"].append(s)
        v = truncate(sigma)
        expected = rotate_word(v).letters if s[0] <= m else v.letters[1:] + (m,)
        if truncate(rotated).letters != expected:
            failures["truncation"].append(s)
        if dinv(sigma) != dinv_triples(sigma):
            failures["cells-vs-triples"].append(s)
        if any(d_stat(sigma, i) != dinv_at_cell(sigma, i, 0) for i in range(1, n + 1)):
            failures["top-cell"].append(s)
        if s[0] >= 1 and is_cyclic_mdyck(sigma):
            shifted = frozenset((i - 2) % n + 1 for i in peaks(sigma))
            if not is_cyclic_mdyck(rotated) or peaks(rotated) != shifted:
                failures["cyclic-rotation"].append(s)
    return failures


def check_statistics(n_max: int, m_max: int) -> List[Check]:
    jobs = [(m, n) for m in range(1, m_max + 1) for n in range(1, n_max + 1)]
    merged: Dict[str, List[Tuple[int, ...]]] = {}
    for part in parallel_map(_stat_laws, jobs):
        for law, bad in part.items():
            merged.setdefault(law, []).extend(bad)
    return [
        Check("statistics", law, not bad, f"{len(bad)} failures, first {bad[0]}" if bad else "")
        for law, bad in merged.items()
    ]


# -- registry -----------------------------------------------------------------

SUITES = ("recursion-vs-sum", "catalan", "schroder", "connection", "pairing", "statistics", "positivity")


def run_suite(name: str, n_max: int, m_max: int, q_depth: int) -> List[Check]:
    if name == "recursion-vs-sum":
        return check_f_words(n_max, m_max, q_depth) + check_g_words(n_max, m_max)
    if name == "catalan":
        return check_catalan(n_max, m_max)
    if name == "schroder":
        return check_schroder(n_max, m_max)
    if name == "connection":
        return check_connection(n_max, m_max)
    if name == "pairing":
        return check_pairing(n_max, m_max)
    if name == "statistics":
        return check_statistics(n_max, m_max)
    if name == "positivity":
        return check_positivity(n_max, m_max, q_depth)
    if name == "all":
        return [c for s in SUITES for c in run_suite(s, n_max, m_max, q_depth)]
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")
