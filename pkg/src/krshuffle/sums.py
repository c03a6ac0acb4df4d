"""Summation formulas for f_v and g_v over extensions of v.

The f-sum is infinite; it is evaluated exactly one q-degree at a time by
distributing the excess |sigma| - |v| over the positions where v_i = m.
The g-sum runs over the cyclic m-Dyck extensions Seq_m(v), which is a
finite set unless v is all m.
"""

from __future__ import annotations

from typing import Dict, Iterator, Optional, Sequence, Tuple, Union

from .errors import InfiniteFamilyError, NegativeExponentError
from .qtalg import QSeries, QtaPoly, ZERO
from .words import ExtSeq, Word, _d_stat, _dinv_cells, _e_stat, _is_peak


def _word(m: int, v: Union[Word, Sequence[int]]) -> Word:
    if isinstance(v, Word):
        if v.m != m:
            raise ValueError(f"word carries m={v.m}, expected m={m}")
        return v
    return Word(m, tuple(v))


def state_term(sigma: Sequence[int], m: int, cyclic: bool, v: Optional[Sequence[int]] = None) -> QtaPoly:
    """Contribution of one sigma:

        q^{|sigma|-|v|} t^{dinv + e(v)} prod_i (1 + chi_i a t^{-d(sigma, i)})

    with chi_i = 1 for every i in the f-sum and chi_i = [i is a peak] in
    the g-sum.  The product is expanded one factor at a time; any monomial
    with a negative t-power raises NegativeExponentError.
    """
    s = tuple(sigma)
    if v is None:
        v = tuple(x if x < m else m for x in s)
    base_t = _dinv_cells(s, m) + _e_stat(v, m)
    qexp = sum(s) - sum(v)
    # (t-offset, a-degree) -> (count, witness subset)
    acc: Dict[Tuple[int, int], Tuple[int, Tuple[int, ...]]] = {(0, 0): (1, ())}
    for i in range(len(s)):
        if cyclic and not _is_peak(s, m, i):
            continue
        d = _d_stat(s, m, i)
        nxt: Dict[Tuple[int, int], Tuple[int, Tuple[int, ...]]] = {}
        for (off, k), (c, wit) in acc.items():
            old = nxt.get((off, k))
            nxt[(off, k)] = (c + (old[0] if old else 0), wit)
            key = (off - d, k + 1)
            old = nxt.get(key)
            nxt[key] = (c + (old[0] if old else 0), old[1] if old else wit + (i + 1,))
        acc = nxt
    terms = {}
    for (off, k), (c, wit) in acc.items():
        texp = base_t + off
        if texp < 0:
            raise NegativeExponentError(s, wit, texp)
        terms[(qexp, texp, k)] = c
    return QtaPoly(terms)


def _weak_compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_extensions(v: Word, excess: int) -> Iterator[ExtSeq]:
    """All sigma extending v with |sigma| - |v| == excess."""
    m = v.m
    free = [i for i, x in enumerate(v.letters) if x == m]
    for dist in _weak_compositions(excess, len(free)):
        s = list(v.letters)
        for pos, extra in zip(free, dist):
            s[pos] += extra
        yield ExtSeq(m, tuple(s))


def f_sum_truncated(m: int, v: Union[Word, Sequence[int]], depth: int) -> Dict[int, QtaPoly]:
    """q^0 .. q^depth coefficients (polynomials in t, a) of the f state sum."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    word = _word(m, v)
    out = {}
    for j in range(depth + 1):
        acc = ZERO
        for sigma in enumerate_extensions(word, j):
            acc = acc + state_term(sigma.entries, m, cyclic=False, v=word.letters)
        out[j] = acc.q_part(j)
    return out


def enumerate_seq_m(v: Union[Word, Sequence[int]], m: Optional[int] = None) -> Iterator[ExtSeq]:
    """Seq_m(v): extensions of v satisfying the cyclic m-Dyck condition.

    Depth-first around the cycle starting at the first frozen position
    (v_i < m), which pins one value; every later value is then capped by
    its predecessor plus m (plus one more across the wrap n -> 1), and the
    closing inequality back into the start is checked at the leaf.
    """
    if isinstance(v, Word):
        word = v
    elif m is None:
        raise ValueError("m is required when v is a plain sequence")
    else:
        word = Word(m, tuple(v))
    m = word.m
    letters = word.letters
    n = len(letters)
    if n == 0:
        yield ExtSeq(m, ())
        return
    start = next((i for i, x in enumerate(letters) if x < m), None)
    if start is None:
        raise InfiniteFamilyError(f"Seq_{m}(v) is infinite for the all-m word {letters}")
    order = [(start + s) % n for s in range(n)]
    sigma = [0] * n

    def cap(pos: int, prev_val: int) -> int:
        # bound on sigma[pos] given sigma[pos - 1] (cyclically)
        return prev_val + m + (1 if pos == 0 else 0)

    def rec(step: int) -> Iterator[ExtSeq]:
        if step == n:
            last = order[-1]
            if sigma[start] <= cap(start, sigma[last]):
                yield ExtSeq(m, tuple(sigma))
            return
        pos = order[step]
        hi = cap(pos, sigma[order[step - 1]])
        x = letters[pos]
        if x < m:
            if x <= hi:
                sigma[pos] = x
                yield from rec(step + 1)
            return
        for val in range(m, hi + 1):
            sigma[pos] = val
            yield from rec(step + 1)

    sigma[start] = letters[start]
    yield from rec(1)


def g_sum(m: int, v: Union[Word, Sequence[int]]) -> QSeries:
    """The g state sum, exact.  For v = m^n it is reduced to m^{n-1}(m-1) over (1 - q)."""
    word = _word(m, v)
    n = len(word)
    if n and word.is_all_m():
        return g_sum(m, (m,) * (n - 1) + (m - 1,)).over_one_minus_q()
    acc = ZERO
    for sigma in enumerate_seq_m(word):
        acc = acc + state_term(sigma.entries, m, cyclic=True, v=word.letters)
    return QSeries(acc)
