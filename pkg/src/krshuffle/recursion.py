"""Memoized evaluation of f_v^(m) and g_v^(m) from their defining recursions.

Each rule strictly lowers ``recursion_measure`` except at the all-m word,
where the q-rule refers back to itself; that case is solved algebraically
by dividing by (1 - q).  Evaluation uses an explicit stack, so long
dependency chains never hit the interpreter's recursion limit.
"""

from __future__ import annotations

import json
import threading
from pathlib import Path
from typing import Callable, Dict, List, Sequence, Tuple, Union

from .errors import ConsistencyError
from .qtalg import A, ONE, QSeries, QtaPoly
from .words import Word, recursion_measure

Key = Tuple[str, int, Tuple[int, ...]]

_cache: Dict[Key, QSeries] = {}
_lock = threading.Lock()


def clear_cache() -> None:
    with _lock:
        _cache.clear()


def cache_size() -> int:
    return len(_cache)


def _t_plus_a(power: int) -> QSeries:
    return QSeries(QtaPoly.monomial(0, power, 0) + A)


def _count_below(letters: Sequence[int], bound: int) -> int:
    return sum(1 for x in letters if x < bound)


# A rule returns (dependencies, combine); combine receives dependency values in order.
Rule = Tuple[List[Tuple[int, ...]], Callable[[List[QSeries]], QSeries]]


def _f_rule(v: Tuple[int, ...], m: int) -> Rule:
    if not v:
        return [], lambda _: QSeries(ONE)
    k, w = v[0], v[1:]
    if k == 0:
        c = _count_below(w, m)
        return [w], lambda d: _t_plus_a(c) * d[0]
    if k < m:
        c = _count_below(w, k)
        return [w + (k - 1,)], lambda d: d[0].shift(0, c, 0)
    if all(x == m for x in w):
        return [w + (m - 1,)], lambda d: d[0].over_one_minus_q()
    return [w + (m - 1,), w + (m,)], lambda d: d[0] + d[1].shift(1, 0, 0)


def _g_rule(v: Tuple[int, ...], m: int) -> Rule:
    if not v:
        return [], lambda _: QSeries(ONE)
    if v == (0,):
        return [], lambda _: QSeries(ONE + A)
    k, w = v[0], v[1:]
    if k == 0:
        if w[0] < m:
            c = _count_below(w, m)
            return [w], lambda d: _t_plus_a(c) * d[0]
        u = w[1:]
        c = _count_below(u, m)
        return [u + (m - 1,)], lambda d: d[0].shift(0, c, 0)
    if k < m:
        c = _count_below(w, k)
        return [w + (k - 1,)], lambda d: d[0].shift(0, c, 0)
    if all(x == m for x in w):
        return [w + (m - 1,)], lambda d: d[0].over_one_minus_q()
    return [w + (m - 1,), w + (m,)], lambda d: d[0] + d[1].shift(1, 0, 0)


_RULES = {"f": _f_rule, "g": _g_rule}


def _check_step(parent: Tuple[int, ...], child: Tuple[int, ...], m: int) -> None:
    # the all-m word is the single allowed fixpoint; its rule already
    # bypasses the self-reference, so every edge here must descend
    if recursion_measure(Word(m, child)) >= recursion_measure(Word(m, parent)):
        raise ConsistencyError(f"recursion step {parent} -> {child} does not descend")


def _evaluate(flavor: str, m: int, v: Tuple[int, ...]) -> QSeries:
    rule = _RULES[flavor]
    root = (flavor, m, v)
    hit = _cache.get(root)
    if hit is not None:
        return hit
    stack = [v]
    pending: Dict[Tuple[int, ...], Rule] = {}
    while stack:
        word = stack[-1]
        key = (flavor, m, word)
        if key in _cache:
            stack.pop()
            continue
        if word not in pending:
            deps, combine = rule(word, m)
            for dep in deps:
                _check_step(word, dep, m)
            pending[word] = (deps, combine)
        deps, combine = pending[word]
        missing = [dep for dep in deps if (flavor, m, dep) not in _cache]
        if missing:
            stack.extend(missing)
            continue
        value = combine([_cache[(flavor, m, dep)] for dep in deps])
        with _lock:
            _cache.setdefault(key, value)
        stack.pop()
    return _cache[root]


def _as_word(m: int, v: Union[Word, Sequence[int]]) -> Word:
    if isinstance(v, Word):
        if v.m != m:
            raise ValueError(f"word carries m={v.m}, expected m={m}")
        return v
    return Word(m, tuple(v))


def f_series(m: int, v: Union[Word, Sequence[int]]) -> QSeries:
    """KR series of the complex C_v^(m), by the L0-L3 recursion."""
    word = _as_word(m, v)
    return _evaluate("f", m, word.letters)


def g_series(m: int, v: Union[Word, Sequence[int]]) -> QSeries:
    """KR series of X C_v^(m), by the K0-K3 recursion."""
    word = _as_word(m, v)
    return _evaluate("g", m, word.letters)


def torus_link_series(n: int, m: int, r: int) -> QSeries:
    """KR series of the torus link T(n, nm + r) for r in {-1, 0, 1}."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    if r == 0:
        return f_series(m, (m,) * n)
    if r == 1:
        return g_series(m, (m,) * n)
    if r == -1:
        return g_series(m, (m - 1,) + (m,) * (n - 1)).over_one_minus_q()
    raise ValueError(f"r must be -1, 0 or 1 (got {r}); general T(n, nm+r) is not supported")


def special_braid_word(i: int, k: int, m: int, n: int) -> Word:
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    if not 1 <= i <= n:
        raise ValueError(f"i must lie in 1..{n}")
    if not 0 <= k <= m:
        raise ValueError(f"k must lie in 0..{m}")
    return Word(m, (m,) * (n - i) + (k,) + (m,) * (i - 1))


def special_braid_series(i: int, k: int, m: int, n: int, with_coxeter: bool = False) -> QSeries:
    """Series of beta_{i,k,m,n} (or X_n beta_{i,k,m,n} when ``with_coxeter``)."""
    word = special_braid_word(i, k, m, n)
    base = g_series(m, word) if with_coxeter else f_series(m, word)
    return base.over_one_minus_q()


def jucys_murphy_series(i: int, m: int, n: int) -> QSeries:
    """Series of J_i^{-1} FT_n^m."""
    return special_braid_series(i, m - 1, m, n, with_coxeter=False)


# -- cache persistence --------------------------------------------------------

def _key_str(key: Key) -> str:
    flavor, m, v = key
    return f"{flavor}|{m}|" + ",".join(map(str, v))


def _key_parse(text: str) -> Key:
    flavor, m, letters = text.split("|")
    return flavor, int(m), tuple(int(x) for x in letters.split(",")) if letters else ()


def save_cache(path: Union[str, Path]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    data = {_key_str(k): s.to_json_dict() for k, s in sorted(_cache.items())}
    path.write_text(json.dumps(data, indent=0, sort_keys=True))


def load_cache(path: Union[str, Path]) -> int:
    """Merge a saved memo into the live cache; returns the number of entries read."""
    path = Path(path)
    if not path.exists():
        return 0
    data = json.loads(path.read_text())
    with _lock:
        for text, value in data.items():
            _cache.setdefault(_key_parse(text), QSeries.from_json_dict(value))
    return len(data)
