"""m-Dyck sequences, parking functions, and the higher q,t-Catalan and Schroder sums.

A path in the n x nm rectangle is encoded by gamma_i = m*y_i - x_i taken at
the start of each North step; the valid sequences are exactly those with
gamma_1 = 0 and gamma_{i+1} <= gamma_i + m.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, Mapping, Optional, Sequence, Tuple

from .errors import NegativeExponentError
from .qtalg import QtaPoly
from .words import ExtSeq, d_stat, parse_int_list, peaks


@dataclass(frozen=True)
class DyckSeq:
    m: int
    gamma: Tuple[int, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        g = tuple(int(x) for x in self.gamma)
        object.__setattr__(self, "gamma", g)
        if g and g[0] != 0:
            raise ValueError(f"gamma_1 must be 0: {g}")
        for i in range(len(g) - 1):
            if not 0 <= g[i + 1] <= g[i] + self.m:
                raise ValueError(f"gamma_{i + 2}={g[i + 1]} breaks 0 <= gamma_{i + 2} <= gamma_{i + 1} + m")

    @property
    def n(self) -> int:
        return len(self.gamma)

    @property
    def area(self) -> int:
        return sum(self.gamma)

    def forced_ascents(self) -> Tuple[int, ...]:
        """1-based i with gamma_{i+1} = gamma_i + m (labels must rise there)."""
        g, m = self.gamma, self.m
        return tuple(i + 1 for i in range(len(g) - 1) if g[i + 1] == g[i] + m)

    def to_sigma(self) -> Tuple[int, ...]:
        """iota(gamma) = (m + gamma_2, ..., m + gamma_n, m - 1)."""
        return tuple(self.m + x for x in self.gamma[1:]) + (self.m - 1,)

    def __str__(self) -> str:
        return f"gamma={','.join(map(str, self.gamma))} m={self.m}"


@dataclass(frozen=True)
class ParkingFn:
    base: DyckSeq
    pi: Tuple[int, ...]

    def __post_init__(self):
        p = tuple(int(x) for x in self.pi)
        object.__setattr__(self, "pi", p)
        n = self.base.n
        if sorted(p) != list(range(1, n + 1)):
            raise ValueError(f"pi={p} is not a permutation of 1..{n}")
        for i in self.base.forced_ascents():
            if p[i - 1] > p[i]:
                raise ValueError(f"forced ascent at {i} requires pi_{i} < pi_{i + 1}")

    def __str__(self) -> str:
        return f"{self.base} pi={','.join(map(str, self.pi))}"


# -- paths -------------------------------------------------------------------

def gamma_of_path(path: str, m: int) -> DyckSeq:
    """Read a word in N/E steps; rejects steps that cross below x = m*y."""
    x = y = 0
    gamma = []
    for pos, step in enumerate(path.upper(), start=1):
        if step == "N":
            gamma.append(m * y - x)
            y += 1
        elif step == "E":
            x += 1
            if x > m * y:
                raise ValueError(f"step {pos} (E to x={x}, y={y}) goes below the diagonal")
        else:
            raise ValueError(f"step {pos}: unknown step {step!r}")
    if x != m * y:
        raise ValueError(f"path ends at ({x}, {y}), not at ({m * y}, {y})")
    return DyckSeq(m, tuple(gamma))


def path_of_gamma(gamma: DyckSeq) -> str:
    m = gamma.m
    out = []
    x = 0
    for i, g in enumerate(gamma.gamma):
        target = m * i - g
        out.append("E" * (target - x))
        out.append("N")
        x = target
    out.append("E" * (m * gamma.n - x))
    return "".join(out)


def enumerate_dyck(
    n: int,
    m: int,
    pinned: Optional[Mapping[int, int]] = None,
    lower: Optional[Mapping[int, int]] = None,
) -> Iterator[DyckSeq]:
    """All m-Dyck sequences of length n, optionally with gamma_i fixed or bounded below (1-based keys)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    pinned = dict(pinned or {})
    lower = dict(lower or {})
    gamma = [0] * n

    def admissible(i: int, val: int) -> bool:
        key = i + 1
        if key in pinned and pinned[key] != val:
            return False
        return val >= lower.get(key, 0)

    def rec(i: int) -> Iterator[DyckSeq]:
        if i == n:
            yield DyckSeq(m, tuple(gamma))
            return
        for val in range(gamma[i - 1] + m + 1):
            if admissible(i, val):
                gamma[i] = val
                yield from rec(i + 1)

    if admissible(0, 0):
        yield from rec(1)


# -- parking functions ---------------------------------------------------------

def parking_functions(gamma: DyckSeq) -> Iterator[ParkingFn]:
    forced = [i - 1 for i in gamma.forced_ascents()]
    for p in itertools.permutations(range(1, gamma.n + 1)):
        if all(p[i] < p[i + 1] for i in forced):
            yield ParkingFn(gamma, p)


def reading_order(gamma: DyckSeq) -> Tuple[int, ...]:
    """0-based indices in reading order: highest row first, right to left within a row."""
    g = gamma.gamma
    return tuple(sorted(range(len(g)), key=lambda i: (-g[i], -i)))


def reading_word(p: ParkingFn) -> Tuple[int, ...]:
    return tuple(p.pi[i] for i in reading_order(p.base))


def _contains_subsequence(word: Sequence[int], sub: Sequence[int]) -> bool:
    it = iter(word)
    return all(any(x == y for y in it) for x in sub)


def pf_k(gamma: DyckSeq, k: int) -> Iterator[ParkingFn]:
    """Parking functions whose reading word contains (n-k, ..., 1) and (n-k+1, ..., n) as subsequences."""
    n = gamma.n
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in 0..{n}")
    down = tuple(range(n - k, 0, -1))
    up = tuple(range(n - k + 1, n + 1))
    for p in parking_functions(gamma):
        w = reading_word(p)
        if _contains_subsequence(w, down) and _contains_subsequence(w, up):
            yield p


def descent_set(p: ParkingFn) -> FrozenSet[int]:
    g, pi = p.base.gamma, p.pi
    where = {label: idx for idx, label in enumerate(pi)}
    out = set()
    for a in range(1, len(pi)):
        i, j = where[a], where[a + 1]
        if g[i] < g[j] or (g[i] == g[j] and i < j):
            out.add(a)
    return frozenset(out)


def m_expansion(p: ParkingFn) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """(m * gamma, m * pi): each gamma_i becomes gamma_i, ..., gamma_i + m - 1 and each label repeats m times."""
    m = p.base.m
    g = tuple(x + k for x in p.base.gamma for k in range(m))
    labels = tuple(x for x in p.pi for _ in range(m))
    return g, labels


def dinv1(gamma: Sequence[int], pi: Sequence[int]) -> int:
    n = len(gamma)
    count = 0
    for i in range(n):
        for j in range(n):
            if pi[i] >= pi[j]:
                continue
            if (i < j and gamma[i] == gamma[j]) or (j < i and gamma[j] - 1 == gamma[i]):
                count += 1
    return count


def dinv_pf(p: ParkingFn) -> int:
    return dinv1(*m_expansion(p))


def decreasing_reading_pf(gamma: DyckSeq) -> ParkingFn:
    """The parking function with reading word (n, n-1, ..., 1)."""
    pi = [0] * gamma.n
    for label, idx in zip(range(gamma.n, 0, -1), reading_order(gamma)):
        pi[idx] = label
    return ParkingFn(gamma, tuple(pi))


def dinv_gamma(gamma: DyckSeq) -> int:
    return dinv_pf(decreasing_reading_pf(gamma))


def dinv_gamma_attacks(gamma: DyckSeq) -> int:
    """Same number via attacking pairs: triples (i, j, l) with i attacking j and
    gamma_i - l <= gamma'_j <= gamma_i - l + m - 1 for l in 0..m-1."""
    g, m = gamma.gamma, gamma.m
    n = len(g)
    count = 0
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if i < j and g[i] <= g[j]:
                bar = g[j]
            elif j < i and g[i] <= g[j] - 1:
                bar = g[j] - 1
            else:
                continue
            count += sum(1 for l in range(m) if g[i] - l <= bar <= g[i] - l + m - 1)
    return count


# -- Catalan / Schroder --------------------------------------------------------

def catalan(n: int, m: int) -> QtaPoly:
    """Higher q,t-Catalan: sum over Dyck_m(n) of q^area t^dinv."""
    acc: Dict[Tuple[int, int, int], int] = {}
    for g in enumerate_dyck(n, m):
        key = (g.area, dinv_gamma(g), 0)
        acc[key] = acc.get(key, 0) + 1
    return QtaPoly(acc)


def schroder(n: int, m: int, k: int) -> QtaPoly:
    """Higher q,t-Schroder: sum over gamma and PF_k(gamma) of q^area t^dinv(gamma, pi)."""
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in 0..{n}")
    acc: Dict[Tuple[int, int, int], int] = {}
    for g in enumerate_dyck(n, m):
        for p in pf_k(g, k):
            key = (g.area, dinv_pf(p), 0)
            acc[key] = acc.get(key, 0) + 1
    return QtaPoly(acc)


def schroder_by_peaks(n: int, m: int, k: int) -> QtaPoly:
    """Schroder via peak subsets of sigma = iota(gamma):

        sum_gamma sum_{S subset peaks(sigma), |S| = k} q^area t^{dinv(gamma) - sum_S d(sigma, i)}
    """
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in 0..{n}")
    acc: Dict[Tuple[int, int, int], int] = {}
    for g in enumerate_dyck(n, m):
        sigma = ExtSeq(m, g.to_sigma())
        base = dinv_gamma(g)
        ds = {i: d_stat(sigma, i) for i in peaks(sigma)}
        for subset in itertools.combinations(sorted(ds), k):
            texp = base - sum(ds[i] for i in subset)
            if texp < 0:
                raise NegativeExponentError(sigma.entries, subset, texp)
            key = (g.area, texp, 0)
            acc[key] = acc.get(key, 0) + 1
    return QtaPoly(acc)


# -- text format -------------------------------------------------------------

_PF_RE = re.compile(r"^\s*gamma=([\d,]*)\s+m=(\d+)(?:\s+pi=([\d,]*))?\s*$")


def parse_dyck(text: str):
    """Parse ``"gamma=0,2,3,1 m=2"`` (DyckSeq) or ``"gamma=... m=2 pi=2,5,3,4"`` (ParkingFn)."""
    match = _PF_RE.match(text)
    if not match:
        raise ValueError(f"expected 'gamma=<list> m=<int> [pi=<list>]', got {text!r}")
    gamma = DyckSeq(int(match.group(2)), parse_int_list(match.group(1)))
    if match.group(3) is None:
        return gamma
    return ParkingFn(gamma, parse_int_list(match.group(3)))
