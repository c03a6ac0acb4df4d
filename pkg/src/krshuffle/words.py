"""Words over {0..m}, their nonnegative extensions, and the statistics on them.

Indices in the public API are 1-based, matching how positions are usually
quoted for these sequences; internally everything is a plain tuple.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import FrozenSet, Sequence, Tuple


@dataclass(frozen=True)
class Word:
    """A sequence v in {0, 1, ..., m}^n."""

    m: int
    letters: Tuple[int, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if not 0 <= x <= self.m:
                raise ValueError(f"letter {x} outside [0, {self.m}]")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    @property
    def weight(self) -> int:
        return sum(self.letters)

    def is_all_m(self) -> bool:
        return all(x == self.m for x in self.letters)

    def __str__(self) -> str:
        return format_seq(self.m, self.letters, "v")


@dataclass(frozen=True)
class ExtSeq:
    """A nonnegative integer sequence sigma, read against the bound m."""

    m: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if any(x < 0 for x in self.entries):
            raise ValueError(f"entries must be >= 0: {self.entries}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def size(self) -> int:
        return sum(self.entries)

    def __str__(self) -> str:
        return format_seq(self.m, self.entries, "sigma")


# -- tuple-level kernels (hot paths) ----------------------------------------

def _dinv_cells(s: Sequence[int], m: int) -> int:
    n = len(s)
    total = 0
    for i in range(n):
        si = s[i]
        for h in range(si + 1):
            leg = si - h
            if leg > m - 1:
                continue
            # same row, strictly right
            for j in range(i + 1, n):
                lj = s[j] - h
                if leg <= lj <= m - 1:
                    total += 1
            # row above, strictly left
            for j in range(i):
                lj = s[j] - h - 1
                if leg <= lj <= m - 1:
                    total += 1
    return total


def _d_stat(s: Sequence[int], m: int, i: int) -> int:
    # i is 0-based here
    si = s[i]
    hi = si + m - 1
    count = 0
    for j, sj in enumerate(s):
        if j == i:
            continue
        b = sj if j > i else sj - 1
        if si <= b <= hi:
            count += 1
    return count


def _e_stat(v: Sequence[int], m: int) -> int:
    n = len(v)
    return sum(1 for i in range(n) for j in range(i + 1, n) if v[j] < v[i] <= m - 1)


def _is_peak(s: Sequence[int], m: int, i: int) -> bool:
    n = len(s)
    if i < n - 1:
        return s[i + 1] < s[i] + m
    return s[0] - 1 < s[n - 1] + m


# -- public operations ------------------------------------------------------

def truncate(sigma: ExtSeq) -> Word:
    m = sigma.m
    return Word(m, tuple(x if x < m else m for x in sigma.entries))


def extends(sigma: ExtSeq, v: Word) -> bool:
    return sigma.m == v.m and truncate(sigma).letters == v.letters


def rotate(sigma: ExtSeq) -> ExtSeq:
    """(s1, ..., sn) -> (s2, ..., sn, s1 - 1); the first entry is dropped when s1 == 0."""
    s = sigma.entries
    if not s:
        raise ValueError("empty sequence")
    if s[0] > 0:
        return ExtSeq(sigma.m, s[1:] + (s[0] - 1,))
    return ExtSeq(sigma.m, s[1:])


def rotate_word(v: Word) -> Word:
    s = v.letters
    if not s:
        raise ValueError("empty sequence")
    if s[0] > 0:
        return Word(v.m, s[1:] + (s[0] - 1,))
    return Word(v.m, s[1:])


def e_stat(v: Word) -> int:
    """Number of pairs i < j with v_j < v_i <= m - 1."""
    return _e_stat(v.letters, v.m)


def dinv(sigma: ExtSeq) -> int:
    """Cell-diagram dinv.

    Column i holds sigma_i cells above one bottom cell.  A pair (c, d)
    counts when d lies in range(c) -- strictly right of c in its row, or
    strictly left of c in the row above -- and leg(c) <= leg(d) <= m - 1.
    """
    return _dinv_cells(sigma.entries, sigma.m)


def dinv_triples(sigma: ExtSeq) -> int:
    """dinv as a count of triples (i, j, k), one k per admissible leg of column i."""
    s, m = sigma.entries, sigma.m
    n = len(s)
    total = 0
    for i in range(n):
        kmax = min(m - 1, s[i])
        for j in range(n):
            if j == i:
                continue
            b = s[j] if j > i else s[j] - 1
            for k in range(kmax + 1):
                if s[i] <= b <= s[i] + m - 1 - k:
                    total += 1
    return total


def dinv_at_cell(sigma: ExtSeq, column: int, leg: int) -> int:
    """Number of d in range(c) with leg(c) <= leg(d) <= m-1, for the cell c of given leg in a column (1-based)."""
    s, m = sigma.entries, sigma.m
    i = column - 1
    if not 0 <= i < len(s) or not 0 <= leg <= s[i]:
        raise IndexError("no such cell")
    h = s[i] - leg
    count = 0
    for j in range(len(s)):
        if j > i and s[j] >= h and leg <= s[j] - h <= m - 1:
            count += 1
        elif j < i and s[j] >= h + 1 and leg <= s[j] - h - 1 <= m - 1:
            count += 1
    return count


def d_stat(sigma: ExtSeq, i: int) -> int:
    """#{j != i : sigma_i <= sigma'_j <= sigma_i + m - 1}, sigma'_j = sigma_j - [j < i]; i is 1-based."""
    if not 1 <= i <= len(sigma):
        raise IndexError(f"index {i} out of range 1..{len(sigma)}")
    return _d_stat(sigma.entries, sigma.m, i - 1)


def rotation_defect(sigma: ExtSeq) -> int:
    """dinv(sigma) - dinv(rotate(sigma)): the first-column bottom cell's pairs."""
    s, m = sigma.entries, sigma.m
    if not s:
        raise ValueError("empty sequence")
    return sum(1 for x in s[1:] if s[0] <= x <= m - 1)


def is_cyclic_mdyck(sigma: ExtSeq) -> bool:
    s, m = sigma.entries, sigma.m
    if not s:
        return True
    if any(s[i + 1] > s[i] + m for i in range(len(s) - 1)):
        return False
    return s[0] - 1 <= s[-1] + m


def peaks(sigma: ExtSeq) -> FrozenSet[int]:
    """1-based indices whose cyclic m-Dyck inequality is strict."""
    s, m = sigma.entries, sigma.m
    return frozenset(i + 1 for i in range(len(s)) if _is_peak(s, m, i))


def recursion_measure(v: Word) -> Tuple[int, int, int]:
    s, m = v.letters, v.m
    inversions = 0
    seen_m = 0
    for x in s:
        if x == m:
            seen_m += 1
        else:
            inversions += seen_m
    return (len(s), sum(s), inversions)


# -- text format ------------------------------------------------------------

def format_seq(m: int, values: Sequence[int], name: str = "v") -> str:
    return f"m={m} {name}=" + ",".join(str(x) for x in values)


def parse_int_list(text: str) -> Tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"not a comma-separated integer list: {text!r}") from None


_SEQ_RE = re.compile(r"^\s*m=(\d+)\s+(v|sigma)=([\d,\s]*)$")


def parse_word(text: str) -> Word:
    """Parse ``"m=2 v=2,1,0"``."""
    match = _SEQ_RE.match(text)
    if not match or match.group(2) != "v":
        raise ValueError(f"expected 'm=<int> v=<list>', got {text!r}")
    return Word(int(match.group(1)), parse_int_list(match.group(3)))


def parse_extseq(text: str) -> ExtSeq:
    """Parse ``"m=3 sigma=1,5,1"``."""
    match = _SEQ_RE.match(text)
    if not match or match.group(2) != "sigma":
        raise ValueError(f"expected 'm=<int> sigma=<list>', got {text!r}")
    return ExtSeq(int(match.group(1)), parse_int_list(match.group(3)))
