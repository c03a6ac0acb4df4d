"""Exact sparse polynomials in q, t, a and series with (1-q)-power denominators.

Both value types are immutable.  Coefficients are Python ints, so there is
no overflow no matter how large the homology dimensions get.
"""

from __future__ import annotations

import json
from math import comb
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

Exponent = Tuple[int, int, int]  # (q, t, a)


def _canonical_key(e: Exponent) -> Tuple[int, int, int]:
    return (e[2], e[1], e[0])


def _display_key(e: Exponent) -> Tuple[int, int, int]:
    # grouped by a-degree, then highest q first, then highest t first
    return (e[2], -e[0], -e[1])


class QtaPoly:
    """Polynomial in q, t, a with integer coefficients.

    ``terms`` maps exponent triples ``(i, j, k)`` (the monomial q^i t^j a^k)
    to nonzero ints.  Negative exponents are rejected.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Exponent, int], Iterable[Tuple[Exponent, int]], None] = None):
        acc: Dict[Exponent, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for exp, c in items:
                exp = tuple(int(x) for x in exp)
                if len(exp) != 3 or min(exp) < 0:
                    raise ValueError(f"invalid exponent triple {exp!r}")
                acc[exp] = acc.get(exp, 0) + int(c)
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Exponent, int]) -> "QtaPoly":
        # trusted constructor: exponents valid, no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, i: int = 0, j: int = 0, k: int = 0, coeff: int = 1) -> "QtaPoly":
        return cls({(i, j, k): coeff})

    @classmethod
    def constant(cls, c: int) -> "QtaPoly":
        return cls({(0, 0, 0): c})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponent, int]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exponent, int]]:
        """Terms in canonical order: lexicographic by (a, t, q) exponent."""
        for e in sorted(self._terms, key=_canonical_key):
            yield e, self._terms[e]

    def coefficient(self, i: int, j: int, k: int) -> int:
        return self._terms.get((i, j, k), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def degree(self, var: str) -> int:
        idx = "qta".index(var)
        return max((e[idx] for e in self._terms), default=-1)

    def a_part(self, k: int) -> "QtaPoly":
        """Coefficient of a^k, as a polynomial in q and t."""
        return QtaPoly._raw({(e[0], e[1], 0): c for e, c in self._terms.items() if e[2] == k})

    def q_part(self, i: int) -> "QtaPoly":
        """Coefficient of q^i, as a polynomial in t and a."""
        return QtaPoly._raw({(0, e[1], e[2]): c for e, c in self._terms.items() if e[0] == i})

    def at_a_zero(self) -> "QtaPoly":
        return self.a_part(0)

    def swap_qt(self) -> "QtaPoly":
        return QtaPoly._raw({(e[1], e[0], e[2]): c for e, c in self._terms.items()})

    def evaluate(self, q=None, t=None, a=None) -> "QtaPoly":
        """Substitute integer values for any subset of the variables."""
        vals = (q, t, a)
        out: Dict[Exponent, int] = {}
        for e, c in self._terms.items():
            new = list(e)
            for idx, val in enumerate(vals):
                if val is not None:
                    c *= val ** e[idx]
                    new[idx] = 0
            key = tuple(new)
            out[key] = out.get(key, 0) + c
        return QtaPoly(out)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "QtaPoly":
        if isinstance(other, QtaPoly):
            return other
        if isinstance(other, int):
            return QtaPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return QtaPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "QtaPoly":
        return QtaPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: Dict[Exponent, int] = {}
        for (i1, j1, k1), c1 in self._terms.items():
            for (i2, j2, k2), c2 in other._terms.items():
                e = (i1 + i2, j1 + j2, k1 + k2)
                out[e] = out.get(e, 0) + c1 * c2
        return QtaPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QtaPoly":
        if n < 0:
            raise ValueError("negative powers are not representable")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, i: int = 0, j: int = 0, k: int = 0) -> "QtaPoly":
        """Multiply by the monomial q^i t^j a^k; negative shifts must divide exactly."""
        out = {}
        for (x, y, z), c in self._terms.items():
            e = (x + i, y + j, z + k)
            if min(e) < 0:
                raise ValueError(f"monomial q^{-i} t^{-j} a^{-k} does not divide the polynomial")
            out[e] = c
        return QtaPoly._raw(out)

    def scale(self, c: int) -> "QtaPoly":
        if not c:
            return ZERO
        return QtaPoly._raw({e: c * v for e, v in self._terms.items()})

    # -- comparison / hashing --------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QtaPoly.constant(other)
        if not isinstance(other, QtaPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"QtaPoly({self})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- serialization ----------------------------------------------------

    def to_json_list(self) -> list:
        return [[e[0], e[1], e[2], str(c)] for e, c in self.items()]

    @classmethod
    def from_json_list(cls, data) -> "QtaPoly":
        terms = {}
        for row in data:
            if len(row) != 4:
                raise ValueError(f"expected [q, t, a, coeff] row, got {row!r}")
            i, j, k, c = row
            terms[(int(i), int(j), int(k))] = int(c)
        return cls(terms)


ZERO = QtaPoly()
ONE = QtaPoly.constant(1)
Q = QtaPoly.monomial(1, 0, 0)
T = QtaPoly.monomial(0, 1, 0)
A = QtaPoly.monomial(0, 0, 1)
ONE_MINUS_Q = QtaPoly({(0, 0, 0): 1, (1, 0, 0): -1})


def divide_by_one_minus_q(p: QtaPoly) -> Optional[QtaPoly]:
    """Exact quotient p / (1 - q), or None when (1 - q) does not divide p.

    Works slice by slice in the (t, a) exponents: the quotient of
    sum_i c_i q^i is sum_i (c_0 + ... + c_i) q^i, which terminates
    iff the c_i sum to zero.
    """
    slices: Dict[Tuple[int, int], Dict[int, int]] = {}
    for (i, j, k), c in p._terms.items():
        slices.setdefault((j, k), {})[i] = c
    out: Dict[Exponent, int] = {}
    for (j, k), coeffs in slices.items():
        if sum(coeffs.values()):
            return None
        running = 0
        for i in range(max(coeffs)):
            running += coeffs.get(i, 0)
            if running:
                out[(i, j, k)] = running
    return QtaPoly._raw(out)


class QSeries:
    """numerator / (1 - q)^denom_power, kept in lowest terms."""

    __slots__ = ("numerator", "denom_power")

    def __init__(self, numerator: Union[QtaPoly, int], denom_power: int = 0):
        if isinstance(numerator, int):
            numerator = QtaPoly.constant(numerator)
        if denom_power < 0:
            raise ValueError("denom_power must be >= 0")
        if numerator.is_zero():
            denom_power = 0
        while denom_power > 0:
            quotient = divide_by_one_minus_q(numerator)
            if quotient is None:
                break
            numerator, denom_power = quotient, denom_power - 1
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denom_power", denom_power)

    def __setattr__(self, name, value):
        raise AttributeError("QSeries is immutable")

    @staticmethod
    def _coerce(other) -> "QSeries":
        if isinstance(other, QSeries):
            return other
        if isinstance(other, (QtaPoly, int)):
            return QSeries(other)
        return NotImplemented

    def _lift(self, power: int) -> QtaPoly:
        return self.numerator * ONE_MINUS_Q ** (power - self.denom_power)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        r = max(self.denom_power, other.denom_power)
        return QSeries(self._lift(r) + other._lift(r), r)

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries(-self.numerator, self.denom_power)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QSeries(self.numerator * other.numerator, self.denom_power + other.denom_power)

    __rmul__ = __mul__

    def shift(self, i: int = 0, j: int = 0, k: int = 0) -> "QSeries":
        return QSeries(self.numerator.shift(i, j, k), self.denom_power)

    def over_one_minus_q(self, times: int = 1) -> "QSeries":
        """Divide by (1 - q)^times."""
        return QSeries(self.numerator, self.denom_power + times)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # canonical forms are unique, but cross-multiplying keeps this honest
        r = max(self.denom_power, other.denom_power)
        return self._lift(r) == other._lift(r)

    def __hash__(self) -> int:
        return hash((self.numerator, self.denom_power))

    def is_polynomial(self) -> bool:
        return self.denom_power == 0

    def a_part(self, k: int) -> "QSeries":
        return QSeries(self.numerator.a_part(k), self.denom_power)

    def at_a_zero(self) -> "QSeries":
        return self.a_part(0)

    def q_expansion(self, depth: int) -> Dict[int, QtaPoly]:
        return q_expansion(self, depth)

    def __repr__(self) -> str:
        return f"QSeries({format_series(self)})"

    def __str__(self) -> str:
        return format_series(self)

    def to_json_dict(self) -> dict:
        return {"numerator": self.numerator.to_json_list(), "one_minus_q_power": self.denom_power}

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "QSeries":
        return cls(QtaPoly.from_json_list(data["numerator"]), int(data["one_minus_q_power"]))


def q_expansion(s: Union[QSeries, QtaPoly], depth: int) -> Dict[int, QtaPoly]:
    """Coefficients of q^0 .. q^depth of the power series of ``s``.

    Each value is a polynomial in t and a (q-exponent 0).  The geometric
    expansion 1/(1-q)^r = sum_j C(j+r-1, r-1) q^j is applied termwise.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if isinstance(s, QtaPoly):
        s = QSeries(s)
    r = s.denom_power
    acc: Dict[int, Dict[Tuple[int, int, int], int]] = {d: {} for d in range(depth + 1)}
    for (i, j, k), c in s.numerator._terms.items():
        if i > depth:
            continue
        top = i if r == 0 else depth
        for d in range(i, top + 1):
            w = 1 if r == 0 else comb(d - i + r - 1, r - 1)
            slot = acc[d]
            key = (0, j, k)
            slot[key] = slot.get(key, 0) + c * w
    return {d: QtaPoly(terms) for d, terms in acc.items()}


# -- rendering ------------------------------------------------------------

def _monomial_text(e: Exponent) -> str:
    parts = []
    for name, power in zip("qta", e):
        if power == 1:
            parts.append(name)
        elif power > 1:
            parts.append(f"{name}^{power}")
    return " ".join(parts)


def _join_signed(chunks) -> str:
    out = ""
    for sign, body in chunks:
        if not out:
            out = ("-" if sign < 0 else "") + body
        else:
            out += (" - " if sign < 0 else " + ") + body
    return out or "0"


def format_poly(p: QtaPoly) -> str:
    """Plain-text rendering, e.g. ``q^3 + q^2 t + q t^2 + q t + t^3``."""
    chunks = []
    for e in sorted(p._terms, key=_display_key):
        c = p._terms[e]
        mono = _monomial_text(e)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag} {mono}"
        chunks.append((c, body))
    return _join_signed(chunks)


def format_series(s: QSeries) -> str:
    num = format_poly(s.numerator)
    if s.denom_power == 0:
        return num
    den = "(1 - q)" if s.denom_power == 1 else f"(1 - q)^{s.denom_power}"
    return f"({num})/{den}"


def _latex_qt(e: Exponent) -> str:
    parts = []
    for name, power in zip("qt", e[:2]):
        if power == 1:
            parts.append(name)
        elif power > 1:
            parts.append(f"{name}^{{{power}}}")
    return " ".join(parts)


def latex_poly(p: QtaPoly) -> str:
    """LaTeX grouped by a-degree: ``(q + t) + (1) a + ...``."""
    if p.is_zero():
        return "0"
    groups = []
    for k in range(p.degree("a") + 1):
        part = p.a_part(k)
        if part.is_zero():
            continue
        chunks = []
        for e in sorted(part._terms, key=_display_key):
            c = part._terms[e]
            mono = _latex_qt(e)
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag} {mono}")
            chunks.append((c, body))
        groups.append((k, _join_signed(chunks)))
    if len(groups) == 1 and groups[0][0] == 0:
        return groups[0][1]
    rendered = []
    for k, inner in groups:
        apow = "" if k == 0 else (" a" if k == 1 else f" a^{{{k}}}")
        rendered.append(f"\\left({inner}\\right){apow}")
    return " + ".join(rendered)


def latex_series(s: QSeries) -> str:
    num = latex_poly(s.numerator)
    if s.denom_power == 0:
        return num
    den = "1-q" if s.denom_power == 1 else f"(1-q)^{{{s.denom_power}}}"
    return f"\\frac{{{num}}}{{{den}}}"


def dumps_series(s: QSeries, **extra) -> str:
    data = dict(extra)
    data.update(s.to_json_dict())
    return json.dumps(data, sort_keys=False)
