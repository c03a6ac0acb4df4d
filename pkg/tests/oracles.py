"""Independent reference computations, written with sympy and brute force.

None of this imports the package's recursion, sums or symfunc code.  Run
``python3 tests/oracles.py`` to regenerate fixtures/frozen.json; the tests
compare the package against the frozen values and check that the oracle
still reproduces them.
"""

from __future__ import annotations

import itertools
import json
from functools import lru_cache
from math import comb
from pathlib import Path

import sympy as sp

q, t, a = sp.symbols("q t a")
FROZEN = Path(__file__).with_name("fixtures") / "frozen.json"


def _below(xs, bound):
    return sum(1 for x in xs if x < bound)


@lru_cache(maxsize=None)
def f_ref(m: int, v: tuple):
    if not v:
        return sp.Integer(1)
    k, w = v[0], v[1:]
    if k == 0:
        return sp.factor((t ** _below(w, m) + a) * f_ref(m, w))
    if k < m:
        return sp.factor(t ** _below(w, k) * f_ref(m, w + (k - 1,)))
    if all(x == m for x in w):
        # f = f_{w(m-1)} + q f  solved for f
        return sp.factor(f_ref(m, w + (m - 1,)) / (1 - q))
    return sp.factor(f_ref(m, w + (m - 1,)) + q * f_ref(m, w + (m,)))


@lru_cache(maxsize=None)
def g_ref(m: int, v: tuple):
    if not v:
        return sp.Integer(1)
    if v == (0,):
        return 1 + a
    k, w = v[0], v[1:]
    if k == 0:
        if w[0] < m:
            return sp.factor((t ** _below(w, m) + a) * g_ref(m, w))
        u = w[1:]
        return sp.factor(t ** _below(u, m) * g_ref(m, u + (m - 1,)))
    if k < m:
        return sp.factor(t ** _below(w, k) * g_ref(m, w + (k - 1,)))
    if all(x == m for x in w):
        return sp.factor(g_ref(m, w + (m - 1,)) / (1 - q))
    return sp.factor(g_ref(m, w + (m - 1,)) + q * g_ref(m, w + (m,)))


def seq_m_bruteforce(m: int, v: tuple):
    """Cyclic m-Dyck extensions of v, searched in the box max(v) + n*m + 1."""
    n = len(v)
    bound = max(v) + n * m + 1
    choices = [range(x, x + 1) if x < m else range(m, bound + 1) for x in v]
    out = []
    for s in itertools.product(*choices):
        if all(s[i + 1] <= s[i] + m for i in range(n - 1)) and s[0] - 1 <= s[-1] + m:
            out.append(s)
    return sorted(out)


def fuss_catalan(n: int, m: int) -> int:
    return comb((m + 1) * n, n) // (m * n + 1)


def dyck_count_bruteforce(n: int, m: int) -> int:
    """Lattice paths N/E in the n x nm rectangle staying weakly above x = m y."""
    count = 0
    for north in itertools.combinations(range(n * m + n), n):
        x = y = 0
        ok = True
        north_set = set(north)
        for step in range(n * m + n):
            if step in north_set:
                y += 1
            else:
                x += 1
                if x > m * y:
                    ok = False
                    break
        count += ok
    return count


# hand-checked values (trefoil, Hopf link, unknot) and the classical q,t-Catalan C_4
NAMED = {
    "unknot": "(1 + a)/(1 - q)",
    "trefoil": "(1 + a)*(q + t + a)/(1 - q)",
    "hopf": "(1 + a)*(q + t + a - q*t)/(1 - q)**2",
    "catalan_2_1": "q + t",
    "catalan_3_1": "q**3 + q**2*t + q*t**2 + q*t + t**3",
    "catalan_4_1": (
        "q**6 + q**5*t + q**4*t**2 + q**3*t**3 + q**2*t**4 + q*t**5 + t**6"
        " + q**4*t + q**3*t**2 + q**2*t**3 + q*t**4 + q**3*t + q**2*t**2 + q*t**3"
    ),
    "catalan_2_2": "q**2 + q*t + t**2",
    "schroder_2_1_1": "1 + q + t",
}

FROZEN_WORDS = [
    (1, (0,)), (1, (1,)), (1, (1, 0)), (1, (0, 1)), (1, (0, 0)), (1, (1, 1)),
    (1, (1, 1, 0)), (1, (1, 0, 1)), (1, (0, 1, 1)), (1, (1, 1, 1)), (1, (1, 1, 1, 0)),
    (2, (1,)), (2, (2, 1)), (2, (1, 2)), (2, (0, 2)), (2, (2, 2)), (2, (2, 0, 1)), (2, (2, 2, 1)),
    (3, (2, 3)), (3, (3, 3, 2)),
]


def build_frozen() -> dict:
    out = {"f": {}, "g": {}, "seq_m": {}, "dyck_counts": {}}
    for m, v in FROZEN_WORDS:
        key = f"{m}|{','.join(map(str, v))}"
        out["f"][key] = str(sp.factor(f_ref(m, v)))
        if not all(x == m for x in v):
            out["g"][key] = str(sp.factor(g_ref(m, v)))
            out["seq_m"][key] = [list(s) for s in seq_m_bruteforce(m, v)]
        else:
            out["g"][key] = str(sp.factor(g_ref(m, v)))
    for m in (1, 2):
        for n in range(1, 5):
            out["dyck_counts"][f"{n}|{m}"] = dyck_count_bruteforce(n, m)
    out["named"] = NAMED
    return out


def load_frozen() -> dict:
    return json.loads(FROZEN.read_text())


if __name__ == "__main__":
    FROZEN.parent.mkdir(exist_ok=True)
    FROZEN.write_text(json.dumps(build_frozen(), indent=1, sort_keys=True) + "\n")
    print(f"wrote {FROZEN}")
