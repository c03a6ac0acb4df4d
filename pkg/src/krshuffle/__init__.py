"""Khovanov-Rozansky series of torus links via recursions, state sums, and the shuffle side."""

from .dyck import DyckSeq, ParkingFn, catalan, enumerate_dyck, schroder
from .errors import ConsistencyError, InfiniteFamilyError, NegativeExponentError
from .qtalg import QSeries, QtaPoly, q_expansion
from .recursion import f_series, g_series, special_braid_series, torus_link_series
from .sums import f_sum_truncated, g_sum
from .symfunc import corrections, pair_hke_combinatorial, pair_hke_generic, restricted_shuffle_series, shuffle_pairing
from .words import ExtSeq, Word

__all__ = [
    "ConsistencyError",
    "DyckSeq",
    "ExtSeq",
    "InfiniteFamilyError",
    "NegativeExponentError",
    "ParkingFn",
    "QSeries",
    "QtaPoly",
    "Word",
    "catalan",
    "corrections",
    "enumerate_dyck",
    "f_series",
    "f_sum_truncated",
    "g_series",
    "g_sum",
    "pair_hke_combinatorial",
    "pair_hke_generic",
    "q_expansion",
    "restricted_shuffle_series",
    "schroder",
    "shuffle_pairing",
    "special_braid_series",
    "torus_link_series",
]
