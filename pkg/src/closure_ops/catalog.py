"""Every family member constructible in a window, in canonical order.

Order matters: when several ops have the same window table, the first one listed
is the canonical representative. Identity comes first, unbounded-looking members
before bounded ones, smaller parameters before larger.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import chain, combinations, product

from .axioms import to_raw
from .ideals import UsageError, Window
from .ops import (
    BoundedBox,
    BoundedPoint,
    DedekindBox,
    DvrF,
    DvrG,
    Identity,
    IntSingle,
    IntUnbounded,
    JumpG,
    ded_identity,
)


def subsets(field, nonempty=False):
    items = sorted(field)
    start = 1 if nonempty else 0
    return [frozenset(c) for r in range(start, len(items) + 1) for c in combinations(items, r)]


def dvr_semiprime(w: Window) -> list:
    D = w.max_deg
    return [Identity("dvr")] + [DvrF(m) for m in range(D + 1)] + [DvrG(m) for m in range(D + 1)]


def ded_semiprime(w: Window) -> list:
    D = w.max_deg
    vals = [None] + list(range(D + 1))
    out = [ded_identity(w.n_primes)]
    for bounds in product(vals, repeat=w.n_primes):
        if all(b is None for b in bounds):
            continue
        out.append(DedekindBox(bounds, "closed"))
    for bounds in product(range(D + 1), repeat=w.n_primes):
        out.append(DedekindBox(bounds, "box"))
    return out


# Parameters run a little past the window: an op whose floor lies beyond degree D
# can still have a table inside the window (e.g. M(D) -> M(D-1)).
_OVERHANG = 2


def cusp_int(w: Window) -> list:
    return [IntUnbounded(i, S, T) for i in range(2, w.max_deg + 1)
            for S in subsets(w.field, nonempty=True) for T in subsets(w.field)]


def cusp_points(w: Window, zero: str) -> list:
    ops = (BoundedPoint(m, a, zero) for m in range(2, w.max_deg + _OVERHANG + 1) for a in range(w.p))
    return [op for op in ops if _valid(op, w)]


def _valid(op, w):
    """Parameters admissible and every image of a window ideal inside the window."""
    try:
        to_raw(op, w)
    except UsageError:
        return False
    return True


def cusp_boxes(w: Window, zero: str, exceptional: bool) -> list:
    D, K = w.max_deg, w.field
    out = []
    if not exceptional:
        out.append(BoundedBox(1, K, K, 2, zero))
    for n in range(2, D + 1):
        for m in range(n + (2 if exceptional else 1), D + _OVERHANG + 1):
            for S in subsets(K, nonempty=True):
                for T in subsets(K):
                    op = BoundedBox(n, S, T, m, zero, exceptional)
                    if _valid(op, w):
                        out.append(op)
    return out


def cusp_semiprime(w: Window) -> list:
    return list(chain(
        [Identity("cusp")],
        cusp_int(w),
        cusp_points(w, "closed"),
        cusp_boxes(w, "closed", False),
        cusp_boxes(w, "closed", True),
        cusp_points(w, "target"),
        cusp_boxes(w, "target", False),
        cusp_boxes(w, "target", True),
    ))


def semiprime_catalog(w: Window) -> list:
    """All semiprime family members of the window's ring, canonical ones first."""
    return {"dvr": dvr_semiprime, "ded": ded_semiprime, "cusp": cusp_semiprime}[w.family](w)


def closure_only_catalog(w: Window) -> list:
    """Family members that are closure operations but not semiprime."""
    if w.family == "dvr":
        return [JumpG(n) for n in range(2, w.max_deg + 1)]
    if w.family == "cusp":
        # the failing product P(2,b) * P(i,a) needs degree i+2 inside the window
        return [IntSingle(i) for i in range(2, w.max_deg - 1)]
    return []


def identity(w: Window):
    return ded_identity(w.n_primes) if w.family == "ded" else Identity(w.family)


def is_m0(op) -> bool:
    """Member of the zero-closed monoid (non-exceptional)."""
    if getattr(op, "exceptional", False):
        return False
    return getattr(op, "zero", "closed") == "closed" and not isinstance(op, DvrG)


def is_mf(op) -> bool:
    """Member of the zero-moving set, plus the identity."""
    if getattr(op, "exceptional", False):
        return False
    if isinstance(op, Identity) or (isinstance(op, DedekindBox) and op.is_identity):
        return True
    return isinstance(op, DvrG) or getattr(op, "zero", "closed") in ("box", "target")


def floor_in_window(op, w: Window) -> bool:
    """Bounded cusp op whose absorbing ideal is a window ideal (not an overhang alias)."""
    return isinstance(op, (BoundedPoint, BoundedBox)) and op.m <= w.max_deg


class Catalog:
    """Window tables of every semiprime family member, grouped by table."""

    def __init__(self, w: Window):
        self.window = w
        self.ops = semiprime_catalog(w)
        self.tables = {}
        self.by_table = {}
        for op in self.ops:
            t = to_raw(op, w).indices()
            self.tables[op] = t
            self.by_table.setdefault(t, []).append(op)

    def canonical(self, table):
        ops = self.by_table.get(table)
        return ops[0] if ops else None

    def aliased(self) -> list:
        return [(ops[0], other) for ops in self.by_table.values() for other in ops[1:]]


@lru_cache(maxsize=None)
def catalog(w: Window) -> Catalog:
    return Catalog(w)
