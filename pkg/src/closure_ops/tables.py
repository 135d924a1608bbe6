"""Composition tables, row by row, checked against composed window tables.

Each row is a case condition on the parameters of the two operands plus a
predicted result (an op, or ``NOT_SEMIPRIME`` for "not a semiprime operation").
Rows are transcribed as printed (``literal``); a small set of corrections for
evident typos and omissions is applied in ``corrected`` mode, each carrying a note.
Parameter tuples that satisfy no row are reported as coverage gaps, and tuples
that satisfy several rows with different predictions are reported as conflicts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import SimpleNamespace
from typing import Callable, Optional

from .analysis import classify
from .axioms import from_indices, to_raw
from .catalog import cusp_int, ded_semiprime, subsets
from .ideals import UsageError, Window
from .ops import BoundedBox, BoundedPoint, DedekindBox, DvrF, DvrG

NOT_SEMIPRIME = "not a semiprime operation"
MODES = ("corrected", "literal")


@dataclass(frozen=True)
class Row:
    label: str
    cond: Callable
    expect: Callable  # (params, K) -> op | NOT_SEMIPRIME
    note: str = ""


@dataclass(frozen=True)
class Table:
    id: str
    left: str  # operand kinds, see _operands
    right: str
    names: tuple  # parameter names for (left, right)
    rows: tuple
    both_orders: bool = False  # the row states left o right = right o left
    fixes: tuple = ()  # (label, Row | None) replacements/additions for corrected mode

    def rows_for(self, mode: str) -> list:
        if mode == "literal":
            return list(self.rows)
        out = {r.label: r for r in self.rows}
        for label, row in self.fixes:
            if row is None:
                out.pop(label, None)
            else:
                out[label] = row
        return sorted(out.values(), key=lambda r: _label_key(r.label))


def _label_key(label):
    head, _, tail = label.rpartition(".")
    return head, int("".join(c for c in tail if c.isdigit()) or 0), tail


# ---------------------------------------------------------------------------
# expected-op constructors (the tables' notation)


def _int(i, S, T):
    from .ops import IntUnbounded

    return IntUnbounded(i, frozenset(S), frozenset(T))


def _box(zero):
    def make(K):
        def box(n, S, T, m):
            T = K if m == n + 1 else T  # P(n+1,.) = P(m-1,.) is sent to M(m-1) regardless of T
            return BoundedBox(n, frozenset(S), frozenset(T), m, zero)
        return box
    return make


fbox, gbox = _box("closed"), _box("target")


def fpt(m, a):
    return BoundedPoint(m, a, "closed")


def gpt(m, a):
    return BoundedPoint(m, a, "target")


def comp(a, K):
    return K - {a}


# ---------------------------------------------------------------------------
# operand sweeps


def _operands(kind: str, w: Window) -> list:
    """(op, parameter tuple) pairs for one operand kind, instantiable in the window."""
    D, K = w.max_deg, w.field
    if kind in ("F", "G"):
        cls = DvrF if kind == "F" else DvrG
        return [(cls(m), (m,)) for m in range(D + 1)]
    if kind in ("fB", "gB"):
        zero = "closed" if kind == "fB" else "box"
        ops = [op for op in ded_semiprime(w) if op.zero == zero and not op.is_identity]
        return [(op, (op.bounds,)) for op in ops]
    if kind == "int":
        return [(op, (op.i, op.S, op.T)) for op in cusp_int(w)]
    if kind in ("fpt", "gpt"):
        zero = "closed" if kind == "fpt" else "target"
        return [(BoundedPoint(m, a, zero), (m, a)) for m in range(2, D + 1) for a in sorted(K)]
    if kind in ("fbox", "gbox"):
        zero = "closed" if kind == "fbox" else "target"
        out = []
        for n in range(2, D):
            for m in range(n + 1, D + 1):
                for S in subsets(K, nonempty=True):
                    for T in subsets(K):
                        op = BoundedBox(n, S, T, m, zero)
                        try:
                            op.validate(w)
                        except UsageError:
                            continue
                        out.append((op, (n, S, T, m)))
        return out
    raise ValueError(kind)


# ---------------------------------------------------------------------------
# the tables


def _dvr_tables():
    return [
        Table("DVR", "F", "F", (("m",), ("n",)), (
            Row("DVR.ff", lambda p: True, lambda p, K: DvrF(min(p.m, p.n))),
        )),
        Table("DVR", "G", "G", (("m",), ("n",)), (
            Row("DVR.gg", lambda p: True, lambda p, K: DvrG(min(p.m, p.n))),
        )),
        Table("DVR", "F", "G", (("n",), ("m",)), (
            Row("DVR.fg", lambda p: True, lambda p, K: DvrG(min(p.m, p.n))),
        )),
        Table("DVR", "G", "F", (("m",), ("n",)), (
            Row("DVR.gf1", lambda p: p.m > p.n, lambda p, K: NOT_SEMIPRIME),
            Row("DVR.gf2", lambda p: p.m <= p.n, lambda p, K: DvrG(p.m),
                note="case m <= n is not stated; g_m o f_n agrees with g_m on every ideal"),
        )),
    ]


def _meet(B, C):
    return tuple(c if b is None else b if c is None else min(b, c) for b, c in zip(B, C))


def _ded_tables():
    return [
        Table("DED", "fB", "fB", (("B",), ("C",)), (
            Row("DED.ff", lambda p: True, lambda p, K: DedekindBox(_meet(p.B, p.C), "closed")),
        )),
        Table("DED", "gB", "gB", (("B",), ("C",)), (
            Row("DED.gg", lambda p: True, lambda p, K: DedekindBox(_meet(p.B, p.C), "box")),
        )),
        Table("DED", "fB", "gB", (("B",), ("C",)), (
            Row("DED.fg", lambda p: True, lambda p, K: DedekindBox(_meet(p.B, p.C), "box")),
        )),
        Table("DED", "gB", "fB", (("C",), ("B",)), (
            Row("DED.gf1", lambda p: _meet(p.B, p.C) != p.C, lambda p, K: NOT_SEMIPRIME),
            Row("DED.gf2", lambda p: _meet(p.B, p.C) == p.C, lambda p, K: DedekindBox(p.C, "box"),
                note="case B >= C is not stated; g_C o f_B agrees with g_C on every ideal"),
        )),
    ]


def _box_rows(tid, box, pt):
    """Rows shared by (M5), (L5b) and (L6b): a box of parameters (n,S,T,m) and a point (l,a)."""
    return (
        Row(f"{tid}.1", lambda p: p.m <= p.l, lambda p, K: box(K)(p.n, p.S, p.T, p.m)),
        Row(f"{tid}.2", lambda p: p.n + 1 < p.l <= p.m, lambda p, K: box(K)(p.n, p.S, p.T, p.l)),
        Row(f"{tid}.3", lambda p: p.n + 1 == p.l <= p.m,
            lambda p, K: box(K)(p.n, K, p.T | comp(p.a, K), p.l)),
        Row(f"{tid}.4", lambda p: p.n == p.l <= p.m - 1, lambda p, K: box(K)(p.n - 1, K, K, p.n)),
        Row(f"{tid}.5", lambda p: p.l < p.n, lambda p, K: pt(p.l, p.a)),
    )


def _moves_first(p):
    # the box sends P(n, a) to M(n): a in S, or P(n, .) is the row just above the floor
    return p.a in p.S or p.m == p.n + 1


def _moves_second(p):
    # the box sends P(n+1, a) to M(n+1)
    return p.a in p.T or p.m <= p.n + 2


def _box_fixes(tid, box, pt):
    split = "the printed row holds only when the box moves P(l,a); otherwise the point survives"
    return (
        (f"{tid}.3", Row(f"{tid}.3", lambda p: p.n + 1 == p.l <= p.m and _moves_second(p),
                         lambda p, K: box(K)(p.n, K, K, p.l), note=split)),
        (f"{tid}.3b", Row(f"{tid}.3b", lambda p: p.n + 1 == p.l <= p.m and not _moves_second(p),
                          lambda p, K: pt(p.l, p.a), note=split)),
        (f"{tid}.4", Row(f"{tid}.4", lambda p: p.n == p.l <= p.m - 1 and _moves_first(p),
                         lambda p, K: box(K)(p.n - 1, K, K, p.n), note=split)),
        (f"{tid}.4b", Row(f"{tid}.4b", lambda p: p.n == p.l <= p.m - 1 and not _moves_first(p),
                          lambda p, K: pt(p.l, p.a), note=split)),
    )


def _box_moves_point(p):
    """Whether the box (n,S,T,m) moves P(l,a), for l >= n."""
    if p.l >= p.m - 1 or p.l >= p.n + 2:
        return True
    return (p.l == p.n and p.a in p.S) or (p.l == p.n + 1 and p.a in p.T)


def _point_rows(tid, box, left, right):
    """Rows of (M6)/(L4b): points (n,a) and (m,b); ``left``/``right`` build the survivors."""
    return (
        Row(f"{tid}.1", lambda p: p.n + 1 < p.m, lambda p, K: left(p.n, p.a)),
        Row(f"{tid}.2", lambda p: p.m <= p.n <= p.m + 1, lambda p, K: box(K)(p.n - 1, K, K, p.n)),
        Row(f"{tid}.3", lambda p: p.n + 1 == p.m, lambda p, K: box(K)(p.m - 1, K, K, p.m)),
        Row(f"{tid}.4", lambda p: p.m + 1 < p.n, lambda p, K: right(p.m, p.b)),
    )


def _point_fixes(tid, box, left):
    swap = "printed right-hand sides of the adjacent-index rows use the larger index; the smaller one is meant"
    return (
        (f"{tid}.2", Row(f"{tid}.2", lambda p: p.n == p.m and p.a != p.b, lambda p, K: box(K)(p.n - 1, K, K, p.n),
                         note="equal indices: only for distinct targets")),
        (f"{tid}.2b", Row(f"{tid}.2b", lambda p: p.n == p.m and p.a == p.b, lambda p, K: left(p.n, p.a),
                          note="equal indices and targets: the point is idempotent")),
        (f"{tid}.2c", Row(f"{tid}.2c", lambda p: p.n == p.m + 1, lambda p, K: box(K)(p.m - 1, K, K, p.m), note=swap)),
        (f"{tid}.3", Row(f"{tid}.3", lambda p: p.n + 1 == p.m, lambda p, K: box(K)(p.n - 1, K, K, p.n), note=swap)),
    )


def _cusp_tables():
    M1 = Table("M1", "int", "int", (("m", "S", "T"), ("n", "U", "V")), both_orders=True, rows=(
        Row("M1.1", lambda p: p.m + 2 <= p.n, lambda p, K: _int(p.m, p.S, p.T)),
        Row("M1.2", lambda p: p.m + 1 == p.n, lambda p, K: _int(p.m, p.S, p.T | p.U)),
        Row("M1.3", lambda p: p.m == p.n, lambda p, K: _int(p.m, p.S | p.U, p.T | p.V)),
        Row("M1.4", lambda p: p.n + 1 == p.m, lambda p, K: _int(p.n, p.U, p.V | p.S)),
        Row("M1.5", lambda p: p.n + 2 <= p.m, lambda p, K: _int(p.n, p.U, p.V)),
    ))
    M2 = Table("M2", "fbox", "int", (("n", "S", "T", "m"), ("l", "U", "V")), both_orders=True, rows=(
        Row("M2.1", lambda p: p.n + 1 <= p.m < p.l, lambda p, K: fbox(K)(p.n, p.S, p.T, p.m)),
        Row("M2.2", lambda p: p.n + 1 == p.l <= p.m, lambda p, K: fbox(K)(p.n, p.S, p.T | p.U, p.m)),
        Row("M2.3", lambda p: p.n == p.l <= p.m - 1, lambda p, K: fbox(K)(p.n, p.S | p.U, p.T | p.V, p.m)),
        Row("M2.4", lambda p: p.l + 1 == p.n <= p.m - 1, lambda p, K: fbox(K)(p.l, p.U, p.S | p.V, p.m)),
        Row("M2.5", lambda p: p.l + 1 < p.n <= p.m - 1, lambda p, K: fbox(K)(p.l, p.U, p.V, p.m)),
    ), fixes=(
        ("M2.1", Row("M2.1", lambda p: p.n + 1 < p.l, lambda p, K: fbox(K)(p.n, p.S, p.T, p.m),
                     note="printed condition n+1 <= m < l omits n+2 <= l <= m, where the result is the same box")),
    ))
    M3 = Table("M3", "fpt", "int", (("m", "a"), ("l", "U", "V")), both_orders=True, rows=(
        Row("M3.1", lambda p: p.m < p.l or (p.m == p.l and p.a not in p.U) or (p.l == p.m - 1 and p.a not in p.V),
            lambda p, K: fpt(p.m, p.a)),
        Row("M3.2", lambda p: p.m == p.l and p.a in p.U, lambda p, K: fbox(K)(p.m - 1, K, K, p.m)),
        Row("M3.3", lambda p: p.l == p.m - 1 and p.a in p.V, lambda p, K: fbox(K)(p.m - 1, p.U, K, p.m)),
        Row("M3.4", lambda p: p.l < p.m - 1, lambda p, K: fbox(K)(p.l, p.U, p.V, p.m)),
    ))
    M4 = Table("M4", "fbox", "fbox", (("n", "S", "T", "m"), ("l", "U", "V", "k")), both_orders=True, rows=(
        Row("M4.1", lambda p: p.n + 1 < p.m and p.n + 1 < p.l, lambda p, K: fbox(K)(p.n, p.S, p.T, p.m)),
        Row("M4.2", lambda p: p.n + 1 == p.l <= p.m < p.k, lambda p, K: fbox(K)(p.n, p.S, p.T | p.U, p.m)),
        Row("M4.3", lambda p: p.n + 1 == p.l <= p.k - 1 <= p.m - 1, lambda p, K: fbox(K)(p.n, p.S, p.T | p.U, p.k)),
        Row("M4.4", lambda p: p.n == p.l < p.m - 1 < p.k - 1, lambda p, K: fbox(K)(p.n, p.S | p.U, p.T | p.V, p.m)),
        Row("M4.5", lambda p: p.n == p.l < p.k - 1 <= p.m - 1, lambda p, K: fbox(K)(p.n, p.S | p.U, p.T | p.V, p.k)),
        Row("M4.6", lambda p: p.l + 1 == p.n <= p.m - 1 < p.k - 1, lambda p, K: fbox(K)(p.l, p.U, p.S | p.V, p.m)),
        Row("M4.7", lambda p: p.l + 1 == p.n < p.k <= p.m, lambda p, K: fbox(K)(p.n, p.U, p.S | p.V, p.k)),
        Row("M4.8", lambda p: p.l + 1 < p.m and p.l + 1 < p.k, lambda p, K: fbox(K)(p.l, p.U, p.V, p.k)),
    ), fixes=(
        ("M4.1", Row("M4.1", lambda p: p.n + 1 < p.l and p.m <= p.k, lambda p, K: fbox(K)(p.n, p.S, p.T, p.m),
                     note="printed 'n+1 < m, l'; read as n+1 < l, m <= k, mirroring the last row and (L3)")),
        ("M4.7", Row("M4.7", lambda p: p.l + 1 == p.n < p.k <= p.m, lambda p, K: fbox(K)(p.l, p.U, p.S | p.V, p.k),
                     note="printed first index n; the smaller index l is meant, as in the row above")),
        ("M4.8", Row("M4.8", lambda p: p.l + 1 < p.n and p.k <= p.m, lambda p, K: fbox(K)(p.l, p.U, p.V, p.k),
                     note="printed 'l+1 < m, k'; read as l+1 < n, k <= m, mirroring (L3b)")),
    ))
    M5 = Table("M5", "fbox", "fpt", (("n", "S", "T", "m"), ("l", "a")), both_orders=True,
               rows=_box_rows("M5", fbox, fpt), fixes=_box_fixes("M5", fbox, fpt))
    M6 = Table("M6", "fpt", "fpt", (("n", "a"), ("m", "b")), both_orders=True,
               rows=_point_rows("M6", fbox, fpt, fpt), fixes=_point_fixes("M6", fbox, fpt))
    L1 = Table("L1", "gbox", "int", (("n", "S", "T", "m"), ("l", "U", "V")), both_orders=True, rows=(
        Row("L1.1", lambda p: p.n + 1 <= p.m and p.n + 1 <= p.l, lambda p, K: gbox(K)(p.n, p.S, p.T, p.m)),
        Row("L1.2", lambda p: p.n + 1 == p.l <= p.m, lambda p, K: gbox(K)(p.n, p.S, p.T | p.U, p.m)),
        Row("L1.3", lambda p: p.n == p.l <= p.m - 1, lambda p, K: gbox(K)(p.n, p.S | p.U, p.T | p.V, p.m)),
        Row("L1.4", lambda p: p.l + 1 == p.n <= p.m - 1, lambda p, K: gbox(K)(p.l, p.U, p.S | p.V, p.m)),
        Row("L1.5", lambda p: p.l < p.n <= p.m - 1, lambda p, K: gbox(K)(p.l, p.U, p.V, p.m)),
    ), fixes=(
        ("L1.1", Row("L1.1", lambda p: p.n + 1 < p.l, lambda p, K: gbox(K)(p.n, p.S, p.T, p.m),
                     note="printed 'n+1 <= m, l' overlaps the next row at l = n+1; strict inequality as in (M2)")),
        ("L1.5", Row("L1.5", lambda p: p.l + 1 < p.n <= p.m - 1, lambda p, K: gbox(K)(p.l, p.U, p.V, p.m),
                     note="printed 'l < n' overlaps the row above at l+1 = n; l+1 < n as in (M2)")),
    ))
    L2 = Table("L2", "gpt", "int", (("m", "a"), ("l", "U", "V")), both_orders=True, rows=(
        Row("L2.1", lambda p: p.m < p.l or (p.m == p.l and p.a not in p.U) or (p.l == p.m - 1 and p.a not in p.V),
            lambda p, K: gpt(p.m, p.a)),
        Row("L2.2", lambda p: p.m == p.l and p.a in p.U, lambda p, K: gbox(K)(p.m - 1, K, K, p.m)),
        Row("L2.3", lambda p: p.l == p.m - 1 and p.a in p.V, lambda p, K: gbox(K)(p.m - 1, p.U, K, p.m)),
        Row("L2.4", lambda p: p.l < p.m - 1, lambda p, K: gbox(K)(p.l, p.U, p.V, p.m)),
    ))
    L3a = Table("L3a", "gbox", "fbox", (("n", "S", "T", "m"), ("l", "U", "V", "k")), rows=(
        Row("L3a.1", lambda p: p.n + 1 < p.l and p.m <= p.k, lambda p, K: gbox(K)(p.n, p.S, p.T, p.m)),
        Row("L3a.2", lambda p: p.n + 1 == p.l < p.m <= p.k, lambda p, K: gbox(K)(p.n, p.S, p.T | p.U, p.m)),
        Row("L3a.3", lambda p: p.n == p.l <= p.m - 1 <= p.k - 1, lambda p, K: gbox(K)(p.n, p.S | p.U, p.T | p.V, p.m)),
        Row("L3a.4", lambda p: p.k < p.m, lambda p, K: NOT_SEMIPRIME),
    ))
    L3b = Table("L3b", "fbox", "gbox", (("l", "U", "V", "k"), ("n", "S", "T", "m")), rows=(
        Row("L3b.1", lambda p: p.n + 1 < p.l and p.m <= p.k, lambda p, K: gbox(K)(p.n, p.S, p.T, p.m)),
        Row("L3b.2", lambda p: p.n + 1 == p.l < p.m <= p.k, lambda p, K: gbox(K)(p.n, p.S, p.T | p.U, p.m)),
        Row("L3b.3", lambda p: p.n + 1 == p.l <= p.k < p.m, lambda p, K: gbox(K)(p.n, p.S, p.T | p.U, p.k)),
        Row("L3b.4", lambda p: p.n == p.l <= p.m - 1 <= p.k - 1, lambda p, K: gbox(K)(p.n, p.S | p.U, p.T | p.V, p.m)),
        Row("L3b.5", lambda p: p.n == p.l < p.k <= p.m, lambda p, K: gbox(K)(p.n, p.S | p.U, p.T | p.V, p.k)),
        Row("L3b.6", lambda p: p.l + 1 == p.n < p.m <= p.k, lambda p, K: gbox(K)(p.l, p.U, p.V | p.S, p.m)),
        Row("L3b.7", lambda p: p.l + 1 == p.n <= p.k < p.m, lambda p, K: gbox(K)(p.l, p.U, p.V | p.S, p.k)),
        Row("L3b.8", lambda p: p.l + 1 < p.n and p.k <= p.m, lambda p, K: gbox(K)(p.l, p.U, p.V, p.k)),
    ))
    L4a = Table("L4a", "gpt", "fpt", (("n", "a"), ("m", "b")), rows=(
        Row("L4a.1", lambda p: p.n + 1 < p.m, lambda p, K: gpt(p.n, p.a)),
        Row("L4a.2", lambda p: p.m <= p.n + 1, lambda p, K: NOT_SEMIPRIME),
    ), fixes=(
        ("L4a.2", Row("L4a.2", lambda p: p.m <= p.n + 1 and (p.m, p.b) != (p.n, p.a), lambda p, K: NOT_SEMIPRIME,
                      note="excludes the equal point, whose composite is the g point itself")),
        ("L4a.2b", Row("L4a.2b", lambda p: (p.m, p.b) == (p.n, p.a), lambda p, K: gpt(p.n, p.a),
                       note="equal indices and targets")),
    ))
    L4b = Table("L4b", "fpt", "gpt", (("m", "b"), ("n", "a")),
                rows=_point_rows("L4b", gbox, gpt, gpt), fixes=_point_fixes("L4b", gbox, gpt))
    L5a = Table("L5a", "gbox", "fpt", (("n", "S", "T", "m"), ("l", "a")), rows=(
        Row("L5a.1", lambda p: p.m <= p.l, lambda p, K: gbox(K)(p.n, p.S, p.T, p.m)),
        Row("L5a.2", lambda p: p.l < p.m, lambda p, K: NOT_SEMIPRIME),
    ))
    L5b = Table("L5b", "fpt", "gbox", (("l", "a"), ("n", "S", "T", "m")),
                rows=_box_rows("L5b", gbox, gpt), fixes=_box_fixes("L5b", gbox, gpt))
    L6a = Table("L6a", "gpt", "fbox", (("l", "a"), ("n", "S", "T", "m")), rows=(
        Row("L6a.1", lambda p: p.l < p.n, lambda p, K: gpt(p.l, p.a)),
        Row("L6a.2", lambda p: p.l >= p.n, lambda p, K: NOT_SEMIPRIME),
    ), fixes=(
        ("L6a.2", Row("L6a.2", lambda p: p.l >= p.n and _box_moves_point(p), lambda p, K: NOT_SEMIPRIME,
                      note="only when the box moves the target P(l,a)")),
        ("L6a.2b", Row("L6a.2b", lambda p: p.l >= p.n and not _box_moves_point(p), lambda p, K: gpt(p.l, p.a),
                       note="the box fixes P(l,a), so the g point is unchanged")),
    ))
    L6b = Table("L6b", "fbox", "gpt", (("n", "S", "T", "m"), ("l", "a")),
                rows=_box_rows("L6b", gbox, gpt), fixes=_box_fixes("L6b", gbox, gpt))
    return [M1, M2, M3, M4, M5, M6, L1, L2, L3a, L3b, L4a, L4b, L5a, L5b, L6a, L6b]


def all_tables(family: str) -> list:
    return {"dvr": _dvr_tables, "ded": _ded_tables, "cusp": _cusp_tables}[family]()


def table_ids(family: str) -> list:
    return list(dict.fromkeys(t.id for t in all_tables(family)))


# ---------------------------------------------------------------------------
# verification


@dataclass
class TableCheck:
    table: str
    row: str  # row label, or "-" for a coverage gap
    expr: str  # the composition actually evaluated, e.g. "A o B"
    params: str
    expected: str
    got: str
    status: str  # pass | fail | uncovered
    witness: str = ""
    note: str = ""
    order: str = "A o B"  # which operand is applied last


@dataclass
class TableReport:
    window: Window
    mode: str
    checks: list = field(default_factory=list)
    conflicts: list = field(default_factory=list)  # (params, rows) where applicable rows disagree
    not_instantiable: list = field(default_factory=list)  # row labels with no parameter tuple

    def rows(self, status=None):
        return [c for c in self.checks if c.row != "-" and (status is None or c.status == status)]

    @property
    def gaps(self):
        return [c for c in self.checks if c.status == "uncovered"]

    @property
    def ok(self) -> bool:
        return not self.rows("fail") and not self.conflicts

    def summary(self) -> dict:
        out = {}
        for c in self.checks:
            d = out.setdefault(c.row, {"pass": 0, "fail": 0, "uncovered": 0})
            d[c.status] += 1
        return out


def _fmt(v):
    if isinstance(v, frozenset):
        return "{" + ",".join(map(str, sorted(v))) + "}"
    if isinstance(v, tuple):
        return "(" + ",".join("inf" if x is None else str(x) for x in v) + ")"
    return str(v)


def _params(names, vals_l, vals_r):
    pairs = list(zip(names[0], vals_l)) + list(zip(names[1], vals_r))
    return SimpleNamespace(**dict(pairs)), " ".join(f"{k}={_fmt(v)}" for k, v in pairs)


def verify_table(table_id: str, w: Window, mode: str = "corrected") -> TableReport:
    """Check every instantiable parameter tuple of the named table on the window."""
    if mode not in MODES:
        raise UsageError(f"mode must be one of {MODES}")
    tables = [t for t in all_tables(w.family) if t.id == table_id]
    if not tables:
        raise UsageError(f"no table {table_id!r} for {w.family}")
    rep = TableReport(w, mode)
    raw = {}

    def table_of(op):
        if op not in raw:
            raw[op] = to_raw(op, w).indices()
        return raw[op]

    used = set()
    for tab in tables:
        rows = tab.rows_for(mode)
        lefts, rights = _operands(tab.left, w), _operands(tab.right, w)
        orders = [(False, "A o B")] + ([(True, "B o A")] if tab.both_orders else [])
        for A, pa in lefts:
            ta = table_of(A)
            for B, pb in rights:
                tb = table_of(B)
                p, ptxt = _params(tab.names, pa, pb)
                applicable = [r for r in rows if r.cond(p)]
                for swap, order in orders:
                    start = len(rep.checks)
                    outer, inner = (tb, ta) if swap else (ta, tb)
                    composed = tuple(outer[x] for x in inner)
                    label = f"{B} o {A}" if swap else f"{A} o {B}"
                    if not applicable:
                        got = classify(from_indices(w, composed))
                        rep.checks.append(TableCheck(tab.id, "-", label, ptxt, "-", str(got), "uncovered",
                                                     order=order))
                        continue
                    predictions = {}
                    for r in applicable:
                        used.add(r.label)
                        rep.checks.append(_check_row(tab, r, label, ptxt, p, composed, w, table_of, predictions))
                    if len(set(predictions.values())) > 1:
                        rep.conflicts.append((tab.id, label, ptxt, dict(predictions)))
                    for c in rep.checks[start:]:
                        c.order = order
    rep.not_instantiable = [r.label for t in tables for r in t.rows_for(mode) if r.label not in used]
    return rep


def _check_row(tab, row, label, ptxt, p, composed, w, table_of, predictions):
    K = w.field
    try:
        exp = row.expect(p, K)
        if exp != NOT_SEMIPRIME:
            exp_t = table_of(exp)
    except UsageError as err:
        predictions[row.label] = f"invalid: {err}"
        got = classify(from_indices(w, composed))
        return TableCheck(tab.id, row.label, label, ptxt, f"invalid op ({err})", str(got), "fail", note=row.note)
    if exp == NOT_SEMIPRIME:
        predictions[row.label] = NOT_SEMIPRIME
        got = classify(from_indices(w, composed))
        status = "pass" if got.failed else "fail"
        return TableCheck(tab.id, row.label, label, ptxt, NOT_SEMIPRIME, str(got), status,
                          witness=str(got.witness or ""), note=row.note)
    predictions[row.label] = exp_t
    if composed == exp_t:
        return TableCheck(tab.id, row.label, label, ptxt, str(exp), f"Op({exp})", "pass", note=row.note)
    got = classify(from_indices(w, composed))
    diff = next(f"{I}: expected {J}, got {w.ideals()[k]}"
                for I, J, k in zip(w.ideals(), [w.ideals()[x] for x in exp_t], composed) if J != w.ideals()[k])
    return TableCheck(tab.id, row.label, label, ptxt, str(exp), str(got), "fail", witness=diff, note=row.note)


def _verify_one(args):
    return verify_table(*args)


def verify_tables(w: Window, mode: str = "corrected", ids: Optional[list] = None,
                  workers: Optional[int] = None) -> list:
    """Verify several tables, one worker process per table when ``workers`` > 1.

    Reports come back in table order whatever the scheduling.
    """
    from .config import worker_count

    jobs = [(t, w, mode) for t in (ids or table_ids(w.family))]
    workers = min(worker_count(workers), len(jobs))
    if workers <= 1:
        return [_verify_one(j) for j in jobs]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_verify_one, jobs))
