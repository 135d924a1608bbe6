"""Composition, classification and the structural checks built on them."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .axioms import RawMap, check_axiom, is_bounded, lattice, to_raw
from .catalog import catalog, identity, is_m0, is_mf
from .ideals import M, UsageError, Window, contains
from .ops import BoundedBox, BoundedPoint
from .subspace import colength


def as_raw(x, w: Window) -> RawMap:
    return x if isinstance(x, RawMap) else to_raw(x, w)


def compose(f, g, w: Window) -> RawMap:
    """The table of I -> f(g(I)); either argument may be an op or a RawMap."""
    return as_raw(g, w).then(as_raw(f, w))


@dataclass
class ClassifiedResult:
    kind: str  # "op" | "not_closure" | "not_semiprime" | "unknown"
    op: object = None
    axiom: Optional[str] = None
    witness: object = None
    aliases: tuple = ()
    table: Optional[RawMap] = None

    @property
    def failed(self) -> bool:
        return self.kind in ("not_closure", "not_semiprime")

    def __str__(self):
        if self.kind == "op":
            return f"Op({self.op})"
        if self.kind == "not_closure":
            return f"NotClosure({self.axiom}: {self.witness})"
        if self.kind == "not_semiprime":
            return f"NotSemiprime({self.witness})"
        return f"UnknownInWindow({self.table.describe()})"


def classify(m: RawMap) -> ClassifiedResult:
    """Name a window table: the first failing axiom, or the catalog member it equals.

    When several members share the table the canonical one is returned and the rest
    are listed in ``aliases``.
    """
    for ax in "abc":
        r = check_axiom(m, ax)
        if r.status == "fail":
            return ClassifiedResult("not_closure", axiom=ax, witness=r.witness, table=m)
    r = check_axiom(m, "d")
    if r.status == "fail":
        return ClassifiedResult("not_semiprime", axiom="d", witness=r.witness, table=m)
    ops = catalog(m.window).by_table.get(m.indices())
    if ops:
        return ClassifiedResult("op", op=ops[0], aliases=tuple(ops[1:]), table=m)
    return ClassifiedResult("unknown", table=m)


# ---------------------------------------------------------------------------
# monoid / act structure


@dataclass
class Check:
    name: str
    status: str  # pass | fail
    checked: int = 0
    failures: int = 0
    witness: str = ""

    @property
    def ok(self):
        return self.status == "pass"


@dataclass
class StructureReport:
    window: Window
    checks: list = field(default_factory=list)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def get(self, name):
        return next(c for c in self.checks if c.name == name)


def _tables(ops, w):
    cat = catalog(w)
    seen = {}
    for op in ops:
        seen.setdefault(cat.tables[op], op)
    return seen  # index table -> canonical op


def _closure_check(name, lefts, rights, target, describe, sample=None, rng=None):
    pairs = [(a, b) for a in lefts for b in rights]
    if sample is not None and len(pairs) > sample:
        pairs = rng.sample(pairs, sample)
    bad, first = 0, ""
    for a, b in pairs:
        t = tuple(a[x] for x in b)
        if t not in target:
            bad += 1
            if not first:
                first = describe(a, b)
    return Check(name, "fail" if bad else "pass", len(pairs), bad, first)


def verify_act_structure(w: Window, sample: Optional[int] = None, seed: int = 0) -> StructureReport:
    """Monoid closure of M0 and Mf, the left act of M0 on Mf, and a right-act failure.

    ``sample`` caps the number of triples used for the associativity check (the
    pair checks always run exhaustively).
    """
    rng = random.Random(seed)
    cat = catalog(w)
    e = cat.tables[identity(w)]
    m0 = _tables([op for op in cat.ops if is_m0(op)], w)
    mf = _tables([op for op in cat.ops if is_mf(op)], w)
    rep = StructureReport(w)

    names = {**mf, **m0}

    def describe(a, b):
        return f"{names[a]} o {names[b]}"

    rep.checks.append(Check("identity in M0 and Mf", "pass" if e in m0 and e in mf else "fail", 2))
    rep.checks.append(_closure_check("M0 closed under composition", m0, m0, m0, describe))
    rep.checks.append(_closure_check("Mf closed under composition", mf, mf, mf, describe))
    # the act is on the non-identity elements: s o e = s is in M0, not Mf
    acted = {t: op for t, op in mf.items() if t != e}
    rep.checks.append(_closure_check("left act: M0 o (Mf - e) lands in Mf", m0, acted, mf, describe))
    ident = all(tuple(e[x] for x in g) == g and tuple(g[x] for x in e) == g for g in list(m0) + list(mf))
    rep.checks.append(Check("act identity e o g = g o e = g", "pass" if ident else "fail", len(m0) + len(mf)))

    # associativity of the action, delta(st, a) = delta(s, delta(t, a))
    triples = [(s, t, a) for s in m0 for t in m0 for a in acted] if sample is None else [
        (rng.choice(list(m0)), rng.choice(list(m0)), rng.choice(list(acted))) for _ in range(sample)]
    bad = 0
    for s, t, a in triples:
        st = tuple(s[x] for x in t)
        if tuple(st[x] for x in a) != tuple(s[y] for y in (t[x] for x in a)):
            bad += 1
    rep.checks.append(Check("act associativity", "fail" if bad else "pass", len(triples), bad))

    # not a right act: some g o f with g in Mf, f in M0 fails to be a closure map
    wit = right_act_failure(w)
    rep.checks.append(Check("right act fails (witness found)", "pass" if wit else "fail", 1, 0, wit or ""))
    return rep


def right_act_failure(w: Window) -> Optional[str]:
    """First (g, f) with g in Mf, f in M0 and g o f not a closure operation."""
    cat = catalog(w)
    m0 = _tables([op for op in cat.ops if is_m0(op)], w)
    mf = _tables([op for op in cat.ops if is_mf(op)], w)
    for tg, g in mf.items():
        for tf, f in m0.items():
            c = compose(g, f, w)
            for ax in "abc":
                r = check_axiom(c, ax)
                if r.status == "fail":
                    return f"{g} o {f}: ({ax}) {r.witness}"
    return None


# ---------------------------------------------------------------------------
# exceptional operations


def bound_target(op, w: Window):
    """The ideal absorbing every small ideal, if it is a window ideal."""
    ok, I0 = is_bounded(to_raw(op, w))
    return I0 if ok else None


def is_exceptional(f, w: Window, conductor: int = 2):
    """Return ``(True, chain)`` if some ideal incomparable to the bound target J has a
    composition series of length >= conductor up to its closure, every step above
    the start containing J. Otherwise ``(False, None)``.
    """
    m = as_raw(f, w)
    # a typed op names its target; a bare table has to show it inside the window
    J = getattr(f, "target", None)
    if J is None:
        ok, J = is_bounded(m)
        if not ok:
            raise UsageError(f"{f} is not bounded on {w}")
    lat = lattice(w)
    for A in lat.ideals:
        if A.is_zero or contains(A, J) or contains(J, A):
            continue
        F = m(A)
        if not contains(F, J) or colength(A, F, w.p) < conductor:
            continue
        chain = _saturated_chain(A, F, J, lat, w.p)
        if chain:
            return True, chain
    return False, None


def _saturated_chain(A, F, J, lat, p):
    """A chain A = a0 < a1 < ... < ak = F of colength-one steps with every ai (i > 0)
    containing J, or None."""
    between = [X for X in lat.ideals if not X.is_zero and contains(X, A) and contains(F, X)]

    def walk(X, path):
        if X == F:
            return path
        for Y in between:
            if Y != X and contains(Y, X) and contains(Y, J) and colength(X, Y, p) == 1:
                got = walk(Y, path + [Y])
                if got:
                    return got
        return None

    return walk(A, [A])


# ---------------------------------------------------------------------------
# non-commutativity of the exceptional boxes


@dataclass
class CommutationWitness:
    left: object
    right: object
    ideal: object
    forward: object  # left(right(I))
    backward: object  # right(left(I))

    def __str__(self):
        return f"{self.left} o {self.right} at {self.ideal}: {self.forward} vs reverse {self.backward}"


def noncommutativity_witnesses(w: Window, n: int = 2, S=None, T=None, m: int = 6, a: int = 0) -> list:
    """Both displayed counterexamples for the exceptional boxes at floor m.

    The defaults use S = T = K because, with n = 2 and m = 6, the box at floor m-1 = n+3
    needs S = K and the box at floor m = n+4 needs T = K to be closure operations.
    """
    K = w.field
    S = K if S is None else frozenset(S)
    T = K if T is None else frozenset(T)
    big = BoundedBox(n, S, T, m, exceptional=True)
    small = BoundedBox(n, S, T, m - 1, exceptional=True)
    pt = BoundedPoint(m - 1, a)
    for op in (big, small, pt):
        op.validate(w)
    out = []
    for left, right, I in ((big, small, M(m)), (big, pt, M(m + 1))):
        w.check(I)
        if not w.in_window(I):
            raise UsageError(f"{I} is outside {w}")
        out.append(CommutationWitness(left, right, I, left(right(I)), right(left(I))))
    return out


# ---------------------------------------------------------------------------
# prime operations


@dataclass
class PrimeScan:
    window: Window
    prime: list  # canonical ops passing (e) on the window generators
    witnesses: dict  # op -> failing (e) report, for every other canonical op
    aliases: dict  # canonical op -> ops with the same window table

    @property
    def only_identity(self) -> bool:
        w = self.window
        return [str(x) for x in self.prime] == [str(identity(w))]


def prime_scan(w: Window) -> PrimeScan:
    """Every catalog member passing (e) on the window generators, up to window aliasing."""
    cat = catalog(w)
    prime, wits = [], {}
    for t, ops in cat.by_table.items():
        r = check_axiom(to_raw(ops[0], w), "e")
        if r.status == "fail":
            wits[ops[0]] = r
        else:
            prime.append(ops[0])
    return PrimeScan(w, prime, wits, {ops[0]: ops[1:] for ops in cat.by_table.values() if len(ops) > 1})
