"""Closure operations as first-class values.

Every op is a frozen dataclass that is callable on ideals. ``str(op)`` gives the
canonical text form and :func:`parse_op` inverts it exactly::

    dvr:id   dvr:f(3)   dvr:g(3)   dvr:jump(2)
    ded:box(P=2,Q=inf;zero=closed)          ded:box(P=2,Q=1;zero=box)
    cusp:id  cusp:single(i=2)  cusp:int(i=2,S={0},T={})
    cusp:fpoint(m=4,a=0,zero=closed)
    cusp:fbox(n=2,S={0},T={1},m=5,zero=target,exc=true)

``zero=closed`` keeps (0) fixed (the f-type maps); ``zero=box`` / ``zero=target``
sends (0) to the bound (the g-type maps). Field-dependent parameter rules need
the characteristic and are checked by ``op.validate(window)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .ideals import (
    CuspIdeal,
    DedekindIdeal,
    DvrIdeal,
    M,
    P,
    UsageError,
    Window,
    contains,
    integral_closure,
    prime_name,
)

INF = None  # an infinite Dedekind bound


# ---------------------------------------------------------------------------
# shared


@dataclass(frozen=True)
class Identity:
    family: str

    def __call__(self, I):
        return I

    def validate(self, w: Window) -> None:
        _same_family(self, w)

    def __str__(self):
        if self.family == "ded":
            raise UsageError("the Dedekind identity is written as an all-inf box")
        return f"{self.family}:id"


def _same_family(op, w: Window):
    if op.family != w.family:
        raise UsageError(f"{op} does not act on {w}")


# ---------------------------------------------------------------------------
# discrete valuation ring


@dataclass(frozen=True)
class DvrF:
    """f_m: P^i -> P^min(i, m), (0) fixed."""

    m: int
    family = "dvr"

    def __post_init__(self):
        if self.m < 0:
            raise UsageError("f(m) needs m >= 0")

    def __call__(self, I: DvrIdeal):
        return I if I.is_zero else DvrIdeal(min(I.n, self.m))

    def validate(self, w):
        _same_family(self, w)

    def __str__(self):
        return f"dvr:f({self.m})"


@dataclass(frozen=True)
class DvrG:
    """g_m: like f_m on nonzero ideals, (0) -> P^m."""

    m: int
    family = "dvr"

    def __post_init__(self):
        if self.m < 0:
            raise UsageError("g(m) needs m >= 0")

    def __call__(self, I: DvrIdeal):
        return DvrIdeal(self.m if I.is_zero else min(I.n, self.m))

    def validate(self, w):
        _same_family(self, w)

    def __str__(self):
        return f"dvr:g({self.m})"


@dataclass(frozen=True)
class JumpG:
    """The jump map: P^i -> R for i < n, P^n for i >= n, (0) fixed.

    A closure operation that is not semiprime.
    """

    n: int
    family = "dvr"

    def __post_init__(self):
        if self.n < 2:
            raise UsageError("jump(n) needs n >= 2")  # jump(1) is f(1)

    def __call__(self, I: DvrIdeal):
        if I.is_zero:
            return I
        return DvrIdeal(0 if I.n < self.n else self.n)

    def validate(self, w):
        _same_family(self, w)

    def __str__(self):
        return f"dvr:jump({self.n})"


# ---------------------------------------------------------------------------
# Dedekind domain


@dataclass(frozen=True)
class DedekindBox:
    """Exponentwise truncation at per-prime bounds (None = unbounded).

    ``zero="box"`` sends (0) to the ideal of the bounds, which needs every bound
    finite; all-infinite bounds with ``zero="closed"`` is the identity.
    """

    bounds: tuple
    zero: str = "closed"
    family = "ded"

    def __post_init__(self):
        if self.zero not in ("closed", "box"):
            raise UsageError(f"zero behaviour must be closed or box, got {self.zero!r}")
        if any(b is not None and b < 0 for b in self.bounds):
            raise UsageError("negative bound")
        if self.zero == "box" and any(b is None for b in self.bounds):
            raise UsageError("zero=box needs every bound finite")

    def __call__(self, I: DedekindIdeal):
        if I.is_zero:
            return DedekindIdeal(self.bounds) if self.zero == "box" else I
        return DedekindIdeal(tuple(e if b is None else min(e, b) for e, b in zip(I.exps, self.bounds)))

    def validate(self, w):
        _same_family(self, w)
        if len(self.bounds) != w.n_primes:
            raise UsageError(f"{self} has {len(self.bounds)} bounds, {w} has {w.n_primes} primes")

    @property
    def is_identity(self) -> bool:
        return self.zero == "closed" and all(b is None for b in self.bounds)

    def __str__(self):
        bs = ",".join(f"{prime_name(k)}={'inf' if b is None else b}" for k, b in enumerate(self.bounds))
        return f"ded:box({bs};zero={self.zero})"


def ded_identity(n_primes: int) -> DedekindBox:
    return DedekindBox((INF,) * n_primes)


# ---------------------------------------------------------------------------
# cuspidal cubic K[[t^2, t^3]]


def _fmt_set(s) -> str:
    return "{" + ",".join(str(x) for x in sorted(s)) + "}"


def _int_part(I: CuspIdeal, i: int, S, T) -> CuspIdeal:
    """The unbounded pattern: P(i,S), P(i+1,T) and every P(k,.) with k >= i+2 go to M."""
    if I.kind != "P":
        return I
    if I.i >= i + 2 or (I.i == i and I.a in S) or (I.i == i + 1 and I.a in T):
        return integral_closure(I)
    return I


def _check_subset(name, s, w):
    if not s <= w.field:
        raise UsageError(f"{name}={_fmt_set(s)} is not a subset of F_{w.p}")


@dataclass(frozen=True)
class IntUnbounded:
    """Integral closure on P(i,a) for a in S, on P(i+1,b) for b in T, and on every
    P(k,.) with k >= i+2; identity elsewhere."""

    i: int
    S: frozenset
    T: frozenset
    family = "cusp"

    def __post_init__(self):
        object.__setattr__(self, "S", frozenset(self.S))
        object.__setattr__(self, "T", frozenset(self.T))
        if self.i < 2:
            raise UsageError("int needs i >= 2")
        if not self.S:
            raise UsageError("int needs a nonempty S")

    def __call__(self, I):
        return _int_part(I, self.i, self.S, self.T)

    def validate(self, w):
        _same_family(self, w)
        _check_subset("S", self.S, w)
        _check_subset("T", self.T, w)

    def __str__(self):
        return f"cusp:int(i={self.i},S={_fmt_set(self.S)},T={_fmt_set(self.T)})"


@dataclass(frozen=True)
class IntSingle:
    """P(i,.) -> M(i), identity elsewhere: a closure operation that is not semiprime."""

    i: int
    family = "cusp"

    def __post_init__(self):
        if self.i < 2:
            raise UsageError("single needs i >= 2")

    def __call__(self, I):
        return M(self.i) if I.kind == "P" and I.i == self.i else I

    def validate(self, w):
        _same_family(self, w)

    def __str__(self):
        return f"cusp:single(i={self.i})"


@dataclass(frozen=True)
class BoundedPoint:
    """Bounded with target P(m,a) (the f/g point maps)."""

    m: int
    a: int
    zero: str = "closed"
    family = "cusp"

    def __post_init__(self):
        if self.m < 2:
            raise UsageError("fpoint needs m >= 2")
        if self.zero not in ("closed", "target"):
            raise UsageError(f"zero must be closed or target, got {self.zero!r}")

    @property
    def target(self) -> CuspIdeal:
        return P(self.m, self.a)

    def __call__(self, I):
        m, tgt = self.m, self.target
        if I.is_zero:
            return tgt if self.zero == "target" else I
        if contains(I, tgt):
            return I
        if I.kind == "P" and I.i == m - 1:
            return M(m - 1)
        if (I.kind == "P" and I.i in (m, m + 1)) or I == M(m + 1):
            return M(m)
        return tgt  # every remaining ideal lies inside P(m, a)

    def validate(self, w):
        _same_family(self, w)
        if self.a not in w.field:
            raise UsageError(f"a={self.a} is not in F_{w.p}")

    def __str__(self):
        return f"cusp:fpoint(m={self.m},a={self.a},zero={self.zero})"


@dataclass(frozen=True)
class BoundedBox:
    """Bounded with target M(m), following the int(n,S,T) pattern above the floor.

    Regular: P(m-1,.) -> M(m-1). Exceptional: P(m-1,.) and M(m-1) -> M(m-2).
    ``n = 1`` is admitted only for the floor map ``m = 2`` (every nonunit to M(2)).
    """

    n: int
    S: frozenset
    T: frozenset
    m: int
    zero: str = "closed"
    exceptional: bool = False
    family = "cusp"

    def __post_init__(self):
        object.__setattr__(self, "S", frozenset(self.S))
        object.__setattr__(self, "T", frozenset(self.T))
        if self.zero not in ("closed", "target"):
            raise UsageError(f"zero must be closed or target, got {self.zero!r}")
        if not self.S:
            raise UsageError("fbox needs a nonempty S")
        if self.n == 1:
            if self.m != 2 or self.exceptional:
                raise UsageError("fbox with n=1 is only the regular floor map m=2")
        elif self.n < 2:
            raise UsageError("fbox needs n >= 2")
        if self.exceptional and self.m - 2 < self.n:
            raise UsageError(f"exceptional fbox needs m-2 >= n (n={self.n}, m={self.m})")
        if not self.exceptional and self.m - 1 < self.n:
            raise UsageError(f"fbox needs m-1 >= n (n={self.n}, m={self.m})")

    @property
    def target(self) -> CuspIdeal:
        return M(self.m)

    def __call__(self, I):
        m = self.m
        if I.is_zero:
            return M(m) if self.zero == "target" else I
        if contains(M(m), I):
            return M(m)
        if self.exceptional and (I == M(m - 1) or (I.kind == "P" and I.i == m - 1)):
            return M(m - 2)
        if I.kind == "P" and I.i == m - 1:
            return M(m - 1)
        return _int_part(I, self.n, self.S, self.T)

    def validate(self, w):
        _same_family(self, w)
        _check_subset("S", self.S, w)
        _check_subset("T", self.T, w)
        K = w.field
        n, m = self.n, self.m
        if n == 1 and (self.S, self.T) != (K, K):
            raise UsageError("the floor map m=2 is written with S=T=K")
        if not self.exceptional and m == n + 1 and self.T != K:
            raise UsageError(f"fbox with m=n+1 needs T=F_{w.p}")
        if self.exceptional:
            # every P(m-3,.) must already be sent to M(m-3), else M(m-1) -> M(m-2) breaks monotonicity
            if m == n + 2 and n != 2:
                raise UsageError("exceptional fbox with m=n+2 exists only for n=2")
            if m == n + 3 and self.S != K:
                raise UsageError(f"exceptional fbox with m=n+3 needs S=F_{w.p}")
            if m == n + 4 and self.T != K:
                raise UsageError(f"exceptional fbox with m=n+4 needs T=F_{w.p}")

    def __str__(self):
        return (f"cusp:fbox(n={self.n},S={_fmt_set(self.S)},T={_fmt_set(self.T)},m={self.m},"
                f"zero={self.zero},exc={'true' if self.exceptional else 'false'})")


# ---------------------------------------------------------------------------
# parsing

_SET = r"\{([0-9,]*)\}"


def _set(text: str) -> frozenset:
    return frozenset(int(x) for x in text.split(",") if x)


def parse_op(text: str):
    """Parse the canonical text syntax; ``str(parse_op(s)) == s`` for canonical s."""
    s = text.strip()
    if s in ("dvr:id", "cusp:id"):
        return Identity(s.split(":")[0])
    if m := re.fullmatch(r"dvr:(f|g|jump)\((\d+)\)", s):
        return {"f": DvrF, "g": DvrG, "jump": JumpG}[m[1]](int(m[2]))
    if m := re.fullmatch(r"ded:box\(([^;]*);zero=(closed|box)\)", s):
        bounds = []
        for k, item in enumerate(m[1].split(",")):
            name, _, val = item.partition("=")
            if name != prime_name(k) or not re.fullmatch(r"inf|\d+", val):
                raise UsageError(f"bad Dedekind bound {item!r} in {text!r}")
            bounds.append(None if val == "inf" else int(val))
        return DedekindBox(tuple(bounds), m[2])
    if m := re.fullmatch(r"cusp:single\(i=(\d+)\)", s):
        return IntSingle(int(m[1]))
    if m := re.fullmatch(rf"cusp:int\(i=(\d+),S={_SET},T={_SET}\)", s):
        return IntUnbounded(int(m[1]), _set(m[2]), _set(m[3]))
    if m := re.fullmatch(r"cusp:fpoint\(m=(\d+),a=(\d+),zero=(closed|target)\)", s):
        return BoundedPoint(int(m[1]), int(m[2]), m[3])
    if m := re.fullmatch(rf"cusp:fbox\(n=(\d+),S={_SET},T={_SET},m=(\d+),zero=(closed|target),exc=(true|false)\)", s):
        return BoundedBox(int(m[1]), _set(m[2]), _set(m[3]), int(m[4]), m[5], m[6] == "true")
    raise UsageError(f"cannot parse operation {text!r}")


def is_g_type(op) -> bool:
    """True for ops that move the zero ideal."""
    return getattr(op, "zero", "closed") in ("box", "target") or isinstance(op, DvrG)


def apply(op, I, w: Optional[Window] = None):
    """Apply ``op`` to ``I``; with a window, check both belong to it first."""
    if w is not None:
        op.validate(w)
        w.check(I)
    elif getattr(op, "family", None) != {DvrIdeal: "dvr", DedekindIdeal: "ded", CuspIdeal: "cusp"}[type(I)]:
        raise UsageError(f"{op} does not act on {I!r}")
    return op(I)
