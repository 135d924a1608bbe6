"""Ideal lattices of the three ring families, truncated to finite windows.

Three families are modelled:

* ``dvr``  -- a discrete valuation ring (R, P); ideals are the chain P^n and (0).
* ``ded``  -- a Dedekind domain with finitely many maximal ideals; nonzero ideals
  are exponent vectors over the primes.
* ``cusp`` -- the cuspidal cubic K[[t^2, t^3]] with K = F_p; nonzero nonunit ideals
  are M(i) = (t^i, t^{i+1}) and P(i, a) = (t^i + a t^{i+1}).

Ideal values are unbounded; a :class:`Window` fixes the truncation degree used for
enumeration and signals :class:`OutOfWindow` when a product leaves it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Union


class UsageError(ValueError):
    """Bad arguments: mixed ring instances, invalid parameters, too-small windows."""


class OutOfWindow(ArithmeticError):
    """A product whose degree exceeds the window bound.

    The exact (untruncated) ideal is kept on ``ideal`` so callers that only need a
    containment or inequality fact can still use it.
    """

    def __init__(self, ideal, bound: int):
        super().__init__(f"{ideal} lies beyond window bound {bound}")
        self.ideal = ideal
        self.bound = bound


class InvariantViolation(AssertionError):
    """Internal consistency failure; carries the offending data in the message."""


# ---------------------------------------------------------------------------
# ideal values


@dataclass(frozen=True)
class DvrIdeal:
    n: Optional[int]  # None is the zero ideal

    def __post_init__(self):
        if self.n is not None and self.n < 0:
            raise UsageError(f"negative exponent {self.n}")

    @property
    def is_zero(self) -> bool:
        return self.n is None

    @property
    def degree(self) -> int:
        return 0 if self.n is None else self.n

    def __str__(self):
        if self.n is None:
            return "0"
        if self.n == 0:
            return "R"
        return "P" if self.n == 1 else f"P^{self.n}"


@dataclass(frozen=True)
class DedekindIdeal:
    exps: Optional[tuple]  # None is the zero ideal

    def __post_init__(self):
        if self.exps is not None and any(e < 0 for e in self.exps):
            raise UsageError(f"negative exponent in {self.exps}")

    @property
    def is_zero(self) -> bool:
        return self.exps is None

    @property
    def degree(self) -> int:
        return 0 if self.exps is None else max(self.exps, default=0)

    def __str__(self):
        if self.exps is None:
            return "0"
        parts = []
        for k, e in enumerate(self.exps):
            if e:
                parts.append(prime_name(k) + ("" if e == 1 else f"^{e}"))
        return "".join(parts) or "R"


@dataclass(frozen=True)
class CuspIdeal:
    kind: str  # "R", "M", "P" or "0"
    i: int = 0
    a: int = 0

    def __post_init__(self):
        if self.kind not in ("R", "M", "P", "0"):
            raise UsageError(f"unknown ideal kind {self.kind!r}")
        if self.kind in ("M", "P") and self.i < 2:
            raise UsageError(f"{self.kind}({self.i}) needs degree >= 2")
        if self.kind != "P" and self.a != 0:
            raise UsageError("only P ideals carry a field element")
        if self.kind in ("R", "0") and self.i != 0:
            raise UsageError("unit and zero ideals carry no degree")

    @property
    def is_zero(self) -> bool:
        return self.kind == "0"

    @property
    def degree(self) -> int:
        return self.i

    def __str__(self):
        if self.kind == "M":
            return f"M({self.i})"
        if self.kind == "P":
            return f"P({self.i},{self.a})"
        return self.kind


Ideal = Union[DvrIdeal, DedekindIdeal, CuspIdeal]


def power(n: int) -> DvrIdeal:
    return DvrIdeal(n)


DVR_ZERO = DvrIdeal(None)
DED_ZERO = DedekindIdeal(None)


def exps(*e: int) -> DedekindIdeal:
    return DedekindIdeal(tuple(e))


UNIT = CuspIdeal("R")
CUSP_ZERO = CuspIdeal("0")


def M(i: int) -> CuspIdeal:
    return CuspIdeal("M", i)


def P(i: int, a: int) -> CuspIdeal:
    return CuspIdeal("P", i, a)


def prime_name(k: int) -> str:
    return ("P", "Q")[k] if k < 2 else f"P{k + 1}"


def parse_ideal(text: str):
    """Inverse of ``str`` for cusp and dvr ideal names (used by the CLI)."""
    import re

    text = text.strip()
    if text == "R":
        return UNIT
    if text == "0":
        return CUSP_ZERO
    if m := re.fullmatch(r"M\((\d+)\)", text):
        return M(int(m[1]))
    if m := re.fullmatch(r"P\((\d+),(\d+)\)", text):
        return P(int(m[1]), int(m[2]))
    raise UsageError(f"cannot parse ideal {text!r}")


# ---------------------------------------------------------------------------
# windows


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class Window:
    """A finite truncation of one ring instance.

    ``max_deg`` bounds the exponent (dvr), every exponent (ded) or the t-degree
    (cusp). ``p`` is the field characteristic of the cusp ring, ``n_primes`` the
    number of maximal ideals of the Dedekind domain.
    """

    family: str
    max_deg: int
    p: int = 2
    n_primes: int = 2

    def __post_init__(self):
        if self.family not in ("dvr", "ded", "cusp"):
            raise UsageError(f"unknown ring family {self.family!r}")
        if self.max_deg < 0:
            raise UsageError("window bound must be non-negative")
        if self.family == "cusp":
            if self.max_deg < 4:
                raise UsageError(f"cusp window needs max degree >= 4, got {self.max_deg}")
            if not _is_prime(self.p):
                raise UsageError(f"p={self.p} is not prime")
        if self.family == "ded" and self.n_primes < 1:
            raise UsageError("a Dedekind window needs at least one prime")

    # -- construction helpers ------------------------------------------------

    @property
    def unit(self):
        return {"dvr": power(0), "ded": DedekindIdeal((0,) * self.n_primes), "cusp": UNIT}[self.family]

    @property
    def zero(self):
        return {"dvr": DVR_ZERO, "ded": DED_ZERO, "cusp": CUSP_ZERO}[self.family]

    @property
    def field(self) -> frozenset:
        return frozenset(range(self.p))

    def __str__(self):
        if self.family == "cusp":
            return f"cusp(p={self.p},D={self.max_deg})"
        if self.family == "ded":
            return f"ded(primes={self.n_primes},D={self.max_deg})"
        return f"dvr(D={self.max_deg})"

    def check(self, *ideals) -> None:
        """Raise :class:`UsageError` unless every ideal belongs to this ring instance."""
        kind = {"dvr": DvrIdeal, "ded": DedekindIdeal, "cusp": CuspIdeal}[self.family]
        for I in ideals:
            if not isinstance(I, kind):
                raise UsageError(f"{I!r} is not an ideal of {self}")
            if isinstance(I, CuspIdeal) and I.kind == "P" and not 0 <= I.a < self.p:
                raise UsageError(f"{I} has a coefficient outside F_{self.p}")
            if isinstance(I, DedekindIdeal) and I.exps is not None and len(I.exps) != self.n_primes:
                raise UsageError(f"{I!r} has the wrong number of primes for {self}")

    def in_window(self, I) -> bool:
        return I.degree <= self.max_deg

    # -- lattice -------------------------------------------------------------

    def ideals(self) -> list:
        """All window ideals, largest first: a linear extension of reverse containment."""
        return list(self._ideals)

    @cached_property
    def _ideals(self) -> tuple:
        D = self.max_deg
        if self.family == "dvr":
            return tuple(power(n) for n in range(D + 1)) + (DVR_ZERO,)
        if self.family == "ded":
            from itertools import product as cartesian

            vecs = sorted(cartesian(range(D + 1), repeat=self.n_primes), key=lambda v: (sum(v), v))
            return tuple(DedekindIdeal(v) for v in vecs) + (DED_ZERO,)
        out = [UNIT]
        for d in range(2, D + 1):
            out.append(M(d))
            out.extend(P(d, a) for a in range(self.p))
        out.append(CUSP_ZERO)
        return tuple(out)

    def generators(self) -> list:
        """Principal ideals (b) of regular elements used to probe the (bI)_c = b I_c law."""
        if self.family == "dvr":
            return [power(1)] if self.max_deg >= 1 else []
        if self.family == "ded":
            gens = []
            for k in range(self.n_primes):
                v = [0] * self.n_primes
                v[k] = 1
                gens.append(DedekindIdeal(tuple(v)))
            return gens
        return [P(d, a) for d in range(2, self.max_deg + 1) for a in range(self.p)]

    def contains(self, I, J) -> bool:
        """True iff J is a subset of I."""
        self.check(I, J)
        return contains(I, J)

    def product(self, I, J):
        """The product ideal IJ; raises :class:`OutOfWindow` beyond the window."""
        self.check(I, J)
        K = product(I, J, self.p)
        if not self.in_window(K):
            raise OutOfWindow(K, self.max_deg)
        return K

    def intersect(self, I, J):
        self.check(I, J)
        return intersect(I, J)


# ---------------------------------------------------------------------------
# arithmetic (window independent)


def contains(I, J) -> bool:
    """True iff J is contained in I."""
    if type(I) is not type(J):
        raise UsageError(f"cannot compare {I!r} with {J!r}")
    if J.is_zero:
        return True
    if I.is_zero:
        return False
    if isinstance(I, DvrIdeal):
        return I.n <= J.n
    if isinstance(I, DedekindIdeal):
        if len(I.exps) != len(J.exps):
            raise UsageError(f"cannot compare {I!r} with {J!r}")
        return all(x <= y for x, y in zip(I.exps, J.exps))
    if I.kind == "R":
        return True
    if J.kind == "R":
        return False
    if I.kind == "M":
        return J.i >= I.i
    # I = P(i, a): contains t^m for m >= i + 2 and nothing else of degree i + 1
    if J.kind == "M":
        return J.i >= I.i + 2
    return (J.i == I.i and J.a == I.a) or J.i >= I.i + 2


def product(I, J, p: int = 2):
    if type(I) is not type(J):
        raise UsageError(f"cannot multiply {I!r} by {J!r}")
    if I.is_zero or J.is_zero:
        return I if I.is_zero else J
    if isinstance(I, DvrIdeal):
        return DvrIdeal(I.n + J.n)
    if isinstance(I, DedekindIdeal):
        if len(I.exps) != len(J.exps):
            raise UsageError(f"cannot multiply {I!r} by {J!r}")
        return DedekindIdeal(tuple(x + y for x, y in zip(I.exps, J.exps)))
    if I.kind == "R":
        return J
    if J.kind == "R":
        return I
    if I.kind == "P" and J.kind == "P":
        # (t^i + a t^{i+1})(t^j + b t^{j+1}) = t^{i+j} + (a+b) t^{i+j+1} + ...
        return P(I.i + J.i, (I.a + J.a) % p)
    return M(I.i + J.i)


def intersect(I, J):
    """The largest ideal contained in both."""
    if contains(I, J):
        return J
    if contains(J, I):
        return I
    if isinstance(I, DedekindIdeal):
        return DedekindIdeal(tuple(max(x, y) for x, y in zip(I.exps, J.exps)))
    if isinstance(I, CuspIdeal):
        # incomparable cusp pairs: M(i+1) vs P(i, a); P(i, a) vs P(i, b); P(i, a) vs P(i+1, b)
        lo, hi = sorted((I, J), key=lambda x: (x.i, x.kind))
        if lo.kind == "P" and hi.kind == "M" and hi.i == lo.i + 1:
            return M(lo.i + 2)
        if lo.kind == "P" and hi.kind == "P" and hi.i == lo.i:
            return M(lo.i + 2)
        if lo.kind == "P" and hi.kind == "P" and hi.i == lo.i + 1:
            return M(lo.i + 3)
    raise InvariantViolation(f"no intersection rule for {I} and {J}")


def integral_closure(I: CuspIdeal) -> CuspIdeal:
    """P(i, a) -> M(i); every other cusp ideal is integrally closed."""
    if not isinstance(I, CuspIdeal):
        raise UsageError(f"integral closure is only modelled for cusp ideals, got {I!r}")
    return M(I.i) if I.kind == "P" else I
