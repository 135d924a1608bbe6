"""Finite tables of ideal maps and the axiom checks run on them.

The five properties checked are

    (a) I <= f(I)              (b) I <= J  =>  f(I) <= f(J)      (c) f(f(I)) = f(I)
    (d) f(I) f(J) <= f(IJ)     (e) f(bI) = b f(I) for principal (b)

over every window instance. Instances whose product leaves the window are counted
as skipped; a check with no executed instance reports ``error`` rather than pass.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .ideals import OutOfWindow, Window, contains, product

AXIOMS = ("a", "b", "c", "d", "e")


class Lattice:
    """Index-level view of a window: containment matrix and product table."""

    def __init__(self, w: Window):
        self.window = w
        self.ideals = w.ideals()
        self.index = {I: k for k, I in enumerate(self.ideals)}
        n = len(self.ideals)
        # sub[j][k]: ideals[j] is contained in ideals[k]
        self.sub = [[contains(self.ideals[k], self.ideals[j]) for k in range(n)] for j in range(n)]
        self.prod = [[self._prod_index(I, J) for J in self.ideals] for I in self.ideals]
        self.supersets = [[k for k in range(n) if self.sub[j][k]] for j in range(n)]
        self.zero = self.index[w.zero]
        self.unit = self.index[w.unit]

    def _prod_index(self, I, J):
        try:
            return self.index[self.window.product(I, J)]
        except OutOfWindow:
            return None

    def __len__(self):
        return len(self.ideals)

    def exact_product(self, I, J):
        """The untruncated product, for containment facts beyond the window."""
        return product(I, J, self.window.p)


@lru_cache(maxsize=None)
def lattice(w: Window) -> Lattice:
    return Lattice(w)


@dataclass(frozen=True)
class RawMap:
    """A total map on the window ideals, stored in window order."""

    window: Window
    table: tuple

    def __post_init__(self):
        if len(self.table) != len(lattice(self.window)):
            raise ValueError("RawMap table must cover every window ideal")

    def __call__(self, I):
        return self.table[lattice(self.window).index[I]]

    def items(self):
        return zip(lattice(self.window).ideals, self.table)

    def indices(self) -> tuple:
        idx = lattice(self.window).index
        return tuple(idx[J] for J in self.table)

    def then(self, other: "RawMap") -> "RawMap":
        """Pointwise ``other o self``."""
        return RawMap(self.window, tuple(other(J) for J in self.table))

    def describe(self) -> str:
        return " ".join(f"{I}->{J}" for I, J in self.items())


def to_raw(op, w: Window) -> RawMap:
    """Tabulate ``op`` over the window; every image must itself be a window ideal."""
    op.validate(w)
    lat = lattice(w)
    table = tuple(op(I) for I in lat.ideals)
    for I, J in zip(lat.ideals, table):
        if J not in lat.index:
            from .ideals import UsageError

            raise UsageError(f"{op} sends {I} to {J}, outside {w}")
    return RawMap(w, table)


def from_indices(w: Window, idx) -> RawMap:
    lat = lattice(w)
    return RawMap(w, tuple(lat.ideals[k] for k in idx))


@dataclass(frozen=True)
class Witness:
    ideals: tuple
    got: str
    relation: str

    def __str__(self):
        return f"at ({', '.join(map(str, self.ideals))}): {self.got} {self.relation}"


@dataclass
class AxiomReport:
    axiom: str
    status: str  # "pass" | "fail" | "error"
    checked: int = 0
    skipped: int = 0
    witness: Optional[Witness] = None

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def __str__(self):
        tail = f" {self.witness}" if self.witness else ""
        return f"({self.axiom}) {self.status} checked={self.checked} skipped={self.skipped}{tail}"


def _finish(axiom, checked, skipped, witness):
    if witness is not None:
        return AxiomReport(axiom, "fail", checked, skipped, witness)
    if checked == 0:
        return AxiomReport(axiom, "error", checked, skipped)
    return AxiomReport(axiom, "pass", checked, skipped)


def check_axiom(f: RawMap, which: str) -> AxiomReport:
    lat = lattice(f.window)
    ids = lat.ideals
    img = f.indices()
    n = len(ids)
    checked = skipped = 0
    if which == "a":
        for k in range(n):
            checked += 1
            if not lat.sub[k][img[k]]:
                return _finish("a", checked, 0, Witness((ids[k],), f"f={ids[img[k]]}", "does not contain the ideal"))
    elif which == "b":
        for j in range(n):
            for k in range(n):
                if j != k and lat.sub[j][k]:
                    checked += 1
                    if not lat.sub[img[j]][img[k]]:
                        return _finish("b", checked, 0, Witness(
                            (ids[j], ids[k]), f"f={ids[img[j]]}, f={ids[img[k]]}", "breaks monotonicity"))
    elif which == "c":
        for k in range(n):
            checked += 1
            if img[img[k]] != img[k]:
                return _finish("c", checked, 0, Witness(
                    (ids[k],), f"f={ids[img[k]]}, f(f)={ids[img[img[k]]]}", "is not idempotent"))
    elif which == "d":
        for j in range(n):
            for k in range(j, n):
                c = lat.prod[j][k]
                if c is None:
                    skipped += 1
                    continue
                checked += 1
                fj, fk = ids[img[j]], ids[img[k]]
                p = lat.prod[img[j]][img[k]]
                ok = lat.sub[p][img[c]] if p is not None else contains(ids[img[c]], lat.exact_product(fj, fk))
                if not ok:
                    prod_txt = ids[p] if p is not None else lat.exact_product(fj, fk)
                    return _finish("d", checked, skipped, Witness(
                        (ids[j], ids[k]), f"f*f={fj}*{fk}={prod_txt}", f"not inside f(IJ)={ids[img[c]]}"))
    elif which == "e":
        for b in f.window.generators():
            kb = lat.index[b]
            for k in range(n):
                c = lat.prod[kb][k]
                if c is None:
                    skipped += 1
                    continue
                checked += 1
                bf = lat.prod[kb][img[k]]
                # an out-of-window b*f(I) is a nonzero ideal beyond the window, so it
                # differs from the in-window f(bI)
                if bf != img[c]:
                    bf_txt = ids[bf] if bf is not None else lat.exact_product(b, ids[img[k]])
                    return _finish("e", checked, skipped, Witness(
                        (b, ids[k]), f"b*f(I)={bf_txt}", f"!= f(bI)={ids[img[c]]}"))
    else:
        raise ValueError(f"unknown axiom {which!r}")
    return _finish(which, checked, skipped, None)


def is_closure(f: RawMap) -> list:
    return [check_axiom(f, x) for x in "abc"]


def is_semiprime(f: RawMap) -> bool:
    return all(check_axiom(f, x).ok for x in "abcd")


def is_bounded(f: RawMap):
    """Return ``(True, I0)`` if some I0 absorbs every nonzero window ideal below it.

    At least two nonzero window ideals must lie inside I0 (I0 itself and one more),
    so the window floor cannot make an operation look bounded vacuously.
    """
    lat = lattice(f.window)
    img = f.indices()
    for k0 in range(len(lat)):
        if k0 == lat.zero:
            continue
        below = [j for j in range(len(lat)) if j != lat.zero and lat.sub[j][k0]]
        if len(below) >= 2 and all(img[j] == k0 for j in below):
            return True, lat.ideals[k0]
    return False, None
