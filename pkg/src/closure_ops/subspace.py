"""Truncated power-series oracle for K[[t^2, t^3]] over F_p.

An ideal is represented by its image in F_p[t]/(t^{D+1}) as a row-reduced basis.
This is deliberately independent of the closed-form rules in :mod:`ideals`; the
test suite checks the two against each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ideals import CUSP_ZERO, M, P, UNIT, CuspIdeal, InvariantViolation, UsageError


def rref(rows, p: int) -> tuple:
    """Reduced row echelon form over F_p; zero rows dropped, pivots increasing."""
    work = [[x % p for x in r] for r in rows]
    out = []
    ncols = len(work[0]) if work else 0
    col = 0
    while work and col < ncols:
        pivot = next((r for r in work if r[col]), None)
        if pivot is None:
            col += 1
            continue
        work.remove(pivot)
        inv = pow(pivot[col], p - 2, p)
        pivot = [x * inv % p for x in pivot]
        work = [[(x - r[col] * y) % p for x, y in zip(r, pivot)] for r in work]
        out = [[(x - r[col] * y) % p for x, y in zip(r, pivot)] for r in out]
        out.append(pivot)
        work = [r for r in work if any(r)]
        col += 1
    return tuple(tuple(r) for r in out)


@dataclass(frozen=True)
class Subspace:
    basis: tuple  # rows in reduced echelon form, indexed by degree 0..D
    D: int
    p: int

    def __post_init__(self):
        pivots = [self.pivot(r) for r in self.basis]
        if any(len(r) != self.D + 1 for r in self.basis) or pivots != sorted(set(pivots)):
            raise InvariantViolation(f"basis not in echelon form: {self.basis}")

    @staticmethod
    def pivot(row) -> int:
        return next(k for k, x in enumerate(row) if x)

    @classmethod
    def span(cls, rows, D: int, p: int) -> "Subspace":
        return cls(rref(list(rows), p), D, p)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> list:
        return [self.pivot(r) for r in self.basis]

    def _same(self, other):
        if (self.D, self.p) != (other.D, other.p):
            raise UsageError("subspaces live in different truncations")

    def contains(self, other: "Subspace") -> bool:
        self._same(other)
        return Subspace.span(self.basis + other.basis, self.D, self.p).dim == self.dim

    def __add__(self, other):
        self._same(other)
        return Subspace.span(self.basis + other.basis, self.D, self.p)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: reduce [u | u] and [v | 0]; rows with zero left half span the meet."""
        self._same(other)
        n = self.D + 1
        zero = (0,) * n
        rows = [r + r for r in self.basis] + [r + zero for r in other.basis]
        red = rref(rows, self.p) if rows else ()
        meet = [r[n:] for r in red if not any(r[:n])]
        return Subspace.span(meet, self.D, self.p)

    def times(self, other: "Subspace") -> "Subspace":
        """Span of pairwise products, truncated at degree D."""
        self._same(other)
        rows = [_mul(u, v, self.p) for u in self.basis for v in other.basis]
        return Subspace.span(rows, self.D, self.p)

    def is_ideal(self) -> bool:
        """Closed under multiplication by the monomials 1, t^2, t^3, ... of the ring."""
        return all(self.contains(Subspace.span([_shift(r, s) for r in self.basis], self.D, self.p))
                   for s in [0] + list(range(2, self.D + 1)))

    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.basis)

    @classmethod
    def from_text(cls, text: str, D: int, p: int) -> "Subspace":
        rows = [tuple(int(x) for x in line.split()) for line in text.splitlines() if line.strip()]
        return cls.span(rows, D, p)


def _mul(u, v, p):
    n = len(u)
    out = [0] * n
    for i, x in enumerate(u):
        if x:
            for j in range(n - i):
                out[i + j] = (out[i + j] + x * v[j]) % p
    return tuple(out)


def _shift(u, s):
    return (0,) * s + tuple(u[: len(u) - s])


def _generators(I: CuspIdeal, D: int):
    def mono(*coeffs):
        row = [0] * (D + 1)
        for deg, c in coeffs:
            row[deg] = c
        return tuple(row)

    if I.kind == "0":
        return []
    if I.kind == "R":
        return [mono((0, 1))]
    if I.kind == "M":
        return [mono((I.i, 1)), mono((I.i + 1, 1))]
    return [mono((I.i, 1), (I.i + 1, I.a))]


def to_subspace(I: CuspIdeal, D: int, p: int) -> Subspace:
    """Row-reduced span of g * t^s, s in {0, 2, 3, ...}, over the generators g of I."""
    if not isinstance(I, CuspIdeal):
        raise UsageError(f"the subspace oracle is only defined for cusp ideals, got {I!r}")
    if not I.is_zero and D < I.degree + 2:
        raise UsageError(f"truncation degree {D} too small for {I} (need >= {I.degree + 2})")
    rows = [_shift(g, s) for g in _generators(I, D) for s in [0] + list(range(2, D + 1))]
    return Subspace.span(rows, D, p)


def from_subspace(V: Subspace) -> CuspIdeal:
    """Name the cusp ideal whose truncation is V, or raise :class:`InvariantViolation`.

    Only valid when the ideal contains t^{D+1}K[[t]] (degree at most D - 1), which is
    what callers guarantee by truncating generously.
    """
    D = V.D
    if V.dim == 0:
        return CUSP_ZERO
    piv = V.pivots
    if piv[0] == 0:
        if piv == [0] + list(range(2, D + 1)):
            return UNIT
    else:
        n = piv[0]
        if piv == list(range(n, D + 1)):
            return M(n)
        if piv == [n] + list(range(n + 2, D + 1)) and n + 1 <= D:
            lead = V.basis[0]
            if all(lead[k] == 0 for k in range(n + 2, D + 1)):
                return P(n, lead[n + 1])
    raise InvariantViolation(f"subspace is not a cusp ideal:\n{V.to_text()}")


def colength(J: CuspIdeal, I: CuspIdeal, p: int = 2) -> int:
    """Length of I/J, i.e. dim_F_p of the quotient, for nonzero J inside I."""
    if J.is_zero or I.is_zero:
        raise UsageError("colength needs nonzero ideals")
    D = max(I.degree, J.degree) + 2
    VI, VJ = to_subspace(I, D, p), to_subspace(J, D, p)
    if not VI.contains(VJ):
        raise UsageError(f"{J} is not contained in {I}")
    return VI.dim - VJ.dim


def oracle_mismatches(w) -> dict:
    """Compare contains / product / intersect on every pair of window ideals with the
    subspace computation. Returns {relation: (checked, [mismatch descriptions])}."""
    from .ideals import contains, intersect, product

    if w.family != "cusp":
        raise UsageError("the subspace oracle only models the cusp ring")
    D = 2 * w.max_deg + 2  # room for every pairwise product
    ideals = w.ideals()
    V = {I: to_subspace(I, D, w.p) for I in ideals}
    out = {"contains": (0, []), "product": (0, []), "intersect": (0, [])}

    def record(rel, bad):
        n, errs = out[rel]
        out[rel] = (n + 1, errs + ([bad] if bad else []))

    for I in ideals:
        for J in ideals:
            want = V[I].contains(V[J])
            got = contains(I, J)
            record("contains", None if want == got else f"contains({I},{J}) = {got}, oracle {want}")
            want = from_subspace(V[I].times(V[J]))
            got = product(I, J, w.p)
            record("product", None if want == got else f"{I}*{J} = {got}, oracle {want}")
            want = from_subspace(V[I].intersect(V[J]))
            got = intersect(I, J)
            record("intersect", None if want == got else f"{I}&{J} = {got}, oracle {want}")
    return out
