"""Brute-force discovery of closure and semiprime maps on a window.

The search assigns images in window order (largest ideal first). Each candidate
image must contain the ideal, respect monotonicity against every assigned larger
ideal and be consistent with idempotence. Optional pruning adds the product law
(d) and the constancy-propagation rules; both are validated by comparing against
unpruned runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .axioms import RawMap, from_indices, lattice
from .catalog import catalog
from .ideals import UsageError, Window, contains

MAX_IDEALS = 40


class SearchTooLarge(UsageError):
    pass


def _guard(w: Window):
    n = len(lattice(w))
    if n > MAX_IDEALS:
        raise SearchTooLarge(f"{w} has {n} ideals; the search is capped at {MAX_IDEALS}")


def _product_pairs(lat):
    """For each ideal k, the pairs (a, b) of proper nonzero ideals with ab = k."""
    n = len(lat)
    pairs = [[] for _ in range(n)]
    skip = (lat.zero, lat.unit)
    for a in range(n):
        for b in range(a, n):
            c = lat.prod[a][b]
            if c is not None and a not in skip and b not in skip:
                pairs[c].append((a, b))
    return pairs


def _contains_product(lat, x, fa, fb):
    p = lat.prod[fa][fb]
    if p is not None:
        return lat.sub[p][x]
    return contains(lat.ideals[x], lat.exact_product(lat.ideals[fa], lat.ideals[fb]))


def _propagation_triggers(w: Window, lat):
    """Index pairs (lo, hi): if f(lo) == f(hi) with hi assigned later, everything
    nonzero inside the common image is sent to it."""
    from .ideals import M, power

    out = {}
    if w.family == "dvr":
        for i in range(w.max_deg):
            out.setdefault(lat.index[power(i + 1)], []).append(lat.index[power(i)])
    elif w.family == "cusp":
        for j in range(2, w.max_deg - 1):
            out.setdefault(lat.index[M(j + 2)], []).append(lat.index[M(j)])
    return out


def search(w: Window, semiprime: bool = False, propagate: bool = False, fixed: dict | None = None):
    """Yield index tables of every map satisfying (a)-(c) [and (d)] on the window.

    ``fixed`` pins the images of some indices (used to test extendability).
    """
    _guard(w)
    lat = lattice(w)
    n = len(lat)
    sub = lat.sub
    pairs = _product_pairs(lat) if semiprime else None
    triggers = _propagation_triggers(w, lat) if propagate else {}
    above = [[j for j in range(k) if sub[k][j]] for k in range(n)]
    cands = [sorted(lat.supersets[k], reverse=True) for k in range(n)]
    f = [None] * n
    pointed = [0] * n  # how many assigned ideals have this ideal as image
    absorb = []  # images that must absorb everything nonzero beneath them

    def ok(k, x):
        if x != k and f[x] != x:
            return False
        if x != k and pointed[k]:
            return False
        for j in above[k]:
            if not sub[x][f[j]]:
                return False
        if pairs is not None:
            for a, b in pairs[k]:
                if not _contains_product(lat, x, f[a], f[b]):
                    return False
        return True

    def new_absorbers(k, x):
        added = []
        for lo in triggers.get(k, ()):
            if f[lo] == x and x not in absorb and x not in added:
                # every assigned nonzero ideal inside x must already map to x
                if any(j != lat.zero and sub[j][x] and f[j] != x for j in range(k + 1)):
                    return None
                added.append(x)
        return added

    def rec(k):
        if k == n:
            yield tuple(f)
            return
        options = cands[k]
        if fixed is not None and k in fixed:
            options = [fixed[k]] if fixed[k] in options else []
        if k != lat.zero:
            forced = [X for X in absorb if sub[k][X]]
            if forced:
                options = [X for X in options if X == forced[0]] if len(set(forced)) == 1 else []
        for x in options:
            if not ok(k, x):
                continue
            f[k] = x
            pointed[x] += 1
            added = new_absorbers(k, x) if triggers else []
            if added is not None:
                absorb.extend(added)
                yield from rec(k + 1)
                del absorb[len(absorb) - len(added):]
            pointed[x] -= 1
            f[k] = None

    yield from rec(0)


def enumerate_closure_maps(w: Window):
    """Stream every closure map (axioms a-c) on the window, in deterministic order."""
    for t in search(w):
        yield from_indices(w, t)


def enumerate_semiprime(w: Window, prune: bool = True, propagate: bool = False) -> list:
    """All window maps satisfying (a)-(d).

    ``prune=False`` filters the closure stream instead of pruning on (d) during the
    search; the two must agree.
    """
    if prune:
        return [from_indices(w, t) for t in search(w, semiprime=True, propagate=propagate)]
    from .axioms import check_axiom

    return [m for m in enumerate_closure_maps(w) if check_axiom(m, "d").status != "fail"]


def brute_force_extensive(w: Window):
    """Unpruned oracle: every extensive map, filtered by (b) and (c). Tiny windows only."""
    from itertools import product as cartesian

    from .axioms import check_axiom

    lat = lattice(w)
    if len(lat) > 8:
        raise SearchTooLarge("brute force is for windows with at most 8 ideals")
    for t in cartesian(*lat.supersets):
        m = from_indices(w, t)
        if check_axiom(m, "b").ok and check_axiom(m, "c").ok:
            yield m


def extends_to(m: RawMap, bigger: Window) -> bool:
    """Whether some semiprime map on ``bigger`` restricts to ``m``."""
    big = lattice(bigger)
    fixed = {}
    for I, J in m.items():
        if I not in big.index or J not in big.index:
            raise UsageError(f"{bigger} does not extend {m.window}")
        fixed[big.index[I]] = big.index[J]
    return next(search(bigger, semiprime=True, fixed=fixed), None) is not None


@dataclass
class ClassificationDiff:
    window: Window
    matched: int = 0
    found_unexpected: list = field(default_factory=list)  # RawMaps that extend to a larger window
    boundary: list = field(default_factory=list)  # RawMaps that do not extend: truncation artifacts
    expected_missing: list = field(default_factory=list)
    aliased: list = field(default_factory=list)

    @property
    def empty(self) -> bool:
        return not self.found_unexpected and not self.expected_missing


def match_classification(found, w: Window, margin: int = 2) -> ClassificationDiff:
    """Compare enumerated maps with the family catalog of the window.

    Maps outside the catalog are split by whether they extend to a window ``margin``
    degrees larger: those that do are findings, those that do not are artifacts of
    the truncation.
    """
    cat = catalog(w)
    diff = ClassificationDiff(w, aliased=cat.aliased())
    seen = set()
    bigger = Window(w.family, w.max_deg + margin, w.p, w.n_primes)
    for m in found:
        t = m.indices()
        if t in cat.by_table:
            diff.matched += 1
            seen.add(t)
        elif extends_to(m, bigger):
            diff.found_unexpected.append(m)
        else:
            diff.boundary.append(m)
    diff.expected_missing = [ops[0] for t, ops in cat.by_table.items() if t not in seen]
    return diff


# ---------------------------------------------------------------------------
# constancy propagation and the zero dichotomy, checked over enumerated maps


@dataclass
class PropagationReport:
    window: Window
    checked: int = 0
    boundary: int = 0  # maps that do not extend; the rules are not applied to them
    triggered: int = 0
    violations: list = field(default_factory=list)  # (rule, index, RawMap)

    @property
    def ok(self) -> bool:
        return not self.violations and self.checked > 0


def _dvr_rules(m, D):
    from .ideals import power

    for i in range(D):
        J = m(power(i))
        if J != m(power(i + 1)):
            continue
        # constant on [i, i+1]: some j <= i has f(P^k) = P^j for every j <= k <= D
        ok = not J.is_zero and J.n <= i and all(m(power(k)) == J for k in range(J.n, D + 1))
        yield "constant interval", i, ok


def _cusp_rules(m, D, margin):
    from .axioms import is_bounded
    from .ideals import M

    bounded = is_bounded(m)[0]
    top = D - margin  # trigger ideals stay clear of the floor
    for j in range(2, top + 1):
        if j + 2 <= top and m(M(j + 2)) == M(j):
            yield "M(j) = f(M(j+2))", j, bounded
        if j + 2 <= top and m(M(j)) == m(M(j + 2)):
            yield "f(M(j)) = f(M(j+2))", j, bounded
        if j + 1 <= top and m(M(j)) == m(M(j + 1)):
            yield "f(M(j)) = f(M(j+1))", j, bounded


def propagation_check(found, w: Window, margin: int = 2) -> PropagationReport:
    """Constancy propagation over enumerated semiprime maps.

    dvr: a map constant on two consecutive powers is constant from some P^j on.
    cusp: any of the three constancy triggers forces the map to be bounded. Triggers
    use ideals at least ``margin`` degrees above the floor, and maps that do not
    extend ``margin`` degrees are counted as boundary and skipped (their lower
    values are truncation artifacts).
    """
    rep = PropagationReport(w)
    bigger = Window(w.family, w.max_deg + margin, w.p, w.n_primes)
    for m in found:
        if w.family == "cusp" and not extends_to(m, bigger):
            rep.boundary += 1
            continue
        rep.checked += 1
        if w.family == "dvr":
            rules = _dvr_rules(m, w.max_deg)
        elif w.family == "cusp":
            rules = _cusp_rules(m, w.max_deg, margin)
        else:
            rules = ()
        for rule, j, ok in rules:
            rep.triggered += 1
            if not ok:
                rep.violations.append((rule, j, m))
    return rep


def zero_dichotomy(m: RawMap) -> bool:
    """f(0) is 0, or an ideal J that every nonzero window ideal inside J is sent to.

    By monotonicity such a J is then the smallest image of the map.
    """
    lat = lattice(m.window)
    z = lat.index[m(m.window.zero)]
    if z == lat.zero:
        return True
    img = m.indices()
    return all(img[k] == z for k in range(len(lat)) if k != lat.zero and lat.sub[k][z])


def literal_int_partial(i: int, S, T, w: Window) -> dict:
    """The unbounded int map as it reads in its displayed classification form.

    That form fixes I when I contains some P(i,a), a not in S, or some P(i+1,b),
    b not in T, and sends I to its integral closure when I lies in M(i+2) or is one
    of the named principal ideals. Ideals matching neither case are left out.
    """
    from .ideals import M, P, contains, integral_closure

    K = w.field
    out = {}
    for I in w.ideals():
        keep = any(contains(I, P(i, a)) for a in K - S) or any(contains(I, P(i + 1, b)) for b in K - T)
        close = contains(M(i + 2), I) or I in [P(i, a) for a in S] + [P(i + 1, b) for b in T]
        if keep and close:
            raise AssertionError(f"the two cases overlap at {I}")
        if keep:
            out[I] = I
        elif close:
            out[I] = I if I.is_zero else integral_closure(I)
    return out


def literal_int_mismatches(found, w: Window) -> list:
    """Maps agreeing with some literal int partial table but not equal to the int op
    with the same parameters. Returns (i, S, T, RawMap, total) tuples, ``total``
    telling whether the literal form covered every window ideal."""
    from .catalog import subsets
    from .ops import IntUnbounded
    from .axioms import to_raw

    out = []
    for i in range(2, w.max_deg + 1):
        for S in subsets(w.field, nonempty=True):
            for T in subsets(w.field):
                part = literal_int_partial(i, S, T, w)
                total = len(part) == len(lattice(w))
                ref = to_raw(IntUnbounded(i, S, T), w)
                for m in found:
                    if m != ref and all(m(I) == J for I, J in part.items()):
                        out.append((i, S, T, m, total))
    return out
