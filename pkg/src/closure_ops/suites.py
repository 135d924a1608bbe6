"""Each verification suite as a function from a window to report records."""

from __future__ import annotations

from .analysis import (
    classify,
    compose,
    is_exceptional,
    noncommutativity_witnesses,
    prime_scan,
    verify_act_structure,
)
from .axioms import check_axiom, lattice, to_raw
from .catalog import catalog, closure_only_catalog, floor_in_window, identity
from .enumeration import (
    enumerate_semiprime,
    literal_int_mismatches,
    match_classification,
    propagation_check,
    zero_dichotomy,
)
from .ideals import M, UsageError, Window, power
from .ops import BoundedBox, DvrF, DvrG, JumpG
from .report import Report
from .tables import verify_tables

# the unpruned cross-check filters every closure map; above this many ideals it is skipped
CROSS_CHECK_MAX_IDEALS = 20


def _axiom_fields(reports):
    return {f"({r.axiom})": f"{r.status} checked={r.checked} skipped={r.skipped}" for r in reports}


def axioms_suite(w: Window, rep: Report):
    if w.family == "cusp":
        from .subspace import oracle_mismatches

        for rel, (n, bad) in oracle_mismatches(w).items():
            rep.add("axioms", f"oracle:{rel}", "fail" if bad else "pass", pairs=n, mismatches=len(bad),
                    witness=bad[0] if bad else "")

    for op in catalog(w).ops:
        rs = [check_axiom(to_raw(op, w), x) for x in "abcd"]
        bad = next((r for r in rs if not r.ok), None)
        rep.add("axioms", f"semiprime:{op}", "fail" if bad else "pass", **_axiom_fields(rs),
                witness=str(bad.witness or "") if bad else "")

    # closure operations that must fail the product law
    for op in closure_only_catalog(w):
        m = to_raw(op, w)
        rs = [check_axiom(m, x) for x in "abcd"]
        ok = all(r.ok for r in rs[:3]) and rs[3].status == "fail"
        rep.add("axioms", f"closure-only:{op}", "pass" if ok else "fail", **_axiom_fields(rs),
                witness=str(rs[3].witness or ""))

    if w.family == "dvr":
        _dvr_counterexamples(w, rep)


def _dvr_counterexamples(w: Window, rep: Report):
    """Compositions that leave the closure operations (f after a jump, g after f)."""
    D = w.max_deg
    for n in range(1, D + 1):
        for m in range(max(2, n + 1), D + 1):
            got = classify(compose(DvrF(n), JumpG(m), w))
            want = f"at ({power(m)}): f={power(n)}, f(f)={power(0)} is not idempotent"
            ok = got.kind == "not_closure" and got.axiom == "c" and str(got.witness) == want
            rep.add("axioms", f"counterexample:{DvrF(n)} o {JumpG(m)}", "pass" if ok else "fail",
                    expected=f"NotClosure(c: {want})", got=str(got))
    for n in range(0, D + 1):
        for m in range(n + 1, D + 1):
            got = classify(compose(DvrG(m), DvrF(n), w))
            want = f"at (0): f={power(m)}, f(f)={power(n)} is not idempotent"
            ok = got.kind == "not_closure" and got.axiom == "c" and str(got.witness) == want
            rep.add("axioms", f"counterexample:{DvrG(m)} o {DvrF(n)}", "pass" if ok else "fail",
                    expected=f"NotClosure(c: {want})", got=str(got))


def tables_suite(w: Window, rep: Report, mode: str = "corrected"):
    from .tables import all_tables

    # row notes once, not on every passing record
    for tab in all_tables(w.family):
        for row in tab.rows_for(mode):
            if row.note:
                rep.add("tables", row.label, "info", note=row.note)
    for tr in verify_tables(w, mode):
        for c in tr.checks:
            check = c.row if c.row != "-" else f"{c.table}:uncovered"
            if c.status == "pass":
                rep.add("tables", check, "pass", table=c.table, order=c.order, params=c.params,
                        expected=c.expected)
            elif c.status == "uncovered":
                rep.add("tables", check, "uncovered", table=c.table, order=c.order, params=c.params, got=c.got)
            else:
                rep.add("tables", check, c.status, table=c.table, order=c.order, params=c.params,
                        expr=c.expr, expected=c.expected, got=c.got, witness=c.witness, note=c.note)
        for tid, expr, params, preds in tr.conflicts:
            rep.add("tables", f"{tid}:conflict", "fail", expr=expr, params=params,
                    rows=" ".join(sorted(preds)))
        for label in tr.not_instantiable:
            rep.add("tables", label, "not-instantiable", window=str(w))


def act_suite(w: Window, rep: Report):
    sr = verify_act_structure(w)
    for c in sr.checks:
        rep.add("act", c.name, "pass" if c.ok else "fail", checked=c.checked, failures=c.failures,
                witness=c.witness)


def enumeration_suite(w: Window, rep: Report):
    found = enumerate_semiprime(w)
    rep.add("enumeration", "semiprime maps found", "info", count=len(found))

    if len(lattice(w)) <= CROSS_CHECK_MAX_IDEALS:
        filtered = enumerate_semiprime(w, prune=False)
        same = [m.indices() for m in filtered] == [m.indices() for m in found]
        rep.add("enumeration", "pruned search equals filtered closure maps", "pass" if same else "fail",
                pruned=len(found), filtered=len(filtered))
    else:
        rep.add("enumeration", "pruned search equals filtered closure maps", "skipped",
                reason=f"more than {CROSS_CHECK_MAX_IDEALS} ideals")
    prop = enumerate_semiprime(w, propagate=True)
    same = [m.indices() for m in prop] == [m.indices() for m in found]
    rep.add("enumeration", "propagation pruning changes nothing", "pass" if same else "fail",
            plain=len(found), propagated=len(prop))

    tables = {m.indices() for m in found}
    for op in closure_only_catalog(w):
        hit = to_raw(op, w).indices() in tables
        rep.add("enumeration", f"excluded:{op}", "fail" if hit else "pass")

    diff = match_classification(found, w)
    rep.add("enumeration", "catalog members found", "pass" if not diff.expected_missing else "fail",
            matched=diff.matched, missing=len(diff.expected_missing))
    for op in diff.expected_missing:
        rep.add("enumeration", f"missing:{op}", "fail")
    for m in diff.found_unexpected:
        rep.add("enumeration", "unexpected semiprime map", "finding", table=m.describe(),
                note="extends two degrees further; not in the catalog")
    for m in diff.boundary:
        rep.add("enumeration", "boundary map", "info", table=m.describe(),
                note="does not extend two degrees; truncation artifact")
    if diff.aliased:
        rep.add("enumeration", "window aliases", "info", count=len(diff.aliased),
                example=f"{diff.aliased[0][0]} = {diff.aliased[0][1]}")

    pr = propagation_check(found, w)
    rep.add("enumeration", "constancy propagation", "pass" if pr.ok else "fail", maps=pr.checked,
            boundary_skipped=pr.boundary, triggered=pr.triggered, violations=len(pr.violations),
            witness=pr.violations[0][2].describe() if pr.violations else "")
    bad = [m for m in found if not zero_dichotomy(m)]
    rep.add("enumeration", "zero image dichotomy", "fail" if bad else "pass", maps=len(found),
            witness=bad[0].describe() if bad else "")

    if w.family == "cusp":
        mm = literal_int_mismatches(found, w)
        total = [x for x in mm if x[4]]
        rep.add("enumeration", "int map: displayed form agrees where it is total", "fail" if total else "pass",
                mismatches=len(total))
        if mm:
            i, S, T, m, _ = mm[0]
            rep.add("enumeration", "int map: displayed form is partial", "info", matches_other_maps=len(mm),
                    example=f"i={i} S={sorted(S)} T={sorted(T)} also matches {classify(m)}")


def prime_scan_suite(w: Window, rep: Report):
    ps = prime_scan(w)
    e = str(identity(w))
    for op in ps.prime:
        rep.add("prime-scan", f"prime:{op}", "pass" if str(op) == e else "fail",
                aliases=" ".join(map(str, ps.aliases.get(op, ()))))
    for op, r in ps.witnesses.items():
        rep.add("prime-scan", f"not prime:{op}", "pass", witness=str(r.witness))
    rep.add("prime-scan", "only the identity is prime", "pass" if ps.only_identity else "fail",
            prime=" ".join(map(str, ps.prime)))


def exceptional_suite(w: Window, rep: Report):
    if w.family != "cusp":
        rep.add("exceptional", "exceptional detection", "skipped", reason="cusp ring only")
        return
    for op in catalog(w).ops:
        if not floor_in_window(op, w):
            continue
        got, chain = is_exceptional(op, w)
        want = isinstance(op, BoundedBox) and op.exceptional
        rep.add("exceptional", str(op), "pass" if got == want else "fail", expected=want, got=got,
                chain=" < ".join(map(str, chain)) if chain else "")
    try:
        wits = noncommutativity_witnesses(w)
    except UsageError as err:  # the m = 6 parameters need D >= 7
        rep.add("exceptional", "non-commuting pairs", "not-instantiable", reason=str(err))
        return
    m = 6
    for k, c in enumerate(wits, 1):
        ok = (c.forward, c.backward) == (M(m - 2), M(m - 1))
        rep.add("exceptional", f"non-commuting pair {k}", "pass" if ok else "fail", witness=str(c))


SUITE_FUNCS = {
    "axioms": axioms_suite,
    "tables": tables_suite,
    "act": act_suite,
    "enumeration": enumeration_suite,
    "prime-scan": prime_scan_suite,
    "exceptional": exceptional_suite,
}


def run(cfg) -> Report:
    """Run the selected suites of a :class:`~closure_ops.config.SuiteConfig`."""
    w = cfg.window
    rep = Report(cfg.as_dict())
    for name in cfg.selected():
        if name == "tables":
            tables_suite(w, rep, cfg.mode)
        else:
            SUITE_FUNCS[name](w, rep)
    return rep
