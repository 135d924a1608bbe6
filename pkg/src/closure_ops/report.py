"""Versioned line-oriented reports.

Structured form, one record per line, fields tab separated::

    closure-ops-report	version=1
    config	ring=cusp	max=6	p=2	...
    record	suite=tables	check=M1.1	status=pass	params=...	expected=...	got=...
    summary	pass=10	fail=0	...	exit=0

Values escape backslash, tab and newline, so every record stays on one line and
the text parses back exactly. Nothing time or host dependent is written.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

FORMAT = "closure-ops-report"
VERSION = 1

# statuses that make a run exit non-zero
FAILING = ("fail", "finding", "error")
STATUSES = ("pass", "fail", "finding", "error", "uncovered", "not-instantiable", "skipped", "info")

EXIT_OK, EXIT_FINDINGS, EXIT_USAGE = 0, 2, 64


def _esc(v) -> str:
    return str(v).replace("\\", "\\\\").replace("\t", "\\t").replace("\n", "\\n")


def _unesc(s: str) -> str:
    out, i = [], 0
    while i < len(s):
        if s[i] == "\\" and i + 1 < len(s):
            out.append({"t": "\t", "n": "\n", "\\": "\\"}[s[i + 1]])
            i += 2
        else:
            out.append(s[i])
            i += 1
    return "".join(out)


def _line(tag, items) -> str:
    return "\t".join([tag] + [f"{k}={_esc(v)}" for k, v in items])


def _fields(parts):
    out = {}
    for part in parts:
        k, _, v = part.partition("=")
        out[k] = _unesc(v)
    return out


@dataclass
class Record:
    suite: str
    check: str
    status: str
    fields: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")


@dataclass
class Report:
    config: dict = field(default_factory=dict)
    records: list = field(default_factory=list)

    def add(self, suite, check, status, **fields):
        self.records.append(Record(suite, check, status, {k: v for k, v in fields.items() if v not in (None, "")}))

    def extend(self, other: "Report"):
        self.records.extend(other.records)

    def counts(self) -> Counter:
        return Counter(r.status for r in self.records)

    @property
    def exit_code(self) -> int:
        if not self.records:
            return EXIT_FINDINGS  # nothing ran: never a silent pass
        return EXIT_FINDINGS if any(r.status in FAILING for r in self.records) else EXIT_OK

    def failing(self) -> list:
        return [r for r in self.records if r.status in FAILING]

    # -- serialization -------------------------------------------------------

    def to_structured(self) -> str:
        lines = [_line(FORMAT, [("version", VERSION)]), _line("config", self.config.items())]
        for r in self.records:
            lines.append(_line("record", [("suite", r.suite), ("check", r.check), ("status", r.status)]
                               + list(r.fields.items())))
        c = self.counts()
        lines.append(_line("summary", [(s, c.get(s, 0)) for s in STATUSES] + [("exit", self.exit_code)]))
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "Report":
        lines = text.rstrip("\n").split("\n")
        head = lines[0].split("\t")
        if head[0] != FORMAT:
            raise ValueError("not a closure-ops report")
        version = int(_fields(head[1:])["version"])
        if version != VERSION:
            raise ValueError(f"unsupported report version {version}")
        rep = cls()
        for line in lines[1:]:
            tag, *parts = line.split("\t")
            f = _fields(parts)
            if tag == "config":
                rep.config = f
            elif tag == "record":
                rep.records.append(Record(f.pop("suite"), f.pop("check"), f.pop("status"), f))
        return rep

    def to_human(self, limit: int = 20) -> str:
        """Per-suite tallies, then every failing record (up to ``limit`` per suite)."""
        cfg = " ".join(f"{k}={v}" for k, v in self.config.items())
        out = [f"closure-ops report ({cfg})"]
        suites = list(dict.fromkeys(r.suite for r in self.records))
        for s in suites:
            recs = [r for r in self.records if r.suite == s]
            c = Counter(r.status for r in recs)
            tally = ", ".join(f"{k} {c[k]}" for k in STATUSES if c.get(k))
            out.append(f"\n[{s}] {tally}")
            shown = 0
            for r in recs:
                if r.status in FAILING or (r.status in ("info", "not-instantiable") and shown < limit):
                    if shown >= limit:
                        out.append("  ...")
                        break
                    extra = "; ".join(f"{k}: {v}" for k, v in r.fields.items())
                    out.append(f"  {r.status.upper():<8} {r.check}  {extra}")
                    shown += 1
        c = self.counts()
        out.append(f"\n{sum(c.values())} records, {sum(c[s] for s in FAILING)} failing -> exit {self.exit_code}")
        return "\n".join(out) + "\n"
