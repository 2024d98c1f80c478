"""
Recompute published tables and unimodality claims, report cell by cell.

Statuses:

* ``PASS`` / ``FAIL``: recomputed and compared.
* ``SUSPECT``: the published column fails its own consistency checks (wrong
  length, not palindromic, wrong total); differences are listed but never
  counted as failures.
* ``NOT_RUN``: the group order exceeds the budget.
* ``INFO``: computed, but nothing is claimed about it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from . import golden
from .distribution import Distribution, is_palindromic, is_unimodal
from .engine import compute_distribution, distributions_general
from .root_system import GroupSpec, build_root_system, height_class_count
from .stats import ODD, StatSpec

__all__ = [
    "GoldenTable", "Cell", "Report", "TABLES", "SUITES", "DEFAULT_MAX_ORDER",
    "verify", "verify_suite", "scan_conjecture", "conjecture_claims_unimodal",
]

# admits A_11 (479001600), rejects E8 and A_12
DEFAULT_MAX_ORDER = 500_000_000

PASS, FAIL, SUSPECT, NOT_RUN, INFO = "PASS", "FAIL", "SUSPECT", "NOT_RUN", "INFO"


@dataclass(frozen=True)
class GoldenTable:
    name: str
    group: GroupSpec
    stat: StatSpec
    expected: Distribution
    source: str
    marked: tuple[int, ...] = ()

    @property
    def claims_unimodal(self) -> bool:
        return not self.marked

    def consistency_issues(self) -> list[str]:
        rs = build_root_system(self.group)
        counts = list(self.expected.counts)
        degree = height_class_count(rs, self.stat.k, self.stat.h)
        issues = []
        if len(counts) != degree + 1:
            issues.append(f"{len(counts)} coefficients, expected {degree + 1}")
        if not is_palindromic(counts):
            bad = [d for d in range(len(counts)) if counts[d] != counts[-1 - d]]
            issues.append(f"not palindromic (first at d={bad[0]})")
        if sum(counts) != rs.order:
            issues.append(f"total {sum(counts)} != |W| = {rs.order}")
        if counts[0] != 1 or counts[-1] != 1:
            issues.append("extreme coefficients are not 1")
        return issues

    @property
    def suspect(self) -> bool:
        return bool(self.consistency_issues())


def _build_tables() -> dict[str, GoldenTable]:
    spec_of = {
        "examples": ("EXAMPLES", "A", ODD, "worked examples of the odd-length polynomial"),
        "figure1": ("FIGURE1", "A", ODD, "odd-length coefficients over W(A_n)"),
        "table2": ("TABLE2", "A", StatSpec(3, 1), "inv_{3,1} coefficients over W(A_n)"),
        "tableB": ("TABLE_B", "B", ODD, "L_{2,1} coefficients over W(B_n)"),
        "tableD": ("TABLE_D", "D", ODD, "L_{2,1} coefficients over W(D_n)"),
    }
    tables = {}
    for prefix, (attr, family, stat, source) in spec_of.items():
        for n, counts in getattr(golden, attr).items():
            group = GroupSpec(family, n)
            name = f"{prefix}:n={n}"
            tables[name] = GoldenTable(
                name, group, stat, Distribution(counts, group, stat), f"{source}, n={n}",
                golden.MARKED.get((attr, n), ()) if attr != "EXAMPLES" else
                golden.MARKED.get(("FIGURE1", n), ()),
            )
    return tables


TABLES = _build_tables()

SUITES = ("examples", "figure1", "table2", "tableB", "tableD", "exceptional", "conjgen")


@dataclass
class Cell:
    table: str
    cell: str
    status: str
    detail: str = ""

    def line(self) -> str:
        return f"{self.table} {self.cell} {self.status}"


@dataclass
class Report:
    title: str
    cells: list[Cell] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not any(c.status == FAIL for c in self.cells)

    def count(self, status: str) -> int:
        return sum(c.status == status for c in self.cells)

    def extend(self, other: "Report"):
        self.cells.extend(other.cells)

    def lines(self) -> str:
        return "\n".join(c.line() for c in self.cells) + "\n"

    def render(self) -> str:
        out = [f"== {self.title} =="]
        width = max((len(f"{c.table} {c.cell}") for c in self.cells), default=0)
        for c in self.cells:
            label = f"{c.table} {c.cell}".ljust(width)
            out.append(f"{label}  {c.status:<8} {c.detail}".rstrip())
        tally = ", ".join(f"{s} {self.count(s)}" for s in (PASS, FAIL, SUSPECT, NOT_RUN, INFO)
                          if self.count(s))
        out.append(f"-- {tally} ({self.elapsed:.1f}s)")
        return "\n".join(out) + "\n"


class _Cache:
    """Memo of computed distributions, keyed by (group, stat)."""

    def __init__(self, threads):
        self.threads = threads
        self.store: dict = {}

    def get(self, group: GroupSpec, stat: StatSpec) -> Distribution:
        key = (group, stat)
        if key not in self.store:
            self.store[key] = compute_distribution(group, stat, self.threads)
        return self.store[key]

    def many(self, group: GroupSpec, stats: Sequence[StatSpec]) -> list[Distribution]:
        missing = [s for s in stats if (group, s) not in self.store]
        if missing:
            if group.family == "A":
                for s in missing:
                    self.get(group, s)
            else:
                rs = build_root_system(group)
                for s, dist in zip(missing, distributions_general(rs, missing, self.threads)):
                    self.store[(group, s)] = dist
        return [self.store[(group, s)] for s in stats]


def _verdict(dist: Distribution) -> str:
    ok, dip = is_unimodal(dist)
    return "unimodal" if ok else f"NOT unimodal (dip at {dip})"


def _check_table(table: GoldenTable, max_order: int, cache: _Cache) -> list[Cell]:
    prefix, col = table.name.split(":")
    issues = table.consistency_issues()
    cells = [Cell(prefix, f"{col}:golden", SUSPECT if issues else PASS,
                  "; ".join(issues) if issues else "internally consistent")]
    order = build_root_system(table.group).order
    if order > max_order:
        why = f"|W({table.group})| = {order} exceeds budget {max_order}"
        cells.append(Cell(prefix, col, NOT_RUN, why))
        cells.append(Cell(prefix, f"{col}:unimodal", NOT_RUN, why))
        return cells
    got = cache.get(table.group, table.stat)
    exp = table.expected.counts
    if got.counts == exp:
        cells.append(Cell(prefix, col, PASS, f"all {len(exp)} coefficients agree"))
    else:
        d = next((i for i, (a, b) in enumerate(zip(exp, got.counts)) if a != b),
                 min(len(exp), len(got.counts)))
        tv = exp[d] if d < len(exp) else "-"
        gv = got.counts[d] if d < len(got.counts) else "-"
        detail = f"first difference at d={d}: table {tv}, computed {gv}"
        if issues:
            detail += f"; recomputed column: {' '.join(map(str, got.counts))}"
        cells.append(Cell(prefix, col, SUSPECT if issues else FAIL, detail))
    ok, dip = is_unimodal(got)
    claim = "unimodal" if table.claims_unimodal else f"NOT unimodal (marked {list(table.marked)})"
    agrees = ok == table.claims_unimodal and (ok or dip == table.marked[0])
    cells.append(Cell(prefix, f"{col}:unimodal", PASS if agrees else FAIL,
                      f"computed {_verdict(got)}; published {claim}"))
    return cells


def verify(name: str, max_order: int = DEFAULT_MAX_ORDER, threads: Optional[int] = None,
           _cache: Optional[_Cache] = None) -> Report:
    """Check one published column, e.g. ``verify("figure1:n=4")``."""
    if name not in TABLES:
        raise KeyError(f"unknown table {name!r}")
    t0 = time.perf_counter()
    cache = _cache or _Cache(threads)
    report = Report(name, _check_table(TABLES[name], max_order, cache))
    report.elapsed = time.perf_counter() - t0
    return report


# (group, stat, unimodal?) statements about B_{2,1} outside the tables
EXCEPTIONAL_CLAIMS = (
    (GroupSpec("G", 2), ODD, False),
    (GroupSpec("F", 4), ODD, False),
    (GroupSpec("E", 6), ODD, False),
    (GroupSpec("E", 7), ODD, True),
)


def conjecture_claims_unimodal(group: GroupSpec, stat: StatSpec, h_raw: Optional[int] = None) -> Optional[bool]:
    """
    What the general unimodality conjecture asserts for ``B_{k,h}``: ``True``
    when it claims unimodality, ``None`` when it says nothing.
    """
    h = stat.h if h_raw is None else h_raw
    if stat.k < 3 or h < 1:
        return None
    if group == GroupSpec("F", 4) and stat.k < 4:
        return None
    return True


def _exceptional(max_order: int, cache: _Cache) -> Report:
    report = Report("exceptional")
    for group, stat, claim in EXCEPTIONAL_CLAIMS:
        cell = f"{group}:k={stat.k},h={stat.h}"
        order = build_root_system(group).order
        if order > max_order:
            report.cells.append(Cell("exceptional", cell, NOT_RUN, f"|W| = {order} over budget"))
            continue
        dist = cache.get(group, stat)
        ok, _ = is_unimodal(dist)
        expected = "unimodal" if claim else "NOT unimodal"
        report.cells.append(Cell("exceptional", cell, PASS if ok == claim else FAIL,
                                 f"computed {_verdict(dist)}; published {expected}"))
    f4 = GroupSpec("F", 4)
    # F4 carve-out of the general conjecture
    k3 = cache.many(f4, [StatSpec(3, h) for h in (1, 2)])
    some_bad = [d.stat.h for d in k3 if not is_unimodal(d)[0]]
    report.cells.append(Cell(
        "exceptional", "F4:k=3:some-h-not-unimodal", PASS if some_bad else FAIL,
        f"non-unimodal for h in {some_bad}" if some_bad else
        "unimodal for every h in {1, 2}: " + "; ".join(f"h={d.stat.h} {_verdict(d)}" for d in k3)))
    for k in range(4, 9):
        dists = cache.many(f4, [StatSpec(k, h) for h in range(1, k)])
        bad = [(d.stat.h, is_unimodal(d)[1]) for d in dists if not is_unimodal(d)[0]]
        report.cells.append(Cell(
            "exceptional", f"F4:k={k}:all-h-unimodal", FAIL if bad else PASS,
            "; ".join(f"h={h} dip at {dip}" for h, dip in bad) if bad else f"h = 1..{k - 1} unimodal"))
    return report


def scan_conjecture(groups: Iterable[GroupSpec], ks: Iterable[int], hs: Optional[Iterable[int]] = None,
                    max_order: int = DEFAULT_MAX_ORDER, threads: Optional[int] = None,
                    _cache: Optional[_Cache] = None) -> Report:
    """
    Unimodality grid of ``B_{k,h}`` over groups and (k, h).

    ``hs`` defaults to ``1..k-1`` for every ``k``. Cells where the conjecture
    predicts unimodality but the computation finds a dip are ``FAIL`` and name
    the dip; cells it makes no claim about are ``INFO``.
    """
    t0 = time.perf_counter()
    cache = _cache or _Cache(threads)
    report = Report("conjgen")
    ks = list(ks)
    for group in groups:
        order = build_root_system(group).order
        pairs = [(k, h) for k in ks for h in (range(1, k) if hs is None else hs)]
        if order > max_order:
            for k, h in pairs:
                report.cells.append(Cell("conjgen", f"{group}:k={k},h={h}", NOT_RUN,
                                         f"|W| = {order} over budget"))
            continue
        dists = cache.many(group, [StatSpec(k, h) for k, h in pairs])
        for (k, h), dist in zip(pairs, dists):
            claim = conjecture_claims_unimodal(group, dist.stat, h)
            ok, dip = is_unimodal(dist)
            if claim is None:
                status = INFO
            else:
                status = PASS if ok else FAIL
            detail = _verdict(dist)
            if status == FAIL:
                detail = f"counterexample candidate: {detail}"
            report.cells.append(Cell("conjgen", f"{group}:k={k},h={h}", status, detail))
    report.elapsed = time.perf_counter() - t0
    return report


CONJGEN_GROUPS = (
    [GroupSpec("A", n) for n in range(1, 10)]
    + [GroupSpec("B", n) for n in range(2, 7)]
    + [GroupSpec("D", n) for n in range(4, 7)]
    + [GroupSpec("G", 2), GroupSpec("F", 4), GroupSpec("E", 6), GroupSpec("E", 7)]
)


def verify_suite(suite: str, max_order: int = DEFAULT_MAX_ORDER, threads: Optional[int] = None) -> Report:
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    t0 = time.perf_counter()
    cache = _Cache(threads)
    if suite == "exceptional":
        report = _exceptional(max_order, cache)
    elif suite == "conjgen":
        report = Report("conjgen")
        # A_n: the k = 3, h = 1 column family; other types: every k in 3..8
        a_groups = [g for g in CONJGEN_GROUPS if g.family == "A"]
        others = [g for g in CONJGEN_GROUPS if g.family != "A"]
        report.extend(scan_conjecture(a_groups, [3], [1], max_order, threads, cache))
        report.extend(scan_conjecture(others, range(3, 9), None, max_order, threads, cache))
    else:
        report = Report(suite)
        names = sorted((n for n in TABLES if n.startswith(suite + ":")),
                       key=lambda n: int(n.split("=")[1]))
        for name in names:
            report.cells.extend(_check_table(TABLES[name], max_order, cache))
    report.title = suite
    report.elapsed = time.perf_counter() - t0
    return report
