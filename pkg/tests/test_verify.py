import pytest

from oddlength.root_system import GroupSpec
from oddlength.stats import ODD, StatSpec
from oddlength.verify import (
    FAIL, INFO, NOT_RUN, PASS, SUSPECT, TABLES, Cell, Report, conjecture_claims_unimodal,
    scan_conjecture, verify, verify_suite,
)

KNOWN_SUSPECT = {"figure1:n=14", "tableB:n=8", "tableB:n=10"}


def test_golden_consistency():
    flagged = {name for name, t in TABLES.items() if t.suspect}
    assert flagged == KNOWN_SUSPECT
    assert "59 coefficients, expected 57" in TABLES["figure1:n=14"].consistency_issues()
    assert any("total" in i for i in TABLES["tableB:n=8"].consistency_issues())


def test_marked_entries_are_dips():
    from oddlength.distribution import is_unimodal
    for t in TABLES.values():
        if t.marked and not t.suspect:
            assert is_unimodal(t.expected) == (False, t.marked[0])


@pytest.mark.parametrize("name,verdict", [("figure1:n=4", "unimodal"), ("tableB:n=3", "NOT"),
                                          ("tableD:n=4", "NOT")])
def test_single_columns(name, verdict):
    report = verify(name)
    assert [c.status for c in report.cells] == [PASS, PASS, PASS]
    assert verdict in report.cells[2].detail
    assert report.ok


def test_budget_gives_not_run():
    report = verify("figure1:n=9", max_order=1000)
    assert [c.status for c in report.cells] == [PASS, NOT_RUN, NOT_RUN]
    assert report.ok


def test_unknown_names():
    with pytest.raises(KeyError):
        verify("figure1:n=99")
    with pytest.raises(KeyError):
        verify_suite("nonsense")


def test_examples_suite():
    report = verify_suite("examples")
    assert report.ok and report.count(PASS) == len(report.cells) == 18


def test_report_lines():
    r = Report("t", [Cell("figure1", "n=3", PASS, "x"), Cell("figure1", "n=4", FAIL)])
    assert r.lines() == "figure1 n=3 PASS\nfigure1 n=4 FAIL\n"
    assert not r.ok
    assert "PASS 1, FAIL 1" in r.render()


def test_suspect_column_reports_recomputation():
    report = verify("tableB:n=8")
    statuses = {c.cell: c.status for c in report.cells}
    assert statuses == {"n=8:golden": SUSPECT, "n=8": SUSPECT, "n=8:unimodal": PASS}
    assert "recomputed column" in report.cells[1].detail


def test_conjecture_scope():
    assert conjecture_claims_unimodal(GroupSpec("A", 5), ODD) is None
    assert conjecture_claims_unimodal(GroupSpec("A", 5), StatSpec(3, 1)) is True
    assert conjecture_claims_unimodal(GroupSpec("F", 4), StatSpec(3, 1)) is None
    assert conjecture_claims_unimodal(GroupSpec("F", 4), StatSpec(4, 1)) is True
    assert conjecture_claims_unimodal(GroupSpec("B", 3), StatSpec(3, 0)) is None


def test_scan_type_a_holds():
    report = scan_conjecture([GroupSpec("A", n) for n in range(1, 10)], [3], [1])
    assert report.ok and report.count(PASS) == 9


def test_scan_finds_small_counterexample():
    report = scan_conjecture([GroupSpec("B", 3)], [3])
    cells = {c.cell: c for c in report.cells}
    assert cells["B3:k=3,h=1"].status == FAIL
    assert "dip at 2" in cells["B3:k=3,h=1"].detail
    info = scan_conjecture([GroupSpec("B", 3)], [2], [1])
    assert info.cells[0].status == INFO
