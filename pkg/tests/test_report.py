# -*- coding: utf-8 -*-

from app.ui.report import FAIL, PASS, WINDOW_LIMITED, Report


def test_check_lines():
    report = Report()
    assert report.check("one", True, "ok")
    assert not report.failed
    report.check("two", False)
    assert report.failed
    assert report.render() == "CHECK one PASS ok\nCHECK two FAIL\n"


def test_conjectural_items_do_not_fail():
    report = Report()
    report.item(1, FAIL, "conjectural")
    report.item(2, WINDOW_LIMITED)
    assert not report.failed
    report.item(3, FAIL, conjectural=False)
    assert report.failed


def test_extend_and_notes():
    first, second = Report(), Report()
    first.note("hello")
    second.check("x", False)
    first.extend(second)
    assert first.failed
    assert len(first) == 2
    assert first.lines[0] == "NOTE hello"
    assert PASS == "PASS"
