"""Report generation: well-formedness and numeric fidelity."""

import xml.etree.ElementTree as ET

import pytest

from abacus import errors, stats
from abacus.bignum import BigInt, format_decimal
from abacus.linalg import NumVector
from abacus.report import (Report, build_ttest_report, build_ztest_report,
                           console_to_report, export_report)

_DATA = [9, 3, -1, -2, 4, 5]


def _strip_doctype(body: str) -> str:
    return body.split("\n", 1)[1]


def _ztest_result(ctx):
    return stats.ztest(NumVector([BigInt(x) for x in _DATA], ctx),
                       BigInt(2), BigInt(3), ctx)


def test_ztest_report_well_formed_and_contains_numbers(ctx8):
    r = _ztest_result(ctx8)
    rep = build_ztest_report(r, ctx8)
    assert rep.kind == "html"
    root = ET.fromstring(_strip_doctype(rep.body))
    assert root.tag == "html"
    assert "One-sample z-test (two-sided)" in rep.body
    assert format_decimal(r.z, 8) in rep.body
    assert format_decimal(r.p_two_sided, 8) in rep.body
    assert "fail to reject" in rep.body


def test_ztest_report_numbers_match_render(ctx8):
    # report digits follow the display context, not the internal precision
    ctx8.set_output_digits(4)
    r = _ztest_result(ctx8)
    rep = build_ztest_report(r, ctx8)
    assert format_decimal(r.z, 4) in rep.body
    assert format_decimal(r.z, 8) not in rep.body


def test_ztest_report_p_equals_one(ctx8):
    v = NumVector([BigInt(2), BigInt(2)], ctx8)
    r = stats.ztest(v, BigInt(2), BigInt(1), ctx8)
    rep = build_ztest_report(r, ctx8)
    assert "(p = 1)" in rep.body


def test_ttest_report(ctx8):
    r = stats.ttest(NumVector([BigInt(x) for x in _DATA], ctx8),
                    BigInt(2), ctx8)
    rep = build_ttest_report(r, ctx8)
    ET.fromstring(_strip_doctype(rep.body))
    assert "One-sample t-test (two-sided)" in rep.body
    assert format_decimal(r.t, 8) in rep.body
    assert "<th>df</th><td>5</td>" in rep.body


def test_console_report_text_and_html():
    text = "4\n12"
    rep = console_to_report(text, "text")
    assert rep.kind == "text" and rep.body == text
    html = console_to_report(text, "html")
    ET.fromstring(_strip_doctype(html.body))
    assert "4\n12" in html.body
    empty = console_to_report("", "text")
    assert empty.body == ""
    with pytest.raises(errors.DomainError):
        console_to_report(text, "rtf")


def test_report_kind_validation():
    with pytest.raises(errors.DomainError):
        Report("r", "pdf", "", "test")


def test_export_roundtrip(tmp_path):
    rep = console_to_report("hello\nworld", "text")
    path = tmp_path / "r.txt"
    export_report(rep, str(path))
    assert path.read_text(encoding="utf-8") == rep.body
    with pytest.raises(errors.IoError):
        export_report(rep, str(tmp_path / "no" / "r.txt"))
