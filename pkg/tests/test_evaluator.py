from fractions import Fraction

import pytest
from pydantic import ValidationError

from symcheck.evaluator.evaluator import (
    crashed_report,
    is_zero,
    make_report,
    mark_exploratory,
    render_param,
    render_params,
)
from symcheck.models.schemas import CheckReport, SuiteConfig, SummaryRecord
from symcheck.poly.exact_poly import ExactPoly


def test_param_rendering():
    assert render_param((2, 1)) == "[2,1]"
    assert render_param(()) == "[]"
    assert render_param(3) == "3"
    assert render_params({"lambda": (1,), "variant": "even"}) == {"lambda": "[1]", "variant": "even"}


def test_zero_detection(space1, var):
    assert is_zero(0)
    assert is_zero(Fraction(0))
    assert is_zero(ExactPoly.zero(space1))
    assert not is_zero(var(space1, "x1"))
    assert not is_zero(Fraction(1, 3))


def test_pass_report(space1):
    report = make_report("cauchy", {"n": 2, "D": 4}, ExactPoly.zero(space1))
    assert report.status == "pass"
    assert report.witness is None
    assert report.params == {"n": "2", "D": "4"}


def test_fail_report_carries_witness(space1, var):
    report = make_report("phi", {"n": 1}, var(space1, "x1") * 2, label="numerator")
    assert report.status == "fail"
    assert report.witness == "numerator: 2*x1"


def test_exploratory_reports_never_fail(space1, var):
    zero = make_report("main_conjecture", {"n": 3}, ExactPoly.zero(space1), gating=False)
    assert zero.status == "report_only"
    assert zero.witness == "0"
    nonzero = make_report("main_conjecture", {"n": 3}, var(space1, "y1"), gating=False)
    assert nonzero.status == "report_only"
    assert nonzero.witness == "y1"


def test_crashed_report():
    report = crashed_report("phi", {"n": 1}, ValueError("bad degree"))
    assert report.status == "fail"
    assert report.witness == "error: ValueError: bad degree"
    open_range = crashed_report("main_conjecture", {"n": 3}, ValueError("bad degree"), gating=False)
    assert open_range.status == "report_only"
    assert open_range.witness == "error: ValueError: bad degree"


def test_mark_exploratory(space1, var):
    passed = mark_exploratory(make_report("main_conjecture", {"n": 3}, ExactPoly.zero(space1)))
    assert (passed.status, passed.witness) == ("report_only", "0")
    failed = mark_exploratory(make_report("ebasis_forms", {"n": 3}, var(space1, "x1"), label="xi=[1]"))
    assert (failed.status, failed.witness) == ("report_only", "xi=[1]: x1")


def test_report_json_omits_unset_fields():
    report = CheckReport(check="cauchy", params={"n": "2"}, status="pass")
    assert report.model_dump_json(exclude_none=True) == '{"check":"cauchy","params":{"n":"2"},"status":"pass"}'
    summary = SummaryRecord(total=1, passed=1, failed=0, report_only=0, exit_code=0)
    assert summary.model_dump(exclude_none=True)["summary"] is True


def test_suite_config_defaults_and_order():
    config = SuiteConfig(suites=["phi", "core"])
    assert config.suites == ["core", "phi"]
    assert SuiteConfig().suites == ["core", "lemmas", "kostka", "phi", "n2"]


@pytest.mark.parametrize(
    "kwargs",
    [
        {"suites": ["nope"]},
        {"suites": []},
        {"n_max": 0},
        {"weight_max": -1},
        {"workers": 0},
        {"format": "yaml"},
    ],
)
def test_suite_config_rejects(kwargs):
    with pytest.raises(ValidationError):
        SuiteConfig(**kwargs)
