import math

import pytest

from whittaker import verify as VF
from whittaker._registry import OPERATIONS
from whittaker.errors import DomainError
from whittaker.incgamma import IncGammaArgs, lower_gamma


def test_fd_derivative_examples():
    assert abs(VF.fd_derivative(lambda x: x * x, 3.0) - 6.0) <= 1e-10
    assert abs(VF.fd_derivative(math.exp, 1.0) - math.e) <= 1e-9
    fd = VF.fd_derivative(lambda v: lower_gamma(IncGammaArgs(v, 1.0)).value, 1.0)
    assert abs(fd + 0.7965996) <= 1e-7


def test_report_pass_logic():
    r = VF.make_report("c", 1.0, 1.0 + 1e-10, 1e-9, ("a", "b"), "t")
    assert r.passed and r.abs_diff > 0
    r = VF.make_report("c", 1e-20, 0.0, 1e-9, ("a", "b"), "t", tol_abs=1e-15)
    assert r.passed and r.rel_diff == math.inf
    r = VF.make_report("c", 1.0, 1.1, 1e-9, ("a", "b"), "t")
    assert not r.passed
    assert not VF.make_report("c", math.nan, 1.0, 1.0, ("a", "b"), "t").passed
    assert set(r.as_dict()) >= {"check_id", "lhs", "rhs", "abs_diff", "rel_diff", "tol", "passed", "routes", "citation"}


def test_grid_spec():
    g = VF.GridSpec((0.0,), (0.5, 1.0), (1.0,))
    assert len(g.points()) == 2
    with pytest.raises(DomainError, match="nonempty"):
        g.points(lambda k, m, x: False)
    with pytest.raises(DomainError, match="nonempty"):
        VF.run_suite("series_vs_fd", grid=VF.GridSpec((), (), ()))


@pytest.mark.parametrize("name", VF.SUITES)
def test_suite_passes(name):
    reports = VF.run_suite(name)
    failed = [r.check_id for r in reports if not r.passed]
    assert reports and not failed


def test_integral_relations_custom_grid_and_tol():
    grid = VF.GridSpec((0.0,), (0.5,), (1.0,))
    reports = VF.run_suite("integral_relations", grid=grid)
    assert reports and all(r.passed for r in reports)
    strict = VF.run_suite("integral_relations", grid=grid, tol=0.0)
    assert any(not r.passed for r in strict)


def test_suite_is_deterministic():
    a = VF.run_suite("incgamma")
    b = VF.run_suite("incgamma")
    assert [(r.check_id, r.lhs, r.rhs) for r in a] == [(r.check_id, r.lhs, r.rhs) for r in b]


def test_unknown_suite():
    with pytest.raises(DomainError):
        VF.run_suite("everything")


def test_coverage_report():
    required = {n for n, m in OPERATIONS.items() if m in VF.COVERED_MODULES}
    assert VF.coverage_report(required).passed
    missing = VF.coverage_report(required - {"g1"})
    assert not missing.passed and "g1" in missing.citation


def test_errors_become_failed_reports():
    out = []
    VF._guard(out, "boom", "x", lambda: (_ for _ in ()).throw(DomainError("bad")))
    assert len(out) == 1 and not out[0].passed and "bad" in out[0].citation
