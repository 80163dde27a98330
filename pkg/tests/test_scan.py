from __future__ import annotations

import json

import pytest

from sextet.hexsys import NAMED, build_from_cells, canonical_code_of_cells
from sextet.polyx import Polynomial
from sextet.scan import (
    ALL_CHECKS,
    REGISTRY,
    chi_first_half_decreasing,
    evaluate_system,
    run_scan,
    scan,
)

T_CODE = canonical_code_of_cells(NAMED["triphenylene"])


def test_registry_kinds():
    kinds = {c.kind for c in REGISTRY.values()}
    assert kinds <= {"conjecture", "observation", "identity", "theorem", "info"}
    assert {"sigma_log_concave", "real_zero_in_[-1,0)", "hurwitz_stable"} <= set(ALL_CHECKS)


def test_chi_first_half_decreasing_examples():
    assert chi_first_half_decreasing(Polynomial([9, 13, 6, 1]))
    assert chi_first_half_decreasing(Polynomial([2, 1]))
    assert not chi_first_half_decreasing(Polynomial([1, 1, 2]))


def test_triphenylene_report_flags_non_real_sigma_only():
    rep = evaluate_system(build_from_cells(NAMED["triphenylene"]))
    assert rep.failures() == ["sigma_real_rooted"]
    v = rep.checks["sigma_real_rooted"]
    assert v["replay"] == f"sextet profile --cells '{T_CODE}'"
    assert v["detail"]["sigma"] == ["1", "4", "3", "1"]
    assert rep.polynomials["chi"] == ["9", "13", "6", "1"]


def test_non_kekulean_systems_are_skipped():
    rep = evaluate_system(build_from_cells([(0, 0), (1, 0), (0, 1)]))
    assert not rep.kekulean and rep.polynomials == {}
    assert all(v["status"] == "skipped" and v["reason"] == "not Kekulean" for v in rep.checks.values())


def test_unknown_check_rejected():
    with pytest.raises(KeyError):
        list(scan(2, ["no_such_check"]))


def test_run_scan_writes_reports_and_manifest(tmp_path):
    out = tmp_path / "scan.ndjson"
    manifest = run_scan(4, None, out)
    lines = [json.loads(s) for s in out.read_text().splitlines()]
    assert len(lines) == 1 + 1 + 3 + 7
    assert manifest["counts_per_size"] == {"1": 1, "2": 1, "3": 3, "4": 7}
    assert manifest["identity_failures"] == 0
    assert [f["code"] for f in manifest["failures"]] == [T_CODE]
    on_disk = json.loads((tmp_path / "scan.ndjson.manifest.json").read_text())
    assert on_disk["tally"] == manifest["tally"]
    for rec in lines:
        assert set(rec["checks"]) == set(ALL_CHECKS)


def test_subset_of_checks_and_even_orientation(tmp_path):
    manifest = run_scan(3, ["identity_chi_eq_phi_shift"], tmp_path / "s.ndjson", "even")
    assert manifest["checks"] == ["identity_chi_eq_phi_shift"]
    assert manifest["tally"]["identity_chi_eq_phi_shift"]["fail"] == 0
