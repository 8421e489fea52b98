import json

import pytest

from dirac4 import reconcile

REPORT = reconcile.reconciliation_report()
BY_ITEM = {r["item"]: r for r in REPORT}


def test_report_shape():
    assert len(REPORT) == 20
    for r in REPORT:
        assert set(r) == {"item", "printed", "derived", "evidence", "status"}
        assert r["status"] in {"corrected", "relabelled", "qualified"}
    json.dumps(REPORT)


def test_report_is_deterministic():
    assert json.dumps(reconcile.reconciliation_report()) == json.dumps(REPORT)


@pytest.mark.parametrize("r", [r for r in REPORT if "tabulated_max_dev" in r["evidence"]],
                         ids=lambda r: r["item"])
def test_tabulated_form_is_far_from_oracle(r):
    ev = r["evidence"]
    assert ev["tabulated_max_dev"] > 1e-3
    if "used_max_dev" in ev:
        assert ev["used_max_dev"] < 1e-12


@pytest.mark.parametrize("item", [
    "product C1*B3",
    "cyclic coordinate law, C x C terms",
    "long coordinate law, X2 line",
    "SU(2,2) commuting triples",
    "Euler factorization, k block",
    "SL(3) corner entry",
])
def test_known_items_present(item):
    assert item in BY_ITEM


def test_su22_triple_signs_in_evidence():
    signs = BY_ITEM["SU(2,2) commuting triples"]["evidence"]["signs"]
    assert signs["K'"] == {"12": -1, "23": -1, "31": -1}
    assert signs["L'"]["12"] == -1 and signs["M'"]["31"] == -1


def test_case_b_determinant_correction():
    ev = BY_ITEM["Case B expanded determinant, n0 triple products"]["evidence"]
    assert ev["tabulated_max_rel_dev"] > 1e-3 and ev["used_max_rel_dev"] < 1e-12
