import json

import pytest

from faircoal import reproduce as rp


@pytest.fixture(scope="module")
def full_report():
    return rp.reproduce("all")


def test_full_run_is_ok(full_report):
    assert full_report.ok, full_report.table()


def test_claim_ids_unique_and_complete(full_report):
    ids = [c.claim_id for c in full_report.claims]
    assert len(ids) == len(set(ids))
    assert set(rp.EXPECTED_DISCREPANCIES) <= set(ids)
    assert {f"path:{n}" for n in rp.PATH_RANGE} <= set(ids)
    assert {f"cycle:{n}" for n in rp.CYCLE_RANGE} <= set(ids)


def test_discrepancies_carry_both_values(full_report):
    for c in full_report.claims:
        assert c.status in ("confirmed", "discrepancy", "multiset-confirmed", "skipped")
        if c.status == "discrepancy":
            assert c.expected is not None and c.computed is not None
            assert c.expected_discrepancy


def test_report_serialises(full_report):
    data = json.loads(json.dumps(full_report.to_json()))
    assert data["ok"] is True
    assert set(data["claims"][0]) == {"claim_id", "citation", "expected", "computed", "status",
                                      "expected_discrepancy", "elapsed", "note", "unexpected"}


def test_scope_examples():
    r = rp.reproduce("cubic6")
    assert [(c.claim_id, c.status, c.computed) for c in r.claims] == [
        ("cubic6:1", "confirmed", 6), ("cubic6:2", "confirmed", 6)]
    r = rp.reproduce("cubic10")
    by_id = {c.claim_id: c for c in r.claims}
    assert by_id["cubic10:petersen"].status == "confirmed"
    assert by_id["cubic10:multiset"].status == "discrepancy"
    r = rp.reproduce("bounds")
    by_id = {c.claim_id: c for c in r.claims}
    assert by_id["bounds:upper"].status == "confirmed"
    assert by_id["bounds:lower-domatic"].status == "confirmed"
    assert by_id["bounds:connected-upper:P4"].status == "discrepancy"


def test_unknown_discrepancy_fails(monkeypatch):
    pinned = dict(rp.EXPECTED_DISCREPANCIES)
    del pinned["cubic8:multiset"]
    monkeypatch.setattr(rp, "EXPECTED_DISCREPANCIES", pinned)
    r = rp.reproduce("cubic8")
    assert not r.ok
    assert "UNEXPECTED" in r.table()


def test_changed_value_fails(monkeypatch):
    pinned = dict(rp.EXPECTED_DISCREPANCIES, **{"corona:2:upper-half-order": 5})
    monkeypatch.setattr(rp, "EXPECTED_DISCREPANCIES", pinned)
    assert not rp.reproduce("coronas").ok


def test_unknown_scope():
    with pytest.raises(ValueError):
        rp.reproduce("wheels")
