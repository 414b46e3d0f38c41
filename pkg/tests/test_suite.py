import pytest

from qcong.errors import InapplicableError
from qcong.suite import (
    CATALOG, MUTATIONS, STATEMENTS, MutationSurvived, Report, ScanConfig, catalog, mutation_test, run,
    scan, scan_instances,
)

EXPECTED_IDS = {
    "thm1", "thm2", "thm3", "thm4", "thm5", "thm6", "thm7", "thm8", "lemma1", "lemma2",
    "cor1", "cor2", "cor3", "cor4", "he3", "he4", "he3_liu", "he4_liu", "vanhamme", "swisher",
    "liu_p4", "guo_wy", "gr", "gr_a", "crt",
}


def test_catalog_contents():
    cs = catalog()
    ids = [c.id for c in cs]
    assert len(ids) == len(set(ids)) >= 20
    assert set(ids) == EXPECTED_IDS
    by_id = {c.id: c for c in cs}
    assert by_id["thm1"].anchor == "Theorem 1"
    assert "Φ_n(q)^3" in by_id["thm1"].quote
    assert "Gasper-Rahman" in by_id["gr"].anchor
    assert len({c.anchor for c in cs}) == len(cs)
    assert set(STATEMENTS.values()) == EXPECTED_IDS


def test_every_claim_has_a_mutation():
    assert set(MUTATIONS) == {c.id for c in CATALOG}


def test_run_examples():
    assert run("thm1", {"n": 7}).status == "pass"
    assert run("thm1", {"n": 5}).status == "inapplicable"
    v = run("cor2", {"p": 3, "r": 2})
    assert v.status == "pass"
    assert v.subchecks[0].name == "mod 3^5"


def test_conjunction_over_truncations():
    v = run("thm2", {"n": 9})
    assert [s.name for s in v.subchecks] == ["M=4", "M=8"]
    v = run("thm1", {"n": 7})
    assert [s.name for s in v.subchecks] == ["M=6"]


def test_parametric_run_counts_specializations():
    v = run("thm6", {"n": 5}, specializations=3)
    assert v.passed
    assert len(v.subchecks) == 3 * 2
    v = run("lemma1", {"n": 3}, specializations=2)
    assert v.passed and len(v.subchecks) == 2 * 2


def test_run_is_deterministic():
    a = run("thm8", {"n": 9}, seed=5)
    b = run("thm8", {"n": 9}, seed=5)
    assert [s.__dict__ for s in a.subchecks] == [s.__dict__ for s in b.subchecks]
    assert a.notes == b.notes


def test_run_bad_instances():
    assert run("cor1", {"n": 3}).status == "inapplicable"
    assert run("cor1", {"p": 9, "r": 1}).status == "inapplicable"
    assert run("lemma1", {"n": 4}).status == "inapplicable"
    with pytest.raises(KeyError):
        run("thm99", {"n": 3})


def test_gr_degenerate_specialization_is_a_note():
    v = run("gr", {"order": 5}, seed=42, specializations=5)
    assert v.passed
    assert len(v.subchecks) == 5
    assert any("skipped" in note for note in v.notes)


@pytest.mark.parametrize("claim", sorted(MUTATIONS))
def test_mutations_are_detected(claim):
    v = mutation_test(claim)
    assert v.status == "fail"


def test_spec_mutation_examples():
    assert mutation_test("thm1", {"n": 7}).status == "fail"
    assert mutation_test("thm3", {"n": 7}).status == "fail"
    assert mutation_test("vanhamme", {"p": 5, "r": 1}).status == "fail"


def test_mutation_errors():
    with pytest.raises(KeyError):
        mutation_test("nope")
    with pytest.raises(InapplicableError):
        mutation_test("thm1", {"n": 5})


def test_surviving_mutation_is_an_error(monkeypatch):
    # at n = 3 the weight [6k+2] is a unit multiple of [6k+1] modulo Phi_3, so it goes unseen
    from qcong import suite
    monkeypatch.setitem(suite.MUTATIONS, "lemma1",
                        ("weight [6k+1] -> [6k+2]", suite._weight((6, 2)), {"n": 3}))
    with pytest.raises(MutationSurvived):
        mutation_test("lemma1")


def test_scan_small():
    cfg = ScanConfig(n_max=9, primes=(3, 5), r_max=1, specializations=2, series_order=10)
    rep = scan(cfg)
    assert rep.ok
    assert rep.summary["fail"] == 0 and rep.summary["pass"] > 0
    keys = [v.sort_key() for v in rep.verdicts]
    assert keys == sorted(keys)
    again = scan(cfg)
    assert rep.to_json(timing=False) == again.to_json(timing=False)


def test_scan_empty():
    rep = scan(ScanConfig(n_max=0))
    assert rep.verdicts == []
    assert rep.summary == {"pass": 0, "fail": 0, "inapplicable": 0}
    assert scan_instances(ScanConfig(n_max=0)) == []


def test_scan_workers_match_serial():
    cfg = ScanConfig(n_max=5, primes=(5,), specializations=1, series_order=6)
    a = scan(cfg)
    b = scan(ScanConfig(n_max=5, primes=(5,), specializations=1, series_order=6, workers=2))
    assert a.to_json(timing=False) == b.to_json(timing=False)


def test_report_round_trip():
    rep = scan(ScanConfig(n_max=3, primes=(3,), specializations=1, series_order=4))
    back = Report.from_json(rep.to_json())
    assert back.to_dict() == rep.to_dict()
    d = rep.to_dict()
    assert set(d) == {"version", "seed", "config", "verdicts", "summary"}
    v = d["verdicts"][0]
    assert {"claim", "instance", "pass", "subchecks", "elapsed_ms"} <= set(v)
    for s in v["subchecks"]:
        assert set(s) == {"name", "pass", "detail"}
