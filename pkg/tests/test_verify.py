import json

import pytest

from domcrit.constructions import build_B_chain, build_J
from domcrit.families import FamilySpecError
from domcrit.graph import GraphError, complete_graph, cycle_graph, from_edge_list
from domcrit.io import graph6_encode
from domcrit.solvers import Variant
from domcrit.verify import (
    THEOREM_IDS,
    Claim,
    DeepRequired,
    SweepConfig,
    diameter_bounds,
    sample_graphs,
    sweep,
    sweep_graphs,
    verify_bound,
    verify_family,
    verify_theorem,
)


def _claims(report):
    return {c.name: c.computed for c in report.claims}


def test_verify_family_R2():
    rep = verify_family("R:m=2")
    assert rep.passed and rep.verdict == "pass"
    assert all(c.provenance for c in rep.claims)


def test_verify_family_R2_J2_chain():
    rep = verify_family("chain:R:m=2,J:t=2")
    assert rep.passed
    values = sorted(c.computed for c in rep.claims if c.name in ("gamma_t", "diameter"))
    assert values == [6, 7]


def test_verify_family_B_chain():
    rep = verify_family("B:k=3,t=2")
    assert rep.passed
    assert {3, 4} <= set(_claims(rep).values())


def test_verify_family_Q_is_checked_as_non_critical():
    rep = verify_family("Q:h=Hex4")
    assert rep.passed
    assert _claims(rep)["4-gamma_t-vertex-critical"] is False


def test_verify_family_rejects_bad_spec():
    with pytest.raises(FamilySpecError):
        verify_family("nope")


def test_deep_gate():
    with pytest.raises(DeepRequired):
        verify_theorem("thm15", n=1)
    with pytest.raises(DeepRequired):
        verify_family("thm16:k=12")


def test_claim_relations():
    assert Claim("a", 3, 3).holds
    assert Claim("a", 4, 3, "<=").holds
    assert not Claim("a", 2, 3, "<=").holds
    assert Claim("a", 2, 3, ">=").holds


def test_verify_bound_examples():
    rep = verify_bound("total", build_J(2).graph)
    assert rep.passed
    tdiam = [c for c in rep.claims if "tdiam" in c.name]
    assert tdiam and tdiam[0].claimed == 4 and tdiam[0].computed == 4
    rep = verify_bound("independent", build_B_chain(3, 2))
    assert rep.passed and rep.claims[0].claimed == rep.claims[0].computed == 4
    rep = verify_bound("connected", cycle_graph(7))
    assert rep.passed and rep.params["k"] == 5 and rep.claims[0].computed == 3


def test_verify_bound_not_critical_and_disconnected():
    rep = verify_bound("plain", complete_graph(4))
    assert rep.passed and not rep.claims
    assert any("not applicable" in n for n in rep.notes)
    with pytest.raises(GraphError):
        verify_bound("plain", from_edge_list(4, [(0, 1), (2, 3)]))


def test_tdiam_guards():
    # k = 3 has no tdiam bound; leaves suppress the total bounds entirely
    names = [b.name for b in diameter_bounds(Variant.TOTAL, cycle_graph(5), 3)]
    assert names == ["goddard"]
    star = from_edge_list(3, [(0, 1), (1, 2)])
    assert diameter_bounds(Variant.TOTAL, star, 2) == []
    assert diameter_bounds(Variant.PLAIN, cycle_graph(7), 3) == []


@pytest.mark.parametrize("theorem", THEOREM_IDS)
def test_every_theorem_id_passes_at_defaults(theorem):
    rep = verify_theorem(theorem)
    assert rep.passed, rep.format_text()
    assert rep.claims, rep.format_text()


def test_unknown_theorem_id():
    with pytest.raises(FamilySpecError):
        verify_theorem("thm99")


def test_sweep_small_is_reproducible():
    cfg = SweepConfig(n_min=3, n_max=7, samples=60, seed=5)
    a, b = sweep(cfg), sweep(cfg)
    assert a.passed
    assert [graph6_encode(g) for g in sample_graphs(cfg)] == [graph6_encode(g) for g in sample_graphs(cfg)]
    da, db = a.to_dict(), b.to_dict()
    da.pop("elapsed_ms"), db.pop("elapsed_ms")
    assert json.dumps(da, sort_keys=True) == json.dumps(db, sort_keys=True)
    assert a.seed == 5 and "model" in a.params


def test_sweep_cycles_connected():
    rep = sweep_graphs([cycle_graph(n) for n in range(4, 13)], [Variant.CONNECTED])
    assert rep.passed
    stats = rep.summary["per_variant"]["connected"]
    assert stats["critical"] == 9 and stats["max_diam_over_k"] == 1.0


def test_sweep_K4_notes_not_critical():
    rep = sweep_graphs([complete_graph(4)], [Variant.PLAIN])
    assert rep.passed and rep.summary["per_variant"]["plain"]["critical"] == 0
    assert any("not critical" in n for n in rep.notes)


@pytest.mark.parametrize(
    "kwargs",
    [dict(samples=0), dict(n_min=0), dict(n_max=40), dict(edge_probability=1.0), dict(n_min=8, n_max=5)],
)
def test_sweep_config_validation(kwargs):
    with pytest.raises(ValueError):
        SweepConfig(**kwargs)


def test_report_json_schema():
    doc = verify_theorem("thm10").to_dict()
    assert {"target", "params", "claims", "verdict", "seed", "elapsed_ms"} <= set(doc)
    assert set(doc["claims"][0]) >= {"name", "claimed", "computed", "relation", "provenance"}
    json.dumps(doc)
