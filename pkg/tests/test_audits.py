"""Theorem audits on concrete instances."""

import json

import pytest

from tatelab.audits import (AuditError, build_layer_chain, ci_vanishing_audit,
                            growth_probe, jacobi_zariski_audit,
                            rigidity_audit, verify_regular_witness)

from conftest import load_doc, load_pres


def jz_layers(field_spec=None):
    doc = load_doc("tower_jz_q")
    if field_spec is not None:
        for layer in doc["tower"]:
            layer["field"] = field_spec
    return build_layer_chain(doc["tower"])


# -- rigidity -----------------------------------------------------------------

def test_rigidity_non_ci_never_revanishes():
    rep = rigidity_audit(load_pres("m2zero_q"), 6, 12)
    assert rep.passed
    assert rep.theorem == "rigidity-of-deviations"
    assert len(rep.checks) == 4          # decisive verdict + eps_4..eps_6
    assert rep.bounds == {"N": 6, "D": 12}


def test_rigidity_ci_vanishes_from_three():
    rep = rigidity_audit(load_pres("ci_q"), 6, 12)
    assert rep.passed
    assert any("eps_3" in c["assertion"] for c in rep.checks)


def test_rigidity_golod_instance():
    rep = rigidity_audit(load_pres("xsq_xy_q"), 6, 12)
    assert rep.passed


def test_rigidity_report_json_is_stable():
    rep = rigidity_audit(load_pres("hyp_q"), 4, 10)
    doc1 = json.dumps(rep.to_json(), sort_keys=True)
    doc2 = json.dumps(rigidity_audit(load_pres("hyp_q"), 4, 10).to_json(),
                      sort_keys=True)
    assert doc1 == doc2


# -- growth probe -------------------------------------------------------------

def test_growth_probe_m2zero_flags_growth():
    rep = growth_probe(load_pres("m2zero_q"), 6, 12)
    assert rep.passed
    assert any("exponential" in note for note in rep.notes)


def test_growth_probe_ci_not_applicable():
    rep = growth_probe(load_pres("ci_q"), 6, 12)
    assert rep.passed
    assert any("not applicable" in note for note in rep.notes)


def test_growth_probe_small_window():
    rep = growth_probe(load_pres("m2zero_q"), 3, 8)
    assert rep.passed
    assert any("window too small" in note for note in rep.notes)


def test_growth_probe_never_certifies():
    rep = growth_probe(load_pres("xsq_xy_q"), 6, 12)
    assert rep.passed
    assert any("certifies nothing" in note for note in rep.notes)


# -- layer chains -------------------------------------------------------------

def test_layer_chain_validation():
    doc = load_doc("tower_jz_q")
    layers = build_layer_chain(doc["tower"])
    assert layers[0].relators == ()
    assert len(layers) == 3
    with pytest.raises(AuditError):
        build_layer_chain(doc["tower"][:2])
    broken = [dict(l) for l in doc["tower"]]
    broken[2] = dict(broken[2], relators=["z^2"])   # not an extension
    with pytest.raises(AuditError):
        build_layer_chain(broken)


# -- witness verification -----------------------------------------------------

def test_witness_accepts_regular_element():
    _, r, s = jz_layers()
    verify_regular_witness(r, s, ["z^2"], 12)   # must not raise


def test_witness_rejects_wrong_span():
    _, r, s = jz_layers()
    with pytest.raises(AuditError):
        verify_regular_witness(r, s, ["z^3"], 12)


def test_witness_rejects_empty():
    _, r, s = jz_layers()
    with pytest.raises(AuditError):
        verify_regular_witness(r, s, [], 12)


def test_witness_rejects_zerodivisor():
    # x*z spans its ideal but x kills it in R, so the Hilbert product fails
    docs = [
        {"field": {"type": "Q"},
         "variables": [{"name": "x", "degree": 1}, {"name": "y", "degree": 1},
                       {"name": "z", "degree": 1}],
         "relators": []},
        {"field": {"type": "Q"},
         "variables": [{"name": "x", "degree": 1}, {"name": "y", "degree": 1},
                       {"name": "z", "degree": 1}],
         "relators": ["x^2", "x*y", "y^2"]},
        {"field": {"type": "Q"},
         "variables": [{"name": "x", "degree": 1}, {"name": "y", "degree": 1},
                       {"name": "z", "degree": 1}],
         "relators": ["x^2", "x*y", "y^2", "x*z"]},
    ]
    _, r, s = build_layer_chain(docs)
    with pytest.raises(AuditError) as err:
        verify_regular_witness(r, s, ["x*z"], 12)
    assert "witness" in str(err.value)


# -- Jacobi-Zariski descent ---------------------------------------------------

def test_jz_audit_passes_over_q():
    layers = jz_layers()
    rep = jacobi_zariski_audit(layers, ["z^2"], 2, 12)
    assert rep.passed
    assert rep.theorem == "jacobi-zariski-descent"
    observed = [c["observed"] for c in rep.checks]
    assert "0 <= 2" in observed
    assert "0 <= 6" in observed


def test_jz_audit_window_clipped_in_char_two():
    doc = load_doc("tower_jz_f2")
    layers = build_layer_chain(doc["tower"])
    rep = jacobi_zariski_audit(layers, ["z^2"], 2, 12)
    assert rep.passed
    # i = 2 needs rank D_4, outside the F_2 window: reported, not asserted
    outside = [c for c in rep.checks if "outside-window" in str(c["observed"])]
    assert len(outside) == 1


def test_jz_audit_rejects_bad_witness():
    layers = jz_layers()
    with pytest.raises(AuditError):
        jacobi_zariski_audit(layers, ["x*y"], 2, 12)


# -- c.i. vanishing -----------------------------------------------------------

def test_ci_vanishing_passes():
    doc = load_doc("tower_ci_q")
    layers = build_layer_chain(doc["tower"])
    rep = ci_vanishing_audit(layers, 5, 12)
    assert rep.passed
    assert rep.theorem == "ci-vanishing-of-cotangent-homology"
    assert len(rep.checks) == 3          # stages 3, 4, 5


def test_ci_vanishing_identity_layer_vacuous():
    q = {"field": {"type": "Q"},
         "variables": [{"name": "x", "degree": 1}, {"name": "y", "degree": 1}],
         "relators": []}
    r = dict(q, relators=["x^2"])
    s = dict(q, relators=["x^2"])        # S = R
    layers = build_layer_chain([q, r, s])
    rep = ci_vanishing_audit(layers, 5, 12)
    assert rep.passed


def test_ci_vanishing_precondition():
    q = {"field": {"type": "Q"},
         "variables": [{"name": "x", "degree": 1}, {"name": "y", "degree": 1}],
         "relators": []}
    r = dict(q, relators=["x^2", "x*y", "y^2"])
    s = dict(q, relators=["x^2", "x*y", "y^2", "y^3"])
    layers = build_layer_chain([q, r, s])
    with pytest.raises(AuditError) as err:
        ci_vanishing_audit(layers, 5, 12)
    assert "precondition" in str(err.value)
