import random
from fractions import Fraction

import pytest

from oracles import random_shifts_for
from tauforge import (
    Family,
    HSpec,
    Partition,
    Poly,
    TauCollection,
    akns_collection,
    akns_pde_check,
    elementary_schur,
    hirota_kp_check,
    hirota_mkp_check,
    kp_specs_from_partition,
    reduction_check,
    tau_kp,
    tau_mkp_collection,
    tau_nkdv,
    tvar,
    verify_mkp_collection,
    xvar,
)


# -- report plumbing -----------------------------------------------------------


def test_report_formatting():
    r = hirota_kp_check(tvar(1))
    assert r.identity == "kp-residue"
    assert r.passed and r.obstruction == 0
    assert str(r) == "PASS kp-residue j=0 n=1"
    assert r.time_ms >= 0
    obj = r.to_json_obj()
    assert sorted(obj) == ["identity", "obstruction", "params", "pass"]
    assert obj["pass"] is True and obj["obstruction"] == "0"
    assert "time_ms" in r.to_json_obj(include_timing=True)


def test_report_failure_formatting():
    r = hirota_kp_check(tvar(2))
    assert not r.passed
    assert str(r).startswith("FAIL kp-residue")
    assert r.to_json_obj()["pass"] is False


# -- single-component residue identity ----------------------------------------


def test_kp_residue_validation():
    with pytest.raises(ValueError):
        hirota_kp_check(tvar(1), j=-1)
    with pytest.raises(ValueError):
        hirota_kp_check(tvar(1), n=0)


def test_kp_residue_passes_on_schur():
    assert hirota_kp_check(Poly.const(1)).passed
    for k in range(7):
        assert hirota_kp_check(elementary_schur(k)).passed, k


def test_kp_residue_passes_on_partitions():
    for parts in [(2, 1), (2, 2), (3, 1), (1, 1, 1), (3, 2, 1)]:
        assert hirota_kp_check(tau_kp(parts)).passed, parts


def test_kp_residue_passes_with_random_shifts():
    rng = random.Random(3)
    for parts in [(2, 1), (2, 2), (3, 1, 1)]:
        p = Partition(parts)
        tau = tau_kp(p, random_shifts_for(rng, p))
        assert hirota_kp_check(tau).passed, parts


def test_kp_residue_rejects_non_tau():
    for bad in [tvar(2), tvar(1) ** 2, tvar(1) * tvar(2), Poly.const(1) + tvar(1) ** 3]:
        r = hirota_kp_check(bad)
        assert not r.passed
        assert r.obstruction.terms
        families = {v.family for v in r.obstruction.variables()}
        assert families <= {Family.T, Family.Y}


def test_kp_residue_higher_j_detects_reduction():
    for parts, n in [((2, 1), 2), ((3, 2, 1), 2), ((3, 1, 1), 3)]:
        tau = tau_nkdv(parts, n)
        for j in range(3):
            assert hirota_kp_check(tau, j, n).passed, (parts, j)
    # a KP tau that is not 2-reduced passes j = 0 but fails j = 1
    tau = tau_kp((1, 1))
    assert hirota_kp_check(tau, 0, 2).passed
    assert not hirota_kp_check(tau, 1, 2).passed


# -- multicomponent residue identity --------------------------------------------


def two_component_collection():
    specs = [
        HSpec.make([(2, 1, None), (1, 1, None)]),
        HSpec.make([(1, 1, None), (2, Fraction(1, 2), None)]),
    ]
    return tau_mkp_collection(specs)


def test_mkp_check_validation():
    coll = two_component_collection()
    with pytest.raises(ValueError):
        hirota_mkp_check(coll, (2, 1, 0), (1, 0))  # m arity
    with pytest.raises(ValueError):
        hirota_mkp_check(coll, (2, 2), (1, 0))  # m sums to total + 2
    with pytest.raises(ValueError):
        hirota_mkp_check(coll, (2, 1), (1, 1))  # q sums to total
    with pytest.raises(ValueError):
        hirota_mkp_check(coll, (2, 1), (1, 0), n_parts=(1,))
    with pytest.raises(ValueError):
        hirota_mkp_check(coll, (2, 1), (1, 0), j=-1)


def test_mkp_check_single_component_reduces_to_kp():
    p = Partition((2, 1))
    coll = tau_mkp_collection(kp_specs_from_partition(p))
    m = coll.total
    report = hirota_mkp_check(coll, (m + 1,), (m - 1,))
    assert report.obstruction == hirota_kp_check(tau_kp(p)).obstruction
    assert report.passed


def test_verify_mkp_collection_passes():
    reports = verify_mkp_collection(two_component_collection())
    assert len(reports) == 8  # nontrivial (m, q) pairs at this level
    assert all(r.passed for r in reports)


def test_verify_mkp_collection_catches_corruption():
    coll = two_component_collection()
    entries = dict(coll.entries)
    label = coll.labels()[0]
    entries[label] = entries[label] + tvar(1, 1, 2) ** 3
    bad = TauCollection(total=coll.total, ncomp=coll.ncomp, entries=entries)
    reports = verify_mkp_collection(bad)
    assert sum(1 for r in reports if not r.passed) == 3


# -- differential reduction check -----------------------------------------------


def test_reduction_check_passes_on_reduced_tau():
    r = reduction_check(tau_nkdv((2, 1), 2), (2,), j_max=3)
    assert r.identity == "reduction-derivative"
    assert r.passed
    assert sorted(r.per_param) == ["j=1", "j=2", "j=3"]
    assert all(p == 0 for p in r.per_param.values())


def test_reduction_check_fails_on_unreduced_tau():
    r = reduction_check(tau_kp((1, 1)), (2,), j_max=3)
    assert not r.passed
    assert r.per_param["j=1"].terms
    assert not r.per_param["j=2"].terms


def test_reduction_check_validation():
    with pytest.raises(ValueError):
        reduction_check(tvar(1), (2,), j_max=0)


# -- AKNS flow check ----------------------------------------------------------------


def test_akns_pde_passes_zero_shifts():
    coll = akns_collection(2, 2, 1, 1, None, None)
    for base in [(2, 0), (1, 1), (0, 2)]:
        r = akns_pde_check(coll, base)
        assert r.identity == "akns-pde"
        assert r.passed, base
        assert sorted(r.per_param) == ["q_flow", "r_flow"]


def test_akns_pde_passes_generic_parameters():
    coll = akns_collection(2, 2, 2, 3, [Fraction(1, 2)], [Fraction(-1, 3)])
    assert akns_pde_check(coll, (1, 1)).passed
    coll = akns_collection(
        3, 2, 1, -2, [Fraction(1, 3), Fraction(2)], [Fraction(1, 5)]
    )
    for p in (1, 2):
        assert akns_pde_check(coll, (p, 3 - p)).passed, p


def test_akns_pde_fails_when_k_is_truncated():
    coll = akns_collection(3, 3, 1, 1, None, None, big_k=2)
    r = akns_pde_check(coll, (1, 1))
    assert not r.passed
    assert r.per_param["q_flow"].terms or r.per_param["r_flow"].terms
    # at zero shifts the K=1 ratios degenerate to constants and pass, so the
    # truncation only shows up with generic parameters
    coll = akns_collection(2, 2, 1, 1, None, None, big_k=1)
    assert akns_pde_check(coll, (1, 0)).passed
    coll = akns_collection(2, 2, 2, 3, [Fraction(1, 2)], [Fraction(-1, 3)], big_k=1)
    assert not akns_pde_check(coll, (1, 0)).passed
    assert not akns_pde_check(coll, (0, 1)).passed


def test_akns_pde_fails_on_perturbation():
    coll = akns_collection(2, 2, 1, 1, None, None)
    entries = dict(coll.entries)
    entries[(1, 1)] = entries[(1, 1)] + xvar(1) ** 2
    bad = TauCollection(total=2, ncomp=2, entries=entries)
    assert not akns_pde_check(bad, (1, 1)).passed


def test_akns_pde_validation():
    coll = akns_collection(2, 2, 1, 1, None, None)
    with pytest.raises(ValueError):
        akns_pde_check(coll, (1, 1, 0))
    hole = TauCollection(total=2, ncomp=2, entries={(2, 0): Poly.const(1)})
    with pytest.raises(ValueError):
        akns_pde_check(hole, (1, 1))  # base entry is zero
    one_comp = TauCollection(total=1, ncomp=1, entries={(1,): tvar(1)})
    with pytest.raises(ValueError):
        akns_pde_check(one_comp, (1,))
