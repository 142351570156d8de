import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import eval_poly, miwa_by_operator
from tauforge import Family, LaurentZ, Poly, VarId, tvar, xvar, yvar
from tauforge.polycore import (
    exp_difference_coeff,
    laurent_mul_residue,
    miwa_shift,
    relabel_vars,
    rename_family,
    shift_vars,
)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
t_vars = st.builds(VarId, st.just(Family.T), st.just(1), st.integers(1, 4))


@st.composite
def polys(draw, ncomp=1, families=(Family.T,), max_index=4, max_terms=4, max_exp=3):
    terms: dict = {}
    for _ in range(draw(st.integers(0, max_terms))):
        mono_vars: dict[VarId, int] = {}
        for _ in range(draw(st.integers(0, 2))):
            v = VarId(
                draw(st.sampled_from(list(families))),
                draw(st.integers(1, ncomp)),
                draw(st.integers(1, max_index)),
            )
            mono_vars[v] = draw(st.integers(1, max_exp))
        mono = tuple(sorted(mono_vars.items()))
        terms[mono] = terms.get(mono, Fraction(0)) + draw(rationals)
    return Poly(terms, ncomp)


def full_assignment(p: Poly, rng_values):
    return {v: val for v, val in zip(sorted(p.variables()), rng_values)}


# -- construction and rendering -------------------------------------------------


def test_zero_and_const():
    assert Poly.zero().is_zero()
    assert not Poly.zero()
    assert Poly.zero() == 0
    assert Poly.const(0).is_zero()
    assert Poly.const(Fraction(3, 2)) == Fraction(3, 2)
    assert str(Poly.zero()) == "0"
    assert str(Poly.const(-2)) == "-2"


def test_var_validation():
    with pytest.raises(ValueError):
        Poly.var(VarId(Family.T, 1, 0))
    with pytest.raises(ValueError):
        Poly.var(VarId(Family.T, 2, 1), ncomp=1)
    with pytest.raises(ValueError):
        Poly.zero(0)


def test_str_canonical_order():
    # graded by total exponent degree, ties broken lexicographically
    assert str(tvar(2) - tvar(1)) == "-t1 + t2"
    assert str(tvar(1) ** 2 - 2) == "-2 + t1^2"
    p = tvar(3) + tvar(1) * tvar(2) + (tvar(1) ** 3).scale(Fraction(1, 6))
    assert str(p) == "t3 + t1*t2 + 1/6*t1^3"


def test_multicomponent_rendering():
    assert str(tvar(2, component=2, ncomp=2)) == "t2[2]"
    assert str(xvar(1)) == "x1"
    assert str(yvar(5)) == "y5"


def test_ambient_mismatch_rejected():
    with pytest.raises(ValueError):
        tvar(1, ncomp=1) + tvar(1, ncomp=2)
    with pytest.raises(ValueError):
        tvar(1, ncomp=1) * tvar(1, ncomp=2)


# -- ring axioms -----------------------------------------------------------------


@given(polys(), polys(), polys())
def test_addition_group(p, q, r):
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)
    assert p + Poly.zero() == p
    assert p - p == 0
    assert p + (-p) == 0


@given(polys(max_terms=3), polys(max_terms=3), polys(max_terms=3))
def test_multiplication_ring(p, q, r):
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * Poly.const(1) == p
    assert p * Poly.zero() == 0


@given(polys(max_terms=3), rationals)
def test_scalar_ops(p, c):
    assert p.scale(c) == p * c
    assert c * p == p * c
    assert p + c == p + Poly.const(c)
    assert (c - p) == -(p - c)


@given(polys(max_terms=3))
def test_pow_matches_repeated_product(p):
    assert p**0 == 1
    assert p**1 == p
    assert p**3 == p * p * p


# -- calculus ---------------------------------------------------------------------


@given(polys(max_terms=3), polys(max_terms=3), t_vars)
def test_leibniz(p, q, v):
    assert (p * q).diff(v) == p.diff(v) * q + p * q.diff(v)


@given(polys(), t_vars, t_vars)
def test_mixed_partials_commute(p, v, w):
    assert p.diff(v).diff(w) == p.diff(w).diff(v)


@given(polys(), t_vars)
def test_higher_order_derivative(p, v):
    assert p.diff(v, 2) == p.diff(v).diff(v)
    assert p.diff(v, 0) == p


def test_derivative_examples():
    p = (tvar(1) ** 3).scale(Fraction(1, 3)) - tvar(3)
    assert p.diff(VarId(Family.T, 1, 1)) == tvar(1) ** 2
    assert p.diff(VarId(Family.T, 1, 3)) == Poly.const(-1)
    assert Poly.const(5).diff(VarId(Family.T, 1, 1)) == 0


# -- substitution ------------------------------------------------------------------


@given(polys(), rationals, rationals)
def test_shift_roundtrip(p, a, b):
    forward = {VarId(Family.T, 1, 1): a, VarId(Family.T, 1, 2): b}
    backward = {VarId(Family.T, 1, 1): -a, VarId(Family.T, 1, 2): -b}
    assert shift_vars(shift_vars(p, forward), backward) == p


@given(polys(max_index=3), rationals, st.lists(rationals, min_size=3, max_size=3))
def test_shift_agrees_with_evaluation(p, c, vals):
    v1 = VarId(Family.T, 1, 1)
    assignment = {VarId(Family.T, 1, i): vals[i - 1] for i in range(1, 4)}
    shifted_assignment = dict(assignment)
    shifted_assignment[v1] = assignment[v1] + c
    assert eval_poly(shift_vars(p, {v1: c}), assignment) == eval_poly(
        p, shifted_assignment
    )


@given(polys())
def test_rename_family_roundtrip(p):
    assert rename_family(rename_family(p, Family.T, Family.Y), Family.Y, Family.T) == p


def test_relabel_collision_rejected():
    # two variables of one monomial may not collapse to the same target
    p = tvar(1) * tvar(2)
    with pytest.raises(ValueError):
        relabel_vars(p, lambda v: (VarId(Family.T, 1, 1), 1))


def test_relabel_merging_across_terms_accumulates():
    p = tvar(1) + tvar(2)
    assert relabel_vars(p, lambda v: (VarId(Family.T, 1, 1), 1)) == tvar(1).scale(2)


def test_relabel_scaling():
    p = tvar(2) ** 2
    q = relabel_vars(p, lambda v: (v, -1))
    assert q == tvar(2) ** 2
    q = relabel_vars(tvar(2), lambda v: (v, Fraction(1, 2)))
    assert q == tvar(2).scale(Fraction(1, 2))


# -- structure ---------------------------------------------------------------------


def test_weighted_degree():
    assert Poly.zero().weighted_degree() == -1
    assert Poly.const(7).weighted_degree() == 0
    assert (tvar(3) * tvar(1) ** 2).weighted_degree() == 5
    assert (tvar(3) + tvar(1) * tvar(2)).weighted_degree() == 3


def test_variables():
    p = tvar(1, 1, 2) * tvar(2, 2, 2) + Poly.const(1, 2)
    assert p.variables() == {VarId(Family.T, 1, 1), VarId(Family.T, 2, 2)}


# -- serialization ------------------------------------------------------------------


@given(polys(ncomp=2, families=(Family.T, Family.Y)))
def test_json_roundtrip(p):
    wire = json.dumps(p.to_json_obj(), sort_keys=True)
    assert Poly.from_json_obj(json.loads(wire)) == p


def test_from_json_rejects_bad_input():
    with pytest.raises(ValueError):
        Poly.from_json_obj({"ncomp": 1, "terms": [{"coeff": "1", "monomial": [["T", 1, 0, 1]]}]})
    with pytest.raises(ValueError):
        Poly.from_json_obj({"ncomp": 1, "terms": [{"coeff": "1", "monomial": [["T", 1, 1, 0]]}]})
    with pytest.raises(ValueError):
        Poly.from_json_obj(
            {
                "ncomp": 1,
                "terms": [{"coeff": "1", "monomial": [["T", 1, 1, 1], ["T", 1, 1, 2]]}],
            }
        )


# -- Miwa shifts and residues --------------------------------------------------------


@given(polys(max_terms=3), st.sampled_from([1, -1]))
def test_miwa_z0_coefficient_is_identity(p, sign):
    shifted = miwa_shift(p, Family.T, 1, sign)
    assert shifted.coeff(0) == p
    low = shifted.lowest()
    if low is not None:
        assert low >= -p.weighted_degree()


@given(polys(max_terms=3, max_index=3, max_exp=2), st.sampled_from([1, -1]))
def test_miwa_matches_operator_exponential(p, sign):
    assert miwa_shift(p, Family.T, 1, sign) == miwa_by_operator(p, Family.T, 1, sign)


@given(
    polys(max_terms=3, max_index=3, max_exp=2),
    st.lists(rationals, min_size=3, max_size=3),
    st.sampled_from([1, -1]),
)
def test_miwa_evaluates_to_substitution(p, vals, sign):
    # summing c_e * z0^e over the Laurent support must equal evaluating p at
    # t_i + sign * z0^{-i} / i
    z0 = Fraction(3, 2)
    assignment = {VarId(Family.T, 1, i): vals[i - 1] for i in range(1, 4)}
    shifted = miwa_shift(p, Family.T, 1, sign)
    series_value = sum(
        (eval_poly(c, assignment) * z0**e for e, c in shifted.coeffs.items()),
        Fraction(0),
    )
    moved = {
        v: val + Fraction(sign, v.index) * z0 ** (-v.index)
        for v, val in assignment.items()
    }
    assert series_value == eval_poly(p, moved)


def test_miwa_respects_component_and_family():
    p = tvar(1, 1, 2) * tvar(1, 2, 2)
    shifted = miwa_shift(p, Family.T, 2, -1)
    # component 1 variables pass through untouched
    assert shifted.coeff(0) == p
    assert shifted.coeff(-1) == tvar(1, 1, 2).scale(-1)


def test_exp_difference_basics():
    assert exp_difference_coeff(0) == 1
    assert exp_difference_coeff(1) == tvar(1) - yvar(1)
    # d/dt_j of the z^k coefficient is the z^{k-j} coefficient
    for k in range(1, 6):
        for j in range(1, k + 1):
            assert exp_difference_coeff(k).diff(VarId(Family.T, 1, j)) == (
                exp_difference_coeff(k - j)
            )


@given(st.lists(rationals, min_size=4, max_size=4))
def test_exp_difference_vanishes_on_diagonal(vals):
    # at y = t the series is exp(0): constant term 1, all higher terms 0
    for k in range(1, 5):
        p = exp_difference_coeff(k)
        assignment = {}
        for v in p.variables():
            assignment[v] = vals[v.index - 1]
            assignment[VarId(Family.T, 1, v.index)] = vals[v.index - 1]
            assignment[VarId(Family.Y, 1, v.index)] = vals[v.index - 1]
        assert eval_poly(p, assignment) == 0


def test_laurent_residue_frozen_examples():
    unit = LaurentZ.from_poly(Poly.const(1))
    # z^0 * exp-series has no z^{-1} coefficient
    assert laurent_mul_residue([unit]) == 0
    # z^{-2} * exp-series picks the z^1 series coefficient t1 - y1
    assert laurent_mul_residue([unit], extra_z_power=-2) == tvar(1) - yvar(1)


@given(polys(max_terms=2), polys(max_terms=2))
def test_laurent_multiplication(p, q):
    a = LaurentZ.from_poly(p, 1)
    b = LaurentZ.from_poly(q, -2)
    prod = a * b
    assert prod.coeff(-1) == p * q
    assert (a + b).coeff(1) == p
    assert (a + b).coeff(-2) == q
