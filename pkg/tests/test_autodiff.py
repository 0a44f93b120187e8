"""Second-order jets against the finite-difference route.

The two evaluators share no code beyond expression parsing: eval_jet2
propagates value/gradient/hessian triples through the tree, while
finite_diff_jet2 samples plain values on a stencil.  Agreement between
them is the core correctness check for every derivative downstream.
"""

import numpy as np
import pytest

from solitonlab import DomainError, eval_jet2, finite_diff_jet2, parse_expression
from solitonlab.expressions import External, ScalarField, Var

from conftest import random_field

CHART = ("u", "v", "w")


def test_jet_of_quadratic_is_exact():
    f = parse_expression("3*u^2 + 2*u*v - w^2 + 5", CHART)
    p = np.array([1.2, -0.7, 0.4])
    jet = eval_jet2(f, p)
    assert abs(jet.value - (3 * 1.44 + 2 * 1.2 * -0.7 - 0.16 + 5)) < 1e-14
    expected_grad = np.array([6 * 1.2 + 2 * -0.7, 2 * 1.2, -0.8])
    assert np.abs(jet.gradient - expected_grad).max() < 1e-14
    expected_hess = np.array([[6.0, 2.0, 0.0], [2.0, 0.0, 0.0], [0.0, 0.0, -2.0]])
    assert np.abs(jet.hessian - expected_hess).max() < 1e-14


def test_jet_hessian_is_bitwise_symmetric():
    rng = np.random.default_rng(11)
    pts = rng.uniform(-1.2, 1.2, (6, 3))
    for _ in range(25):
        field, jets = random_field(rng, CHART, pts)
        for jet in jets:
            assert np.array_equal(jet.hessian, jet.hessian.T)


def test_jets_match_finite_differences_on_random_expressions():
    rng = np.random.default_rng(20240214)
    pts = rng.uniform(-1.5, 1.5, (8, 3))
    for _ in range(30):
        field, jets = random_field(rng, CHART, pts)
        for p, jet in zip(pts, jets):
            fd = finite_diff_jet2(field, p, h=1e-4)
            scale = max(
                1.0,
                abs(jet.value),
                np.abs(jet.gradient).max(),
                np.abs(jet.hessian).max(),
            )
            err = max(
                abs(fd.value - jet.value),
                np.abs(fd.gradient - jet.gradient).max(),
                np.abs(fd.hessian - jet.hessian).max(),
            )
            assert err <= 1e-8 + 1e-6 * scale


def test_finite_difference_step_scales_with_coordinate_size():
    f = parse_expression("u^2", ("u",))
    p = np.array([1.0e6])
    fd = finite_diff_jet2(f, p, h=1e-5)
    assert abs(fd.gradient[0] - 2.0e6) < 1e-2
    assert abs(fd.hessian[0, 0] - 2.0) < 1e-4


def test_mixed_partials_of_known_function():
    f = parse_expression("sin(u*v)", CHART)
    p = np.array([0.6, -0.9, 0.0])
    jet = eval_jet2(f, p)
    u, v = p[0], p[1]
    assert abs(jet.hessian[0, 1] - (np.cos(u * v) - u * v * np.sin(u * v))) < 1e-13
    fd = finite_diff_jet2(f, p)
    assert abs(fd.hessian[0, 1] - jet.hessian[0, 1]) < 1e-6


def test_division_jet_matches_quotient_rule():
    f = parse_expression("u / (v + 2)", CHART)
    p = np.array([1.4, -0.3, 0.0])
    jet = eval_jet2(f, p)
    v2 = p[1] + 2.0
    assert abs(jet.gradient[0] - 1.0 / v2) < 1e-14
    assert abs(jet.gradient[1] + p[0] / v2**2) < 1e-14
    assert abs(jet.hessian[1, 1] - 2.0 * p[0] / v2**3) < 1e-14
    assert abs(jet.hessian[0, 1] + 1.0 / v2**2) < 1e-14


def test_jet_domain_errors():
    f = parse_expression("1 / u", CHART)
    with pytest.raises(DomainError):
        eval_jet2(f, (0.0, 1.0, 1.0))
    g = parse_expression("ln(u)", CHART)
    with pytest.raises(DomainError):
        eval_jet2(g, (0.0, 1.0, 1.0))
    h = parse_expression("sqrt(u)", CHART)
    with pytest.raises(DomainError):
        eval_jet2(h, (0.0, 1.0, 1.0))
    k = parse_expression("exp(u)", CHART)
    with pytest.raises(DomainError):
        eval_jet2(k, (1.0e4, 1.0, 1.0))


def test_external_node_requires_two_derivatives():
    profile = External("prof", (np.sin, np.cos), Var("u"))
    field = ScalarField(("u",), profile)
    with pytest.raises(DomainError):
        eval_jet2(field, (0.3,))


def test_external_node_jets_use_supplied_derivatives():
    profile = External(
        "prof",
        (np.sin, np.cos, lambda t: -np.sin(t)),
        Var("u"),
    )
    field = ScalarField(("u",), profile)
    jet = eval_jet2(field, (0.7,))
    assert abs(jet.value - np.sin(0.7)) < 1e-15
    assert abs(jet.gradient[0] - np.cos(0.7)) < 1e-15
    assert abs(jet.hessian[0, 0] + np.sin(0.7)) < 1e-15
    fd = finite_diff_jet2(field, (0.7,))
    assert abs(fd.gradient[0] - jet.gradient[0]) < 1e-9
    assert abs(fd.hessian[0, 0] - jet.hessian[0, 0]) < 1e-5


def test_repeated_subtrees_are_evaluated_once():
    x = parse_expression("exp(0.5*u)", ("u",))
    shared = x * x + x * x
    jet = eval_jet2(shared, (0.4,))
    e = np.exp(0.2)
    assert abs(jet.value - 2 * e * e) < 1e-14
    assert abs(jet.gradient[0] - 2 * e * e) < 1e-13
