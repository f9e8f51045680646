"""Tests for the hard-coded rank-2/3 root-system data."""

from fractions import Fraction as Q

import pytest

from liespec.root_systems import (
    ROOT_SYSTEM_NAMES,
    builtin_root_system,
    highest_root_nu,
    inner,
    weight_coefficients,
    weight_to_epsilon,
)

EXPECTED_B = {"A3": 8, "B3": 10, "C3": 16, "B2": 6}
EXPECTED_POSITIVE_ROOTS = {"A3": 6, "B3": 9, "C3": 9, "B2": 4}


@pytest.mark.parametrize("name", ROOT_SYSTEM_NAMES)
def test_verify_passes(name):
    builtin_root_system(name).verify()


@pytest.mark.parametrize("name", ROOT_SYSTEM_NAMES)
def test_b_constant(name):
    rs = builtin_root_system(name)
    assert rs.b == EXPECTED_B[name]
    # recompute from vectors rather than trusting the stored field
    top = tuple(x + y for x, y in zip(rs.highest_root, rs.beta))
    assert inner(top, top) - inner(rs.beta, rs.beta) == EXPECTED_B[name]


@pytest.mark.parametrize("name", ROOT_SYSTEM_NAMES)
def test_positive_root_count(name):
    rs = builtin_root_system(name)
    assert len(rs.positive_roots) == EXPECTED_POSITIVE_ROOTS[name]
    assert len(rs.simple_roots) == len(rs.fundamental_weights)


@pytest.mark.parametrize("name", ROOT_SYSTEM_NAMES)
def test_beta_is_half_sum_and_sum_of_fundamental_weights(name):
    rs = builtin_root_system(name)
    dim = len(rs.beta)
    half_sum = tuple(
        sum((r[i] for r in rs.positive_roots), Q(0)) / 2 for i in range(dim)
    )
    assert rs.beta == half_sum
    omega_sum = tuple(
        sum((w[i] for w in rs.fundamental_weights), Q(0)) for i in range(dim)
    )
    assert rs.beta == omega_sum


@pytest.mark.parametrize("name", ROOT_SYSTEM_NAMES)
def test_fundamental_weight_duality(name):
    rs = builtin_root_system(name)
    for i, w in enumerate(rs.fundamental_weights):
        for j, a in enumerate(rs.simple_roots):
            pairing = 2 * inner(w, a) / inner(a, a)
            assert pairing == (1 if i == j else 0)


@pytest.mark.parametrize(
    "name,expected", [("A3", (2, 1, 2)), ("B3", (1, 2, 1)), ("C3", (3, 1, 1)), ("B2", (1, 3))]
)
def test_highest_root_nu(name, expected):
    assert highest_root_nu(builtin_root_system(name)) == expected


@pytest.mark.parametrize("name", ROOT_SYSTEM_NAMES)
def test_weight_coordinate_round_trip(name):
    rs = builtin_root_system(name)
    rank = len(rs.simple_roots)
    samples = [(0,) * rank, (1,) * rank, tuple(range(1, rank + 1))]
    for coeffs in samples:
        vec = weight_to_epsilon(rs, coeffs)
        assert weight_coefficients(rs, vec) == coeffs


def test_unknown_name_rejected():
    with pytest.raises(ValueError):
        builtin_root_system("D4")
