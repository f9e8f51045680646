"""Tests for eigenvalues, Weyl dimensions and spectrum enumeration."""

from fractions import Fraction as Q
from itertools import product

import pytest

from liespec.groups import GROUP_NAMES, descriptor
from liespec.root_systems import ROOT_SYSTEM_NAMES, builtin_root_system
from liespec.spectrum import (
    adjoint_check,
    eigenvalue,
    enumerate_spectrum,
    weyl_dimension,
)


def _rs(name):
    return builtin_root_system(name)


def test_eigenvalue_examples():
    assert eigenvalue(_rs("A3"), (2, 1, 2), Q(1)) == -1
    assert eigenvalue(_rs("C3"), (2, 1, 1), Q(1)) == Q(-7, 16)
    assert eigenvalue(_rs("B3"), (1, 1, 2), Q(1)) == Q(-21, 40)
    for name in ROOT_SYSTEM_NAMES:
        rs = _rs(name)
        assert eigenvalue(rs, (1,) * rs.rank, Q(3, 7)) == 0


def test_weyl_dimension_examples():
    assert weyl_dimension(_rs("A3"), (2, 1, 1)) == 4
    assert weyl_dimension(_rs("B3"), (1, 2, 1)) == 21
    assert weyl_dimension(_rs("C3"), (1, 2, 1)) == 14
    for name in ROOT_SYSTEM_NAMES:
        rs = _rs(name)
        assert weyl_dimension(rs, (1,) * rs.rank) == 1


@pytest.mark.parametrize("name", GROUP_NAMES)
def test_adjoint_check(name):
    g = descriptor(name)
    assert adjoint_check(g) == (Q(-1), g.dim)


SMALLEST_NONZERO = {
    "su4": (Q(-15, 32), 32),
    "su4-mod-pm": (Q(-5, 8), 36),
    "psu4": (Q(-1), 225),
    "spin7": (Q(-21, 40), 64),
    "so7": (Q(-3, 5), 49),
    "sp3": (Q(-7, 16), 36),
    "psp3": (Q(-3, 4), 196),
    "spin5": (Q(-5, 12), 16),
    "so5": (Q(-2, 3), 25),
}


@pytest.mark.parametrize("name", GROUP_NAMES)
def test_smallest_nonzero_eigenvalue(name):
    lam, mult = SMALLEST_NONZERO[name]
    entries = enumerate_spectrum(descriptor(name), -lam)
    assert entries[0].lam == 0 and entries[0].multiplicity == 1
    assert entries[-1].lam == lam
    assert entries[-1].multiplicity == mult


def test_enumeration_examples():
    su4 = enumerate_spectrum(descriptor("su4"), Q(15, 32))
    assert [(e.lam, e.multiplicity) for e in su4] == [(0, 1), (Q(-15, 32), 32)]
    spin5 = enumerate_spectrum(descriptor("spin5"), Q(5, 12))
    assert [(e.lam, e.multiplicity) for e in spin5] == [(0, 1), (Q(-5, 12), 16)]


@pytest.mark.parametrize("name", GROUP_NAMES)
def test_entry_invariants(name):
    g = descriptor(name)
    entries = enumerate_spectrum(g, Q(2))
    assert [e.lam for e in entries] == sorted((e.lam for e in entries), reverse=True)
    for e in entries:
        assert e.multiplicity == sum(d * d for _, d in e.weights)
        assert list(e.weights) == sorted(e.weights)
        for nu, d in e.weights:
            assert g.weight_predicate(nu)
            assert eigenvalue(g.root_system, nu, Q(1)) == e.lam
            assert weyl_dimension(g.root_system, nu) == d


@pytest.mark.parametrize("name", ROOT_SYSTEM_NAMES)
def test_integrality_and_zero_isolation(name):
    # also exercises the built-in closed-form vs. root-product cross-assertion
    rs = _rs(name)
    one = (1,) * rs.rank
    for nu in product(range(1, 31), repeat=rs.rank):
        d = weyl_dimension(rs, nu)
        assert isinstance(d, int) and d >= 1
        lam = eigenvalue(rs, nu, Q(1))
        assert (lam == 0) == (nu == one)
        assert lam <= 0


@pytest.mark.parametrize("gamma", [Q(1, 2), Q(2), Q(3, 7)])
def test_gamma_scaling(gamma):
    for name in ("su4", "spin7", "so5"):
        g = descriptor(name)
        base = enumerate_spectrum(g, Q(1))
        scaled = enumerate_spectrum(g, Q(1) / gamma, gamma)
        assert [(e.lam * gamma, e.multiplicity, e.weights) for e in scaled] == [
            (e.lam, e.multiplicity, e.weights) for e in base
        ]


CHAINS = [("psu4", "su4-mod-pm"), ("su4-mod-pm", "su4"), ("so7", "spin7"),
          ("psp3", "sp3"), ("so5", "spin5")]


@pytest.mark.parametrize("smaller,larger", CHAINS)
def test_sublattice_spectrum_inclusion(smaller, larger):
    cutoff = Q(2)
    sub = {e.lam: set(e.weights) for e in enumerate_spectrum(descriptor(smaller), cutoff)}
    sup = {e.lam: set(e.weights) for e in enumerate_spectrum(descriptor(larger), cutoff)}
    for lam, weights in sub.items():
        assert lam in sup
        assert weights <= sup[lam]


@pytest.mark.parametrize("name", GROUP_NAMES)
def test_completeness_against_naive_scan(name):
    # bound-independence: the derived enumeration bound misses nothing a
    # brute scan over max nu_i <= 40 finds
    g = descriptor(name)
    cutoff = Q(3)
    enumerated = {
        (e.lam, nu) for e in enumerate_spectrum(g, cutoff) for nu, _ in e.weights
    }
    naive = set()
    for nu in product(range(1, 41), repeat=g.rank):
        if not g.weight_predicate(nu):
            continue
        lam = eigenvalue(g.root_system, nu, Q(1))
        if lam >= -cutoff:
            naive.add((lam, nu))
    assert enumerated == naive


def test_workers_deterministic():
    g = descriptor("spin7")
    base = enumerate_spectrum(g, Q(3))
    for workers in (2, 3, 8):
        assert enumerate_spectrum(g, Q(3), workers=workers) == base


def test_bad_cutoff_rejected():
    with pytest.raises(ValueError):
        enumerate_spectrum(descriptor("su4"), Q(0))
