"""Eigenvalues, Weyl dimensions and full spectra by exhaustive enumeration.

Two independent evaluation routes are kept for both the eigenvalue and the
dimension: the generic root-product formulas over epsilon coordinates, and the
per-system closed forms in the shifted coordinates nu.  The public operations
evaluate both and refuse to return on disagreement.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache
from math import isqrt, lcm, prod
from typing import Dict, List, Sequence, Tuple

from .groups import GroupDescriptor
from .root_systems import RootSystemData, highest_root_nu, inner, weight_to_epsilon

Nu = Tuple[int, ...]


class SpectrumError(ArithmeticError):
    """A cross-check between the generic and closed-form routes failed."""


# Closed forms: positive-definite form Q(nu), constant c and denominator d with
# lambda = -(Q(nu) - c) / (d * gamma).
def _form_a3(n: Nu) -> int:
    return (n[0] + 2 * n[1] + n[2]) ** 2 + 2 * n[0] ** 2 + 2 * n[2] ** 2


def _form_b3(n: Nu) -> int:
    return (2 * n[0] + 2 * n[1] + n[2]) ** 2 + (2 * n[1] + n[2]) ** 2 + n[2] ** 2


def _form_c3(n: Nu) -> int:
    return (n[0] + n[1] + n[2]) ** 2 + (n[1] + n[2]) ** 2 + n[2] ** 2


def _form_b2(n: Nu) -> int:
    return (2 * n[0] + n[1]) ** 2 + n[1] ** 2


_FORMS = {
    "A3": (_form_a3, 20, 32),
    "B3": (_form_b3, 35, 40),
    "C3": (_form_c3, 14, 16),
    "B2": (_form_b2, 10, 24),
}


def _dim_a3(n: Nu) -> Tuple[int, int]:
    return prod((n[0], n[1], n[2], n[0] + n[1], n[1] + n[2], n[0] + n[1] + n[2])), 12


def _dim_b3(n: Nu) -> Tuple[int, int]:
    a, b, c = n
    return prod((a, b, c, a + b, b + c, 2 * b + c, a + b + c, a + 2 * b + c, 2 * a + 2 * b + c)), 720


def _dim_c3(n: Nu) -> Tuple[int, int]:
    a, b, c = n
    return prod((a, b, c, a + b, b + c, b + 2 * c, a + b + c, a + b + 2 * c, a + 2 * b + 2 * c)), 720


def _dim_b2(n: Nu) -> Tuple[int, int]:
    a, b = n
    return prod((a, b, a + b, 2 * a + b)), 6


_DIMS = {"A3": _dim_a3, "B3": _dim_b3, "C3": _dim_c3, "B2": _dim_b2}


@lru_cache(maxsize=None)
def _integer_model(name: str):
    """Integer-scaled weights and roots for fast exact generic evaluation.

    Returns (scale s, weights s*omega_i, beta s*beta, positive roots unscaled,
    beta-root pairings <s*beta, alpha>).  All entries are plain ints.
    """
    from .root_systems import builtin_root_system

    rs = builtin_root_system(name)
    denoms = [x.denominator for w in rs.fundamental_weights for x in w]
    denoms += [x.denominator for x in rs.beta]
    s = lcm(*denoms)
    weights = tuple(tuple(int(x * s) for x in w) for w in rs.fundamental_weights)
    roots = tuple(tuple(int(x) for x in alpha) for alpha in rs.positive_roots)
    sbeta = tuple(int(x * s) for x in rs.beta)
    beta_pairings = tuple(sum(a * b for a, b in zip(sbeta, alpha)) for alpha in roots)
    return s, weights, sbeta, roots, beta_pairings


def _check_nu(rs: RootSystemData, nu: Sequence[int]) -> Nu:
    nu = tuple(nu)
    if len(nu) != rs.rank:
        raise ValueError(f"{rs.name} has rank {rs.rank}, got nu of length {len(nu)}")
    if any(not isinstance(x, int) or x < 1 for x in nu):
        raise ValueError(f"shifted coordinates must be positive integers, got {nu}")
    return nu


def eigenvalue(rs: RootSystemData, nu: Sequence[int], gamma: Q = Q(1)) -> Q:
    """Laplace eigenvalue of the representation with shifted weight nu.

    Evaluated both through the generic quadratic expression over epsilon
    coordinates and through the per-system closed form; the two must agree.
    """
    nu = _check_nu(rs, nu)
    gamma = Q(gamma)
    if gamma <= 0:
        raise ValueError("gamma must be positive")
    top = weight_to_epsilon(rs, nu)
    generic = -(inner(top, top) - inner(rs.beta, rs.beta)) / (rs.b * gamma)
    form, const, denom = _FORMS[rs.name]
    closed = Q(-(form(nu) - const), 1) / (denom * gamma)
    if generic != closed:
        raise SpectrumError(f"{rs.name}: eigenvalue routes disagree at nu={nu}")
    return closed


def weyl_dimension(rs: RootSystemData, nu: Sequence[int]) -> int:
    """Dimension of the irreducible representation with shifted weight nu."""
    nu = _check_nu(rs, nu)
    s, weights, _sbeta, roots, beta_pairings = _integer_model(rs.name)
    top = tuple(sum(c * w[i] for c, w in zip(nu, weights)) for i in range(len(weights[0])))
    num = 1
    den = 1
    for alpha, bp in zip(roots, beta_pairings):
        num *= sum(a * b for a, b in zip(top, alpha))
        den *= bp
    if num % den != 0 or num <= 0:
        raise SpectrumError(f"{rs.name}: Weyl product is not a positive integer at nu={nu}")
    generic = num // den
    cnum, cden = _DIMS[rs.name](nu)
    if cnum % cden != 0 or generic != cnum // cden:
        raise SpectrumError(f"{rs.name}: dimension routes disagree at nu={nu}")
    return generic


def _closed_lambda(name: str, nu: Nu, gamma: Q) -> Q:
    form, const, denom = _FORMS[name]
    return Q(-(form(nu) - const), 1) / (denom * gamma)


def _closed_dim(name: str, nu: Nu) -> int:
    num, den = _DIMS[name](nu)
    if num % den != 0:
        raise SpectrumError(f"{name}: non-integral dimension at nu={nu}")
    return num // den


@dataclass(frozen=True)
class SpectrumEntry:
    """One eigenvalue level: exact lambda, multiplicity, contributing weights."""

    lam: Q
    multiplicity: int
    weights: Tuple[Tuple[Nu, int], ...]


def _scan_range(g: GroupDescriptor, first_lo: int, first_hi: int, bound: int,
                form, const, form_cap: Q) -> List[Tuple[Nu, int]]:
    """Collect (nu, form value) for nu with nu_1 in [first_lo, first_hi]."""
    rank = g.rank
    pred = g.weight_predicate
    hits: List[Tuple[Nu, int]] = []
    if rank == 3:
        for a in range(first_lo, first_hi + 1):
            for b in range(1, bound + 1):
                for c in range(1, bound + 1):
                    nu = (a, b, c)
                    f = form(nu)
                    if f <= form_cap and pred(nu):
                        hits.append((nu, f))
    else:
        for a in range(first_lo, first_hi + 1):
            for b in range(1, bound + 1):
                nu = (a, b)
                f = form(nu)
                if f <= form_cap and pred(nu):
                    hits.append((nu, f))
    return hits


def enumerate_spectrum(g: GroupDescriptor, cutoff: Q, gamma: Q = Q(1),
                       workers: int = 1) -> List[SpectrumEntry]:
    """All eigenvalues lambda with -cutoff <= lambda <= 0, complete and sorted.

    Completeness: the positive-definite form equals const + denom*gamma*|lambda|,
    so on the slab |lambda| <= cutoff every coordinate is at most
    isqrt(const + denom*gamma*cutoff).  Output is canonical (descending lambda,
    weights in lex order) regardless of the worker count.
    """
    cutoff = Q(cutoff)
    gamma = Q(gamma)
    if cutoff <= 0:
        raise ValueError("cutoff must be positive")
    if gamma <= 0:
        raise ValueError("gamma must be positive")
    name = g.root_system_name
    form, const, denom = _FORMS[name]
    form_cap = const + denom * gamma * cutoff
    bound = max(1, isqrt(int(form_cap)))

    if workers <= 1:
        hits = _scan_range(g, 1, bound, bound, form, const, form_cap)
    else:
        step = max(1, (bound + workers - 1) // workers)
        chunks = [(lo, min(lo + step - 1, bound)) for lo in range(1, bound + 1, step)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(
                lambda c: _scan_range(g, c[0], c[1], bound, form, const, form_cap), chunks
            )
            hits = [h for part in parts for h in part]
        hits.sort()  # chunk boundaries preserve lex order, but be explicit

    by_lambda: Dict[Q, List[Tuple[Nu, int]]] = {}
    for nu, f in hits:
        lam = Q(-(f - const), 1) / (denom * gamma)
        by_lambda.setdefault(lam, []).append((nu, _closed_dim(name, nu)))

    entries = []
    for lam in sorted(by_lambda, reverse=True):
        ws = sorted(by_lambda[lam])
        entries.append(SpectrumEntry(lam, sum(d * d for _, d in ws), tuple(ws)))
    return entries


def adjoint_check(g: GroupDescriptor) -> Tuple[Q, int]:
    """(eigenvalue, dimension) at the highest-root weight, gamma = 1.

    Must come out as (-1, dim G) for every group.
    """
    rs = g.root_system
    nu = highest_root_nu(rs)
    if not g.weight_predicate(nu):
        raise SpectrumError(f"{g.name}: highest root rejected by lattice predicate")
    return eigenvalue(rs, nu, Q(1)), weyl_dimension(rs, nu)
