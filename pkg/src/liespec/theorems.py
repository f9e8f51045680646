"""Number-theoretic eigenvalue tests for each group, plus the enumeration oracle.

For every group there is a purely arithmetic criterion deciding whether a
negative rational is a Laplace eigenvalue and how many highest weights sit at
that level, in terms of the strict representation counts L2/L3.  The
`cross_validate` report compares these verdicts against the exhaustive
spectrum enumeration on the full candidate grid and is the arbiter whenever a
case split is delicate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from typing import List, Optional, Tuple

from .groups import GroupDescriptor
from .number_theory import l2, l3
from .spectrum import enumerate_spectrum

CASE_TAGS = ("case_I", "case_II", "single_case", "both_cases", "none")

# Densest lambda-grid per root system: any eigenvalue has -denom*lambda integral.
GRID_DENOMINATOR = {"A3": 32, "B3": 40, "C3": 16, "B2": 24}


@dataclass(frozen=True)
class FormulaTrace:
    """The k value and strict counts behind a verdict, for display and audit."""

    k: Optional[int] = None
    l2: Optional[int] = None
    l3: Optional[int] = None
    formula: str = ""


@dataclass(frozen=True)
class EigenvalueVerdict:
    lam: Q
    is_eigenvalue: bool
    weight_count: int
    case_tag: str
    trace: FormulaTrace


def _nat(q: Q) -> Optional[int]:
    """q as a positive integer, else None."""
    return int(q) if q.denominator == 1 and q >= 1 else None


def _verdict(lam: Q, count: int, tag: str, trace: FormulaTrace) -> EigenvalueVerdict:
    if count == 0:
        tag = "none"
    return EigenvalueVerdict(lam, count > 0, count, tag, trace)


def check_eigenvalue(g: GroupDescriptor, lam: Q, gamma: Q = Q(1)) -> EigenvalueVerdict:
    """Decide whether lam < 0 is an eigenvalue of (G, -gamma*k_ad)."""
    lam = Q(lam)
    gamma = Q(gamma)
    if lam >= 0:
        raise ValueError("lambda must be negative")
    if gamma <= 0:
        raise ValueError("gamma must be positive")
    t = gamma * lam  # normalized to the gamma = 1 statements

    name = g.name
    if name == "su4":
        m = _nat(-32 * t)
        n = _nat(-8 * t)
        if m is not None and m % 8 == 7:
            assert n is None, "SU(4) case divisibility conditions must be exclusive"
            k = 20 + m
            c3 = l3(k)
            return _verdict(lam, 2 * c3, "case_I",
                            FormulaTrace(k=k, l3=c3, formula=f"2*L3({k})"))
        if n is not None:
            k = 5 + n
            c3, c2 = l3(k), l2(k)
            return _verdict(lam, 2 * c3 + c2, "case_II",
                            FormulaTrace(k=k, l2=c2, l3=c3, formula=f"2*L3({k})+L2({k})"))
        return _verdict(lam, 0, "none", FormulaTrace())

    if name == "su4-mod-pm":
        n = _nat(-8 * t)
        if n is not None:
            k = 5 + n
            c3, c2 = l3(k), l2(k)
            return _verdict(lam, 2 * c3 + c2, "single_case",
                            FormulaTrace(k=k, l2=c2, l3=c3, formula=f"2*L3({k})+L2({k})"))
        return _verdict(lam, 0, "none", FormulaTrace())

    if name == "psu4":
        # The stated residue alternatives on -4*lambda amount to: -4*lambda is a
        # positive integer (classes 1 mod 4 are allowed too but carry no
        # representations, so the counts below vanish there on their own).
        n = _nat(-4 * t)
        if n is not None:
            k = 5 + 2 * n
            c3, c2 = l3(k), l2(k)
            return _verdict(lam, 2 * c3 + c2, "single_case",
                            FormulaTrace(k=k, l2=c2, l3=c3, formula=f"2*L3({k})+L2({k})"))
        return _verdict(lam, 0, "none", FormulaTrace())

    if name in ("spin7", "so7"):
        five = _nat(-5 * t)
        forty = _nat(-40 * t)
        if five is not None:
            if name == "spin7":
                assert forty is None or forty % 4 != 1
            k = 35 + 8 * five
            c3 = l3(k)
            tag = "case_I" if name == "spin7" else "single_case"
            return _verdict(lam, c3, tag, FormulaTrace(k=k, l3=c3, formula=f"L3({k})"))
        if name == "spin7" and forty is not None and forty % 4 == 1:
            k = (35 + forty) // 4
            c3 = l3(k)
            return _verdict(lam, c3, "case_II", FormulaTrace(k=k, l3=c3, formula=f"L3({k})"))
        return _verdict(lam, 0, "none", FormulaTrace())

    if name in ("sp3", "psp3"):
        n = _nat(-16 * t) if name == "sp3" else _nat(-8 * t)
        if n is not None:
            k = 14 + n if name == "sp3" else 14 + 2 * n
            c3 = l3(k)
            return _verdict(lam, c3, "single_case", FormulaTrace(k=k, l3=c3, formula=f"L3({k})"))
        return _verdict(lam, 0, "none", FormulaTrace())

    if name in ("spin5", "so5"):
        three = _nat(-3 * t)
        twelve = _nat(-12 * t)
        if three is not None:
            if name == "spin5":
                assert twelve is None or twelve % 2 == 0
            k = 10 + 8 * three
            c2 = l2(k)
            tag = "case_I" if name == "spin5" else "single_case"
            return _verdict(lam, c2, tag, FormulaTrace(k=k, l2=c2, formula=f"L2({k})"))
        if name == "spin5" and twelve is not None and twelve % 2 == 1 and twelve >= 5:
            k = (5 + twelve) // 2
            c2 = l2(k)
            return _verdict(lam, c2, "case_II", FormulaTrace(k=k, l2=c2, formula=f"L2({k})"))
        return _verdict(lam, 0, "none", FormulaTrace())

    raise KeyError(f"no eigenvalue criterion for group {g.name!r}")


@dataclass(frozen=True)
class Mismatch:
    lam: Q
    enumerated_weights: int
    theorem_weights: int
    case_tag: str


@dataclass(frozen=True)
class ValidationReport:
    group: str
    cutoff: Q
    candidates_checked: int
    mismatches: Tuple[Mismatch, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.mismatches


def cross_validate(g: GroupDescriptor, cutoff: Q) -> ValidationReport:
    """Compare theorem verdicts with enumeration over the full candidate grid.

    The grid -m/denominator, m = 1..cutoff*denominator covers every possible
    eigenvalue (the Diophantine form forces -denom*lambda integral), so a clean
    report certifies both directions: no spurious eigenvalues and no missed
    weights.
    """
    cutoff = Q(cutoff)
    if cutoff <= 0:
        raise ValueError("cutoff must be positive")
    entries = enumerate_spectrum(g, cutoff, Q(1))
    enumerated = {e.lam: len(e.weights) for e in entries if e.lam < 0}

    denom = GRID_DENOMINATOR[g.root_system_name]
    mismatches: List[Mismatch] = []
    top = int(cutoff * denom)
    for m in range(1, top + 1):
        lam = Q(-m, denom)
        v = check_eigenvalue(g, lam)
        expected = enumerated.pop(lam, 0)
        if v.weight_count != expected or v.is_eigenvalue != (expected > 0):
            mismatches.append(Mismatch(lam, expected, v.weight_count, v.case_tag))
    # anything still here sits off the grid, which the theorems say cannot happen
    for lam, count in sorted(enumerated.items(), reverse=True):
        mismatches.append(Mismatch(lam, count, 0, "off_grid"))
    return ValidationReport(g.name, cutoff, top, tuple(mismatches))
