"""Exact epsilon-coordinate data for the root systems A3, B3, C3 and B2.

Everything is stored over the orthonormal epsilon basis as tuples of
``Fraction``; no floating point enters this module.  The hard-coded data is
re-verified on construction so a transcription slip fails loudly instead of
silently corrupting every downstream computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import lru_cache
from typing import Sequence, Tuple

Vector = Tuple[Q, ...]

ROOT_SYSTEM_NAMES = ("A3", "B3", "C3", "B2")


class RootSystemError(ValueError):
    """Stored root-system data failed a consistency check."""


def inner(u: Vector, v: Vector) -> Q:
    """Exact Euclidean dot product in epsilon coordinates."""
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Q(0))


def _v(*coords) -> Vector:
    return tuple(Q(c) for c in coords)


def _half_integer_pairing(alpha: Vector, beta: Vector) -> Q:
    # 2(alpha, beta) / (alpha, alpha), the integer-valued pairing of root theory
    return 2 * inner(alpha, beta) / inner(alpha, alpha)


@dataclass(frozen=True)
class RootSystemData:
    """One of the four built-in root systems, fully materialised."""

    name: str
    simple_roots: Tuple[Vector, ...]
    positive_roots: Tuple[Vector, ...]
    fundamental_weights: Tuple[Vector, ...]
    beta: Vector
    highest_root: Vector
    b: int

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    def verify(self) -> None:
        """Re-derive every stored quantity from the vectors; raise on mismatch."""
        half_sum = tuple(
            sum((root[i] for root in self.positive_roots), Q(0)) / 2
            for i in range(len(self.beta))
        )
        if half_sum != self.beta:
            raise RootSystemError(f"{self.name}: beta is not half the sum of positive roots")

        for i, w in enumerate(self.fundamental_weights):
            for j, a in enumerate(self.simple_roots):
                expected = Q(1 if i == j else 0)
                if _half_integer_pairing(a, w) != expected:
                    raise RootSystemError(f"{self.name}: duality fails at omega_{i+1}, alpha_{j+1}")

        top = tuple(a + b for a, b in zip(self.highest_root, self.beta))
        b_recomputed = inner(top, top) - inner(self.beta, self.beta)
        if b_recomputed != self.b:
            raise RootSystemError(f"{self.name}: b mismatch, got {b_recomputed}")

        for alpha in self.positive_roots:
            p = _half_integer_pairing(alpha, self.beta)
            if p.denominator != 1 or p <= 0:
                raise RootSystemError(f"{self.name}: pairing of beta with {alpha} is not a positive integer")

        expected_count = {"A3": 6, "B3": 9, "C3": 9, "B2": 4}[self.name]
        if len(self.positive_roots) != expected_count:
            raise RootSystemError(f"{self.name}: wrong number of positive roots")


_RAW = {
    "A3": dict(
        simple_roots=(_v(1, -1, 0, 0), _v(0, 1, -1, 0), _v(0, 0, 1, -1)),
        positive_roots=(
            _v(1, -1, 0, 0), _v(0, 1, -1, 0), _v(0, 0, 1, -1),
            _v(1, 0, -1, 0), _v(0, 1, 0, -1), _v(1, 0, 0, -1),
        ),
        fundamental_weights=(
            _v("3/4", "-1/4", "-1/4", "-1/4"),
            _v("1/2", "1/2", "-1/2", "-1/2"),
            _v("1/4", "1/4", "1/4", "-3/4"),
        ),
        beta=_v("3/2", "1/2", "-1/2", "-3/2"),
        highest_root=_v(1, 0, 0, -1),
        b=8,
    ),
    "B3": dict(
        simple_roots=(_v(1, -1, 0), _v(0, 1, -1), _v(0, 0, 1)),
        positive_roots=(
            _v(1, 0, 0), _v(0, 1, 0), _v(0, 0, 1),
            _v(1, -1, 0), _v(1, 1, 0), _v(1, 0, -1),
            _v(1, 0, 1), _v(0, 1, -1), _v(0, 1, 1),
        ),
        fundamental_weights=(_v(1, 0, 0), _v(1, 1, 0), _v("1/2", "1/2", "1/2")),
        beta=_v("5/2", "3/2", "1/2"),
        highest_root=_v(1, 1, 0),
        b=10,
    ),
    "C3": dict(
        simple_roots=(_v(1, -1, 0), _v(0, 1, -1), _v(0, 0, 2)),
        positive_roots=(
            _v(2, 0, 0), _v(0, 2, 0), _v(0, 0, 2),
            _v(1, -1, 0), _v(1, 1, 0), _v(1, 0, -1),
            _v(1, 0, 1), _v(0, 1, -1), _v(0, 1, 1),
        ),
        fundamental_weights=(_v(1, 0, 0), _v(1, 1, 0), _v(1, 1, 1)),
        beta=_v(3, 2, 1),
        highest_root=_v(2, 0, 0),
        b=16,
    ),
    "B2": dict(
        simple_roots=(_v(1, -1), _v(0, 1)),
        positive_roots=(_v(1, 0), _v(0, 1), _v(1, -1), _v(1, 1)),
        fundamental_weights=(_v(1, 0), _v("1/2", "1/2")),
        beta=_v("3/2", "1/2"),
        highest_root=_v(1, 1),
        b=6,
    ),
}


@lru_cache(maxsize=None)
def builtin_root_system(name: str) -> RootSystemData:
    """Return the verified, immutable data for one of A3, B3, C3, B2."""
    if name not in _RAW:
        raise ValueError(f"unknown root system {name!r}; expected one of {ROOT_SYSTEM_NAMES}")
    rs = RootSystemData(name=name, **_RAW[name])
    rs.verify()
    return rs


def weight_to_epsilon(rs: RootSystemData, coeffs: Sequence[int]) -> Vector:
    """Map coefficients over the fundamental weights to epsilon coordinates."""
    if len(coeffs) != rs.rank:
        raise ValueError(f"{rs.name} has rank {rs.rank}, got {len(coeffs)} coefficients")
    dim = len(rs.beta)
    return tuple(
        sum((Q(c) * w[i] for c, w in zip(coeffs, rs.fundamental_weights)), Q(0))
        for i in range(dim)
    )


def weight_coefficients(rs: RootSystemData, v: Vector) -> Tuple[int, ...]:
    """Express a lattice vector over the fundamental weights (integer pairing)."""
    out = []
    for alpha in rs.simple_roots:
        c = _half_integer_pairing(alpha, v)
        if c.denominator != 1:
            raise ValueError(f"{v} is not in the weight lattice of {rs.name}")
        out.append(int(c))
    return tuple(out)


def highest_root_nu(rs: RootSystemData) -> Tuple[int, ...]:
    """Shifted coordinates (Lambda_i + 1) of the highest root."""
    return tuple(c + 1 for c in weight_coefficients(rs, rs.highest_root))
