"""The nine compact connected simple Lie groups of rank two and three.

Each group is a root system plus a congruence condition picking out its
characteristic lattice inside the full weight lattice.  Membership is always
tested on the shifted coordinates nu_i = Lambda_i + 1; the unshifted weight
coefficients appear only at I/O boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator, Tuple

from .root_systems import RootSystemData, builtin_root_system

Nu = Tuple[int, ...]


def _no_constraint(nu: Nu) -> bool:
    return True


def _su4_mod_pm(nu: Nu) -> bool:
    return (nu[2] - nu[0]) % 2 == 0


def _psu4(nu: Nu) -> bool:
    return (nu[2] - nu[0] + 2 * nu[1]) % 4 == 2


def _so7(nu: Nu) -> bool:
    return nu[2] % 2 == 1


def _psp3(nu: Nu) -> bool:
    return (nu[0] - nu[2]) % 2 == 0


def _so5(nu: Nu) -> bool:
    return nu[1] % 2 == 1


@dataclass(frozen=True)
class GroupDescriptor:
    """A compact connected simple Lie group, keyed by its CLI identifier."""

    name: str
    display_name: str
    root_system_name: str
    dim: int
    pi1_order: int
    center_order: int
    weight_predicate: Callable[[Nu], bool]
    aliases: Tuple[str, ...] = field(default=())

    @property
    def root_system(self) -> RootSystemData:
        return builtin_root_system(self.root_system_name)

    @property
    def rank(self) -> int:
        return self.root_system.rank


_GROUPS = {
    g.name: g
    for g in (
        GroupDescriptor("su4", "SU(4)", "A3", 15, 1, 4, _no_constraint, ("Spin(6)",)),
        GroupDescriptor("su4-mod-pm", "SU(4)/{±E4}", "A3", 15, 2, 2, _su4_mod_pm, ("SO(6)",)),
        GroupDescriptor("psu4", "PSU(4)", "A3", 15, 4, 1, _psu4, ("SO(6)/{±E6}",)),
        GroupDescriptor("spin7", "Spin(7)", "B3", 21, 1, 2, _no_constraint),
        GroupDescriptor("so7", "SO(7)", "B3", 21, 2, 1, _so7),
        GroupDescriptor("sp3", "Sp(3)", "C3", 21, 1, 2, _no_constraint),
        GroupDescriptor("psp3", "PSp(3)", "C3", 21, 2, 1, _psp3),
        GroupDescriptor("spin5", "Spin(5)", "B2", 10, 1, 2, _no_constraint),
        GroupDescriptor("so5", "SO(5)", "B2", 10, 2, 1, _so5),
    )
}

GROUP_NAMES = tuple(_GROUPS)


def descriptor(group_name: str) -> GroupDescriptor:
    """Look up a group by CLI identifier (`su4`, `su4-mod-pm`, ..., `so5`)."""
    key = group_name.strip().lower().replace("_", "-")
    try:
        return _GROUPS[key]
    except KeyError:
        raise KeyError(f"unknown group {group_name!r}; expected one of {', '.join(GROUP_NAMES)}") from None


def highest_weights_of(g: GroupDescriptor, nu_bound: int) -> Iterator[Nu]:
    """Yield all shifted weights nu of g with max nu_i <= nu_bound, in lex order."""
    if nu_bound < 1:
        raise ValueError("nu_bound must be >= 1")
    for nu in product(range(1, nu_bound + 1), repeat=g.rank):
        if g.weight_predicate(nu):
            yield nu
