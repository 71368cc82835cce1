"""Graded ranks of G-crossed braided extensions from fixed-point data.

The rank of the g-graded component is the number of simple-object labels
fixed by the action of g.  The total rank is computed twice on every run,
as the fixed-point sum and as |G| times the orbit count, and the two are
asserted equal; a mismatch is a bug, never valid data.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from . import perms
from .errors import InconsistencyError, UnknownElement
from .perms import ConjugacyClassPartition, Permutation
from .symmetry import GlobalSymmetry


def _element_index(s: GlobalSymmetry, g: Permutation) -> int:
    idx = s.group.index_of(g)
    if idx is None:
        raise UnknownElement(
            f"permutation {perms.format_cycles(g)} is not an element of the group"
        )
    return idx


def graded_rank(s: GlobalSymmetry, g: Permutation) -> int:
    """Number of labels fixed by g: the rank of the g-graded component."""
    _element_index(s, g)
    return len(perms.fixed_points(g))


@dataclass(frozen=True)
class ModularInvariantMatrix:
    size: int
    entries: dict[tuple[int, int], int]

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def transpose(self) -> "ModularInvariantMatrix":
        return ModularInvariantMatrix(
            self.size, {(y, x): v for (x, y), v in self.entries.items()}
        )


def modular_invariant(s: GlobalSymmetry, g: Permutation) -> ModularInvariantMatrix:
    """The permutation matrix Z with Z[X, Y] = 1 iff g sends X to Y."""
    _element_index(s, g)
    return ModularInvariantMatrix(
        s.mtc.rank, {(x, g.images[x]): 1 for x in range(s.mtc.rank)}
    )


def trace(z: ModularInvariantMatrix) -> int:
    return sum(v for (x, y), v in z.entries.items() if x == y)


@dataclass(frozen=True)
class FullCenterDecomposition:
    """Multiset of label pairs (X, Y) with multiplicities, one summand each."""

    summands: Counter

    @property
    def total_multiplicity(self) -> int:
        return sum(self.summands.values())


def lagrangian_summands(s: GlobalSymmetry, g: Permutation) -> FullCenterDecomposition:
    """One summand (X, g(dual(X))) per label X."""
    _element_index(s, g)
    m = s.mtc
    return FullCenterDecomposition(
        Counter((x, g.images[m.dual[x]]) for x in range(m.rank))
    )


@dataclass(frozen=True)
class RankReport:
    symmetry: GlobalSymmetry
    per_element: tuple[int, ...]
    classes: ConjugacyClassPartition
    orbits: tuple[frozenset[int], ...]
    total_rank: int
    orbit_count: int
    burnside_total: int

    @property
    def per_class(self) -> tuple[tuple[int, int, int], ...]:
        """(representative element index, class size, rank) per conjugacy class."""
        return tuple(
            (cls[0], len(cls), self.per_element[cls[0]])
            for cls in self.classes.classes
        )

    def class_size_of(self, element_index: int) -> int:
        for cls in self.classes.classes:
            if element_index in cls:
                return len(cls)
        raise UnknownElement(f"element index {element_index} not in any class")

    def to_json_dict(self) -> dict:
        group = self.symmetry.group
        sizes = {}
        for cls in self.classes.classes:
            for i in cls:
                sizes[i] = len(cls)
        return {
            "per_element": [
                {
                    "element": perms.format_cycles(e),
                    "class_size": sizes[i],
                    "rank": str(self.per_element[i]),
                }
                for i, e in enumerate(group.elements)
            ],
            "total_rank": str(self.total_rank),
            "orbit_count": self.orbit_count,
            "group_order": group.order,
        }


def rank_report(s: GlobalSymmetry) -> RankReport:
    """Per-element and total ranks, with the Burnside cross-check applied."""
    per_element = tuple(
        len(perms.fixed_points(e)) for e in s.group.elements
    )
    total = sum(per_element)
    orbit_list = tuple(perms.orbits(s.group))
    burnside = s.group.order * len(orbit_list)
    if total != burnside:
        raise InconsistencyError(
            f"fixed-point sum {total} != |G| * orbit count {burnside}"
        )
    return RankReport(
        symmetry=s,
        per_element=per_element,
        classes=perms.conjugacy_classes(s.group),
        orbits=orbit_list,
        total_rank=total,
        orbit_count=len(orbit_list),
        burnside_total=burnside,
    )
