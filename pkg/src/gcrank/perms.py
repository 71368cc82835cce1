"""Exact permutations and finite permutation groups.

Points are 0-indexed internally.  All user-facing cycle notation is
1-indexed, e.g. ``"(1 2 3)(4 5)"``; the empty string denotes the identity.
Composition applies the *right* argument first:
``compose(p, q)(i) == p(q(i))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import (
    DegreeMismatch,
    GcrankError,
    GroupTooLarge,
    InvalidDegree,
    ParseError,
)

DEFAULT_GROUP_CAP = 10**6


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0, ..., d-1}; ``images[i]`` is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) == 0:
            raise InvalidDegree("degree must be >= 1")
        if sorted(self.images) != list(range(len(self.images))):
            raise GcrankError(f"images {self.images} are not a bijection")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def is_identity(self) -> bool:
        return all(im == i for i, im in enumerate(self.images))

    def __str__(self) -> str:
        return format_cycles(self)


def identity(degree: int) -> Permutation:
    if degree < 1:
        raise InvalidDegree(f"degree must be >= 1, got {degree}")
    return Permutation(tuple(range(degree)))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The permutation applying q first, then p."""
    if p.degree != q.degree:
        raise DegreeMismatch(f"degrees {p.degree} and {q.degree} differ")
    return Permutation(tuple(p.images[q.images[i]] for i in range(q.degree)))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, im in enumerate(p.images):
        inv[im] = i
    return Permutation(tuple(inv))


def fixed_points(p: Permutation) -> frozenset[int]:
    return frozenset(i for i, im in enumerate(p.images) if im == i)


@dataclass(frozen=True)
class CycleDecomposition:
    """Cycles of a permutation, fixed points included as 1-cycles.

    Each cycle starts at its minimal point; cycles are sorted by that point.
    """

    degree: int
    cycles: tuple[tuple[int, ...], ...]

    def to_permutation(self) -> Permutation:
        images = list(range(self.degree))
        for cycle in self.cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a] = b
        return Permutation(tuple(images))


def cycle_decomposition(p: Permutation) -> CycleDecomposition:
    seen = [False] * p.degree
    cycles = []
    for start in range(p.degree):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        nxt = p.images[start]
        while nxt != start:
            cycle.append(nxt)
            seen[nxt] = True
            nxt = p.images[nxt]
        cycles.append(tuple(cycle))
    return CycleDecomposition(p.degree, tuple(cycles))


# -- cycle-notation text format -------------------------------------------

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def tokenize_cycles(text: str) -> list[list[str]]:
    """Split ``"(a b)(c d e)"`` into token lists; raises ParseError on junk."""
    stripped = text.strip()
    if stripped and not re.fullmatch(r"(\s*\([^()]*\)\s*)+", stripped):
        raise ParseError(f"malformed cycle notation: {text!r}")
    return [m.group(1).split() for m in _CYCLE_RE.finditer(stripped)]


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-indexed cycle notation into a Permutation of the given degree."""
    images = list(range(degree))
    mentioned: set[int] = set()
    for tokens in tokenize_cycles(text):
        points = []
        for tok in tokens:
            try:
                val = int(tok)
            except ValueError:
                raise ParseError(f"non-integer point {tok!r} in {text!r}") from None
            if not 1 <= val <= degree:
                raise ParseError(f"point {val} out of range 1..{degree}")
            points.append(val - 1)
        if len(set(points)) != len(points) or mentioned & set(points):
            raise ParseError(f"repeated point in cycle notation {text!r}")
        mentioned |= set(points)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a] = b
    return Permutation(tuple(images))


def format_cycles(p: Permutation) -> str:
    """1-indexed cycle notation; fixed points omitted; identity is ``"()"``."""
    parts = [
        "(" + " ".join(str(pt + 1) for pt in cycle) + ")"
        for cycle in cycle_decomposition(p).cycles
        if len(cycle) > 1
    ]
    return "".join(parts) if parts else "()"


# -- finite groups ---------------------------------------------------------

@dataclass(frozen=True)
class FiniteGroup:
    """A group of permutations, materialized as an explicit element list.

    Element 0 is the identity; the order of the rest is the breadth-first
    discovery order from the identity, which is deterministic.
    """

    degree: int
    elements: tuple[Permutation, ...]
    generator_names: dict[str, int] = field(default_factory=dict)

    @property
    def order(self) -> int:
        return len(self.elements)

    def index_of(self, p: Permutation) -> int | None:
        return self._index().get(p.images)

    def __contains__(self, p: Permutation) -> bool:
        return p.images in self._index()

    def _index(self) -> dict[tuple[int, ...], int]:
        cached = getattr(self, "_index_cache", None)
        if cached is None:
            cached = {e.images: i for i, e in enumerate(self.elements)}
            object.__setattr__(self, "_index_cache", cached)
        return cached


def generate_group(
    degree: int,
    generators: dict[str, Permutation],
    cap: int = DEFAULT_GROUP_CAP,
) -> FiniteGroup:
    """Closure of the generators under composition, breadth-first."""
    for name, g in generators.items():
        if g.degree != degree:
            raise DegreeMismatch(
                f"generator {name!r} has degree {g.degree}, expected {degree}"
            )
    gens = list(generators.values())
    start = identity(degree)
    elements = [start]
    seen = {start.images}
    frontier = [start]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                prod = compose(e, g)
                if prod.images not in seen:
                    if len(elements) >= cap:
                        raise GroupTooLarge(cap)
                    seen.add(prod.images)
                    elements.append(prod)
                    nxt.append(prod)
        frontier = nxt
    group = FiniteGroup(degree, tuple(elements))
    names = {
        name: group.index_of(g) for name, g in generators.items()
    }
    return FiniteGroup(degree, tuple(elements), names)


@dataclass(frozen=True)
class ConjugacyClassPartition:
    classes: tuple[tuple[int, ...], ...]

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.classes)


def conjugacy_classes(group: FiniteGroup) -> ConjugacyClassPartition:
    """Brute-force conjugation over all elements; fine at desk scale."""
    assigned = [False] * group.order
    classes = []
    for i, h in enumerate(group.elements):
        if assigned[i]:
            continue
        members = set()
        for k in group.elements:
            conj = compose(compose(k, h), inverse(k))
            members.add(group.index_of(conj))
        cls = tuple(sorted(members))
        for j in cls:
            assigned[j] = True
        classes.append(cls)
    return ConjugacyClassPartition(tuple(classes))


def orbits(group: FiniteGroup) -> list[frozenset[int]]:
    """Orbits of the group on {0, ..., degree-1}, sorted by minimal point."""
    seen = [False] * group.degree
    result = []
    for start in range(group.degree):
        if seen[start]:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            pt = frontier.pop()
            for e in group.elements:
                im = e.images[pt]
                if im not in orbit:
                    orbit.add(im)
                    frontier.append(im)
        for pt in orbit:
            seen[pt] = True
        result.append(frozenset(orbit))
    return result
