"""Global symmetries: finite permutation groups acting on the simple-object
labels of a ModularData by fusion-ring automorphisms.

The validation checks necessary conditions (unit, duals, fusion, twists
preserved).  Whether a permutation that passes actually lifts to a braided
autoequivalence is not decidable from this data; ranks downstream are
computed for a *purported* global symmetry.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from . import perms
from .errors import (
    DegreeMismatch,
    InconsistencyError,
    NotAnAutomorphism,
    ParseError,
)
from .mtc import ModularData, ValidationReport, Violation, load_mtc, parse_mtc
from .perms import DEFAULT_GROUP_CAP, FiniteGroup, Permutation


@dataclass(frozen=True)
class GlobalSymmetry:
    mtc: ModularData
    group: FiniteGroup

    @property
    def order(self) -> int:
        return self.group.order

    def label_cycles(self, p: Permutation) -> str:
        """Cycle notation over labels, e.g. ``"(e m)"``; identity is ``"()"``."""
        parts = [
            "(" + " ".join(self.mtc.labels[pt] for pt in cycle) + ")"
            for cycle in perms.cycle_decomposition(p).cycles
            if len(cycle) > 1
        ]
        return "".join(parts) if parts else "()"


def validate_automorphism(m: ModularData, p: Permutation) -> ValidationReport:
    """Check that p preserves the unit, duals, fusion coefficients, and twists."""
    if p.degree != m.rank:
        raise DegreeMismatch(
            f"permutation degree {p.degree} != number of labels {m.rank}"
        )
    violations: list[Violation] = []
    lab = m.labels
    g = p.images

    if g[m.unit] != m.unit:
        violations.append(Violation(
            "unit", (m.unit,),
            f"unit maps to {lab[g[m.unit]]!r}, must be fixed",
        ))

    for x in range(m.rank):
        if g[m.dual[x]] != m.dual[g[x]]:
            violations.append(Violation(
                "dual", (x,),
                f"dual of {lab[x]!r}: image of dual is {lab[g[m.dual[x]]]!r} "
                f"but dual of image is {lab[m.dual[g[x]]]!r}",
            ))
        if m.twists[g[x]] != m.twists[x]:
            violations.append(Violation(
                "twist", (x,),
                f"twist({lab[x]!r}) = {m.twists[x]} but "
                f"twist({lab[g[x]]!r}) = {m.twists[g[x]]}",
            ))

    # N is preserved iff it agrees on the support in both directions;
    # triples with N = 0 on both sides need no check.
    ginv = perms.inverse(p).images
    seen: set[tuple[int, int, int]] = set()
    for (x, y, z) in m.fusion:
        for (a, b, c) in ((x, y, z), (ginv[x], ginv[y], ginv[z])):
            if (a, b, c) in seen:
                continue
            seen.add((a, b, c))
            if m.n(g[a], g[b], g[c]) != m.n(a, b, c):
                violations.append(Violation(
                    "fusion", (a, b, c),
                    f"N_{{{lab[a]},{lab[b]}}}^{lab[c]} = {m.n(a, b, c)} but "
                    f"N_{{{lab[g[a]]},{lab[g[b]]}}}^{lab[g[c]]} = {m.n(g[a], g[b], g[c])}",
                ))

    return ValidationReport(tuple(violations))


def build_symmetry(
    m: ModularData,
    generators: dict[str, Permutation],
    cap: int = DEFAULT_GROUP_CAP,
) -> GlobalSymmetry:
    """Validate the generators, close them into a group, re-validate everything."""
    for name, p in generators.items():
        report = validate_automorphism(m, p)
        if not report.ok:
            raise NotAnAutomorphism(name, report)
    group = perms.generate_group(m.rank, generators, cap=cap)
    # cheap at desk scale and catches composition bugs
    for element in group.elements:
        report = validate_automorphism(m, element)
        if not report.ok:
            raise InconsistencyError(
                f"group element {perms.format_cycles(element)} fails validation "
                "although all generators passed"
            )
    return GlobalSymmetry(m, group)


# -- symmetry file format --------------------------------------------------

def parse_generator(m: ModularData, spec) -> Permutation:
    """A generator is either a list of image labels (in declaration order)
    or a cycle-notation string over labels, e.g. ``"(e m)"``."""
    if isinstance(spec, str):
        images = list(range(m.rank))
        mentioned: set[int] = set()
        for tokens in perms.tokenize_cycles(spec):
            points = [m.label_index(tok) for tok in tokens]
            if len(set(points)) != len(points) or mentioned & set(points):
                raise ParseError(f"repeated label in cycle notation {spec!r}")
            mentioned |= set(points)
            for a, b in zip(points, points[1:] + points[:1]):
                images[a] = b
        return Permutation(tuple(images))
    if isinstance(spec, list):
        if len(spec) != m.rank:
            raise ParseError(
                f"generator image list has {len(spec)} entries, expected {m.rank}"
            )
        return Permutation(tuple(m.label_index(l) for l in spec))
    raise ParseError(f"generator must be a string or a list, got {spec!r}")


def load_symmetry(
    path: str | Path, mtc: ModularData | None = None
) -> tuple[ModularData, dict[str, Permutation]]:
    """Read a symmetry file; returns the ModularData and named generators.

    The file's "mtc" field (a path relative to the file, or an inline MTC
    document) is used unless an explicit ModularData is supplied.
    """
    path = Path(path)
    try:
        doc = json.loads(path.read_bytes().decode("utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno} col {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict) or "generators" not in doc:
        raise ParseError('symmetry file must be an object with a "generators" field')
    if mtc is None:
        if "mtc" not in doc:
            raise ParseError('symmetry file has no "mtc" field and none was supplied')
        ref = doc["mtc"]
        if isinstance(ref, str):
            mtc = load_mtc(path.parent / ref)
        else:
            mtc = parse_mtc(json.dumps(ref))
    generators = {
        name: parse_generator(mtc, spec) for name, spec in doc["generators"].items()
    }
    return mtc, generators
