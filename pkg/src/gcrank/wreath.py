"""Ranks of permutation extensions C wr G for G <= S_n.

Everything is driven by cycle types: an element with |a| cycles contributes
rk(C)^|a|, so totals come from conjugacy-class data and are never computed
by materializing the n-fold product category.  A materialization helper for
small n exists to cross-check the shortcut against the general engine.
"""

from __future__ import annotations

import itertools
import math
import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from . import perms
from .errors import NotPrime, OutOfRange, ParseError, TooLarge
from .mtc import ModularData
from .perms import DEFAULT_GROUP_CAP, FiniteGroup, Permutation
from .symmetry import GlobalSymmetry, build_symmetry

PARTITION_CAP = 60
BRUTE_FORCE_CAP = 10**7


@dataclass(frozen=True)
class CycleType:
    """Cycle type a = (a_1, ..., a_n): a_j is the number of j-cycles."""

    n: int
    a: tuple[int, ...]

    def __post_init__(self):
        weighted = sum(map(operator.mul, itertools.count(1), self.a))
        if len(self.a) != self.n or weighted != self.n:
            raise OutOfRange(f"invalid cycle type {self.a} for n = {self.n}")

    @property
    def num_cycles(self) -> int:
        return sum(self.a)

    @cached_property
    def class_size(self) -> int:
        """n! / prod_j j^(a_j) a_j!, exact."""
        denom = 1
        for j, aj in enumerate(self.a, start=1):
            if aj:
                denom *= j**aj * math.factorial(aj)
        size, rem = divmod(math.factorial(self.n), denom)
        assert rem == 0
        return size

    def __str__(self) -> str:
        parts = [f"{j}^{aj}" for j, aj in enumerate(self.a, start=1) if aj]
        return " ".join(parts) if parts else "-"


def _integer_partitions(n: int):
    """All partitions of n as descending part lists (Zoghbi-Stojmenovic ZS1).

    Yields a shared buffer slice; consume each value before advancing."""
    if n == 1:
        yield [1]
        return
    x = [1] * n
    x[0] = n
    m = h = 1
    yield x[:1]
    while x[0] != 1:
        if x[h - 1] == 2:
            m += 1
            x[h - 1] = 1
            h -= 1
        else:
            r = x[h - 1] - 1
            t = m - h + 1
            x[h - 1] = r
            while t >= r:
                x[h] = r
                h += 1
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    x[h] = t
                    h += 1
        yield x[:m]


def partitions(n: int) -> list[CycleType]:
    """All p(n) cycle types, in reverse-lexicographic order on a."""
    if not 1 <= n <= PARTITION_CAP:
        raise OutOfRange(f"n must be in 1..{PARTITION_CAP}, got {n}")
    fact_n = math.factorial(n)
    types = []
    for part in _integer_partitions(n):
        a = [0] * n
        for j in part:
            a[j - 1] += 1
        ct = CycleType(n, tuple(a))
        # seed the cached class_size from the part multiset; iterating all
        # n slots of a per type dominates the p(n) ~ 10^5 runtime otherwise
        denom = 1
        for j in set(part):
            denom *= j ** a[j - 1] * math.factorial(a[j - 1])
        ct.__dict__["class_size"] = fact_n // denom
        types.append(ct)
    types.sort(key=lambda ct: ct.a, reverse=True)
    return types


def cycle_type_of(p: Permutation) -> CycleType:
    a = [0] * p.degree
    for cycle in perms.cycle_decomposition(p).cycles:
        a[len(cycle) - 1] += 1
    return CycleType(p.degree, tuple(a))


@dataclass(frozen=True)
class RankPolynomial:
    """Big-integer polynomial in the base rank; coefficients[k] is the
    coefficient of x^k, with zero constant term."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, x: int) -> int:
        result = 0
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    def __str__(self) -> str:
        parts = []
        for k in range(self.degree, 0, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            coeff = "" if c == 1 else f"{c}"
            power = "x" if k == 1 else f"x^{k}"
            parts.append(f"{coeff}{power}")
        if self.coefficients[0]:
            parts.append(str(self.coefficients[0]))
        return " + ".join(parts) if parts else "0"


def evaluate(poly: RankPolynomial, x: int) -> int:
    return poly.evaluate(x)


def rank_polynomial_symmetric(n: int) -> RankPolynomial:
    """Coefficient of x^k is the number of elements of S_n with k cycles."""
    coeffs = [0] * (n + 1)
    for ct in partitions(n):
        coeffs[ct.num_cycles] += ct.class_size
    return RankPolynomial(tuple(coeffs))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, int(math.isqrt(n)) + 1):
        if n % d == 0:
            return False
    return True


def rank_wreath_cyclic_prime(rk: int, n: int) -> int:
    """Closed form rk^n + (n-1) rk for the cyclic group of prime order n."""
    if not is_prime(n):
        raise NotPrime(f"closed form requires n prime, got {n}")
    return rk**n + (n - 1) * rk


@dataclass(frozen=True)
class ClassTerm:
    """One conjugacy class's contribution to a wreath rank."""

    cycle_type: CycleType
    representative: Permutation | None
    class_size: int
    contribution: int

    @property
    def num_cycles(self) -> int:
        return self.cycle_type.num_cycles


def rank_wreath_subgroup(
    rk: int, group: FiniteGroup
) -> tuple[int, list[ClassTerm]]:
    """Total rank of C wr G for an explicitly materialized G <= S_n."""
    terms = []
    for cls in perms.conjugacy_classes(group).classes:
        rep = group.elements[cls[0]]
        ct = cycle_type_of(rep)
        terms.append(ClassTerm(
            cycle_type=ct,
            representative=rep,
            class_size=len(cls),
            contribution=len(cls) * rk**ct.num_cycles,
        ))
    return sum(t.contribution for t in terms), terms


def rank_wreath_symmetric(rk: int, n: int) -> tuple[int, list[ClassTerm]]:
    """Total rank of C wr S_n from cycle types; S_n is never materialized."""
    terms = [
        ClassTerm(
            cycle_type=ct,
            representative=None,
            class_size=ct.class_size,
            contribution=ct.class_size * rk**ct.num_cycles,
        )
        for ct in partitions(n)
    ]
    return sum(t.contribution for t in terms), terms


def brute_force_wreath_rank(rk: int, group: FiniteGroup) -> int:
    """Independent oracle: enumerate all rk^n tuples and count, per group
    element, the tuples fixed under permuting coordinates."""
    n = group.degree
    count = rk**n
    if count > BRUTE_FORCE_CAP:
        raise TooLarge(f"rk^n = {count} exceeds cap {BRUTE_FORCE_CAP}")
    total = 0
    images = np.array([e.images for e in group.elements])
    chunk = 1 << 18
    for start in range(0, count, chunk):
        idx = np.arange(start, min(start + chunk, count))
        digits = np.empty((len(idx), n), dtype=np.int16)
        for i in range(n):
            digits[:, i] = (idx // rk ** (n - 1 - i)) % rk
        for imgs in images:
            total += int(np.all(digits[:, imgs] == digits, axis=1).sum())
    return total


# -- group presets ---------------------------------------------------------

_PRESET_RE = re.compile(r"([saz])(\d+)$")


def preset_generators(spec: str, degree: int) -> dict[str, Permutation]:
    """Named generator sets for "s<k>", "a<k>", "z<k>" (k <= degree, acting
    on the first k points), or explicit comma-separated cycle notation."""
    m = _PRESET_RE.match(spec.strip().lower())
    if m:
        kind, k = m.group(1), int(m.group(2))
        if not 1 <= k <= degree:
            raise ParseError(f"group {spec!r} does not fit degree {degree}")
        cycle_k = "(" + " ".join(str(i) for i in range(1, k + 1)) + ")"
        if kind == "z":
            gens = {f"c{k}": cycle_k} if k > 1 else {}
        elif kind == "s":
            gens = {"t": "(1 2)", f"c{k}": cycle_k} if k > 1 else {}
        else:  # alternating
            if k < 3:
                gens = {}
            elif k % 2 == 1:
                gens = {"t3": "(1 2 3)", f"c{k}": cycle_k}
            else:
                long_even = "(" + " ".join(str(i) for i in range(2, k + 1)) + ")"
                gens = {"t3": "(1 2 3)", f"c{k - 1}": long_even}
        return {
            name: perms.parse_cycles(text, degree) for name, text in gens.items()
        }
    gens = {}
    for i, part in enumerate(s for s in spec.split(",") if s.strip()):
        gens[f"g{i}"] = perms.parse_cycles(part, degree)
    return gens


def preset_group(
    spec: str, degree: int, cap: int = DEFAULT_GROUP_CAP
) -> FiniteGroup:
    return perms.generate_group(degree, preset_generators(spec, degree), cap=cap)


# -- materialized products for cross-checks --------------------------------

def materialize_power(m: ModularData, n: int) -> ModularData:
    """The n-fold product category's fusion data, with tuple labels.

    Meant for small n only (the label count is rk^n)."""
    tuples = list(itertools.product(range(m.rank), repeat=n))
    index = {t: i for i, t in enumerate(tuples)}
    labels = tuple("*".join(m.labels[i] for i in t) for t in tuples)
    fusion: dict[tuple[int, int, int], int] = {}
    for combo in itertools.product(m.fusion.items(), repeat=n):
        xs = tuple(triple[0] for triple, _ in combo)
        ys = tuple(triple[1] for triple, _ in combo)
        zs = tuple(triple[2] for triple, _ in combo)
        mult = math.prod(v for _, v in combo)
        key = (index[xs], index[ys], index[zs])
        fusion[key] = fusion.get(key, 0) + mult
    unit = index[(m.unit,) * n]
    dual = tuple(index[tuple(m.dual[i] for i in t)] for t in tuples)
    twists = tuple(
        sum((m.twists[i] for i in t), Fraction(0)) % 1 for t in tuples
    )
    return ModularData(
        name=f"{m.name}^{n}",
        labels=labels,
        unit=unit,
        fusion=fusion,
        dual=dual,
        twists=twists,
    )


def factor_permutation(m: ModularData, n: int, sigma: Permutation) -> Permutation:
    """The permutation of product labels moving factor i to slot sigma(i)."""
    if sigma.degree != n:
        raise OutOfRange(f"sigma has degree {sigma.degree}, expected {n}")
    tuples = list(itertools.product(range(m.rank), repeat=n))
    index = {t: i for i, t in enumerate(tuples)}
    images = []
    for t in tuples:
        moved = [0] * n
        for i, val in enumerate(t):
            moved[sigma.images[i]] = val
        images.append(index[tuple(moved)])
    return Permutation(tuple(images))


def symmetric_power_symmetry(
    m: ModularData, n: int, cap: int = DEFAULT_GROUP_CAP
) -> tuple[ModularData, GlobalSymmetry]:
    """C^n with the full factor-permutation action of S_n, validated."""
    power = materialize_power(m, n)
    gens = preset_generators(f"s{n}", n)
    lifted = {
        name: factor_permutation(m, n, p) for name, p in gens.items()
    }
    return power, build_symmetry(power, lifted, cap=cap)
