"""gcrank: ranks of G-crossed braided extensions of modular tensor
categories from finite combinatorial data."""

from importlib import resources
from pathlib import Path

from .errors import GcrankError
from .mtc import ModularData, ValidationReport, load_mtc, parse_mtc, serialize_mtc, validate_mtc
from .perms import (
    FiniteGroup,
    Permutation,
    compose,
    conjugacy_classes,
    cycle_decomposition,
    fixed_points,
    format_cycles,
    generate_group,
    identity,
    inverse,
    orbits,
    parse_cycles,
)
from .rank import (
    ModularInvariantMatrix,
    RankReport,
    graded_rank,
    lagrangian_summands,
    modular_invariant,
    rank_report,
    trace,
)
from .symmetry import GlobalSymmetry, build_symmetry, load_symmetry, validate_automorphism
from .wreath import (
    CycleType,
    RankPolynomial,
    brute_force_wreath_rank,
    cycle_type_of,
    partitions,
    rank_polynomial_symmetric,
    rank_wreath_cyclic_prime,
    rank_wreath_subgroup,
    rank_wreath_symmetric,
)

__version__ = "0.1.0"


def bundled_data_path(name: str) -> Path:
    """Path to a bundled data file, e.g. ``bundled_data_path("ising.json")``."""
    return Path(str(resources.files("gcrank").joinpath("data", name)))
