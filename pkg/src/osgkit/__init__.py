"""osgkit: a workbench for finite ordered semigroups.

Validate structures, compute downward closures and principal ideals,
Green's relations and semilattice congruences, decide regularity and
inverse-type properties, enumerate all ordered semigroups of small order,
and sweep condition-equivalence catalogs over corpora.
"""

from osgkit.structure import (
    OrderedSemigroup,
    ValidationReport,
    canonical_form,
    from_table,
    is_isomorphic,
    opposite,
    parse_structure,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "OrderedSemigroup",
    "ValidationReport",
    "canonical_form",
    "from_table",
    "is_isomorphic",
    "opposite",
    "parse_structure",
    "validate",
    "__version__",
]
