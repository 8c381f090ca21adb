"""Named structures shipped as data files.

t1   one element
sl2  two-element semilattice, f below e
lz2  two-element left-zero semigroup, discrete order
n2   two-element null semigroup, discrete order
px3  three-element table with discrete order; fails associativity
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from osgkit.structure import OrderedSemigroup, parse_named_structure

FIXTURE_NAMES = ("t1", "sl2", "lz2", "n2", "px3")


def fixture_path(name: str) -> Path:
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {FIXTURE_NAMES}")
    return Path(str(resources.files("osgkit").joinpath("data", f"{name}.osg")))


def fixture_text(name: str) -> str:
    return fixture_path(name).read_text(encoding="utf-8")


def load_named_fixture(name: str) -> tuple[OrderedSemigroup, tuple[str, ...]]:
    return parse_named_structure(fixture_text(name))


def load_fixture(name: str) -> OrderedSemigroup:
    return load_named_fixture(name)[0]
