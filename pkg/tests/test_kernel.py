"""Parity between the compiled kernel and the pure-Python fallback.

Both implement the same contract; the suite drives them side by side so
either can back the package.
"""

import random
import subprocess
import sys
from pathlib import Path

import pytest

from osgkit import _kernel_py, kernel
from osgkit.enumeration import enumerate_partial_orders

compiled = pytest.importorskip(
    "osgkit._kernel", reason="compiled kernel not built; fallback already covered"
)


def _leq_flat(rel, n):
    return bytes(1 if rel[i][j] else 0 for i in range(n) for j in range(n))


def test_backends_report_their_names():
    assert compiled.BACKEND == "c"
    assert _kernel_py.BACKEND == "python"
    assert kernel.BACKEND in ("c", "python")


def test_assoc_table_streams_identical():
    for n in (1, 2, 3):
        assert compiled.enumerate_assoc_tables(n) == _kernel_py.enumerate_assoc_tables(n)


def test_valid_table_streams_identical_over_all_posets():
    for n in (1, 2, 3):
        for rel in enumerate_partial_orders(n):
            leq = _leq_flat(rel, n)
            assert compiled.enumerate_valid_tables(n, leq) == \
                _kernel_py.enumerate_valid_tables(n, leq)


def test_assoc_violation_parity_on_random_tables():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 5)
        mult = bytes(rng.randrange(n) for _ in range(n * n))
        assert compiled.find_assoc_violation(mult, n) == \
            _kernel_py.find_assoc_violation(mult, n)


def test_canonical_key_parity_on_random_inputs():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(1, 4)
        mult = bytes(rng.randrange(n) for _ in range(n * n))
        leq = bytes(
            1 if i == j else rng.randint(0, 1)
            for i in range(n) for j in range(n)
        )
        assert compiled.canonical_key(mult, leq, n) == \
            _kernel_py.canonical_key(mult, leq, n)


def test_kernel_rejects_out_of_range_order():
    with pytest.raises(ValueError):
        compiled.enumerate_assoc_tables(6)
    with pytest.raises(ValueError):
        compiled.enumerate_valid_tables(2, b"\x01")


def test_env_var_forces_pure_backend():
    code = (
        "import os; os.environ['OSGKIT_PURE'] = '1'; "
        "from osgkit import kernel; print(kernel.BACKEND)"
    )
    result = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, check=True,
        cwd=Path(__file__).resolve().parents[1] / "src",
    )
    assert result.stdout.strip() == "python"
