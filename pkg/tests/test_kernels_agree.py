import subprocess
import sys

import pytest

from softtopo import SplitMix64
from softtopo import kernels

pure = kernels.py_backend
compiled = kernels.cy_backend

needs_compiled = pytest.mark.skipif(
    compiled is None, reason="compiled backend not built"
)


def close_family(seeds, bits):
    """Close seed masks under pairwise join/meet: a valid open family by construction."""
    full = 2**bits - 1
    fam = {0, full, *seeds}
    changed = True
    while changed:
        changed = False
        items = sorted(fam)
        for a in items:
            for b in items:
                for c in (a | b, a & b):
                    if c not in fam:
                        fam.add(c)
                        changed = True
    return fam


@needs_compiled
def test_backends_agree_on_semiopen_families():
    rng = SplitMix64(101)
    for _ in range(40):
        bits = 4 + rng.below(5)  # 4..8
        opens = sorted(close_family([rng.below(2**bits) for _ in range(3)], bits))
        full = 2**bits - 1
        assert pure.semiopen_masks(opens, full) == compiled.semiopen_masks(opens, full)
        assert pure.semiclosed_masks(opens, full) == compiled.semiclosed_masks(opens, full)


@needs_compiled
def test_backends_agree_on_tables():
    rng = SplitMix64(202)
    for _ in range(25):
        bits = 4 + rng.below(4)
        opens = sorted(close_family([rng.below(2**bits) for _ in range(3)], bits))
        full = 2**bits - 1
        assert pure.ssint_table(opens, full) == compiled.ssint_table(opens, full)
        assert pure.sscl_table(opens, full) == compiled.sscl_table(opens, full)


@needs_compiled
def test_backends_agree_pointwise():
    rng = SplitMix64(303)
    for _ in range(30):
        bits = 4 + rng.below(4)
        opens = sorted(close_family([rng.below(2**bits) for _ in range(3)], bits))
        full = 2**bits - 1
        g = rng.below(full + 1)
        assert pure.interior_mask(g, opens) == compiled.interior_mask(g, opens)
        assert pure.closure_mask(g, opens, full) == compiled.closure_mask(g, opens, full)
        assert pure.is_semiopen_mask(g, opens, full) == compiled.is_semiopen_mask(g, opens, full)
        assert pure.is_semiclosed_mask(g, opens, full) == compiled.is_semiclosed_mask(
            g, opens, full
        )
        assert pure.ssint_mask(g, opens, full) == compiled.ssint_mask(g, opens, full)
        assert pure.sscl_mask(g, opens, full) == compiled.sscl_mask(g, opens, full)


@needs_compiled
def test_backends_agree_on_enumeration():
    for bits in (1, 2, 3, 4):
        assert list(pure.enumerate_topology_families(bits)) == list(
            compiled.enumerate_topology_families(bits)
        )


@needs_compiled
def test_backends_agree_on_min_cover():
    rng = SplitMix64(404)
    for _ in range(40):
        bits = 5 + rng.below(4)
        full = 2**bits - 1
        members = [rng.below(full + 1) for _ in range(2 + rng.below(9))]
        assert pure.min_cover(full, members) == compiled.min_cover(full, members)


@needs_compiled
def test_backends_agree_on_check_family():
    rng = SplitMix64(505)
    for _ in range(60):
        bits = 2 + rng.below(3)
        full = 2**bits - 1
        fam = sorted({0, full, *(rng.below(full + 1) for _ in range(3))})
        assert pure.check_family(fam, full) == compiled.check_family(fam, full)


def test_env_var_forces_pure_backend():
    code = (
        "import os; os.environ['SOFTTOPO_PURE']='1'; "
        "from softtopo import kernels; print(kernels.BACKEND)"
    )
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == "pure"


def test_dispatcher_matches_active_backend():
    opens = [0, 3]
    assert kernels.semiopen_masks(opens, 3) == kernels.active.semiopen_masks(opens, 3)
