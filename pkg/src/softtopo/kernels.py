"""Kernel backend selection.

The compiled extension (softtopo._kernels_cy) is used when it imported
successfully and SOFTTOPO_PURE is unset; softtopo._kernels_py otherwise.
Both expose the same functions with identical results and orderings, so
everything above this module is backend-agnostic. Calls whose masks do
not fit the compiled kernel's 64-bit words are routed to the pure
backend transparently.
"""

from __future__ import annotations

import os

from . import _kernels_py as py_backend

try:
    from . import _kernels_cy as cy_backend  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - build environment dependent
    cy_backend = None

_FORCE_PURE = os.environ.get("SOFTTOPO_PURE", "") not in ("", "0")
active = py_backend if (_FORCE_PURE or cy_backend is None) else cy_backend
BACKEND = "pure" if active is py_backend else "compiled"

_U64_MAX = (1 << 63) - 1  # stay clear of the sign bit for safety

enumerate_topology_families = active.enumerate_topology_families


def _fits(*masks: int) -> bool:
    return all(0 <= m <= _U64_MAX for m in masks)


def submasks(full: int) -> list[int]:
    if active is cy_backend and not _fits(full):
        return py_backend.submasks(full)
    return active.submasks(full)


def interior_mask(g: int, opens: list[int]) -> int:
    if active is cy_backend and not _fits(g, *opens):
        return py_backend.interior_mask(g, opens)
    return active.interior_mask(g, opens)


def closure_mask(g: int, opens: list[int], full: int) -> int:
    if active is cy_backend and not _fits(full):
        return py_backend.closure_mask(g, opens, full)
    return active.closure_mask(g, opens, full)


def is_semiopen_mask(g: int, opens: list[int], full: int) -> bool:
    if active is cy_backend and not _fits(full):
        return py_backend.is_semiopen_mask(g, opens, full)
    return active.is_semiopen_mask(g, opens, full)


def is_semiclosed_mask(g: int, opens: list[int], full: int) -> bool:
    if active is cy_backend and not _fits(full):
        return py_backend.is_semiclosed_mask(g, opens, full)
    return active.is_semiclosed_mask(g, opens, full)


def ssint_mask(g: int, opens: list[int], full: int) -> int:
    if active is cy_backend and not _fits(full):
        return py_backend.ssint_mask(g, opens, full)
    return active.ssint_mask(g, opens, full)


def sscl_mask(g: int, opens: list[int], full: int) -> int:
    if active is cy_backend and not _fits(full):
        return py_backend.sscl_mask(g, opens, full)
    return active.sscl_mask(g, opens, full)


def semiopen_masks(opens: list[int], full: int) -> list[int]:
    if active is cy_backend and not _fits(full):
        return py_backend.semiopen_masks(opens, full)
    return active.semiopen_masks(opens, full)


def semiclosed_masks(opens: list[int], full: int) -> list[int]:
    if active is cy_backend and not _fits(full):
        return py_backend.semiclosed_masks(opens, full)
    return active.semiclosed_masks(opens, full)


def ssint_table(opens: list[int], full: int) -> dict[int, int]:
    if active is cy_backend and not _fits(full):
        return py_backend.ssint_table(opens, full)
    return active.ssint_table(opens, full)


def sscl_table(opens: list[int], full: int) -> dict[int, int]:
    if active is cy_backend and not _fits(full):
        return py_backend.sscl_table(opens, full)
    return active.sscl_table(opens, full)


def check_family(masks: list[int], full: int):
    if active is cy_backend and not _fits(full, *masks):
        return py_backend.check_family(masks, full)
    return active.check_family(masks, full)


def min_cover(universe: int, masks: list[int]):
    if active is cy_backend and not _fits(universe, *masks):
        return py_backend.min_cover(universe, masks)
    return active.min_cover(universe, masks)
