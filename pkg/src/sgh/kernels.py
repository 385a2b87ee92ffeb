"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` twin. Setting ``SGH_PURE_PYTHON=1`` forces the
fallback. Callers pass arc tables built by :func:`arc_table`.
"""

from __future__ import annotations

import os
from array import array
from dataclasses import dataclass

from . import _pykernels

try:
    if os.environ.get("SGH_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-Python kernels requested")
    from . import _ckernels as _backend
except ImportError:
    _backend = _pykernels

BACKEND = _backend.BACKEND


def backends():
    """All importable kernel modules, compiled one first."""
    found = []
    try:
        from . import _ckernels

        found.append(_ckernels)
    except ImportError:
        pass
    found.append(_pykernels)
    return found


@dataclass(frozen=True)
class ArcTable:
    n: int
    offsets: array
    targets: array
    costs: array
    shifts: array
    signs: array
    edge_ids: array


def arc_table(n, edges):
    """Build a CSR arc table.

    ``edges`` yields ``(u, v, cost, negative)`` with ``negative`` in {0, 1}.
    The Z2^2 shift of an arc is ``2*negative + (cost % 2)``.
    """
    buckets = [[] for _ in range(n)]
    for idx, (u, v, cost, neg) in enumerate(edges):
        shift = 2 * neg + (cost & 1)
        buckets[u].append((v, cost, shift, neg, idx))
        if u != v:
            buckets[v].append((u, cost, shift, neg, idx))
    offsets = array("i", [0])
    targets, costs, shifts, signs, ids = (array("i") for _ in range(5))
    for arcs in buckets:
        for v, cost, shift, neg, idx in arcs:
            targets.append(v)
            costs.append(cost)
            shifts.append(shift)
            signs.append(neg)
            ids.append(idx)
        offsets.append(len(targets))
    return ArcTable(n, offsets, targets, costs, shifts, signs, ids)


def closed_walk_girths(table, backend=None):
    k = backend or _backend
    return k.closed_walk_girths(table.n, table.offsets, table.targets, table.costs, table.shifts)


def layered_bfs(table, shifts, nstates, src, backend=None):
    k = backend or _backend
    return k.layered_bfs(table.n, table.offsets, table.targets, shifts, nstates, src)


def negative_cycle_partners(table, src, length, dist, backend=None):
    k = backend or _backend
    return k.negative_cycle_partners(
        table.n, table.offsets, table.targets, table.signs, table.edge_ids,
        src, length, array("i", dist),
    )


def hom_search(order, back_ptr, back_pos, back_sign, loop_need, nt, tgt_mask, backend=None):
    k = backend or _backend
    return k.hom_search(
        order, array("i", back_ptr), array("i", back_pos), array("i", back_sign),
        array("i", loop_need), nt, array("i", tgt_mask),
    )
