"""JSON and DOT serialization for posets, lattices, groups, labelings,
and complexes.  All emitted JSON is byte-deterministic: sorted keys,
canonical separators, fixed iteration orders."""

from __future__ import annotations

import json
from typing import Optional

import numpy as np

from .errors import BadId, BadParams
from .groups import Group, perm_from_cycles
from .poset import Lattice, Poset
from .topology import SimplicialComplex


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def poset_to_json(p: Poset) -> dict:
    out = {"n": p.n, "covers": [[x, y] for x, y in p.covers]}
    if p.labels is not None:
        out["labels"] = list(p.labels)
    return out


def poset_from_json(d: dict) -> Poset:
    if not isinstance(d, dict) or "n" not in d or "covers" not in d:
        raise BadParams('poset JSON needs "n" and "covers"')
    return Poset.from_covers(int(d["n"]), d["covers"], d.get("labels"))


def lattice_to_json(L: Lattice) -> dict:
    out = poset_to_json(L.poset)
    out["bottom"] = L.bottom
    out["top"] = L.top
    if L.decode is not None:
        out["decode"] = [_decode_entry(e) for e in L.decode]
    return out


def _decode_entry(e):
    from .families import SetPartition, SignedPartition

    if isinstance(e, SetPartition):
        return {"blocks": [list(b) for b in e.blocks]}
    if isinstance(e, SignedPartition):
        return {"zero": list(e.zero),
                "signed": [{"elements": list(es), "signs": list(ss)}
                           for es, ss in e.signed]}
    if isinstance(e, frozenset):
        return {"members": sorted(e)}
    return str(e)


def poset_to_dot(p: Poset, name: str = "hasse") -> str:
    """Hasse diagram in DOT, edges drawn from lower to higher element."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for v in range(p.n):
        label = p.labels[v] if p.labels is not None else str(v)
        lines.append(f'  n{v} [label="{label}"];')
    for x, y in p.covers:
        lines.append(f"  n{x} -> n{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def group_from_json(d: dict) -> Group:
    """Accepts {"perm_generators": [[cycle, ...], ...]} with 1-based or
    0-based points, or {"table": [[...]]}."""
    if "table" in d:
        return Group.from_table(d["table"], d.get("name", "G"))
    if "perm_generators" in d:
        gens_cycles = d["perm_generators"]
        points: set[int] = set()
        for gen in gens_cycles:
            for cyc in gen:
                points.update(int(x) for x in cyc)
        if not points:
            raise BadId("no points in permutation generators")
        base = sorted(points)
        pos = {x: i for i, x in enumerate(base)}
        degree = len(base)
        gens = [perm_from_cycles([[pos[int(x)] for x in cyc] for cyc in gen], degree)
                for gen in gens_cycles]
        return Group.from_permutations(gens, d.get("name", "G"))
    raise BadParams('group JSON needs "perm_generators" or "table"')


def load_poset(path: str) -> Poset:
    with open(path, "r", encoding="utf-8") as fh:
        return poset_from_json(json.load(fh))


def load_group(path: str) -> Group:
    with open(path, "r", encoding="utf-8") as fh:
        return group_from_json(json.load(fh))


def labeled_chains_json(L: Lattice, labeling) -> list[dict]:
    from .labeling import _weakly_decreasing, all_labeled_chains

    return [{"chain": list(lc.chain), "word": list(lc.word),
             "decreasing": _weakly_decreasing(lc.word)}
            for lc in all_labeled_chains(L, labeling)]


def complex_to_json(K: SimplicialComplex) -> dict:
    fvec: dict[int, int] = {}
    for f in K.facets:
        fvec[len(f) - 1] = fvec.get(len(f) - 1, 0) + 1
    out = {"vertices": K.vertices,
           "facets": [list(f) for f in K.facets],
           "facet_dimension_counts": {str(d): c for d, c in sorted(fvec.items())}}
    if K.vertex_ids is not None:
        out["vertex_ids"] = list(K.vertex_ids)
    return out
