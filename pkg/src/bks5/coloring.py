"""Exact {0,1}-coloring decisions for ray/basis instances.

An instance asks for an assignment of 0/1 to every involved ray such that
(i) each listed basis contains at least one ray valued 1 and (ii) no two
orthogonal involved rays are both valued 1.  Because the rays of a basis
are pairwise orthogonal, (i) and (ii) together force exactly one 1 per
basis, so the search branches on which ray of a most-constrained basis
carries the 1.  The solver is exhaustive and deterministic; any witness it
reports is re-checked by the independent verifier before being returned.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .bases import OrthoGraph


class InstanceError(Exception):
    """Raised when bases and orthogonality data are inconsistent."""


@dataclass(frozen=True)
class KSInstance:
    """Rays, bases, and every orthogonal pair among the involved rays."""

    ray_ids: tuple
    bases: tuple
    ortho_pairs: tuple

    @classmethod
    def build(cls, graph: OrthoGraph, bases) -> "KSInstance":
        pos = {rid: i for i, rid in enumerate(graph.ids)}
        norm_bases = []
        involved = set()
        for b in bases:
            ids = tuple(sorted(b))
            for rid in ids:
                if rid not in pos:
                    raise InstanceError("basis ray %d is not in the graph"
                                        % rid)
            norm_bases.append(ids)
            involved.update(ids)
        ray_ids = tuple(sorted(involved))
        pairs = []
        for a, b in combinations(ray_ids, 2):
            if (graph.rows[pos[a]] >> pos[b]) & 1:
                pairs.append((a, b))
        inst = cls(ray_ids=ray_ids, bases=tuple(norm_bases),
                   ortho_pairs=tuple(pairs))
        pair_set = set(inst.ortho_pairs)
        for ids in inst.bases:
            for a, b in combinations(ids, 2):
                if (a, b) not in pair_set:
                    raise InstanceError(
                        "rays %d and %d share a basis but are not orthogonal"
                        % (a, b))
        return inst


@dataclass(frozen=True)
class ColoringResult:
    """Outcome of an exhaustive coloring search.

    ``status`` is "colorable" or "non_colorable".  For a colorable
    instance ``witness`` maps every involved ray id to 0 or 1 and has been
    accepted by ``verify_coloring``; otherwise it is None and the node
    count certifies the exhausted search tree.
    """

    status: str
    witness: dict | None
    nodes: int
    propagations: int


def check_colorable(inst: KSInstance) -> ColoringResult:
    """Decide colorability by exhaustive propagation-driven search."""
    m = len(inst.ray_ids)
    pos = {rid: i for i, rid in enumerate(inst.ray_ids)}
    adj = [0] * m
    for a, b in inst.ortho_pairs:
        adj[pos[a]] |= 1 << pos[b]
        adj[pos[b]] |= 1 << pos[a]
    basis_masks = []
    for ids in inst.bases:
        mask = 0
        for rid in ids:
            mask |= 1 << pos[rid]
        basis_masks.append(mask)
    stats = {"nodes": 0, "propagations": 0}

    def propagate(ones: int, zeros: int):
        changed = True
        while changed:
            changed = False
            for mask in basis_masks:
                if mask & ones:
                    continue
                avail = mask & ~zeros
                if avail == 0:
                    return None
                if avail & (avail - 1) == 0:
                    ones |= avail
                    zeros |= adj[avail.bit_length() - 1]
                    stats["propagations"] += 1
                    changed = True
        return ones, zeros

    def search(ones: int, zeros: int):
        stats["nodes"] += 1
        state = propagate(ones, zeros)
        if state is None:
            return None
        ones, zeros = state
        best_mask = None
        best_count = None
        for mask in basis_masks:
            if mask & ones:
                continue
            avail = mask & ~zeros
            count = bin(avail).count("1")
            if best_count is None or count < best_count:
                best_count = count
                best_mask = avail
        if best_mask is None:
            return ones, zeros
        cand = best_mask
        while cand:
            bit = cand & -cand
            cand &= cand - 1
            result = search(ones | bit, zeros | adj[bit.bit_length() - 1])
            if result is not None:
                return result
        return None

    outcome = search(0, 0)
    if outcome is None:
        return ColoringResult("non_colorable", None, stats["nodes"],
                              stats["propagations"])
    ones, _ = outcome
    witness = {rid: (ones >> pos[rid]) & 1 for rid in inst.ray_ids}
    if not verify_coloring(inst, witness):
        raise AssertionError("solver produced a witness the verifier rejects")
    return ColoringResult("colorable", witness, stats["nodes"],
                          stats["propagations"])


def count_colorings(inst: KSInstance) -> int:
    """Exhaustively count admissible colorings (used as a cross-check)."""
    m = len(inst.ray_ids)
    pos = {rid: i for i, rid in enumerate(inst.ray_ids)}
    adj = [0] * m
    for a, b in inst.ortho_pairs:
        adj[pos[a]] |= 1 << pos[b]
        adj[pos[b]] |= 1 << pos[a]
    basis_masks = []
    for ids in inst.bases:
        mask = 0
        for rid in ids:
            mask |= 1 << pos[rid]
        basis_masks.append(mask)

    def count(idx: int, ones: int, zeros: int) -> int:
        while idx < len(basis_masks) and basis_masks[idx] & ones:
            idx += 1
        if idx == len(basis_masks):
            return 1
        total = 0
        cand = basis_masks[idx] & ~zeros
        while cand:
            bit = cand & -cand
            cand &= cand - 1
            total += count(idx + 1, ones | bit, zeros | adj[bit.bit_length() - 1])
        return total

    return count(0, 0, 0)


def verify_coloring(inst: KSInstance, assignment: dict) -> bool:
    """Independent witness check: no search state, just the two conditions."""
    if set(assignment) != set(inst.ray_ids):
        raise ValueError("assignment keys do not match the involved rays")
    for value in assignment.values():
        if value not in (0, 1):
            raise ValueError("assignment values must be 0 or 1")
    for ids in inst.bases:
        if not any(assignment[rid] == 1 for rid in ids):
            return False
    for a, b in inst.ortho_pairs:
        if assignment[a] == 1 and assignment[b] == 1:
            return False
    return True


def export_cnf(inst: KSInstance) -> str:
    """DIMACS rendering: one clause per basis, one per orthogonal pair.

    Variable k corresponds to the k-th smallest involved ray id; the
    leading comment block records the mapping.
    """
    var = {rid: i + 1 for i, rid in enumerate(inst.ray_ids)}
    lines = ["c var %d = ray %d" % (var[rid], rid) for rid in inst.ray_ids]
    nclauses = len(inst.ortho_pairs) + len(inst.bases)
    lines.append("p cnf %d %d" % (len(inst.ray_ids), nclauses))
    for a, b in inst.ortho_pairs:
        lines.append("-%d -%d 0" % (var[a], var[b]))
    for ids in inst.bases:
        lines.append(" ".join(str(var[rid]) for rid in ids) + " 0")
    return "\n".join(lines) + "\n"
