"""Joint eigenrays of the five commuting sets and the 160-ray table.

Every ray is an integer vector of length 32 with entries in {-1, 0, +1},
kept sign-canonical (first nonzero entry +1).  The table builder recomputes
each block of 32 rays from its commuting set with exact integer projectors
and verifies the result against the embedded reference strings, so the
published ids stay stable.
"""
from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from itertools import combinations, product
from math import gcd

import numpy as np

from . import catalog
from .pauli import (CommutingSet, PauliOp, apply_pauli, commutes, is_symmetric,
                    make_pauli, pauli_to_matrix)


class RayTableError(Exception):
    """Raised when a rebuilt block disagrees with the embedded table."""


def canonical_entries(entries) -> tuple:
    """Scale to content 1 and make the first nonzero entry +1."""
    ent = [int(e) for e in entries]
    g = 0
    for e in ent:
        g = gcd(g, abs(e))
    if g == 0:
        raise ValueError("zero vector has no ray")
    ent = [e // g for e in ent]
    for e in ent:
        if e:
            return tuple(ent if e > 0 else [-x for x in ent])
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class Ray:
    """A sign-canonical integer ray, optionally carrying its table id."""

    entries: tuple
    id: int | None = None

    def __post_init__(self):
        if any(e not in (-1, 0, 1) for e in self.entries):
            raise ValueError("entries must lie in {-1, 0, +1}")
        nz = [e for e in self.entries if e]
        if not nz:
            raise ValueError("zero vector has no ray")
        if nz[0] != 1:
            raise ValueError("ray is not sign-canonical")

    @property
    def support(self) -> int:
        return sum(1 for e in self.entries if e)

    @property
    def norm_squared(self) -> int:
        return sum(e * e for e in self.entries)

    def to_string(self) -> str:
        return "".join("+" if e == 1 else "-" if e == -1 else "0"
                       for e in self.entries)

    @classmethod
    def from_string(cls, s: str, id: int | None = None) -> "Ray":
        return cls(tuple({"+": 1, "-": -1, "0": 0}[ch] for ch in s), id)


def partner(r: Ray) -> Ray:
    """The ray with reversed entries and flipped signs, re-canonicalized.

    This is an involution on rays: reversing and negating twice restores
    the original canonical form.
    """
    flipped = [-e for e in reversed(r.entries)]
    return Ray(canonical_entries(flipped))


def joint_eigenrays(cset: CommutingSet) -> list[Ray]:
    """The 2^n common eigenrays of n independent commuting symmetric operators.

    For each sign pattern s the integer matrix prod_i (I + s_i O_i) equals
    2^n times the projector onto the joint eigenspace, so its trace must be
    exactly 2^n (rank one).  A nonzero column of that matrix is the ray.
    """
    ops = list(cset.ops)
    n = ops[0].n
    dim = 1 << n
    if len(ops) != n:
        raise ValueError("need exactly %d operators, got %d" % (n, len(ops)))
    for op in ops:
        if not is_symmetric(op):
            raise ValueError("operator %s is not symmetric" % op)
    if _gf2_rank([(op.x_bits << n) | op.z_bits for op in ops]) != n:
        raise ValueError("operators of set %s are not independent" % cset.label)
    mats = [pauli_to_matrix(op) for op in ops]
    eye = np.eye(dim, dtype=np.int64)
    out = []
    for signs in product((1, -1), repeat=n):
        m = eye
        for s, mat in zip(signs, mats):
            m = m @ (eye + s * mat)
        if int(np.trace(m)) != dim:
            raise ValueError(
                "sign pattern %s of set %s gives a projector of rank != 1"
                % (signs, cset.label))
        col = next(m[:, j] for j in range(dim) if m[:, j].any())
        ray = Ray(canonical_entries(col))
        vec = np.array(ray.entries, dtype=np.int64)
        for s, op in zip(signs, ops):
            if not np.array_equal(apply_pauli(op, vec), s * vec):
                raise AssertionError(
                    "extracted ray is not an eigenvector of %s" % op)
        out.append(ray)
    return out


def _gf2_rank(vectors) -> int:
    rows = list(vectors)
    rank = 0
    for bit in range(max(rows).bit_length() - 1, -1, -1) if rows else ():
        pivot = next((i for i in range(rank, len(rows)) if (rows[i] >> bit) & 1),
                     None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and (rows[i] >> bit) & 1:
                rows[i] ^= rows[rank]
        rank += 1
    return rank


@dataclass(frozen=True)
class RayTable:
    """The 160 rays in id order plus the block layout."""

    rays: tuple
    block_map: dict

    def __getitem__(self, ray_id: int) -> Ray:
        """Ray by 1-based id."""
        return self.rays[ray_id - 1]

    def __len__(self):
        return len(self.rays)

    def entries_matrix(self) -> np.ndarray:
        return np.array([r.entries for r in self.rays], dtype=np.int64)

    def partner_id(self, ray_id: int) -> int:
        return self._partner_ids()[ray_id]

    def _partner_ids(self) -> dict:
        if not hasattr(self, "_pid_cache"):
            index = {r.entries: r.id for r in self.rays}
            pid = {r.id: index[partner(r).entries] for r in self.rays}
            object.__setattr__(self, "_pid_cache", pid)
        return self._pid_cache

    def block_of(self, ray_id: int) -> str:
        for label, (lo, hi) in self.block_map.items():
            if lo <= ray_id <= hi:
                return label
        raise KeyError(ray_id)

    def to_csv(self, path):
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["id"] + ["e%d" % i for i in range(1, 33)])
            for r in self.rays:
                w.writerow([r.id] + list(r.entries))

    def to_json(self, path):
        data = {
            "block_map": {k: list(v) for k, v in self.block_map.items()},
            "rays": {r.id: r.to_string() for r in self.rays},
        }
        with open(path, "w") as fh:
            json.dump(data, fh, indent=2, sort_keys=True)
            fh.write("\n")


def five_sets() -> dict:
    """The five commuting sets, as CommutingSet values keyed by label."""
    return {
        label: CommutingSet(label, tuple(make_pauli(s) for s in specs))
        for label, specs in catalog.FIVE_SETS.items()
    }


def magic_configuration() -> list:
    """The five commuting sets with their designated products.

    Feeding this to ``verify_magic`` exhibits the parity contradiction:
    14 distinct operators, each occurring exactly twice, with set-sign
    product -1.
    """
    return [
        (CommutingSet(label, tuple(make_pauli(s) for s in specs)),
         make_pauli(target))
        for label, specs, target in catalog.MAGIC_SETS
    ]


def build_ray_table() -> RayTable:
    """Recompute all five blocks and arrange them in reference id order.

    Each block's 32 eigenrays are matched as a set against the embedded
    strings for that id range; any divergence raises RayTableError naming
    the first offending id.  The partner of every ray is then checked to
    sit in the same block.
    """
    sets = five_sets()
    reference = [Ray.from_string(s, i + 1) for i, s in enumerate(catalog.RAYS)]
    table = {}
    for label in catalog.BLOCK_ORDER:
        computed = {r.entries for r in joint_eigenrays(sets[label])}
        lo, hi = catalog.BLOCK_RANGES[label]
        for ray_id in range(lo, hi + 1):
            ref = reference[ray_id - 1]
            if ref.entries not in computed:
                raise RayTableError(
                    "ray %d is not an eigenray of set %s" % (ray_id, label))
            table[ray_id] = ref
        if len(computed) != hi - lo + 1:
            raise RayTableError("set %s produced duplicate rays" % label)
    rays = tuple(table[i] for i in range(1, 161))
    result = RayTable(rays=rays, block_map=dict(catalog.BLOCK_RANGES))
    _validate_table(result)
    return result


def _validate_table(table: RayTable):
    entries = table.entries_matrix()
    if len({r.entries for r in table.rays}) != len(table.rays):
        raise RayTableError("table contains projectively equal rays")
    gram = entries @ entries.T
    for label, (lo, hi) in table.block_map.items():
        block = range(lo - 1, hi)
        for i, j in combinations(block, 2):
            if gram[i, j] != 0:
                raise RayTableError(
                    "rays %d and %d of block %s are not orthogonal"
                    % (i + 1, j + 1, label))
    for r in table.rays:
        pid = table.partner_id(r.id)
        if table.block_of(pid) != table.block_of(r.id):
            raise RayTableError(
                "partner of ray %d falls outside its block" % r.id)


def identify_block(r: Ray, sets: dict | None = None) -> str:
    """The unique commuting set for which ``r`` is a joint eigenvector."""
    sets = sets or five_sets()
    vec = np.array(r.entries, dtype=np.int64)
    hits = []
    for label, cset in sets.items():
        if all(_is_eigenvector(op, vec) for op in cset.ops):
            hits.append(label)
    if len(hits) != 1:
        raise ValueError(
            "ray is a joint eigenvector of %d sets, expected exactly 1"
            % len(hits))
    return hits[0]


def _is_eigenvector(op: PauliOp, vec) -> bool:
    image = apply_pauli(op, vec)
    return np.array_equal(image, vec) or np.array_equal(image, -vec)
