"""Partition catalogue and randomized search for small non-colorable sets.

A partition is a 5-element subset of the given bases that tiles all 160
rays; every sampled candidate set contains one, which keeps the instance
tightly constrained.  The search is restart-based and fully deterministic
for a fixed seed: restart k draws from ``random.Random(f"{seed}:{k}")``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .bases import OrthoGraph
from .coloring import ColoringResult, KSInstance, check_colorable


def find_partitions(bases, universe=None) -> list[tuple]:
    """All 5-element subsets of ``bases`` that partition the universe.

    Returns sorted tuples of 0-based indices into ``bases``, in sorted
    order.  The universe defaults to the union of all input rays.  The
    search meets in the middle: disjoint pairs are indexed by their union
    mask, then each pairwise-disjoint triple looks up the exact complement
    of its union.
    """
    bases = [tuple(b) for b in bases]
    if universe is None:
        universe = set()
        for b in bases:
            universe.update(b)
    ids = sorted(universe)
    pos = {rid: i for i, rid in enumerate(ids)}
    full = (1 << len(ids)) - 1
    masks = []
    for b in bases:
        mask = 0
        for rid in b:
            if rid not in pos:
                raise ValueError("basis ray %r outside the universe" % (rid,))
            mask |= 1 << pos[rid]
        masks.append(mask)
    n = len(masks)

    pair_by_union = {}
    disj = [[] for _ in range(n)]
    for i in range(n):
        mi = masks[i]
        for j in range(i + 1, n):
            if mi & masks[j] == 0:
                disj[i].append(j)
                pair_by_union.setdefault(mi | masks[j], []).append((i, j))

    found = set()
    for i in range(n):
        mi = masks[i]
        for j in disj[i]:
            mij = mi | masks[j]
            for k in disj[j]:
                if masks[k] & mij:
                    continue
                rest = full ^ (mij | masks[k])
                for a, b in pair_by_union.get(rest, ()):
                    found.add(tuple(sorted((i, j, k, a, b))))
    return sorted(found)


@dataclass(frozen=True)
class ProofCandidate:
    """Result of one search run.

    ``basis_indices`` are 0-based positions into the input list; ``bases``
    are the corresponding ray-id tuples.  ``status`` is "found" when a
    non-colorable set was located (then ``coloring`` certifies the final
    minimized set), or "budget_exhausted" otherwise.
    """

    status: str
    basis_indices: tuple
    bases: tuple
    size: int
    restart: int | None
    seed: int
    coloring: ColoringResult | None
    attempts: int


def search_small_proof(graph: OrthoGraph, bases, seed: int = 0,
                       max_size: int = 30, budget: int = 64,
                       partitions=None) -> ProofCandidate:
    """Randomized restart search for a small non-colorable basis set.

    Each restart seeds a partition (5 bases tiling all rays), pads it with
    uniformly drawn further bases up to ``max_size``, and tests
    colorability.  The first non-colorable sample is greedily minimized:
    bases are dropped one at a time, in ascending index order, whenever
    the remainder still contains a partition and stays non-colorable.
    """
    bases = [tuple(b) for b in bases]
    if max_size < 5:
        raise ValueError("max_size must be at least 5")
    if partitions is None:
        partitions = find_partitions(bases)
    if not partitions or budget <= 0:
        return ProofCandidate("budget_exhausted", (), (), 0, None, seed,
                              None, 0)

    def has_partition(indices) -> bool:
        sub = [bases[i] for i in indices]
        return bool(find_partitions(sub, universe=_union(bases)))

    def colorable(indices) -> ColoringResult:
        inst = KSInstance.build(graph, [bases[i] for i in indices])
        return check_colorable(inst)

    for k in range(budget):
        rng = random.Random("%d:%d" % (seed, k))
        chosen = set(partitions[rng.randrange(len(partitions))])
        others = [i for i in range(len(bases)) if i not in chosen]
        while len(chosen) < min(max_size, len(bases)) and others:
            chosen.add(others.pop(rng.randrange(len(others))))
        sample = sorted(chosen)
        if colorable(sample).status != "non_colorable":
            continue
        current = sample
        changed = True
        while changed:
            changed = False
            for drop in list(current):
                trial = [i for i in current if i != drop]
                if not has_partition(trial):
                    continue
                if colorable(trial).status == "non_colorable":
                    current = trial
                    changed = True
        final = tuple(current)
        return ProofCandidate("found", final,
                              tuple(bases[i] for i in final), len(final), k,
                              seed, colorable(final), k + 1)
    return ProofCandidate("budget_exhausted", (), (), 0, None, seed, None,
                          budget)


def _union(bases) -> set:
    u = set()
    for b in bases:
        u.update(b)
    return u
