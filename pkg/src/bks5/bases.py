"""Orthogonality graph of a ray family and exhaustive maximal-basis search.

A basis is a clique of pairwise-orthogonal rays whose size equals the
ambient dimension; such a clique is automatically a complete orthogonal
basis because nonzero pairwise-orthogonal vectors are linearly
independent.  Enumeration is exact: a Bron-Kerbosch search with pivoting,
pruned by the fact that a clique that can no longer reach the target size
contributes nothing.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from .rays import RayTable


@dataclass(frozen=True)
class OrthoGraph:
    """Orthogonality relation over rays, one adjacency bitmask per ray.

    Vertices are 0-based positions; ``ids`` maps positions back to the
    caller's ray ids.  ``dim`` is the ambient vector-space dimension and
    therefore the exact size of every complete basis.
    """

    ids: tuple
    rows: tuple
    dim: int

    @property
    def n(self) -> int:
        return len(self.ids)

    def edge_count(self) -> int:
        return sum(bin(r).count("1") for r in self.rows) // 2

    def degree(self, pos: int) -> int:
        return bin(self.rows[pos]).count("1")


def build_ortho_graph(table: RayTable) -> OrthoGraph:
    """Exact integer inner products decide every edge."""
    entries = table.entries_matrix()
    gram = entries @ entries.T
    n = len(table)
    rows = []
    for i in range(n):
        mask = 0
        for j in range(n):
            if i != j and gram[i, j] == 0:
                mask |= 1 << j
        rows.append(mask)
    return OrthoGraph(ids=tuple(r.id for r in table.rays), rows=tuple(rows),
                      dim=entries.shape[1])


def enumerate_maximal_bases(graph: OrthoGraph) -> list[tuple]:
    """All cliques of size ``graph.dim``, as sorted id tuples in sorted order.

    The output order is canonical: it depends only on the orthogonality
    relation and the ids, not on the vertex ordering used during the
    search.
    """
    rows = graph.rows
    target = graph.dim
    full = (1 << graph.n) - 1
    found = []

    def popcount(x: int) -> int:
        return bin(x).count("1")

    def extend(r_count: int, r_vertices: list, p: int, x: int):
        if r_count == target:
            found.append(tuple(r_vertices))
            return
        if r_count + popcount(p) < target:
            return
        if p == 0:
            return
        px = p | x
        pivot = -1
        best = -1
        m = px
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            deg = popcount(p & rows[v])
            if deg > best:
                best = deg
                pivot = v
        cand = p & ~rows[pivot]
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            bit = 1 << v
            r_vertices.append(v)
            extend(r_count + 1, r_vertices, p & rows[v], x & rows[v])
            r_vertices.pop()
            p &= ~bit
            x |= bit
        return

    extend(0, [], full, 0)
    bases = sorted(tuple(sorted(graph.ids[v] for v in clique))
                   for clique in found)
    return bases


def contains_basis(bases, candidate) -> bool:
    """Membership of ``candidate`` (any iterable of ids) in the list."""
    probe = tuple(sorted(candidate))
    return probe in {tuple(sorted(b)) for b in bases}


def bases_sha256(bases) -> str:
    """Digest of the canonical rendering: newline-joined space-separated ids.

    The digest covers the canonical content (no trailing newline), so it is
    stable across writers that terminate the file differently.
    """
    text = "\n".join(" ".join(str(i) for i in b) for b in bases)
    return hashlib.sha256(text.encode()).hexdigest()


def write_bases_text(bases, path):
    with open(path, "w") as fh:
        for b in bases:
            fh.write(" ".join(str(i) for i in b) + "\n")


def write_bases_json(bases, path):
    with open(path, "w") as fh:
        json.dump({"count": len(bases), "bases": [list(b) for b in bases]},
                  fh, indent=2, sort_keys=True)
        fh.write("\n")
