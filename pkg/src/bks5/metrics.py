"""Exact Hilbert-Schmidt distances between complete bases.

For complete orthogonal bases A and B of a d-dimensional space the
squared distance is

    D^2(A, B) = 1 - (1/(d-1)) * sum_ab (p_ab - 1/d)^2,

where p_ab is the squared normalized overlap between ray a of A and ray b
of B.  Everything is computed over the rationals; the only floating-point
step is the final decimal rendering of D for human-readable output, done
with explicit precision and rounding.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from math import lcm

import numpy as np

from .rays import RayTable


def hs_distance_squared(table: RayTable, basis_a, basis_b) -> Fraction:
    """Definitional per-pair computation, exact in Fraction arithmetic."""
    entries = table.entries_matrix()
    d = entries.shape[1]
    rows_a = _basis_rows(entries, basis_a, d)
    rows_b = _basis_rows(entries, basis_b, d)
    norms_a = [int(v @ v) for v in rows_a]
    norms_b = [int(v @ v) for v in rows_b]
    total = Fraction(0)
    for va, na in zip(rows_a, norms_a):
        for vb, nb in zip(rows_b, norms_b):
            p = Fraction(int(va @ vb) ** 2, na * nb)
            total += (p - Fraction(1, d)) ** 2
    return 1 - Fraction(1, d - 1) * total


def _basis_rows(entries, basis, d):
    ids = tuple(basis)
    if len(ids) != d:
        raise ValueError("a complete basis needs %d rays, got %d"
                         % (d, len(ids)))
    rows = [entries[rid - 1] for rid in ids]
    gram = np.array(rows) @ np.array(rows).T
    if np.any(gram - np.diag(np.diag(gram))):
        raise ValueError("basis rays are not pairwise orthogonal")
    return rows


@dataclass(frozen=True)
class DistanceSpectrum:
    """Multiset of squared distances over all unordered basis pairs.

    ``pairs`` maps each D^2 value to its multiplicity among the
    C(n, 2) distinct pairs.  Reported histograms additionally carry the
    zero self-distance of each basis, so ``distinct_value_count`` counts
    the distinct values over all ordered pairs including (A, A).
    """

    basis_count: int
    pairs: dict

    def __post_init__(self):
        n = self.basis_count
        if sum(self.pairs.values()) != n * (n - 1) // 2:
            raise ValueError("pair multiplicities do not sum to C(n, 2)")

    @property
    def distinct_value_count(self) -> int:
        if self.basis_count == 0:
            return 0
        return len(set(self.pairs) | {Fraction(0)})

    def histogram_rows(self) -> list:
        """(D^2, count) rows in ascending distance order, self-pairs included."""
        counts = dict(self.pairs)
        if self.basis_count:
            zero = Fraction(0)
            counts[zero] = counts.get(zero, 0) + self.basis_count
        return sorted(counts.items())

    def top_values(self, k: int) -> list:
        """The k most frequent off-diagonal values as (D^2, count)."""
        ranked = sorted(self.pairs.items(), key=lambda kv: (-kv[1], kv[0]))
        return ranked[:k]


def distance_spectrum(table: RayTable, bases) -> DistanceSpectrum:
    """Spectrum over all unordered pairs from ``bases``, exactly.

    The fast path scales every squared overlap by K = lcm(norms)^4 so all
    intermediate sums are integers; a single integer matrix product then
    accumulates each pair's overlap total.
    """
    bases = [tuple(b) for b in bases]
    entries = table.entries_matrix()
    d = entries.shape[1]
    for b in bases:
        _basis_rows(entries, b, d)
    gram = entries @ entries.T
    norms = np.diag(gram).astype(np.int64)
    scale = lcm(*(int(x) for x in norms)) ** 4
    denom = np.outer(norms, norms).astype(np.int64) ** 2
    if np.any(scale % denom):
        raise AssertionError("norm scaling is not integral")
    scaled = (gram.astype(np.int64) ** 4) * (scale // denom)
    selector = np.zeros((len(bases), len(table)), dtype=np.int64)
    for bi, b in enumerate(bases):
        for rid in b:
            selector[bi, rid - 1] = 1
    totals = selector @ scaled @ selector.T
    counts = {}
    for i in range(len(bases)):
        if totals[i, i] != d * scale:
            raise AssertionError("self-distance of basis %d is not zero" % i)
        for j in range(i + 1, len(bases)):
            val = Fraction(d * scale - int(totals[i, j]), (d - 1) * scale)
            counts[val] = counts.get(val, 0) + 1
    return DistanceSpectrum(basis_count=len(bases), pairs=counts)


def format_distance(value: Fraction) -> str:
    """D = sqrt(D^2) rendered to 10 decimal places, banker's rounding."""
    with localcontext() as ctx:
        ctx.prec = 40
        d = (Decimal(value.numerator) / Decimal(value.denominator)).sqrt()
        return format(d.quantize(Decimal("1.0000000000"),
                                 rounding=ROUND_HALF_EVEN), "f")


def emit_histogram(spectrum: DistanceSpectrum, path, fmt: str = "csv"):
    """Write the histogram to ``path`` as deterministic CSV or SVG."""
    rows = spectrum.histogram_rows()
    if fmt == "csv":
        lines = ["D,D2_num,D2_den,count"]
        for value, count in rows:
            lines.append("%s,%d,%d,%d" % (format_distance(value),
                                          value.numerator,
                                          value.denominator, count))
        text = "\n".join(lines) + "\n"
    elif fmt == "svg":
        text = _histogram_svg(rows)
    else:
        raise ValueError("unknown histogram format %r" % fmt)
    with open(path, "w") as fh:
        fh.write(text)


def _histogram_svg(rows) -> str:
    width, height = 640, 400
    left, right, top, bottom = 60, 20, 20, 40
    plot_w = width - left - right
    plot_h = height - top - bottom
    max_count = max((c for _, c in rows), default=1)
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 %d %d">'
        % (width, height),
        '<rect width="%d" height="%d" fill="white"/>' % (width, height),
        '<line x1="%d" y1="%d" x2="%d" y2="%d" stroke="black"/>'
        % (left, height - bottom, width - right, height - bottom),
        '<line x1="%d" y1="%d" x2="%d" y2="%d" stroke="black"/>'
        % (left, top, left, height - bottom),
    ]
    for value, count in rows:
        x = left + float(Decimal(format_distance(value))) * plot_w
        bar_h = plot_h * count / max_count
        parts.append(
            '<rect x="%.2f" y="%.2f" width="2" height="%.2f" fill="steelblue"/>'
            % (x - 1, height - bottom - bar_h, bar_h))
    parts.append(
        '<text x="%d" y="%d" font-size="12">0</text>'
        % (left - 4, height - bottom + 16))
    parts.append(
        '<text x="%d" y="%d" font-size="12">1</text>'
        % (left + plot_w - 4, height - bottom + 16))
    parts.append(
        '<text x="%d" y="%d" font-size="12">%d</text>'
        % (8, top + 12, max_count))
    parts.append('<text x="%d" y="%d" font-size="12">D</text>'
                 % (left + plot_w // 2, height - 8))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
