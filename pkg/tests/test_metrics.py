"""Tests for exact Hilbert-Schmidt distances, spectra, and histograms."""
import random
from fractions import Fraction

import pytest

from bks5 import catalog
from bks5.metrics import (DistanceSpectrum, distance_spectrum, emit_histogram,
                          format_distance, hs_distance_squared)


@pytest.fixture(scope="module")
def spectrum21(ray_table, proof_bases):
    return distance_spectrum(ray_table, proof_bases)


@pytest.fixture(scope="module")
def spectrum661(ray_table, all_bases):
    return distance_spectrum(ray_table, all_bases)


class TestHsDistanceSquared:
    """The definitional rational-arithmetic path."""

    def test_identical_bases_have_zero_distance(self, ray_table,
                                                proof_bases):
        assert hs_distance_squared(ray_table, proof_bases[0],
                                   proof_bases[0]) == 0

    def test_symmetry(self, ray_table, proof_bases):
        a, b = proof_bases[2], proof_bases[9]
        assert hs_distance_squared(ray_table, a, b) == \
            hs_distance_squared(ray_table, b, a)

    def test_values_lie_in_unit_interval(self, ray_table, proof_bases):
        for other in proof_bases[1:6]:
            value = hs_distance_squared(ray_table, proof_bases[0], other)
            assert 0 <= value <= 1

    def test_incomplete_basis_rejected(self, ray_table, proof_bases):
        with pytest.raises(ValueError, match="32 rays"):
            hs_distance_squared(ray_table, proof_bases[0][:31],
                                proof_bases[1])

    def test_non_orthogonal_family_rejected(self, ray_table, proof_bases):
        tampered = list(proof_bases[0])
        tampered[-1] = [rid for rid in range(1, 161)
                        if rid not in tampered][0]
        with pytest.raises(ValueError, match="orthogonal"):
            hs_distance_squared(ray_table, tampered, proof_bases[1])


class TestDistanceSpectrum:
    """Exact spectra over the printed and the full basis families."""

    def test_pair_multiplicities_sum_to_choose_2(self, spectrum21,
                                                 spectrum661):
        assert sum(spectrum21.pairs.values()) == 21 * 20 // 2
        assert sum(spectrum661.pairs.values()) == 661 * 660 // 2

    def test_distinct_value_counts(self, spectrum21, spectrum661):
        assert spectrum21.distinct_value_count == \
            catalog.DISTINCT_DISTANCES_PROOF
        assert spectrum661.distinct_value_count == \
            catalog.DISTINCT_DISTANCES_ALL

    def test_top_two_values_of_printed_family(self, spectrum21):
        top = spectrum21.top_values(2)
        assert top[0] == (Fraction(*catalog.PEAKS[0]), 41)
        assert top[1] == (Fraction(*catalog.PEAKS[1]), 26)

    def test_fast_path_matches_definitional_path(self, ray_table,
                                                 proof_bases, spectrum21):
        """Random pairs recomputed pairwise agree with the pooled matrix."""
        rng = random.Random(2024)
        recomputed = {}
        for _ in range(12):
            i, j = sorted(rng.sample(range(21), 2))
            value = hs_distance_squared(ray_table, proof_bases[i],
                                        proof_bases[j])
            recomputed[value] = recomputed.get(value, 0) + 1
        for value in recomputed:
            assert value in spectrum21.pairs

    def test_zero_absent_off_diagonal(self, spectrum21):
        assert Fraction(0) not in spectrum21.pairs

    def test_identical_pair_spectrum(self, ray_table, proof_bases):
        spectrum = distance_spectrum(ray_table, [proof_bases[0],
                                                 proof_bases[0]])
        assert spectrum.pairs == {Fraction(0): 1}
        assert spectrum.histogram_rows() == [(Fraction(0), 3)]

    def test_histogram_rows_include_self_distances(self, spectrum21):
        rows = spectrum21.histogram_rows()
        assert rows[0] == (Fraction(0), 21)
        assert len(rows) == catalog.DISTINCT_DISTANCES_PROOF
        assert [v for v, _ in rows] == sorted(v for v, _ in rows)

    def test_mismatched_multiplicity_rejected(self):
        with pytest.raises(ValueError, match="C\\(n, 2\\)"):
            DistanceSpectrum(basis_count=3, pairs={Fraction(1, 2): 1})


class TestFormatDistance:
    def test_known_values(self):
        assert format_distance(Fraction(29, 31)) == "0.9672041516"
        assert format_distance(Fraction(43, 62)) == "0.8327955254"
        assert format_distance(Fraction(0)) == "0.0000000000"
        assert format_distance(Fraction(1)) == "1.0000000000"


class TestEmitHistogram:
    def test_csv_shape_and_header(self, spectrum21, tmp_path):
        path = tmp_path / "histogram.csv"
        emit_histogram(spectrum21, path, "csv")
        lines = path.read_text().splitlines()
        assert lines[0] == "D,D2_num,D2_den,count"
        assert len(lines) == 1 + catalog.DISTINCT_DISTANCES_PROOF
        assert lines[1] == "0.0000000000,0,1,21"
        assert lines[-1] == "0.9672041516,29,31,41"

    def test_csv_is_deterministic(self, spectrum21, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        emit_histogram(spectrum21, a, "csv")
        emit_histogram(spectrum21, b, "csv")
        assert a.read_text() == b.read_text()

    def test_svg_has_bars_and_no_timestamps(self, spectrum21, tmp_path):
        path = tmp_path / "histogram.svg"
        emit_histogram(spectrum21, path, "svg")
        text = path.read_text()
        assert text.startswith("<svg")
        assert text.count("<rect") == 1 + catalog.DISTINCT_DISTANCES_PROOF
        assert "date" not in text.lower()

    def test_empty_spectrum_yields_header_only(self, tmp_path):
        path = tmp_path / "empty.csv"
        emit_histogram(DistanceSpectrum(basis_count=0, pairs={}), path, "csv")
        assert path.read_text() == "D,D2_num,D2_den,count\n"

    def test_unknown_format_rejected(self, spectrum21, tmp_path):
        with pytest.raises(ValueError, match="format"):
            emit_histogram(spectrum21, tmp_path / "x.bin", "png")
