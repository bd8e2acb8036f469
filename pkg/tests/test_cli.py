"""End-to-end checks of the command-line interface and the JSON cache."""
import json

import pytest

from bks5 import catalog
from bks5.bases import bases_sha256
from bks5.cache import content_key, memo_json
from bks5.cli import main


@pytest.fixture(scope="module")
def seeded_cache(tmp_path_factory, ray_table, ortho_graph, all_bases,
                 all_partitions):
    """A cache directory pre-filled with the expensive derivations."""
    directory = tmp_path_factory.mktemp("cache")
    key = content_key({"rays": [r.to_string() for r in ray_table.rays],
                       "dim": ortho_graph.dim})
    (directory / "maximal_bases.json").write_text(
        json.dumps({"key": key, "value": [list(b) for b in all_bases]}))
    key = content_key({"bases_sha256": bases_sha256(all_bases)})
    (directory / "partitions.json").write_text(
        json.dumps({"key": key, "value": [list(p) for p in all_partitions]}))
    return directory


@pytest.fixture()
def cache_env(seeded_cache, monkeypatch):
    monkeypatch.setenv("BKS5_CACHE_DIR", str(seeded_cache))
    return seeded_cache


def run(tmp_path, *argv):
    out = tmp_path / "out"
    code = main(["--out", str(out)] + list(argv))
    return code, out


class TestRaysCommand:
    """``rays`` rebuilds the table and the operator parity report."""

    def test_writes_table_artifacts(self, tmp_path, capsys):
        code, out = run(tmp_path, "rays")
        assert code == 0
        assert (out / "rays.csv").read_text().count("\n") == 161
        data = json.loads((out / "rays.json").read_text())
        assert len(data["rays"]) == 160
        assert "rays: 160" in capsys.readouterr().out

    def test_magic_configuration_report(self, tmp_path, capsys):
        code, out = run(tmp_path, "rays", "--config", "magic")
        assert code == 0
        report = json.loads((out / "magic.json").read_text())
        assert report["operator_count"] == 14
        assert report["sign_product"] == -1
        assert report["parity_contradiction"] is True
        assert "contradiction=True" in capsys.readouterr().out

    def test_corrupt_reference_exits_nonzero(self, tmp_path, monkeypatch,
                                             capsys):
        tampered = list(catalog.RAYS)
        tampered[40] = catalog.RAYS[0]  # a ray from the wrong block
        monkeypatch.setattr(catalog, "RAYS", tuple(tampered))
        code, _ = run(tmp_path, "rays")
        assert code == 1
        assert "error:" in capsys.readouterr().err


class TestBasesCommand:
    """``bases`` enumerates, serializes and cross-checks the catalogue."""

    def test_enumerates_and_verifies(self, tmp_path, cache_env, capsys):
        code, out = run(tmp_path, "bases")
        assert code == 0
        lines = (out / "bases.txt").read_text().splitlines()
        assert len(lines) == 661
        assert lines[0] == " ".join(str(i) for i in range(1, 33))
        data = json.loads((out / "bases.json").read_text())
        assert data["count"] == 661
        assert len(data["bases"]) == 661
        assert "661 enumerated, census verified" in capsys.readouterr().out

    def test_corrupt_cache_is_rebuilt(self, tmp_path, monkeypatch, capsys):
        directory = tmp_path / "cache"
        directory.mkdir()
        (directory / "maximal_bases.json").write_text("{ not json")
        monkeypatch.setenv("BKS5_CACHE_DIR", str(directory))
        code, _ = run(tmp_path, "bases")
        assert code == 0
        repaired = json.loads((directory / "maximal_bases.json").read_text())
        assert len(repaired["value"]) == 661
        assert "census verified" in capsys.readouterr().out

    def test_wrong_cached_value_falls_back(self, tmp_path, ray_table,
                                           ortho_graph, monkeypatch, capsys):
        directory = tmp_path / "cache"
        directory.mkdir()
        key = content_key({"rays": [r.to_string() for r in ray_table.rays],
                           "dim": ortho_graph.dim})
        (directory / "maximal_bases.json").write_text(
            json.dumps({"key": key, "value": [[1, 2, 3]]}))
        monkeypatch.setenv("BKS5_CACHE_DIR", str(directory))
        code, _ = run(tmp_path, "bases")
        assert code == 0
        assert "661 enumerated, census verified" in capsys.readouterr().out


class TestColorCommand:
    """``color`` writes a DIMACS instance plus a machine-checked verdict."""

    def test_reference_selection(self, tmp_path, capsys):
        code, out = run(tmp_path, "color", "--bases", "proof")
        assert code == 0
        cert = json.loads((out / "certificate-proof.json").read_text())
        assert cert["status"] == "non_colorable"
        assert cert["witness"] is None
        assert cert["solvers_agree"] is True
        assert cert["dimacs_cross_check"]["satisfiable"] is False
        cnf = (out / "instance-proof.cnf").read_text()
        assert "p cnf 160 9541" in cnf
        assert "cross-check agrees" in capsys.readouterr().out

    def test_block_selection(self, tmp_path, capsys):
        code, out = run(tmp_path, "color", "--bases", "blocks")
        assert code == 0
        cert = json.loads((out / "certificate-blocks.json").read_text())
        assert cert["status"] == "non_colorable"
        assert cert["solvers_agree"] is True

    def test_unknown_selection_rejected(self, tmp_path):
        with pytest.raises(SystemExit):
            run(tmp_path, "color", "--bases", "everything")


class TestSearchCommand:
    """``search`` is reproducible from its seed."""

    def test_pinned_seed_reproduces_golden(self, tmp_path, cache_env, capsys):
        code, out = run(tmp_path, "search", "--seed", "0")
        assert code == 0
        data = json.loads((out / "search.json").read_text())
        assert data["status"] == "found"
        assert data["restart"] == 0
        assert data["size"] == len(data["bases"]) == 5
        assert data["basis_indices"] == list(catalog.SEARCH_GOLDEN["bases"])
        assert "found, size 5" in capsys.readouterr().out

    def test_zero_budget_is_reported(self, tmp_path, cache_env, capsys):
        code, out = run(tmp_path, "search", "--budget", "0")
        assert code == 0
        data = json.loads((out / "search.json").read_text())
        assert data["status"] == "budget_exhausted"
        assert data["basis_indices"] == []
        assert data["attempts"] == 0


class TestDistancesCommand:
    """``distances`` emits exact-spectrum histograms."""

    def test_reference_spectrum_csv_and_svg(self, tmp_path, capsys):
        code, out = run(tmp_path, "distances", "--format", "csv,svg")
        assert code == 0
        lines = (out / "histogram-proof.csv").read_text().splitlines()
        assert lines[0] == "D,D2_num,D2_den,count"
        assert len(lines) == 55
        svg = (out / "histogram-proof.svg").read_text()
        assert svg.count("<rect") == 55
        assert "54 distinct values" in capsys.readouterr().out

    def test_unknown_format_exits_nonzero(self, tmp_path, capsys):
        code, _ = run(tmp_path, "distances", "--format", "png")
        assert code == 1
        assert "unknown histogram format" in capsys.readouterr().err


class TestGeometryCommand:
    """``geometry`` records the subspace invariants as JSON."""

    def test_report_artifact(self, tmp_path, capsys):
        code, out = run(tmp_path, "geometry")
        assert code == 0
        data = json.loads((out / "geometry.json").read_text())
        assert data["union_point_count"] == 129
        assert data["all_isotropic"] is True
        assert data["intersection_dims"]["A|B"] == 0
        assert data["intersection_dims"]["A'|C"] == 2
        assert {frozenset(s) for s in data["systems"]} == \
            {frozenset({"A", "B"}), frozenset({"A'", "B'", "C"})}
        assert data["distinguished"] == {"IIIIX": 1, "IIIZI": 3, "IIXZX": 3}
        assert "union 129 points" in capsys.readouterr().out


class TestSymmetryCommand:
    """``symmetry`` records the automorphism-group invariants as JSON."""

    def test_report_artifact(self, tmp_path, capsys):
        code, out = run(tmp_path, "symmetry")
        assert code == 0
        data = json.loads((out / "symmetry.json").read_text())
        assert data["order"] == 192
        assert data["weighted_order"] == 2
        assert data["normal_ea_order"] == 32
        assert data["quotient_order"] == 6
        assert data["quotient_nonabelian"] is True
        assert data["closure_verified"] is True
        text = capsys.readouterr().out
        assert "order 192" in text and "(non-abelian)" in text


class TestVerifyCommand:
    """``verify`` prints one PASS/FAIL line per check and a summary."""

    def test_all_checks_pass(self, tmp_path, cache_env, capsys):
        code, _ = run(tmp_path, "verify")
        assert code == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[-1].startswith("verify: 10/10 checks passed")
        names = [line.split()[0] for line in lines[:-1]]
        assert names == ["ray_table", "magic_parity", "maximal_bases",
                         "coloring_proof_bases", "coloring_all_bases",
                         "unique_partition", "distance_spectra", "geometry",
                         "symmetry", "search_regression"]
        assert all(line.split()[1] == "PASS" for line in lines[:-1])


class TestMemoJson:
    """Transparent caching with staleness and corruption recovery."""

    def test_disabled_without_directory(self, monkeypatch):
        monkeypatch.delenv("BKS5_CACHE_DIR", raising=False)
        calls = []

        def build():
            calls.append(1)
            return {"v": 7}

        assert memo_json("probe", {"k": 1}, build) == {"v": 7}
        assert memo_json("probe", {"k": 1}, build) == {"v": 7}
        assert len(calls) == 2

    def test_hit_skips_builder(self, tmp_path, monkeypatch):
        monkeypatch.setenv("BKS5_CACHE_DIR", str(tmp_path))
        assert memo_json("probe", {"k": 1}, lambda: [1, 2, 3]) == [1, 2, 3]

        def explode():
            raise AssertionError("builder must not run on a cache hit")

        assert memo_json("probe", {"k": 1}, explode) == [1, 2, 3]

    def test_stale_key_rebuilds(self, tmp_path, monkeypatch):
        monkeypatch.setenv("BKS5_CACHE_DIR", str(tmp_path))
        assert memo_json("probe", {"k": 1}, lambda: "old") == "old"
        assert memo_json("probe", {"k": 2}, lambda: "new") == "new"
        data = json.loads((tmp_path / "probe.json").read_text())
        assert data["value"] == "new"

    def test_corrupt_entry_rebuilt_in_place(self, tmp_path, monkeypatch):
        monkeypatch.setenv("BKS5_CACHE_DIR", str(tmp_path))
        (tmp_path / "probe.json").write_text("{ not json")
        assert memo_json("probe", {"k": 1}, lambda: 42) == 42

        def explode():
            raise AssertionError("entry should have been repaired")

        assert memo_json("probe", {"k": 1}, explode) == 42
