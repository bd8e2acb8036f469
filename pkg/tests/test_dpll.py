"""Tests for the DIMACS parser and the generic DPLL cross-checker."""
import itertools
import random

import pytest

from bks5 import dpll
from bks5.coloring import KSInstance, export_cnf


class TestParseDimacs:
    def test_basic_parse(self):
        nvars, clauses = dpll.parse_dimacs(
            "c a comment\np cnf 3 2\n1 -2 0\n2 3 0\n")
        assert nvars == 3
        assert clauses == [(1, -2), (2, 3)]

    def test_clause_spanning_lines(self):
        nvars, clauses = dpll.parse_dimacs("p cnf 2 1\n1\n-2 0\n")
        assert clauses == [(1, -2)]

    def test_missing_header_raises(self):
        with pytest.raises(ValueError, match="problem line"):
            dpll.parse_dimacs("1 2 0\n")

    def test_wrong_clause_count_raises(self):
        with pytest.raises(ValueError, match="promises"):
            dpll.parse_dimacs("p cnf 2 2\n1 0\n")

    def test_unterminated_clause_raises(self):
        with pytest.raises(ValueError, match="unterminated"):
            dpll.parse_dimacs("p cnf 2 1\n1 2\n")

    def test_out_of_range_literal_raises(self):
        with pytest.raises(ValueError, match="out of range"):
            dpll.parse_dimacs("p cnf 2 1\n3 0\n")


class TestSolve:
    def test_trivially_sat(self):
        result = dpll.solve(2, [(1,), (-2,)])
        assert result.satisfiable is True
        assert result.assignment == {1: True, 2: False}

    def test_trivially_unsat(self):
        result = dpll.solve(1, [(1,), (-1,)])
        assert result.satisfiable is False

    def test_empty_clause_unsat(self):
        assert dpll.solve(2, [()]).satisfiable is False

    def test_no_clauses_sat(self):
        assert dpll.solve(3, []).satisfiable is True

    def test_tautology_ignored(self):
        assert dpll.solve(1, [(1, -1)]).satisfiable is True

    def test_pigeonhole_3_into_2_unsat(self):
        """Three pigeons, two holes."""
        def var(i, j):
            return 2 * i + j + 1
        clauses = [tuple(var(i, j) for j in range(2)) for i in range(3)]
        for j in range(2):
            for i1, i2 in itertools.combinations(range(3), 2):
                clauses.append((-var(i1, j), -var(i2, j)))
        assert dpll.solve(6, clauses).satisfiable is False

    def test_random_instances_match_brute_force(self):
        """200 seeded random 3-SAT instances against full enumeration."""
        rng = random.Random(424242)
        for _ in range(200):
            n = rng.randint(1, 8)
            m = rng.randint(1, 30)
            clauses = []
            for _ in range(m):
                width = rng.randint(1, 3)
                clauses.append(tuple(
                    rng.choice([-1, 1]) * rng.randint(1, n)
                    for _ in range(width)))
            got = dpll.solve(n, clauses).satisfiable
            want = any(
                all(any((lit > 0) == bits[abs(lit) - 1] for lit in cl)
                    for cl in clauses)
                for bits in itertools.product([False, True], repeat=n))
            assert got == want

    def test_models_satisfy_all_clauses(self):
        rng = random.Random(31337)
        for _ in range(50):
            n = rng.randint(2, 7)
            clauses = [tuple(rng.choice([-1, 1]) * rng.randint(1, n)
                             for _ in range(3)) for _ in range(rng.randint(1, 12))]
            result = dpll.solve(n, clauses)
            if result.satisfiable:
                for cl in clauses:
                    assert any(result.assignment[abs(l)] == (l > 0)
                               for l in cl)


class TestExportedInstances:
    """The solver agrees with the structured search on real instances."""

    def test_21_basis_cnf_unsat(self, ortho_graph, proof_bases):
        inst = KSInstance.build(ortho_graph, proof_bases)
        nvars, clauses = dpll.parse_dimacs(export_cnf(inst))
        assert nvars == 160
        assert len(clauses) == 9541
        assert dpll.solve(nvars, clauses).satisfiable is False

    def test_single_basis_cnf_sat(self, ortho_graph, proof_bases):
        inst = KSInstance.build(ortho_graph, [proof_bases[0]])
        nvars, clauses = dpll.parse_dimacs(export_cnf(inst))
        result = dpll.solve(nvars, clauses)
        assert result.satisfiable is True
        assert sum(result.assignment.values()) == 1
