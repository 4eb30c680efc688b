import itertools

import pytest

from arlab.colorings import (EdgeColoring, classes_of_edges,
                             mono_clique_plus_rainbow, pattern,
                             rainbow_cycle_plus_mono)
from arlab.families import parse_family
from arlab.graphs import Graph, are_isomorphic, parse_graph, turan_graph
from arlab.search import (Budget, ar_exact, enumerate_copies, ex_exact,
                          f_exact, g_exact, holds_f_witness, lr_exact,
                          naive_max_colors, pierces_all, verify_construction,
                          verify_result)

K4_MINUS_E = parse_graph("0-1,0-2,0-3,1-2,1-3")


class TestCopies:
    def test_clique_copies_are_subsets(self):
        assert len(enumerate_copies(parse_graph("K3"), 5)) == 10
        assert len(enumerate_copies(parse_graph("K4"), 6)) == 15

    def test_general_copies_dedupe(self):
        assert len(enumerate_copies(K4_MINUS_E, 4)) == 6
        assert len(enumerate_copies(parse_graph("M2"), 4)) == 3
        assert len(enumerate_copies(parse_graph("P3"), 3)) == 3

    def test_isolates_do_not_multiply_copies(self):
        assert len(enumerate_copies(parse_graph("K3+K1"), 5)) == \
            len(enumerate_copies(parse_graph("K3"), 5))

    def test_edgeless_target_rejected(self):
        with pytest.raises(ValueError):
            enumerate_copies(Graph(3), 5)


class TestDecisionOps:
    def test_rainbow_always_witnesses(self):
        w = holds_f_witness(pattern("RAINBOW", 5), parse_graph("K4"),
                            parse_family("k2"))
        assert w is not None
        assert all(len(es) == 1 for _, es in w.classes)

    def test_square_family_blocks_rtdl(self):
        w = holds_f_witness(pattern("RTDL", 8, 2), parse_graph("K5"),
                            parse_family("edges:squares"))
        assert w is None

    def test_lex_decomposes_into_triangle_free_classes(self):
        w = holds_f_witness(pattern("LEX", 6), parse_graph("K4"),
                            parse_family("free:K3"))
        assert w is not None

    def test_f_witness_requires_k2_family(self):
        with pytest.raises(ValueError):
            holds_f_witness(pattern("LEX", 5), parse_graph("K3"),
                            parse_family("up:K3"))

    def test_lex_pierces_triangles_via_paths(self):
        ok, violation = pierces_all(pattern("LEX", 6), parse_graph("K3"),
                                    parse_family("up:P3"))
        assert ok and violation is None

    def test_rainbow_fails_piercing(self):
        ok, violation = pierces_all(pattern("RAINBOW", 5), parse_graph("K4"),
                                    parse_family("up:P3"))
        assert not ok
        assert violation is not None and len(violation.vertices()) == 4

    def test_mono_block_pierces_k4_by_triangles(self):
        col = mono_clique_plus_rainbow(6, 1)
        ok, _ = pierces_all(col, parse_graph("K4"), parse_family("up:K3"))
        assert ok

    def test_pierces_requires_k2_free_family(self):
        with pytest.raises(ValueError):
            pierces_all(pattern("LEX", 5), parse_graph("K3"), parse_family("k2"))


class TestFExact:
    def test_f_k3_without_two_path(self):
        for n in (4, 5):
            r = f_exact(n, parse_graph("K3"), parse_family("not:P3"))
            assert (r.value, r.status) == (n, "exact")
            assert verify_result(r)

    def test_anti_ramsey_via_f(self):
        assert f_exact(5, parse_graph("K4"), parse_family("k2")).value == 8

    def test_f_k4_without_two_path(self):
        r = f_exact(4, parse_graph("K4"), parse_family("not:P3"))
        assert r.value == 6

    def test_f_all_is_one(self):
        r = f_exact(5, parse_graph("K3"), parse_family("all"))
        assert (r.value, r.certificate) == (1, None)
        assert verify_result(r)

    def test_f_requires_k2(self):
        with pytest.raises(ValueError):
            f_exact(5, parse_graph("K3"), parse_family("up:K3"))

    def test_host_too_small(self):
        with pytest.raises(ValueError):
            f_exact(3, parse_graph("K4"), parse_family("k2"))

    def test_certificate_is_extremal_witness_free(self):
        r = f_exact(5, parse_graph("K4"), parse_family("free:K3"))
        assert r.value == 6
        cert = r.certificate
        assert cert.num_colors == 5
        assert holds_f_witness(cert, parse_graph("K4"),
                               parse_family("free:K3")) is None

    def test_timeout_carries_no_claim(self):
        r = f_exact(6, parse_graph("K4"), parse_family("k2"),
                    Budget(max_nodes=50))
        assert r.status == "timeout"
        # the candidate coloring is still a genuine witness-free coloring
        if r.certificate is not None:
            assert holds_f_witness(r.certificate, parse_graph("K4"),
                                   parse_family("k2")) is None


class TestGExact:
    def test_piercing_by_triangles(self):
        for n in (4, 5):
            r = g_exact(n, parse_graph("K4"), parse_family("up:K3"))
            assert (r.value, r.status) == (n, "exact")
            assert verify_result(r)

    def test_near_clique_collapses(self):
        for n in (4, 5):
            r = g_exact(n, K4_MINUS_E, parse_family("up:K3"))
            assert r.value == 1

    def test_path_piercing_of_triangles(self):
        for n in (3, 4, 5):
            assert g_exact(n, parse_graph("K3"), parse_family("up:P3")).value == n - 1

    def test_matching_and_path_piercing_of_k4(self):
        assert g_exact(4, parse_graph("K4"), parse_family("up:M2")).value == 5
        assert g_exact(4, parse_graph("K4"), parse_family("up:P4")).value == 4
        assert g_exact(5, parse_graph("K4"), parse_family("up:M2")).value == 6
        assert g_exact(5, parse_graph("K4"), parse_family("up:P4")).value == 6

    def test_exact_piercing_values(self):
        assert g_exact(4, parse_graph("M2"), parse_family("co:not:M2")).value == 3
        for spec in ("K3", "P3", "M2"):
            fam = parse_family(f"co:not:{spec}")
            assert g_exact(5, parse_graph(spec), fam).value == 1, spec

    def test_zero_when_no_subgraph_qualifies(self):
        r = g_exact(5, parse_graph("K3"), parse_family("up:K4"))
        assert (r.value, r.status) == (0, "exact")
        assert r.certificate is None
        assert verify_result(r)

    def test_g_requires_k2_free(self):
        with pytest.raises(ValueError):
            g_exact(5, parse_graph("K4"), parse_family("free:K3"))

    def test_timeout_gives_lower_bound(self):
        r = g_exact(6, parse_graph("K4"), parse_family("up:K3"),
                    Budget(max_nodes=60))
        assert r.status == "lower_bound"
        if r.value > 0:
            ok, _ = pierces_all(r.certificate, parse_graph("K4"),
                                parse_family("up:K3"))
            assert ok and r.certificate.num_colors == r.value

    def test_certificate_for_piercing(self):
        r = g_exact(5, parse_graph("K4"), parse_family("up:K3"))
        ok, _ = pierces_all(r.certificate, parse_graph("K4"),
                            parse_family("up:K3"))
        assert ok and r.certificate.num_colors == 5


class TestArLr:
    def test_ar_triangle(self):
        for n in (4, 5):
            r = ar_exact(n, parse_graph("K3"))
            assert r.value == n and r.kind == "ar"

    def test_ar_k4(self):
        assert ar_exact(4, parse_graph("K4")).value == 6
        assert ar_exact(5, parse_graph("K4")).value == 8

    def test_lr_at_most_ar(self):
        lr = lr_exact(4, parse_graph("K4"))
        ar = ar_exact(4, parse_graph("K4"))
        assert lr.value <= ar.value
        # frozen from the full-enumeration oracle over the 203 partitions
        assert lr.value == 6

    def test_ub_ar_inequality(self):
        # g(n,G|F) < Ar(n,G) on computed instances
        for n in (4, 5):
            ar = ar_exact(n, parse_graph("K4")).value
            for fam in ("up:K3", "up:M2", "up:P4"):
                assert g_exact(n, parse_graph("K4"), parse_family(fam)).value < ar


class TestMonotonicity:
    def test_f_antitone_in_family(self):
        # K2 in F1 subset F2 implies f(.|F1) >= f(.|F2)
        chains = [("k2", "matchings"), ("k2", "free:K3"),
                  ("matchings", "free:K3 + matchings")]
        for small, large in chains:
            for n in (4, 5):
                assert f_exact(n, parse_graph("K4"), parse_family(small)).value >= \
                    f_exact(n, parse_graph("K4"), parse_family(large)).value

    def test_g_monotone_in_family(self):
        # F1 subset F2 without K2 implies g(.|F1) <= g(.|F2)
        for n in (4, 5):
            assert g_exact(n, parse_graph("K4"), parse_family("up:K3")).value <= \
                g_exact(n, parse_graph("K4"), parse_family("up:K3 + up:M2")).value

    def test_g_antitone_in_contained_pattern(self):
        # Q1 subset Q2 implies g(n,G|>Q1) >= g(n,G|>Q2)
        for n in (4, 5):
            assert g_exact(n, parse_graph("K4"), parse_family("up:M2")).value >= \
                g_exact(n, parse_graph("K4"), parse_family("up:P4")).value

    def test_complementarity(self):
        for n in (4, 5):
            f = f_exact(n, parse_graph("K4"), parse_family("free:K3")).value
            g = g_exact(n, parse_graph("K4"), parse_family("co:free:K3")).value
            assert g == f - 1

    def test_strict_inequality(self):
        for fam in ("free:K3", "matchings"):
            f = f_exact(5, parse_graph("K4"), parse_family(fam)).value
            g = g_exact(5, parse_graph("K4"), parse_family("co:" + fam)).value
            assert g < f

    def test_blocker_anti_packer_sandwich(self):
        # Ar(n, A(G,p)) <= g(n, K_p | >G) < Ar(n, B(G,p)) at n=5, p=4, G=K3,
        # where the minimal anti-packers include 2K2 and the blockers are {C4}
        lower = ar_exact(5, parse_graph("M2")).value
        middle = g_exact(5, parse_graph("K4"), parse_family("up:K3")).value
        upper = ar_exact(5, parse_graph("C4")).value
        assert lower <= middle < upper
        assert (lower, middle) == (2, 5)


class TestOracleAgreement:
    PAIRS = [("f", "K3", "k2"), ("f", "K4", "free:K3"), ("f", "K4", "matchings"),
             ("g", "K4", "up:K3"), ("g", "K3", "up:P3"), ("g", "K4", "up:M2"),
             ("g", "M2", "co:not:M2")]

    def test_n4_battery(self):
        for mode, t, f in self.PAIRS:
            target, fam = parse_graph(t), parse_family(f)
            naive = naive_max_colors(4, target, fam, mode)
            engine = (f_exact if mode == "f" else g_exact)(4, target, fam).value
            assert naive == engine, (mode, t, f)

    @pytest.mark.slow
    def test_n5_battery(self):
        for mode, t, f in self.PAIRS:
            target, fam = parse_graph(t), parse_family(f)
            naive = naive_max_colors(5, target, fam, mode)
            engine = (f_exact if mode == "f" else g_exact)(5, target, fam).value
            assert naive == engine, (mode, t, f)

    def test_symmetry_filter_does_not_change_results(self):
        for mode, t, f in self.PAIRS[:4]:
            target, fam = parse_graph(t), parse_family(f)
            run = f_exact if mode == "f" else g_exact
            assert run(5, target, fam, symmetry=True).value == \
                run(5, target, fam, symmetry=False).value


class TestEx:
    def test_turan_values(self):
        r = ex_exact(5, parse_graph("K3"))
        assert (r.value, r.status) == (6, "exact")
        assert are_isomorphic(r.certificate, turan_graph(5, 2))
        r = ex_exact(6, parse_graph("K4"))
        assert r.value == 12
        assert are_isomorphic(r.certificate, turan_graph(6, 3))

    def test_c4_small_case(self):
        assert ex_exact(7, parse_graph("C4")).value == 9

    def test_turan_reproduction(self):
        for n in range(3, 9):
            for m in range(1, min(n, 4)):
                r = ex_exact(n, parse_graph(f"K{m + 1}"))
                assert r.value == turan_graph(n, m).edge_count, (n, m)
                assert verify_result(r)

    def test_multiple_forbidden(self):
        r = ex_exact(6, [parse_graph("K3"), parse_graph("C4")])
        # girth > 4 on 6 vertices: at most 6 edges
        assert r.value == 6

    def test_forbidden_k2(self):
        assert ex_exact(5, parse_graph("K2")).value == 0

    def test_budget_lower_bound(self):
        r = ex_exact(8, parse_graph("K3"), Budget(max_nodes=30))
        assert r.status == "lower_bound"
        assert r.value <= 16
        from arlab.graphs import contains_subgraph
        assert contains_subgraph(r.certificate, parse_graph("K3")) is None

    def test_rejects(self):
        with pytest.raises(ValueError):
            ex_exact(11, parse_graph("K3"))
        with pytest.raises(ValueError):
            ex_exact(5, Graph(2))


class TestVerifyConstruction:
    def test_rtdl_square_lower_bound(self):
        rep = verify_construction(pattern("RTDL", 8, 2), "f_bad",
                                  parse_graph("K5"), parse_family("edges:squares"))
        assert rep.ok and rep.colors == 22 and rep.implied == "f > 22"

    def test_mono_block_piercing(self):
        rep = verify_construction(mono_clique_plus_rainbow(8, 1), "g_valid",
                                  parse_graph("K5"), parse_family("up:K4"))
        assert rep.ok and rep.colors == 8

    def test_hamilton_cycle_piercing(self):
        rep = verify_construction(rainbow_cycle_plus_mono(6), "g_valid",
                                  parse_graph("K4"), parse_family("up:P4"))
        assert rep.ok and rep.colors == 7

    def test_failure_reports_copy(self):
        rep = verify_construction(pattern("RAINBOW", 5), "g_valid",
                                  parse_graph("K4"), parse_family("up:P3"))
        assert not rep.ok and rep.violation is not None

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            verify_construction(pattern("MONO", 4), "nonsense",
                                parse_graph("K3"), parse_family("up:P3"))


class TestResultSerialization:
    def test_json_shape(self):
        r = g_exact(4, parse_graph("K4"), parse_family("up:K3"))
        d = r.to_json_dict()
        assert d["schema"] == 1
        assert d["kind"] == "g" and d["value"] == 4 and d["status"] == "exact"
        assert d["family"]["name"] == "up:K3"
        assert d["certificate"]["type"] == "coloring"
        restored = EdgeColoring.from_json_dict(d["certificate"])
        assert restored.num_colors == 4

    def test_ex_json(self):
        d = ex_exact(5, parse_graph("K3")).to_json_dict()
        assert d["certificate"]["type"] == "graph"
        assert d["params"]["forbidden"][0]["n"] == 3
