import itertools

import pytest

from swapeq.equilibrium import is_equilibrium
from swapeq.families import complete, complete_bipartite, cycle, path, star
from swapeq.graph import GraphError, graph_from_adj
from swapeq.io import encode_graph6, write_report
from swapeq.survey import (
    SurveyConfig,
    SurveyConfigError,
    canonical_form,
    canonical_graph,
    enumerate_labeled_connected,
    run_survey,
    survey_report,
    verify_claims,
)

import oracle


class TestEnumeration:
    def test_counts(self):
        assert sum(1 for _ in enumerate_labeled_connected(3)) == 4
        assert sum(1 for _ in enumerate_labeled_connected(4)) == 38
        assert sum(1 for _ in enumerate_labeled_connected(5)) == 728

    def test_out_of_range(self):
        with pytest.raises(SurveyConfigError):
            list(enumerate_labeled_connected(2))
        with pytest.raises(SurveyConfigError):
            list(enumerate_labeled_connected(9))

    def test_each_exactly_once_and_connected(self):
        seen = set()
        for g in enumerate_labeled_connected(4):
            assert oracle.is_connected(g.n, g.edges)
            assert g.adj not in seen
            seen.add(g.adj)

    def test_matches_independent_filter(self):
        # independent connectivity filter over all masks agrees with the stream
        n = 4
        expected = 0
        for edges in _all_edge_subsets(n):
            if oracle.is_connected(n, edges):
                expected += 1
        assert expected == sum(1 for _ in enumerate_labeled_connected(n))


def _all_edge_subsets(n):
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield [pairs[k] for k in range(len(pairs)) if bits >> k & 1]


class TestCanonicalForm:
    def test_relabeling_invariance(self):
        g = cycle(4)
        base = canonical_form(g)
        for perm in itertools.permutations(range(4)):
            edges = [(perm[a], perm[b]) for a, b in g.edges]
            from swapeq.graph import build_graph

            assert canonical_form(build_graph(4, edges)) == base

    def test_distinguishes(self):
        assert canonical_form(path(4)) != canonical_form(star(3))

    def test_k4_all_ones(self):
        form = canonical_form(complete(4))
        assert form.bits == (1 << 6) - 1

    def test_canonical_graph_consistent(self):
        g = cycle(5)
        rep = canonical_graph(g)
        assert canonical_form(rep) == canonical_form(g)
        assert rep.m == g.m

    def test_soundness_n4(self):
        # equal form <=> brute-force permutation search finds an isomorphism
        pool = list(enumerate_labeled_connected(4))
        forms = {g.adj: canonical_form(g) for g in pool}
        for g1, g2 in itertools.combinations(pool, 2):
            iso = _isomorphic_brute(g1, g2)
            assert iso == (forms[g1.adj] == forms[g2.adj])

    def test_soundness_n6_sampled(self):
        import random

        rng = random.Random(77)
        pool = rng.sample(list(enumerate_labeled_connected(6)), 60)
        # bias toward same-edge-count pairs so isomorphic pairs do occur
        pool.sort(key=lambda g: g.m)
        for g1, g2 in zip(pool, pool[1:]):
            iso = _isomorphic_brute(g1, g2)
            assert iso == (canonical_form(g1) == canonical_form(g2))

    def test_too_large(self):
        with pytest.raises(GraphError):
            canonical_form(graph_from_adj(9, tuple([0] * 9)))


def _isomorphic_brute(g1, g2):
    if g1.m != g2.m:
        return False
    e2 = set(g2.edges)
    for perm in itertools.permutations(range(g1.n)):
        if all(tuple(sorted((perm[a], perm[b]))) in e2 for a, b in g1.edges):
            return True
    return False


class TestRunSurvey:
    def test_n4_against_oracle(self):
        res = run_survey(SurveyConfig(n=4, dedup=True))
        assert res.summary.graphs == 38
        assert not res.summary.violations
        # oracle: equilibria and their isomorphism classes
        eq_records = [r for r in res.records if r.equilibrium]
        for rec in res.records:
            g = _graph_of(rec)
            assert rec.equilibrium == oracle.equilibrium(g.n, g.edges)[0]
        # non-equilibria are exactly the labelings of the 4-path
        non_eq = [r for r in res.records if not r.equilibrium]
        assert len(non_eq) == 12
        assert all(r.m == 3 and r.tree for r in non_eq)
        p4_form = canonical_form(path(4))
        assert all(canonical_form(_graph_of(r)) == p4_form for r in non_eq)
        # five equilibrium classes: star, C4, paw, diamond, K4
        classes = {c["graph6"]: c["count"] for c in res.summary.equilibrium_classes}
        assert len(classes) == 5
        assert sum(classes.values()) == len(eq_records) == 26
        expected_reps = {
            encode_graph6(canonical_graph(star(3))): 4,
            encode_graph6(canonical_graph(cycle(4))): 3,
            encode_graph6(canonical_graph(_paw())): 12,
            encode_graph6(canonical_graph(_diamond())): 6,
            encode_graph6(canonical_graph(complete(4))): 1,
        }
        assert classes == expected_reps

    def test_claim_subset(self):
        res = run_survey(SurveyConfig(n=4, claims=("tree_star", "delta_nonpos")))
        assert set(res.summary.claim_counts) == {"tree_star", "delta_nonpos"}
        assert not res.summary.violations

    def test_summary_only(self):
        full = run_survey(SurveyConfig(n=4))
        lean = run_survey(SurveyConfig(n=4, keep_records=False))
        assert lean.records is None
        assert lean.summary.as_dict() == full.summary.as_dict()

    def test_bad_config(self):
        with pytest.raises(SurveyConfigError):
            run_survey(SurveyConfig(n=9))
        with pytest.raises(SurveyConfigError):
            run_survey(SurveyConfig())
        with pytest.raises(SurveyConfigError):
            run_survey(SurveyConfig(n=4, claims=("nope",)))

    def test_graph6_stream(self):
        lines = tuple(
            encode_graph6(complete_bipartite(r, s))
            for r, s in [(1, 1), (1, 4), (2, 2), (2, 3), (3, 3)])
        res = run_survey(SurveyConfig(graph6_lines=lines))
        assert res.summary.graphs == 5
        assert res.summary.equilibria == 5
        assert all(r.equilibrium for r in res.records)
        assert not res.summary.violations

    def test_graph6_stream_disconnected(self):
        from swapeq.graph import build_graph

        g = build_graph(4, [(0, 1), (2, 3)])
        res = run_survey(SurveyConfig(graph6_lines=(encode_graph6(g),)))
        rec = res.records[0]
        assert not rec.connected and not rec.equilibrium
        assert rec.diameter == "INF"
        assert all(v == "not_applicable" for v in rec.claims.values())

    def test_record_order_is_enumeration_order(self):
        res = run_survey(SurveyConfig(n=4))
        masks = [_mask_of(r) for r in res.records]
        assert masks == sorted(masks)


def _graph_of(rec):
    from swapeq.io import parse_graph6

    return parse_graph6(rec.graph6)


def _mask_of(rec):
    from swapeq.kernels import adj_to_mask

    g = _graph_of(rec)
    return adj_to_mask(g.adj)


def _paw():
    from swapeq.graph import build_graph

    return build_graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])


def _diamond():
    from swapeq.graph import build_graph

    return build_graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


class TestVerifyClaims:
    def test_p4_not_applicable(self):
        g = path(4)
        res = verify_claims(g, is_equilibrium(g))
        structural = ("tree_star", "bipartite_krs", "block_diam2", "cactus_diam2",
                      "bridge_degree", "single_pendant", "adjacent_cut",
                      "cycle_bounds")
        assert all(res[c] == "not_applicable" for c in structural)
        # but the swap-total claim is unconditional on the verdict
        assert res["delta_nonpos"] == "not_applicable"  # P4 is a tree

    def test_c4_delta(self):
        g = cycle(4)
        res = verify_claims(g, is_equilibrium(g))
        assert res["delta_nonpos"] == "holds"

    def test_c6_delta_unconditional(self):
        g = cycle(6)  # not an equilibrium, still bipartite and cyclic
        verdict = is_equilibrium(g)
        assert not verdict.is_equilibrium
        res = verify_claims(g, verdict)
        assert res["delta_nonpos"] == "holds"

    def test_paw_bridge_degree(self):
        g = _paw()
        res = verify_claims(g, is_equilibrium(g))
        assert res["bridge_degree"] == "holds"
        assert res["cycle_bounds"] == "holds"


class TestDeterminism:
    def test_workers_identical_n4(self):
        a = run_survey(SurveyConfig(n=4, workers=1, dedup=True))
        b = run_survey(SurveyConfig(n=4, workers=3, dedup=True))
        ra = write_report(survey_report(a, SurveyConfig(n=4, workers=1, dedup=True)), "json")
        rb = write_report(survey_report(b, SurveyConfig(n=4, workers=3, dedup=True)), "json")
        assert ra == rb
