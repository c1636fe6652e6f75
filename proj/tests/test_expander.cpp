#include <doctest.h>

#include "oracles.hpp"
#include "rainbow/expander.hpp"

using namespace rainbow;
using namespace testsupport;

namespace {

EdgeColoredGraph k4_plus_pendant() {
    auto k4 = one_factorized_complete(4);
    std::vector<Edge> edges = k4.edges();
    edges.push_back({3, 4, k4.palette_size()});
    return EdgeColoredGraph::build(5, std::move(edges));
}

} // namespace

TEST_CASE("exact extraction matches the subset-enumeration oracle") {
    auto k4 = one_factorized_complete(4);
    auto rep = extract_log_maximal(k4, ExtractMode::Exact);
    CHECK(rep.certified);
    CHECK(rep.vertices.size() == 4);
    CHECK(rep.ratio == doctest::Approx(3.0 / std::log(4.0)));

    auto pend = k4_plus_pendant();
    auto rep2 = extract_log_maximal(pend, ExtractMode::Exact);
    CHECK(rep2.vertices == std::vector<int>{0, 1, 2, 3});
    CHECK(rep2.ratio == doctest::Approx(brute_best_ratio(pend)));

    auto edge = EdgeColoredGraph::build(2, {{0, 1, 0}});
    auto rep3 = extract_log_maximal(edge, ExtractMode::Exact);
    CHECK(rep3.ratio == doctest::Approx(1.0 / std::log(2.0)));

    for (uint64_t seed = 0; seed < 20; ++seed) {
        auto g = random_proper_graph(9, 0.45, seed);
        if (g.m() == 0) continue;
        auto r = extract_log_maximal(g, ExtractMode::Exact);
        CHECK(r.ratio == doctest::Approx(brute_best_ratio(g)));
    }
}

TEST_CASE("log-maximality checker") {
    CHECK(check_log_maximal(one_factorized_complete(4)));
    CHECK_FALSE(check_log_maximal(k4_plus_pendant()));
    CHECK(check_log_maximal(EdgeColoredGraph::build(2, {{0, 1, 0}})));
}

TEST_CASE("exact-mode guards") {
    auto big = random_proper_graph(17, 0.3, 1);
    CHECK_THROWS_AS(extract_log_maximal(big, ExtractMode::Exact), Error);
    CHECK_THROWS_AS(extract_log_maximal(EdgeColoredGraph::build(4, {}), ExtractMode::Exact), Error);
}

TEST_CASE("peel mode never beats exact and keeps the whole-graph floor") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        auto g = random_proper_graph(10, 0.4, seed);
        if (g.m() == 0) continue;
        auto peel = extract_log_maximal(g, ExtractMode::Peel);
        auto exact = extract_log_maximal(g, ExtractMode::Exact);
        CHECK_FALSE(peel.certified);
        CHECK(peel.ratio <= exact.ratio + 1e-9);
        double floor = g.average_degree().value() / std::log(static_cast<double>(g.n()));
        CHECK(peel.ratio >= floor - 1e-9);
    }
}

TEST_CASE("minimum degree versus half the average degree") {
    auto r1 = min_degree_check(one_factorized_complete(4));
    CHECK(r1.min_degree == 3);
    CHECK(r1.half_average_degree == doctest::Approx(1.5));
    CHECK(r1.pass);

    auto star = EdgeColoredGraph::build(5, {{0, 1, 0}, {0, 2, 1}, {0, 3, 2}, {0, 4, 3}});
    auto r2 = min_degree_check(star);
    CHECK(r2.min_degree == 1);
    CHECK(r2.half_average_degree == doctest::Approx(0.8));
    CHECK(r2.pass);

    auto r3 = min_degree_check(k4_plus_pendant());
    CHECK(r3.min_degree == 1);
    CHECK(r3.half_average_degree == doctest::Approx(1.4));
    CHECK_FALSE(r3.pass);
}

TEST_CASE("optimal cut: thresholds, boundary cases") {
    auto k3 = EdgeColoredGraph::build(3, {{0, 1, 0}, {1, 2, 1}, {0, 2, 2}});
    auto cut = optimal_cut_for(k3, VertexSet::of(3, {0}), Rational(1, 1));
    CHECK(cut.removed.count() == 2);
    CHECK(cut.achieved_neighborhood == 0);

    auto cube = cayley_sum_graph(FiniteGroup::vector_f2(3), {1, 2, 4});
    auto cut2 = optimal_cut_for(cube, VertexSet::of(8, {0}), Rational(1, 1));
    CHECK(cut2.removed.count() == 3);

    // eps = 0: the threshold cannot be undercut; report the full cut
    auto cut3 = optimal_cut_for(k3, VertexSet::of(3, {0}), Rational(0, 1));
    CHECK(cut3.threshold_unreachable);
    CHECK(cut3.removed.count() == 2);

    // |N| already below the threshold
    auto two = EdgeColoredGraph::build(4, {{0, 1, 0}, {2, 3, 0}});
    auto cut4 = optimal_cut_for(two, VertexSet::of(4, {0, 1}), Rational(1, 1));
    CHECK(cut4.already_below); // no neighbors at all, 0 < (1/4)*2
    CHECK(cut4.removed.none());
}

TEST_CASE("cheapest-multiplicity-first is the exact inner minimization") {
    // U = {0,1}; vertex 2 has two edges into U, vertex 3 has one
    auto g = EdgeColoredGraph::build(4, {{0, 1, 0}, {0, 2, 1}, {1, 2, 2}, {1, 3, 1}});
    // threshold (1/2)/4 * 2 = 0.25: both neighbors must go; F is all 3 boundary edges
    auto cut = optimal_cut_for(g, VertexSet::of(4, {0, 1}), Rational(1, 2));
    CHECK(cut.achieved_neighborhood == 0);
    CHECK(cut.removed.count() == 3);
    // eps = 3 puts the threshold at (3/4)*2 = 1.5: drop the cheap neighbor (vertex 3)
    auto cut2 = optimal_cut_for(g, VertexSet::of(4, {0, 1}), Rational(3, 1));
    CHECK(cut2.achieved_neighborhood == 1);
    CHECK(cut2.removed.count() == 1);
    CHECK(cut2.removed.test(*g.edge_index(1, 3)));
}

TEST_CASE("falsifier: complete graphs expand, the bridge graph does not") {
    auto k8 = one_factorized_complete(8);
    CHECK_FALSE(falsify_robust_expander(k8).has_value());

    auto bridge = two_cliques_with_bridge(4);
    FalsifyOptions opts;
    opts.eps_grid.clear();
    for (int k = 0; k <= 100; ++k) opts.eps_grid.emplace_back(k, 100);
    auto viol = falsify_robust_expander(bridge, opts);
    REQUIRE(viol.has_value());
    CHECK(verify_violation(bridge, *viol).ok);
    CHECK(viol->witness_set.count() == 4);
    double eps = viol->epsilon.value();
    CHECK(eps >= 0.30);
    CHECK(eps <= 0.34);

    auto single = EdgeColoredGraph::build(2, {{0, 1, 0}});
    CHECK_FALSE(falsify_robust_expander(single).has_value());

    // the coarse grid {0, 1/4, 1/2, 3/4, 1} on K_8
    FalsifyOptions coarse;
    coarse.eps_grid = {Rational(0, 1), Rational(1, 4), Rational(1, 2), Rational(3, 4),
                       Rational(1, 1)};
    CHECK_FALSE(falsify_robust_expander(k8, coarse).has_value());
}

TEST_CASE("default grid misses the bridge window; the finer grid pins it") {
    // the two-K4 bridge violation lives in eps in [0.308, 1/3], strictly
    // between the k/20 grid points 0.30 and 0.35
    auto bridge = two_cliques_with_bridge(4);
    CHECK_FALSE(falsify_robust_expander(bridge).has_value());
}

TEST_CASE("violation verification rejects tampering") {
    auto bridge = two_cliques_with_bridge(4);
    FalsifyOptions opts;
    opts.eps_grid = {Rational(31, 100)};
    auto viol = falsify_robust_expander(bridge, opts);
    REQUIRE(viol.has_value());
    auto bad = *viol;
    bad.achieved_neighborhood += 1;
    CHECK_FALSE(verify_violation(bridge, bad).ok);
    auto bad2 = *viol;
    bad2.epsilon = Rational(99, 100); // |U| now exceeds n^(1-eps)
    CHECK_FALSE(verify_violation(bridge, bad2).ok);
}

TEST_CASE("certified log-maximal graphs have large min degree and robust expansion") {
    int tested = 0;
    for (uint64_t seed = 0; tested < 25 && seed < 60; ++seed) {
        auto g = random_proper_graph(6 + static_cast<int>(seed % 5), 0.5, seed);
        if (g.m() == 0) continue;
        auto rep = extract_log_maximal(g, ExtractMode::Exact);
        auto h = g.induced(VertexSet::from(g.n(), rep.vertices));
        CHECK(check_log_maximal(h));
        CHECK(min_degree_check(h).pass);
        CHECK_FALSE(falsify_robust_expander(h).has_value());
        ++tested;
    }
    CHECK(tested == 25);
}

TEST_CASE("falsifier is deterministic across thread counts") {
    auto bridge = two_cliques_with_bridge(4);
    FalsifyOptions a, b;
    a.eps_grid.clear();
    b.eps_grid.clear();
    for (int k = 0; k <= 100; ++k) {
        a.eps_grid.emplace_back(k, 100);
        b.eps_grid.emplace_back(k, 100);
    }
    a.threads = 1;
    b.threads = 8;
    auto va = falsify_robust_expander(bridge, a);
    auto vb = falsify_robust_expander(bridge, b);
    REQUIRE(va.has_value());
    REQUIRE(vb.has_value());
    CHECK(va->epsilon == vb->epsilon);
    CHECK(va->witness_set == vb->witness_set);
    CHECK(va->removed_edges == vb->removed_edges);
}
