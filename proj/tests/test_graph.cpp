#include <doctest.h>

#include "oracles.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/graph_io.hpp"

using namespace rainbow;
using namespace testsupport;

namespace {

EdgeColoredGraph cube_dimension_colored() {
    std::vector<Edge> edges;
    for (int x = 0; x < 8; ++x) {
        for (int d = 0; d < 3; ++d) {
            int y = x ^ (1 << d);
            if (x < y) edges.push_back({x, y, d});
        }
    }
    return EdgeColoredGraph::build(8, std::move(edges));
}

EdgeColoredGraph complete(int n) { return one_factorized_complete(n); }

} // namespace

TEST_CASE("rainbow triangle builds and has average degree 2") {
    auto g = EdgeColoredGraph::build(3, {{0, 1, 0}, {1, 2, 1}, {0, 2, 2}});
    CHECK(g.n() == 3);
    CHECK(g.m() == 3);
    CHECK(g.palette_size() == 3);
    CHECK(g.average_degree() == Rational(2, 1));
}

TEST_CASE("improper coloring is rejected with the offending vertex") {
    try {
        EdgeColoredGraph::build(3, {{0, 1, 0}, {1, 2, 0}});
        FAIL("expected ImproperColoring");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ImproperColoring);
        CHECK(std::string(e.what()).find("vertex 1") != std::string::npos);
        CHECK(std::string(e.what()).find("color 0") != std::string::npos);
    }
}

TEST_CASE("loops and duplicate pairs are rejected") {
    CHECK_THROWS_AS(EdgeColoredGraph::build(2, {{0, 0, 0}}), Error);
    try {
        EdgeColoredGraph::build(3, {{0, 1, 0}, {1, 0, 1}});
        FAIL("expected DuplicateEdge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DuplicateEdge);
    }
}

TEST_CASE("3-cube with dimension coloring: every vertex star checked by enumeration") {
    auto g = cube_dimension_colored();
    CHECK(g.n() == 8);
    CHECK(g.m() == 12);
    CHECK(g.palette_size() == 3);
    for (int v = 0; v < 8; ++v) {
        CHECK(g.degree(v) == 3);
        std::vector<char> seen(3, 0);
        for (const auto& inc : g.adj(v)) {
            CHECK(!seen[inc.color]);
            seen[inc.color] = 1;
            CHECK(inc.to == (v ^ (1 << inc.color)));
        }
    }
    CHECK(g.average_degree() == Rational(3, 1));
}

TEST_CASE("average degree examples") {
    CHECK(complete(4).average_degree() == Rational(3, 1));
    auto empty = EdgeColoredGraph::build(5, {});
    CHECK(empty.average_degree() == Rational(0, 1));
}

TEST_CASE("neighborhood on K_3 with and without removed edges") {
    auto g = EdgeColoredGraph::build(3, {{0, 1, 0}, {1, 2, 1}, {0, 2, 2}});
    auto U = VertexSet::of(3, {0});
    CHECK(g.neighborhood(U) == VertexSet::of(3, {1, 2}));
    EdgeSet F(g.m());
    F.set(*g.edge_index(0, 1));
    CHECK(g.neighborhood(U, F) == VertexSet::of(3, {2}));
    CHECK_THROWS_AS(g.neighborhood(VertexSet(3)), Error);
}

TEST_CASE("cube facet neighborhood is the opposite facet") {
    auto g = cube_dimension_colored();
    VertexSet facet(8);
    for (int x = 0; x < 8; ++x) {
        if (!(x & 4)) facet.set(x); // z = 0 facet
    }
    auto nbhd = g.neighborhood(facet);
    CHECK(nbhd.count() == 4);
    nbhd.for_each([](int v) { CHECK((v & 4) != 0); });
}

TEST_CASE("restricted degree examples and the handshake identity") {
    auto k3 = EdgeColoredGraph::build(3, {{0, 1, 0}, {1, 2, 1}, {0, 2, 2}});
    EdgeSet all(k3.m(), true);
    CHECK(k3.restricted_degree(0, all) == 2);
    CHECK(k3.restricted_degree(0, EdgeSet(k3.m())) == 0);

    auto star = EdgeColoredGraph::build(5, {{0, 1, 0}, {0, 2, 1}, {0, 3, 2}, {0, 4, 3}});
    EdgeSet three(star.m());
    three.set(0);
    three.set(1);
    three.set(2);
    CHECK(star.restricted_degree(0, three) == 3);

    for (uint64_t seed : {1ull, 2ull, 3ull}) {
        auto g = random_proper_graph(9, 0.5, seed);
        Rng rng(seed ^ 0xabc);
        EdgeSet F(g.m());
        for (int e = 0; e < g.m(); ++e) {
            if (rng.bernoulli(0.4)) F.set(e);
        }
        long long total = 0;
        for (int v = 0; v < g.n(); ++v) total += g.restricted_degree(v, F);
        CHECK(total == 2ll * F.count());
    }
}

TEST_CASE("neighborhood properties: disjoint from U, antitone in F") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        auto g = random_proper_graph(8, 0.5, seed);
        if (g.m() == 0) continue;
        Rng rng(seed ^ 0x5f);
        VertexSet U(g.n());
        U.set(rng.below(g.n()));
        if (rng.bernoulli(0.5)) U.set(rng.below(g.n()));
        EdgeSet F1(g.m()), F2(g.m());
        for (int e = 0; e < g.m(); ++e) {
            if (rng.bernoulli(0.3)) F1.set(e);
        }
        F2 = F1;
        for (int e = 0; e < g.m(); ++e) {
            if (rng.bernoulli(0.2)) F2.set(e);
        }
        auto n1 = g.neighborhood(U, F1);
        auto n2 = g.neighborhood(U, F2);
        CHECK(!n1.intersects(U));
        CHECK(n2.subset_of(n1)); // F1 subset of F2 shrinks the neighborhood
    }
}

TEST_CASE("text and JSON round trips preserve the graph and revalidate") {
    auto g = cube_dimension_colored();
    auto from_text = graph_from_text(graph_to_text(g));
    CHECK(from_text.n() == g.n());
    CHECK(from_text.edges().size() == g.edges().size());
    from_text.validate();

    auto from_json = graph_from_json(graph_to_json(g));
    CHECK(from_json.m() == g.m());
    CHECK(from_json.palette_size() == g.palette_size());
    CHECK(graph_to_text(from_json) == graph_to_text(g));
}

TEST_CASE("loading enforces the proper-coloring invariant") {
    std::string bad = "ecg 3 1\ne 0 1 0\ne 1 2 0\n";
    try {
        graph_from_text(bad);
        FAIL("expected ImproperColoring");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ImproperColoring);
    }
    std::string wrong_palette = "ecg 3 5\ne 0 1 0\ne 1 2 1\n";
    try {
        graph_from_text(wrong_palette);
        FAIL("expected FormatError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FormatError);
    }
}

TEST_CASE("induced subgraph relabels and keeps colors") {
    auto g = cube_dimension_colored();
    VertexSet face(8);
    for (int x : {0, 1, 2, 3}) face.set(x);
    std::vector<int> old_ids;
    auto h = g.induced(face, &old_ids);
    CHECK(h.n() == 4);
    CHECK(h.m() == 4); // a 4-cycle: the z = 0 face
    CHECK(old_ids == std::vector<int>{0, 1, 2, 3});
}
