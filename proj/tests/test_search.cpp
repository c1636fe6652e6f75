#include <doctest.h>

#include "oracles.hpp"
#include "rainbow/search.hpp"

using namespace rainbow;
using namespace testsupport;

namespace {

EdgeColoredGraph rainbow_triangle() {
    return EdgeColoredGraph::build(3, {{0, 1, 0}, {1, 2, 1}, {0, 2, 2}});
}

EdgeColoredGraph cube() { return cayley_sum_graph(FiniteGroup::vector_f2(3), {1, 2, 4}); }

SearchBudget exact_budget(uint64_t seed = 0) {
    SearchBudget b;
    b.seed = seed;
    return b;
}

} // namespace

TEST_CASE("rainbow path: direct edge, cube diagonal, parity obstruction") {
    auto tri = rainbow_triangle();
    auto r = rainbow_path(tri, 0, 1, tri.used_colors(), tri.empty_vertex_set(), 2, exact_budget());
    REQUIRE(r.outcome == Outcome::Found);
    CHECK(r.path->length() == 1);

    auto q3 = cube();
    auto diag =
        rainbow_path(q3, 0, 7, q3.used_colors(), q3.empty_vertex_set(), 3, exact_budget());
    REQUIRE(diag.outcome == Outcome::Found);
    CHECK(diag.path->length() == 3);
    CHECK(validate_path(q3, *diag.path).ok);

    ColorSet only_one(q3.color_universe());
    only_one.set(1);
    auto none = rainbow_path(q3, 0, 6, only_one, q3.empty_vertex_set(), 8, exact_budget());
    CHECK(none.outcome == Outcome::Absent);
}

TEST_CASE("the cube diagonal has exactly six rainbow geodesics") {
    // brute count of simple rainbow 0-7 paths of length 3: one per dimension
    // ordering, enumerated independently of the searcher
    auto q3 = cube();
    int count = 0;
    int dims[3] = {1, 2, 4};
    int perm[3] = {0, 1, 2};
    std::sort(perm, perm + 3);
    do {
        int v = 0;
        bool ok = true;
        std::vector<int> used;
        for (int i = 0; i < 3 && ok; ++i) {
            int w = v ^ dims[perm[i]];
            auto e = q3.edge_index(v, w);
            ok = e.has_value() &&
                 std::find(used.begin(), used.end(), q3.edges()[*e].color) == used.end();
            if (ok) used.push_back(q3.edges()[*e].color);
            v = w;
        }
        if (ok && v == 7) ++count;
    } while (std::next_permutation(perm, perm + 3));
    CHECK(count == 6);
}

TEST_CASE("rp exact reports incompleteness when the state budget runs out") {
    auto k16 = one_factorized_complete(16);
    SearchBudget tiny;
    tiny.max_nodes = 3;
    auto rp = rp_set(k16, 0, k16.used_colors(), k16.empty_vertex_set(), k16.empty_color_set(),
                     tiny);
    CHECK_FALSE(rp.complete);
    CHECK(rp.members.test(0));
}

TEST_CASE("hub rules: given hubs are honored, random hubs are seed-stable") {
    auto k16 = one_factorized_complete(16);
    SubdivisionOptions given;
    given.hub_rule = HubRule::Given;
    given.given_hubs = {2, 5, 11, 14};
    auto res = find_subdivision(k16, 4, exact_budget(1), given);
    REQUIRE(res.outcome == Outcome::Found);
    CHECK(res.certificate->hubs == std::vector<int>{2, 5, 11, 14});
    CHECK(validate_certificate(*res.certificate, k16).ok);

    SubdivisionOptions bad;
    bad.hub_rule = HubRule::Given;
    bad.given_hubs = {1, 1, 2, 3};
    CHECK_THROWS_AS(find_subdivision(k16, 4, exact_budget(1), bad), Error);

    SubdivisionOptions rnd;
    rnd.hub_rule = HubRule::Random;
    auto r1 = find_subdivision(k16, 3, exact_budget(4), rnd);
    auto r2 = find_subdivision(k16, 3, exact_budget(4), rnd);
    REQUIRE(r1.outcome == Outcome::Found);
    REQUIRE(r2.outcome == Outcome::Found);
    CHECK(r1.certificate->hubs == r2.certificate->hubs);
}

TEST_CASE("rainbow path budget exhaustion is reported, not misread as absence") {
    auto k16 = one_factorized_complete(16);
    SearchBudget tiny;
    tiny.max_nodes = 2;
    auto r = rainbow_path(k16, 0, 9, k16.used_colors(), k16.empty_vertex_set(), 15, tiny);
    CHECK((r.outcome == Outcome::Unknown || r.outcome == Outcome::Found));
}

TEST_CASE("rp set basics: empty palette, triangle, cube face") {
    auto tri = rainbow_triangle();
    auto empty = rp_set(tri, 0, tri.empty_color_set(), tri.empty_vertex_set(),
                        tri.empty_color_set(), exact_budget());
    CHECK(empty.members == VertexSet::of(3, {0}));
    CHECK(empty.complete);

    auto all = rp_set(tri, 0, tri.used_colors(), tri.empty_vertex_set(), tri.empty_color_set(),
                      exact_budget());
    CHECK(all.members.count() == 3);

    auto q3 = cube();
    ColorSet two_dims(q3.color_universe());
    two_dims.set(1);
    two_dims.set(2);
    auto face = rp_set(q3, 0, two_dims, q3.empty_vertex_set(), q3.empty_color_set(),
                       exact_budget());
    CHECK(face.members == VertexSet::of(8, {0, 1, 2, 3}));
    CHECK(face.members == brute_rp(q3, 0, two_dims, q3.empty_vertex_set(), q3.empty_color_set()));
}

TEST_CASE("exact rp agrees with the simple-path oracle; witness is a subset") {
    int cases = 0;
    for (uint64_t seed = 0; cases < 60 && seed < 200; ++seed) {
        auto g = random_proper_graph(8, 0.5, seed);
        if (g.m() == 0) continue;
        Rng rng(seed ^ 0x11);
        int x = rng.below(g.n());
        ColorSet a(g.color_universe());
        g.used_colors().for_each([&](int c) {
            if (rng.bernoulli(0.6)) a.set(c);
        });
        VertexSet phi0(g.n());
        for (int v = 0; v < g.n(); ++v) {
            if (v != x && rng.bernoulli(0.15)) phi0.set(v);
        }
        ColorSet phi1(g.color_universe());
        g.used_colors().for_each([&](int c) {
            if (rng.bernoulli(0.1)) phi1.set(c);
        });

        auto exact = rp_set(g, x, a, phi0, phi1, exact_budget());
        REQUIRE(exact.complete);
        ColorSet allowed = a;
        allowed.subtract(phi1);
        CHECK(exact.members == brute_rp(g, x, allowed, phi0, phi1));

        SearchBudget wit;
        wit.mode = SearchMode::Witness;
        auto witness = rp_set(g, x, a, phi0, phi1, wit);
        CHECK(witness.members.subset_of(exact.members));
        witness.members.for_each([&](int v) {
            REQUIRE(witness.witness[v].has_value());
            if (v != x) CHECK(validate_path(g, *witness.witness[v]).ok);
        });
        ++cases;
    }
    CHECK(cases == 60);
}

TEST_CASE("rp monotonicity in the color set and in the forbidden set") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        auto g = random_proper_graph(8, 0.5, seed);
        if (g.m() == 0) continue;
        Rng rng(seed ^ 0x77);
        int x = rng.below(g.n());
        ColorSet a(g.color_universe()), a2(g.color_universe());
        g.used_colors().for_each([&](int c) {
            bool in_small = rng.bernoulli(0.4);
            if (in_small) a.set(c);
            if (in_small || rng.bernoulli(0.4)) a2.set(c);
        });
        VertexSet phi0(g.n()), phi0_big(g.n());
        for (int v = 0; v < g.n(); ++v) {
            if (v == x) continue;
            bool small = rng.bernoulli(0.1);
            if (small) phi0.set(v);
            if (small || rng.bernoulli(0.15)) phi0_big.set(v);
        }
        auto none = g.empty_color_set();
        auto small = rp_set(g, x, a, phi0, none, exact_budget());
        auto large = rp_set(g, x, a2, phi0, none, exact_budget());
        CHECK(small.members.subset_of(large.members));
        auto more_forbidden = rp_set(g, x, a, phi0_big, none, exact_budget());
        CHECK(more_forbidden.members.subset_of(small.members));
    }
}

TEST_CASE("rainbow cycles: triangle found, cube proven free, Sidon instance proven free") {
    auto tri = rainbow_triangle();
    auto r = find_rainbow_cycle(tri, 3, exact_budget());
    REQUIRE(r.outcome == Outcome::Found);
    CHECK(r.cycle->length() == 3);
    CHECK(validate_path(tri, *r.cycle).ok);

    CHECK(find_rainbow_cycle(cube(), 8, exact_budget()).outcome == Outcome::Absent);

    auto sid = sidon_graph(FiniteGroup::cyclic(15), {0, 1, 3, 7});
    CHECK(find_rainbow_cycle(sid.graph, 4, exact_budget()).outcome == Outcome::Absent);
}

TEST_CASE("cycle search agrees with the simple-cycle oracle") {
    int cases = 0;
    for (uint64_t seed = 0; cases < 40 && seed < 200; ++seed) {
        auto g = random_proper_graph(8, 0.45, seed);
        if (g.m() == 0) continue;
        int cap = std::max(3, g.palette_size());
        auto res = find_rainbow_cycle(g, cap, exact_budget());
        bool oracle = brute_has_rainbow_cycle(g, std::min(cap, g.palette_size()));
        if (res.outcome == Outcome::Found) {
            CHECK(oracle);
            CHECK(validate_path(g, *res.cycle).ok);
            CHECK(res.cycle->length() <= g.palette_size());
        } else {
            REQUIRE(res.outcome == Outcome::Absent);
            CHECK_FALSE(oracle);
        }
        ++cases;
    }
    CHECK(cases == 40);
}

TEST_CASE("subdivision in the rainbow-colored K_4") {
    auto k4 = one_factorized_complete(4); // proper 3-coloring by perfect matchings
    auto res = find_subdivision(k4, 3, exact_budget(5));
    REQUIRE(res.outcome == Outcome::Found);
    auto check = validate_certificate(*res.certificate, k4);
    CHECK(check.ok);
    for (const auto& p : res.certificate->paths) CHECK(p.length() <= 2);
}

TEST_CASE("t = 2 degenerates to a single rainbow path") {
    auto k4 = one_factorized_complete(4);
    auto res = find_subdivision(k4, 2, exact_budget(1));
    REQUIRE(res.outcome == Outcome::Found);
    CHECK(res.certificate->paths.size() == 1);
    CHECK(validate_certificate(*res.certificate, k4).ok);
}

TEST_CASE("subdivisions of the 1-factorized K_16 across seeds") {
    auto k16 = one_factorized_complete(16);
    for (uint64_t seed : {0ull, 1ull, 2ull}) {
        auto res = find_subdivision(k16, 4, exact_budget(seed));
        REQUIRE(res.outcome == Outcome::Found);
        CHECK(validate_certificate(*res.certificate, k16).ok);
    }
}

TEST_CASE("certificate validator failure reasons") {
    auto k16 = one_factorized_complete(16);
    auto res = find_subdivision(k16, 3, exact_budget(9));
    REQUIRE(res.outcome == Outcome::Found);
    auto cert = *res.certificate;

    auto reuse = cert;
    reuse.paths[1].colors = reuse.paths[0].colors; // also breaks adjacency in general
    auto v1 = validate_certificate(reuse, k16);
    CHECK_FALSE(v1.ok);

    // a path detouring through another hub
    auto hubby = cert;
    int a = hubby.hubs[0], b = hubby.hubs[1], c = hubby.hubs[2];
    hubby.paths[0] = RainbowPath{{a, c, b},
                                 {k16.edges()[*k16.edge_index(a, c)].color,
                                  k16.edges()[*k16.edge_index(c, b)].color},
                                 false};
    auto v2 = validate_certificate(hubby, k16);
    CHECK_FALSE(v2.ok);
    CHECK(v2.reason == "HubViolation");

    auto missing = cert;
    missing.paths.pop_back();
    CHECK(validate_certificate(missing, k16).reason == "PairMissing");

    auto dup_color = cert;
    // recolor claim on path 0 to a color used by path 1: caught as NotAPath
    // (edge color mismatch) or ColorReuse depending on overlap; both reject
    dup_color.paths[0].colors[0] = dup_color.paths[1].colors[0];
    CHECK_FALSE(validate_certificate(dup_color, k16).ok);
}

TEST_CASE("explicit ColorReuse: two valid paths sharing a color") {
    // path 0-1 (color 0) and path 2-3 (color 0) in a 2K_2 with hubs 0,1,2,3
    auto g = EdgeColoredGraph::build(4, {{0, 1, 0}, {2, 3, 0}, {1, 2, 1}, {0, 3, 2}, {0, 2, 3}, {1, 3, 4}});
    SubdivisionCertificate cert;
    cert.t = 2;
    cert.hubs = {0, 1};
    cert.length_bound = 3;
    cert.paths.push_back(RainbowPath{{0, 2, 1}, {3, 1}, false});
    CHECK(validate_certificate(cert, g).ok);
    cert.paths[0] = RainbowPath{{0, 3, 1}, {2, 4}, false};
    CHECK(validate_certificate(cert, g).ok);
    // now a certificate whose two paths reuse color 0
    SubdivisionCertificate c3;
    c3.t = 3;
    c3.hubs = {0, 1, 3};
    c3.length_bound = 3;
    c3.paths.push_back(RainbowPath{{0, 1}, {0}, false});        // pair (0,1)
    c3.paths.push_back(RainbowPath{{0, 2, 3}, {3, 0}, false});  // pair (0,3) reuses color 0
    c3.paths.push_back(RainbowPath{{1, 3}, {4}, false});        // pair (1,3)
    auto v = validate_certificate(c3, g);
    CHECK_FALSE(v.ok);
    CHECK(v.reason == "ColorReuse");
}

TEST_CASE("found subdivisions always revalidate and respect the length bound") {
    int found = 0;
    for (uint64_t seed = 0; seed < 30; ++seed) {
        auto g = random_proper_graph(12, 0.6, seed);
        if (g.m() < 10) continue;
        SubdivisionOptions opts;
        opts.length_bound = 6;
        auto res = find_subdivision(g, 3, exact_budget(seed), opts);
        if (res.outcome != Outcome::Found) continue;
        ++found;
        auto check = validate_certificate(*res.certificate, g);
        CHECK(check.ok);
        for (const auto& p : res.certificate->paths) CHECK(p.length() <= 6);
    }
    CHECK(found >= 10);
}

TEST_CASE("subdivision search is deterministic across thread counts") {
    auto k16 = one_factorized_complete(16);
    SubdivisionOptions one, eight;
    one.threads = 1;
    eight.threads = 8;
    auto a = find_subdivision(k16, 4, exact_budget(3), one);
    auto b = find_subdivision(k16, 4, exact_budget(3), eight);
    REQUIRE(a.outcome == Outcome::Found);
    REQUIRE(b.outcome == Outcome::Found);
    REQUIRE(a.certificate->paths.size() == b.certificate->paths.size());
    for (size_t i = 0; i < a.certificate->paths.size(); ++i) {
        CHECK(a.certificate->paths[i].vertices == b.certificate->paths[i].vertices);
        CHECK(a.certificate->paths[i].colors == b.certificate->paths[i].colors);
    }
}

TEST_CASE("default length bound grows with n and stays at least 2") {
    CHECK(default_length_bound(4, 4.0) >= 2);
    CHECK(default_length_bound(16, 4.0) == 12);
    CHECK(default_length_bound(1000, 4.0) > default_length_bound(16, 4.0));
}
