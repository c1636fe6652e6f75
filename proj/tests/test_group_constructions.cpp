#include <doctest.h>

#include "oracles.hpp"
#include "rainbow/constructions.hpp"

using namespace rainbow;
using namespace testsupport;

TEST_CASE("group kinds: ops, inverses, abelian flags") {
    auto z5 = FiniteGroup::cyclic(5);
    CHECK(z5.op(3, 4) == 2);
    CHECK(z5.inv(2) == 3);
    CHECK(z5.abelian());

    auto f8 = FiniteGroup::vector_f2(3);
    CHECK(f8.order() == 8);
    CHECK(f8.op(5, 3) == 6);
    CHECK(f8.inv(5) == 5);

    auto prod = FiniteGroup::product({3, 4});
    CHECK(prod.order() == 12);
    // (1,0) + (2,0) = (0,0); encoding is mixed radix with Z3 first
    CHECK(prod.op(1, 2) == 0);
    CHECK(prod.abelian());

    auto s3 = FiniteGroup::from_table(s3_table());
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.abelian());
    for (int a = 0; a < 6; ++a) CHECK(s3.op(a, s3.inv(a)) == s3.identity());
}

TEST_CASE("broken tables are rejected") {
    // constant table: no identity
    std::vector<std::vector<int>> bad(3, std::vector<int>(3, 0));
    CHECK_THROWS_AS(FiniteGroup::from_table(bad), Error);
    // swap one entry of a valid table to break associativity or inverses
    auto t = s3_table();
    std::swap(t[1][1], t[1][2]);
    CHECK_THROWS_AS(FiniteGroup::from_table(t), Error);
}

TEST_CASE("group spec parsing") {
    CHECK(parse_group_spec("Z:15").order() == 15);
    CHECK(parse_group_spec("F2:4").order() == 16);
    CHECK(parse_group_spec("prod:Z3xZ4").order() == 12);
    CHECK_THROWS_AS(parse_group_spec("nope"), Error);
    auto f2 = parse_group_spec("F2:3");
    CHECK(parse_element(f2, "e3") == 4);
    CHECK(parse_element_list(f2, "e1,e2,e3") == std::vector<int>{1, 2, 4});
}

TEST_CASE("Cayley sum graph of F2^3 is the 3-cube, compared edge by edge") {
    auto g = cayley_sum_graph(FiniteGroup::vector_f2(3), {1, 2, 4});
    CHECK(g.n() == 8);
    CHECK(g.m() == 12);
    CHECK(g.palette_size() == 3);
    for (const auto& e : g.edges()) {
        CHECK(__builtin_popcount(e.u ^ e.v) == 1);
        CHECK(e.color == (e.u ^ e.v));
    }
    for (int x = 0; x < 8; ++x) {
        for (int d : {1, 2, 4}) CHECK(g.edge_index(x, x ^ d).has_value());
    }
}

TEST_CASE("Cayley sum graph over Z_5 with S={1} skips the loop at 3") {
    auto g = cayley_sum_graph(FiniteGroup::cyclic(5), {1});
    CHECK(g.m() == 2);
    CHECK(g.edge_index(0, 1).has_value());
    CHECK(g.edge_index(2, 4).has_value());
}

TEST_CASE("Cayley sum graph over Z_2 is a single colored edge") {
    auto g = cayley_sum_graph(FiniteGroup::cyclic(2), {1});
    CHECK(g.m() == 1);
    CHECK(g.edges()[0].color == 1);
}

TEST_CASE("Cayley construction errors") {
    CHECK_THROWS_AS(cayley_sum_graph(FiniteGroup::from_table(s3_table()), {1}), Error);
    try {
        cayley_sum_graph(FiniteGroup::cyclic(5), {});
        FAIL("expected EmptyConnectionSet");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptyConnectionSet);
    }
}

TEST_CASE("the lower-bound family: 2^k vertices, k 2^(k-1) edges, degree log2 n") {
    for (int k : {3, 4, 5}) {
        std::vector<int> basis;
        for (int i = 0; i < k; ++i) basis.push_back(1 << i);
        auto g = cayley_sum_graph(FiniteGroup::vector_f2(k), basis);
        CHECK(g.n() == (1 << k));
        CHECK(g.m() == k * (1 << (k - 1)));
        CHECK(g.average_degree() == Rational(k, 1));
    }
}

TEST_CASE("Sidon construction: matching, regularity, and the Sidon instance") {
    auto match = sidon_graph(FiniteGroup::cyclic(3), {0});
    CHECK(match.graph.m() == 3);
    CHECK(match.graph.palette_size() == 1);

    auto two = sidon_graph(FiniteGroup::cyclic(5), {1, 2});
    CHECK(two.graph.m() == 10);
    for (int v = 0; v < two.graph.n(); ++v) CHECK(two.graph.degree(v) == 2);

    auto z15 = FiniteGroup::cyclic(15);
    std::vector<int> perfect{0, 1, 3, 7};
    CHECK(is_sidon_order2(z15, perfect));
    auto sg = sidon_graph(z15, perfect);
    CHECK(sg.graph.m() == 60);
    for (int v = 0; v < 30; ++v) CHECK(sg.graph.degree(v) == 4);
    CHECK_FALSE(brute_has_rainbow_cycle(sg.graph, 4));
}

TEST_CASE("circulant bipartite construction: regularity and counts") {
    auto one = bhg_graph(4, {1});
    CHECK(one.graph.m() == 4);
    for (int v = 0; v < 8; ++v) CHECK(one.graph.degree(v) == 1);

    CHECK(bhg_graph(5, {1, 2}).graph.m() == 10);
    auto big = bhg_graph(12, {1, 2, 3, 4});
    CHECK(big.graph.m() == 48);
    for (int v = 0; v < big.graph.n(); ++v) CHECK(big.graph.degree(v) == 4);
}

TEST_CASE("doubling construction: parts, counts, products") {
    auto zs = FiniteGroup::cyclic(8);
    auto small = doubling_graph(zs, {0, 1}, {1});
    CHECK(small.graph.m() == 2);
    CHECK(small.left == std::vector<int>{0, 1});
    CHECK(small.right == std::vector<int>{1, 2});
    for (const auto& e : small.graph.edges()) CHECK(e.color == 1);

    auto mid = doubling_graph(zs, {0, 1, 2, 3}, {1, 2});
    CHECK(mid.graph.m() == 8);
    CHECK(mid.right.size() == 5); // A*S = {1,2,3,4,5}

    auto big = doubling_graph(FiniteGroup::cyclic(16), {0, 1, 2, 3, 4, 5, 6, 7}, {1, 2, 3});
    CHECK(big.graph.m() == 24);
}

TEST_CASE("doubling works over a nonabelian group") {
    auto s3 = FiniteGroup::from_table(s3_table());
    std::vector<int> all{0, 1, 2, 3, 4, 5};
    auto g = doubling_graph(s3, all, {1, 2});
    CHECK(g.graph.m() == 12);
    g.graph.validate();
}

TEST_CASE("convolution construction examples") {
    auto a = convolution_graph(FiniteGroup::cyclic(4), {0, 1}, {0, 1}, {0});
    CHECK(a.graph.m() == 2);

    auto b = convolution_graph(FiniteGroup::cyclic(5), {0, 1, 2}, {0, 1}, {1});
    CHECK(b.graph.m() == 2); // (1,0) and (2,1)
    for (const auto& e : b.graph.edges()) CHECK(e.color == 1);

    std::vector<int> z6{0, 1, 2, 3, 4, 5};
    auto c = convolution_graph(FiniteGroup::cyclic(6), z6, z6, {2});
    CHECK(c.graph.m() == 6);
    for (int v = 0; v < c.graph.n(); ++v) CHECK(c.graph.degree(v) == 1);
}

TEST_CASE("every construction's edge color matches its defining group equation") {
    auto z15 = FiniteGroup::cyclic(15);
    auto cay = cayley_sum_graph(z15, {1, 2, 6});
    for (const auto& e : cay.edges()) CHECK(e.color == z15.op(e.u, e.v));

    auto sid = sidon_graph(z15, {0, 1, 3, 7});
    for (const auto& e : sid.graph.edges()) {
        int x = sid.element_of(std::min(e.u, e.v));
        int y = sid.element_of(std::max(e.u, e.v));
        CHECK(e.color == z15.sub(x, y));
    }

    auto zs = FiniteGroup::cyclic(9);
    auto bh = bhg_graph(9, {1, 4});
    for (const auto& e : bh.graph.edges()) {
        int s = bh.element_of(std::min(e.u, e.v));
        int y = bh.element_of(std::max(e.u, e.v));
        CHECK(e.color == zs.sub(y, s));
    }

    auto dbl = doubling_graph(zs, {0, 1, 2}, {1, 2});
    for (const auto& e : dbl.graph.edges()) {
        int a = dbl.element_of(std::min(e.u, e.v));
        int b = dbl.element_of(std::max(e.u, e.v));
        CHECK(e.color == zs.op(zs.inv(a), b)); // b = a * s
    }

    auto conv = convolution_graph(zs, {0, 2, 4}, {1, 3}, {1, 3});
    for (const auto& e : conv.graph.edges()) {
        int a = conv.element_of(std::min(e.u, e.v));
        int b = conv.element_of(std::max(e.u, e.v));
        CHECK(e.color == zs.sub(a, b));
    }
}
