#pragma once

// Brute-force oracles and instance builders for the test suites. These stay
// independent of the library's search machinery: paths are enumerated as
// vertex sequences, never as (vertex, color-mask) states.

#include <algorithm>
#include <functional>
#include <vector>

#include "rainbow/constructions.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/group.hpp"
#include "rainbow/rng.hpp"

namespace testsupport {

using namespace rainbow;

// simple-cycle enumeration with a rainbow check
inline bool brute_has_rainbow_cycle(const EdgeColoredGraph& g, int max_len) {
    for (int start = 0; start < g.n(); ++start) {
        std::vector<int> path{start};
        std::vector<int> colors;
        std::vector<char> on_path(g.n(), 0);
        on_path[start] = 1;
        bool found = false;
        std::function<void()> dfs = [&] {
            if (found) return;
            int v = path.back();
            for (const auto& inc : g.adj(v)) {
                if (found) return;
                if (std::find(colors.begin(), colors.end(), inc.color) != colors.end()) continue;
                if (inc.to == start && static_cast<int>(path.size()) >= 3) {
                    found = true;
                    return;
                }
                if (on_path[inc.to] || inc.to < start) continue; // cycles rooted at their minimum
                if (static_cast<int>(path.size()) >= max_len) continue;
                on_path[inc.to] = 1;
                path.push_back(inc.to);
                colors.push_back(inc.color);
                dfs();
                colors.pop_back();
                path.pop_back();
                on_path[inc.to] = 0;
            }
        };
        dfs();
        if (found) return true;
    }
    return false;
}

// reachable-by-rainbow-path set via simple-path DFS
inline VertexSet brute_rp(const EdgeColoredGraph& g, int x, const ColorSet& allowed,
                          const VertexSet& phi0, const ColorSet& phi1) {
    VertexSet reached(g.n());
    reached.set(x);
    std::vector<char> on_path(g.n(), 0);
    std::vector<char> color_used(std::max(1, g.color_universe()), 0);
    on_path[x] = 1;
    std::function<void(int)> dfs = [&](int v) {
        for (const auto& inc : g.adj(v)) {
            if (on_path[inc.to] || phi0.test(inc.to)) continue;
            if (inc.color >= allowed.universe() || !allowed.test(inc.color)) continue;
            if (inc.color < phi1.universe() && phi1.test(inc.color)) continue;
            if (color_used[inc.color]) continue;
            reached.set(inc.to);
            on_path[inc.to] = 1;
            color_used[inc.color] = 1;
            dfs(inc.to);
            color_used[inc.color] = 0;
            on_path[inc.to] = 0;
        }
    };
    dfs(x);
    return reached;
}

// best d(W)/log|W| over induced subsets of >= 2 vertices
inline double brute_best_ratio(const EdgeColoredGraph& g) {
    double best = -1.0;
    for (uint32_t mask = 1; mask < (1u << g.n()); ++mask) {
        int size = __builtin_popcount(mask);
        if (size < 2) continue;
        int e = 0;
        for (const auto& edge : g.edges()) {
            if ((mask >> edge.u & 1) && (mask >> edge.v & 1)) ++e;
        }
        double ratio = (2.0 * e / size) / std::log(static_cast<double>(size));
        best = std::max(best, ratio);
    }
    return best;
}

// all pair sums (repeats allowed) distinct
inline bool is_sidon_order2(const FiniteGroup& group, const std::vector<int>& a) {
    std::vector<char> seen(group.order(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = i; j < a.size(); ++j) {
            int s = group.op(a[i], a[j]);
            if (seen[s]) return false;
            seen[s] = 1;
        }
    }
    return true;
}

// dissociation via dynamic programming over reachable signed sums of
// distinct elements (abelian only)
inline bool brute_dissociated_abelian(const FiniteGroup& group, const std::vector<int>& s) {
    std::vector<char> reach(group.order(), 0); // sums of non-empty signed subsets
    for (int e : s) {
        std::vector<char> next = reach;
        auto add = [&](int base, int g) { next[group.op(base, g)] = 1; };
        for (int x = 0; x < group.order(); ++x) {
            if (reach[x]) {
                add(x, e);
                add(x, group.inv(e));
            }
        }
        add(group.identity(), e);
        add(group.identity(), group.inv(e));
        reach = std::move(next);
    }
    return !reach[group.identity()];
}

// Erdos-Renyi graph with a greedy proper coloring
inline EdgeColoredGraph random_proper_graph(int n, double p, uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.bernoulli(p)) pairs.emplace_back(u, v);
        }
    }
    std::vector<std::vector<char>> used(n);
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) {
        int c = 0;
        while ((c < static_cast<int>(used[u].size()) && used[u][c]) ||
               (c < static_cast<int>(used[v].size()) && used[v][c]))
            ++c;
        for (int w : {u, v}) {
            if (static_cast<int>(used[w].size()) <= c) used[w].resize(c + 1, 0);
            used[w][c] = 1;
        }
        edges.push_back({u, v, c});
    }
    return EdgeColoredGraph::build(n, std::move(edges));
}

// round-robin 1-factorization of K_{2m}: colors are perfect matchings
inline EdgeColoredGraph one_factorized_complete(int vertices) {
    int m = vertices - 1; // rounds
    std::vector<Edge> edges;
    for (int r = 0; r < m; ++r) {
        edges.push_back({vertices - 1, r, r});
        for (int i = 1; i <= (vertices - 2) / 2; ++i) {
            int a = (r + i) % m;
            int b = (r - i + m) % m;
            edges.push_back({std::min(a, b), std::max(a, b), r});
        }
    }
    return EdgeColoredGraph::build(vertices, std::move(edges));
}

// two complete graphs joined by a single bridge, properly colored
inline EdgeColoredGraph two_cliques_with_bridge(int clique) {
    EdgeColoredGraph half = one_factorized_complete(clique);
    std::vector<Edge> edges;
    for (const auto& e : half.edges()) {
        edges.push_back(e);
        edges.push_back({e.u + clique, e.v + clique, e.color});
    }
    edges.push_back({0, clique, half.palette_size()});
    return EdgeColoredGraph::build(2 * clique, std::move(edges));
}

// symmetric group S3 as an operation table (composition of permutations)
inline std::vector<std::vector<int>> s3_table() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    int n = static_cast<int>(perms.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            std::array<int, 3> c{};
            for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
            table[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    }
    return table;
}

} // namespace testsupport
