#include "rainbow/expander.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "rainbow/parallel.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

namespace {

constexpr long double kTol = 1e-12L;

bool leq_tol(long double a, long double b) {
    return a <= b + kTol * std::max({1.0L, std::fabs(a), std::fabs(b)});
}

// d(H1)/log n1 <= d(H2)/log n2, cross-multiplied: e1*n2*log n1'... with
// d = 2e/n the condition is e1*n2*log(n2) <= e2*n1*log(n1) — wait, careful:
// (2 e1/n1)/log n1 <= (2 e2/n2)/log n2  <=>  e1*n2*log n2 <= e2*n1*log n1.
bool ratio_leq(long long e1, int n1, long long e2, int n2) {
    long double lhs = static_cast<long double>(e1) * n2 * std::log(static_cast<long double>(n2));
    long double rhs = static_cast<long double>(e2) * n1 * std::log(static_cast<long double>(n1));
    return leq_tol(lhs, rhs);
}

int edges_inside_mask(const EdgeColoredGraph& g, uint32_t mask) {
    int c = 0;
    for (const auto& e : g.edges()) {
        if ((mask >> e.u & 1) && (mask >> e.v & 1)) ++c;
    }
    return c;
}

double subset_ratio(int edge_count, int size) {
    return (2.0 * edge_count / size) / std::log(static_cast<double>(size));
}

// |U| <= n^(1-eps), i.e. den*log|U| <= (den-num)*log n.
bool size_admissible(int u_size, int n, const Rational& eps) {
    if (u_size <= 1) return true;
    long double lhs = static_cast<long double>(eps.den) * std::log(static_cast<long double>(u_size));
    long double rhs = static_cast<long double>(eps.den - eps.num) * std::log(static_cast<long double>(n));
    return leq_tol(lhs, rhs);
}

struct Boundary {
    std::vector<int> neighbors;      // sorted by (multiplicity, id)
    std::vector<int> multiplicity;   // parallel to neighbors
    std::vector<long long> prefix;   // prefix[r] = edges removed by cutting r cheapest
};

Boundary boundary_of(const EdgeColoredGraph& g, const VertexSet& U) {
    std::vector<int> mult(g.n(), 0);
    U.for_each([&](int u) {
        for (const auto& inc : g.adj(u)) {
            if (!U.test(inc.to)) ++mult[inc.to];
        }
    });
    Boundary b;
    for (int v = 0; v < g.n(); ++v) {
        if (mult[v] > 0) b.neighbors.push_back(v);
    }
    std::sort(b.neighbors.begin(), b.neighbors.end(),
              [&](int a, int c) { return mult[a] != mult[c] ? mult[a] < mult[c] : a < c; });
    b.multiplicity.reserve(b.neighbors.size());
    b.prefix.assign(b.neighbors.size() + 1, 0);
    for (size_t i = 0; i < b.neighbors.size(); ++i) {
        b.multiplicity.push_back(mult[b.neighbors[i]]);
        b.prefix[i + 1] = b.prefix[i] + mult[b.neighbors[i]];
    }
    return b;
}

// Largest integer below (eps/4)|U|; -1 when the threshold is <= 0.
long long below_threshold_max(const Rational& eps, int u_size) {
    long long q = eps.num * static_cast<long long>(u_size);
    long long r = 4 * eps.den;
    if (q <= 0) return -1;
    return (q - 1) / r;
}

EdgeSet edges_to_neighbors(const EdgeColoredGraph& g, const VertexSet& U,
                           const std::vector<int>& removed) {
    EdgeSet F(g.m());
    for (int v : removed) {
        for (const auto& inc : g.adj(v)) {
            if (U.test(inc.to)) F.set(inc.edge);
        }
    }
    return F;
}

} // namespace

LogMaximalReport extract_log_maximal(const EdgeColoredGraph& g, ExtractMode mode, int exact_limit) {
    if (g.n() < 2 || g.m() == 0)
        throw Error(ErrorCode::DegenerateGraph, "need at least 2 vertices and 1 edge");

    LogMaximalReport best;
    best.mode = mode;
    if (mode == ExtractMode::Exact) {
        if (g.n() > exact_limit || g.n() > 22)
            throw Error(ErrorCode::TooLargeForExact,
                        "exact extraction limited to " + std::to_string(std::min(exact_limit, 22)) +
                            " vertices");
        double best_ratio = -1.0;
        uint32_t best_mask = 0;
        int best_edges = 0;
        for (uint32_t mask = 1; mask < (1u << g.n()); ++mask) {
            int size = __builtin_popcount(mask);
            if (size < 2) continue;
            int e = edges_inside_mask(g, mask);
            double r = subset_ratio(e, size);
            if (r > best_ratio + 1e-12 * std::max(1.0, std::fabs(best_ratio))) {
                best_ratio = r;
                best_mask = mask;
                best_edges = e;
            }
        }
        for (int v = 0; v < g.n(); ++v) {
            if (best_mask >> v & 1) best.vertices.push_back(v);
        }
        best.edge_count = best_edges;
        best.ratio = best_ratio;
        best.certified = true;
        return best;
    }

    // peel: delete a minimum-degree vertex each round, track the best suffix
    std::vector<int> deg(g.n());
    std::vector<char> alive(g.n(), 1);
    for (int v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
    long long cur_edges = g.m();
    int cur_n = g.n();
    std::vector<int> removal_order;
    double best_ratio = -1.0;
    int best_step = -1;
    int best_edges = 0;
    int step = 0;
    while (cur_n >= 2) {
        if (cur_edges > 0) {
            double r = subset_ratio(static_cast<int>(cur_edges), cur_n);
            if (r > best_ratio + 1e-12 * std::max(1.0, std::fabs(best_ratio))) {
                best_ratio = r;
                best_step = step;
                best_edges = static_cast<int>(cur_edges);
            }
        }
        int victim = -1;
        for (int v = 0; v < g.n(); ++v) {
            if (alive[v] && (victim < 0 || deg[v] < deg[victim])) victim = v;
        }
        alive[victim] = 0;
        removal_order.push_back(victim);
        for (const auto& inc : g.adj(victim)) {
            if (alive[inc.to]) {
                --deg[inc.to];
                --cur_edges;
            }
        }
        --cur_n;
        ++step;
    }
    std::vector<char> in_best(g.n(), 1);
    for (int i = 0; i < best_step; ++i) in_best[removal_order[i]] = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (in_best[v]) best.vertices.push_back(v);
    }
    best.edge_count = best_edges;
    best.ratio = best_ratio;
    best.certified = false;
    return best;
}

bool check_log_maximal(const EdgeColoredGraph& g, int exact_limit) {
    if (g.n() < 2 || g.m() == 0)
        throw Error(ErrorCode::DegenerateGraph, "need at least 2 vertices and 1 edge");
    if (g.n() > exact_limit || g.n() > 22)
        throw Error(ErrorCode::TooLargeForExact,
                    "exact check limited to " + std::to_string(std::min(exact_limit, 22)) +
                        " vertices");
    for (uint32_t mask = 1; mask < (1u << g.n()); ++mask) {
        if (mask == (1u << g.n()) - 1) continue; // the graph itself, equality
        int size = __builtin_popcount(mask);
        if (size < 2) continue;
        int e = edges_inside_mask(g, mask);
        if (!ratio_leq(e, size, g.m(), g.n())) return false;
    }
    return true;
}

MinDegreeReport min_degree_check(const EdgeColoredGraph& g) {
    if (g.n() < 1) throw Error(ErrorCode::EmptyInput, "empty graph");
    MinDegreeReport r;
    r.min_degree = g.min_degree();
    r.half_average_degree = g.average_degree().value() / 2.0;
    // delta >= d/2  <=>  delta * n >= |E|
    r.pass = static_cast<long long>(r.min_degree) * g.n() >= g.m();
    return r;
}

CutResult optimal_cut_for(const EdgeColoredGraph& g, const VertexSet& U, Rational eps) {
    if (U.none()) throw Error(ErrorCode::EmptyInput, "U must be non-empty");
    Boundary b = boundary_of(g, U);
    int nb = static_cast<int>(b.neighbors.size());
    long long keep_max = below_threshold_max(eps, U.count());

    CutResult out;
    out.removed = g.empty_edge_set();
    if (keep_max < 0) {
        // threshold <= 0: no neighborhood size is strictly below it
        out.threshold_unreachable = true;
        out.removed = edges_to_neighbors(g, U, b.neighbors);
        out.achieved_neighborhood = 0;
        return out;
    }
    if (nb <= keep_max) {
        out.already_below = true;
        out.achieved_neighborhood = nb;
        return out;
    }
    int removals = nb - static_cast<int>(keep_max);
    std::vector<int> victims(b.neighbors.begin(), b.neighbors.begin() + removals);
    out.removed = edges_to_neighbors(g, U, victims);
    out.achieved_neighborhood = nb - removals;
    return out;
}

ViolationCheck verify_violation(const EdgeColoredGraph& g, const ExpanderViolation& v) {
    const Rational& eps = v.epsilon;
    int u_size = v.witness_set.count();
    if (u_size == 0) return {false, "empty U"};
    if (eps.num < 0 || eps.num > eps.den) return {false, "epsilon outside [0,1]"};
    if (!size_admissible(u_size, g.n(), eps))
        return {false, "|U| exceeds n^(1-eps)"};
    long long f_size = v.removed_edges.count();
    // |F| <= (eps/4) d(G) |U|  <=>  |F| * 4den * n <= num * 2|E| * |U|
    if (!prod3_le(f_size, 4 * eps.den, g.n(), eps.num, 2ll * g.m(), u_size))
        return {false, "|F| exceeds the (eps/4) d(G) |U| budget"};
    VertexSet nbhd = g.neighborhood(v.witness_set, v.removed_edges);
    int achieved = nbhd.count();
    if (achieved != v.achieved_neighborhood)
        return {false, "recorded neighborhood size does not match recomputation"};
    // |N| < (eps/4)|U|  <=>  |N| * 4den < num * |U|
    if (!prod3_lt(achieved, 4 * eps.den, 1, eps.num, u_size, 1))
        return {false, "neighborhood not below the (eps/4)|U| threshold"};
    return {true, ""};
}

std::vector<Rational> default_eps_grid() {
    std::vector<Rational> grid;
    grid.reserve(21);
    for (int k = 0; k <= 20; ++k) grid.emplace_back(k, 20);
    return grid;
}

namespace {

std::optional<ExpanderViolation> try_candidate(const EdgeColoredGraph& g, const VertexSet& U,
                                               const std::vector<Rational>& grid) {
    Boundary b = boundary_of(g, U);
    int nb = static_cast<int>(b.neighbors.size());
    int u_size = U.count();
    for (const auto& eps : grid) {
        if (eps.num == 0) continue; // threshold 0 can never be undercut
        if (!size_admissible(u_size, g.n(), eps)) continue;
        long long keep_max = below_threshold_max(eps, u_size);
        if (keep_max < 0) continue;
        if (nb <= keep_max) {
            // violated with F empty
            ExpanderViolation v{eps, U, g.empty_edge_set(), nb};
            return v;
        }
        int removals = nb - static_cast<int>(keep_max);
        long long cost = b.prefix[removals];
        if (!prod3_le(cost, 4 * eps.den, g.n(), eps.num, 2ll * g.m(), u_size)) continue;
        std::vector<int> victims(b.neighbors.begin(), b.neighbors.begin() + removals);
        ExpanderViolation v{eps, U, edges_to_neighbors(g, U, victims),
                            nb - removals};
        return v;
    }
    return std::nullopt;
}

VertexSet sampled_connected_set(const EdgeColoredGraph& g, Rng& rng) {
    int n = g.n();
    VertexSet U(n);
    int start = rng.below(n);
    U.set(start);
    int target = 1 + rng.below(std::max(1, n / 2));
    std::vector<int> frontier{start};
    while (U.count() < target && !frontier.empty()) {
        int idx = rng.below(static_cast<int>(frontier.size()));
        int v = frontier[idx];
        std::vector<int> fresh;
        for (const auto& inc : g.adj(v)) {
            if (!U.test(inc.to)) fresh.push_back(inc.to);
        }
        if (fresh.empty()) {
            frontier.erase(frontier.begin() + idx);
            continue;
        }
        int w = fresh[rng.below(static_cast<int>(fresh.size()))];
        U.set(w);
        frontier.push_back(w);
    }
    return U;
}

} // namespace

std::optional<ExpanderViolation> falsify_robust_expander(const EdgeColoredGraph& g,
                                                         const FalsifyOptions& opts) {
    if (g.n() < 1) return std::nullopt;

    bool exhaustive = g.n() <= std::min(opts.exhaustive_limit, 22);
    int64_t candidates = exhaustive ? (1ll << g.n()) - 1 : opts.u_budget;

    std::mutex mu;
    int64_t best_index = -1;
    std::optional<ExpanderViolation> best;

    parallel_for(candidates, opts.threads, [&](int64_t ci) {
        {
            std::lock_guard<std::mutex> lock(mu);
            if (best_index >= 0 && best_index <= ci) return; // nothing earlier can come of it
        }
        VertexSet U(g.n());
        if (exhaustive) {
            uint64_t mask = static_cast<uint64_t>(ci) + 1;
            for (int v = 0; v < g.n(); ++v) {
                if (mask >> v & 1) U.set(v);
            }
        } else {
            Rng rng(derive_seed(opts.seed, {static_cast<uint64_t>(ci)}));
            U = sampled_connected_set(g, rng);
        }
        auto found = try_candidate(g, U, opts.eps_grid);
        if (found) {
            std::lock_guard<std::mutex> lock(mu);
            if (best_index < 0 || ci < best_index) {
                best_index = ci;
                best = std::move(found);
            }
        }
    });

    if (best) {
        auto check = verify_violation(g, *best);
        if (!check.ok)
            throw Error(ErrorCode::VerificationFailed,
                        "falsifier produced a violation that fails re-check: " + check.detail);
    }
    return best;
}

} // namespace rainbow
