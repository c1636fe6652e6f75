#pragma once

#include <optional>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/rational.hpp"

namespace rainbow {

enum class ExtractMode { Exact, Peel };

struct LogMaximalReport {
    std::vector<int> vertices;
    int edge_count = 0;
    double ratio = 0.0; // d(H) / log|V(H)|
    ExtractMode mode = ExtractMode::Exact;
    bool certified = false;
};

/// Best d(H)/log|V(H)| over induced subgraphs on >= 2 vertices. Exact mode
/// enumerates all subsets (n <= exact_limit) and certifies the result; peel
/// mode repeatedly deletes a minimum-degree vertex and keeps the best ratio
/// seen, which is >= d(G)/log n but not certified.
LogMaximalReport extract_log_maximal(const EdgeColoredGraph& g, ExtractMode mode,
                                     int exact_limit = 16);

/// True iff every induced subgraph on >= 2 vertices satisfies
/// d(H)/log|V(H)| <= d(G)/log n. Non-induced subgraphs cannot beat the
/// induced graph on the same vertex set, so induced enumeration suffices.
bool check_log_maximal(const EdgeColoredGraph& g, int exact_limit = 16);

struct MinDegreeReport {
    int min_degree = 0;
    double half_average_degree = 0.0;
    bool pass = false;
};

/// delta(G) versus d(G)/2.
MinDegreeReport min_degree_check(const EdgeColoredGraph& g);

struct CutResult {
    EdgeSet removed;
    int achieved_neighborhood = 0;
    bool already_below = false;       // |N(U)| < threshold with F empty
    bool threshold_unreachable = false; // threshold <= 0: reported cut removes all neighbors
};

/// Minimum-cardinality F with |N_{G-F}(U)| < (eps/4)|U|, found by deleting
/// neighbors of U in ascending order of their edge multiplicity into U.
/// Removing a neighbor costs exactly its multiplicity and neighbors are
/// independent, so the greedy prefix is optimal.
CutResult optimal_cut_for(const EdgeColoredGraph& g, const VertexSet& U, Rational eps);

struct ExpanderViolation {
    Rational epsilon;
    VertexSet witness_set;  // U
    EdgeSet removed_edges;  // F
    int achieved_neighborhood = 0;
};

struct ViolationCheck {
    bool ok = false;
    std::string detail;
};

/// Independently re-checks the three inequalities of a violation:
/// |U| <= n^(1-eps), |F| <= (eps/4) d(G) |U|, |N_{G-F}(U)| < (eps/4)|U|.
ViolationCheck verify_violation(const EdgeColoredGraph& g, const ExpanderViolation& v);

std::vector<Rational> default_eps_grid(); // {k/20 : k = 0..20}

struct FalsifyOptions {
    std::vector<Rational> eps_grid = default_eps_grid();
    int exhaustive_limit = 14; // all non-empty U when n <= limit
    int u_budget = 2000;       // sampled candidates otherwise
    uint64_t seed = 0;
    int threads = 1;
};

/// Searches for a robust-expansion violation. Exhaustive over all (U, eps in
/// grid) when n <= exhaustive_limit — in that regime "none" is a proof over
/// the grid, since optimal_cut_for solves the inner minimization exactly.
/// Otherwise samples connected candidate sets and can only falsify.
std::optional<ExpanderViolation> falsify_robust_expander(const EdgeColoredGraph& g,
                                                         const FalsifyOptions& opts = {});

} // namespace rainbow
