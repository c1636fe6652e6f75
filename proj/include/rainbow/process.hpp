#pragma once

#include <optional>
#include <vector>

#include "rainbow/expander.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

struct ScheduleOverrides {
    std::optional<double> kappa;     // K = ceil(kappa * log log n)
    std::optional<double> lambda;    // L = ceil(lambda * ceil(log n))
    std::optional<double> beta;      // f(k) = n exp(-beta^k / 2), eps(k) = beta^(k-1)/(2 log n)
    std::optional<double> retention; // per-step retention, default 1 - 1/T
};

/// Thinning schedule: K, L, T = K*L, per-step retention 1 - 1/T, the target
/// curve f(k) and the per-scale eps(k) with f(k-1) = n^(1-eps(k)).
struct ThinningSchedule {
    int n = 0;
    int t = 2;
    double kappa = 10.0;
    double lambda = 1e5;
    double beta = 10.0;
    int K = 1;
    long long L = 2;
    long long T = 2;
    double retention_p = 0.5;

    static ThinningSchedule make(int n, int t, const ScheduleOverrides& overrides = {});

    double f(int k) const;
    /// eps(k) for k >= 1, clamped into (0, 1] so downstream expansion checks
    /// stay in range.
    double epsilon(int k) const;
    long long max_steps() const { return static_cast<long long>(K - 1) * L; }
};

/// A_0 by independent 1/2-sampling of the palette, then `steps` rounds of
/// independent retention with probability 1 - 1/T. Returns steps+1 sets.
/// Chains may run to T, the full length of the nested color ladder.
std::vector<ColorSet> sample_nested_colors(const ColorSet& palette,
                                           const ThinningSchedule& schedule, long long steps,
                                           uint64_t seed);

/// E|A_step| under the sampling above.
double expected_nested_size(const ThinningSchedule& schedule, int palette_size, long long step);

struct TraceCheckpoint {
    long long step = 0;
    int a_size = 0;
    int rp_size = 0;
    bool rp_complete = false;
    uint64_t nodes = 0;
};

struct BadEventRecord {
    int k = 0;
    bool fired = false; // |RP_kL| >= f(k) and |RP_(k-1)L| < f(k-1)
    int rp_kl = 0;
    int rp_km1l = 0;
    double f_k = 0.0;
    double f_km1 = 0.0;
};

struct ProcessTrace {
    uint64_t seed = 0;
    SearchMode mode = SearchMode::Witness;
    std::vector<TraceCheckpoint> checkpoints;
    std::vector<BadEventRecord> bad_events;
};

/// Samples the nested color sequence and evaluates |RP_l| at the requested
/// steps (empty request: multiples of L up to (K-1)L). Budget exhaustion at
/// a checkpoint is recorded in-trace, not fatal.
ProcessTrace run_thinning(const EdgeColoredGraph& g, int x, const ThinningSchedule& schedule,
                          std::vector<long long> checkpoints, const SearchBudget& rp_budget,
                          uint64_t seed, const VertexSet& phi_vertices,
                          const ColorSet& phi_colors);

struct ThinningAggregate {
    int trials = 0;
    std::vector<long long> steps;
    std::vector<double> mean_a;
    std::vector<double> mean_rp;
    struct RatioRow {
        int k = 0;
        long long j = 0;
        double measured = 0.0;     // E[|RP_{kL-j-1}|] / E[|RP_{kL-j+1}|]
        double target_ratio = 0.0; // 1 + eps(k)/528, reported for comparison only
    };
    std::vector<RatioRow> ratios;
    std::vector<double> bad_event_rate; // index k-1 for k = 1..K-1
    std::vector<ProcessTrace> traces;
};

/// Multi-seed thinning statistics. Checkpoints: explicit list, or empty for
/// every step when the ladder is short (<= 2000 steps) and multiples of L
/// otherwise. Ratio rows are produced when the evaluated steps cover the
/// full ladder.
ThinningAggregate aggregate_thinning(const EdgeColoredGraph& g, int x,
                                     const ThinningSchedule& schedule, int trials,
                                     uint64_t base_seed, const SearchBudget& rp_budget,
                                     const VertexSet& phi_vertices, const ColorSet& phi_colors,
                                     int threads = 1, std::vector<long long> checkpoints = {});

/// Restricted external neighborhood: vertices outside X joined to X by an
/// edge whose color lies in Q minus the forbidden colors, the vertex itself
/// not forbidden.
VertexSet restricted_neighborhood(const EdgeColoredGraph& g, const VertexSet& X, const ColorSet& Q,
                                  const VertexSet& phi_vertices, const ColorSet& phi_colors);

struct SprinklingRound {
    double q = 0.0;
    int sampled_colors = 0;
    int rn_size = 0; // unrestricted |RN_{Q,phi}(B)| before growing
    int added = 0;   // witness-restricted growth actually applied
    int b_size = 0;
};

struct SprinklingTrace {
    uint64_t seed = 0;
    std::vector<SprinklingRound> rounds;
    bool stalled = false;
    VertexSet members;
    std::vector<std::optional<RainbowPath>> witness;
};

/// Round-based expansion with fresh color samples. Every vertex that joins
/// does so through an edge whose color is absent from its parent's witness
/// path, so each member carries a valid rainbow path from x: the grown set
/// is a sound under-approximation of the RP set.
SprinklingTrace run_sprinkling(const EdgeColoredGraph& g, int x, const VertexSet& phi_vertices,
                               const ColorSet& phi_colors, const std::vector<double>& round_probs,
                               uint64_t seed, int stall_rounds = 3);

enum class SplitKind { Red, Blue, Violation };
enum class SplitBranch { URedCap, VBlueCap, FRedPrime, FBluePrime, ViolationWitness };

struct RedBlueResult {
    SplitKind kind = SplitKind::Red;
    SplitBranch branch = SplitBranch::FRedPrime;
    EdgeSet edges;
    std::optional<ExpanderViolation> violation;
};

/// Constructive red/blue dichotomy on the boundary edges between U and the
/// rest minus phi0: returns a red set capped on the U side or a blue set
/// capped on the outside, each of size >= (eps/10) d(G) |U|; if no branch
/// succeeds, returns the witness (U \ U_red, F'_red + F'_blue) which is
/// re-verified to fail the robust-expansion inequalities before returning.
RedBlueResult red_blue_split(const EdgeColoredGraph& g, const VertexSet& U,
                             const VertexSet& phi0, Rational eps, const EdgeSet& red_edges);

enum class EdgeSetClass { Neither, TypeI, TypeII };

struct ClassifyContext {
    int root = 0;
    ColorSet a_klj;        // A_{kL-j}
    ColorSet a_km1l;       // A_{(k-1)L}
    VertexSet phi_vertices;
    ColorSet phi_colors;
    VertexSet rp_snapshot; // U = RP_{kL-j}
    double epsilon = 0.0;
    long long L = 2;
    SearchBudget rp_budget;
};

struct EdgeClassReport {
    EdgeSetClass cls = EdgeSetClass::Neither;
    bool type_i = false;
    bool type_ii = false;
    std::string reason;
};

/// Verifies edge-by-edge membership v in RP(A_{kL-j} minus the edge color)
/// with an exact RP oracle, then the size and degree-cap conditions of the
/// two classes. Returns the strongest class satisfied.
EdgeClassReport classify_edge_set(const EdgeColoredGraph& g, const EdgeSet& F,
                                  const ClassifyContext& ctx);

struct NestedStats {
    int i = 0;
    int j = 0;
    long long trials = 0;
    double p = 0.0;
    long long T = 0;
    double bound_i = 0.0;  // (j-i)(1-p)/6
    double bound_ii = 0.0; // (T/(j-i))(1-p)/2
    bool ii_hypothesis_ok = false;

    // membership in A_i conditioned on the A_j outcome
    long long in_aj = 0, in_aj_and_ai = 0;
    long long notin_aj = 0, notin_aj_and_ai = 0;
    double est_i_given_in = 0.0, est_i_given_notin = 0.0;
    double ci99_lo_i_given_in = 0.0, ci99_lo_i_given_notin = 0.0;
    double closed_i_given_notin = 0.0;

    // membership in A_{j-1} conditioned on x in A_i and the A_j outcome
    long long ai_in_aj = 0, ai_in_aj_and_ajm1 = 0;
    long long ai_notin_aj = 0, ai_notin_aj_and_ajm1 = 0;
    double est_ii_given_in = 0.0, est_ii_given_notin = 0.0;
    double ci99_lo_ii_given_in = 0.0, ci99_lo_ii_given_notin = 0.0;
    double closed_ii_given_notin = 0.0;
};

/// Pure single-element chain simulation (no graph): empirical conditional
/// probabilities with 99% confidence intervals against the two
/// nested-sampling lower bounds, plus closed-form cross-checks.
NestedStats nested_color_stats(const ThinningSchedule& schedule, int i, int j, long long trials,
                               uint64_t seed);

} // namespace rainbow
