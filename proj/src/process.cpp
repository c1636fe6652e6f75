#include "rainbow/process.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "rainbow/parallel.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

ThinningSchedule ThinningSchedule::make(int n, int t, const ScheduleOverrides& overrides) {
    if (n < 3) throw Error(ErrorCode::InvalidArgument, "schedule needs n >= 3 (log log n > 0)");
    if (t < 2) throw Error(ErrorCode::InvalidArgument, "schedule needs t >= 2");
    ThinningSchedule s;
    s.n = n;
    s.t = t;
    if (overrides.kappa) s.kappa = *overrides.kappa;
    if (overrides.lambda) s.lambda = *overrides.lambda;
    if (overrides.beta) s.beta = *overrides.beta;
    if (s.kappa <= 0 || s.lambda <= 0 || s.beta <= 0)
        throw Error(ErrorCode::InvalidOverride, "kappa, lambda, beta must be positive");

    double ln = std::log(static_cast<double>(n));
    s.K = std::max(1, static_cast<int>(std::ceil(s.kappa * std::log(ln))));
    s.L = std::max<long long>(2, static_cast<long long>(std::ceil(s.lambda * std::ceil(ln))));
    s.T = static_cast<long long>(s.K) * s.L;
    s.retention_p = 1.0 - 1.0 / static_cast<double>(s.T);
    if (overrides.retention) {
        if (*overrides.retention <= 0 || *overrides.retention > 1)
            throw Error(ErrorCode::InvalidOverride, "retention must lie in (0, 1]");
        s.retention_p = *overrides.retention;
    }
    return s;
}

double ThinningSchedule::f(int k) const {
    return n * std::exp(-0.5 * std::pow(beta, k));
}

double ThinningSchedule::epsilon(int k) const {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "epsilon(k) defined for k >= 1");
    double e = std::pow(beta, k - 1) / (2.0 * std::log(static_cast<double>(n)));
    return std::min(1.0, e);
}

std::vector<ColorSet> sample_nested_colors(const ColorSet& palette,
                                           const ThinningSchedule& schedule, long long steps,
                                           uint64_t seed) {
    if (steps < 0 || steps > schedule.T)
        throw Error(ErrorCode::InvalidArgument,
                    "steps must lie in [0, T] = [0, " + std::to_string(schedule.T) + "]");
    Rng rng(seed);
    std::vector<ColorSet> chain;
    chain.reserve(steps + 1);
    ColorSet a0(palette.universe());
    palette.for_each([&](int c) {
        if (rng.bernoulli(0.5)) a0.set(c);
    });
    chain.push_back(std::move(a0));
    for (long long s = 0; s < steps; ++s) {
        ColorSet next = chain.back();
        chain.back().for_each([&](int c) {
            if (!rng.bernoulli(schedule.retention_p)) next.reset(c);
        });
        chain.push_back(std::move(next));
    }
    return chain;
}

double expected_nested_size(const ThinningSchedule& schedule, int palette_size, long long step) {
    return palette_size * 0.5 * std::pow(schedule.retention_p, static_cast<double>(step));
}

namespace {

std::vector<long long> default_checkpoints(const ThinningSchedule& s) {
    std::vector<long long> steps;
    for (int k = 0; k < s.K; ++k) steps.push_back(static_cast<long long>(k) * s.L);
    return steps;
}

} // namespace

ProcessTrace run_thinning(const EdgeColoredGraph& g, int x, const ThinningSchedule& schedule,
                          std::vector<long long> checkpoints, const SearchBudget& rp_budget,
                          uint64_t seed, const VertexSet& phi_vertices,
                          const ColorSet& phi_colors) {
    if (x < 0 || x >= g.n()) throw Error(ErrorCode::InvalidArgument, "root out of range");
    if (phi_vertices.test(x)) throw Error(ErrorCode::InvalidArgument, "root must not be forbidden");

    if (checkpoints.empty()) checkpoints = default_checkpoints(schedule);
    std::sort(checkpoints.begin(), checkpoints.end());
    checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
    long long max_step = checkpoints.back();
    // bad events compare |RP| at consecutive multiples of L, so make sure
    // those steps are evaluated whenever they fall inside the sampled range
    std::vector<long long> eval = checkpoints;
    for (int k = 0; k < schedule.K; ++k) {
        long long step = static_cast<long long>(k) * schedule.L;
        if (step <= max_step) eval.push_back(step);
    }
    std::sort(eval.begin(), eval.end());
    eval.erase(std::unique(eval.begin(), eval.end()), eval.end());
    if (eval.front() < 0 || eval.back() > schedule.max_steps())
        throw Error(ErrorCode::InvalidArgument, "checkpoints outside [0, (K-1)L]");

    ProcessTrace trace;
    trace.seed = seed;
    trace.mode = rp_budget.mode;

    // walk the chain incrementally; only checkpoint steps trigger RP work
    Rng rng(derive_seed(seed, {0x7411ull}));
    ColorSet current(g.color_universe());
    g.used_colors().for_each([&](int c) {
        if (rng.bernoulli(0.5)) current.set(c);
    });
    std::map<long long, std::pair<int, int>> rp_at; // step -> (|RP|, |A|)
    size_t next_eval = 0;
    for (long long step = 0; step <= eval.back(); ++step) {
        if (step > 0) {
            ColorSet next = current;
            current.for_each([&](int c) {
                if (!rng.bernoulli(schedule.retention_p)) next.reset(c);
            });
            current = std::move(next);
        }
        if (next_eval < eval.size() && eval[next_eval] == step) {
            ++next_eval;
            TraceCheckpoint cp;
            cp.step = step;
            cp.a_size = current.count();
            RpResult rp = rp_set(g, x, current, phi_vertices, phi_colors, rp_budget);
            cp.rp_size = rp.members.count();
            cp.rp_complete = rp.complete;
            cp.nodes = rp.nodes;
            rp_at[step] = {cp.rp_size, cp.a_size};
            if (std::find(checkpoints.begin(), checkpoints.end(), step) != checkpoints.end())
                trace.checkpoints.push_back(cp);
        }
    }

    for (int k = 1; k < schedule.K; ++k) {
        long long lo = static_cast<long long>(k - 1) * schedule.L;
        long long hi = static_cast<long long>(k) * schedule.L;
        auto it_lo = rp_at.find(lo);
        auto it_hi = rp_at.find(hi);
        if (it_lo == rp_at.end() || it_hi == rp_at.end()) continue;
        BadEventRecord ev;
        ev.k = k;
        ev.rp_km1l = it_lo->second.first;
        ev.rp_kl = it_hi->second.first;
        ev.f_km1 = schedule.f(k - 1);
        ev.f_k = schedule.f(k);
        ev.fired = ev.rp_kl >= ev.f_k && ev.rp_km1l < ev.f_km1;
        trace.bad_events.push_back(ev);
    }
    return trace;
}

ThinningAggregate aggregate_thinning(const EdgeColoredGraph& g, int x,
                                     const ThinningSchedule& schedule, int trials,
                                     uint64_t base_seed, const SearchBudget& rp_budget,
                                     const VertexSet& phi_vertices, const ColorSet& phi_colors,
                                     int threads, std::vector<long long> checkpoints) {
    if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
    ThinningAggregate agg;
    agg.trials = trials;
    if (checkpoints.empty()) {
        if (schedule.max_steps() <= 2000) {
            for (long long s = 0; s <= schedule.max_steps(); ++s) checkpoints.push_back(s);
        } else {
            checkpoints = default_checkpoints(schedule);
        }
    }
    std::sort(checkpoints.begin(), checkpoints.end());
    checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
    agg.steps = checkpoints;

    agg.traces.resize(trials);
    parallel_for(trials, threads, [&](int64_t i) {
        agg.traces[i] = run_thinning(g, x, schedule, checkpoints, rp_budget,
                                     derive_seed(base_seed, {static_cast<uint64_t>(i)}),
                                     phi_vertices, phi_colors);
    });

    agg.mean_a.assign(checkpoints.size(), 0.0);
    agg.mean_rp.assign(checkpoints.size(), 0.0);
    for (const auto& tr : agg.traces) {
        for (size_t s = 0; s < tr.checkpoints.size(); ++s) {
            agg.mean_a[s] += tr.checkpoints[s].a_size;
            agg.mean_rp[s] += tr.checkpoints[s].rp_size;
        }
    }
    for (auto& v : agg.mean_a) v /= trials;
    for (auto& v : agg.mean_rp) v /= trials;

    int bad_n = std::max(0, schedule.K - 1);
    agg.bad_event_rate.assign(bad_n, 0.0);
    for (const auto& tr : agg.traces) {
        for (const auto& ev : tr.bad_events) {
            if (ev.fired) agg.bad_event_rate[ev.k - 1] += 1.0;
        }
    }
    for (auto& v : agg.bad_event_rate) v /= trials;

    bool full_ladder = static_cast<long long>(checkpoints.size()) == schedule.max_steps() + 1 &&
                       checkpoints.front() == 0 && checkpoints.back() == schedule.max_steps();
    if (full_ladder) {
        for (int k = 1; k < schedule.K; ++k) {
            for (long long j = 1; j <= schedule.L / 2 - 1; ++j) {
                long long lo = k * schedule.L - j - 1;
                long long hi = k * schedule.L - j + 1;
                if (lo < 0 || hi > schedule.max_steps()) continue;
                double denom = agg.mean_rp[hi];
                if (denom <= 0) continue;
                ThinningAggregate::RatioRow row;
                row.k = k;
                row.j = j;
                row.measured = agg.mean_rp[lo] / denom;
                row.target_ratio = 1.0 + schedule.epsilon(k) / 528.0;
                agg.ratios.push_back(row);
            }
        }
    }
    return agg;
}

VertexSet restricted_neighborhood(const EdgeColoredGraph& g, const VertexSet& X, const ColorSet& Q,
                                  const VertexSet& phi_vertices, const ColorSet& phi_colors) {
    if (X.none()) throw Error(ErrorCode::EmptyInput, "X must be non-empty");
    VertexSet out(g.n());
    X.for_each([&](int u) {
        for (const auto& inc : g.adj(u)) {
            if (X.test(inc.to) || phi_vertices.test(inc.to)) continue;
            if (inc.color >= Q.universe() || !Q.test(inc.color)) continue;
            if (inc.color < phi_colors.universe() && phi_colors.test(inc.color)) continue;
            out.set(inc.to);
        }
    });
    return out;
}

SprinklingTrace run_sprinkling(const EdgeColoredGraph& g, int x, const VertexSet& phi_vertices,
                               const ColorSet& phi_colors, const std::vector<double>& round_probs,
                               uint64_t seed, int stall_rounds) {
    if (x < 0 || x >= g.n()) throw Error(ErrorCode::InvalidArgument, "root out of range");
    if (phi_vertices.test(x)) throw Error(ErrorCode::InvalidArgument, "root must not be forbidden");
    if (round_probs.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one round");

    SprinklingTrace trace;
    trace.seed = seed;
    trace.members = VertexSet(g.n());
    trace.witness.assign(g.n(), std::nullopt);

    ColorSet base = g.used_colors();
    base.subtract(phi_colors);

    Rng rng(seed);
    int stalls = 0;
    for (size_t round = 0; round < round_probs.size(); ++round) {
        double q = round_probs[round];
        ColorSet sampled(g.color_universe());
        base.for_each([&](int c) {
            if (rng.bernoulli(q)) sampled.set(c);
        });

        SprinklingRound rec;
        rec.q = q;
        rec.sampled_colors = sampled.count();

        int added = 0;
        if (round == 0) {
            VertexSet root(g.n());
            root.set(x);
            rec.rn_size = restricted_neighborhood(g, root, sampled, phi_vertices, phi_colors).count();
            for (const auto& inc : g.adj(x)) {
                if (phi_vertices.test(inc.to) || !sampled.test(inc.color)) continue;
                if (trace.members.test(inc.to)) continue;
                trace.members.set(inc.to);
                trace.witness[inc.to] = RainbowPath{{x, inc.to}, {inc.color}, false};
                ++added;
            }
        } else if (trace.members.any()) {
            rec.rn_size =
                restricted_neighborhood(g, trace.members, sampled, phi_vertices, phi_colors).count();
            // scan current members in id order; a vertex joins through the
            // first parent whose witness does not already use the edge color
            std::vector<int> parents = trace.members.to_vector();
            for (int u : parents) {
                const RainbowPath& wu = *trace.witness[u];
                for (const auto& inc : g.adj(u)) {
                    int y = inc.to;
                    if (y == x || trace.members.test(y) || phi_vertices.test(y)) continue;
                    if (!sampled.test(inc.color)) continue;
                    if (std::find(wu.colors.begin(), wu.colors.end(), inc.color) != wu.colors.end())
                        continue;
                    RainbowPath wy = wu;
                    wy.vertices.push_back(y);
                    wy.colors.push_back(inc.color);
                    trace.members.set(y);
                    trace.witness[y] = std::move(wy);
                    ++added;
                }
            }
        }

        rec.added = added;
        rec.b_size = trace.members.count();
        trace.rounds.push_back(rec);

        stalls = added == 0 ? stalls + 1 : 0;
        if (stalls >= stall_rounds) {
            trace.stalled = true;
            break;
        }
    }
    if (trace.members.none()) trace.stalled = true;
    return trace;
}

RedBlueResult red_blue_split(const EdgeColoredGraph& g, const VertexSet& U, const VertexSet& phi0,
                             Rational eps, const EdgeSet& red_edges) {
    if (U.none()) throw Error(ErrorCode::HypothesisViolated, "U must be non-empty");
    if (U.intersects(phi0))
        throw Error(ErrorCode::HypothesisViolated, "U and phi0 must be disjoint");
    if (eps.num < 0 || eps.num > eps.den)
        throw Error(ErrorCode::HypothesisViolated, "eps must lie in [0,1]");
    int u_size = U.count();
    {
        // |U| <= n^(1-eps)
        long double lhs = eps.den * std::log(static_cast<long double>(u_size));
        long double rhs = (eps.den - eps.num) * std::log(static_cast<long double>(g.n()));
        if (u_size > 1 && lhs > rhs + 1e-12L * std::max<long double>(1.0L, rhs))
            throw Error(ErrorCode::HypothesisViolated, "|U| exceeds n^(1-eps)");
    }
    // |phi0| <= eps |U| / 40
    if (!prod3_le(40ll * eps.den, phi0.count(), 1, eps.num, u_size, 1))
        throw Error(ErrorCode::HypothesisViolated, "|phi0| exceeds eps |U| / 40");

    const long long n = g.n();
    const long long two_m = 2ll * g.m();
    const long long cap = (two_m + n - 1) / n; // ceil d(G)

    // boundary edges between U and the rest minus phi0, split by class
    std::vector<int> deg_red(g.n(), 0), deg_blue(g.n(), 0);
    std::vector<std::pair<int, bool>> boundary; // (edge id, is_red)
    for (int ei = 0; ei < g.m(); ++ei) {
        const Edge& e = g.edges()[ei];
        bool u_in = U.test(e.u), v_in = U.test(e.v);
        if (u_in == v_in) continue;
        int inside = u_in ? e.u : e.v;
        int outside = u_in ? e.v : e.u;
        if (phi0.test(outside)) continue;
        bool is_red = red_edges.test(ei);
        boundary.emplace_back(ei, is_red);
        if (is_red)
            ++deg_red[inside];
        else
            ++deg_blue[outside];
    }

    auto le_d = [&](long long deg) { return deg * n <= two_m; };  // deg <= d(G)
    auto ge_d = [&](long long deg) { return deg * n >= two_m; };  // deg >= d(G)

    EdgeSet f_red_prime(g.m()), f_blue_prime(g.m());
    long long f_red_prime_n = 0, f_blue_prime_n = 0;
    for (const auto& [ei, is_red] : boundary) {
        const Edge& e = g.edges()[ei];
        int inside = U.test(e.u) ? e.u : e.v;
        int outside = U.test(e.u) ? e.v : e.u;
        if (is_red && le_d(deg_red[inside])) {
            f_red_prime.set(ei);
            ++f_red_prime_n;
        } else if (!is_red && le_d(deg_blue[outside])) {
            f_blue_prime.set(ei);
            ++f_blue_prime_n;
        }
    }

    std::vector<int> u_red, v_blue;
    U.for_each([&](int v) {
        if (deg_red[v] > 0 && ge_d(deg_red[v])) u_red.push_back(v);
    });
    for (int v = 0; v < g.n(); ++v) {
        if (!U.test(v) && !phi0.test(v) && deg_blue[v] > 0 && ge_d(deg_blue[v])) v_blue.push_back(v);
    }

    // size >= (eps/10)|U|, exact
    auto tenth_count_ok = [&](long long count) {
        return prod3_le(eps.num, u_size, 1, 10ll * eps.den, count, 1);
    };
    // size >= (eps/10) d(G) |U|, exact
    auto tenth_edges_ok = [&](long long count) {
        return prod3_le(eps.num, two_m, u_size, 10ll * eps.den, n, count);
    };

    auto pick_capped = [&](const std::vector<int>& centers, bool red_side) {
        EdgeSet F(g.m());
        for (int c : centers) {
            long long taken = 0;
            for (const auto& inc : g.adj(c)) {
                if (taken >= cap) break;
                const Edge& e = g.edges()[inc.edge];
                bool u_in = U.test(e.u), v_in = U.test(e.v);
                if (u_in == v_in) continue;
                int outside = u_in ? e.v : e.u;
                if (phi0.test(outside)) continue;
                bool is_red = red_edges.test(inc.edge);
                if (is_red != red_side) continue;
                F.set(inc.edge);
                ++taken;
            }
        }
        return F;
    };

    RedBlueResult out;
    if (tenth_count_ok(static_cast<long long>(u_red.size()))) {
        out.kind = SplitKind::Red;
        out.branch = SplitBranch::URedCap;
        out.edges = pick_capped(u_red, true);
        return out;
    }
    if (tenth_count_ok(static_cast<long long>(v_blue.size()))) {
        out.kind = SplitKind::Blue;
        out.branch = SplitBranch::VBlueCap;
        out.edges = pick_capped(v_blue, false);
        return out;
    }
    if (tenth_edges_ok(f_red_prime_n)) {
        out.kind = SplitKind::Red;
        out.branch = SplitBranch::FRedPrime;
        out.edges = f_red_prime;
        return out;
    }
    if (tenth_edges_ok(f_blue_prime_n)) {
        out.kind = SplitKind::Blue;
        out.branch = SplitBranch::FBluePrime;
        out.edges = f_blue_prime;
        return out;
    }

    // all four branches failed; the leftover boundary witness now violates
    // the expansion inequalities
    VertexSet u_prime = U;
    for (int v : u_red) u_prime.reset(v);
    EdgeSet F = f_red_prime | f_blue_prime;
    ExpanderViolation viol;
    viol.epsilon = eps;
    viol.witness_set = u_prime;
    viol.removed_edges = F;
    viol.achieved_neighborhood = g.neighborhood(u_prime, F).count();
    auto check = verify_violation(g, viol);
    if (!check.ok)
        throw Error(ErrorCode::VerificationFailed,
                    "red/blue fallback produced a non-verifying violation: " + check.detail);
    out.kind = SplitKind::Violation;
    out.branch = SplitBranch::ViolationWitness;
    out.edges = F;
    out.violation = std::move(viol);
    return out;
}

EdgeClassReport classify_edge_set(const EdgeColoredGraph& g, const EdgeSet& F,
                                  const ClassifyContext& ctx) {
    EdgeClassReport report;
    const VertexSet& U = ctx.rp_snapshot;
    int u_size = U.count();
    if (u_size == 0) {
        report.reason = "empty RP snapshot";
        return report;
    }

    // exact RP oracle per removed color, cached
    std::map<int, VertexSet> rp_minus_color;
    auto rp_without = [&](int color) -> const VertexSet& {
        auto it = rp_minus_color.find(color);
        if (it != rp_minus_color.end()) return it->second;
        ColorSet allowed = ctx.a_klj;
        allowed.reset(color);
        SearchBudget b = ctx.rp_budget;
        b.mode = SearchMode::Exact;
        RpResult rp = rp_set(g, ctx.root, allowed, ctx.phi_vertices, ctx.phi_colors, b);
        if (!rp.complete)
            throw Error(ErrorCode::TooLargeForExact, "RP oracle exhausted its budget");
        return rp_minus_color.emplace(color, std::move(rp.members)).first->second;
    };

    bool membership_ok = true;
    bool colors_in_km1l = true;
    std::vector<int> deg_f(g.n(), 0);
    std::string why;
    F.for_each([&](int ei) {
        if (!membership_ok) return;
        const Edge& e = g.edges()[ei];
        bool u_in = U.test(e.u), v_in = U.test(e.v);
        if (u_in == v_in) {
            membership_ok = false;
            why = "edge " + std::to_string(ei) + " does not cross the RP boundary";
            return;
        }
        int inside = u_in ? e.u : e.v;
        int outside = u_in ? e.v : e.u;
        if (ctx.phi_vertices.test(outside)) {
            membership_ok = false;
            why = "outside endpoint of edge " + std::to_string(ei) + " is forbidden";
            return;
        }
        if (!rp_without(e.color).test(inside)) {
            membership_ok = false;
            why = "inside endpoint of edge " + std::to_string(ei) +
                  " leaves RP when its color is removed";
            return;
        }
        ++deg_f[outside];
        if (e.color >= ctx.a_km1l.universe() || !ctx.a_km1l.test(e.color)) colors_in_km1l = false;
    });

    if (!membership_ok) {
        report.reason = why;
        return report;
    }

    long long f_size = F.count();
    double d = g.average_degree().value();
    long long cap = (2ll * g.m() + g.n() - 1) / g.n();
    int max_deg_f = 0;
    for (int v = 0; v < g.n(); ++v) max_deg_f = std::max(max_deg_f, deg_f[v]);

    bool size_i = static_cast<double>(f_size) + 1e-9 >= ctx.epsilon / 10.0 * d * u_size;
    bool deg_i = max_deg_f <= cap;
    report.type_i = size_i && deg_i;

    bool size_ii = static_cast<double>(f_size) + 1e-9 >=
                   ctx.epsilon / 132.0 * static_cast<double>(ctx.L) * u_size;
    bool deg_ii = max_deg_f <= 2 * ctx.L;
    report.type_ii = colors_in_km1l && size_ii && deg_ii;

    if (report.type_ii)
        report.cls = EdgeSetClass::TypeII;
    else if (report.type_i)
        report.cls = EdgeSetClass::TypeI;
    else {
        report.cls = EdgeSetClass::Neither;
        if (!size_i && !size_ii)
            report.reason = "size below both class thresholds";
        else if (!deg_i && !deg_ii)
            report.reason = "degree caps exceeded";
        else if (!colors_in_km1l && !report.type_i)
            report.reason = "conditions of neither class fully met";
    }
    return report;
}

namespace {

double ci99_lower(long long hits, long long n) {
    if (n <= 0) return 0.0;
    double phat = static_cast<double>(hits) / n;
    double half = 2.5758293035489004 * std::sqrt(std::max(phat * (1 - phat), 1e-12) / n);
    return phat - half;
}

} // namespace

NestedStats nested_color_stats(const ThinningSchedule& schedule, int i, int j, long long trials,
                               uint64_t seed) {
    if (i < 0 || j < i || j > schedule.T)
        throw Error(ErrorCode::InvalidArgument, "need 0 <= i <= j <= T");
    if (trials < 1000) throw Error(ErrorCode::InvalidArgument, "need at least 10^3 trials");

    NestedStats st;
    st.i = i;
    st.j = j;
    st.trials = trials;
    st.p = schedule.retention_p;
    st.T = schedule.T;
    st.bound_i = (j - i) * (1.0 - st.p) / 6.0;
    st.ii_hypothesis_ok = i < j && j - i + 1 <= schedule.T / 2;
    st.bound_ii = i < j ? (static_cast<double>(schedule.T) / (j - i)) * (1.0 - st.p) / 2.0 : 0.0;

    Rng rng(seed);
    for (long long trial = 0; trial < trials; ++trial) {
        bool alive = rng.bernoulli(0.5);
        bool at_i = i == 0 ? alive : false;
        bool at_jm1 = j - 1 == 0 ? alive : false;
        for (int step = 1; step <= j; ++step) {
            if (alive && !rng.bernoulli(schedule.retention_p)) alive = false;
            if (step == i) at_i = alive;
            if (step == j - 1) at_jm1 = alive;
        }
        if (j == 0) at_jm1 = false;
        bool at_j = alive;

        if (at_j) {
            ++st.in_aj;
            if (at_i) ++st.in_aj_and_ai;
        } else {
            ++st.notin_aj;
            if (at_i) ++st.notin_aj_and_ai;
        }
        if (at_i && i < j) {
            if (at_j) {
                ++st.ai_in_aj;
                if (at_jm1) ++st.ai_in_aj_and_ajm1;
            } else {
                ++st.ai_notin_aj;
                if (at_jm1) ++st.ai_notin_aj_and_ajm1;
            }
        }
    }

    auto est = [](long long hit, long long n) {
        return n > 0 ? static_cast<double>(hit) / n : 0.0;
    };
    st.est_i_given_in = est(st.in_aj_and_ai, st.in_aj);
    st.est_i_given_notin = est(st.notin_aj_and_ai, st.notin_aj);
    st.ci99_lo_i_given_in = ci99_lower(st.in_aj_and_ai, st.in_aj);
    st.ci99_lo_i_given_notin = ci99_lower(st.notin_aj_and_ai, st.notin_aj);
    st.est_ii_given_in = est(st.ai_in_aj_and_ajm1, st.ai_in_aj);
    st.est_ii_given_notin = est(st.ai_notin_aj_and_ajm1, st.ai_notin_aj);
    st.ci99_lo_ii_given_in = ci99_lower(st.ai_in_aj_and_ajm1, st.ai_in_aj);
    st.ci99_lo_ii_given_notin = ci99_lower(st.ai_notin_aj_and_ajm1, st.ai_notin_aj);

    double p = st.p;
    if (j > i) {
        double p_i = std::pow(p, i);
        double p_j = std::pow(p, j);
        st.closed_i_given_notin = (0.5 * p_i * (1.0 - std::pow(p, j - i))) / (1.0 - 0.5 * p_j);
        st.closed_ii_given_notin =
            std::pow(p, j - 1 - i) * (1.0 - p) / (1.0 - std::pow(p, j - i));
    } else {
        st.closed_i_given_notin = 0.0;
        st.closed_ii_given_notin = 0.0;
    }
    return st;
}

} // namespace rainbow
