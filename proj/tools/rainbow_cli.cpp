#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "rainbow/applications.hpp"
#include "rainbow/certificates.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/expander.hpp"
#include "rainbow/graph_io.hpp"
#include "rainbow/parallel.hpp"
#include "rainbow/process.hpp"
#include "rainbow/report.hpp"
#include "rainbow/rng.hpp"

namespace {

using namespace rainbow;

constexpr int kExitFound = 0;
constexpr int kExitAbsent = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;

int env_threads() {
    const char* v = std::getenv("RAINBOW_THREADS");
    if (!v) return 1;
    int t = std::atoi(v);
    return t >= 1 ? t : 1;
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos)
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(s), 1);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    long long den = 1;
    for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    return Rational(std::stoll(digits), den);
}

std::vector<Rational> parse_eps_grid(const std::string& s) {
    std::vector<Rational> grid;
    if (s.rfind("grid:", 0) == 0) {
        int steps = std::stoi(s.substr(5));
        if (steps < 1) throw Error(ErrorCode::InvalidArgument, "grid:N needs N >= 1");
        for (int k = 0; k <= steps; ++k) grid.emplace_back(k, steps);
        return grid;
    }
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) grid.push_back(parse_rational(tok));
    }
    if (grid.empty()) throw Error(ErrorCode::InvalidArgument, "empty epsilon grid");
    return grid;
}

// set arguments are inline ("1,2,4") or files ("@sets.txt", whitespace- or
// comma-separated)
std::string expand_set_arg(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + arg.substr(1));
    std::string out, tok;
    while (in >> tok) {
        if (!out.empty()) out += ",";
        out += tok;
    }
    for (auto& ch : out) {
        if (ch == ';') ch = ',';
    }
    return out;
}

std::vector<int> parse_ints(const std::string& csv_or_file) {
    std::string csv = expand_set_arg(csv_or_file);
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    return out;
}

std::vector<double> parse_doubles(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stod(tok));
    }
    return out;
}

std::vector<std::vector<int>> load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
    int n;
    if (!(in >> n)) throw Error(ErrorCode::FormatError, "table file starts with the order");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (auto& row : table) {
        for (auto& x : row) {
            if (!(in >> x)) throw Error(ErrorCode::FormatError, "truncated table file");
        }
    }
    return table;
}

FiniteGroup group_from_flag(const std::string& spec) {
    if (spec.rfind("table:", 0) == 0) return FiniteGroup::from_table(load_table_file(spec.substr(6)));
    return parse_group_spec(spec);
}

void emit(const ordered_json& artifact, const std::string& path) {
    if (path.empty()) return;
    write_text_file(path, artifact.dump(2) + "\n");
}

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Found: return "found";
        case Outcome::Absent: return "proven-absent";
        case Outcome::Unknown: return "unknown";
    }
    return "?";
}

int outcome_exit(Outcome o) {
    switch (o) {
        case Outcome::Found: return kExitFound;
        case Outcome::Absent: return kExitAbsent;
        case Outcome::Unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
    std::string cayley, sidon, doubling, conv;
    int bhg_n = 0;
    std::string gens, set, set_a, set_b, colors;
    std::string out;
    bool json = false;
};

int run_construct(const ConstructArgs& a) {
    EdgeColoredGraph graph = [&] {
        if (!a.cayley.empty()) {
            FiniteGroup g = group_from_flag(a.cayley);
            return cayley_sum_graph(g, parse_element_list(g, expand_set_arg(a.gens.empty() ? a.set : a.gens)));
        }
        if (!a.sidon.empty()) {
            FiniteGroup g = group_from_flag(a.sidon);
            return sidon_graph(g, parse_element_list(g, expand_set_arg(a.set))).graph;
        }
        if (a.bhg_n > 0) return bhg_graph(a.bhg_n, parse_ints(a.set)).graph;
        if (!a.doubling.empty()) {
            FiniteGroup g = group_from_flag(a.doubling);
            return doubling_graph(g, parse_element_list(g, expand_set_arg(a.set_a)),
                                  parse_element_list(g, expand_set_arg(a.set_b)))
                .graph;
        }
        if (!a.conv.empty()) {
            FiniteGroup g = group_from_flag(a.conv);
            return convolution_graph(g, parse_element_list(g, expand_set_arg(a.set_a)),
                                     parse_element_list(g, expand_set_arg(a.set_b)),
                                     parse_element_list(g, expand_set_arg(a.colors)))
                .graph;
        }
        throw Error(ErrorCode::InvalidArgument,
                    "pick one of --cayley, --sidon, --bhg, --doubling, --conv");
    }();

    std::string body = a.json ? graph_to_json(graph) : graph_to_text(graph);
    if (a.out.empty()) {
        std::cout << body;
    } else {
        write_text_file(a.out, body);
        std::cerr << "wrote " << graph.n() << " vertices, " << graph.m() << " edges, "
                  << graph.palette_size() << " colors to " << a.out << "\n";
    }
    return kExitFound;
}

// ---------------------------------------------------------------- find-cycle

struct FindCycleArgs {
    std::string in;
    int max_len = 0;
    bool witness = false;
    uint64_t budget = 4'000'000;
    uint64_t seed = 0;
    std::string json_out;
};

int run_find_cycle(const FindCycleArgs& a) {
    EdgeColoredGraph g = load_graph_file(a.in);
    SearchBudget budget;
    budget.max_nodes = a.budget;
    budget.seed = a.seed;
    budget.mode = a.witness ? SearchMode::Witness : SearchMode::Exact;
    int cap = a.max_len > 0 ? a.max_len : std::max(3, g.palette_size());
    CycleSearchResult res = find_rainbow_cycle(g, cap, budget);

    ordered_json result;
    result["outcome"] = outcome_name(res.outcome);
    result["max_len"] = cap;
    result["nodes"] = res.nodes;
    if (res.cycle) result["certificate"] = cycle_to_json(*res.cycle);
    ordered_json config{{"command", "find-cycle"}, {"in", a.in},      {"max_len", a.max_len},
                        {"witness", a.witness},    {"budget", a.budget}, {"seed", a.seed}};
    emit(make_artifact(config, result, a.seed), a.json_out);

    if (res.cycle)
        std::cout << "rainbow cycle of length " << res.cycle->length() << "\n";
    else
        std::cout << (res.outcome == Outcome::Absent ? "no rainbow cycle (proven, length cap "
                                                     : "no rainbow cycle found (budget, length cap ")
                  << cap << ")\n";
    return outcome_exit(res.outcome);
}

// ----------------------------------------------------------- find-subdivision

struct FindSubdivArgs {
    std::string in;
    int t = 3;
    std::string hub_rule = "maxdeg";
    std::string hubs;
    int len_bound = 0;
    double len_c = 4.0;
    int retries = 64;
    uint64_t budget = 4'000'000;
    uint64_t seed = 0;
    int threads = 1;
    std::string json_out;
};

int run_find_subdivision(const FindSubdivArgs& a) {
    EdgeColoredGraph g = load_graph_file(a.in);
    SearchBudget budget;
    budget.max_nodes = a.budget;
    budget.max_retries = a.retries;
    budget.seed = a.seed;
    SubdivisionOptions opts;
    opts.length_bound = a.len_bound;
    opts.length_c = a.len_c;
    opts.threads = a.threads;
    if (a.hub_rule == "maxdeg") {
        opts.hub_rule = HubRule::MaxDegree;
    } else if (a.hub_rule == "random") {
        opts.hub_rule = HubRule::Random;
    } else if (a.hub_rule == "given") {
        opts.hub_rule = HubRule::Given;
        opts.given_hubs = parse_ints(a.hubs);
    } else {
        throw Error(ErrorCode::InvalidArgument, "--hub-rule must be maxdeg, random or given");
    }

    SubdivisionResult res = find_subdivision(g, a.t, budget, opts);
    ordered_json result;
    result["outcome"] = outcome_name(res.outcome);
    result["nodes"] = res.nodes;
    auto completed = ordered_json::array();
    for (auto [i, j] : res.completed_pairs) completed.push_back({i, j});
    result["completed_pairs"] = std::move(completed);
    if (res.certificate) result["certificate"] = certificate_to_json(*res.certificate);
    ordered_json config{{"command", "find-subdivision"},
                        {"in", a.in},
                        {"t", a.t},
                        {"hub_rule", a.hub_rule},
                        {"hubs", a.hubs},
                        {"len_bound", a.len_bound},
                        {"len_c", round_sig12(a.len_c)},
                        {"retries", a.retries},
                        {"budget", a.budget},
                        {"seed", a.seed}};
    emit(make_artifact(config, result, a.seed), a.json_out);

    if (res.certificate) {
        std::cout << "rainbow TK_" << a.t << " with " << res.certificate->paths.size()
                  << " paths, length bound " << res.certificate->length_bound << "\n";
    } else {
        std::cout << "incomplete: " << res.completed_pairs.size() << "/"
                  << a.t * (a.t - 1) / 2 << " pairs joined\n";
    }
    return res.outcome == Outcome::Found ? kExitFound : kExitUnknown;
}

// -------------------------------------------------------------- expander-check

struct ExpanderArgs {
    std::string in;
    std::string mode = "exact";
    std::string eps_grid = "grid:20";
    int u_budget = 2000;
    uint64_t seed = 0;
    int threads = 1;
    std::string json_out;
};

int run_expander_check(const ExpanderArgs& a) {
    EdgeColoredGraph g = load_graph_file(a.in);
    FalsifyOptions opts;
    opts.eps_grid = parse_eps_grid(a.eps_grid);
    opts.seed = a.seed;
    opts.u_budget = a.u_budget;
    opts.threads = a.threads;
    if (a.mode == "exact") {
        opts.exhaustive_limit = std::max(g.n(), 1); // force exhaustive
        if (g.n() > 22)
            throw Error(ErrorCode::TooLargeForExact, "exact mode is limited to 22 vertices");
    } else if (a.mode == "sampled") {
        opts.exhaustive_limit = 0;
    } else {
        throw Error(ErrorCode::InvalidArgument, "--mode must be exact or sampled");
    }

    auto violation = falsify_robust_expander(g, opts);
    bool exhaustive = a.mode == "exact";

    ordered_json result;
    MinDegreeReport md = min_degree_check(g);
    result["min_degree"] = {{"delta", md.min_degree},
                            {"half_average_degree", round_sig12(md.half_average_degree)},
                            {"pass", md.pass}};
    result["exhaustive"] = exhaustive;
    if (violation) {
        result["outcome"] = "violation";
        result["certificate"] = violation_to_json(*violation, g);
    } else {
        result["outcome"] = exhaustive ? "robust-on-grid" : "no-violation-found";
    }
    ordered_json config{{"command", "expander-check"}, {"in", a.in},
                        {"mode", a.mode},              {"eps_grid", a.eps_grid},
                        {"u_budget", a.u_budget},      {"seed", a.seed}};
    emit(make_artifact(config, result, a.seed), a.json_out);

    if (violation) {
        std::cout << "violation at eps=" << violation->epsilon.str() << ", |U|="
                  << violation->witness_set.count() << ", |F|=" << violation->removed_edges.count()
                  << ", |N|=" << violation->achieved_neighborhood << "\n";
        return kExitFound;
    }
    std::cout << (exhaustive ? "no violation (exhaustive over grid)\n" : "no violation found\n");
    return exhaustive ? kExitAbsent : kExitUnknown;
}

// ------------------------------------------------------------------- simulate

struct SimulateArgs {
    std::string in;
    int root = 0;
    std::string kind = "thinning";
    std::string schedule = "desk";
    double kappa = 0, lambda = 0, beta = 0;
    int t = 3;
    int trials = 1;
    uint64_t seed = 0;
    std::string checkpoints;
    std::string csv_out;
    std::string json_out;
    std::string mode = "witness";
    uint64_t budget = 4'000'000;
    int threads = 1;
    std::string probs = "0.5,0.5,0.5,0.5";
    int stats_i = 0, stats_j = 5;
};

ThinningSchedule schedule_from_args(const SimulateArgs& a, int n) {
    ScheduleOverrides o;
    if (a.schedule == "desk") {
        o.kappa = 2.0;
        o.lambda = 2.0;
        o.beta = 2.0;
    } else if (a.schedule != "paper" && a.schedule != "custom") {
        throw Error(ErrorCode::InvalidArgument, "--schedule must be paper, desk or custom");
    }
    if (a.kappa > 0) o.kappa = a.kappa;
    if (a.lambda > 0) o.lambda = a.lambda;
    if (a.beta > 0) o.beta = a.beta;
    return ThinningSchedule::make(n, a.t, o);
}

std::string config_comment(const ordered_json& config) {
    return "# tool: rainbow\n# config: " + config.dump() + "\n";
}

int run_simulate(const SimulateArgs& a) {
    SearchBudget budget;
    budget.max_nodes = a.budget;
    budget.seed = a.seed;
    budget.mode = a.mode == "exact" ? SearchMode::Exact : SearchMode::Witness;

    if (a.kind == "colorstats") {
        // pure color-set statistics need no graph
        ThinningSchedule sched = [&] {
            if (!a.in.empty()) return schedule_from_args(a, load_graph_file(a.in).n());
            ScheduleOverrides o;
            o.kappa = a.kappa > 0 ? a.kappa : 1.0;
            o.lambda = a.lambda > 0 ? a.lambda : 2.0;
            o.beta = a.beta > 0 ? a.beta : 2.0;
            return ThinningSchedule::make(100, a.t, o);
        }();
        NestedStats st = nested_color_stats(sched, a.stats_i, a.stats_j,
                                            std::max(1000, a.trials), a.seed);
        ordered_json result;
        result["i"] = st.i;
        result["j"] = st.j;
        result["T"] = st.T;
        result["p"] = round_sig12(st.p);
        result["trials"] = st.trials;
        result["bound_i"] = round_sig12(st.bound_i);
        result["bound_ii"] = round_sig12(st.bound_ii);
        result["ii_hypothesis_ok"] = st.ii_hypothesis_ok;
        result["est_i_given_in_aj"] = round_sig12(st.est_i_given_in);
        result["est_i_given_notin_aj"] = round_sig12(st.est_i_given_notin);
        result["ci99_lo_i_given_notin_aj"] = round_sig12(st.ci99_lo_i_given_notin);
        result["closed_i_given_notin_aj"] = round_sig12(st.closed_i_given_notin);
        result["est_ii_given_notin_aj"] = round_sig12(st.est_ii_given_notin);
        result["ci99_lo_ii_given_notin_aj"] = round_sig12(st.ci99_lo_ii_given_notin);
        result["closed_ii_given_notin_aj"] = round_sig12(st.closed_ii_given_notin);
        ordered_json config{{"command", "simulate"}, {"kind", a.kind},   {"i", a.stats_i},
                            {"j", a.stats_j},        {"trials", a.trials}, {"seed", a.seed}};
        emit(make_artifact(config, result, a.seed), a.json_out);
        std::cout << "P[x in A_i | x not in A_j] ~= " << st.est_i_given_notin << " vs bound "
                  << st.bound_i << "\n";
        return kExitFound;
    }

    EdgeColoredGraph g = load_graph_file(a.in);
    ThinningSchedule sched = schedule_from_args(a, g.n());
    ordered_json config{{"command", "simulate"},
                        {"kind", a.kind},
                        {"in", a.in},
                        {"root", a.root},
                        {"schedule", a.schedule},
                        {"kappa", round_sig12(sched.kappa)},
                        {"lambda", round_sig12(sched.lambda)},
                        {"beta", round_sig12(sched.beta)},
                        {"K", sched.K},
                        {"L", sched.L},
                        {"T", sched.T},
                        {"trials", a.trials},
                        {"seed", a.seed},
                        {"mode", a.mode}};

    if (a.kind == "sprinkling") {
        std::vector<double> probs = parse_doubles(a.probs);
        std::ostringstream csv;
        csv << config_comment(config);
        csv << "trial,round,q,sampled,rn,added,b_size\n";
        std::vector<SprinklingTrace> traces(a.trials);
        parallel_for(a.trials, a.threads, [&](int64_t i) {
            traces[i] = run_sprinkling(g, a.root, g.empty_vertex_set(), g.empty_color_set(), probs,
                                       derive_seed(a.seed, {static_cast<uint64_t>(i)}));
        });
        int stalled = 0;
        for (int i = 0; i < a.trials; ++i) {
            for (size_t r = 0; r < traces[i].rounds.size(); ++r) {
                const auto& row = traces[i].rounds[r];
                char buf[160];
                std::snprintf(buf, sizeof(buf), "%d,%zu,%.12g,%d,%d,%d,%d\n", i, r + 1, row.q,
                              row.sampled_colors, row.rn_size, row.added, row.b_size);
                csv << buf;
            }
            if (traces[i].stalled) ++stalled;
        }
        if (!a.csv_out.empty()) write_text_file(a.csv_out, csv.str());
        ordered_json result;
        result["trials"] = a.trials;
        result["stalled"] = stalled;
        emit(make_artifact(config, result, a.seed), a.json_out);
        std::cout << "sprinkling: " << a.trials - stalled << "/" << a.trials << " trials grew\n";
        return kExitFound;
    }

    if (a.kind != "thinning")
        throw Error(ErrorCode::InvalidArgument, "--kind must be thinning, sprinkling or colorstats");

    std::vector<long long> checkpoints;
    if (a.checkpoints == "all") {
        for (long long s = 0; s <= sched.max_steps(); ++s) checkpoints.push_back(s);
    } else if (!a.checkpoints.empty()) {
        for (int v : parse_ints(a.checkpoints)) checkpoints.push_back(v);
    }

    ThinningAggregate agg =
        aggregate_thinning(g, a.root, sched, a.trials, a.seed, budget, g.empty_vertex_set(),
                           g.empty_color_set(), a.threads, checkpoints);

    std::ostringstream csv;
    csv << config_comment(config);
    csv << "trial,step,a_size,rp_size,mode,nodes\n";
    for (int i = 0; i < a.trials; ++i) {
        for (const auto& cp : agg.traces[i].checkpoints) {
            char buf[160];
            std::snprintf(buf, sizeof(buf), "%d,%lld,%d,%d,%s,%llu\n", i, cp.step, cp.a_size,
                          cp.rp_size, a.mode.c_str(),
                          static_cast<unsigned long long>(cp.nodes));
            csv << buf;
        }
    }
    if (!a.csv_out.empty()) write_text_file(a.csv_out, csv.str());

    ordered_json result;
    result["trials"] = a.trials;
    auto means = ordered_json::array();
    for (size_t s = 0; s < agg.steps.size(); ++s)
        means.push_back({{"step", agg.steps[s]},
                         {"mean_a", round_sig12(agg.mean_a[s])},
                         {"mean_rp", round_sig12(agg.mean_rp[s])}});
    result["means"] = std::move(means);
    auto bad = ordered_json::array();
    for (int k = 1; k < sched.K; ++k)
        bad.push_back({{"k", k},
                       {"rate", round_sig12(agg.bad_event_rate[k - 1])},
                       {"f_k", round_sig12(sched.f(k))},
                       {"f_km1", round_sig12(sched.f(k - 1))}});
    result["bad_events"] = std::move(bad);
    auto ratios = ordered_json::array();
    for (const auto& row : agg.ratios)
        ratios.push_back({{"k", row.k},
                          {"j", row.j},
                          {"measured", round_sig12(row.measured)},
                          {"target_ratio", round_sig12(row.target_ratio)}});
    result["expansion_ratios"] = std::move(ratios);
    emit(make_artifact(config, result, a.seed), a.json_out);
    std::cout << "thinning: " << a.trials << " trials, K=" << sched.K << " L=" << sched.L << "\n";
    return kExitFound;
}

// ------------------------------------------------------------------------ dim

struct DimArgs {
    std::string group;
    std::string set;
    std::string ints;
    std::string mode = "exact";
    double c = 1.0;
    std::string json_out;
};

int run_dim(const DimArgs& a) {
    FiniteGroup g = [&] {
        if (!a.ints.empty()) {
            std::vector<int> xs = parse_ints(a.ints);
            int mx = 0;
            for (int x : xs) {
                if (x < 0) throw Error(ErrorCode::InvalidArgument, "--ints expects non-negative values");
                mx = std::max(mx, x);
            }
            return FiniteGroup::cyclic(embedding_modulus(mx, static_cast<int>(xs.size())));
        }
        return group_from_flag(a.group);
    }();
    std::vector<int> set = a.ints.empty() ? parse_element_list(g, expand_set_arg(a.set))
                                          : parse_ints(a.ints);
    DimensionMode mode = a.mode == "greedy" ? DimensionMode::Greedy : DimensionMode::Exact;
    DimensionReport rep = additive_dimension(g, set, mode);

    ordered_json result;
    result["group"] = g.describe();
    result["set_size"] = rep.set_size;
    result["dimension"] = rep.dimension;
    result["witness"] = rep.witness;
    result["mode"] = a.mode;
    result["lower_bound_only"] = rep.lower_bound_only;
    result["comparison"] = {{"c", round_sig12(a.c)},
                            {"value", round_sig12(rep.bound_value(a.c))}};
    ordered_json config{{"command", "dim"}, {"group", a.group}, {"set", a.set},
                        {"ints", a.ints},   {"mode", a.mode},   {"c", round_sig12(a.c)}};
    emit(make_artifact(config, result, 0), a.json_out);
    std::cout << "dim = " << rep.dimension << (rep.lower_bound_only ? " (lower bound)" : "")
              << "\n";
    return kExitFound;
}

// ------------------------------------------------------------------------ bhg

struct BhgArgs {
    int n = 0;
    std::string set;
    int h = 0;
    int g = 1;
    bool dichotomy = false;
    uint64_t budget = 4'000'000;
    uint64_t seed = 0;
    std::string json_out;
};

int run_bhg(const BhgArgs& a) {
    std::vector<int> b = parse_ints(a.set);
    ordered_json config{{"command", "bhg"}, {"n", a.n}, {"set", a.set},   {"h", a.h},
                        {"g", a.g},         {"dichotomy", a.dichotomy},   {"seed", a.seed}};

    if (a.dichotomy) {
        SearchBudget budget;
        budget.max_nodes = a.budget;
        budget.seed = a.seed;
        BhgDichotomy d = bhg_dichotomy(a.n, b, budget);
        ordered_json result;
        if (d.kind == BhgDichotomy::Kind::FoundCertificate) {
            result["outcome"] = "certificate";
            result["h0"] = d.h0;
            result["b_prime"] = d.b_prime;
            ordered_json cert;
            cert["type"] = "alternating-sum";
            cert["modulus"] = d.certificate->modulus;
            cert["elements"] = d.certificate->elements;
            cert["signs"] = d.certificate->signs;
            result["relation"] = std::move(cert);
            result["certificate"] = cycle_to_json(*d.cycle);
        } else {
            result["outcome"] =
                d.kind == BhgDichotomy::Kind::SmallReport ? "small-report" : "budget-exhausted";
            result["b_size"] = d.b_size;
            result["log_n"] = round_sig12(d.log_n);
            result["exhaustive"] = d.exhaustive;
        }
        emit(make_artifact(config, result, a.seed), a.json_out);
        if (d.kind == BhgDichotomy::Kind::FoundCertificate) {
            std::cout << "h0 = " << d.h0 << ", |B'| = " << d.b_prime.size() << "\n";
            return kExitFound;
        }
        if (d.kind == BhgDichotomy::Kind::SmallReport) {
            std::cout << "no rainbow cycle: |B| = " << d.b_size << " vs log n = " << d.log_n
                      << "\n";
            return kExitAbsent;
        }
        std::cout << "budget exhausted\n";
        return kExitUnknown;
    }

    if (a.h < 2) throw Error(ErrorCode::InvalidArgument, "--h must be >= 2 (or use --dichotomy)");
    BhgResult res = is_bhg(a.n, b, a.h, a.g);
    ordered_json result;
    result["is_bhg"] = res.ok;
    if (!res.ok) {
        result["violating_target"] = *res.violating_target;
        result["solutions"] = res.solutions;
    }
    emit(make_artifact(config, result, a.seed), a.json_out);
    std::cout << (res.ok ? "B_h[g] holds\n" : "B_h[g] fails\n");
    return res.ok ? kExitFound : kExitAbsent;
}

// ------------------------------------------------------------------------ conv

struct ConvArgs {
    std::string group;
    std::string set_a, set_b;
    long long sigma = 1;
    std::string json_out;
};

int run_conv(const ConvArgs& a) {
    FiniteGroup g = group_from_flag(a.group);
    ConvolutionReport rep =
        convolution_threshold_set(g, parse_element_list(g, expand_set_arg(a.set_a)),
                                  parse_element_list(g, expand_set_arg(a.set_b)), a.sigma);
    ordered_json result;
    result["group"] = g.describe();
    result["sigma"] = a.sigma;
    result["threshold_set"] = rep.threshold_set;
    auto counts = ordered_json::array();
    for (int x = 0; x < static_cast<int>(rep.counts.size()); ++x) {
        if (rep.counts[x] > 0) counts.push_back({x, rep.counts[x]});
    }
    result["counts"] = std::move(counts);
    ordered_json config{{"command", "conv"}, {"group", a.group}, {"a", a.set_a},
                        {"b", a.set_b},      {"sigma", a.sigma}};
    emit(make_artifact(config, result, 0), a.json_out);
    std::cout << "|S| = " << rep.threshold_set.size() << "\n";
    return kExitFound;
}

// -------------------------------------------------------------------- validate

struct ValidateArgs {
    std::string in;
    std::string cert;
};

int run_validate(const ValidateArgs& a) {
    EdgeColoredGraph g = load_graph_file(a.in);
    std::ifstream in(a.cert);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + a.cert);
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::FormatError, std::string("bad certificate JSON: ") + e.what());
    }
    ValidationResult res = validate_certificate_json(j, g);
    if (res.ok) {
        std::cout << "valid\n";
        return kExitFound;
    }
    std::cout << "invalid: " << res.reason << (res.detail.empty() ? "" : " (" + res.detail + ")")
              << "\n";
    return kExitAbsent;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow substructures in properly edge-colored graphs"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);
    int threads = env_threads();
    app.add_option("--threads", threads, "worker threads (env RAINBOW_THREADS)");

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "generate a group-based construction");
    construct->add_option("--cayley", ca.cayley, "Cayley sum graph over this group");
    construct->add_option("--sidon", ca.sidon, "Sidon difference construction over this group");
    construct->add_option("--bhg", ca.bhg_n, "circulant bipartite construction over Z_n");
    construct->add_option("--doubling", ca.doubling, "doubling construction over this group");
    construct->add_option("--conv", ca.conv, "convolution construction over this group");
    construct->add_option("--gens", ca.gens, "generator list (cayley)");
    construct->add_option("--set", ca.set, "element list (sidon/bhg)");
    construct->add_option("--seta", ca.set_a, "left set (doubling/conv)");
    construct->add_option("--setb", ca.set_b, "right set (doubling/conv)");
    construct->add_option("--colors", ca.colors, "color set (conv)");
    construct->add_option("--out", ca.out, "output file (default stdout)");
    construct->add_flag("--json", ca.json, "emit JSON instead of text format");

    FindCycleArgs fc;
    auto* find_cycle = app.add_subcommand("find-cycle", "search for a rainbow cycle");
    find_cycle->add_option("--in", fc.in, "graph file")->required();
    find_cycle->add_option("--max-len", fc.max_len, "length cap (default: palette size)");
    find_cycle->add_flag("--witness", fc.witness, "incomplete witness mode");
    bool fc_exact = false;
    find_cycle->add_flag("--exact", fc_exact, "complete search (the default)");
    find_cycle->add_option("--budget", fc.budget, "search-state budget");
    find_cycle->add_option("--seed", fc.seed, "seed");
    find_cycle->add_option("--json-out", fc.json_out, "artifact file");

    FindSubdivArgs fs;
    auto* find_subdiv = app.add_subcommand("find-subdivision", "search for a rainbow TK_t");
    find_subdiv->add_option("--in", fs.in, "graph file")->required();
    find_subdiv->add_option("--threads", threads, "worker threads");
    find_subdiv->add_option("--t", fs.t, "branch vertices")->required();
    find_subdiv->add_option("--hub-rule", fs.hub_rule, "maxdeg | random | given");
    find_subdiv->add_option("--hubs", fs.hubs, "hub list for --hub-rule given");
    find_subdiv->add_option("--len-bound", fs.len_bound, "per-path length bound (0: formula)");
    find_subdiv->add_option("--len-c", fs.len_c, "constant c in ceil(c log n loglog n)");
    find_subdiv->add_option("--retries", fs.retries, "color-split retries per pair");
    find_subdiv->add_option("--budget", fs.budget, "search-state budget");
    find_subdiv->add_option("--seed", fs.seed, "seed");
    find_subdiv->add_option("--json-out", fs.json_out, "artifact file");

    ExpanderArgs ea;
    auto* expander = app.add_subcommand("expander-check", "falsify robust sublinear expansion");
    expander->add_option("--in", ea.in, "graph file")->required();
    expander->add_option("--threads", threads, "worker threads");
    expander->add_option("--mode", ea.mode, "exact | sampled");
    expander->add_option("--eps-grid", ea.eps_grid, "grid:N or comma list");
    expander->add_option("--u-budget", ea.u_budget, "sampled candidate count");
    expander->add_option("--seed", ea.seed, "seed");
    expander->add_option("--json-out", ea.json_out, "artifact file");

    SimulateArgs sa;
    auto* simulate = app.add_subcommand("simulate", "thinning / sprinkling / color statistics");
    simulate->add_option("--in", sa.in, "graph file");
    simulate->add_option("--threads", threads, "worker threads");
    simulate->add_option("--root", sa.root, "root vertex");
    simulate->add_option("--kind", sa.kind, "thinning | sprinkling | colorstats");
    simulate->add_option("--schedule", sa.schedule, "paper | desk | custom");
    simulate->add_option("--kappa", sa.kappa, "override kappa");
    simulate->add_option("--lambda", sa.lambda, "override lambda");
    simulate->add_option("--beta", sa.beta, "override beta");
    simulate->add_option("--t", sa.t, "clique parameter for the schedule");
    simulate->add_option("--trials", sa.trials, "number of trials");
    simulate->add_option("--seed", sa.seed, "master seed");
    simulate->add_option("--checkpoints", sa.checkpoints, "'all' or comma list of steps");
    simulate->add_option("--csv-out", sa.csv_out, "CSV trace file");
    simulate->add_option("--json-out", sa.json_out, "artifact file");
    simulate->add_option("--mode", sa.mode, "witness | exact RP evaluation");
    simulate->add_option("--budget", sa.budget, "RP search budget");
    simulate->add_option("--probs", sa.probs, "sprinkling round probabilities");
    simulate->add_option("--stats-i", sa.stats_i, "colorstats index i");
    simulate->add_option("--stats-j", sa.stats_j, "colorstats index j");

    DimArgs da;
    auto* dim = app.add_subcommand("dim", "additive dimension via dissociated subsets");
    dim->add_option("--group", da.group, "group spec");
    dim->add_option("--set", da.set, "element list");
    dim->add_option("--ints", da.ints, "integer set, embedded into Z_N automatically");
    dim->add_option("--mode", da.mode, "exact | greedy");
    dim->add_option("--c", da.c, "comparison constant");
    dim->add_option("--json-out", da.json_out, "artifact file");

    BhgArgs ba;
    auto* bhg = app.add_subcommand("bhg", "B_h[g] checks and the rainbow-cycle dichotomy");
    bhg->add_option("--n", ba.n, "modulus")->required();
    bhg->add_option("--set", ba.set, "residue list")->required();
    bhg->add_option("--h", ba.h, "h (sum length)");
    bhg->add_option("--g", ba.g, "g (solution cap)");
    bhg->add_flag("--dichotomy", ba.dichotomy, "run the rainbow-cycle dichotomy");
    bhg->add_option("--budget", ba.budget, "search budget");
    bhg->add_option("--seed", ba.seed, "seed");
    bhg->add_option("--json-out", ba.json_out, "artifact file");

    ConvArgs cva;
    auto* conv = app.add_subcommand("conv", "convolution threshold sets");
    conv->add_option("--group", cva.group, "group spec")->required();
    conv->add_option("--seta", cva.set_a, "set A")->required();
    conv->add_option("--setb", cva.set_b, "set B")->required();
    conv->add_option("--sigma", cva.sigma, "threshold");
    conv->add_option("--json-out", cva.json_out, "artifact file");

    ValidateArgs va;
    auto* validate = app.add_subcommand("validate", "revalidate an emitted certificate");
    validate->add_option("--in", va.in, "graph file")->required();
    validate->add_option("--cert", va.cert, "certificate JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*construct) return run_construct(ca);
        if (*find_cycle) return run_find_cycle(fc);
        if (*find_subdiv) {
            fs.threads = threads;
            return run_find_subdivision(fs);
        }
        if (*expander) {
            ea.threads = threads;
            return run_expander_check(ea);
        }
        if (*simulate) {
            sa.threads = threads;
            return run_simulate(sa);
        }
        if (*dim) return run_dim(da);
        if (*bhg) return run_bhg(ba);
        if (*conv) return run_conv(cva);
        if (*validate) return run_validate(va);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
