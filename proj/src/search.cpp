#include "rainbow/search.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "rainbow/parallel.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

namespace {

void check_budget(const SearchBudget& b) {
    if (b.max_nodes == 0 || b.max_retries <= 0)
        throw Error(ErrorCode::InvalidArgument, "budgets must be positive");
}

// Maps the usable colors (allowed, not forbidden, present in g) to bit
// positions for the (vertex, used-color-set) search state.
struct ColorIndex {
    std::vector<int> bit_of;
    int bits = 0;
};

ColorIndex index_colors(const EdgeColoredGraph& g, const ColorSet& allowed,
                        const ColorSet* forbidden) {
    ColorIndex ci;
    ci.bit_of.assign(g.color_universe(), -1);
    for (int c = 0; c < g.color_universe(); ++c) {
        if (!g.used_colors().test(c)) continue;
        if (c >= allowed.universe() || !allowed.test(c)) continue;
        if (forbidden && c < forbidden->universe() && forbidden->test(c)) continue;
        ci.bit_of[c] = ci.bits++;
    }
    if (ci.bits > 30)
        throw Error(ErrorCode::TooLargeForExact,
                    "exact rainbow search supports at most 30 usable colors, got " +
                        std::to_string(ci.bits));
    return ci;
}

// Drops the loops of a rainbow walk at repeated vertices; the survivors are
// a subset of the walk's edges, so colors stay distinct and allowed.
RainbowPath shortcut_walk(const std::vector<int>& vertices, const std::vector<int>& colors) {
    RainbowPath p;
    std::unordered_map<int, int> pos;
    p.vertices.push_back(vertices[0]);
    pos[vertices[0]] = 0;
    for (size_t i = 1; i < vertices.size(); ++i) {
        int v = vertices[i];
        auto it = pos.find(v);
        if (it != pos.end()) {
            while (static_cast<int>(p.vertices.size()) - 1 > it->second) {
                pos.erase(p.vertices.back());
                p.vertices.pop_back();
                p.colors.pop_back();
            }
        } else {
            p.vertices.push_back(v);
            p.colors.push_back(colors[i - 1]);
            pos[v] = static_cast<int>(p.vertices.size()) - 1;
        }
    }
    return p;
}

struct ExactBfs {
    bool exhausted = false;
    uint64_t nodes = 0;
    VertexSet reached;
    std::optional<RainbowPath> target_path;
};

// Breadth-first search over (vertex, used-color-set) states. A rainbow walk
// shortcuts to a rainbow path with a color subset, so walk states give both
// exact reachability and valid returned paths.
ExactBfs exact_bfs(const EdgeColoredGraph& g, int x, const ColorIndex& ci,
                   const VertexSet& forbidden_vertices, int max_depth, uint64_t max_nodes,
                   int target) {
    ExactBfs out;
    out.reached = VertexSet(g.n());
    out.reached.set(x);
    if (target == x) {
        out.target_path = RainbowPath{{x}, {}, false};
        return out;
    }

    const int n = g.n();
    const uint64_t total_states = static_cast<uint64_t>(n) << ci.bits;
    const bool flat = total_states <= (1ull << 27);
    std::vector<bool> seen_flat;
    std::unordered_set<uint64_t> seen_hash;
    if (flat) seen_flat.assign(total_states, false);

    auto visit = [&](uint64_t key) -> bool { // returns true if newly visited
        if (flat) {
            if (seen_flat[key]) return false;
            seen_flat[key] = true;
            return true;
        }
        return seen_hash.insert(key).second;
    };

    const bool track_parents = target >= 0;
    std::unordered_map<uint64_t, std::pair<uint64_t, int>> parent; // key -> (prev key, edge)

    auto make_key = [n](uint32_t mask, int v) {
        return static_cast<uint64_t>(mask) * n + v;
    };

    std::vector<uint64_t> frontier{make_key(0, x)};
    visit(frontier[0]);

    auto reconstruct = [&](uint64_t key) {
        std::vector<int> vs, cs;
        uint64_t k = key;
        while (true) {
            vs.push_back(static_cast<int>(k % n));
            auto it = parent.find(k);
            if (it == parent.end()) break;
            cs.push_back(g.edges()[it->second.second].color);
            k = it->second.first;
        }
        std::reverse(vs.begin(), vs.end());
        std::reverse(cs.begin(), cs.end());
        return shortcut_walk(vs, cs);
    };

    for (int depth = 0; depth < max_depth && !frontier.empty(); ++depth) {
        std::vector<uint64_t> next;
        for (uint64_t key : frontier) {
            if (++out.nodes > max_nodes) {
                out.exhausted = true;
                return out;
            }
            int v = static_cast<int>(key % n);
            uint32_t mask = static_cast<uint32_t>(key / n);
            for (const auto& inc : g.adj(v)) {
                int bit = ci.bit_of[inc.color];
                if (bit < 0 || (mask >> bit & 1)) continue;
                if (forbidden_vertices.test(inc.to)) continue;
                uint64_t nk = make_key(mask | (1u << bit), inc.to);
                if (!visit(nk)) continue;
                if (track_parents) parent[nk] = {key, inc.edge};
                out.reached.set(inc.to);
                if (inc.to == target) {
                    out.target_path = reconstruct(nk);
                    return out;
                }
                next.push_back(nk);
            }
        }
        frontier = std::move(next);
    }
    return out;
}

RpResult witness_rp(const EdgeColoredGraph& g, int x, const ColorSet& allowed,
                    const VertexSet& forbidden_vertices, const ColorSet* forbidden_colors) {
    RpResult r;
    r.members = VertexSet(g.n());
    r.witness.assign(g.n(), std::nullopt);
    r.members.set(x);
    r.witness[x] = RainbowPath{{x}, {}, false};
    std::vector<int> queue{x};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        ++r.nodes;
        const RainbowPath& wu = *r.witness[u];
        for (const auto& inc : g.adj(u)) {
            if (r.members.test(inc.to) || forbidden_vertices.test(inc.to)) continue;
            if (inc.color >= allowed.universe() || !allowed.test(inc.color)) continue;
            if (forbidden_colors && inc.color < forbidden_colors->universe() &&
                forbidden_colors->test(inc.color))
                continue;
            if (std::find(wu.colors.begin(), wu.colors.end(), inc.color) != wu.colors.end())
                continue;
            RainbowPath wv = wu;
            wv.vertices.push_back(inc.to);
            wv.colors.push_back(inc.color);
            r.members.set(inc.to);
            r.witness[inc.to] = std::move(wv);
            queue.push_back(inc.to);
        }
    }
    r.complete = false;
    return r;
}

} // namespace

ValidationResult validate_path(const EdgeColoredGraph& g, const RainbowPath& p) {
    if (p.vertices.empty()) return {false, "NotAPath", "no vertices"};
    if (p.colors.size() + 1 != p.vertices.size())
        return {false, "NotAPath", "color sequence length must be vertex count - 1"};
    for (int v : p.vertices) {
        if (v < 0 || v >= g.n()) return {false, "NotAPath", "vertex out of range"};
    }
    if (p.is_cycle) {
        if (p.length() < 3) return {false, "NotAPath", "cycles need length >= 3"};
        if (p.vertices.front() != p.vertices.back())
            return {false, "NotAPath", "cycle vertex sequence must be closed"};
    }
    // distinctness (cycle: closing vertex repeats by design)
    std::vector<int> vs(p.vertices.begin(), p.vertices.end() - (p.is_cycle ? 1 : 0));
    std::vector<int> sorted_vs = vs;
    std::sort(sorted_vs.begin(), sorted_vs.end());
    if (std::adjacent_find(sorted_vs.begin(), sorted_vs.end()) != sorted_vs.end())
        return {false, "NotAPath", "repeated vertex"};
    std::vector<int> cs = p.colors;
    std::sort(cs.begin(), cs.end());
    if (std::adjacent_find(cs.begin(), cs.end()) != cs.end())
        return {false, "ColorReuse", "repeated color within the path"};
    for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        auto e = g.edge_index(p.vertices[i], p.vertices[i + 1]);
        if (!e) return {false, "NotAPath", "consecutive vertices not adjacent"};
        if (g.edges()[*e].color != p.colors[i])
            return {false, "NotAPath", "stated color differs from the edge color"};
    }
    return {true, "", ""};
}

PathSearchResult rainbow_path(const EdgeColoredGraph& g, int s, int t, const ColorSet& allowed,
                              const VertexSet& forbidden_vertices, int max_len,
                              const SearchBudget& budget) {
    check_budget(budget);
    if (s < 0 || s >= g.n() || t < 0 || t >= g.n() || s == t)
        throw Error(ErrorCode::InvalidArgument, "need distinct in-range endpoints");
    if (forbidden_vertices.test(s) || forbidden_vertices.test(t))
        throw Error(ErrorCode::InvalidArgument, "endpoints must not be forbidden");
    if (max_len < 1) throw Error(ErrorCode::InvalidArgument, "max_len must be >= 1");

    PathSearchResult out;
    if (budget.mode == SearchMode::Witness) {
        RpResult rp = witness_rp(g, s, allowed, forbidden_vertices, nullptr);
        out.nodes = rp.nodes;
        if (rp.members.test(t) && rp.witness[t]->length() <= max_len) {
            out.outcome = Outcome::Found;
            out.path = rp.witness[t];
        } else {
            out.outcome = Outcome::Unknown;
        }
        return out;
    }

    ColorIndex ci = index_colors(g, allowed, nullptr);
    ExactBfs bfs = exact_bfs(g, s, ci, forbidden_vertices, max_len, budget.max_nodes, t);
    out.nodes = bfs.nodes;
    if (bfs.target_path) {
        out.outcome = Outcome::Found;
        out.path = std::move(bfs.target_path);
    } else {
        out.outcome = bfs.exhausted ? Outcome::Unknown : Outcome::Absent;
    }
    return out;
}

RpResult rp_set(const EdgeColoredGraph& g, int x, const ColorSet& allowed,
                const VertexSet& forbidden_vertices, const ColorSet& forbidden_colors,
                const SearchBudget& budget) {
    check_budget(budget);
    if (x < 0 || x >= g.n()) throw Error(ErrorCode::InvalidArgument, "root out of range");
    if (forbidden_vertices.test(x))
        throw Error(ErrorCode::InvalidArgument, "root must not be forbidden");

    if (budget.mode == SearchMode::Witness)
        return witness_rp(g, x, allowed, forbidden_vertices, &forbidden_colors);

    ColorIndex ci = index_colors(g, allowed, &forbidden_colors);
    ExactBfs bfs = exact_bfs(g, x, ci, forbidden_vertices, g.n() - 1 < 0 ? 0 : g.n() - 1,
                             budget.max_nodes, -1);
    RpResult r;
    r.members = std::move(bfs.reached);
    r.complete = !bfs.exhausted;
    r.nodes = bfs.nodes;
    return r;
}

CycleSearchResult find_rainbow_cycle(const EdgeColoredGraph& g, int max_len,
                                     const SearchBudget& budget) {
    check_budget(budget);
    if (max_len < 3) throw Error(ErrorCode::InvalidArgument, "cycles need max_len >= 3");
    CycleSearchResult out;
    int cap = std::min(max_len, g.palette_size());
    if (cap < 3) {
        // any cycle has >= 3 edges, hence needs >= 3 distinct colors
        out.outcome = Outcome::Absent;
        return out;
    }

    uint64_t remaining = budget.max_nodes;
    VertexSet no_forbidden(g.n());
    for (int ei = 0; ei < g.m(); ++ei) {
        const Edge& e = g.edges()[ei];
        ColorSet allowed = g.used_colors();
        allowed.reset(e.color);

        if (budget.mode == SearchMode::Witness) {
            RpResult rp = witness_rp(g, e.u, allowed, no_forbidden, nullptr);
            out.nodes += rp.nodes;
            if (rp.members.test(e.v) && rp.witness[e.v]->length() <= cap - 1 &&
                rp.witness[e.v]->length() >= 2) {
                RainbowPath cycle = *rp.witness[e.v];
                cycle.vertices.push_back(e.u);
                cycle.colors.push_back(e.color);
                cycle.is_cycle = true;
                out.outcome = Outcome::Found;
                out.cycle = std::move(cycle);
                return out;
            }
            continue;
        }

        if (remaining == 0) {
            out.outcome = Outcome::Unknown;
            return out;
        }
        ColorIndex ci = index_colors(g, allowed, nullptr);
        ExactBfs bfs = exact_bfs(g, e.u, ci, no_forbidden, cap - 1, remaining, e.v);
        out.nodes += bfs.nodes;
        remaining = bfs.nodes >= remaining ? 0 : remaining - bfs.nodes;
        if (bfs.target_path) {
            RainbowPath cycle = *bfs.target_path;
            cycle.vertices.push_back(e.u);
            cycle.colors.push_back(e.color);
            cycle.is_cycle = true;
            auto check = validate_path(g, cycle);
            if (!check.ok)
                throw Error(ErrorCode::VerificationFailed, "cycle failed validation: " + check.detail);
            out.outcome = Outcome::Found;
            out.cycle = std::move(cycle);
            return out;
        }
        if (bfs.exhausted) {
            out.outcome = Outcome::Unknown;
            return out;
        }
    }
    out.outcome = budget.mode == SearchMode::Witness ? Outcome::Unknown : Outcome::Absent;
    return out;
}

std::vector<std::pair<int, int>> SubdivisionCertificate::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < t; ++i) {
        for (int j = i + 1; j < t; ++j) out.emplace_back(i, j);
    }
    return out;
}

ValidationResult validate_certificate(const SubdivisionCertificate& cert,
                                      const EdgeColoredGraph& g) {
    if (cert.t < 2) return {false, "HubMismatch", "t must be >= 2"};
    if (static_cast<int>(cert.hubs.size()) != cert.t)
        return {false, "HubMismatch", "hub count differs from t"};
    std::vector<int> hs = cert.hubs;
    std::sort(hs.begin(), hs.end());
    if (std::adjacent_find(hs.begin(), hs.end()) != hs.end())
        return {false, "HubMismatch", "hubs must be distinct"};
    for (int h : cert.hubs) {
        if (h < 0 || h >= g.n()) return {false, "HubMismatch", "hub out of range"};
    }
    auto pair_list = cert.pairs();
    if (cert.paths.size() != pair_list.size())
        return {false, "PairMissing", "expected " + std::to_string(pair_list.size()) + " paths"};

    VertexSet hub_set = VertexSet::from(g.n(), cert.hubs);
    VertexSet used_internal(g.n());
    std::vector<int> all_colors;
    for (size_t k = 0; k < pair_list.size(); ++k) {
        const RainbowPath& p = cert.paths[k];
        auto pv = validate_path(g, p);
        if (!pv.ok) return {false, "PathInvalid", "pair " + std::to_string(k) + ": " + pv.detail};
        if (p.is_cycle) return {false, "PathInvalid", "certificate paths must be open paths"};
        if (p.length() < 1) return {false, "PathInvalid", "empty path"};
        if (p.length() > cert.length_bound)
            return {false, "LengthExceeded",
                    "pair " + std::to_string(k) + " has length " + std::to_string(p.length())};
        int a = cert.hubs[pair_list[k].first];
        int b = cert.hubs[pair_list[k].second];
        bool fwd = p.vertices.front() == a && p.vertices.back() == b;
        bool rev = p.vertices.front() == b && p.vertices.back() == a;
        if (!fwd && !rev)
            return {false, "EndpointMismatch", "pair " + std::to_string(k) + " endpoints wrong"};
        for (size_t i = 1; i + 1 < p.vertices.size(); ++i) {
            int v = p.vertices[i];
            if (hub_set.test(v))
                return {false, "HubViolation",
                        "path for pair " + std::to_string(k) + " passes through hub " +
                            std::to_string(v)};
            if (used_internal.test(v))
                return {false, "DisjointnessViolation",
                        "vertex " + std::to_string(v) + " is internal to two paths"};
            used_internal.set(v);
        }
        all_colors.insert(all_colors.end(), p.colors.begin(), p.colors.end());
    }
    std::sort(all_colors.begin(), all_colors.end());
    auto dup = std::adjacent_find(all_colors.begin(), all_colors.end());
    if (dup != all_colors.end())
        return {false, "ColorReuse", "color " + std::to_string(*dup) + " appears twice"};
    return {true, "", ""};
}

int default_length_bound(int n, double c) {
    double ln = std::log(static_cast<double>(std::max(n, 2)));
    double lln = std::log(std::max(ln, 1.001));
    return std::max(2, static_cast<int>(std::ceil(c * ln * lln)));
}

namespace {

struct Attempt {
    std::optional<RainbowPath> path;
    uint64_t nodes = 0;
};

Attempt attempt_pair(const EdgeColoredGraph& g, int a, int b, const VertexSet& pair_phi0,
                     const ColorSet& avail, int len_bound, uint64_t seed) {
    Attempt out;
    Rng rng(seed);
    ColorSet a0(g.color_universe());
    avail.for_each([&](int c) {
        if (rng.bernoulli(0.5)) a0.set(c);
    });
    ColorSet comp = avail;
    comp.subtract(a0);

    RpResult ra = witness_rp(g, a, a0, pair_phi0, nullptr);
    RpResult rb = witness_rp(g, b, comp, pair_phi0, nullptr);
    out.nodes = ra.nodes + rb.nodes;
    VertexSet meet = ra.members & rb.members;
    if (meet.none()) return out;

    int best_u = -1, best_len = INT_MAX;
    meet.for_each([&](int u) {
        int len = ra.witness[u]->length() + rb.witness[u]->length();
        if (len < best_len) {
            best_len = len;
            best_u = u;
        }
    });
    const RainbowPath& wa = *ra.witness[best_u];
    const RainbowPath& wb = *rb.witness[best_u];

    // truncate both witnesses at the earliest vertex of wa that wb also
    // visits; the segments then share only that vertex
    VertexSet in_wb = VertexSet::from(g.n(), wb.vertices);
    int pos_a = 0;
    while (!in_wb.test(wa.vertices[pos_a])) ++pos_a;
    int w = wa.vertices[pos_a];
    int pos_b = 0;
    while (wb.vertices[pos_b] != w) ++pos_b;

    RainbowPath p;
    p.vertices.assign(wa.vertices.begin(), wa.vertices.begin() + pos_a + 1);
    p.colors.assign(wa.colors.begin(), wa.colors.begin() + pos_a);
    for (int j = pos_b - 1; j >= 0; --j) {
        p.vertices.push_back(wb.vertices[j]);
        p.colors.push_back(wb.colors[j]);
    }
    if (p.length() < 1 || p.length() > len_bound) return out;
    out.path = std::move(p);
    return out;
}

} // namespace

SubdivisionResult find_subdivision(const EdgeColoredGraph& g, int t, const SearchBudget& budget,
                                   const SubdivisionOptions& opts) {
    check_budget(budget);
    if (t < 2) throw Error(ErrorCode::InvalidArgument, "t must be >= 2");
    if (g.n() < t) throw Error(ErrorCode::InvalidArgument, "graph has fewer than t vertices");

    std::vector<int> hubs;
    switch (opts.hub_rule) {
        case HubRule::MaxDegree: {
            std::vector<int> ids(g.n());
            for (int v = 0; v < g.n(); ++v) ids[v] = v;
            std::stable_sort(ids.begin(), ids.end(), [&](int x, int y) {
                return g.degree(x) != g.degree(y) ? g.degree(x) > g.degree(y) : x < y;
            });
            hubs.assign(ids.begin(), ids.begin() + t);
            std::sort(hubs.begin(), hubs.end());
            break;
        }
        case HubRule::Random: {
            Rng rng(derive_seed(budget.seed, {0x4855ull}));
            std::vector<int> ids(g.n());
            for (int v = 0; v < g.n(); ++v) ids[v] = v;
            rng.shuffle(ids);
            hubs.assign(ids.begin(), ids.begin() + t);
            std::sort(hubs.begin(), hubs.end());
            break;
        }
        case HubRule::Given: {
            hubs = opts.given_hubs;
            if (static_cast<int>(hubs.size()) != t)
                throw Error(ErrorCode::InvalidArgument, "given hub list must have t entries");
            std::vector<int> sorted = hubs;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw Error(ErrorCode::InvalidArgument, "hubs must be distinct");
            for (int h : hubs) {
                if (h < 0 || h >= g.n())
                    throw Error(ErrorCode::InvalidArgument, "hub out of range");
            }
            break;
        }
    }

    int len_bound = opts.length_bound > 0 ? opts.length_bound
                                          : default_length_bound(g.n(), opts.length_c);
    VertexSet hub_set = VertexSet::from(g.n(), hubs);

    SubdivisionResult result;
    SubdivisionCertificate cert;
    cert.t = t;
    cert.hubs = hubs;
    cert.length_bound = len_bound;

    VertexSet phi0(g.n());
    ColorSet phi1(g.color_universe());

    auto pair_list = cert.pairs();
    int threads = std::max(1, opts.threads);
    for (size_t pi = 0; pi < pair_list.size(); ++pi) {
        int a = hubs[pair_list[pi].first];
        int b = hubs[pair_list[pi].second];
        VertexSet pair_phi0 = phi0 | hub_set;
        pair_phi0.reset(a);
        pair_phi0.reset(b);
        ColorSet avail = g.used_colors();
        avail.subtract(phi1);

        std::optional<RainbowPath> chosen;
        for (int wave = 0; wave < budget.max_retries && !chosen; wave += threads) {
            int count = std::min(threads, budget.max_retries - wave);
            std::vector<Attempt> attempts(count);
            parallel_for(count, threads, [&](int64_t k) {
                attempts[k] = attempt_pair(
                    g, a, b, pair_phi0, avail, len_bound,
                    derive_seed(budget.seed, {static_cast<uint64_t>(pi),
                                              static_cast<uint64_t>(wave + k)}));
            });
            // node accounting stops at the adopted attempt so artifacts do
            // not depend on the wave width
            for (const auto& att : attempts) {
                if (chosen) break;
                result.nodes += att.nodes;
                if (att.path) {
                    auto pv = validate_path(g, *att.path);
                    if (pv.ok) chosen = att.path;
                }
            }
        }
        if (!chosen) {
            // exact bounded fallback
            SearchBudget exact = budget;
            exact.mode = SearchMode::Exact;
            try {
                PathSearchResult pr = rainbow_path(g, a, b, avail, pair_phi0, len_bound, exact);
                result.nodes += pr.nodes;
                if (pr.outcome == Outcome::Found) chosen = pr.path;
            } catch (const Error& e) {
                if (e.code() != ErrorCode::TooLargeForExact) throw;
            }
        }
        if (!chosen) {
            result.outcome = Outcome::Unknown;
            return result;
        }

        for (size_t i = 1; i + 1 < chosen->vertices.size(); ++i) phi0.set(chosen->vertices[i]);
        for (int c : chosen->colors) phi1.set(c);
        if (chosen->vertices.front() != a) {
            std::reverse(chosen->vertices.begin(), chosen->vertices.end());
            std::reverse(chosen->colors.begin(), chosen->colors.end());
        }
        cert.paths.push_back(std::move(*chosen));
        result.completed_pairs.push_back(pair_list[pi]);
    }

    auto check = validate_certificate(cert, g);
    if (!check.ok)
        throw Error(ErrorCode::VerificationFailed,
                    "constructed certificate failed validation: " + check.reason);
    result.outcome = Outcome::Found;
    result.certificate = std::move(cert);
    return result;
}

} // namespace rainbow
