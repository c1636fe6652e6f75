#include "rainbow/graph.hpp"

#include <algorithm>
#include <string>

namespace rainbow {

EdgeColoredGraph EdgeColoredGraph::build(int n, std::vector<Edge> triples) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "vertex count must be non-negative");
    EdgeColoredGraph g;
    g.n_ = n;
    for (auto& e : triples) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw Error(ErrorCode::InvalidArgument,
                        "edge endpoint out of range: (" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + ")");
        if (e.color < 0)
            throw Error(ErrorCode::InvalidArgument, "negative color id " + std::to_string(e.color));
        if (e.u == e.v)
            throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(triples.size());
    for (const auto& e : triples) pairs.emplace_back(e.u, e.v);
    std::sort(pairs.begin(), pairs.end());
    auto dup = std::adjacent_find(pairs.begin(), pairs.end());
    if (dup != pairs.end())
        throw Error(ErrorCode::DuplicateEdge, "duplicate edge {" + std::to_string(dup->first) +
                                                  "," + std::to_string(dup->second) + "}");

    g.edges_ = std::move(triples);
    g.adj_.assign(n, {});
    int max_color = -1;
    for (int i = 0; i < static_cast<int>(g.edges_.size()); ++i) {
        const Edge& e = g.edges_[i];
        g.adj_[e.u].push_back({e.v, e.color, i});
        g.adj_[e.v].push_back({e.u, e.color, i});
        max_color = std::max(max_color, e.color);
    }
    for (auto& inc : g.adj_) {
        std::sort(inc.begin(), inc.end(),
                  [](const Incidence& a, const Incidence& b) { return a.to < b.to; });
    }

    // proper coloring: all incident colors distinct at every vertex
    for (int v = 0; v < n; ++v) {
        std::vector<int> colors;
        colors.reserve(g.adj_[v].size());
        for (const auto& inc : g.adj_[v]) colors.push_back(inc.color);
        std::sort(colors.begin(), colors.end());
        auto it = std::adjacent_find(colors.begin(), colors.end());
        if (it != colors.end())
            throw Error(ErrorCode::ImproperColoring, "vertex " + std::to_string(v) +
                                                         " has two incident edges of color " +
                                                         std::to_string(*it));
    }

    g.color_universe_ = max_color + 1;
    g.used_colors_ = ColorSet(g.color_universe_);
    for (const auto& e : g.edges_) g.used_colors_.set(e.color);
    g.palette_size_ = g.used_colors_.count();
    return g;
}

int EdgeColoredGraph::min_degree() const {
    if (n_ == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

Rational EdgeColoredGraph::average_degree() const {
    if (n_ < 1) throw Error(ErrorCode::EmptyInput, "average degree of an empty vertex set");
    return Rational(2ll * m(), n_);
}

std::optional<int> EdgeColoredGraph::edge_index(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return std::nullopt;
    const auto& inc = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int other = adj_[u].size() <= adj_[v].size() ? v : u;
    for (const auto& i : inc) {
        if (i.to == other) return i.edge;
    }
    return std::nullopt;
}

VertexSet EdgeColoredGraph::neighborhood(const VertexSet& U) const {
    return neighborhood(U, empty_edge_set());
}

VertexSet EdgeColoredGraph::neighborhood(const VertexSet& U, const EdgeSet& removed) const {
    if (U.none()) throw Error(ErrorCode::EmptyInput, "neighborhood of an empty set");
    VertexSet out(n_);
    U.for_each([&](int u) {
        for (const auto& inc : adj_[u]) {
            if (!removed.test(inc.edge) && !U.test(inc.to)) out.set(inc.to);
        }
    });
    return out;
}

int EdgeColoredGraph::restricted_degree(int v, const EdgeSet& F) const {
    if (v < 0 || v >= n_) throw Error(ErrorCode::InvalidArgument, "vertex out of range");
    int c = 0;
    for (const auto& inc : adj_[v]) {
        if (F.test(inc.edge)) ++c;
    }
    return c;
}

EdgeColoredGraph EdgeColoredGraph::induced(const VertexSet& W, std::vector<int>* old_ids) const {
    std::vector<int> ids = W.to_vector();
    std::vector<int> remap(n_, -1);
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) remap[ids[i]] = i;
    std::vector<Edge> sub;
    for (const auto& e : edges_) {
        if (remap[e.u] >= 0 && remap[e.v] >= 0) sub.push_back({remap[e.u], remap[e.v], e.color});
    }
    if (old_ids) *old_ids = std::move(ids);
    return build(W.count(), std::move(sub));
}

void EdgeColoredGraph::validate() const {
    EdgeColoredGraph rebuilt = build(n_, edges_);
    if (rebuilt.palette_size_ != palette_size_)
        throw Error(ErrorCode::FormatError, "palette size mismatch on revalidation");
}

} // namespace rainbow
