#pragma once

#include <optional>
#include <vector>

#include "rainbow/bitset.hpp"
#include "rainbow/error.hpp"
#include "rainbow/rational.hpp"

namespace rainbow {

struct Edge {
    int u;
    int v;
    int color;
};

struct Incidence {
    int to;
    int color;
    int edge; // index into edges()
};

/// Immutable properly edge-colored simple graph. Vertices and colors are
/// dense integer ids; all queries are pure reads, so a built graph can be
/// shared freely across workers.
class EdgeColoredGraph {
public:
    /// Validates no loops, no duplicate unordered pairs, and properness
    /// (distinct colors on every vertex star). Throws Error on violation.
    static EdgeColoredGraph build(int n, std::vector<Edge> triples);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Incidence>& adj(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int min_degree() const;

    /// Number of distinct colors appearing on edges.
    int palette_size() const { return palette_size_; }
    /// Exclusive upper bound on color ids; ColorSet universe.
    int color_universe() const { return color_universe_; }
    const ColorSet& used_colors() const { return used_colors_; }

    /// 2|E|/n as an exact rational.
    Rational average_degree() const;

    std::optional<int> edge_index(int u, int v) const;

    /// Vertices outside U adjacent to U in G - F. U must be non-empty.
    VertexSet neighborhood(const VertexSet& U) const;
    VertexSet neighborhood(const VertexSet& U, const EdgeSet& removed) const;

    /// Number of F-edges incident to v.
    int restricted_degree(int v, const EdgeSet& F) const;

    VertexSet empty_vertex_set() const { return VertexSet(n_); }
    VertexSet full_vertex_set() const { return VertexSet(n_, true); }
    EdgeSet empty_edge_set() const { return EdgeSet(m()); }
    ColorSet empty_color_set() const { return ColorSet(color_universe_); }

    /// Induced subgraph on W with vertices relabeled 0..|W|-1; old_ids, when
    /// given, receives the new-id -> old-id map. Colors keep their ids.
    EdgeColoredGraph induced(const VertexSet& W, std::vector<int>* old_ids = nullptr) const;

    /// Re-checks all build invariants; used after deserialization.
    void validate() const;

private:
    EdgeColoredGraph() = default;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adj_;
    int palette_size_ = 0;
    int color_universe_ = 0;
    ColorSet used_colors_;
};

} // namespace rainbow
