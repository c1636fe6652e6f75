#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Path with pairwise distinct edge colors. For a cycle the vertex sequence
/// is closed (front == back) and all other vertices are distinct.
struct RainbowPath {
    std::vector<int> vertices;
    std::vector<int> colors; // colors.size() == vertices.size() - 1
    bool is_cycle = false;

    int length() const { return static_cast<int>(colors.size()); }
};

struct ValidationResult {
    bool ok = false;
    std::string reason; // structured tag, e.g. "ColorReuse"
    std::string detail;
};

ValidationResult validate_path(const EdgeColoredGraph& g, const RainbowPath& p);

enum class SearchMode { Exact, Witness };

struct SearchBudget {
    uint64_t max_nodes = 4'000'000; // search states expanded
    int max_retries = 64;           // color-split resampling attempts
    uint64_t seed = 0;
    SearchMode mode = SearchMode::Exact;
};

enum class Outcome { Found, Absent, Unknown };

struct PathSearchResult {
    Outcome outcome = Outcome::Unknown;
    std::optional<RainbowPath> path;
    uint64_t nodes = 0;
};

/// Rainbow s-t path using colors from `allowed`, internally avoiding
/// `forbidden_vertices`, of length <= max_len. Exact mode is complete up to
/// max_len: Absent is a proof, Unknown means the node budget ran out.
/// Search runs over (vertex, used-color-set) states; any rainbow walk
/// shortcuts to a rainbow path on a color subset, so walk states suffice.
PathSearchResult rainbow_path(const EdgeColoredGraph& g, int s, int t, const ColorSet& allowed,
                              const VertexSet& forbidden_vertices, int max_len,
                              const SearchBudget& budget);

struct RpResult {
    VertexSet members;
    bool complete = false; // true only in exact mode without budget exhaustion
    uint64_t nodes = 0;
    // witness mode: one stored rainbow path per discovered vertex
    std::vector<std::optional<RainbowPath>> witness;
};

/// RP set: vertices reachable from x by a rainbow path with colors in
/// allowed \ forbidden_colors avoiding forbidden_vertices; x itself is
/// always a member via the empty path. Witness mode grows one stored
/// witness per vertex and only extends stored witnesses, which
/// under-approximates the exact set.
RpResult rp_set(const EdgeColoredGraph& g, int x, const ColorSet& allowed,
                const VertexSet& forbidden_vertices, const ColorSet& forbidden_colors,
                const SearchBudget& budget);

struct CycleSearchResult {
    Outcome outcome = Outcome::Unknown;
    std::optional<RainbowPath> cycle;
    uint64_t nodes = 0;
};

/// Rainbow cycle of length <= max_len (effective cap: palette size, since a
/// rainbow cycle cannot use more colors than exist). Exact mode iterates
/// over edges and searches for a rainbow path between the endpoints that
/// avoids the edge's color.
CycleSearchResult find_rainbow_cycle(const EdgeColoredGraph& g, int max_len,
                                     const SearchBudget& budget);

struct SubdivisionCertificate {
    int t = 0;
    std::vector<int> hubs;
    // paths[k] joins hub pair pairs()[k]; canonical order (0,1),(0,2),...
    std::vector<RainbowPath> paths;
    int length_bound = 0;

    std::vector<std::pair<int, int>> pairs() const;
};

ValidationResult validate_certificate(const SubdivisionCertificate& cert,
                                      const EdgeColoredGraph& g);

enum class HubRule { MaxDegree, Random, Given };

struct SubdivisionOptions {
    HubRule hub_rule = HubRule::MaxDegree;
    std::vector<int> given_hubs;
    int length_bound = 0;    // 0: ceil(length_c * log n * log log n)
    double length_c = 4.0;
    int threads = 1;
};

struct SubdivisionResult {
    Outcome outcome = Outcome::Unknown;
    std::optional<SubdivisionCertificate> certificate;
    std::vector<std::pair<int, int>> completed_pairs;
    uint64_t nodes = 0;
};

int default_length_bound(int n, double c);

/// Greedy pair completion: for each missing hub pair, sample a color split
/// A0 / complement, grow witness RP sets from both hubs, meet them, and
/// repair vertex overlaps by truncating at the earliest shared vertex (the
/// two sides use disjoint color sets, so colors never clash). Falls back to
/// an exact bounded path search after max_retries samples.
SubdivisionResult find_subdivision(const EdgeColoredGraph& g, int t, const SearchBudget& budget,
                                   const SubdivisionOptions& opts = {});

} // namespace rainbow
