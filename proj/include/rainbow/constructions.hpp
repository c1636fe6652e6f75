#pragma once

#include "rainbow/graph.hpp"
#include "rainbow/group.hpp"

namespace rainbow {

/// Bipartite generator output. Vertex ids [0, left.size()) form the left
/// part and map to left[i]; the rest map to right[id - left.size()]. Colors
/// are group element indices, so the defining relation of each construction
/// can be read back from any edge.
struct BipartiteConstruction {
    EdgeColoredGraph graph;
    std::vector<int> left;
    std::vector<int> right;

    int left_count() const { return static_cast<int>(left.size()); }
    bool on_left(int v) const { return v < left_count(); }
    int element_of(int v) const { return on_left(v) ? left[v] : right[v - left_count()]; }
};

/// Vertices = group elements; {x,y} is an edge iff x+y lies in S, colored
/// x+y. Pairs with 2x = s yield loops and are skipped.
EdgeColoredGraph cayley_sum_graph(const FiniteGroup& group, std::vector<int> connection_set);

/// Two copies of the group; x on the left joins y on the right iff x-y is in
/// A, colored x-y. |A|-regular on both sides.
BipartiteConstruction sidon_graph(const FiniteGroup& group, std::vector<int> difference_set);

/// Two copies of Z_n; for each residue b in B and each s, the edge (s, s+b)
/// colored b. |B|-regular.
BipartiteConstruction bhg_graph(int modulus, std::vector<int> residues);

/// Parts A and A*S; (a, a*s) colored s. |A||S| edges.
BipartiteConstruction doubling_graph(const FiniteGroup& group, std::vector<int> base_set,
                                     std::vector<int> multiplier_set);

/// Parts A and B; a joins b colored lambda iff a-b = lambda for lambda in L.
BipartiteConstruction convolution_graph(const FiniteGroup& group, std::vector<int> set_a,
                                        std::vector<int> set_b, std::vector<int> color_set);

} // namespace rainbow
