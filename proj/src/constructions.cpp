#include "rainbow/constructions.hpp"

#include <algorithm>

namespace rainbow {

namespace {

std::vector<int> canonical(std::vector<int> elems, const FiniteGroup& g, const char* what) {
    for (int e : elems) {
        if (e < 0 || e >= g.order())
            throw Error(ErrorCode::InvalidArgument,
                        std::string(what) + " element " + std::to_string(e) + " out of range");
    }
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return elems;
}

} // namespace

EdgeColoredGraph cayley_sum_graph(const FiniteGroup& group, std::vector<int> connection_set) {
    if (!group.abelian())
        throw Error(ErrorCode::NonAbelianGroup, "Cayley sum graphs need an abelian group");
    connection_set = canonical(std::move(connection_set), group, "connection set");
    if (connection_set.empty())
        throw Error(ErrorCode::EmptyConnectionSet, "connection set must be non-empty");

    std::vector<Edge> edges;
    for (int s : connection_set) {
        for (int x = 0; x < group.order(); ++x) {
            int y = group.sub(s, x); // x + y = s
            if (x < y) edges.push_back({x, y, s});
        }
    }
    return EdgeColoredGraph::build(group.order(), std::move(edges));
}

BipartiteConstruction sidon_graph(const FiniteGroup& group, std::vector<int> difference_set) {
    if (!group.abelian())
        throw Error(ErrorCode::NonAbelianGroup, "the Sidon construction needs an abelian group");
    difference_set = canonical(std::move(difference_set), group, "difference set");
    if (difference_set.empty()) throw Error(ErrorCode::EmptySet, "difference set must be non-empty");

    int n = group.order();
    std::vector<Edge> edges;
    for (int x = 0; x < n; ++x) {
        for (int a : difference_set) {
            int y = group.sub(x, a); // x - y = a
            edges.push_back({x, n + y, a});
        }
    }
    BipartiteConstruction out{EdgeColoredGraph::build(2 * n, std::move(edges)), {}, {}};
    out.left.resize(n);
    out.right.resize(n);
    for (int i = 0; i < n; ++i) out.left[i] = out.right[i] = i;
    return out;
}

BipartiteConstruction bhg_graph(int modulus, std::vector<int> residues) {
    if (modulus < 1) throw Error(ErrorCode::InvalidArgument, "modulus must be >= 1");
    FiniteGroup zn = FiniteGroup::cyclic(modulus);
    residues = canonical(std::move(residues), zn, "residue set");
    if (residues.empty()) throw Error(ErrorCode::EmptySet, "residue set must be non-empty");

    std::vector<Edge> edges;
    for (int b : residues) {
        for (int s = 0; s < modulus; ++s) edges.push_back({s, modulus + zn.op(s, b), b});
    }
    BipartiteConstruction out{EdgeColoredGraph::build(2 * modulus, std::move(edges)), {}, {}};
    out.left.resize(modulus);
    out.right.resize(modulus);
    for (int i = 0; i < modulus; ++i) out.left[i] = out.right[i] = i;
    return out;
}

BipartiteConstruction doubling_graph(const FiniteGroup& group, std::vector<int> base_set,
                                     std::vector<int> multiplier_set) {
    base_set = canonical(std::move(base_set), group, "base set");
    multiplier_set = canonical(std::move(multiplier_set), group, "multiplier set");
    if (base_set.empty() || multiplier_set.empty())
        throw Error(ErrorCode::EmptySet, "both input sets must be non-empty");

    std::vector<int> products;
    for (int a : base_set) {
        for (int s : multiplier_set) products.push_back(group.op(a, s));
    }
    std::sort(products.begin(), products.end());
    products.erase(std::unique(products.begin(), products.end()), products.end());
    std::vector<int> product_pos(group.order(), -1);
    for (int i = 0; i < static_cast<int>(products.size()); ++i) product_pos[products[i]] = i;

    int left_n = static_cast<int>(base_set.size());
    std::vector<Edge> edges;
    for (int ai = 0; ai < left_n; ++ai) {
        for (int s : multiplier_set)
            edges.push_back({ai, left_n + product_pos[group.op(base_set[ai], s)], s});
    }
    return {EdgeColoredGraph::build(left_n + static_cast<int>(products.size()), std::move(edges)),
            std::move(base_set), std::move(products)};
}

BipartiteConstruction convolution_graph(const FiniteGroup& group, std::vector<int> set_a,
                                        std::vector<int> set_b, std::vector<int> color_set) {
    if (!group.abelian())
        throw Error(ErrorCode::NonAbelianGroup, "the convolution construction needs an abelian group");
    set_a = canonical(std::move(set_a), group, "A");
    set_b = canonical(std::move(set_b), group, "B");
    color_set = canonical(std::move(color_set), group, "color set");
    if (color_set.empty()) throw Error(ErrorCode::EmptySet, "color set must be non-empty");
    if (set_a.empty() || set_b.empty()) throw Error(ErrorCode::EmptySet, "A and B must be non-empty");

    std::vector<char> in_l(group.order(), 0);
    for (int l : color_set) in_l[l] = 1;

    int left_n = static_cast<int>(set_a.size());
    std::vector<Edge> edges;
    for (int ai = 0; ai < left_n; ++ai) {
        for (int bi = 0; bi < static_cast<int>(set_b.size()); ++bi) {
            int lambda = group.sub(set_a[ai], set_b[bi]); // a - b
            if (in_l[lambda]) edges.push_back({ai, left_n + bi, lambda});
        }
    }
    return {EdgeColoredGraph::build(left_n + static_cast<int>(set_b.size()), std::move(edges)),
            std::move(set_a), std::move(set_b)};
}

} // namespace rainbow
