#include "rainbow/applications.hpp"

#include <algorithm>
#include <cmath>

namespace rainbow {

bool verify_relation(const FiniteGroup& group, const RelationCertificate& cert) {
    if (cert.kind == RelationCertificate::Kind::AlternatingSum) return verify_alternating_sum(cert);
    if (cert.elements.empty() || cert.elements.size() != cert.signs.size()) return false;
    std::vector<int> sorted = cert.elements;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    int acc = group.identity();
    for (size_t i = 0; i < cert.elements.size(); ++i) {
        int g = cert.signs[i] > 0 ? cert.elements[i] : group.inv(cert.elements[i]);
        acc = group.op(acc, g);
    }
    return acc == group.identity();
}

bool verify_alternating_sum(const RelationCertificate& cert) {
    if (cert.kind != RelationCertificate::Kind::AlternatingSum) return false;
    if (cert.modulus < 1) return false;
    size_t m = cert.elements.size();
    if (m == 0 || m % 2 != 0 || cert.signs.size() != m) return false;
    std::vector<int> sorted = cert.elements;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    long long acc = 0;
    for (size_t i = 0; i < m; ++i) {
        if (cert.signs[i] != (i % 2 == 0 ? 1 : -1)) return false;
        acc += cert.signs[i] * static_cast<long long>(cert.elements[i]);
        acc %= cert.modulus;
    }
    return (acc % cert.modulus + cert.modulus) % cert.modulus == 0;
}

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// ternary coefficient enumeration over an abelian group
DissociationResult dissociated_abelian(const FiniteGroup& group, const std::vector<int>& set) {
    size_t k = set.size();
    std::vector<int> coeff(k, 0);
    // odometer over {-1, 0, +1}^k, skipping all-zero
    while (true) {
        size_t pos = 0;
        while (pos < k && coeff[pos] == 1) coeff[pos++] = -1;
        if (pos == k) break;
        ++coeff[pos];
        int acc = group.identity();
        bool nontrivial = false;
        for (size_t i = 0; i < k; ++i) {
            if (coeff[i] == 0) continue;
            nontrivial = true;
            acc = group.op(acc, coeff[i] > 0 ? set[i] : group.inv(set[i]));
        }
        if (nontrivial && acc == group.identity()) {
            RelationCertificate cert;
            cert.kind = RelationCertificate::Kind::SignedProduct;
            for (size_t i = 0; i < k; ++i) {
                if (coeff[i] != 0) {
                    cert.elements.push_back(set[i]);
                    cert.signs.push_back(coeff[i]);
                }
            }
            return {false, std::move(cert)};
        }
    }
    return {true, std::nullopt};
}

// ordered tuples of distinct elements with sign patterns
bool dissociated_tuples(const FiniteGroup& group, const std::vector<int>& set,
                        std::vector<int>& tuple, std::vector<char>& used, int acc,
                        RelationCertificate* out) {
    if (!tuple.empty() && acc == group.identity()) {
        out->kind = RelationCertificate::Kind::SignedProduct;
        out->elements.clear();
        out->signs.clear();
        for (int idx : tuple) {
            out->elements.push_back(set[idx >= 0 ? idx : ~idx]);
            out->signs.push_back(idx >= 0 ? 1 : -1);
        }
        return false;
    }
    for (size_t i = 0; i < set.size(); ++i) {
        if (used[i]) continue;
        used[i] = 1;
        for (int sign : {1, -1}) {
            int next = group.op(acc, sign > 0 ? set[i] : group.inv(set[i]));
            tuple.push_back(sign > 0 ? static_cast<int>(i) : ~static_cast<int>(i));
            if (!dissociated_tuples(group, set, tuple, used, next, out)) return false;
            tuple.pop_back();
        }
        used[i] = 0;
    }
    return true;
}

} // namespace

DissociationResult is_dissociated(const FiniteGroup& group, const std::vector<int>& set,
                                  int abelian_limit, int nonabelian_limit) {
    std::vector<int> s = sorted_unique(set);
    for (int e : s) {
        if (e < 0 || e >= group.order())
            throw Error(ErrorCode::InvalidArgument, "element out of range");
    }
    int limit = group.abelian() ? abelian_limit : nonabelian_limit;
    if (static_cast<int>(s.size()) > limit)
        throw Error(ErrorCode::TooLarge, "set size " + std::to_string(s.size()) +
                                             " exceeds the exact limit " + std::to_string(limit));
    if (s.empty()) return {true, std::nullopt};

    // the identity alone gives the one-element relation e^1 = e
    for (int e : s) {
        if (e == group.identity()) {
            RelationCertificate cert;
            cert.kind = RelationCertificate::Kind::SignedProduct;
            cert.elements = {e};
            cert.signs = {1};
            return {false, std::move(cert)};
        }
    }

    if (group.abelian()) return dissociated_abelian(group, s);

    RelationCertificate cert;
    std::vector<int> tuple;
    std::vector<char> used(s.size(), 0);
    if (!dissociated_tuples(group, s, tuple, used, group.identity(), &cert))
        return {false, std::move(cert)};
    return {true, std::nullopt};
}

double DimensionReport::bound_value(double c) const {
    if (set_size < 3) return 0.0;
    double lg = std::log(static_cast<double>(set_size));
    double llg = std::log(lg);
    return c * lg * std::pow(llg, 6.0);
}

namespace {

// DFS over sorted elements; reachable signed sums of the chosen set prune
// extensions in O(order) per step. Abelian only.
struct DimensionSearch {
    const FiniteGroup& group;
    const std::vector<int>& elems;
    std::vector<int> best;
    std::vector<int> chosen;

    void run(size_t idx, const std::vector<char>& sums) {
        if (chosen.size() > best.size()) best = chosen;
        if (chosen.size() + (elems.size() - idx) <= best.size()) return;
        for (size_t i = idx; i < elems.size(); ++i) {
            int g = elems[i];
            if (sums[g] || sums[group.inv(g)]) continue;
            std::vector<char> next(sums.size(), 0);
            for (int x = 0; x < static_cast<int>(sums.size()); ++x) {
                if (!sums[x]) continue;
                next[x] = 1;
                next[group.op(x, g)] = 1;
                next[group.op(x, group.inv(g))] = 1;
            }
            chosen.push_back(g);
            run(i + 1, next);
            chosen.pop_back();
        }
    }
};

} // namespace

DimensionReport additive_dimension(const FiniteGroup& group, const std::vector<int>& set,
                                   DimensionMode mode, int exact_limit) {
    std::vector<int> a = sorted_unique(set);
    for (int e : a) {
        if (e < 0 || e >= group.order())
            throw Error(ErrorCode::InvalidArgument, "element out of range");
    }
    DimensionReport report;
    report.set_size = static_cast<int>(a.size());
    report.mode = mode;

    // the identity never joins a dissociated set
    a.erase(std::remove(a.begin(), a.end(), group.identity()), a.end());

    if (mode == DimensionMode::Greedy) {
        std::vector<int> greedy;
        for (int g : a) {
            std::vector<int> candidate = greedy;
            candidate.push_back(g);
            try {
                if (is_dissociated(group, candidate).dissociated) greedy = std::move(candidate);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::TooLarge) throw;
                break;
            }
        }
        report.dimension = static_cast<int>(greedy.size());
        report.witness = std::move(greedy);
        report.lower_bound_only = true;
        return report;
    }

    if (static_cast<int>(a.size()) > exact_limit)
        throw Error(ErrorCode::TooLargeForExact,
                    "exact dimension limited to " + std::to_string(exact_limit) + " elements");

    if (group.abelian()) {
        DimensionSearch search{group, a, {}, {}};
        std::vector<char> sums(group.order(), 0);
        sums[group.identity()] = 1;
        search.run(0, sums);
        report.dimension = static_cast<int>(search.best.size());
        report.witness = std::move(search.best);
        return report;
    }

    // nonabelian: scan subsets from large to small against the tuple oracle
    int k = static_cast<int>(a.size());
    for (int size = k; size >= 1; --size) {
        for (uint32_t mask = 0; mask < (1u << k); ++mask) {
            if (__builtin_popcount(mask) != size) continue;
            std::vector<int> subset;
            for (int i = 0; i < k; ++i) {
                if (mask >> i & 1) subset.push_back(a[i]);
            }
            if (is_dissociated(group, subset).dissociated) {
                report.dimension = size;
                report.witness = std::move(subset);
                return report;
            }
        }
    }
    report.dimension = 0;
    return report;
}

RelationCertificate rainbow_cycle_to_relation(const FiniteGroup& group,
                                              const BipartiteConstruction& construction,
                                              const RainbowPath& cycle) {
    auto pv = validate_path(construction.graph, cycle);
    if (!pv.ok || !cycle.is_cycle)
        throw Error(ErrorCode::VerificationFailed, "input is not a valid rainbow cycle");
    int len = cycle.length();
    if (len % 2 != 0)
        throw Error(ErrorCode::VerificationFailed, "bipartite cycles must have even length");

    // rotate so the walk starts on the left part
    int start = -1;
    for (int i = 0; i < len; ++i) {
        if (construction.on_left(cycle.vertices[i])) {
            start = i;
            break;
        }
    }
    if (start < 0) throw Error(ErrorCode::VerificationFailed, "cycle never visits the left part");

    RelationCertificate cert;
    cert.kind = RelationCertificate::Kind::SignedProduct;
    for (int k = 0; k < len; ++k) {
        cert.elements.push_back(cycle.colors[(start + k) % len]);
        cert.signs.push_back(k % 2 == 0 ? 1 : -1);
    }
    if (!verify_relation(group, cert))
        throw Error(ErrorCode::VerificationFailed,
                    "extracted relation does not evaluate to the identity");
    return cert;
}

DoublingReport doubling_constant(const FiniteGroup& group, const std::vector<int>& set) {
    std::vector<int> a = sorted_unique(set);
    if (a.empty()) throw Error(ErrorCode::EmptySet, "A must be non-empty");
    std::vector<char> seen(group.order(), 0);
    for (int x : a) {
        for (int y : a) seen[group.op(x, y)] = 1;
    }
    DoublingReport r;
    for (int x = 0; x < group.order(); ++x) {
        if (seen[x]) r.product_set.push_back(x);
    }
    r.constant = Rational(static_cast<long long>(r.product_set.size()),
                          static_cast<long long>(a.size()));
    return r;
}

ConvolutionReport convolution_threshold_set(const FiniteGroup& group, const std::vector<int>& a,
                                            const std::vector<int>& b, long long sigma) {
    if (!group.abelian()) throw Error(ErrorCode::NonAbelianGroup, "convolution needs an abelian group");
    if (sigma < 1) throw Error(ErrorCode::InvalidArgument, "sigma must be >= 1");
    std::vector<int> sa = sorted_unique(a), sb = sorted_unique(b);
    ConvolutionReport r;
    r.counts.assign(group.order(), 0);
    for (int x : sa) {
        for (int y : sb) ++r.counts[group.sub(x, y)]; // x - y
    }
    for (int x = 0; x < group.order(); ++x) {
        if (r.counts[x] >= sigma) r.threshold_set.push_back(x);
    }
    return r;
}

BhgResult is_bhg(int n, const std::vector<int>& b, int h, int g, long long combination_cap) {
    if (n < 1 || h < 2 || g < 1) throw Error(ErrorCode::InvalidArgument, "need n >= 1, h >= 2, g >= 1");
    std::vector<int> set = sorted_unique(b);
    for (int x : set) {
        if (x < 0 || x >= n) throw Error(ErrorCode::InvalidArgument, "residue out of range");
    }
    int k = static_cast<int>(set.size());
    if (h > k) return {true, std::nullopt, {}}; // vacuous: no strictly increasing h-tuple

    long long combos = 1;
    for (int i = 0; i < h; ++i) {
        combos = combos * (k - i) / (i + 1);
        if (combos > combination_cap)
            throw Error(ErrorCode::CombinatorialBlowup,
                        "C(" + std::to_string(k) + "," + std::to_string(h) + ") exceeds the cap");
    }

    std::vector<long long> counts(n, 0);
    std::vector<int> idx(h);
    for (int i = 0; i < h; ++i) idx[i] = i;
    while (true) {
        long long sum = 0;
        for (int i : idx) sum += set[i];
        ++counts[sum % n];
        int pos = h - 1;
        while (pos >= 0 && idx[pos] == k - h + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < h; ++i) idx[i] = idx[i - 1] + 1;
    }

    int violating = -1;
    for (int m = 0; m < n; ++m) {
        if (counts[m] > g) {
            violating = m;
            break;
        }
    }
    if (violating < 0) return {true, std::nullopt, {}};

    BhgResult res;
    res.ok = false;
    res.violating_target = violating;
    for (int i = 0; i < h; ++i) idx[i] = i;
    while (true) {
        long long sum = 0;
        for (int i : idx) sum += set[i];
        if (sum % n == violating) {
            std::vector<int> tuple;
            for (int i : idx) tuple.push_back(set[i]);
            res.solutions.push_back(std::move(tuple));
        }
        int pos = h - 1;
        while (pos >= 0 && idx[pos] == k - h + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < h; ++i) idx[i] = idx[i - 1] + 1;
    }
    return res;
}

BhgDichotomy bhg_dichotomy(int n, const std::vector<int>& b, const SearchBudget& budget) {
    std::vector<int> set = sorted_unique(b);
    if (set.empty()) throw Error(ErrorCode::EmptySet, "B must be non-empty");
    BipartiteConstruction bc = bhg_graph(n, set);

    BhgDichotomy out;
    out.b_size = static_cast<int>(set.size());
    out.log_n = std::log(static_cast<double>(n));

    int palette = bc.graph.palette_size();
    if (palette < 4) {
        // rainbow cycles here are even and need >= 4 colors
        out.kind = BhgDichotomy::Kind::SmallReport;
        out.exhaustive = true;
        return out;
    }

    CycleSearchResult cs = find_rainbow_cycle(bc.graph, palette, budget);
    if (cs.outcome == Outcome::Absent) {
        out.kind = BhgDichotomy::Kind::SmallReport;
        out.exhaustive = true;
        return out;
    }
    if (cs.outcome == Outcome::Unknown) {
        out.kind = BhgDichotomy::Kind::Exhausted;
        return out;
    }

    const RainbowPath& cycle = *cs.cycle;
    int m = cycle.length();
    if (m % 2 != 0)
        throw Error(ErrorCode::VerificationFailed, "cycle in a bipartite graph has odd length");

    // read colors in cycle order from a V1 start
    int start = -1;
    for (int i = 0; i < m; ++i) {
        if (bc.on_left(cycle.vertices[i])) {
            start = i;
            break;
        }
    }
    RelationCertificate cert;
    cert.kind = RelationCertificate::Kind::AlternatingSum;
    cert.modulus = n;
    for (int k = 0; k < m; ++k) {
        cert.elements.push_back(cycle.colors[(start + k) % m]);
        cert.signs.push_back(k % 2 == 0 ? 1 : -1);
    }
    if (!verify_alternating_sum(cert))
        throw Error(ErrorCode::VerificationFailed, "alternating-sum certificate failed its oracle");

    out.kind = BhgDichotomy::Kind::FoundCertificate;
    out.h0 = m / 2;
    out.b_prime = sorted_unique(cert.elements);
    out.certificate = std::move(cert);
    out.cycle = cycle;

    // cross-validation: B' cannot be a B_{h0}[1] sequence
    BhgResult check = is_bhg(n, out.b_prime, out.h0, 1);
    if (check.ok)
        throw Error(ErrorCode::VerificationFailed,
                    "is_bhg disagrees with the extracted certificate");
    return out;
}

int embedding_modulus(int max_value, int set_size) {
    if (max_value < 0 || set_size < 0) throw Error(ErrorCode::InvalidArgument, "negative bound");
    long long need = 2ll * max_value * std::max(1, set_size) + 1;
    if (need > (1 << 22)) throw Error(ErrorCode::TooLarge, "embedding modulus too large");
    return static_cast<int>(need);
}

} // namespace rainbow
