#pragma once

#include <map>
#include <optional>

#include "rainbow/constructions.hpp"
#include "rainbow/rational.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

struct RelationCertificate {
    enum class Kind { SignedProduct, AlternatingSum };
    Kind kind = Kind::SignedProduct;
    std::vector<int> elements; // distinct group elements / residues, in relation order
    std::vector<int> signs;    // +1 / -1 per element
    int modulus = 0;           // AlternatingSum only
};

/// Evaluates the certificate against its algebraic oracle: signed products
/// multiply out to the identity; alternating sums balance mod the modulus.
bool verify_relation(const FiniteGroup& group, const RelationCertificate& cert);
bool verify_alternating_sum(const RelationCertificate& cert);

struct DissociationResult {
    bool dissociated = false;
    std::optional<RelationCertificate> certificate;
};

/// Abelian groups: enumerate +-1/0 coefficient vectors over the set (order
/// is irrelevant). Nonabelian: enumerate ordered tuples of distinct elements
/// with sign patterns, since the defining product fixes an order.
DissociationResult is_dissociated(const FiniteGroup& group, const std::vector<int>& set,
                                  int abelian_limit = 16, int nonabelian_limit = 8);

enum class DimensionMode { Exact, Greedy };

struct DimensionReport {
    int set_size = 0;
    int dimension = 0;
    std::vector<int> witness;
    DimensionMode mode = DimensionMode::Exact;
    bool lower_bound_only = false; // greedy mode

    /// C * log|A| * (log log |A|)^6, the comparison curve; informational.
    double bound_value(double c) const;
};

/// Maximum dissociated subset size. Exact mode searches subsets with
/// dissociation pruning; greedy grows a first-fit dissociated set and is
/// flagged as a lower bound.
DimensionReport additive_dimension(const FiniteGroup& group, const std::vector<int>& set,
                                   DimensionMode mode, int exact_limit = 20);

/// Reads a rainbow cycle of a doubling graph as the alternating relation
/// s1 s2^-1 s3 s4^-1 ... = e, starting from a left-part vertex, and verifies
/// it against the group oracle before returning.
RelationCertificate rainbow_cycle_to_relation(const FiniteGroup& group,
                                              const BipartiteConstruction& construction,
                                              const RainbowPath& cycle);

struct DoublingReport {
    Rational constant; // |A*A| / |A|
    std::vector<int> product_set;
};

DoublingReport doubling_constant(const FiniteGroup& group, const std::vector<int>& set);

struct ConvolutionReport {
    std::vector<int> threshold_set;     // {x : (A * (-B))(x) >= sigma}
    std::vector<long long> counts;      // per group element
};

ConvolutionReport convolution_threshold_set(const FiniteGroup& group, const std::vector<int>& a,
                                            const std::vector<int>& b, long long sigma);

struct BhgResult {
    bool ok = false;
    std::optional<int> violating_target;
    std::vector<std::vector<int>> solutions; // strictly increasing h-tuples hitting the target
};

/// Counts, for every m in Z_n, the strictly increasing h-tuples of B summing
/// to m; reports the smallest target with more than g of them.
BhgResult is_bhg(int n, const std::vector<int>& b, int h, int g,
                 long long combination_cap = 5'000'000);

struct BhgDichotomy {
    enum class Kind { FoundCertificate, SmallReport, Exhausted };
    Kind kind = Kind::SmallReport;
    // FoundCertificate
    int h0 = 0;
    std::vector<int> b_prime;
    std::optional<RelationCertificate> certificate;
    std::optional<RainbowPath> cycle;
    // SmallReport
    int b_size = 0;
    double log_n = 0.0;
    bool exhaustive = false;
};

/// Builds the circulant bipartite graph of B, hunts for a rainbow cycle, and
/// either returns (h0 = m/2, B' = the cycle colors) with its alternating-sum
/// certificate cross-validated by is_bhg, or reports |B| against the log n
/// regime when the search proves absence (or exhausts its budget).
BhgDichotomy bhg_dichotomy(int n, const std::vector<int>& b, const SearchBudget& budget);

/// Modulus large enough that signed sums of at most `set_size` integers
/// bounded by max_value never wrap: reusable embedding of integer-set
/// questions into Z_N.
int embedding_modulus(int max_value, int set_size);

} // namespace rainbow
