#pragma once

#include <string>
#include <vector>

#include "rainbow/error.hpp"

namespace rainbow {

/// Finite group with elements encoded as dense integer indices. Built-in
/// kinds are abelian by construction; table-based groups get a full axiom
/// check at load (order capped at 512).
class FiniteGroup {
public:
    enum class Kind { Cyclic, VectorF2, Product, Table };

    static FiniteGroup cyclic(int n);
    static FiniteGroup vector_f2(int k);
    static FiniteGroup product(std::vector<int> moduli);
    static FiniteGroup from_table(std::vector<std::vector<int>> table);

    Kind kind() const { return kind_; }
    int order() const { return order_; }
    int identity() const { return id_; }
    bool abelian() const { return abelian_; }

    int op(int a, int b) const;
    int inv(int a) const;
    int sub(int a, int b) const { return op(a, inv(b)); }

    std::string describe() const;

private:
    FiniteGroup() = default;

    Kind kind_ = Kind::Cyclic;
    int order_ = 1;
    int id_ = 0;
    bool abelian_ = true;
    std::vector<int> moduli_;                // Product
    std::vector<std::vector<int>> table_;    // Table
    std::vector<int> table_inv_;             // Table
};

/// Parses "Z:15", "F2:4", "prod:Z3xZ4" (table groups load via from_table).
FiniteGroup parse_group_spec(const std::string& spec);

/// Element token: plain index, or "e<i>" for the i-th basis vector of F2^k.
int parse_element(const FiniteGroup& g, const std::string& token);
std::vector<int> parse_element_list(const FiniteGroup& g, const std::string& csv);

} // namespace rainbow
