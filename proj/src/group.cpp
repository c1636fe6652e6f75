#include "rainbow/group.hpp"

#include <algorithm>
#include <sstream>

namespace rainbow {

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclic group order must be >= 1");
    FiniteGroup g;
    g.kind_ = Kind::Cyclic;
    g.order_ = n;
    return g;
}

FiniteGroup FiniteGroup::vector_f2(int k) {
    if (k < 0 || k > 20) throw Error(ErrorCode::InvalidArgument, "F2^k supported for 0 <= k <= 20");
    FiniteGroup g;
    g.kind_ = Kind::VectorF2;
    g.order_ = 1 << k;
    return g;
}

FiniteGroup FiniteGroup::product(std::vector<int> moduli) {
    if (moduli.empty()) throw Error(ErrorCode::InvalidArgument, "product group needs >= 1 factor");
    long long order = 1;
    for (int m : moduli) {
        if (m < 1) throw Error(ErrorCode::InvalidArgument, "product factor must be >= 1");
        order *= m;
        if (order > (1 << 22)) throw Error(ErrorCode::TooLarge, "product group order too large");
    }
    FiniteGroup g;
    g.kind_ = Kind::Product;
    g.order_ = static_cast<int>(order);
    g.moduli_ = std::move(moduli);
    return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table) {
    int n = static_cast<int>(table.size());
    if (n < 1 || n > 512)
        throw Error(ErrorCode::BadGroupTable, "table groups supported for order 1..512");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw Error(ErrorCode::BadGroupTable, "table is not square");
        for (int x : row) {
            if (x < 0 || x >= n) throw Error(ErrorCode::BadGroupTable, "table entry out of range");
        }
    }
    // identity
    int id = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
        if (ok) {
            id = e;
            break;
        }
    }
    if (id < 0) throw Error(ErrorCode::BadGroupTable, "no identity element");
    // inverses
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (table[a][b] == id && table[b][a] == id) {
                inv[a] = b;
                break;
            }
        }
        if (inv[a] < 0)
            throw Error(ErrorCode::BadGroupTable, "element " + std::to_string(a) + " has no inverse");
    }
    // associativity, exhaustive
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            int ab = table[a][b];
            for (int c = 0; c < n; ++c) {
                if (table[ab][c] != table[a][table[b][c]])
                    throw Error(ErrorCode::BadGroupTable,
                                "associativity fails at (" + std::to_string(a) + "," +
                                    std::to_string(b) + "," + std::to_string(c) + ")");
            }
        }
    }
    bool abelian = true;
    for (int a = 0; a < n && abelian; ++a) {
        for (int b = a + 1; b < n && abelian; ++b) abelian = table[a][b] == table[b][a];
    }
    FiniteGroup g;
    g.kind_ = Kind::Table;
    g.order_ = n;
    g.id_ = id;
    g.abelian_ = abelian;
    g.table_ = std::move(table);
    g.table_inv_ = std::move(inv);
    return g;
}

int FiniteGroup::op(int a, int b) const {
    switch (kind_) {
        case Kind::Cyclic: {
            int s = a + b;
            return s >= order_ ? s - order_ : s;
        }
        case Kind::VectorF2:
            return a ^ b;
        case Kind::Product: {
            int r = 0, mult = 1;
            for (int m : moduli_) {
                int ca = a % m, cb = b % m;
                a /= m;
                b /= m;
                r += ((ca + cb) % m) * mult;
                mult *= m;
            }
            return r;
        }
        case Kind::Table:
            return table_[a][b];
    }
    return 0;
}

int FiniteGroup::inv(int a) const {
    switch (kind_) {
        case Kind::Cyclic:
            return a == 0 ? 0 : order_ - a;
        case Kind::VectorF2:
            return a;
        case Kind::Product: {
            int r = 0, mult = 1;
            for (int m : moduli_) {
                int ca = a % m;
                a /= m;
                r += (ca == 0 ? 0 : m - ca) * mult;
                mult *= m;
            }
            return r;
        }
        case Kind::Table:
            return table_inv_[a];
    }
    return 0;
}

std::string FiniteGroup::describe() const {
    switch (kind_) {
        case Kind::Cyclic:
            return "Z:" + std::to_string(order_);
        case Kind::VectorF2: {
            int k = 0;
            while ((1 << k) < order_) ++k;
            return "F2:" + std::to_string(k);
        }
        case Kind::Product: {
            std::string s = "prod:";
            for (size_t i = 0; i < moduli_.size(); ++i) {
                if (i) s += "x";
                s += "Z" + std::to_string(moduli_[i]);
            }
            return s;
        }
        case Kind::Table:
            return "table:" + std::to_string(order_);
    }
    return "?";
}

FiniteGroup parse_group_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw Error(ErrorCode::InvalidArgument, "group spec must look like Z:15, F2:4 or prod:Z3xZ4");
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    if (kind == "Z") return FiniteGroup::cyclic(std::stoi(rest));
    if (kind == "F2") return FiniteGroup::vector_f2(std::stoi(rest));
    if (kind == "prod") {
        std::vector<int> moduli;
        std::stringstream ss(rest);
        std::string part;
        while (std::getline(ss, part, 'x')) {
            if (!part.empty() && (part[0] == 'Z' || part[0] == 'z')) part = part.substr(1);
            if (part.empty()) throw Error(ErrorCode::InvalidArgument, "bad product factor in " + spec);
            moduli.push_back(std::stoi(part));
        }
        return FiniteGroup::product(std::move(moduli));
    }
    throw Error(ErrorCode::InvalidArgument, "unknown group kind '" + kind + "'");
}

int parse_element(const FiniteGroup& g, const std::string& token) {
    if (token.empty()) throw Error(ErrorCode::InvalidArgument, "empty element token");
    int value;
    if (token[0] == 'e' && g.kind() == FiniteGroup::Kind::VectorF2) {
        int i = std::stoi(token.substr(1));
        if (i < 1) throw Error(ErrorCode::InvalidArgument, "basis vectors are e1, e2, ...");
        value = 1 << (i - 1);
    } else {
        value = std::stoi(token);
    }
    if (value < 0 || value >= g.order())
        throw Error(ErrorCode::InvalidArgument,
                    "element " + token + " out of range for group of order " + std::to_string(g.order()));
    return value;
}

std::vector<int> parse_element_list(const FiniteGroup& g, const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (!token.empty()) out.push_back(parse_element(g, token));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace rainbow
