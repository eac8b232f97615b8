#pragma once

#include "oinv/bigint.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oinv {

/// Integer partition: weakly decreasing positive parts plus the multiplicity
/// view (1^{b1} 2^{b2} ...). The multiplicity view is stored, not recomputed,
/// because the commuting-matchings count consumes the shape form directly.
struct Partition {
    std::vector<int> parts;                 // weakly decreasing, all >= 1
    std::vector<std::pair<int, int>> mults; // (part value a, multiplicity b_a), a increasing
    int d = 0;                              // sum of parts

    Partition() = default;

    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts[i] > parts[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
            d += parts[i];
        }
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
            if (!mults.empty() && mults.back().first == *it)
                ++mults.back().second;
            else
                mults.emplace_back(*it, 1);
        }
    }

    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }

    bool operator==(const Partition& o) const { return parts == o.parts; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }
};

/// All partitions of d, each exactly once, in decreasing lexicographic order:
/// (d), (d-1,1), ..., (1^d). d = 0 yields the single empty partition.
inline std::vector<Partition> enumerate_partitions(int d) {
    if (d < 0) throw std::invalid_argument("enumerate_partitions: d must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

/// z_lambda = prod_a a^{b_a} * b_a!, the centralizer order of a permutation of
/// cycle type lambda; d!/z_lambda is the conjugacy-class size.
inline BigInt z_of(const Partition& lambda) {
    BigInt z = 1;
    for (const auto& [a, b] : lambda.mults) z *= pow_int(a, b) * factorial(b);
    return z;
}

inline bool is_even(const Partition& lambda) {
    for (int p : lambda.parts)
        if (p % 2 != 0) return false;
    return true;
}

} // namespace oinv
