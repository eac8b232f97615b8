#pragma once

#include "oinv/bigint.hpp"
#include "oinv/errors.hpp"
#include "oinv/matchings.hpp"
#include "oinv/partitions.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace oinv {

/// Stable dimension of the degree-2m invariants of r tensor factors:
/// sum over lambda |- 2m of N(lambda)^r / z_lambda, evaluated as an exact
/// rational whose denominator must reduce to 1.
inline BigInt stable_dimension(int r, int m) {
    if (r < 1) throw std::invalid_argument("stable_dimension: r must be >= 1");
    if (m < 0) throw std::invalid_argument("stable_dimension: m must be >= 0");
    BigRational sum = 0;
    for (const Partition& lambda : enumerate_partitions(2 * m)) {
        const BigInt n = n_of(lambda);
        if (n == 0) continue;
        sum += BigRational(pow_int(n, r), z_of(lambda));
    }
    if (boost::multiprecision::denominator(sum) != 1)
        throw std::logic_error("stable_dimension: sum did not reduce to an integer");
    return boost::multiprecision::numerator(sum);
}

/// Raw-degree entry point: dimension in homogeneous degree d. Odd d gives 0.
inline BigInt stable_dimension_degree(int r, int d) {
    if (d < 0) throw std::invalid_argument("stable_dimension_degree: d must be >= 0");
    if (d % 2 != 0) return 0;
    return stable_dimension(r, d / 2);
}

enum class BurnsideMode {
    by_class, // one representative per cycle type, weighted by class size
    naive     // every permutation of S_{2m}; independent of z_lambda
};

// Caps for the Burnside oracle; the naive mode walks all (2m)! permutations.
inline constexpr int kBurnsideClassCap = 8; // max 2m in by_class mode
inline constexpr int kBurnsideNaiveCap = 6; // max 2m in naive mode

/// Burnside oracle for stable_dimension: averages |fixed matchings|^r over
/// S_{2m}, counting fixed matchings by direct commutation tests rather than
/// the closed-form N(lambda).
inline BigInt burnside_dimension_brute(int r, int m,
                                       BurnsideMode mode = BurnsideMode::by_class) {
    if (r < 1) throw std::invalid_argument("burnside_dimension_brute: r must be >= 1");
    if (m < 0) throw std::invalid_argument("burnside_dimension_brute: m must be >= 0");
    if (m == 0) return 1;
    const int n = 2 * m;
    const int cap = mode == BurnsideMode::by_class ? kBurnsideClassCap : kBurnsideNaiveCap;
    if (n > cap)
        throw CapExceeded("burnside_dimension_brute: 2m = " + std::to_string(n) +
                          " exceeds cap " + std::to_string(cap));

    auto count_fixed = [&](const Permutation& g) {
        BigInt c = 0;
        for_each_matching(m, [&](const Matching& tau) {
            if (commutes(g, tau)) ++c;
        });
        return c;
    };

    BigInt total = 0;
    if (mode == BurnsideMode::by_class) {
        for (const Partition& lambda : enumerate_partitions(n)) {
            const BigInt fixed = count_fixed(canonical_permutation_of_type(lambda));
            total += checked_div(factorial(n), z_of(lambda)) * pow_int(fixed, r);
        }
    } else {
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) img[i] = i;
        do {
            total += pow_int(count_fixed(Permutation(img)), r);
        } while (std::next_permutation(img.begin(), img.end()));
    }
    return checked_div(total, factorial(n));
}

/// Dimension grid for r = 1..r_max, m = 1..m_max. table[r-1][m-1].
inline std::vector<std::vector<BigInt>> dimension_table(int r_max, int m_max) {
    if (r_max < 1 || m_max < 1)
        throw std::invalid_argument("dimension_table: r_max, m_max must be >= 1");
    std::vector<std::vector<BigInt>> table(r_max);
    for (int r = 1; r <= r_max; ++r) {
        table[r - 1].reserve(m_max);
        for (int m = 1; m <= m_max; ++m) table[r - 1].push_back(stable_dimension(r, m));
    }
    return table;
}

/// Aligned text rendering of a dimension grid.
inline std::string format_dimension_table(const std::vector<std::vector<BigInt>>& table) {
    const int r_max = static_cast<int>(table.size());
    const int m_max = r_max ? static_cast<int>(table[0].size()) : 0;
    std::vector<std::size_t> width(m_max + 1, 1);
    width[0] = std::string("r\\m").size();
    std::vector<std::vector<std::string>> cells(r_max);
    for (int r = 0; r < r_max; ++r) {
        width[0] = std::max(width[0], std::to_string(r + 1).size());
        for (int m = 0; m < m_max; ++m) {
            cells[r].push_back(table[r][m].str());
            width[m + 1] = std::max(width[m + 1],
                                    std::max(cells[r][m].size(), std::to_string(m + 1).size()));
        }
    }
    std::ostringstream os;
    auto pad = [&](const std::string& s, std::size_t w) {
        os << std::string(w - s.size(), ' ') << s;
    };
    pad("r\\m", width[0]);
    for (int m = 0; m < m_max; ++m) {
        os << "  ";
        pad(std::to_string(m + 1), width[m + 1]);
    }
    os << "\n";
    for (int r = 0; r < r_max; ++r) {
        pad(std::to_string(r + 1), width[0]);
        for (int m = 0; m < m_max; ++m) {
            os << "  ";
            pad(cells[r][m], width[m + 1]);
        }
        os << "\n";
    }
    return os.str();
}

} // namespace oinv
