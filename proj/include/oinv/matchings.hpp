#pragma once

#include "oinv/bigint.hpp"
#include "oinv/errors.hpp"
#include "oinv/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oinv {

// Enumerating matchings on more than this many points is refused unless the
// caller raises the cap explicitly ((2m-1)!! growth).
inline constexpr int kDefaultMaxPoints = 16;

// -------------------- permutations --------------------

/// Bijection on {0,...,n-1} stored as an image table. All I/O is 1-based;
/// cycle notation printing/parsing does the shift.
struct Permutation {
    std::vector<int> image;

    Permutation() = default;

    explicit Permutation(std::vector<int> img) : image(std::move(img)) {
        const int n = static_cast<int>(image.size());
        std::vector<char> hit(n, 0);
        for (int v : image) {
            if (v < 0 || v >= n || hit[v])
                throw std::invalid_argument("Permutation: image is not a bijection");
            hit[v] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) img[i] = i;
        return Permutation(std::move(img));
    }

    int size() const { return static_cast<int>(image.size()); }
    int operator()(int i) const { return image[i]; }

    Permutation inverse() const {
        std::vector<int> inv(image.size());
        for (int i = 0; i < size(); ++i) inv[image[i]] = i;
        return Permutation(std::move(inv));
    }

    // (a.compose(b))(i) = a(b(i))
    Permutation compose(const Permutation& b) const {
        if (size() != b.size())
            throw std::invalid_argument("Permutation::compose: size mismatch");
        std::vector<int> img(image.size());
        for (int i = 0; i < size(); ++i) img[i] = image[b.image[i]];
        return Permutation(std::move(img));
    }

    Partition cycle_type() const {
        std::vector<int> lens;
        std::vector<char> seen(image.size(), 0);
        for (int i = 0; i < size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = image[j]) {
                seen[j] = 1;
                ++len;
            }
            lens.push_back(len);
        }
        std::sort(lens.rbegin(), lens.rend());
        return Partition(std::move(lens));
    }

    bool operator==(const Permutation& o) const { return image == o.image; }
};

// -------------------- matchings --------------------

/// Fixed-point-free involution on {0,...,2m-1}: pair[i] is the partner of i.
/// Comparison is lexicographic on the pair table, which coincides with
/// lexicographic comparison of the sorted pair-list serialization.
struct Matching {
    std::vector<int> pair;

    Matching() = default;

    explicit Matching(std::vector<int> p) : pair(std::move(p)) {
        const int n = points();
        if (n % 2 != 0)
            throw std::invalid_argument("Matching: point count must be even");
        for (int i = 0; i < n; ++i) {
            if (pair[i] < 0 || pair[i] >= n || pair[i] == i || pair[pair[i]] != i)
                throw std::invalid_argument("Matching: not a fixed-point-free involution");
        }
    }

    /// From a 1-based pair list, e.g. {{1,4},{2,3}} on 2m points.
    static Matching from_pairs(const std::vector<std::pair<int, int>>& pairs) {
        const int n = 2 * static_cast<int>(pairs.size());
        std::vector<int> p(n, -1);
        for (auto [a, b] : pairs) {
            if (a < 1 || a > n || b < 1 || b > n || a == b)
                throw std::invalid_argument("Matching::from_pairs: bad pair");
            if (p[a - 1] != -1 || p[b - 1] != -1)
                throw std::invalid_argument("Matching::from_pairs: repeated point");
            p[a - 1] = b - 1;
            p[b - 1] = a - 1;
        }
        return Matching(std::move(p));
    }

    int points() const { return static_cast<int>(pair.size()); }
    int half() const { return points() / 2; }
    int partner(int i) const { return pair[i]; }

    /// Sorted 1-based pair list, e.g. [[1,4],[2,3],[5,8],[6,7]].
    std::vector<std::pair<int, int>> pairs_sorted() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(half());
        for (int i = 0; i < points(); ++i)
            if (i < pair[i]) out.emplace_back(i + 1, pair[i] + 1);
        return out; // already sorted: first elements increase
    }

    std::string cycle_string() const {
        std::string s;
        for (auto [a, b] : pairs_sorted())
            s += "(" + std::to_string(a) + " " + std::to_string(b) + ")";
        return s;
    }

    bool operator==(const Matching& o) const { return pair == o.pair; }
    bool operator<(const Matching& o) const { return pair < o.pair; }
};

/// The adjacent pairing (1 2)(3 4)...(2m-1 2m), the lexicographically least
/// matching on 2m points.
inline Matching adjacent_matching(int m) {
    std::vector<int> p(2 * m);
    for (int j = 0; j < m; ++j) {
        p[2 * j] = 2 * j + 1;
        p[2 * j + 1] = 2 * j;
    }
    return Matching(std::move(p));
}

/// Visits every matching on 2m points exactly once, in lexicographic order of
/// the pair table (smallest unmatched point paired with each larger point in
/// increasing order, recursively).
template <class Visit>
void for_each_matching(int m, Visit&& visit, int max_points = kDefaultMaxPoints) {
    if (m < 1) throw std::invalid_argument("for_each_matching: m must be >= 1");
    const int n = 2 * m;
    if (n > max_points)
        throw CapExceeded("for_each_matching: 2m = " + std::to_string(n) +
                          " exceeds cap " + std::to_string(max_points));
    std::vector<int> p(n, -1);
    auto rec = [&](auto&& self) -> void {
        int a = 0;
        while (a < n && p[a] != -1) ++a;
        if (a == n) {
            visit(Matching(p));
            return;
        }
        for (int b = a + 1; b < n; ++b) {
            if (p[b] != -1) continue;
            p[a] = b;
            p[b] = a;
            self(self);
            p[a] = -1;
            p[b] = -1;
        }
    };
    rec(rec);
}

inline std::vector<Matching> all_matchings(int m, int max_points = kDefaultMaxPoints) {
    std::vector<Matching> out;
    for_each_matching(m, [&](const Matching& t) { out.push_back(t); }, max_points);
    return out;
}

/// sigma tau sigma^{-1}, again a fixed-point-free involution.
inline Matching conjugate(const Permutation& sigma, const Matching& tau) {
    if (sigma.size() != tau.points())
        throw std::invalid_argument("conjugate: size mismatch");
    std::vector<int> q(tau.points());
    for (int i = 0; i < tau.points(); ++i) q[sigma(i)] = sigma(tau.partner(i));
    return Matching(std::move(q));
}

inline bool commutes(const Permutation& g, const Matching& tau) {
    if (g.size() != tau.points())
        throw std::invalid_argument("commutes: size mismatch");
    for (int i = 0; i < tau.points(); ++i)
        if (g(tau.partner(i)) != tau.partner(g(i))) return false;
    return true;
}

// -------------------- counting commuting matchings --------------------

/// N((a^b)): matchings commuting with a permutation made of b cycles of
/// length a. Case split on the parities of a and b; all divisions exact.
inline BigInt n_brick(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("n_brick: a, b must be >= 1");
    const bool a_odd = a % 2 != 0, b_odd = b % 2 != 0;
    if (a_odd && b_odd) return 0;
    if (a_odd) {
        // b even: pair up the b cycles, a choices of alignment per pair
        BigInt num = factorial(b) * pow_int(a, b / 2);
        BigInt den = pow_int(2, b / 2) * factorial(b / 2);
        return checked_div(num, den);
    }
    // a even: i cycles may stay unpaired (matched to their own half-power),
    // i even when b is even, i odd when b is odd
    BigInt total = 0;
    for (int i = b_odd ? 1 : 0; i <= b; i += 2) {
        BigInt num = factorial(b) * pow_int(a, (b - i) / 2);
        BigInt den = factorial(i) * factorial((b - i) / 2) * pow_int(2, (b - i) / 2);
        total += checked_div(num, den);
    }
    return total;
}

/// N(lambda): matchings commuting with any permutation of cycle type lambda.
/// Product of n_brick over the multiplicity shape; 1 for the empty partition,
/// 0 whenever |lambda| is odd (some odd part then has odd multiplicity).
inline BigInt n_of(const Partition& lambda) {
    BigInt prod = 1;
    for (const auto& [a, b] : lambda.mults) {
        prod *= n_brick(a, b);
        if (prod == 0) break;
    }
    return prod;
}

/// Canonical permutation with cycle type lambda: cycles filled with
/// consecutive integers, longest cycle first. N is a class function, so any
/// choice works; this one is fixed for reproducibility.
inline Permutation canonical_permutation_of_type(const Partition& lambda) {
    std::vector<int> img(lambda.d);
    int start = 0;
    for (int c : lambda.parts) { // parts are weakly decreasing
        for (int k = 0; k < c; ++k) img[start + k] = start + (k + 1) % c;
        start += c;
    }
    return Permutation(std::move(img));
}

/// Direct oracle for n_of: enumerate all matchings on |lambda| points and
/// count those commuting with the canonical permutation of type lambda.
inline BigInt count_commuting_brute(const Partition& lambda,
                                    int max_points = kDefaultMaxPoints) {
    if (lambda.d % 2 != 0)
        throw std::invalid_argument("count_commuting_brute: |lambda| must be even");
    if (lambda.d == 0) return 1;
    const Permutation g = canonical_permutation_of_type(lambda);
    BigInt count = 0;
    for_each_matching(lambda.d / 2, [&](const Matching& tau) {
        if (commutes(g, tau)) ++count;
    }, max_points);
    return count;
}

// -------------------- cycle notation parsing --------------------

/// Parses disjoint cycle notation like "(1 3 5)(2 4)" into a permutation on
/// {1..n}; points not mentioned are fixed. Accepts commas or spaces.
inline Permutation parse_permutation_cycles(const std::string& text, int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw std::invalid_argument("parse_permutation_cycles: expected '(' at position " +
                                        std::to_string(pos));
        ++pos;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == ',') { ++pos; skip_ws(); }
            if (pos >= text.size())
                throw std::invalid_argument("parse_permutation_cycles: unterminated cycle");
            if (text[pos] == ')') { ++pos; break; }
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw std::invalid_argument("parse_permutation_cycles: expected point number");
            int v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                v = 10 * v + (text[pos++] - '0');
            if (v < 1 || v > n)
                throw std::invalid_argument("parse_permutation_cycles: point " + std::to_string(v) +
                                            " out of range 1.." + std::to_string(n));
            cyc.push_back(v - 1);
        }
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
            if (img[from] != from && cyc.size() > 1)
                throw std::invalid_argument("parse_permutation_cycles: point repeated across cycles");
            img[from] = to;
        }
        skip_ws();
    }
    return Permutation(std::move(img));
}

/// Parses a matching written in cycle notation, e.g. "(1 4)(2 3)(5 8)(6 7)".
/// The point count is inferred as twice the number of transpositions.
inline Matching parse_matching_cycles(const std::string& text) {
    std::vector<std::pair<int, int>> pairs;
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    auto read_int = [&]() -> int {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw std::invalid_argument("parse_matching_cycles: expected point number");
        int v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = 10 * v + (text[pos++] - '0');
        return v;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw std::invalid_argument("parse_matching_cycles: expected '('");
        ++pos;
        int a = read_int();
        skip_ws();
        if (pos < text.size() && text[pos] == ',') ++pos;
        int b = read_int();
        skip_ws();
        if (pos >= text.size() || text[pos] != ')')
            throw std::invalid_argument("parse_matching_cycles: expected ')' (cycles must be transpositions)");
        ++pos;
        pairs.emplace_back(a, b);
        skip_ws();
    }
    if (pairs.empty()) throw std::invalid_argument("parse_matching_cycles: no pairs");
    return Matching::from_pairs(pairs);
}

inline std::string cycle_string(const Permutation& g) {
    std::string s;
    std::vector<char> seen(g.size(), 0);
    for (int i = 0; i < g.size(); ++i) {
        if (seen[i]) continue;
        if (g(i) == i) { seen[i] = 1; continue; }
        s += "(";
        bool first = true;
        for (int j = i; !seen[j]; j = g(j)) {
            seen[j] = 1;
            if (!first) s += " ";
            s += std::to_string(j + 1);
            first = false;
        }
        s += ")";
    }
    return s.empty() ? "()" : s;
}

} // namespace oinv
