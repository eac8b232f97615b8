#pragma once

#include "oinv/bigint.hpp"
#include "oinv/errors.hpp"
#include "oinv/matchings.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace oinv {

// Canonicalization sweeps cosets of the hyperoctahedral group (2^m m!
// elements); past 12 points the sweep is refused by default.
inline constexpr int kDefaultCanonicalCap = 12;

// Upper bound on (#tuples) x |H_m| work units accepted by enumerate_orbits.
inline constexpr std::uint64_t kDefaultOrbitWorkBudget = 5'000'000'000ULL;

/// Ordered r-tuple of matchings on a common point set; the datum that
/// represents an orbit of the simultaneous-conjugation action.
struct MatchingTuple {
    std::vector<Matching> taus;

    MatchingTuple() = default;

    explicit MatchingTuple(std::vector<Matching> ts) : taus(std::move(ts)) {
        if (taus.empty())
            throw std::invalid_argument("MatchingTuple: need at least one matching");
        for (const Matching& t : taus)
            if (t.points() != taus[0].points())
                throw std::invalid_argument("MatchingTuple: mixed point counts");
    }

    int r() const { return static_cast<int>(taus.size()); }
    int points() const { return taus[0].points(); }
    int half() const { return points() / 2; }

    bool operator==(const MatchingTuple& o) const { return taus == o.taus; }
    bool operator<(const MatchingTuple& o) const { return taus < o.taus; }

    std::string str() const {
        std::string s;
        for (int i = 0; i < r(); ++i) {
            if (i) s += " | ";
            s += taus[i].cycle_string();
        }
        return s;
    }
};

/// Simultaneous conjugation: sigma . (tau_1,...,tau_r) = (sigma tau_i sigma^{-1})_i.
inline MatchingTuple act(const Permutation& sigma, const MatchingTuple& t) {
    std::vector<Matching> out;
    out.reserve(t.r());
    for (const Matching& tau : t.taus) out.push_back(conjugate(sigma, tau));
    return MatchingTuple(std::move(out));
}

/// All elements of the centralizer H_m of (1 2)(3 4)...(2m-1 2m): block
/// permutations times within-block flips, 2^m m! elements in a fixed order.
inline std::vector<Permutation> hyperoctahedral_elements(int m) {
    std::vector<Permutation> out;
    std::vector<int> beta(m);
    for (int j = 0; j < m; ++j) beta[j] = j;
    do {
        for (std::uint32_t flips = 0; flips < (1u << m); ++flips) {
            std::vector<int> img(2 * m);
            for (int j = 0; j < m; ++j) {
                const int f = (flips >> j) & 1;
                img[2 * j] = 2 * beta[j] + f;
                img[2 * j + 1] = 2 * beta[j] + 1 - f;
            }
            out.emplace_back(Permutation(std::move(img)));
        }
    } while (std::next_permutation(beta.begin(), beta.end()));
    return out;
}

namespace detail {

// Conjugation into a scratch buffer, skipping Matching revalidation.
inline void conjugate_raw(const std::vector<int>& sigma, const std::vector<int>& pair,
                          std::vector<int>& out) {
    const int n = static_cast<int>(pair.size());
    out.resize(n);
    for (int i = 0; i < n; ++i) out[sigma[i]] = sigma[pair[i]];
}

// -1 / 0 / +1 comparison of the image of `rest` under sigma against `against`.
inline int compare_conjugated(const std::vector<int>& sigma,
                              const std::vector<Matching>& rest,
                              const std::vector<Matching>& against,
                              std::vector<int>& scratch) {
    for (std::size_t k = 0; k < rest.size(); ++k) {
        conjugate_raw(sigma, rest[k].pair, scratch);
        if (scratch < against[k].pair) return -1;
        if (scratch > against[k].pair) return 1;
    }
    return 0;
}

// A permutation mapping the pairs of tau onto the adjacent blocks, i.e. one
// solution of sigma tau sigma^{-1} = tau_0.
inline Permutation block_aligner(const Matching& tau) {
    std::vector<int> img(tau.points());
    int block = 0;
    for (auto [a, b] : tau.pairs_sorted()) {
        img[a - 1] = 2 * block;
        img[b - 1] = 2 * block + 1;
        ++block;
    }
    return Permutation(std::move(img));
}

// Lex-min of the orbit given the full solution set {h . sigma0 : h in H} for
// the first factor; minimizes the remaining factors stage by stage, keeping
// the argmin coset at each stage.
inline MatchingTuple canonical_form_with_H(const MatchingTuple& t,
                                           const std::vector<Permutation>& H) {
    const int m = t.half();
    std::vector<Matching> result;
    result.reserve(t.r());
    result.push_back(adjacent_matching(m));
    if (t.r() == 1) return MatchingTuple(std::move(result));

    const Permutation sigma0 = block_aligner(t.taus[0]);
    std::vector<std::vector<int>> candidates;
    candidates.reserve(H.size());
    for (const Permutation& h : H) candidates.push_back(h.compose(sigma0).image);

    std::vector<int> scratch, best;
    for (int i = 1; i < t.r(); ++i) {
        best.clear();
        std::vector<std::vector<int>> keep;
        for (std::vector<int>& sigma : candidates) {
            conjugate_raw(sigma, t.taus[i].pair, scratch);
            if (best.empty() || scratch < best) {
                best = scratch;
                keep.clear();
                keep.push_back(std::move(sigma));
            } else if (scratch == best) {
                keep.push_back(std::move(sigma));
            }
        }
        candidates = std::move(keep);
        result.push_back(Matching(best));
    }
    return MatchingTuple(std::move(result));
}

} // namespace detail

/// Lexicographically least tuple in the orbit of t, under the serialization
/// order (concatenated sorted pair lists). Two tuples lie in the same orbit
/// iff their canonical forms are equal.
inline MatchingTuple canonical_form(const MatchingTuple& t,
                                    int max_points = kDefaultCanonicalCap) {
    if (t.points() > max_points)
        throw CapExceeded("canonical_form: 2m = " + std::to_string(t.points()) +
                          " exceeds cap " + std::to_string(max_points));
    return detail::canonical_form_with_H(t, hyperoctahedral_elements(t.half()));
}

/// One canonical representative per orbit of the simultaneous-conjugation
/// action on r-tuples, in increasing serialization order. Every orbit meets
/// {tau_0} x (matchings)^{r-1}, so only the centralizer of tau_0 has to act.
inline std::vector<MatchingTuple> enumerate_orbits(int r, int m,
                                                   int max_points = kDefaultCanonicalCap,
                                                   std::uint64_t work_budget = kDefaultOrbitWorkBudget) {
    if (r < 1) throw std::invalid_argument("enumerate_orbits: r must be >= 1");
    if (m < 1) throw std::invalid_argument("enumerate_orbits: m must be >= 1");
    if (2 * m > max_points)
        throw CapExceeded("enumerate_orbits: 2m = " + std::to_string(2 * m) +
                          " exceeds cap " + std::to_string(max_points));
    const Matching tau0 = adjacent_matching(m);
    if (r == 1) return {MatchingTuple({tau0})};

    const std::vector<Matching> ms = all_matchings(m, max_points);
    const std::vector<Permutation> H = hyperoctahedral_elements(m);

    double work = static_cast<double>(H.size());
    for (int i = 1; i < r; ++i) work *= static_cast<double>(ms.size());
    if (work > static_cast<double>(work_budget))
        throw BudgetExceeded("enumerate_orbits: estimated work " + std::to_string(work) +
                             " exceeds budget " + std::to_string(work_budget));

    std::vector<MatchingTuple> reps;
    std::vector<int> odo(r - 1, 0);
    std::vector<Matching> rest(r - 1, ms[0]);
    std::vector<int> scratch;
    while (true) {
        for (int i = 0; i < r - 1; ++i) rest[i] = ms[odo[i]];
        bool minimal = true;
        for (const Permutation& h : H) {
            if (detail::compare_conjugated(h.image, rest, rest, scratch) < 0) {
                minimal = false;
                break;
            }
        }
        if (minimal) {
            std::vector<Matching> full;
            full.reserve(r);
            full.push_back(tau0);
            for (const Matching& t : rest) full.push_back(t);
            reps.emplace_back(MatchingTuple(std::move(full)));
        }
        int pos = r - 2;
        while (pos >= 0 && ++odo[pos] == static_cast<int>(ms.size())) odo[pos--] = 0;
        if (pos < 0) break;
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

/// Oracle variant: enumerate every r-tuple and deduplicate by the lex-min
/// image over all of S_{2m}. Exponentially wasteful; small sizes only.
inline std::vector<MatchingTuple> enumerate_orbits_naive(int r, int m) {
    if (r < 1 || r > 3 || m < 1 || 2 * m > 6)
        throw CapExceeded("enumerate_orbits_naive: feasible only for r <= 3, 2m <= 6");
    const std::vector<Matching> ms = all_matchings(m);
    const int n = 2 * m;
    std::vector<std::vector<int>> sigmas;
    {
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) img[i] = i;
        do sigmas.push_back(img); while (std::next_permutation(img.begin(), img.end()));
    }
    std::set<std::vector<Matching>> reps;
    std::vector<int> odo(r, 0);
    std::vector<int> scratch;
    while (true) {
        std::vector<Matching> t;
        t.reserve(r);
        for (int i = 0; i < r; ++i) t.push_back(ms[odo[i]]);
        std::vector<Matching> best = t;
        for (const std::vector<int>& sigma : sigmas) {
            if (detail::compare_conjugated(sigma, t, best, scratch) < 0) {
                for (int i = 0; i < r; ++i) {
                    detail::conjugate_raw(sigma, t[i].pair, scratch);
                    best[i] = Matching(scratch);
                }
            }
        }
        reps.insert(best);
        int pos = r - 1;
        while (pos >= 0 && ++odo[pos] == static_cast<int>(ms.size())) odo[pos--] = 0;
        if (pos < 0) break;
    }
    std::vector<MatchingTuple> out;
    out.reserve(reps.size());
    for (const auto& t : reps) out.emplace_back(MatchingTuple(t));
    return out;
}

/// Size of the full orbit of t: (2m-1)!! times the number of distinct images
/// of the post-canonicalization tail under the centralizer of tau_0.
inline BigInt orbit_size(const MatchingTuple& t, int max_points = kDefaultCanonicalCap) {
    const MatchingTuple c = canonical_form(t, max_points);
    const int m = c.half();
    if (c.r() == 1) return double_factorial_odd(m);
    const std::vector<Permutation> H = hyperoctahedral_elements(m);
    std::set<std::vector<std::vector<int>>> images;
    std::vector<int> scratch;
    for (const Permutation& h : H) {
        std::vector<std::vector<int>> img;
        img.reserve(c.r() - 1);
        for (int i = 1; i < c.r(); ++i) {
            detail::conjugate_raw(h.image, c.taus[i].pair, scratch);
            img.push_back(scratch);
        }
        images.insert(std::move(img));
    }
    return double_factorial_odd(m) * BigInt(images.size());
}

// -------------------- edge-colored graphs --------------------

/// Graph on 2m vertices whose edge set splits into r color classes, each a
/// perfect matching; equivalently a properly edge-colored r-regular graph.
struct ColoredGraph {
    int num_vertices = 0;
    int num_colors = 0;
    std::vector<std::tuple<int, int, int>> edges; // (u, v, color), 1-based, u < v

    ColoredGraph() = default;

    ColoredGraph(int n, int r, std::vector<std::tuple<int, int, int>> es)
        : num_vertices(n), num_colors(r), edges(std::move(es)) {
        if (n < 2 || n % 2 != 0)
            throw std::invalid_argument("ColoredGraph: vertex count must be even and positive");
        std::vector<std::vector<int>> met(r + 1, std::vector<int>(n + 1, 0));
        for (auto [u, v, c] : edges) {
            if (c < 1 || c > r) throw std::invalid_argument("ColoredGraph: color out of range");
            if (u < 1 || v < 1 || u > n || v > n || u >= v)
                throw std::invalid_argument("ColoredGraph: bad edge endpoints");
            ++met[c][u];
            ++met[c][v];
        }
        for (int c = 1; c <= r; ++c)
            for (int v = 1; v <= n; ++v)
                if (met[c][v] != 1)
                    throw std::invalid_argument("ColoredGraph: color class " + std::to_string(c) +
                                                " is not a perfect matching");
    }
};

inline ColoredGraph to_colored_graph(const MatchingTuple& t) {
    std::vector<std::tuple<int, int, int>> es;
    es.reserve(t.r() * t.half());
    for (int i = 0; i < t.r(); ++i)
        for (auto [a, b] : t.taus[i].pairs_sorted()) es.emplace_back(a, b, i + 1);
    return ColoredGraph(t.points(), t.r(), std::move(es));
}

/// Inverse of to_colored_graph; a bijection on labeled graphs.
inline MatchingTuple tuple_from_graph(const ColoredGraph& g) {
    std::vector<std::vector<std::pair<int, int>>> classes(g.num_colors);
    for (auto [u, v, c] : g.edges) classes[c - 1].emplace_back(u, v);
    std::vector<Matching> taus;
    taus.reserve(g.num_colors);
    for (auto& cls : classes) taus.push_back(Matching::from_pairs(cls));
    return MatchingTuple(std::move(taus));
}

/// Color-preserving isomorphism: some vertex bijection maps color class i of
/// g1 onto color class i of g2 for every i. Colors are never permuted (each
/// factor belongs to a distinct orthogonal group).
inline bool graphs_isomorphic(const ColoredGraph& g1, const ColoredGraph& g2,
                              int max_points = kDefaultCanonicalCap) {
    if (g1.num_vertices != g2.num_vertices || g1.num_colors != g2.num_colors) return false;
    return canonical_form(tuple_from_graph(g1), max_points) ==
           canonical_form(tuple_from_graph(g2), max_points);
}

/// Color index -> DOT color string: 1 black, 2 red, 3 blue, 4 green, then
/// deterministic hex fallbacks.
inline std::string dot_color(int c) {
    static const char* named[] = {"black", "red", "blue", "green"};
    if (c >= 1 && c <= 4) return named[c - 1];
    const unsigned v = static_cast<unsigned>(c) * 2654435761u;
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", (v >> 16) & 0xff, (v >> 8) & 0xff, v & 0xff);
    return buf;
}

inline std::string to_dot(const ColoredGraph& g, const std::string& name = "G") {
    std::string s = "graph " + name + " {\n  node [shape=circle, label=\"\"];\n";
    for (int v = 1; v <= g.num_vertices; ++v) s += "  v" + std::to_string(v) + ";\n";
    for (auto [u, v, c] : g.edges)
        s += "  v" + std::to_string(u) + " -- v" + std::to_string(v) +
             " [color=\"" + dot_color(c) + "\"];\n";
    return s + "}\n";
}

} // namespace oinv
