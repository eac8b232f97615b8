#include "oinv/dimension.hpp"
#include "oinv/json_io.hpp"
#include "oinv/orbits.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

using namespace oinv;

namespace {

Permutation random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(std::move(img));
}

MatchingTuple random_tuple(int r, int m, std::mt19937_64& rng) {
    const auto ms = all_matchings(m);
    std::vector<Matching> taus;
    for (int i = 0; i < r; ++i) taus.push_back(ms[rng() % ms.size()]);
    return MatchingTuple(std::move(taus));
}

const MatchingTuple& k4_tuple() {
    static const MatchingTuple t({parse_matching_cycles("(1 2)(3 4)"),
                                  parse_matching_cycles("(1 3)(2 4)"),
                                  parse_matching_cycles("(1 4)(2 3)")});
    return t;
}

} // namespace

TEST_CASE("act: identity and worked forest-action tuple", "[orbits]") {
    const MatchingTuple t({parse_matching_cycles("(1 3)(2 5)(4 6)"),
                           parse_matching_cycles("(1 3)(2 4)(5 6)"),
                           parse_matching_cycles("(1 6)(2 4)(3 5)")});
    REQUIRE(act(Permutation::identity(6), t) == t);

    const Permutation g = parse_permutation_cycles("(1 3 5)(2 4)", 6);
    const MatchingTuple expected({parse_matching_cycles("(1 4)(2 6)(3 5)"),
                                  parse_matching_cycles("(1 6)(2 4)(3 5)"),
                                  parse_matching_cycles("(1 5)(2 4)(3 6)")});
    REQUIRE(act(g, t) == expected);
}

TEST_CASE("act: composition law", "[orbits]") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 3);
        const int r = 1 + static_cast<int>(rng() % 3);
        const MatchingTuple t = random_tuple(r, m, rng);
        const Permutation s1 = random_permutation(2 * m, rng);
        const Permutation s2 = random_permutation(2 * m, rng);
        REQUIRE(act(s2, act(s1, t)) == act(s2.compose(s1), t));
    }
}

TEST_CASE("canonical_form: orbit invariance and idempotence", "[orbits]") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 3);
        const int r = 1 + static_cast<int>(rng() % 3);
        const MatchingTuple t = random_tuple(r, m, rng);
        const MatchingTuple canon = canonical_form(t);
        REQUIRE(canonical_form(act(random_permutation(2 * m, rng), t)) == canon);
        REQUIRE(canonical_form(canon) == canon);
        REQUIRE(canon.taus[0] == adjacent_matching(m)); // first factor always minimal
        REQUIRE(!(t < canon));                          // canon is the orbit minimum
    }
}

TEST_CASE("canonical_form: every single matching canonicalizes to the adjacent pairing",
          "[orbits]") {
    for (int m = 1; m <= 4; ++m)
        for (const Matching& tau : all_matchings(m))
            REQUIRE(canonical_form(MatchingTuple({tau})) ==
                    MatchingTuple({adjacent_matching(m)}));
}

TEST_CASE("canonical_form equality classes match the naive orbit partition", "[orbits]") {
    // r = 2, m = 2: all 9 tuples, full S_4 sweep on one side
    const auto ms = all_matchings(2);
    std::map<MatchingTuple, std::set<int>> classes;
    int id = 0;
    for (const Matching& a : ms)
        for (const Matching& b : ms)
            classes[canonical_form(MatchingTuple({a, b}))].insert(id++);
    REQUIRE(classes.size() == 2);

    const auto naive = enumerate_orbits_naive(2, 2);
    REQUIRE(naive.size() == 2);
    for (const MatchingTuple& rep : naive) REQUIRE(classes.count(rep) == 1);
}

TEST_CASE("enumerate_orbits: counts and canonical choice", "[orbits]") {
    REQUIRE(enumerate_orbits(3, 2).size() == 5);
    REQUIRE(enumerate_orbits(2, 2).size() == 2);
    for (int m = 1; m <= 4; ++m) REQUIRE(enumerate_orbits(1, m).size() == 1);

    const auto reps = enumerate_orbits(3, 2);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        REQUIRE(canonical_form(reps[i]) == reps[i]);
        if (i > 0) REQUIRE(reps[i - 1] < reps[i]); // sorted output
    }
    // the all-distinct tuple is among the five representatives
    REQUIRE(std::count(reps.begin(), reps.end(), k4_tuple()) == 1);
}

TEST_CASE("enumerate_orbits agrees with the naive dedupe oracle", "[orbits]") {
    for (int r = 1; r <= 3; ++r)
        for (int m = 1; m <= (r == 3 ? 2 : 3); ++m)
            REQUIRE(enumerate_orbits(r, m) == enumerate_orbits_naive(r, m));
}

TEST_CASE("orbit sizes sum to the tuple count", "[orbits]") {
    for (int r = 1; r <= 3; ++r)
        for (int m = 1; m <= 3; ++m) {
            BigInt total = 0;
            for (const MatchingTuple& rep : enumerate_orbits(r, m)) total += orbit_size(rep);
            REQUIRE(total == pow_int(double_factorial_odd(m), r));
        }
}

TEST_CASE("to_colored_graph: worked example and round trip", "[orbits]") {
    const ColoredGraph g = to_colored_graph(k4_tuple());
    REQUIRE(g.num_vertices == 4);
    REQUIRE(g.num_colors == 3);
    REQUIRE(g.edges.size() == 6); // K4: every vertex pair joined, each color a matching
    std::set<std::pair<int, int>> vertex_pairs;
    for (auto [u, v, c] : g.edges) vertex_pairs.insert({u, v});
    REQUIRE(vertex_pairs.size() == 6);

    REQUIRE(tuple_from_graph(g) == k4_tuple());

    const ColoredGraph single = to_colored_graph(MatchingTuple({adjacent_matching(3)}));
    REQUIRE(single.num_colors == 1);
    REQUIRE(single.edges.size() == 3);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const MatchingTuple t = random_tuple(1 + rng() % 3, 1 + rng() % 3, rng);
        REQUIRE(tuple_from_graph(to_colored_graph(t)) == t);
    }
}

TEST_CASE("ColoredGraph rejects non-matching color classes", "[orbits]") {
    // color 1 meets vertex 1 twice and misses vertex 3
    REQUIRE_THROWS_AS(ColoredGraph(4, 1, {{1, 2, 1}, {1, 4, 1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(ColoredGraph(4, 1, {{1, 2, 1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(ColoredGraph(4, 1, {{1, 2, 2}, {3, 4, 2}}), std::invalid_argument);
}

TEST_CASE("graphs_isomorphic: relabeled copies and orbit separation", "[orbits]") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 20; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 3);
        const int m = 1 + static_cast<int>(rng() % 3);
        const MatchingTuple t = random_tuple(r, m, rng);
        const MatchingTuple moved = act(random_permutation(2 * m, rng), t);
        REQUIRE(graphs_isomorphic(to_colored_graph(t), to_colored_graph(moved)));
    }

    // all 9 r=2, m=2 tuples: isomorphic exactly when in the same orbit
    const auto ms = all_matchings(2);
    std::vector<MatchingTuple> tuples;
    for (const Matching& a : ms)
        for (const Matching& b : ms) tuples.emplace_back(MatchingTuple({a, b}));
    for (const MatchingTuple& a : tuples)
        for (const MatchingTuple& b : tuples) {
            const bool same_orbit = canonical_form(a) == canonical_form(b);
            REQUIRE(graphs_isomorphic(to_colored_graph(a), to_colored_graph(b)) == same_orbit);
        }

    // different color multiset: never isomorphic
    REQUIRE_FALSE(graphs_isomorphic(to_colored_graph(MatchingTuple({ms[0]})),
                                    to_colored_graph(MatchingTuple({ms[0], ms[0]}))));
}

TEST_CASE("graphs_isomorphic behaves as an equivalence relation", "[orbits]") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 10; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 2);
        const int m = 2;
        const ColoredGraph a = to_colored_graph(random_tuple(r, m, rng));
        const ColoredGraph b = to_colored_graph(random_tuple(r, m, rng));
        const ColoredGraph c = to_colored_graph(random_tuple(r, m, rng));
        REQUIRE(graphs_isomorphic(a, a));
        REQUIRE(graphs_isomorphic(a, b) == graphs_isomorphic(b, a));
        if (graphs_isomorphic(a, b) && graphs_isomorphic(b, c))
            REQUIRE(graphs_isomorphic(a, c));
    }
}

TEST_CASE("five r=3 m=2 representatives are pairwise non-isomorphic", "[orbits]") {
    const auto reps = enumerate_orbits(3, 2);
    REQUIRE(reps.size() == 5);
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j)
            REQUIRE(graphs_isomorphic(to_colored_graph(reps[i]), to_colored_graph(reps[j])) ==
                    (i == j));
}

TEST_CASE("DOT export carries the palette and the edges", "[orbits]") {
    const std::string dot = to_dot(to_colored_graph(k4_tuple()), "K4");
    REQUIRE(dot.find("graph K4 {") == 0);
    REQUIRE(dot.find("node [shape=circle, label=\"\"]") != std::string::npos);
    REQUIRE(dot.find("v1 -- v2 [color=\"black\"]") != std::string::npos);
    REQUIRE(dot.find("v1 -- v3 [color=\"red\"]") != std::string::npos);
    REQUIRE(dot.find("v1 -- v4 [color=\"blue\"]") != std::string::npos);
    REQUIRE(dot_color(4) == "green");
    REQUIRE(dot_color(5)[0] == '#'); // hex fallback beyond the named range
}

TEST_CASE("graph json shape", "[orbits]") {
    const Json j = graph_to_json(to_colored_graph(k4_tuple()));
    REQUIRE(j.dump() == R"({"n":4,"r":3,"colors":[[[1,2],[3,4]],[[1,3],[2,4]],[[1,4],[2,3]]]})");
    REQUIRE(tuple_from_graph(graph_from_json(j)) == k4_tuple());
}

TEST_CASE("size guards", "[orbits]") {
    REQUIRE_THROWS_AS(canonical_form(MatchingTuple({adjacent_matching(7)})), CapExceeded);
    REQUIRE_THROWS_AS(enumerate_orbits(2, 7), CapExceeded);
    REQUIRE_THROWS_AS(enumerate_orbits(9, 3, 12, /*work_budget=*/1000), BudgetExceeded);
    REQUIRE_THROWS_AS(enumerate_orbits_naive(4, 2), CapExceeded);
    REQUIRE_THROWS_AS(act(Permutation::identity(4), MatchingTuple({adjacent_matching(3)})),
                      std::invalid_argument);
}
