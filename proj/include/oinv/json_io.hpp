#pragma once

#include "oinv/invariants.hpp"
#include "oinv/matchings.hpp"
#include "oinv/orbits.hpp"
#include "oinv/partitions.hpp"
#include "oinv/phylo.hpp"

#include <json.hpp>

#include <string>
#include <vector>

// JSON shapes used by the CLI and the file formats; all big integers are
// decimal strings, never floating point.
namespace oinv {

using Json = nlohmann::ordered_json;

inline Json partition_to_json(const Partition& p) { return Json(p.parts); }

inline Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition json: expected array of parts");
    return Partition(j.get<std::vector<int>>());
}

inline Json matching_to_json(const Matching& t) {
    Json arr = Json::array();
    for (auto [a, b] : t.pairs_sorted()) arr.push_back(Json::array({a, b}));
    return arr;
}

inline Matching matching_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("matching json: expected array of pairs");
    std::vector<std::pair<int, int>> pairs;
    for (const Json& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("matching json: each pair must be a 2-array");
        pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Matching::from_pairs(pairs);
}

inline Json tuple_to_json(const MatchingTuple& t) {
    Json arr = Json::array();
    for (const Matching& tau : t.taus) arr.push_back(matching_to_json(tau));
    return arr;
}

inline MatchingTuple tuple_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("tuple json: expected array of matchings");
    std::vector<Matching> taus;
    for (const Json& e : j) taus.push_back(matching_from_json(e));
    return MatchingTuple(std::move(taus));
}

// {"n": 2m, "r": r, "colors": [[pairs of color 1], [pairs of color 2], ...]}
inline Json graph_to_json(const ColoredGraph& g) {
    Json colors = Json::array();
    for (int c = 1; c <= g.num_colors; ++c) {
        Json cls = Json::array();
        for (auto [u, v, col] : g.edges)
            if (col == c) cls.push_back(Json::array({u, v}));
        colors.push_back(cls);
    }
    return Json{{"n", g.num_vertices}, {"r", g.num_colors}, {"colors", colors}};
}

inline ColoredGraph graph_from_json(const Json& j) {
    const int n = j.at("n").get<int>();
    const int r = j.at("r").get<int>();
    std::vector<std::tuple<int, int, int>> edges;
    const Json& colors = j.at("colors");
    if (!colors.is_array() || static_cast<int>(colors.size()) != r)
        throw std::invalid_argument("graph json: colors must be an array of r classes");
    for (int c = 1; c <= r; ++c)
        for (const Json& e : colors[c - 1]) {
            int u = e.at(0).get<int>(), v = e.at(1).get<int>();
            if (u > v) std::swap(u, v);
            edges.emplace_back(u, v, c);
        }
    return ColoredGraph(n, r, std::move(edges));
}

// {"r":.., "m":.., "dims":[..], "cycles":[[j_i^k]...]} with 1-based cycle ids
inline Json invariant_to_json(const InvariantPolynomial& f) {
    Json cycles = Json::array();
    for (const auto& row : f.cycle_index) {
        Json jrow = Json::array();
        for (int c : row) jrow.push_back(c + 1);
        cycles.push_back(jrow);
    }
    return Json{{"r", f.r}, {"m", f.m}, {"dims", f.dims}, {"cycles", cycles}};
}

// Tensor files: {"dims":[...], "entries":[...]} row-major; rational entries
// are decimal or "p/q" strings, complex entries are [re, im] pairs.
inline Json tensor_to_json(const Tensor<BigRational>& x) {
    Json entries = Json::array();
    for (const BigRational& e : x.entries) entries.push_back(e.str());
    return Json{{"dims", x.dims}, {"entries", entries}};
}

inline Json tensor_to_json(const Tensor<Cplx>& x) {
    Json entries = Json::array();
    for (const Cplx& e : x.entries) entries.push_back(Json::array({e.real(), e.imag()}));
    return Json{{"dims", x.dims}, {"entries", entries}};
}

inline Tensor<BigRational> rational_tensor_from_json(const Json& j) {
    Tensor<BigRational> x(j.at("dims").get<std::vector<int>>());
    const Json& entries = j.at("entries");
    if (entries.size() != x.size())
        throw std::invalid_argument("tensor json: entry count does not match dims");
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Json& e = entries[i];
        if (e.is_string())
            x.entries[i] = BigRational(e.get<std::string>());
        else if (e.is_number_integer())
            x.entries[i] = BigRational(e.get<long long>());
        else
            throw std::invalid_argument("tensor json: rational entries must be strings or integers");
    }
    return x;
}

inline Tensor<Cplx> complex_tensor_from_json(const Json& j) {
    Tensor<Cplx> x(j.at("dims").get<std::vector<int>>());
    const Json& entries = j.at("entries");
    if (entries.size() != x.size())
        throw std::invalid_argument("tensor json: entry count does not match dims");
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Json& e = entries[i];
        if (e.is_array() && e.size() == 2)
            x.entries[i] = Cplx(e[0].get<double>(), e[1].get<double>());
        else if (e.is_number())
            x.entries[i] = Cplx(e.get<double>(), 0.0);
        else
            throw std::invalid_argument("tensor json: complex entries must be [re, im] pairs");
    }
    return x;
}

// Forests: array of Newick strings, tree i rooted with tag i by position.
inline Json forest_to_json(const PhyloForest& f) {
    Json arr = Json::array();
    for (const PhyloTree& t : f.trees) arr.push_back(t.newick());
    return arr;
}

inline PhyloForest forest_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("forest json: expected array of Newick strings");
    std::vector<PhyloTree> trees;
    for (const Json& e : j) trees.push_back(parse_newick(e.get<std::string>()));
    return PhyloForest(std::move(trees));
}

} // namespace oinv
