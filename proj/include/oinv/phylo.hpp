#pragma once

#include "oinv/matchings.hpp"
#include "oinv/orbits.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

namespace oinv {

/// Rooted full binary tree with leaves labeled 1..L bijectively; internal
/// nodes carry no labels. Children are normalized so the subtree containing
/// the smaller leaf comes first, making structural equality a plain compare.
struct PhyloTree {
    struct Node {
        int leaf = 0;  // 1-based leaf label; 0 for internal nodes
        int left = -1; // child indices; both -1 for leaves
        int right = -1;
    };

    std::vector<Node> nodes;
    int root = -1;
    int n_leaves = 0;

    bool is_leaf(int v) const { return nodes[v].left < 0; }

    int min_leaf(int v) const {
        while (!is_leaf(v)) v = nodes[v].left; // normalized: min is down the left spine
        return nodes[v].leaf;
    }

    void normalize() {
        for (auto& nd : nodes) {
            if (nd.left < 0) continue;
            if (subtree_min(nd.left) > subtree_min(nd.right)) std::swap(nd.left, nd.right);
        }
    }

    void validate() const {
        if (root < 0 || nodes.empty()) throw std::invalid_argument("PhyloTree: empty");
        std::vector<char> leaf_seen(n_leaves + 1, 0);
        int leaves = 0, internals = 0;
        for (const auto& nd : nodes) {
            const bool l = nd.left >= 0, r = nd.right >= 0;
            if (l != r) throw std::invalid_argument("PhyloTree: internal node without two children");
            if (!l) {
                ++leaves;
                if (nd.leaf < 1 || nd.leaf > n_leaves || leaf_seen[nd.leaf])
                    throw std::invalid_argument("PhyloTree: leaf labels must be a bijection onto 1..L");
                leaf_seen[nd.leaf] = 1;
            } else {
                ++internals;
            }
        }
        if (leaves != n_leaves || internals != n_leaves - 1)
            throw std::invalid_argument("PhyloTree: wrong node counts for a full binary tree");
    }

    bool operator==(const PhyloTree& o) const { return newick() == o.newick(); }

    /// Newick serialization, internal nodes unlabeled, children in normalized
    /// order, e.g. "(((1,4),(2,3)),5);".
    std::string newick() const {
        std::string s;
        write_newick(root, s);
        return s + ";";
    }

private:
    int subtree_min(int v) const {
        if (is_leaf(v)) return nodes[v].leaf;
        return std::min(subtree_min(nodes[v].left), subtree_min(nodes[v].right));
    }

    void write_newick(int v, std::string& s) const {
        if (is_leaf(v)) {
            s += std::to_string(nodes[v].leaf);
            return;
        }
        s += "(";
        write_newick(nodes[v].left, s);
        s += ",";
        write_newick(nodes[v].right, s);
        s += ")";
    }
};

/// The matchings <-> trees correspondence. A matching on 2n points maps to a
/// tree with n+1 leaves: points 1..n+1 are leaves, n+2..2n name the ancestors
/// in creation order, and the last join forms the unlabeled root. At every
/// step the eligible pairs are those whose endpoints both exist as built
/// nodes; the pair with the smallest endpoint is joined next.
inline PhyloTree matching_to_tree(const Matching& tau) {
    const int n = tau.half();
    PhyloTree t;
    t.n_leaves = n + 1;
    std::vector<int> node_of(2 * n + 1, -1); // label -> node index
    for (int leaf = 1; leaf <= n + 1; ++leaf) {
        node_of[leaf] = static_cast<int>(t.nodes.size());
        t.nodes.push_back({leaf, -1, -1});
    }
    auto pairs = tau.pairs_sorted();
    std::vector<char> used(pairs.size(), 0);
    int next_ancestor = n + 2;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            if (used[j]) continue;
            if (node_of[pairs[j].first] < 0 || node_of[pairs[j].second] < 0) continue;
            if (pick < 0 || pairs[j].first < pairs[pick].first) pick = static_cast<int>(j);
        }
        if (pick < 0)
            throw std::logic_error("matching_to_tree: no eligible pair (malformed matching)");
        used[pick] = 1;
        const int parent = static_cast<int>(t.nodes.size());
        t.nodes.push_back({0, node_of[pairs[pick].first], node_of[pairs[pick].second]});
        if (step < n - 1)
            node_of[next_ancestor++] = parent;
        else
            t.root = parent;
    }
    t.normalize();
    t.validate();
    return t;
}

/// Inverse correspondence: label the sibling pair with the smallest labeled
/// child n+2, n+3, ... and pair every sibling couple; the root's children
/// form the final pair.
inline Matching tree_to_matching(const PhyloTree& t) {
    t.validate();
    const int n = t.n_leaves - 1;
    if (n < 1) throw std::invalid_argument("tree_to_matching: need at least 2 leaves");
    std::vector<int> label(t.nodes.size(), 0);
    std::vector<int> parent(t.nodes.size(), -1);
    for (std::size_t v = 0; v < t.nodes.size(); ++v) {
        if (t.nodes[v].left >= 0) {
            parent[t.nodes[v].left] = static_cast<int>(v);
            parent[t.nodes[v].right] = static_cast<int>(v);
        }
        if (t.is_leaf(static_cast<int>(v))) label[v] = t.nodes[v].leaf;
    }
    std::vector<std::pair<int, int>> out;
    int next_label = n + 2;
    for (int step = 0; step < n - 1; ++step) {
        int pick = -1, pick_min = 0;
        for (std::size_t v = 0; v < t.nodes.size(); ++v) {
            if (static_cast<int>(v) == t.root || t.is_leaf(static_cast<int>(v)) || label[v] != 0)
                continue;
            const int la = label[t.nodes[v].left], lb = label[t.nodes[v].right];
            if (la == 0 || lb == 0) continue;
            const int mn = std::min(la, lb);
            if (pick < 0 || mn < pick_min) { pick = static_cast<int>(v); pick_min = mn; }
        }
        if (pick < 0) throw std::logic_error("tree_to_matching: no eligible sibling pair");
        const int la = label[t.nodes[pick].left], lb = label[t.nodes[pick].right];
        out.emplace_back(std::min(la, lb), std::max(la, lb));
        label[pick] = next_label++;
    }
    const int la = label[t.nodes[t.root].left], lb = label[t.nodes[t.root].right];
    if (la == 0 || lb == 0) throw std::logic_error("tree_to_matching: root children unlabeled");
    out.emplace_back(std::min(la, lb), std::max(la, lb));
    return Matching::from_pairs(out);
}

/// Parses the Newick grammar emitted by PhyloTree::newick():
///   tree = subtree ";"   subtree = "(" subtree "," subtree ")" | integer
/// Whitespace between tokens is allowed; child order is not significant.
inline PhyloTree parse_newick(const std::string& text) {
    PhyloTree t;
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    auto parse_subtree = [&](auto&& self) -> int {
        skip_ws();
        if (pos >= text.size()) throw std::invalid_argument("parse_newick: unexpected end");
        if (text[pos] == '(') {
            ++pos;
            const int left = self(self);
            skip_ws();
            if (pos >= text.size() || text[pos] != ',')
                throw std::invalid_argument("parse_newick: expected ','");
            ++pos;
            const int right = self(self);
            skip_ws();
            if (pos >= text.size() || text[pos] != ')')
                throw std::invalid_argument("parse_newick: expected ')'");
            ++pos;
            t.nodes.push_back({0, left, right});
            return static_cast<int>(t.nodes.size()) - 1;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[pos])))
            throw std::invalid_argument("parse_newick: expected leaf label or '('");
        int v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = 10 * v + (text[pos++] - '0');
        t.nodes.push_back({v, -1, -1});
        ++t.n_leaves;
        return static_cast<int>(t.nodes.size()) - 1;
    };
    t.root = parse_subtree(parse_subtree);
    skip_ws();
    if (pos >= text.size() || text[pos] != ';')
        throw std::invalid_argument("parse_newick: expected ';'");
    ++pos;
    skip_ws();
    if (pos != text.size()) throw std::invalid_argument("parse_newick: trailing input");
    t.normalize();
    t.validate();
    return t;
}

/// Ordered list of r trees with a uniform leaf count; tree i carries root
/// tag i by position.
struct PhyloForest {
    std::vector<PhyloTree> trees;

    PhyloForest() = default;

    explicit PhyloForest(std::vector<PhyloTree> ts) : trees(std::move(ts)) {
        if (trees.empty()) throw std::invalid_argument("PhyloForest: need at least one tree");
        for (const PhyloTree& t : trees)
            if (t.n_leaves != trees[0].n_leaves)
                throw std::invalid_argument("PhyloForest: trees must share the leaf count");
    }

    int r() const { return static_cast<int>(trees.size()); }
    bool operator==(const PhyloForest& o) const { return trees == o.trees; }
};

inline PhyloForest forest_of(const MatchingTuple& t) {
    std::vector<PhyloTree> trees;
    trees.reserve(t.r());
    for (const Matching& tau : t.taus) trees.push_back(matching_to_tree(tau));
    return PhyloForest(std::move(trees));
}

inline MatchingTuple tuple_of_forest(const PhyloForest& f) {
    std::vector<Matching> taus;
    taus.reserve(f.r());
    for (const PhyloTree& t : f.trees) taus.push_back(tree_to_matching(t));
    return MatchingTuple(std::move(taus));
}

/// The symmetric-group action on forests: convert to matchings, conjugate
/// simultaneously, convert back. Satisfies forest_act(s, forest_of(t)) ==
/// forest_of(act(s, t)) by construction.
inline PhyloForest forest_act(const Permutation& sigma, const PhyloForest& f) {
    return forest_of(act(sigma, tuple_of_forest(f)));
}

} // namespace oinv
