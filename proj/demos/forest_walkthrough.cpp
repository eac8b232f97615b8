// Walks one round of the symmetric-group action on a forest of three
// phylogenetic trees: forest -> matchings -> conjugation -> forest.

#include "oinv/phylo.hpp"

#include <iostream>

using namespace oinv;

int main() {
    const MatchingTuple tuple({parse_matching_cycles("(1 3)(2 5)(4 6)"),
                               parse_matching_cycles("(1 3)(2 4)(5 6)"),
                               parse_matching_cycles("(1 6)(2 4)(3 5)")});

    const PhyloForest forest = forest_of(tuple);
    std::cout << "forest:\n";
    for (int i = 0; i < forest.r(); ++i)
        std::cout << "  tree " << (i + 1) << ": " << forest.trees[i].newick() << "\n";

    const Permutation g = parse_permutation_cycles("(1 3 5)(2 4)", tuple.points());
    std::cout << "acting by " << cycle_string(g) << ":\n";

    const PhyloForest moved = forest_act(g, forest);
    for (int i = 0; i < moved.r(); ++i)
        std::cout << "  tree " << (i + 1) << ": " << moved.trees[i].newick() << "\n";

    std::cout << "matchings after the action: " << act(g, tuple).str() << "\n";
    return 0;
}
