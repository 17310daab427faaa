#ifndef FORESTDUAL_FAMILIES_HH
#define FORESTDUAL_FAMILIES_HH 1

#include <forestdual/forest_algebra.hh>

#include <functional>
#include <string>
#include <vector>

namespace forestdual
{
    /// Forests with a homomorphism to d. States are the sets of possible root
    /// images reachable from init = V(d); combine intersects, nu maps nonempty
    /// sets to V(d), mu(R, i) collects the i-th entries of the tuples of R(d)
    /// compatible with the argument sets. Terminal: nonempty.
    auto build_hom_family(const Structure & d) -> ForestAlgebra;

    /// Forests with no homomorphism to any listed structure. With an empty
    /// list, every forest including the empty one.
    auto build_obstruction_family(const Signature & signature, const std::vector<Structure> & ds) -> ForestAlgebra;

    /// Two states, tree and nontree.
    auto build_trees_family(const Signature & signature) -> ForestAlgebra;

    /// Every forest, including the empty structure.
    auto build_all_forests_family(const Signature & signature) -> ForestAlgebra;

    /// Exactly the listed forests up to isomorphism. Listing the empty
    /// structure sets the empty flag. States are the rooted forests that occur
    /// as a vertex of a member with some of its branches and some of the other
    /// components, plus a dead state, then minimized. Throws NotAForest.
    auto build_finite_family(const Signature & signature, const std::vector<Structure> & members) -> ForestAlgebra;

    /// Reachable part of the product. Throws SignatureMismatch.
    auto family_union(const ForestAlgebra & a, const ForestAlgebra & b) -> ForestAlgebra;
    auto family_intersection(const ForestAlgebra & a, const ForestAlgebra & b) -> ForestAlgebra;

    /// Reachable part of the product, terminal(x, y) deciding the terminals.
    auto family_product(const ForestAlgebra & a, const ForestAlgebra & b,
            const std::function<auto (int, int) -> bool> & terminal,
            bool empty_in_family, const std::string & provenance) -> ForestAlgebra;

    /// Same states, terminals and empty flag flipped.
    auto family_complement(const ForestAlgebra & a) -> ForestAlgebra;
}

#endif
