#ifndef FORESTDUAL_ENUMERATE_HH
#define FORESTDUAL_ENUMERATE_HH 1

#include <forestdual/structure.hh>

#include <random>
#include <vector>

namespace forestdual
{
    /// One canonical representative per isomorphism class with at most
    /// max_vertices vertices, sorted by Structure ordering.
    ///
    /// Forests are generated directly, by growing trees one block at a time
    /// and taking multisets of trees, so forest_only sweeps reach 8 or more
    /// vertices for binary signatures. General structures are generated per
    /// vertex count by adding tuples to canonical representatives; the cost is
    /// (classes) x (possible tuples) x (permutations tried by canonical_form),
    /// and the sweep refuses (TooLarge) once a vertex count allows more than
    /// 16 distinct tuples, e.g. 5 vertices for digraphs or 3 for one ternary
    /// relation.
    auto enumerate_structures(const Signature & signature, int max_vertices, bool forest_only) -> std::vector<Structure>;

    /// Canonical trees with at most max_vertices vertices.
    auto enumerate_trees(const Signature & signature, int max_vertices) -> std::vector<Structure>;

    /// A random forest with between 1 and max_vertices vertices and randomly
    /// permuted vertex ids.
    auto random_forest(const Signature & signature, int max_vertices, std::mt19937_64 & rng) -> Structure;
}

#endif
