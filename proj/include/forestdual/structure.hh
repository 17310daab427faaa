#ifndef FORESTDUAL_STRUCTURE_HH
#define FORESTDUAL_STRUCTURE_HH 1

#include <forestdual/signature.hh>

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace forestdual
{
    using Tuple = std::vector<int>;

    /// A finite relational structure over vertices 0..vertex_count-1. Tuple
    /// lists are kept sorted and duplicate-free, so equality is equality of
    /// labelled structures.
    class Structure
    {
        private:
            Signature _signature;
            int _vertex_count;
            std::vector<std::vector<Tuple>> _tuples;

        public:
            Structure(Signature signature, int vertex_count);

            /// Validates entries and arities, sorts and deduplicates.
            Structure(Signature signature, int vertex_count, std::vector<std::vector<Tuple>> tuples);

            auto signature() const -> const Signature & { return _signature; }
            auto vertex_count() const -> int { return _vertex_count; }
            auto empty() const -> bool { return _vertex_count == 0; }

            auto tuples(std::size_t relation) const -> const std::vector<Tuple> & { return _tuples[relation]; }
            auto all_tuples() const -> const std::vector<std::vector<Tuple>> & { return _tuples; }
            auto tuple_count() const -> std::size_t;

            auto has_tuple(std::size_t relation, std::span<const int> t) const -> bool;

            /// Returns false if already present.
            auto add_tuple(std::size_t relation, Tuple t) -> bool;

            /// Adds fresh isolated vertices, returning the id of the first.
            auto add_vertices(int count) -> int;

            /// Lexicographic by vertex count, then tuples per relation.
            auto operator<=> (const Structure & other) const -> std::strong_ordering;
            auto operator== (const Structure & other) const -> bool;
    };

    struct RootedStructure
    {
        Structure structure;
        int root;

        /// Throws InputError if root is out of range.
        RootedStructure(Structure s, int r);
    };

    /// The single-vertex rooted tree with no tuples, identity for combine_rooted.
    auto trivial_rooted(const Signature & signature) -> RootedStructure;

    /// Block (R, t) of the incidence multigraph.
    struct Block
    {
        std::size_t relation;
        std::size_t index;
    };

    /// Bipartite incidence multigraph: vertices on one side, blocks on the other,
    /// one edge per (vertex, position, block) incidence.
    struct IncidenceGraph
    {
        struct Edge
        {
            int vertex;
            int position;
            int block;
        };

        std::vector<Block> blocks;
        std::vector<Edge> edges;
        /// For every vertex, indices into edges.
        std::vector<std::vector<int>> vertex_edges;
    };

    auto incidence_graph(const Structure & s) -> IncidenceGraph;

    struct Component
    {
        Structure part;
        /// back_map[v] is the vertex of the original structure.
        std::vector<int> back_map;
    };

    /// Substructures induced by the connected components of the incidence
    /// graph, ordered by least original vertex.
    auto components(const Structure & s) -> std::vector<Component>;

    /// Component index of every vertex, matching the order of components().
    auto component_ids(const Structure & s) -> std::vector<int>;

    /// No cycles and no parallel edges in the incidence graph. The empty
    /// structure is a forest.
    auto is_forest(const Structure & s) -> bool;

    /// A connected forest. The empty structure is not a tree.
    auto is_tree(const Structure & s) -> bool;

    /// Substructure induced on the given vertices, renumbered in the order given.
    auto induced_substructure(const Structure & s, std::span<const int> vertices) -> Structure;

    auto direct_product(const Structure & a, const Structure & b) -> Structure;

    /// Vertices of b are shifted by a.vertex_count().
    auto disjoint_union(const Structure & a, const Structure & b) -> Structure;

    /// Disjoint union with the two roots merged into the new root (vertex a.root).
    auto combine_rooted(const RootedStructure & a, const RootedStructure & b) -> RootedStructure;

    auto unroot(const RootedStructure & a) -> Structure;

    /// Adds an isolated new vertex and makes it the root.
    auto add_isolated_root(const RootedStructure & a) -> RootedStructure;

    struct Concatenation
    {
        Structure structure;
        /// Vertex of the result that was the root of each argument.
        std::vector<int> roots;
    };

    /// Disjoint union of the arguments plus one new relation tuple on their roots.
    auto concatenate(std::size_t relation, std::span<const RootedStructure> args) -> Concatenation;
}

#endif
