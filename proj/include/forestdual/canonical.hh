#ifndef FORESTDUAL_CANONICAL_HH
#define FORESTDUAL_CANONICAL_HH 1

#include <forestdual/structure.hh>

#include <map>
#include <string>
#include <vector>

namespace forestdual
{
    /// A forest with its incidence tree and memoized rooted codes. Rooted
    /// codes are complete isomorphism invariants of rooted trees: two rooted
    /// trees get equal codes iff they are isomorphic.
    class ForestView
    {
        public:
            struct Incidence
            {
                int block;
                int position;
            };

        private:
            const Structure * _structure;
            IncidenceGraph _graph;
            std::vector<std::vector<Incidence>> _incidences;
            std::vector<int> _component;
            std::vector<std::vector<int>> _component_vertices;
            mutable std::map<std::pair<int, int>, std::string> _codes;
            mutable std::vector<std::string> _tree_codes;
            mutable std::vector<int> _canonical_roots;

            auto compute_tree_code(int component) const -> void;

        public:
            /// Throws NotAForest. Keeps a reference to s.
            explicit ForestView(const Structure & s);

            auto structure() const -> const Structure & { return *_structure; }
            auto incidences(int v) const -> const std::vector<Incidence> & { return _incidences[v]; }
            auto block(int b) const -> const Block & { return _graph.blocks[b]; }
            auto block_tuple(int b) const -> const Tuple &;

            auto component(int v) const -> int { return _component[v]; }
            auto component_count() const -> int { return static_cast<int>(_component_vertices.size()); }
            auto component_vertices(int c) const -> const std::vector<int> & { return _component_vertices[c]; }

            /// Code of the tree hanging at v away from parent_block (-1 for none).
            auto rooted_code(int v, int parent_block = -1) const -> const std::string &;

            /// Code of the branch formed by block b together with everything
            /// hanging off its other positions, seen from position `position`.
            auto branch_code(int b, int position) const -> std::string;

            /// Incidences of v other than parent_block, sorted by branch code.
            auto sorted_branches(int v, int parent_block = -1) const -> std::vector<Incidence>;

            /// Minimum rooted code over all roots of the component.
            auto tree_code(int component) const -> const std::string &;

            /// Least vertex achieving tree_code.
            auto canonical_root(int component) const -> int;

            /// Components other than the one containing v, sorted by tree code.
            auto sorted_components_except(int v) const -> std::vector<int>;

            auto sorted_components() const -> std::vector<int>;
    };

    /// Complete invariant of a forest up to isomorphism.
    auto forest_code(const Structure & forest) -> std::string;

    /// Complete invariant of a rooted forest up to root-preserving isomorphism.
    auto rooted_forest_code(const RootedStructure & forest) -> std::string;

    /// Canonical representative of the isomorphism class. Forests are labelled
    /// by a depth-first walk in code order; other structures take the least
    /// serialization over vertex orders compatible with colour refinement.
    /// Throws TooLarge when a non-forest is too symmetric for permutation search.
    auto canonical_form(const Structure & s) -> Structure;

    /// Canonical representative of a rooted forest, with root 0.
    auto canonical_rooted_forest(const RootedStructure & forest) -> RootedStructure;

    auto isomorphic(const Structure & a, const Structure & b) -> bool;

    /// Short human-readable text, e.g. "3|E:0-1,1-2".
    auto compact_text(const Structure & s) -> std::string;
}

#endif
