#ifndef FORESTDUAL_DUALITY_HH
#define FORESTDUAL_DUALITY_HH 1

#include <forestdual/forest_algebra.hh>
#include <forestdual/report.hh>

#include <optional>
#include <vector>

namespace forestdual
{
    /// The union-context class of a forest A: the state of A with an isolated
    /// root added, which decides A + B for nonempty B, together with whether
    /// A itself is a member, which decides B empty.
    struct ForestClass
    {
        int state;
        bool member;

        auto operator<=> (const ForestClass &) const = default;
    };

    /// The empty forest gives (init, empty flag); otherwise nu of the forest
    /// rooted at vertex 0, and membership. alg must be minimized.
    auto forest_state(const ForestAlgebra & alg, const Structure & a) -> ForestClass;

    /// Class of the tree whose rooted state is s.
    auto class_of_tree_state(const ForestAlgebra & alg, int s) -> ForestClass;

    /// Classes of the tree-reachable states, sorted.
    auto tree_classes(const ForestAlgebra & alg) -> std::vector<ForestClass>;

    struct TreeDual
    {
        Structure structure;
        /// Every vertex as a set of tree-reachable states of algebra.
        std::vector<std::vector<int>> vertex_states;
        /// The minimized algebra the states refer to.
        ForestAlgebra algebra;
    };

    /// The dual of a family of trees. Vertices are the sets
    /// V = { c : combine(h, c) is not terminal for all h in H } over sets H of
    /// tree-reachable states that contain init and no terminal; (V1..Vr) is in
    /// R when every mu(R, j) of every argument choice from V1 x .. x Vr lands
    /// in Vj. Throws EmptyStructureMember or NotATreeFamily.
    auto tree_dual(const ForestAlgebra & alg) -> TreeDual;

    /// Every vertex v of the tree a has the state of (a, v) in the vertex set of phi(v).
    auto check_tinimage(const TreeDual & dual, const Structure & a, const VertexMap & phi) -> bool;

    /// Forests with no component whose tree class is in q, tracked as the
    /// state of the root component and whether every finished component
    /// avoided q. alg must be minimized.
    auto bad_q_algebra(const ForestAlgebra & alg, const std::vector<ForestClass> & q) -> ForestAlgebra;

    struct Admissibility
    {
        bool admissible;
        /// A member with no component in q.
        std::optional<Structure> witness;
    };

    /// Throws InputError unless q lies within tree_classes(alg).
    auto check_admissible(const ForestAlgebra & alg, const std::vector<ForestClass> & q) -> Admissibility;
    auto is_admissible(const ForestAlgebra & alg, const std::vector<ForestClass> & q) -> bool;

    /// Trees whose class lies in q.
    auto tree_class_family(const ForestAlgebra & alg, const std::vector<ForestClass> & q) -> ForestAlgebra;

    /// tree_dual of tree_class_family for every admissible q, keeping the first
    /// of every hom-equivalent group. Throws EmptyStructureMember.
    auto forest_dual_family(const ForestAlgebra & alg) -> std::vector<Structure>;

    /// Cores of the duals with every dual that maps to another one dropped.
    /// Same forests map to some member.
    auto reduce_duals(const std::vector<Structure> & duals) -> std::vector<Structure>;

    /// For every canonical structure B up to max_vertices: B maps to some dual
    /// iff no member maps to B. The right side is exact: emptiness of the
    /// family intersected with the forests mapping to B.
    auto verify_duality(const ForestAlgebra & alg, const std::vector<Structure> & duals, int max_vertices) -> VerificationReport;

    /// Forests receiving a homomorphism from some member, as the obstruction
    /// family of the reduced duals.
    auto up_closure(const ForestAlgebra & alg) -> ForestAlgebra;
}

#endif
