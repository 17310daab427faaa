#ifndef FORESTDUAL_FOREST_ALGEBRA_HH
#define FORESTDUAL_FOREST_ALGEBRA_HH 1

#include <forestdual/structure.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace forestdual
{
    /// A finite algebra recognizing a family of forests: states, the value of
    /// the one-vertex rooted tree (init), terminal states, whether the empty
    /// structure belongs, and total operation tables for combine, nu and each
    /// mu(R, i). The mu table of an r-ary relation is indexed row-major by the
    /// r argument states.
    struct ForestAlgebra
    {
        Signature signature;
        std::vector<std::string> states;
        int init = 0;
        std::vector<bool> terminal;
        bool empty_in_family = false;
        std::vector<int> combine;
        std::vector<int> nu;
        std::vector<std::vector<std::vector<int>>> mu;
        std::string provenance;

        /// n states named "0".."n-1", all tables zero.
        ForestAlgebra(Signature sig, int n);

        auto size() const -> int { return static_cast<int>(states.size()); }
        auto combine_of(int a, int b) const -> int { return combine[static_cast<std::size_t>(a) * size() + b]; }
        auto mu_index(std::span<const int> args) const -> std::size_t;
        auto mu_of(std::size_t relation, int position, std::span<const int> args) const -> int
        {
            return mu[relation][position][mu_index(args)];
        }
        auto table_size(std::size_t relation) const -> std::size_t;
    };

    /// State of a rooted forest. The root component is folded from the root's
    /// branches in code order, starting from init, or from nu of the value of
    /// the remaining components when there are any; those are evaluated the
    /// same way, rooted at the canonical root of the least component.
    auto eval_rooted(const ForestAlgebra & alg, const RootedStructure & a) -> int;

    /// Empty structure: the empty flag; otherwise whether the forest rooted at
    /// vertex 0 evaluates to a terminal. Throws NotAForest.
    auto member(const ForestAlgebra & alg, const Structure & a) -> bool;

    struct ReachableStates
    {
        std::vector<int> forest;
        std::vector<int> tree;
    };

    /// Closures of init: trees under the mu operations, forests under mu and nu.
    /// Both sorted.
    auto reachable_states(const ForestAlgebra & alg) -> ReachableStates;

    /// Restricts to forest-reachable states and merges states by the coarsest
    /// congruence of combine, nu and every mu that respects terminals. States
    /// keep the order of their least original member. Throws IncoherentAlgebra
    /// if combine leads out of the reachable states.
    auto minimize(const ForestAlgebra & alg) -> ForestAlgebra;

    struct ContextStep
    {
        enum class Kind { combine, nu, mu };

        Kind kind;
        std::size_t relation = 0;
        /// Where the carried state goes; for combine, 0 is the left operand.
        int position = 0;
        /// Which mu(R, output) is applied.
        int output = 0;
        /// The other arguments in order, without the carried state.
        std::vector<int> others;
    };

    using Context = std::vector<ContextStep>;

    auto apply_context(const ForestAlgebra & alg, int state, const Context & context) -> int;

    /// A sequence of operations that sends exactly one of the two states to a
    /// terminal, read off the refinement rounds. Absent for congruent states.
    auto distinguishing_context(const ForestAlgebra & alg, int a, int b) -> std::optional<Context>;

    auto is_empty(const ForestAlgebra & alg) -> bool;

    /// For every forest-reachable state, a rooted forest evaluating to it,
    /// built with the fewest generator applications; unreachable states are absent.
    auto state_representatives(const ForestAlgebra & alg) -> std::vector<std::optional<RootedStructure>>;

    /// A member, the empty structure if it belongs, otherwise the cheapest
    /// representative of a terminal state.
    auto find_witness(const ForestAlgebra & alg) -> std::optional<Structure>;

    /// Members among the enumerated forests, in enumeration order.
    auto enumerate_members(const ForestAlgebra & alg, int max_vertices) -> std::vector<Structure>;

    struct CoherenceReport
    {
        bool passed = true;
        int trials = 0;
        std::optional<Structure> counterexample;
        int root = -1;
        std::string detail;
    };

    /// Evaluates random forests along random decompositions: root choice,
    /// branch order, the root used for the stray components, and splitting
    /// into combined parts. Also checks that membership does not depend on the
    /// root. Stops at the first disagreement.
    auto check_coherence(const ForestAlgebra & alg, int trials, int max_vertices, std::uint64_t seed) -> CoherenceReport;

    /// Table shapes and ranges, commutativity and associativity of combine,
    /// init as identity. Associativity is checked on all triples up to 256
    /// states and on a fixed sample above. Returns the first violation.
    auto check_table_axioms(const ForestAlgebra & alg) -> std::optional<std::string>;

    struct ValidationOptions
    {
        int trials = 200;
        int max_vertices = 5;
        std::uint64_t seed = 0;
    };

    /// Table axioms and then coherence; throws IncoherentAlgebra.
    auto validate_user_algebra(const ForestAlgebra & alg, const ValidationOptions & options = { }) -> void;
}

#endif
