#ifndef FORESTDUAL_HOMOMORPHISM_HH
#define FORESTDUAL_HOMOMORPHISM_HH 1

#include <forestdual/structure.hh>

#include <boost/dynamic_bitset.hpp>

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace forestdual
{
    using VertexMap = std::vector<int>;

    /// Allowed images per source vertex, each a bitset over target vertices.
    using Domains = std::vector<boost::dynamic_bitset<>>;

    struct Homomorphism
    {
        Structure source;
        Structure target;
        VertexMap map;
    };

    auto is_homomorphism(const Structure & a, const Structure & b, std::span<const int> map) -> bool;

    auto full_domains(const Structure & a, const Structure & b) -> Domains;

    /// Lexicographically least homomorphism (vertex 0's image first) extending
    /// the partial map. Forest sources are solved by dynamic programming over
    /// the incidence tree, everything else by backtracking with arc
    /// consistency. Throws InputError when a constraint is out of range.
    auto find_hom(const Structure & a, const Structure & b,
            const std::vector<std::optional<int>> & constraints = { }) -> std::optional<Homomorphism>;

    /// As find_hom, over explicit domains; nullptr means unrestricted.
    auto find_hom_map(const Structure & a, const Structure & b, const Domains * domains = nullptr) -> std::optional<VertexMap>;

    auto find_hom_backtracking(const Structure & a, const Structure & b, const Domains * domains = nullptr) -> std::optional<VertexMap>;

    /// Requires is_forest(a).
    auto find_hom_tree_dp(const Structure & a, const Structure & b, const Domains * domains = nullptr) -> std::optional<VertexMap>;

    auto hom_exists(const Structure & a, const Structure & b) -> bool;

    auto hom_equivalent(const Structure & a, const Structure & b) -> bool;

    /// Calls visit on every homomorphism in lexicographic order until it returns false.
    auto for_each_hom(const Structure & a, const Structure & b,
            const std::function<auto (const VertexMap &) -> bool> & visit) -> void;

    /// Whether h has a right inverse g (h after g is the identity on the
    /// target), found by a search with g(v) restricted to the preimage of v.
    auto is_retraction(const Structure & source, const Structure & target, std::span<const int> map) -> bool;
    auto is_retraction(const Homomorphism & h) -> bool;

    /// The component characterization: h is a retraction iff every component
    /// of the target is the isomorphic image under h of some substructure of
    /// the source. Checked by enumerating preimage selections per component.
    auto is_retraction_by_components(const Structure & source, const Structure & target, std::span<const int> map) -> bool;

    /// First homomorphism a -> b (lexicographic order) that is not a retraction.
    auto exists_non_retraction(const Structure & a, const Structure & b) -> std::optional<Homomorphism>;

    /// The core, canonicalized. Computed by repeatedly mapping the structure
    /// into itself minus one vertex, trying vertices in id order.
    auto core(const Structure & s) -> Structure;

    /// Every endomorphism is an automorphism.
    auto is_core(const Structure & s) -> bool;
}

#endif
