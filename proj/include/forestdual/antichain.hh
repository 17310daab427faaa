#ifndef FORESTDUAL_ANTICHAIN_HH
#define FORESTDUAL_ANTICHAIN_HH 1

#include <forestdual/forest_algebra.hh>
#include <forestdual/homomorphism.hh>
#include <forestdual/report.hh>

#include <optional>
#include <string>
#include <vector>

namespace forestdual
{
    struct OrderReport
    {
        /// maps[i][j]: xs[i] -> xs[j].
        std::vector<std::vector<bool>> maps;
        std::vector<int> minimal;
        bool antichain = true;
    };

    auto order_report(const std::vector<Structure> & xs) -> OrderReport;

    /// Members m with m -> x whenever x -> m, one per hom-equivalence class,
    /// in list order.
    auto minimal_members(const std::vector<Structure> & xs) -> std::vector<Structure>;

    /// No homomorphism either way between any two non-isomorphic members.
    auto is_antichain(const std::vector<Structure> & xs) -> bool;

    struct ExCertificate
    {
        Structure member;
        Homomorphism hom;
    };

    /// A member with at most bound vertices and a non-retraction from it to a.
    /// Absence only means there is none within the bound.
    auto ex_member_bounded(const ForestAlgebra & alg, const Structure & a, int bound) -> std::optional<ExCertificate>;

    /// Cores of the minimal members among those with at most bound vertices,
    /// canonical and sorted.
    auto cores_of_minimals_route_a(const ForestAlgebra & alg, int bound) -> std::vector<Structure>;

    /// Forests up to bound vertices in the up-closure with no non-retraction
    /// from a member of up to bound + margin vertices, canonical and sorted.
    auto cores_of_minimals_route_b(const ForestAlgebra & alg, int bound, int margin) -> std::vector<Structure>;

    struct CoresOfMinimals
    {
        int bound;
        int margin;
        std::vector<Structure> route_a;
        std::vector<Structure> route_b;
        bool agree;
        std::string caveat;
    };

    auto cores_of_minimals_bounded(const ForestAlgebra & alg, int bound, int margin) -> CoresOfMinimals;

    /// Cores of the minimal members of an explicit list, canonical, one per
    /// isomorphism class, sorted.
    auto cores_of_minimals_of_list(const std::vector<Structure> & members) -> std::vector<Structure>;

    /// Duality as in verify_duality, and the antichain condition on the
    /// members with at most max_vertices vertices together with the duals.
    auto check_splitting(const ForestAlgebra & alg, const std::vector<Structure> & duals, int max_vertices) -> VerificationReport;

    /// Duality of an explicit list against duals by direct homomorphism tests.
    auto verify_list_duality(const std::vector<Structure> & members, const std::vector<Structure> & duals, int max_vertices) -> VerificationReport;

    /// Verifies the list duality first; if it holds, reports every minimal
    /// member that is not a forest.
    auto check_minimals_are_forests(const std::vector<Structure> & members, const std::vector<Structure> & duals, int max_vertices) -> VerificationReport;
}

#endif
