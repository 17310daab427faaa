#include <forestdual/antichain.hh>
#include <forestdual/canonical.hh>
#include <forestdual/duality.hh>
#include <forestdual/enumerate.hh>
#include <forestdual/errors.hh>

#include <algorithm>
#include <set>

using std::optional;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace forestdual
{
    auto order_report(const vector<Structure> & xs) -> OrderReport
    {
        size_t n = xs.size();
        OrderReport report;
        report.maps.assign(n, vector<bool>(n, false));
        for (size_t i = 0 ; i < n ; ++i)
            for (size_t j = 0 ; j < n ; ++j)
                report.maps[i][j] = i == j || hom_exists(xs[i], xs[j]);

        for (size_t i = 0 ; i < n ; ++i) {
            bool minimal = true;
            for (size_t j = 0 ; j < n && minimal ; ++j)
                if (report.maps[j][i] && ! report.maps[i][j])
                    minimal = false;
            bool repeat = false;
            for (int k : report.minimal)
                repeat = repeat || (report.maps[k][i] && report.maps[i][k]);
            if (minimal && ! repeat)
                report.minimal.push_back(static_cast<int>(i));
        }
        for (size_t i = 0 ; i < n ; ++i)
            for (size_t j = i + 1 ; j < n ; ++j)
                if ((report.maps[i][j] || report.maps[j][i]) && ! isomorphic(xs[i], xs[j]))
                    report.antichain = false;
        return report;
    }

    auto minimal_members(const vector<Structure> & xs) -> vector<Structure>
    {
        vector<Structure> result;
        for (int i : order_report(xs).minimal)
            result.push_back(xs[i]);
        return result;
    }

    auto is_antichain(const vector<Structure> & xs) -> bool
    {
        for (size_t i = 0 ; i < xs.size() ; ++i)
            for (size_t j = i + 1 ; j < xs.size() ; ++j)
                if ((hom_exists(xs[i], xs[j]) || hom_exists(xs[j], xs[i])) && ! isomorphic(xs[i], xs[j]))
                    return false;
        return true;
    }

    auto ex_member_bounded(const ForestAlgebra & alg, const Structure & a, int bound) -> optional<ExCertificate>
    {
        for (auto & t : enumerate_members(alg, bound))
            if (auto h = exists_non_retraction(t, a))
                return ExCertificate{t, std::move(*h)};
        return std::nullopt;
    }

    namespace
    {
        auto canonical_set(const vector<Structure> & xs) -> vector<Structure>
        {
            std::set<Structure> s;
            for (auto & x : xs)
                s.insert(canonical_form(x));
            return {s.begin(), s.end()};
        }
    }

    auto cores_of_minimals_of_list(const vector<Structure> & members) -> vector<Structure>
    {
        vector<Structure> cores;
        for (auto & m : minimal_members(members))
            cores.push_back(core(m));
        return canonical_set(cores);
    }

    auto cores_of_minimals_route_a(const ForestAlgebra & alg, int bound) -> vector<Structure>
    {
        return cores_of_minimals_of_list(enumerate_members(alg, bound));
    }

    auto cores_of_minimals_route_b(const ForestAlgebra & alg, int bound, int margin) -> vector<Structure>
    {
        auto up = up_closure(alg);
        auto members = enumerate_members(alg, bound + margin);
        vector<Structure> result;
        for (auto & a : enumerate_structures(alg.signature, bound, true)) {
            if (! member(up, a))
                continue;
            bool ex = false;
            for (auto & t : members)
                if (exists_non_retraction(t, a)) {
                    ex = true;
                    break;
                }
            if (! ex)
                result.push_back(a);
        }
        return canonical_set(result);
    }

    auto cores_of_minimals_bounded(const ForestAlgebra & alg, int bound, int margin) -> CoresOfMinimals
    {
        CoresOfMinimals out{bound, margin, cores_of_minimals_route_a(alg, bound),
                            cores_of_minimals_route_b(alg, bound, margin), false, ""};
        out.agree = out.route_a == out.route_b;
        out.caveat = "route A sees only members with at most " + to_string(bound)
                   + " vertices; route B searches non-retractions only from members with at most "
                   + to_string(bound + margin) + " vertices; agreement holds on this window only";
        return out;
    }

    namespace
    {
        auto antichain_failures(const vector<Structure> & members, const vector<Structure> & duals, VerificationReport & report) -> void
        {
            auto add = [&] (const Structure & from, const Structure & to, string what, int dual_index) {
                auto h = find_hom_map(from, to);
                Failure f{from, "antichain: " + what, std::nullopt, std::nullopt, dual_index, std::nullopt, compact_text(to)};
                if (dual_index >= 0)
                    f.dual_hom = h;
                else {
                    f.obstruction = to;
                    f.obstruction_hom = h;
                }
                report.failures.push_back(std::move(f));
            };
            for (size_t i = 0 ; i < members.size() ; ++i)
                for (size_t j = 0 ; j < members.size() ; ++j)
                    if (i != j && hom_exists(members[i], members[j]) && ! isomorphic(members[i], members[j]))
                        add(members[i], members[j], "member maps to member", -1);
            for (size_t i = 0 ; i < members.size() ; ++i)
                for (size_t d = 0 ; d < duals.size() ; ++d) {
                    if (hom_exists(members[i], duals[d]))
                        add(members[i], duals[d], "member maps to dual", static_cast<int>(d));
                    if (hom_exists(duals[d], members[i]))
                        add(duals[d], members[i], "dual maps to member", -1);
                }
            for (size_t d = 0 ; d < duals.size() ; ++d)
                for (size_t e = 0 ; e < duals.size() ; ++e)
                    if (d != e && hom_exists(duals[d], duals[e]) && ! isomorphic(duals[d], duals[e]))
                        add(duals[d], duals[e], "dual maps to dual", static_cast<int>(e));
        }
    }

    auto check_splitting(const ForestAlgebra & alg, const vector<Structure> & duals, int max_vertices) -> VerificationReport
    {
        auto report = verify_duality(alg, duals, max_vertices);
        report.method += "; antichain: members with at most " + to_string(max_vertices)
                       + " vertices and the duals, pairwise, both directions";
        antichain_failures(enumerate_members(alg, max_vertices), duals, report);
        return report;
    }

    auto verify_list_duality(const vector<Structure> & members, const vector<Structure> & duals, int max_vertices) -> VerificationReport
    {
        if (members.empty() && duals.empty())
            throw InputError("no structures given, signature unknown");
        const Signature & sig = members.empty() ? duals[0].signature() : members[0].signature();
        VerificationReport report;
        report.bound = max_vertices;
        report.method = "both sides by homomorphism search against the listed members and duals";
        for (auto & b : enumerate_structures(sig, max_vertices, false)) {
            ++report.checked;
            int dual_index = -1;
            optional<VertexMap> dual_hom;
            for (size_t i = 0 ; i < duals.size() && dual_index < 0 ; ++i)
                if (auto h = find_hom_map(b, duals[i])) {
                    dual_index = static_cast<int>(i);
                    dual_hom = std::move(h);
                }
            optional<Structure> obstruction;
            optional<VertexMap> obstruction_hom;
            for (auto & m : members)
                if (auto h = find_hom_map(m, b)) {
                    obstruction = m;
                    obstruction_hom = std::move(h);
                    break;
                }
            bool left = dual_index >= 0;
            bool right = ! obstruction;
            if (left != right)
                report.failures.push_back(Failure{b, left ? "maps to a dual and receives a member" : "maps to no dual and receives no member",
                        obstruction, obstruction_hom, dual_index, dual_hom, ""});
        }
        return report;
    }

    auto check_minimals_are_forests(const vector<Structure> & members, const vector<Structure> & duals, int max_vertices) -> VerificationReport
    {
        if (members.empty()) {
            VerificationReport vacuous;
            vacuous.bound = max_vertices;
            vacuous.method = "no members";
            return vacuous;
        }
        auto report = verify_list_duality(members, duals, max_vertices);
        if (! report.passed()) {
            report.method += "; not a duality pair within the bound, minimal members not examined";
            return report;
        }
        report.method += "; then every minimal member must be a forest";
        for (auto & m : minimal_members(members))
            if (! is_forest(m))
                report.failures.push_back(Failure{m, "minimal member is not a forest", std::nullopt, std::nullopt, -1, std::nullopt, ""});
        return report;
    }
}
