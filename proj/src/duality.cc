#include <forestdual/duality.hh>
#include <forestdual/canonical.hh>
#include <forestdual/enumerate.hh>
#include <forestdual/errors.hh>
#include <forestdual/families.hh>

#include "closure.hh"

#include <algorithm>
#include <set>

using std::optional;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

using Bits = boost::dynamic_bitset<>;

namespace forestdual
{
    auto forest_state(const ForestAlgebra & alg, const Structure & a) -> ForestClass
    {
        if (a.empty())
            return {alg.init, alg.empty_in_family};
        return class_of_tree_state(alg, eval_rooted(alg, RootedStructure{a, 0}));
    }

    auto class_of_tree_state(const ForestAlgebra & alg, int s) -> ForestClass
    {
        return {alg.nu[s], alg.terminal[s]};
    }

    auto tree_classes(const ForestAlgebra & alg) -> vector<ForestClass>
    {
        vector<ForestClass> result;
        for (int s : reachable_states(alg).tree)
            result.push_back(class_of_tree_state(alg, s));
        std::sort(result.begin(), result.end());
        result.erase(std::unique(result.begin(), result.end()), result.end());
        return result;
    }

    namespace
    {
        auto check_no_empty_member(const ForestAlgebra & alg) -> void
        {
            if (alg.empty_in_family)
                throw EmptyStructureMember();
        }

        auto for_each_vertex_tuple(int n, int arity, const auto & visit) -> void
        {
            if (n == 0)
                return;
            vector<int> t(arity, 0);
            while (true) {
                visit(static_cast<const vector<int> &>(t));
                int p = arity - 1;
                while (p >= 0 && ++t[p] == n)
                    t[p--] = 0;
                if (p < 0)
                    return;
            }
        }
    }

    auto tree_dual(const ForestAlgebra & alg) -> TreeDual
    {
        check_no_empty_member(alg);
        if (! is_empty(family_intersection(alg, family_complement(build_trees_family(alg.signature)))))
            throw NotATreeFamily();

        ForestAlgebra m = minimize(alg);
        auto c = reachable_states(m).tree;
        int k = static_cast<int>(c.size());
        vector<int> position(m.size(), -1);
        for (int i = 0 ; i < k ; ++i)
            position[c[i]] = i;

        // closure system generated by the sets of partners avoiding terminals
        std::set<Bits> closed;
        Bits all(k);
        all.set();
        closed.insert(all);
        for (int h : c) {
            Bits g(k);
            for (int i = 0 ; i < k ; ++i)
                if (! m.terminal[m.combine_of(h, c[i])])
                    g.set(i);
            vector<Bits> add;
            for (auto & x : closed)
                add.push_back(x & g);
            closed.insert(add.begin(), add.end());
        }

        vector<vector<int>> vertices;
        vector<Bits> vertex_bits;
        for (auto & x : closed) {
            if (! x.test(position[m.init]))
                continue;
            bool clean = true;
            for (int i = 0 ; i < k && clean ; ++i)
                clean = ! (x.test(i) && m.terminal[c[i]]);
            if (! clean)
                continue;
            vector<int> states;
            for (int i = 0 ; i < k ; ++i)
                if (x.test(i))
                    states.push_back(c[i]);
            vertices.push_back(std::move(states));
        }
        std::sort(vertices.begin(), vertices.end());
        for (auto & v : vertices) {
            Bits b(m.size());
            for (int s : v)
                b.set(s);
            vertex_bits.push_back(std::move(b));
        }

        int n = static_cast<int>(vertices.size());
        Structure d{m.signature, n};
        for (size_t r = 0 ; r < m.signature.size() ; ++r) {
            int arity = m.signature.arity(r);
            for_each_vertex_tuple(n, arity, [&] (const vector<int> & vt) {
                    bool ok = true;
                    vector<size_t> pick(arity, 0);
                    vector<int> args(arity);
                    while (ok) {
                        for (int p = 0 ; p < arity ; ++p)
                            args[p] = vertices[vt[p]][pick[p]];
                        for (int j = 0 ; j < arity && ok ; ++j)
                            ok = vertex_bits[vt[j]].test(m.mu_of(r, j, args));
                        int p = arity - 1;
                        while (p >= 0 && ++pick[p] == vertices[vt[p]].size())
                            pick[p--] = 0;
                        if (p < 0)
                            break;
                    }
                    if (ok)
                        d.add_tuple(r, vt);
                });
        }
        return TreeDual{std::move(d), std::move(vertices), std::move(m)};
    }

    auto check_tinimage(const TreeDual & dual, const Structure & a, const VertexMap & phi) -> bool
    {
        for (int v = 0 ; v < a.vertex_count() ; ++v) {
            int s = eval_rooted(dual.algebra, RootedStructure{a, v});
            auto & set = dual.vertex_states.at(phi[v]);
            if (! std::binary_search(set.begin(), set.end(), s))
                return false;
        }
        return true;
    }

    namespace
    {
        using Flagged = std::pair<int, bool>;

        struct BadOps
        {
            const ForestAlgebra & x;
            const vector<ForestClass> & q;

            auto in_q(int k) const -> bool
            {
                return std::binary_search(q.begin(), q.end(), class_of_tree_state(x, k));
            }

            auto init() const -> Flagged { return {x.init, true}; }
            auto nu(const Flagged & s) const -> Flagged { return {x.init, s.second && ! in_q(s.first)}; }
            auto combine(const Flagged & a, const Flagged & b) const -> Flagged
            {
                return {x.combine_of(a.first, b.first), a.second && b.second};
            }
            auto mu(size_t r, int p, const vector<Flagged> & args) const -> Flagged
            {
                vector<int> ks;
                bool f = true;
                for (auto & a : args) {
                    ks.push_back(a.first);
                    f = f && a.second;
                }
                return {x.mu_of(r, p, ks), f};
            }
            auto terminal(const Flagged & s) const -> bool { return s.second && ! in_q(s.first); }
            auto name(const Flagged & s, int) const -> string
            {
                return "(" + x.states[s.first] + "," + (s.second ? "avoids" : "hit") + ")";
            }
        };

        auto check_classes(const ForestAlgebra & alg, const vector<ForestClass> & q) -> void
        {
            auto classes = tree_classes(alg);
            if (! std::is_sorted(q.begin(), q.end()))
                throw InputError("class list is not sorted");
            for (auto & c : q)
                if (! std::binary_search(classes.begin(), classes.end(), c))
                    throw InputError("(" + to_string(c.state) + ", " + (c.member ? "member" : "nonmember") + ") is not a tree class");
        }

        auto q_name(const ForestAlgebra & alg, const vector<ForestClass> & q) -> string
        {
            string name = "{";
            for (size_t i = 0 ; i < q.size() ; ++i)
                name += (i ? "," : "") + alg.states[q[i].state] + (q[i].member ? "+" : "-");
            return name + "}";
        }
    }

    auto bad_q_algebra(const ForestAlgebra & alg, const vector<ForestClass> & q) -> ForestAlgebra
    {
        check_classes(alg, q);
        BadOps ops{alg, q};
        return detail::build_closure<Flagged>(alg.signature, ops, true, "bad" + q_name(alg, q));
    }

    auto check_admissible(const ForestAlgebra & alg, const vector<ForestClass> & q) -> Admissibility
    {
        auto both = family_intersection(alg, bad_q_algebra(alg, q));
        if (is_empty(both))
            return {true, std::nullopt};
        return {false, find_witness(both)};
    }

    auto is_admissible(const ForestAlgebra & alg, const vector<ForestClass> & q) -> bool
    {
        return check_admissible(alg, q).admissible;
    }

    auto tree_class_family(const ForestAlgebra & alg, const vector<ForestClass> & q) -> ForestAlgebra
    {
        check_classes(alg, q);
        auto trees = build_trees_family(alg.signature);
        std::function<auto (int, int) -> bool> decide = [&] (int x, int t) {
            return trees.terminal[t] && std::binary_search(q.begin(), q.end(), class_of_tree_state(alg, x));
        };
        return family_product(alg, trees, decide, false, "trees" + q_name(alg, q) + " of " + alg.provenance);
    }

    auto forest_dual_family(const ForestAlgebra & alg) -> vector<Structure>
    {
        check_no_empty_member(alg);
        ForestAlgebra m = minimize(alg);
        auto classes = tree_classes(m);
        if (classes.size() > 20)
            throw TooLarge("too many tree classes to range over their subsets");

        vector<Structure> duals;
        for (unsigned long mask = 0 ; mask < (1ul << classes.size()) ; ++mask) {
            vector<ForestClass> q;
            for (size_t i = 0 ; i < classes.size() ; ++i)
                if (mask >> i & 1)
                    q.push_back(classes[i]);
            if (! is_admissible(m, q))
                continue;
            auto d = tree_dual(minimize(tree_class_family(m, q))).structure;
            bool seen = false;
            for (auto & e : duals)
                if (hom_equivalent(d, e)) {
                    seen = true;
                    break;
                }
            if (! seen)
                duals.push_back(std::move(d));
        }
        return duals;
    }

    auto reduce_duals(const vector<Structure> & duals) -> vector<Structure>
    {
        vector<Structure> cores;
        for (auto & d : duals)
            cores.push_back(core(d));
        vector<Structure> kept;
        for (size_t i = 0 ; i < cores.size() ; ++i) {
            bool dominated = false;
            for (size_t j = 0 ; j < cores.size() && ! dominated ; ++j) {
                if (i == j || ! hom_exists(cores[i], cores[j]))
                    continue;
                // among hom-equivalent duals keep the first
                dominated = ! hom_exists(cores[j], cores[i]) || j < i;
            }
            if (! dominated)
                kept.push_back(cores[i]);
        }
        return kept;
    }

    auto verify_duality(const ForestAlgebra & alg, const vector<Structure> & duals, int max_vertices) -> VerificationReport
    {
        for (auto & d : duals)
            if (! (d.signature() == alg.signature))
                throw SignatureMismatch();
        ForestAlgebra m = minimize(alg);
        VerificationReport report;
        report.bound = max_vertices;
        report.method = "left: homomorphism search into each dual; right: exact, by emptiness of the family "
                        "intersected with the forests that map to the structure";
        for (auto & b : enumerate_structures(alg.signature, max_vertices, false)) {
            ++report.checked;
            int dual_index = -1;
            optional<VertexMap> dual_hom;
            for (size_t i = 0 ; i < duals.size() && dual_index < 0 ; ++i)
                if (auto h = find_hom_map(b, duals[i])) {
                    dual_index = static_cast<int>(i);
                    dual_hom = std::move(h);
                }
            bool left = dual_index >= 0;
            auto meet = family_intersection(m, build_hom_family(b));
            bool right = is_empty(meet);
            if (left == right)
                continue;

            Failure f{b, left ? "maps to a dual and receives a member" : "maps to no dual and receives no member",
                      std::nullopt, std::nullopt, dual_index, dual_hom, ""};
            if (! right) {
                f.obstruction = find_witness(meet);
                if (f.obstruction)
                    f.obstruction_hom = find_hom_map(*f.obstruction, b);
            }
            report.failures.push_back(std::move(f));
        }
        return report;
    }

    auto up_closure(const ForestAlgebra & alg) -> ForestAlgebra
    {
        auto duals = reduce_duals(forest_dual_family(alg));
        auto up = build_obstruction_family(alg.signature, duals);
        up.provenance = "up(" + alg.provenance + ")";
        return up;
    }
}
