#include <forestdual/families.hh>
#include <forestdual/canonical.hh>
#include <forestdual/errors.hh>

#include "closure.hh"

#include <map>
#include <set>

using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace forestdual
{
    namespace
    {
        using Subset = vector<bool>;

        auto subset_name(const Subset & s) -> string
        {
            string name = "{";
            bool first = true;
            for (size_t v = 0 ; v < s.size() ; ++v)
                if (s[v]) {
                    if (! first)
                        name += ',';
                    first = false;
                    name += to_string(v);
                }
            return name + "}";
        }

        struct HomOps
        {
            const Structure & d;

            auto init() const -> Subset { return Subset(d.vertex_count(), true); }

            auto nu(const Subset & s) const -> Subset
            {
                bool any = std::find(s.begin(), s.end(), true) != s.end();
                return Subset(d.vertex_count(), any);
            }

            auto combine(const Subset & a, const Subset & b) const -> Subset
            {
                Subset c(a.size());
                for (size_t v = 0 ; v < a.size() ; ++v)
                    c[v] = a[v] && b[v];
                return c;
            }

            auto mu(size_t r, int p, const vector<Subset> & args) const -> Subset
            {
                Subset c(d.vertex_count(), false);
                for (auto & z : d.tuples(r)) {
                    bool ok = true;
                    for (size_t j = 0 ; j < z.size() && ok ; ++j)
                        ok = args[j][z[j]];
                    if (ok)
                        c[z[p]] = true;
                }
                return c;
            }

            auto terminal(const Subset & s) const -> bool { return std::find(s.begin(), s.end(), true) != s.end(); }
            auto name(const Subset & s, int) const -> string { return subset_name(s); }
        };

        using Pair = std::pair<int, int>;

        struct ProductOps
        {
            const ForestAlgebra & a;
            const ForestAlgebra & b;
            const std::function<auto (int, int) -> bool> & decide;

            auto init() const -> Pair { return {a.init, b.init}; }
            auto nu(const Pair & x) const -> Pair { return {a.nu[x.first], b.nu[x.second]}; }
            auto combine(const Pair & x, const Pair & y) const -> Pair
            {
                return {a.combine_of(x.first, y.first), b.combine_of(x.second, y.second)};
            }
            auto mu(size_t r, int p, const vector<Pair> & args) const -> Pair
            {
                vector<int> u, v;
                for (auto & x : args) {
                    u.push_back(x.first);
                    v.push_back(x.second);
                }
                return {a.mu_of(r, p, u), b.mu_of(r, p, v)};
            }
            auto terminal(const Pair & x) const -> bool { return decide(x.first, x.second); }
            auto name(const Pair & x, int) const -> string
            {
                return "(" + a.states[x.first] + "," + b.states[x.second] + ")";
            }
        };

        auto product(const ForestAlgebra & a, const ForestAlgebra & b, bool conjunction) -> ForestAlgebra
        {
            std::function<auto (int, int) -> bool> decide = [&] (int x, int y) {
                return conjunction ? (a.terminal[x] && b.terminal[y]) : (a.terminal[x] || b.terminal[y]);
            };
            bool flag = conjunction ? (a.empty_in_family && b.empty_in_family) : (a.empty_in_family || b.empty_in_family);
            string prov = string(conjunction ? "intersection(" : "union(") + a.provenance + ", " + b.provenance + ")";
            return family_product(a, b, decide, flag, prov);
        }
    }

    auto family_product(const ForestAlgebra & a, const ForestAlgebra & b,
            const std::function<auto (int, int) -> bool> & terminal,
            bool empty_in_family, const string & provenance) -> ForestAlgebra
    {
        if (! (a.signature == b.signature))
            throw SignatureMismatch();
        ProductOps ops{a, b, terminal};
        return detail::build_closure<Pair>(a.signature, ops, empty_in_family, provenance);
    }

    auto build_hom_family(const Structure & d) -> ForestAlgebra
    {
        HomOps ops{d};
        return detail::build_closure<Subset>(d.signature(), ops, true, "homfam(" + compact_text(d) + ")");
    }

    auto family_union(const ForestAlgebra & a, const ForestAlgebra & b) -> ForestAlgebra
    {
        return product(a, b, false);
    }

    auto family_intersection(const ForestAlgebra & a, const ForestAlgebra & b) -> ForestAlgebra
    {
        return product(a, b, true);
    }

    auto family_complement(const ForestAlgebra & a) -> ForestAlgebra
    {
        ForestAlgebra c = a;
        for (int s = 0 ; s < c.size() ; ++s)
            c.terminal[s] = ! a.terminal[s];
        c.empty_in_family = ! a.empty_in_family;
        c.provenance = "complement(" + a.provenance + ")";
        return c;
    }

    auto build_all_forests_family(const Signature & signature) -> ForestAlgebra
    {
        ForestAlgebra alg(signature, 1);
        alg.states[0] = "forest";
        alg.terminal[0] = true;
        alg.empty_in_family = true;
        alg.provenance = "forests";
        return alg;
    }

    auto build_trees_family(const Signature & signature) -> ForestAlgebra
    {
        constexpr int tree = 0, nontree = 1;
        ForestAlgebra alg(signature, 2);
        alg.states = {"tree", "nontree"};
        alg.init = tree;
        alg.terminal = {true, false};
        alg.empty_in_family = false;
        alg.provenance = "trees";
        alg.nu = {nontree, nontree};
        alg.combine = {tree, nontree, nontree, nontree};
        for (size_t r = 0 ; r < signature.size() ; ++r)
            for (auto & table : alg.mu[r]) {
                // only the all-tree tuple, index 0, stays a tree
                std::fill(table.begin(), table.end(), nontree);
                table[0] = tree;
            }
        return alg;
    }

    auto build_obstruction_family(const Signature & signature, const vector<Structure> & ds) -> ForestAlgebra
    {
        ForestAlgebra acc = build_all_forests_family(signature);
        string prov;
        for (auto & d : ds) {
            if (! (d.signature() == signature))
                throw SignatureMismatch();
            acc = minimize(family_intersection(acc, family_complement(build_hom_family(d))));
            prov += (prov.empty() ? "" : ", ") + compact_text(d);
        }
        acc.provenance = "obstruction(" + prov + ")";
        return acc;
    }

    namespace
    {
        auto hanging_vertices(const ForestView & view, int v, int parent_block, vector<int> & out) -> void
        {
            out.push_back(v);
            for (auto & inc : view.incidences(v))
                if (inc.block != parent_block) {
                    auto & t = view.block_tuple(inc.block);
                    for (int k = 0 ; k < static_cast<int>(t.size()) ; ++k)
                        if (k != inc.position)
                            hanging_vertices(view, t[k], inc.block, out);
                }
        }

        constexpr size_t subset_limit = 16;

        const string dead = "#dead";

        struct FiniteOps
        {
            const Signature & signature;
            int limit;
            std::map<string, RootedStructure> live;
            std::set<string> members;

            auto lookup(const RootedStructure & x) const -> string
            {
                if (x.structure.vertex_count() > limit)
                    return dead;
                auto code = rooted_forest_code(x);
                return live.count(code) ? code : dead;
            }

            auto init() const -> string { return lookup(trivial_rooted(signature)); }

            auto nu(const string & x) const -> string
            {
                if (x == dead)
                    return dead;
                auto & a = live.at(x);
                if (a.structure.vertex_count() + 1 > limit)
                    return dead;
                return lookup(add_isolated_root(a));
            }

            auto combine(const string & x, const string & y) const -> string
            {
                if (x == dead || y == dead)
                    return dead;
                auto & a = live.at(x);
                auto & b = live.at(y);
                if (a.structure.vertex_count() + b.structure.vertex_count() - 1 > limit)
                    return dead;
                return lookup(combine_rooted(a, b));
            }

            auto mu(size_t r, int p, const vector<string> & args) const -> string
            {
                int total = 0;
                vector<RootedStructure> parts;
                for (auto & x : args) {
                    if (x == dead)
                        return dead;
                    parts.push_back(live.at(x));
                    total += parts.back().structure.vertex_count();
                }
                if (total > limit)
                    return dead;
                auto cat = concatenate(r, parts);
                return lookup(RootedStructure{std::move(cat.structure), cat.roots[p]});
            }

            auto terminal(const string & x) const -> bool
            {
                return x != dead && members.count(forest_code(unroot(live.at(x))));
            }

            auto name(const string & x, int) const -> string
            {
                if (x == dead)
                    return "dead";
                auto & a = live.at(x);
                return compact_text(a.structure) + "@" + to_string(a.root);
            }
        };
    }

    auto build_finite_family(const Signature & signature, const vector<Structure> & members) -> ForestAlgebra
    {
        FiniteOps ops{signature, 0, { }, { }};
        bool empty_member = false;
        string prov;
        for (auto & m : members) {
            if (! (m.signature() == signature))
                throw SignatureMismatch();
            if (! is_forest(m))
                throw NotAForest("build_finite_family");
            prov += (prov.empty() ? "" : ", ") + compact_text(m);
            if (m.empty()) {
                empty_member = true;
                continue;
            }
            ops.members.insert(forest_code(m));
            ops.limit = std::max(ops.limit, m.vertex_count());

            ForestView view(m);
            for (int w = 0 ; w < m.vertex_count() ; ++w) {
                auto & incs = view.incidences(w);
                vector<int> others;
                for (int c = 0 ; c < view.component_count() ; ++c)
                    if (c != view.component(w))
                        others.push_back(c);
                if (incs.size() > subset_limit || others.size() > subset_limit)
                    throw TooLarge("member has too many branches or components for the finite-family construction");
                for (unsigned long bs = 0 ; bs < (1ul << incs.size()) ; ++bs)
                    for (unsigned long cs = 0 ; cs < (1ul << others.size()) ; ++cs) {
                        vector<int> vs{w};
                        for (size_t k = 0 ; k < incs.size() ; ++k)
                            if (bs >> k & 1) {
                                auto & t = view.block_tuple(incs[k].block);
                                for (int q = 0 ; q < static_cast<int>(t.size()) ; ++q)
                                    if (q != incs[k].position)
                                        hanging_vertices(view, t[q], incs[k].block, vs);
                            }
                        for (size_t k = 0 ; k < others.size() ; ++k)
                            if (cs >> k & 1)
                                for (int u : view.component_vertices(others[k]))
                                    vs.push_back(u);
                        RootedStructure part{induced_substructure(m, vs), 0};
                        auto code = rooted_forest_code(part);
                        if (! ops.live.count(code))
                            ops.live.emplace(code, canonical_rooted_forest(part));
                    }
            }
        }
        auto alg = detail::build_closure<string>(signature, ops, empty_member, "finite(" + prov + ")");
        return minimize(alg);
    }
}
