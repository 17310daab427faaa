#include <forestdual/forest_algebra.hh>
#include <forestdual/canonical.hh>
#include <forestdual/enumerate.hh>
#include <forestdual/errors.hh>

#include "closure.hh"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <set>

using std::optional;
using std::size_t;
using std::span;
using std::string;
using std::to_string;
using std::vector;

namespace forestdual
{
    ForestAlgebra::ForestAlgebra(Signature sig, int n) :
        signature(std::move(sig)),
        states(n),
        terminal(n, false),
        combine(static_cast<size_t>(n) * n, 0),
        nu(n, 0),
        mu(signature.size())
    {
        for (int s = 0 ; s < n ; ++s)
            states[s] = to_string(s);
        for (size_t r = 0 ; r < signature.size() ; ++r)
            mu[r].assign(signature.arity(r), vector<int>(table_size(r), 0));
    }

    auto ForestAlgebra::mu_index(span<const int> args) const -> size_t
    {
        size_t index = 0;
        for (int a : args)
            index = index * size() + a;
        return index;
    }

    auto ForestAlgebra::table_size(size_t relation) const -> size_t
    {
        size_t t = 1;
        for (int p = 0 ; p < signature.arity(relation) ; ++p)
            t *= size();
        return t;
    }

    namespace
    {
        auto check_forest(const Structure & s, const char * where) -> void
        {
            if (! is_forest(s))
                throw NotAForest(where);
        }

        class Evaluator
        {
            private:
                const ForestAlgebra & _alg;
                const ForestView & _view;

            public:
                Evaluator(const ForestAlgebra & alg, const ForestView & view) : _alg(alg), _view(view) { }

                auto fold(int v, const vector<ForestView::Incidence> & branches, int start) const -> int
                {
                    int s = start;
                    vector<int> args;
                    for (auto & inc : branches) {
                        auto & t = _view.block_tuple(inc.block);
                        args.assign(t.size(), 0);
                        for (int k = 0 ; k < static_cast<int>(t.size()) ; ++k)
                            args[k] = k == inc.position ? s : subtree(t[k], inc.block);
                        s = _alg.mu_of(_view.block(inc.block).relation, inc.position, args);
                    }
                    (void) v;
                    return s;
                }

                auto subtree(int v, int parent_block) const -> int
                {
                    return fold(v, _view.sorted_branches(v, parent_block), _alg.init);
                }

                auto rooted(int root, span<const int> strays) const -> int
                {
                    int base = _alg.init;
                    if (! strays.empty())
                        base = _alg.nu[rooted(_view.canonical_root(strays[0]), strays.subspan(1))];
                    return fold(root, _view.sorted_branches(root), base);
                }
        };
    }

    auto eval_rooted(const ForestAlgebra & alg, const RootedStructure & a) -> int
    {
        check_forest(a.structure, "eval_rooted");
        if (! (alg.signature == a.structure.signature()))
            throw SignatureMismatch();
        ForestView view(a.structure);
        auto strays = view.sorted_components_except(a.root);
        return Evaluator(alg, view).rooted(a.root, strays);
    }

    auto member(const ForestAlgebra & alg, const Structure & a) -> bool
    {
        check_forest(a, "member");
        if (a.empty())
            return alg.empty_in_family;
        return alg.terminal[eval_rooted(alg, RootedStructure{a, 0})];
    }

    namespace
    {
        /// Closure of init under mu, and under nu as well when with_nu.
        auto closure_of_init(const ForestAlgebra & alg, bool with_nu) -> vector<int>
        {
            vector<char> seen(alg.size(), 0);
            vector<int> order{alg.init};
            seen[alg.init] = 1;
            auto add = [&] (int s) {
                if (! seen[s]) {
                    seen[s] = 1;
                    order.push_back(s);
                }
            };
            for (int k = 0 ; k < static_cast<int>(order.size()) ; ++k) {
                if (with_nu)
                    add(alg.nu[order[k]]);
                for (size_t r = 0 ; r < alg.signature.size() ; ++r) {
                    int arity = alg.signature.arity(r);
                    vector<int> args(arity);
                    detail::for_each_tuple_with(k, arity, [&] (const vector<int> & t) {
                            for (int p = 0 ; p < arity ; ++p)
                                args[p] = order[t[p]];
                            for (int p = 0 ; p < arity ; ++p)
                                add(alg.mu_of(r, p, args));
                        });
                }
            }
            std::sort(order.begin(), order.end());
            return order;
        }
    }

    auto reachable_states(const ForestAlgebra & alg) -> ReachableStates
    {
        return ReachableStates{closure_of_init(alg, true), closure_of_init(alg, false)};
    }

    namespace
    {
        auto restrict_to(const ForestAlgebra & alg, const vector<int> & keep) -> ForestAlgebra
        {
            int m = static_cast<int>(keep.size());
            vector<int> renumber(alg.size(), -1);
            for (int i = 0 ; i < m ; ++i)
                renumber[keep[i]] = i;
            auto map = [&] (int s) {
                if (renumber[s] < 0)
                    throw IncoherentAlgebra("operation leaves the reachable states at state " + alg.states[s]);
                return renumber[s];
            };

            ForestAlgebra out(alg.signature, m);
            out.init = map(alg.init);
            out.empty_in_family = alg.empty_in_family;
            out.provenance = alg.provenance;
            for (int i = 0 ; i < m ; ++i) {
                out.states[i] = alg.states[keep[i]];
                out.terminal[i] = alg.terminal[keep[i]];
                out.nu[i] = map(alg.nu[keep[i]]);
                for (int j = 0 ; j < m ; ++j)
                    out.combine[static_cast<size_t>(i) * m + j] = map(alg.combine_of(keep[i], keep[j]));
            }
            for (size_t r = 0 ; r < alg.signature.size() ; ++r) {
                int arity = alg.signature.arity(r);
                vector<int> t(arity, 0), orig(arity);
                if (m == 0)
                    continue;
                while (true) {
                    for (int p = 0 ; p < arity ; ++p)
                        orig[p] = keep[t[p]];
                    size_t at = out.mu_index(t);
                    for (int p = 0 ; p < arity ; ++p)
                        out.mu[r][p][at] = map(alg.mu_of(r, p, orig));
                    int p = arity - 1;
                    while (p >= 0 && ++t[p] == m)
                        t[p--] = 0;
                    if (p < 0)
                        break;
                }
            }
            return out;
        }

        /// One refinement round: the new class of every state from its class
        /// and the classes of every operation result it takes part in.
        auto refine(const ForestAlgebra & alg, const vector<int> & cls) -> vector<int>
        {
            int n = alg.size();
            vector<vector<int>> sigs(n);
            for (int s = 0 ; s < n ; ++s) {
                auto & g = sigs[s];
                g.push_back(cls[s]);
                g.push_back(cls[alg.nu[s]]);
                for (int t = 0 ; t < n ; ++t) {
                    g.push_back(cls[alg.combine_of(s, t)]);
                    g.push_back(cls[alg.combine_of(t, s)]);
                }
            }
            for (size_t r = 0 ; r < alg.signature.size() ; ++r) {
                int arity = alg.signature.arity(r);
                size_t others = 1;
                for (int p = 1 ; p < arity ; ++p)
                    others *= n;
                vector<int> t(arity);
                for (int s = 0 ; s < n ; ++s)
                    for (int p = 0 ; p < arity ; ++p)
                        for (size_t u = 0 ; u < others ; ++u) {
                            size_t rest = u;
                            for (int q = arity - 1 ; q >= 0 ; --q) {
                                if (q == p)
                                    continue;
                                t[q] = static_cast<int>(rest % n);
                                rest /= n;
                            }
                            t[p] = s;
                            size_t at = alg.mu_index(t);
                            for (int out = 0 ; out < arity ; ++out)
                                sigs[s].push_back(cls[alg.mu[r][out][at]]);
                        }
            }

            std::map<vector<int>, int> ids;
            vector<int> next(n);
            for (int s = 0 ; s < n ; ++s)
                next[s] = ids.emplace(sigs[s], static_cast<int>(ids.size())).first->second;
            return next;
        }
    }

    namespace
    {
        auto count_classes(const vector<int> & cls) -> int
        {
            return cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
        }

        auto terminal_partition(const ForestAlgebra & alg) -> vector<int>
        {
            vector<int> cls(alg.size());
            int first = alg.size() > 0 ? static_cast<int>(alg.terminal[0]) : 0;
            for (int s = 0 ; s < alg.size() ; ++s)
                cls[s] = static_cast<int>(alg.terminal[s]) == first ? 0 : 1;
            return cls;
        }

        /// Partitions of the refinement rounds, the last one stable.
        auto refinement_history(const ForestAlgebra & alg) -> vector<vector<int>>
        {
            vector<vector<int>> history{terminal_partition(alg)};
            while (true) {
                auto next = refine(alg, history.back());
                if (count_classes(next) == count_classes(history.back()))
                    break;
                history.push_back(std::move(next));
            }
            return history;
        }

        auto for_each_index_tuple(int n, int arity, const auto & visit) -> void
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

    auto minimize(const ForestAlgebra & alg) -> ForestAlgebra
    {
        auto sub = restrict_to(alg, reachable_states(alg).forest);
        auto cls = refinement_history(sub).back();
        int k = count_classes(cls);
        vector<int> rep(k, -1);
        for (int s = 0 ; s < sub.size() ; ++s)
            if (rep[cls[s]] < 0)
                rep[cls[s]] = s;

        ForestAlgebra out(sub.signature, k);
        out.init = cls[sub.init];
        out.empty_in_family = sub.empty_in_family;
        out.provenance = sub.provenance;
        for (int c = 0 ; c < k ; ++c) {
            out.states[c] = sub.states[rep[c]];
            out.terminal[c] = sub.terminal[rep[c]];
            out.nu[c] = cls[sub.nu[rep[c]]];
            for (int d = 0 ; d < k ; ++d)
                out.combine[static_cast<size_t>(c) * k + d] = cls[sub.combine_of(rep[c], rep[d])];
        }
        for (size_t r = 0 ; r < sub.signature.size() ; ++r) {
            int arity = sub.signature.arity(r);
            vector<int> args(arity);
            for_each_index_tuple(k, arity, [&] (const vector<int> & t) {
                    for (int p = 0 ; p < arity ; ++p)
                        args[p] = rep[t[p]];
                    size_t at = out.mu_index(t);
                    for (int p = 0 ; p < arity ; ++p)
                        out.mu[r][p][at] = cls[sub.mu_of(r, p, args)];
                });
        }
        return out;
    }

    auto apply_context(const ForestAlgebra & alg, int state, const Context & context) -> int
    {
        int s = state;
        for (auto & step : context) {
            switch (step.kind) {
                case ContextStep::Kind::nu:
                    s = alg.nu[s];
                    break;
                case ContextStep::Kind::combine:
                    s = step.position == 0 ? alg.combine_of(s, step.others.at(0)) : alg.combine_of(step.others.at(0), s);
                    break;
                case ContextStep::Kind::mu: {
                    vector<int> args(step.others.begin(), step.others.end());
                    args.insert(args.begin() + step.position, s);
                    s = alg.mu_of(step.relation, step.output, args);
                    break;
                }
            }
        }
        return s;
    }

    auto distinguishing_context(const ForestAlgebra & alg, int a, int b) -> optional<Context>
    {
        auto history = refinement_history(alg);
        if (history.back()[a] == history.back()[b])
            return std::nullopt;

        Context context;
        int n = alg.size();
        while (true) {
            size_t k = 0;
            while (history[k][a] == history[k][b])
                ++k;
            if (k == 0)
                return context;
            auto & prev = history[k - 1];
            auto differs = [&] (int x, int y) { return prev[x] != prev[y]; };

            optional<ContextStep> step;
            int na = -1, nb = -1;
            if (differs(alg.nu[a], alg.nu[b])) {
                step = ContextStep{ContextStep::Kind::nu, 0, 0, 0, { }};
                na = alg.nu[a];
                nb = alg.nu[b];
            }
            for (int t = 0 ; t < n && ! step ; ++t) {
                if (differs(alg.combine_of(a, t), alg.combine_of(b, t))) {
                    step = ContextStep{ContextStep::Kind::combine, 0, 0, 0, {t}};
                    na = alg.combine_of(a, t);
                    nb = alg.combine_of(b, t);
                }
                else if (differs(alg.combine_of(t, a), alg.combine_of(t, b))) {
                    step = ContextStep{ContextStep::Kind::combine, 0, 1, 0, {t}};
                    na = alg.combine_of(t, a);
                    nb = alg.combine_of(t, b);
                }
            }
            for (size_t r = 0 ; r < alg.signature.size() && ! step ; ++r) {
                int arity = alg.signature.arity(r);
                for (int p = 0 ; p < arity && ! step ; ++p)
                    for_each_index_tuple(n, arity - 1, [&] (const vector<int> & others) {
                            if (step)
                                return;
                            vector<int> ta(others.begin(), others.end()), tb;
                            ta.insert(ta.begin() + p, a);
                            tb = ta;
                            tb[p] = b;
                            for (int out = 0 ; out < arity && ! step ; ++out)
                                if (differs(alg.mu_of(r, out, ta), alg.mu_of(r, out, tb))) {
                                    step = ContextStep{ContextStep::Kind::mu, r, p, out, others};
                                    na = alg.mu_of(r, out, ta);
                                    nb = alg.mu_of(r, out, tb);
                                }
                        });
            }
            if (! step)
                throw IncoherentAlgebra("refinement trace lost a split");
            context.push_back(std::move(*step));
            a = na;
            b = nb;
        }
    }

    auto is_empty(const ForestAlgebra & alg) -> bool
    {
        if (alg.empty_in_family)
            return false;
        for (int s : reachable_states(alg).forest)
            if (alg.terminal[s])
                return false;
        return true;
    }

    namespace
    {
        struct Derivation
        {
            enum class Kind { init, nu, mu } kind = Kind::init;
            size_t relation = 0;
            int position = 0;
            vector<int> args;
        };

        struct Derivations
        {
            vector<long> cost;
            vector<Derivation> how;
            vector<int> order;
        };

        /// Cheapest derivations in generator applications, finalizing states in
        /// cost order and combining only finalized arguments.
        auto derivations(const ForestAlgebra & alg) -> Derivations
        {
            constexpr long unreached = std::numeric_limits<long>::max();
            int n = alg.size();
            Derivations d{vector<long>(n, unreached), vector<Derivation>(n), { }};
            vector<char> done(n, 0);
            d.cost[alg.init] = 0;

            auto offer = [&] (int s, long c, Derivation how) {
                if (! done[s] && c < d.cost[s]) {
                    d.cost[s] = c;
                    d.how[s] = std::move(how);
                }
            };

            while (true) {
                int best = -1;
                for (int s = 0 ; s < n ; ++s)
                    if (! done[s] && d.cost[s] != unreached && (best < 0 || d.cost[s] < d.cost[best]))
                        best = s;
                if (best < 0)
                    break;
                done[best] = 1;
                int k = static_cast<int>(d.order.size());
                d.order.push_back(best);

                offer(alg.nu[best], d.cost[best] + 1, Derivation{Derivation::Kind::nu, 0, 0, {best}});
                for (size_t r = 0 ; r < alg.signature.size() ; ++r) {
                    int arity = alg.signature.arity(r);
                    vector<int> args(arity);
                    detail::for_each_tuple_with(k, arity, [&] (const vector<int> & t) {
                            long c = 1;
                            for (int p = 0 ; p < arity ; ++p) {
                                args[p] = d.order[t[p]];
                                c += d.cost[args[p]];
                            }
                            for (int p = 0 ; p < arity ; ++p)
                                offer(alg.mu_of(r, p, args), c, Derivation{Derivation::Kind::mu, r, p, args});
                        });
                }
            }
            return d;
        }
    }

    auto state_representatives(const ForestAlgebra & alg) -> vector<optional<RootedStructure>>
    {
        auto d = derivations(alg);
        vector<optional<RootedStructure>> reps(alg.size());
        for (int s : d.order) {
            auto & how = d.how[s];
            switch (how.kind) {
                case Derivation::Kind::init:
                    reps[s] = trivial_rooted(alg.signature);
                    break;
                case Derivation::Kind::nu:
                    reps[s] = add_isolated_root(*reps[how.args[0]]);
                    break;
                case Derivation::Kind::mu: {
                    vector<RootedStructure> args;
                    for (int a : how.args)
                        args.push_back(*reps[a]);
                    auto cat = concatenate(how.relation, args);
                    reps[s] = RootedStructure{std::move(cat.structure), cat.roots[how.position]};
                    break;
                }
            }
        }
        return reps;
    }

    auto find_witness(const ForestAlgebra & alg) -> optional<Structure>
    {
        if (alg.empty_in_family)
            return Structure{alg.signature, 0};
        auto d = derivations(alg);
        auto reps = state_representatives(alg);
        int best = -1;
        for (int s : d.order)
            if (alg.terminal[s]) {
                best = s;
                break;
            }
        if (best < 0)
            return std::nullopt;
        return canonical_form(unroot(*reps[best]));
    }

    auto enumerate_members(const ForestAlgebra & alg, int max_vertices) -> vector<Structure>
    {
        vector<Structure> result;
        for (auto & s : enumerate_structures(alg.signature, max_vertices, true))
            if (member(alg, s))
                result.push_back(s);
        return result;
    }

    namespace
    {
        class RandomEvaluator
        {
            private:
                const ForestAlgebra & _alg;
                const ForestView & _view;
                std::mt19937_64 & _rng;

                auto coin(int one_in) -> bool
                {
                    return std::uniform_int_distribution<int>(0, one_in - 1)(_rng) == 0;
                }

                auto pick(size_t n) -> size_t
                {
                    return std::uniform_int_distribution<size_t>(0, n - 1)(_rng);
                }

            public:
                RandomEvaluator(const ForestAlgebra & alg, const ForestView & view, std::mt19937_64 & rng) :
                    _alg(alg), _view(view), _rng(rng) { }

                auto subtree(int v, int parent_block) -> int
                {
                    vector<ForestView::Incidence> branches;
                    for (auto & inc : _view.incidences(v))
                        if (inc.block != parent_block)
                            branches.push_back(inc);
                    return part(v, std::move(branches), { });
                }

                auto part(int v, vector<ForestView::Incidence> branches, vector<int> strays) -> int
                {
                    if (branches.size() + strays.size() >= 2 && coin(3)) {
                        vector<ForestView::Incidence> b[2];
                        vector<int> s[2];
                        do {
                            b[0].clear(); b[1].clear(); s[0].clear(); s[1].clear();
                            for (auto & inc : branches)
                                b[pick(2)].push_back(inc);
                            for (int c : strays)
                                s[pick(2)].push_back(c);
                        } while (b[0].size() + s[0].size() == 0 || b[1].size() + s[1].size() == 0);
                        int x = part(v, b[0], s[0]);
                        int y = part(v, b[1], s[1]);
                        return coin(2) ? _alg.combine_of(x, y) : _alg.combine_of(y, x);
                    }

                    int state = _alg.init;
                    if (! strays.empty())
                        state = _alg.nu[forest(std::move(strays))];
                    std::shuffle(branches.begin(), branches.end(), _rng);
                    vector<int> args;
                    for (auto & inc : branches) {
                        auto & t = _view.block_tuple(inc.block);
                        args.assign(t.size(), 0);
                        for (int k = 0 ; k < static_cast<int>(t.size()) ; ++k)
                            args[k] = k == inc.position ? state : subtree(t[k], inc.block);
                        state = _alg.mu_of(_view.block(inc.block).relation, inc.position, args);
                    }
                    return state;
                }

                /// The components rooted at a random vertex of a random one.
                auto forest(vector<int> comps) -> int
                {
                    size_t i = pick(comps.size());
                    int c = comps[i];
                    comps.erase(comps.begin() + static_cast<long>(i));
                    auto & vs = _view.component_vertices(c);
                    int x = vs[pick(vs.size())];
                    auto & incs = _view.incidences(x);
                    return part(x, {incs.begin(), incs.end()}, std::move(comps));
                }
        };
    }

    auto check_coherence(const ForestAlgebra & alg, int trials, int max_vertices, std::uint64_t seed) -> CoherenceReport
    {
        CoherenceReport report;
        std::mt19937_64 rng(seed);
        for (int trial = 0 ; trial < trials ; ++trial) {
            report.trials = trial + 1;
            auto f = random_forest(alg.signature, std::max(1, max_vertices), rng);
            ForestView view(f);
            int root = std::uniform_int_distribution<int>(0, f.vertex_count() - 1)(rng);
            int expected = eval_rooted(alg, RootedStructure{f, root});

            RandomEvaluator ev(alg, view, rng);
            auto & incs = view.incidences(root);
            vector<int> strays;
            for (int c = 0 ; c < view.component_count() ; ++c)
                if (c != view.component(root))
                    strays.push_back(c);
            int got = ev.part(root, {incs.begin(), incs.end()}, strays);

            auto fail = [&] (string detail) {
                report.passed = false;
                report.counterexample = f;
                report.root = root;
                report.detail = std::move(detail);
            };
            if (got != expected) {
                fail("decompositions evaluate to " + alg.states[expected] + " and " + alg.states[got]);
                break;
            }
            int at_zero = eval_rooted(alg, RootedStructure{f, 0});
            if (alg.terminal[at_zero] != alg.terminal[expected]) {
                fail("membership depends on the root: vertex 0 gives " + alg.states[at_zero]
                        + ", the root gives " + alg.states[expected]);
                break;
            }
        }
        return report;
    }

    auto check_table_axioms(const ForestAlgebra & alg) -> optional<string>
    {
        int n = alg.size();
        if (n == 0)
            return "no states";
        if (alg.terminal.size() != static_cast<size_t>(n) || alg.nu.size() != static_cast<size_t>(n)
                || alg.combine.size() != static_cast<size_t>(n) * n)
            return "table sizes do not match the state count";
        if (alg.mu.size() != alg.signature.size())
            return "mu tables do not match the signature";
        auto in_range = [&] (int s) { return s >= 0 && s < n; };
        if (! in_range(alg.init))
            return "init is not a state";
        for (size_t r = 0 ; r < alg.signature.size() ; ++r) {
            if (alg.mu[r].size() != static_cast<size_t>(alg.signature.arity(r)))
                return "mu table of " + alg.signature[r].name + " has the wrong number of positions";
            for (auto & table : alg.mu[r]) {
                if (table.size() != alg.table_size(r))
                    return "mu table of " + alg.signature[r].name + " has the wrong size";
                for (int s : table)
                    if (! in_range(s))
                        return "mu table of " + alg.signature[r].name + " leaves the states";
            }
        }
        for (int s : alg.nu)
            if (! in_range(s))
                return "nu table leaves the states";
        for (int s : alg.combine)
            if (! in_range(s))
                return "combine table leaves the states";

        for (int a = 0 ; a < n ; ++a) {
            if (alg.combine_of(alg.init, a) != a || alg.combine_of(a, alg.init) != a)
                return "init is not an identity for combine at " + alg.states[a];
            for (int b = a + 1 ; b < n ; ++b)
                if (alg.combine_of(a, b) != alg.combine_of(b, a))
                    return "combine is not commutative at " + alg.states[a] + ", " + alg.states[b];
        }
        auto assoc = [&] (int a, int b, int c) {
            return alg.combine_of(alg.combine_of(a, b), c) == alg.combine_of(a, alg.combine_of(b, c));
        };
        if (n <= 256) {
            for (int a = 0 ; a < n ; ++a)
                for (int b = 0 ; b < n ; ++b)
                    for (int c = 0 ; c < n ; ++c)
                        if (! assoc(a, b, c))
                            return "combine is not associative at " + alg.states[a] + ", " + alg.states[b] + ", " + alg.states[c];
        }
        else {
            std::mt19937_64 rng(0);
            std::uniform_int_distribution<int> any(0, n - 1);
            for (int k = 0 ; k < 1'000'000 ; ++k) {
                int a = any(rng), b = any(rng), c = any(rng);
                if (! assoc(a, b, c))
                    return "combine is not associative at " + alg.states[a] + ", " + alg.states[b] + ", " + alg.states[c];
            }
        }
        return std::nullopt;
    }

    auto validate_user_algebra(const ForestAlgebra & alg, const ValidationOptions & options) -> void
    {
        if (auto problem = check_table_axioms(alg))
            throw IncoherentAlgebra(*problem);
        auto report = check_coherence(alg, options.trials, options.max_vertices, options.seed);
        if (! report.passed)
            throw IncoherentAlgebra(report.detail + " on " + compact_text(*report.counterexample)
                    + " rooted at " + to_string(report.root));
    }
}
