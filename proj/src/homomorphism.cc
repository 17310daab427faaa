#include <forestdual/homomorphism.hh>
#include <forestdual/canonical.hh>
#include <forestdual/errors.hh>

#include <algorithm>
#include <deque>

using std::function;
using std::nullopt;
using std::optional;
using std::size_t;
using std::span;
using std::vector;

using Bits = boost::dynamic_bitset<>;

namespace forestdual
{
    namespace
    {
        auto check_same_signature(const Structure & a, const Structure & b) -> void
        {
            if (! (a.signature() == b.signature()))
                throw SignatureMismatch();
        }

        auto check_domains(const Structure & a, const Structure & b, const Domains * domains) -> void
        {
            if (! domains)
                return;
            if (domains->size() != static_cast<size_t>(a.vertex_count()))
                throw InputError("domain count differs from source vertex count");
            for (auto & d : *domains)
                if (d.size() != static_cast<size_t>(b.vertex_count()))
                    throw InputError("domain size differs from target vertex count");
        }

        /// Backtracking in vertex id order, maintaining generalized arc
        /// consistency on every source tuple.
        class ConsistencySearch
        {
            private:
                struct SourceTuple
                {
                    size_t relation;
                    const Tuple * tuple;
                    vector<std::pair<int, int>> equal_positions;
                };

                const Structure & _a;
                const Structure & _b;
                vector<SourceTuple> _tuples;
                vector<vector<int>> _vertex_tuples;

                auto revise(Domains & d, int ti, vector<int> & changed) const -> bool
                {
                    auto & st = _tuples[ti];
                    auto & t = *st.tuple;
                    size_t r = t.size();
                    vector<Bits> support(r, Bits(_b.vertex_count()));
                    for (auto & z : _b.tuples(st.relation)) {
                        bool ok = true;
                        for (size_t p = 0 ; p < r && ok ; ++p)
                            ok = d[t[p]].test(z[p]);
                        for (auto [p, q] : st.equal_positions)
                            ok = ok && z[p] == z[q];
                        if (ok)
                            for (size_t p = 0 ; p < r ; ++p)
                                support[p].set(z[p]);
                    }
                    for (size_t p = 0 ; p < r ; ++p) {
                        auto & dom = d[t[p]];
                        Bits narrowed = dom & support[p];
                        if (narrowed != dom) {
                            dom = std::move(narrowed);
                            if (dom.none())
                                return false;
                            changed.push_back(t[p]);
                        }
                    }
                    return true;
                }

                auto search(int v, Domains & d, const function<auto (const VertexMap &) -> bool> & visit) const -> bool
                {
                    if (v == _a.vertex_count()) {
                        VertexMap map(_a.vertex_count());
                        for (int u = 0 ; u < _a.vertex_count() ; ++u)
                            map[u] = static_cast<int>(d[u].find_first());
                        return visit(map);
                    }

                    for (auto z = d[v].find_first() ; z != Bits::npos ; z = d[v].find_next(z)) {
                        Domains next = d;
                        next[v].reset();
                        next[v].set(z);
                        vector<int> seeds = _vertex_tuples[v];
                        if (propagate(next, seeds))
                            if (! search(v + 1, next, visit))
                                return false;
                    }
                    return true;
                }

            public:
                ConsistencySearch(const Structure & a, const Structure & b) :
                    _a(a),
                    _b(b),
                    _vertex_tuples(a.vertex_count())
                {
                    for (size_t r = 0 ; r < a.signature().size() ; ++r)
                        for (auto & t : a.tuples(r)) {
                            SourceTuple st{r, &t, { }};
                            for (size_t p = 0 ; p < t.size() ; ++p)
                                for (size_t q = p + 1 ; q < t.size() ; ++q)
                                    if (t[p] == t[q])
                                        st.equal_positions.emplace_back(p, q);
                            int ti = static_cast<int>(_tuples.size());
                            _tuples.push_back(std::move(st));
                            for (int v : t)
                                if (_vertex_tuples[v].empty() || _vertex_tuples[v].back() != ti)
                                    _vertex_tuples[v].push_back(ti);
                        }
                }

                auto propagate(Domains & d, const vector<int> & seeds) const -> bool
                {
                    vector<char> queued(_tuples.size(), 0);
                    std::deque<int> queue;
                    for (int ti : seeds)
                        if (! queued[ti]) {
                            queued[ti] = 1;
                            queue.push_back(ti);
                        }
                    vector<int> changed;
                    while (! queue.empty()) {
                        int ti = queue.front();
                        queue.pop_front();
                        queued[ti] = 0;
                        changed.clear();
                        if (! revise(d, ti, changed))
                            return false;
                        for (int v : changed)
                            for (int tj : _vertex_tuples[v])
                                if (! queued[tj]) {
                                    queued[tj] = 1;
                                    queue.push_back(tj);
                                }
                    }
                    return true;
                }

                auto all_tuples() const -> vector<int>
                {
                    vector<int> result(_tuples.size());
                    for (size_t i = 0 ; i < result.size() ; ++i)
                        result[i] = static_cast<int>(i);
                    return result;
                }

                auto run(Domains d, const function<auto (const VertexMap &) -> bool> & visit) const -> void
                {
                    for (auto & dom : d)
                        if (dom.none())
                            return;
                    if (! propagate(d, all_tuples()))
                        return;
                    search(0, d, visit);
                }
        };

        /// Feasible-image sets computed bottom-up over the incidence tree of a
        /// forest source, every component rooted at its least vertex.
        class TreeDp
        {
            private:
                const Structure & _a;
                const Structure & _b;
                IncidenceGraph _graph;
                vector<int> _component_root;

            public:
                TreeDp(const Structure & a, const Structure & b) :
                    _a(a),
                    _b(b),
                    _graph(incidence_graph(a))
                {
                    auto ids = component_ids(a);
                    _component_root.assign(a.vertex_count(), -1);
                    vector<int> first;
                    for (int v = 0 ; v < a.vertex_count() ; ++v) {
                        if (ids[v] >= static_cast<int>(first.size()))
                            first.push_back(v);
                        _component_root[v] = first[ids[v]];
                    }
                }

                auto feasible(int v, int parent_block, const Domains & d) const -> Bits
                {
                    Bits result = d[v];
                    for (int ei : _graph.vertex_edges[v]) {
                        if (result.none())
                            break;
                        auto & e = _graph.edges[ei];
                        if (e.block == parent_block)
                            continue;
                        auto & block = _graph.blocks[e.block];
                        auto & t = _a.tuples(block.relation)[block.index];
                        vector<Bits> child(t.size());
                        for (size_t k = 0 ; k < t.size() ; ++k)
                            if (static_cast<int>(k) != e.position)
                                child[k] = feasible(t[k], e.block, d);

                        Bits support(_b.vertex_count());
                        for (auto & z : _b.tuples(block.relation)) {
                            bool ok = result.test(z[e.position]);
                            for (size_t k = 0 ; k < t.size() && ok ; ++k)
                                if (static_cast<int>(k) != e.position)
                                    ok = child[k].test(z[k]);
                            if (ok)
                                support.set(z[e.position]);
                        }
                        result &= support;
                    }
                    return result;
                }

                auto satisfiable(const Domains & d) const -> bool
                {
                    for (int v = 0 ; v < _a.vertex_count() ; ++v)
                        if (_component_root[v] == v && feasible(v, -1, d).none())
                            return false;
                    return true;
                }

                auto least(Domains d) const -> optional<VertexMap>
                {
                    if (! satisfiable(d))
                        return nullopt;
                    VertexMap map(_a.vertex_count());
                    for (int v = 0 ; v < _a.vertex_count() ; ++v) {
                        Bits allowed = d[v];
                        bool placed = false;
                        for (auto z = allowed.find_first() ; z != Bits::npos ; z = allowed.find_next(z)) {
                            d[v].reset();
                            d[v].set(z);
                            if (! feasible(_component_root[v], -1, d).none()) {
                                map[v] = static_cast<int>(z);
                                placed = true;
                                break;
                            }
                        }
                        if (! placed)
                            return nullopt;
                    }
                    return map;
                }
        };
    }

    auto is_homomorphism(const Structure & a, const Structure & b, span<const int> map) -> bool
    {
        if (! (a.signature() == b.signature()) || map.size() != static_cast<size_t>(a.vertex_count()))
            return false;
        for (int z : map)
            if (z < 0 || z >= b.vertex_count())
                return false;
        Tuple image;
        for (size_t r = 0 ; r < a.signature().size() ; ++r)
            for (auto & t : a.tuples(r)) {
                image.resize(t.size());
                for (size_t p = 0 ; p < t.size() ; ++p)
                    image[p] = map[t[p]];
                if (! b.has_tuple(r, image))
                    return false;
            }
        return true;
    }

    auto full_domains(const Structure & a, const Structure & b) -> Domains
    {
        Bits all(b.vertex_count());
        all.set();
        return Domains(a.vertex_count(), all);
    }

    auto find_hom_backtracking(const Structure & a, const Structure & b, const Domains * domains) -> optional<VertexMap>
    {
        check_same_signature(a, b);
        check_domains(a, b, domains);
        optional<VertexMap> result;
        ConsistencySearch search(a, b);
        search.run(domains ? *domains : full_domains(a, b), [&] (const VertexMap & m) {
                result = m;
                return false;
            });
        return result;
    }

    auto find_hom_tree_dp(const Structure & a, const Structure & b, const Domains * domains) -> optional<VertexMap>
    {
        check_same_signature(a, b);
        check_domains(a, b, domains);
        if (! is_forest(a))
            throw NotAForest("find_hom_tree_dp");
        TreeDp dp(a, b);
        return dp.least(domains ? *domains : full_domains(a, b));
    }

    auto find_hom_map(const Structure & a, const Structure & b, const Domains * domains) -> optional<VertexMap>
    {
        if (is_forest(a))
            return find_hom_tree_dp(a, b, domains);
        return find_hom_backtracking(a, b, domains);
    }

    auto find_hom(const Structure & a, const Structure & b, const vector<optional<int>> & constraints) -> optional<Homomorphism>
    {
        check_same_signature(a, b);
        if (constraints.size() > static_cast<size_t>(a.vertex_count()))
            throw InputError("constraint references a vertex outside the source");
        Domains d = full_domains(a, b);
        for (size_t v = 0 ; v < constraints.size() ; ++v)
            if (constraints[v]) {
                int z = *constraints[v];
                if (z < 0 || z >= b.vertex_count())
                    throw InputError("constraint maps to a vertex outside the target");
                d[v].reset();
                d[v].set(z);
            }
        auto map = find_hom_map(a, b, &d);
        if (! map)
            return nullopt;
        return Homomorphism{a, b, std::move(*map)};
    }

    auto hom_exists(const Structure & a, const Structure & b) -> bool
    {
        check_same_signature(a, b);
        if (a.empty())
            return true;
        if (b.empty())
            return false;
        if (is_forest(a))
            return TreeDp(a, b).satisfiable(full_domains(a, b));
        return find_hom_backtracking(a, b).has_value();
    }

    auto hom_equivalent(const Structure & a, const Structure & b) -> bool
    {
        return hom_exists(a, b) && hom_exists(b, a);
    }

    auto for_each_hom(const Structure & a, const Structure & b, const function<auto (const VertexMap &) -> bool> & visit) -> void
    {
        check_same_signature(a, b);
        ConsistencySearch search(a, b);
        search.run(full_domains(a, b), visit);
    }

    auto is_retraction(const Structure & source, const Structure & target, span<const int> map) -> bool
    {
        Domains d(target.vertex_count(), Bits(source.vertex_count()));
        for (int v = 0 ; v < source.vertex_count() ; ++v)
            d[map[v]].set(v);
        for (auto & dom : d)
            if (dom.none())
                return false;
        return find_hom_map(target, source, &d).has_value();
    }

    auto is_retraction(const Homomorphism & h) -> bool
    {
        return is_retraction(h.source, h.target, h.map);
    }

    auto is_retraction_by_components(const Structure & source, const Structure & target, span<const int> map) -> bool
    {
        vector<vector<int>> preimage(target.vertex_count());
        for (int v = 0 ; v < source.vertex_count() ; ++v)
            preimage[map[v]].push_back(v);

        for (auto & c : components(target)) {
            int n = c.part.vertex_count();
            vector<size_t> choice(n, 0);
            bool any_empty = false;
            for (int u = 0 ; u < n ; ++u)
                any_empty = any_empty || preimage[c.back_map[u]].empty();
            if (any_empty)
                return false;

            // odometer over all selections of one preimage per component vertex
            bool covered = false;
            while (true) {
                bool ok = true;
                Tuple image;
                for (size_t r = 0 ; r < c.part.signature().size() && ok ; ++r)
                    for (auto & t : c.part.tuples(r)) {
                        image.resize(t.size());
                        for (size_t p = 0 ; p < t.size() ; ++p)
                            image[p] = preimage[c.back_map[t[p]]][choice[t[p]]];
                        if (! source.has_tuple(r, image)) {
                            ok = false;
                            break;
                        }
                    }
                if (ok) {
                    covered = true;
                    break;
                }
                int u = 0;
                while (u < n && ++choice[u] == preimage[c.back_map[u]].size())
                    choice[u++] = 0;
                if (u == n)
                    break;
            }
            if (! covered)
                return false;
        }
        return true;
    }

    auto exists_non_retraction(const Structure & a, const Structure & b) -> optional<Homomorphism>
    {
        optional<Homomorphism> result;
        for_each_hom(a, b, [&] (const VertexMap & m) {
                if (is_retraction(a, b, m))
                    return true;
                result = Homomorphism{a, b, m};
                return false;
            });
        return result;
    }

    namespace
    {
        /// An endomorphism avoiding some vertex, trying vertices in id order.
        auto shrinking_endomorphism(const Structure & s) -> optional<VertexMap>
        {
            for (int v = 0 ; v < s.vertex_count() ; ++v) {
                Domains d = full_domains(s, s);
                for (auto & dom : d)
                    dom.reset(v);
                if (auto m = find_hom_map(s, s, &d))
                    return m;
            }
            return nullopt;
        }
    }

    auto core(const Structure & s) -> Structure
    {
        Structure current = s;
        while (auto m = shrinking_endomorphism(current)) {
            vector<int> image = *m;
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            current = induced_substructure(current, image);
        }
        return canonical_form(current);
    }

    auto is_core(const Structure & s) -> bool
    {
        return ! shrinking_endomorphism(s).has_value();
    }
}
