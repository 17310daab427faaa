#include <forestdual/structure.hh>
#include <forestdual/errors.hh>

#include <algorithm>
#include <numeric>

using std::size_t;
using std::span;
using std::strong_ordering;
using std::vector;

namespace forestdual
{
    namespace
    {
        struct UnionFind
        {
            vector<int> parent;

            explicit UnionFind(int n) : parent(n)
            {
                std::iota(parent.begin(), parent.end(), 0);
            }

            auto find(int x) -> int
            {
                while (parent[x] != x) {
                    parent[x] = parent[parent[x]];
                    x = parent[x];
                }
                return x;
            }

            auto unite(int a, int b) -> bool
            {
                a = find(a);
                b = find(b);
                if (a == b)
                    return false;
                parent[std::max(a, b)] = std::min(a, b);
                return true;
            }
        };

        auto check_same_signature(const Structure & a, const Structure & b) -> void
        {
            if (! (a.signature() == b.signature()))
                throw SignatureMismatch();
        }
    }

    Structure::Structure(Signature signature, int vertex_count) :
        _signature(std::move(signature)),
        _vertex_count(vertex_count),
        _tuples(_signature.size())
    {
        if (vertex_count < 0)
            throw InputError("negative vertex count");
    }

    Structure::Structure(Signature signature, int vertex_count, vector<vector<Tuple>> tuples) :
        Structure(std::move(signature), vertex_count)
    {
        if (tuples.size() != _signature.size())
            throw InputError("tuple lists do not match the signature");
        for (size_t r = 0 ; r < tuples.size() ; ++r) {
            for (auto & t : tuples[r]) {
                if (static_cast<int>(t.size()) != _signature.arity(r))
                    throw InputError("tuple length differs from arity of '" + _signature[r].name + "'");
                for (int v : t)
                    if (v < 0 || v >= vertex_count)
                        throw InputError("tuple entry out of range in '" + _signature[r].name + "'");
            }
            std::sort(tuples[r].begin(), tuples[r].end());
            tuples[r].erase(std::unique(tuples[r].begin(), tuples[r].end()), tuples[r].end());
        }
        _tuples = std::move(tuples);
    }

    auto Structure::tuple_count() const -> size_t
    {
        size_t result = 0;
        for (auto & ts : _tuples)
            result += ts.size();
        return result;
    }

    auto Structure::has_tuple(size_t relation, span<const int> t) const -> bool
    {
        auto & ts = _tuples[relation];
        auto it = std::lower_bound(ts.begin(), ts.end(), t,
                [] (const Tuple & a, span<const int> b) {
                    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                });
        return it != ts.end() && std::equal(it->begin(), it->end(), t.begin(), t.end());
    }

    auto Structure::add_tuple(size_t relation, Tuple t) -> bool
    {
        if (static_cast<int>(t.size()) != _signature.arity(relation))
            throw InputError("tuple length differs from arity of '" + _signature[relation].name + "'");
        for (int v : t)
            if (v < 0 || v >= _vertex_count)
                throw InputError("tuple entry out of range");
        auto & ts = _tuples[relation];
        auto it = std::lower_bound(ts.begin(), ts.end(), t);
        if (it != ts.end() && *it == t)
            return false;
        ts.insert(it, std::move(t));
        return true;
    }

    auto Structure::add_vertices(int count) -> int
    {
        int first = _vertex_count;
        _vertex_count += count;
        return first;
    }

    auto Structure::operator<=> (const Structure & other) const -> strong_ordering
    {
        if (auto c = _vertex_count <=> other._vertex_count ; c != 0)
            return c;
        return _tuples <=> other._tuples;
    }

    auto Structure::operator== (const Structure & other) const -> bool
    {
        return _signature == other._signature && _vertex_count == other._vertex_count && _tuples == other._tuples;
    }

    RootedStructure::RootedStructure(Structure s, int r) :
        structure(std::move(s)),
        root(r)
    {
        if (r < 0 || r >= structure.vertex_count())
            throw InputError("root out of range");
    }

    auto trivial_rooted(const Signature & signature) -> RootedStructure
    {
        return RootedStructure{Structure{signature, 1}, 0};
    }

    auto incidence_graph(const Structure & s) -> IncidenceGraph
    {
        IncidenceGraph g;
        g.vertex_edges.resize(s.vertex_count());
        for (size_t r = 0 ; r < s.signature().size() ; ++r)
            for (size_t i = 0 ; i < s.tuples(r).size() ; ++i) {
                int b = static_cast<int>(g.blocks.size());
                g.blocks.push_back(Block{r, i});
                auto & t = s.tuples(r)[i];
                for (int p = 0 ; p < static_cast<int>(t.size()) ; ++p) {
                    g.vertex_edges[t[p]].push_back(static_cast<int>(g.edges.size()));
                    g.edges.push_back(IncidenceGraph::Edge{t[p], p, b});
                }
            }
        return g;
    }

    auto component_ids(const Structure & s) -> vector<int>
    {
        UnionFind uf(s.vertex_count());
        for (auto & ts : s.all_tuples())
            for (auto & t : ts)
                for (size_t p = 1 ; p < t.size() ; ++p)
                    uf.unite(t[0], t[p]);

        vector<int> ids(s.vertex_count(), -1), rep_to_id(s.vertex_count(), -1);
        int next = 0;
        for (int v = 0 ; v < s.vertex_count() ; ++v) {
            int rep = uf.find(v);
            if (rep_to_id[rep] == -1)
                rep_to_id[rep] = next++;
            ids[v] = rep_to_id[rep];
        }
        return ids;
    }

    auto components(const Structure & s) -> vector<Component>
    {
        auto ids = component_ids(s);
        int count = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
        vector<vector<int>> members(count);
        for (int v = 0 ; v < s.vertex_count() ; ++v)
            members[ids[v]].push_back(v);

        vector<Component> result;
        result.reserve(count);
        for (auto & m : members)
            result.push_back(Component{induced_substructure(s, m), m});
        return result;
    }

    auto is_forest(const Structure & s) -> bool
    {
        // vertices are nodes 0..n-1, blocks follow
        int n = s.vertex_count();
        UnionFind uf(n + static_cast<int>(s.tuple_count()));
        int block = n;
        for (auto & ts : s.all_tuples())
            for (auto & t : ts) {
                for (int v : t)
                    if (! uf.unite(v, block))
                        return false;
                ++block;
            }
        return true;
    }

    auto is_tree(const Structure & s) -> bool
    {
        if (s.empty() || ! is_forest(s))
            return false;
        // a forest is connected iff |V| + |blocks| - 1 incidences
        size_t incidences = 0;
        for (size_t r = 0 ; r < s.signature().size() ; ++r)
            incidences += s.tuples(r).size() * s.signature().arity(r);
        return incidences + 1 == static_cast<size_t>(s.vertex_count()) + s.tuple_count();
    }

    auto induced_substructure(const Structure & s, span<const int> vertices) -> Structure
    {
        vector<int> local(s.vertex_count(), -1);
        for (size_t i = 0 ; i < vertices.size() ; ++i) {
            int v = vertices[i];
            if (v < 0 || v >= s.vertex_count())
                throw InputError("vertex out of range");
            if (local[v] != -1)
                throw InputError("repeated vertex in induced substructure");
            local[v] = static_cast<int>(i);
        }

        vector<vector<Tuple>> tuples(s.signature().size());
        for (size_t r = 0 ; r < s.signature().size() ; ++r)
            for (auto & t : s.tuples(r)) {
                Tuple u;
                u.reserve(t.size());
                for (int v : t) {
                    if (local[v] == -1)
                        break;
                    u.push_back(local[v]);
                }
                if (u.size() == t.size())
                    tuples[r].push_back(std::move(u));
            }
        return Structure{s.signature(), static_cast<int>(vertices.size()), std::move(tuples)};
    }

    auto direct_product(const Structure & a, const Structure & b) -> Structure
    {
        check_same_signature(a, b);
        int nb = b.vertex_count();
        vector<vector<Tuple>> tuples(a.signature().size());
        for (size_t r = 0 ; r < a.signature().size() ; ++r)
            for (auto & s : a.tuples(r))
                for (auto & t : b.tuples(r)) {
                    Tuple u(s.size());
                    for (size_t p = 0 ; p < s.size() ; ++p)
                        u[p] = s[p] * nb + t[p];
                    tuples[r].push_back(std::move(u));
                }
        return Structure{a.signature(), a.vertex_count() * nb, std::move(tuples)};
    }

    auto disjoint_union(const Structure & a, const Structure & b) -> Structure
    {
        check_same_signature(a, b);
        int shift = a.vertex_count();
        auto tuples = a.all_tuples();
        for (size_t r = 0 ; r < b.signature().size() ; ++r)
            for (auto t : b.tuples(r)) {
                for (auto & v : t)
                    v += shift;
                tuples[r].push_back(std::move(t));
            }
        return Structure{a.signature(), shift + b.vertex_count(), std::move(tuples)};
    }

    auto combine_rooted(const RootedStructure & a, const RootedStructure & b) -> RootedStructure
    {
        check_same_signature(a.structure, b.structure);
        int na = a.structure.vertex_count();
        // b's root becomes a's root, b's other vertices follow a's in order
        vector<int> remap(b.structure.vertex_count());
        int next = na;
        for (int v = 0 ; v < b.structure.vertex_count() ; ++v)
            remap[v] = (v == b.root) ? a.root : next++;

        auto tuples = a.structure.all_tuples();
        for (size_t r = 0 ; r < b.structure.signature().size() ; ++r)
            for (auto t : b.structure.tuples(r)) {
                for (auto & v : t)
                    v = remap[v];
                tuples[r].push_back(std::move(t));
            }
        return RootedStructure{Structure{a.structure.signature(), next, std::move(tuples)}, a.root};
    }

    auto unroot(const RootedStructure & a) -> Structure
    {
        return a.structure;
    }

    auto add_isolated_root(const RootedStructure & a) -> RootedStructure
    {
        Structure s = a.structure;
        int v = s.add_vertices(1);
        return RootedStructure{std::move(s), v};
    }

    auto concatenate(size_t relation, span<const RootedStructure> args) -> Concatenation
    {
        if (args.empty())
            throw InputError("concatenation needs arguments");
        auto & sig = args[0].structure.signature();
        if (relation >= sig.size())
            throw InputError("unknown relation index");
        if (static_cast<int>(args.size()) != sig.arity(relation))
            throw InputError("concatenation arity mismatch for '" + sig[relation].name + "'");

        Structure result{sig, 0};
        vector<int> roots;
        for (auto & a : args) {
            result = disjoint_union(result, a.structure);
            roots.push_back(result.vertex_count() - a.structure.vertex_count() + a.root);
        }
        result.add_tuple(relation, roots);
        return Concatenation{std::move(result), std::move(roots)};
    }
}
