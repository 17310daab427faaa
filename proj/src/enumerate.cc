#include <forestdual/enumerate.hh>
#include <forestdual/canonical.hh>
#include <forestdual/errors.hh>

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

using std::set;
using std::size_t;
using std::vector;

namespace forestdual
{
    namespace
    {
        auto grow_tree(const Structure & t, int v, size_t relation, int position) -> Structure
        {
            Structure grown = t;
            int r = t.signature().arity(relation);
            Tuple tuple(r);
            int fresh = grown.add_vertices(r - 1);
            for (int k = 0 ; k < r ; ++k)
                tuple[k] = (k == position) ? v : fresh++;
            grown.add_tuple(relation, std::move(tuple));
            return grown;
        }

        auto all_tuples(const Signature & signature, int n) -> vector<std::pair<size_t, Tuple>>
        {
            vector<std::pair<size_t, Tuple>> result;
            for (size_t r = 0 ; r < signature.size() ; ++r) {
                int arity = signature.arity(r);
                Tuple t(arity, 0);
                if (n == 0)
                    continue;
                while (true) {
                    result.emplace_back(r, t);
                    int p = arity - 1;
                    while (p >= 0 && ++t[p] == n)
                        t[p--] = 0;
                    if (p < 0)
                        break;
                }
            }
            return result;
        }

        constexpr size_t general_tuple_limit = 16;

        auto enumerate_general(const Signature & signature, int max_vertices) -> vector<Structure>
        {
            vector<Structure> result;
            for (int n = 0 ; n <= max_vertices ; ++n) {
                auto possible = all_tuples(signature, n);
                if (possible.size() > general_tuple_limit)
                    throw TooLarge("general enumeration with " + std::to_string(n) + " vertices allows "
                            + std::to_string(possible.size()) + " tuples; limit is " + std::to_string(general_tuple_limit));

                set<Structure> seen;
                std::deque<Structure> queue;
                Structure start{signature, n};
                seen.insert(start);
                queue.push_back(start);
                while (! queue.empty()) {
                    Structure s = std::move(queue.front());
                    queue.pop_front();
                    for (auto & [r, t] : possible) {
                        if (s.has_tuple(r, t))
                            continue;
                        Structure next = s;
                        next.add_tuple(r, t);
                        auto c = canonical_form(next);
                        if (seen.insert(c).second)
                            queue.push_back(std::move(c));
                    }
                }
                result.insert(result.end(), seen.begin(), seen.end());
            }
            return result;
        }

        auto enumerate_forests(const Signature & signature, int max_vertices) -> vector<Structure>
        {
            auto trees = enumerate_trees(signature, max_vertices);
            set<Structure> forests;
            forests.insert(Structure{signature, 0});

            // multisets of trees, indices nondecreasing
            auto extend = [&] (auto & self, size_t from, int size, const Structure & acc) -> void {
                for (size_t i = from ; i < trees.size() ; ++i) {
                    int next = size + trees[i].vertex_count();
                    if (next > max_vertices)
                        continue;
                    Structure u = disjoint_union(acc, trees[i]);
                    forests.insert(canonical_form(u));
                    self(self, i, next, u);
                }
            };
            extend(extend, 0, 0, Structure{signature, 0});
            return {forests.begin(), forests.end()};
        }
    }

    auto enumerate_trees(const Signature & signature, int max_vertices) -> vector<Structure>
    {
        set<Structure> seen;
        if (max_vertices < 1)
            return { };
        std::deque<Structure> queue;
        Structure single{signature, 1};
        seen.insert(single);
        queue.push_back(single);
        while (! queue.empty()) {
            Structure t = std::move(queue.front());
            queue.pop_front();
            for (int v = 0 ; v < t.vertex_count() ; ++v)
                for (size_t r = 0 ; r < signature.size() ; ++r) {
                    int arity = signature.arity(r);
                    if (t.vertex_count() + arity - 1 > max_vertices)
                        continue;
                    if (arity == 1 && t.has_tuple(r, Tuple{v}))
                        continue;
                    for (int p = 0 ; p < arity ; ++p) {
                        auto c = canonical_form(grow_tree(t, v, r, p));
                        if (seen.insert(c).second)
                            queue.push_back(std::move(c));
                    }
                }
        }
        return {seen.begin(), seen.end()};
    }

    auto enumerate_structures(const Signature & signature, int max_vertices, bool forest_only) -> vector<Structure>
    {
        if (max_vertices < 0)
            return { };
        if (forest_only)
            return enumerate_forests(signature, max_vertices);
        return enumerate_general(signature, max_vertices);
    }

    auto random_forest(const Signature & signature, int max_vertices, std::mt19937_64 & rng) -> Structure
    {
        if (max_vertices < 1)
            throw InputError("random_forest needs at least one vertex");
        int n = std::uniform_int_distribution<int>(1, max_vertices)(rng);
        vector<int> comp(n);
        std::iota(comp.begin(), comp.end(), 0);
        auto find = [&] (int x) {
            while (comp[x] != x)
                x = comp[x] = comp[comp[x]];
            return x;
        };

        Structure s{signature, n};
        int attempts = std::uniform_int_distribution<int>(0, 2 * n)(rng);
        for (int a = 0 ; a < attempts ; ++a) {
            size_t r = std::uniform_int_distribution<size_t>(0, signature.size() - 1)(rng);
            int arity = signature.arity(r);
            Tuple t(arity);
            for (auto & x : t)
                x = std::uniform_int_distribution<int>(0, n - 1)(rng);
            if (arity == 1) {
                s.add_tuple(r, t);
                continue;
            }
            vector<int> roots;
            for (int x : t)
                roots.push_back(find(x));
            std::sort(roots.begin(), roots.end());
            if (std::adjacent_find(roots.begin(), roots.end()) != roots.end())
                continue;
            s.add_tuple(r, t);
            for (int x : roots)
                comp[x] = roots[0];
        }

        vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        vector<vector<Tuple>> tuples(signature.size());
        for (size_t r = 0 ; r < signature.size() ; ++r)
            for (auto t : s.tuples(r)) {
                for (auto & x : t)
                    x = perm[x];
                tuples[r].push_back(std::move(t));
            }
        return Structure{signature, n, std::move(tuples)};
    }
}
