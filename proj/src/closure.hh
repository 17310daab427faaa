#ifndef FORESTDUAL_SRC_CLOSURE_HH
#define FORESTDUAL_SRC_CLOSURE_HH 1

#include <forestdual/errors.hh>
#include <forestdual/forest_algebra.hh>

#include <deque>
#include <map>
#include <string>
#include <vector>

namespace forestdual::detail
{
    /// Enumerates tuples over 0..k of the given length containing k, each once:
    /// positions before the first k range over 0..k-1, later ones over 0..k.
    template <typename Visit>
    auto for_each_tuple_with(int k, int length, Visit && visit) -> void
    {
        std::vector<int> t(length);
        for (int first = 0 ; first < length ; ++first) {
            std::vector<int> limit(length);
            for (int p = 0 ; p < length ; ++p)
                limit[p] = p < first ? k : k + 1;
            if (first > 0 && k == 0)
                continue;
            for (int p = 0 ; p < length ; ++p)
                t[p] = 0;
            t[first] = k;
            while (true) {
                visit(static_cast<const std::vector<int> &>(t));
                int p = length - 1;
                while (p >= 0) {
                    if (p == first) {
                        --p;
                        continue;
                    }
                    if (++t[p] < limit[p])
                        break;
                    t[p] = 0;
                    --p;
                }
                if (p < 0)
                    break;
            }
        }
    }

    constexpr std::size_t closure_table_limit = 40'000'000;

    /// Builds the algebra generated from ops.init() under nu, combine and
    /// every mu, with states in discovery order. Ops supplies init, nu, mu,
    /// combine, terminal and name over some ordered key type.
    template <typename Key, typename Ops>
    auto build_closure(const Signature & signature, Ops & ops, bool empty_in_family, const std::string & provenance) -> ForestAlgebra
    {
        std::deque<Key> keys;
        std::map<Key, int> index;
        auto intern = [&] (Key key) -> int {
            auto [it, inserted] = index.emplace(key, static_cast<int>(keys.size()));
            if (inserted)
                keys.push_back(std::move(key));
            return it->second;
        };

        struct Record
        {
            std::vector<int> args;
            int result;
        };
        std::vector<int> nu_result;
        std::vector<std::pair<std::pair<int, int>, int>> combine_records;
        std::vector<std::vector<std::vector<Record>>> mu_records(signature.size());
        for (std::size_t r = 0 ; r < signature.size() ; ++r)
            mu_records[r].resize(signature.arity(r));

        auto check_size = [&] () {
            double n = static_cast<double>(keys.size());
            double total = n * n;
            for (std::size_t r = 0 ; r < signature.size() ; ++r) {
                double t = 1;
                for (int p = 0 ; p < signature.arity(r) ; ++p)
                    t *= n;
                total += t * signature.arity(r);
            }
            if (total > static_cast<double>(closure_table_limit))
                throw TooLarge("algebra construction exceeds " + std::to_string(keys.size()) + " states");
        };

        intern(ops.init());
        for (int k = 0 ; k < static_cast<int>(keys.size()) ; ++k) {
            check_size();
            Key current = keys[k];
            nu_result.push_back(intern(ops.nu(current)));
            for (int j = 0 ; j <= k ; ++j) {
                Key other = keys[j];
                combine_records.push_back({{j, k}, intern(ops.combine(other, current))});
                if (j != k)
                    combine_records.push_back({{k, j}, intern(ops.combine(current, other))});
            }
            for (std::size_t r = 0 ; r < signature.size() ; ++r) {
                int arity = signature.arity(r);
                for_each_tuple_with(k, arity, [&] (const std::vector<int> & t) {
                        std::vector<Key> args;
                        args.reserve(arity);
                        for (int x : t)
                            args.push_back(keys[x]);
                        for (int p = 0 ; p < arity ; ++p)
                            mu_records[r][p].push_back({t, intern(ops.mu(r, p, args))});
                    });
            }
        }

        int n = static_cast<int>(keys.size());
        ForestAlgebra alg(signature, n);
        alg.init = 0;
        alg.empty_in_family = empty_in_family;
        alg.provenance = provenance;
        for (int s = 0 ; s < n ; ++s) {
            alg.states[s] = ops.name(keys[s], s);
            alg.terminal[s] = ops.terminal(keys[s]);
            alg.nu[s] = nu_result[s];
        }
        for (auto & [ab, c] : combine_records)
            alg.combine[static_cast<std::size_t>(ab.first) * n + ab.second] = c;
        for (std::size_t r = 0 ; r < signature.size() ; ++r)
            for (int p = 0 ; p < signature.arity(r) ; ++p)
                for (auto & rec : mu_records[r][p])
                    alg.mu[r][p][alg.mu_index(rec.args)] = rec.result;
        return alg;
    }
}

#endif
