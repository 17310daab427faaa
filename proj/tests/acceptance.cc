#include <forestdual/antichain.hh>
#include <forestdual/canonical.hh>
#include <forestdual/duality.hh>
#include <forestdual/enumerate.hh>
#include <forestdual/families.hh>
#include <forestdual/homomorphism.hh>
#include <forestdual/json_io.hh>
#include <forestdual/path_literal.hh>

#include "oracles.hh"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace forestdual;

using std::string;
using std::vector;

namespace
{
    constexpr int gallai_roy_bound = 4;
    constexpr int hom_family_targets = 3;
    constexpr int hom_family_forests = 4;
    constexpr int boolean_pairs = 20;
    constexpr int boolean_forests = 4;
    constexpr int tree_dual_bound = 4;
    constexpr int coherence_trials = 1000;
    constexpr int coherence_vertices = 6;
    constexpr int minimize_forests = 4;
    constexpr int upex_bound = 6;
    constexpr int upex_margin = 2;
    constexpr int retraction_bound = 3;
    constexpr int splitting_bound = 4;

    auto g() -> Signature { return Signature::digraph(); }

    auto fixtures() -> std::filesystem::path { return FORESTDUAL_FIXTURES; }

    struct Outcome
    {
        bool passed;
        string detail;
    };

    struct MemberList
    {
        vector<Structure> members;
        vector<Structure> duals;
    };

    auto read_list(const Json & j, const char * key) -> vector<Structure>
    {
        vector<Structure> result;
        if (j.contains(key))
            for (auto & s : j.at(key))
                result.push_back(s.is_string() ? parse_path_literal(s.get<string>()) : structure_from_json(s));
        return result;
    }

    auto load_pair(const std::filesystem::path & path) -> MemberList
    {
        auto j = load_json_file(path.string());
        return MemberList{read_list(j, "members"), read_list(j, "duals")};
    }

    auto finite(const vector<Structure> & ms) -> ForestAlgebra { return build_finite_family(g(), ms); }

    auto forests(int n) -> const vector<Structure> &
    {
        static std::map<int, vector<Structure>> cache;
        auto it = cache.find(n);
        if (it == cache.end())
            it = cache.emplace(n, enumerate_structures(g(), n, true)).first;
        return it->second;
    }

    auto digraphs(int n) -> const vector<Structure> &
    {
        static std::map<int, vector<Structure>> cache;
        auto it = cache.find(n);
        if (it == cache.end())
            it = cache.emplace(n, enumerate_structures(g(), n, false)).first;
        return it->second;
    }

    auto with_empty(const vector<Structure> & xs) -> vector<Structure>
    {
        auto result = xs;
        if (std::none_of(result.begin(), result.end(), [] (auto & s) { return s.empty(); }))
            result.push_back(Structure{g(), 0});
        return result;
    }

    auto random_algebra(std::mt19937_64 & rng) -> ForestAlgebra
    {
        auto & targets = digraphs(2);
        auto pick = [&] (const vector<Structure> & xs) {
            return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
        };
        switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
            case 0:
                return build_hom_family(pick(digraphs(3)));
            case 1:
                return build_obstruction_family(g(), {pick(targets), pick(targets)});
            case 2:
                return build_trees_family(g());
            case 3: {
                vector<Structure> ms;
                for (int k = std::uniform_int_distribution<int>(1, 3)(rng) ; k > 0 ; --k)
                    ms.push_back(random_forest(g(), 4, rng));
                return finite(ms);
            }
            default:
                return build_all_forests_family(g());
        }
    }

    auto constructor_algebras() -> vector<ForestAlgebra>
    {
        auto tt2 = transitive_tournament(2);
        auto sym = Structure{g(), 2, {{{0, 1}, {1, 0}}}};
        return {
            build_hom_family(tt2),
            build_hom_family(transitive_tournament(3)),
            build_hom_family(sym),
            build_obstruction_family(g(), {tt2}),
            build_obstruction_family(g(), {sym, Structure{g(), 1}}),
            build_trees_family(g()),
            build_all_forests_family(g()),
            finite({directed_path(1)}),
            finite({parse_path_literal("++"), disjoint_union(directed_path(1), directed_path(1))}),
            finite({parse_path_literal("+-+"), parse_path_literal("++-")}),
            family_union(build_hom_family(tt2), build_trees_family(g())),
            family_intersection(build_obstruction_family(g(), {tt2}), build_trees_family(g())),
            family_complement(finite({parse_path_literal("+-")}))};
    }

    auto same_on(const ForestAlgebra & a, const ForestAlgebra & b, const vector<Structure> & xs) -> bool
    {
        return std::all_of(xs.begin(), xs.end(), [&] (auto & x) { return member(a, x) == member(b, x); });
    }

    auto criterion_1() -> Outcome
    {
        std::ostringstream detail;
        bool ok = true;
        for (int k = 1 ; k <= 3 ; ++k) {
            auto alg = finite({directed_path(k)});
            auto duals = forest_dual_family(alg);
            auto report = verify_duality(alg, duals, gallai_roy_bound);
            bool tt = std::any_of(duals.begin(), duals.end(),
                    [&] (auto & d) { return hom_equivalent(d, transitive_tournament(k)); });
            ok = ok && report.passed() && tt;
            detail << "k=" << k << ": " << duals.size() << " duals, " << report.checked << " checked, "
                   << report.failures.size() << " failures, TT_" << k << (tt ? " found" : " missing") << "; ";
        }
        return {ok, detail.str()};
    }

    auto criterion_2() -> Outcome
    {
        std::map<string, Structure> paths;
        std::ifstream in(fixtures() / "paths" / "P_ij.txt");
        string name, literal;
        while (in >> name >> literal)
            paths.emplace(name, parse_path_literal(literal));

        bool ok = paths.size() == 12;
        std::ostringstream detail;
        for (int i = 1 ; i <= 3 ; ++i)
            for (int j = 1 ; j <= 3 ; ++j) {
                auto key = "P_" + std::to_string(i) + std::to_string(j);
                if (! paths.count(key))
                    return {false, "fixture " + key + " missing"};
                auto & s = paths.at(key);
                ok = ok && s == parse_path_literal(p_ij_word(i, j));
                bool c = is_core(s);
                if (c != (i != j)) {
                    ok = false;
                    detail << key << " is_core=" << c << "; ";
                }
                if (i == j) {
                    auto expected = parse_path_literal("++(+-+)^" + std::to_string(i) + "++");
                    if (! isomorphic(core(s), expected)) {
                        ok = false;
                        detail << "core of " << key << " differs; ";
                    }
                }
            }
        detail << "9 paths checked";
        return {ok, detail.str()};
    }

    auto criterion_3() -> Outcome
    {
        int checked = 0, wrong = 0;
        for (auto & d : digraphs(hom_family_targets)) {
            auto h = build_hom_family(d);
            for (auto & a : forests(hom_family_forests)) {
                ++checked;
                if (member(h, a) != oracle::hom(a, d))
                    ++wrong;
            }
        }
        return {wrong == 0, std::to_string(checked) + " pairs, " + std::to_string(wrong) + " disagreements"};
    }

    auto criterion_4() -> Outcome
    {
        std::mt19937_64 rng(4);
        auto xs = with_empty(forests(boolean_forests));
        int wrong = 0;
        for (int t = 0 ; t < boolean_pairs ; ++t) {
            auto a = random_algebra(rng), b = random_algebra(rng);
            auto u = family_union(a, b), i = family_intersection(a, b), c = family_complement(a);
            for (auto & x : xs) {
                bool ma = member(a, x), mb = member(b, x);
                if (member(u, x) != (ma || mb) || member(i, x) != (ma && mb) || member(c, x) == ma)
                    ++wrong;
            }
        }
        return {wrong == 0, std::to_string(boolean_pairs) + " pairs on " + std::to_string(xs.size())
                + " forests, " + std::to_string(wrong) + " disagreements"};
    }

    auto criterion_5() -> Outcome
    {
        auto p = [] (const char * w) { return parse_path_literal(w); };
        auto trees = build_trees_family(g());
        auto restricted = [&] (Structure t) { return family_intersection(build_obstruction_family(g(), {t}), trees); };
        vector<ForestAlgebra> families{
            finite({directed_path(1)}),
            finite({p("++")}),
            finite({p("+-"), p("-+")}),
            finite({p("+++"), p("+-+")}),
            finite({p("++-"), Structure{g(), 4, {{{0, 1}, {0, 2}, {0, 3}}}}}),
            restricted(Structure{g(), 1}),
            restricted(transitive_tournament(2)),
            restricted(Structure{g(), 2, {{{0, 1}, {1, 0}}}}),
            restricted(Structure{g(), 2, {{{0, 0}, {0, 1}}}}),
            restricted(Structure{g(), 2, {{{0, 1}, {1, 1}}}})};
        int wrong = 0, checked = 0;
        for (auto & o : families) {
            auto d = tree_dual(o).structure;
            for (auto & b : digraphs(tree_dual_bound)) {
                ++checked;
                if (hom_exists(b, d) != is_empty(family_intersection(o, build_hom_family(b))))
                    ++wrong;
            }
        }
        return {wrong == 0, "10 families, " + std::to_string(checked) + " checks, " + std::to_string(wrong) + " disagreements"};
    }

    auto criterion_6() -> Outcome
    {
        auto algs = constructor_algebras();
        int failed = 0;
        std::uint64_t seed = 6;
        for (auto & a : algs) {
            auto r = check_coherence(a, coherence_trials, coherence_vertices, seed++);
            if (! r.passed || r.trials != coherence_trials)
                ++failed;
        }
        return {failed == 0, std::to_string(algs.size()) + " algebras x " + std::to_string(coherence_trials)
                + " trials, " + std::to_string(failed) + " incoherent"};
    }

    auto criterion_7() -> Outcome
    {
        auto xs = with_empty(forests(minimize_forests));
        int problems = 0, pairs = 0;
        for (auto & a : constructor_algebras()) {
            auto m = minimize(a);
            auto mm = minimize(m);
            if (mm.size() != m.size() || mm.combine != m.combine || mm.nu != m.nu || mm.mu != m.mu
                    || mm.terminal != m.terminal || mm.init != m.init)
                ++problems;
            if (! same_on(a, m, xs))
                ++problems;
            for (int s = 0 ; s < m.size() ; ++s)
                for (int t = s + 1 ; t < m.size() ; ++t) {
                    ++pairs;
                    auto c = distinguishing_context(m, s, t);
                    if (! c || m.terminal[apply_context(m, s, *c)] == m.terminal[apply_context(m, t, *c)])
                        ++problems;
                }
        }
        return {problems == 0, std::to_string(pairs) + " state pairs, " + std::to_string(problems) + " problems"};
    }

    auto criterion_8() -> Outcome
    {
        vector<std::filesystem::path> files;
        for (auto & e : std::filesystem::directory_iterator(fixtures() / "finite"))
            files.push_back(e.path());
        std::sort(files.begin(), files.end());
        bool ok = ! files.empty();
        std::ostringstream detail;
        for (auto & f : files) {
            auto alg = finite(load_pair(f).members);
            auto r = cores_of_minimals_bounded(alg, upex_bound, upex_margin);
            bool good = r.agree;
            for (auto * route : {&r.route_a, &r.route_b})
                for (auto & s : *route)
                    good = good && is_core(s) && is_forest(s);
            ok = ok && good;
            detail << f.stem().string() << (good ? " ok" : " FAIL") << " (" << r.route_a.size() << "/" << r.route_b.size() << "); ";
        }
        return {ok, detail.str()};
    }

    auto criterion_9() -> Outcome
    {
        auto & xs = digraphs(retraction_bound);
        long homs = 0, wrong = 0;
        for (auto & a : xs)
            for (auto & b : xs)
                for_each_hom(a, b, [&] (const VertexMap & h) {
                    ++homs;
                    bool r = is_retraction(a, b, h);
                    if (r != is_retraction_by_components(a, b, h) || r != oracle::retraction(a, b, h))
                        ++wrong;
                    return true;
                });
        return {wrong == 0, std::to_string(homs) + " homomorphisms, " + std::to_string(wrong) + " disagreements"};
    }

    auto criterion_10() -> Outcome
    {
        bool ok = true;
        std::ostringstream detail;
        for (int k = 1 ; k <= 3 ; ++k) {
            auto pair = load_pair(fixtures() / "gallai_roy" / ("k" + std::to_string(k) + ".json"));
            auto alg = finite(pair.members);
            auto report = check_splitting(alg, pair.duals, splitting_bound);
            bool singleton = check_splitting(alg, {tree_dual(alg).structure}, splitting_bound).passed();
            ok = ok && report.passed() && singleton;
            detail << "k=" << k << ": " << report.failures.size() << " failures";
            if (! report.failures.empty())
                detail << " (first: " << report.failures[0].direction << " " << compact_text(report.failures[0].structure) << ")";
            detail << ", singleton dual " << (singleton ? "ok" : "fails") << "; ";
        }
        return {ok, detail.str()};
    }
}

auto main() -> int
{
    struct Criterion
    {
        int number;
        string name;
        double budget_seconds;
        std::function<auto () -> Outcome> run;
    };
    vector<Criterion> criteria{
        {1, "Gallai-Roy reconstruction", 60, criterion_1},
        {2, "oriented path cores", 10, criterion_2},
        {3, "hom family semantics", 120, criterion_3},
        {4, "boolean closure", 120, criterion_4},
        {5, "tree duals", 300, criterion_5},
        {6, "coherence", 60, criterion_6},
        {7, "minimization", 60, criterion_7},
        {8, "UP/EX routes", 300, criterion_8},
        {9, "retraction characterizations", 120, criterion_9},
        {10, "splitting and antichain", 60, criterion_10}};

    int failures = 0;
    for (auto & c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome outcome{false, ""};
        try {
            outcome = c.run();
        }
        catch (const std::exception & e) {
            outcome = {false, string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = seconds <= c.budget_seconds;
        bool passed = outcome.passed && in_time;
        failures += ! passed;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "criterion " << c.number << ": " << (passed ? "PASS" : "FAIL") << "  " << c.name
             << "  [" << seconds << " s of " << c.budget_seconds << " s" << (in_time ? "" : ", over budget") << "]  "
             << outcome.detail;
        std::cout << line.str() << std::endl;
    }
    std::cout << (criteria.size() - failures) << " of " << criteria.size() << " criteria passed" << std::endl;
    return failures ? 1 : 0;
}
