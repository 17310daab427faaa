#include <doctest.h>

#include <forestdual/canonical.hh>
#include <forestdual/enumerate.hh>
#include <forestdual/errors.hh>
#include <forestdual/homomorphism.hh>
#include <forestdual/path_literal.hh>

#include "oracles.hh"

#include <random>

using namespace forestdual;

namespace
{
    auto arc() -> Structure { return directed_path(1); }

    auto two_arcs() -> Structure { return disjoint_union(arc(), arc()); }

    auto loop() -> Structure { return Structure{Signature::digraph(), 1, {{{0, 0}}}}; }

    auto ternary() -> Signature { return Signature{{{"R", 3}, {"U", 1}}}; }
}

TEST_CASE("signature validation")
{
    CHECK_THROWS_AS(Signature({{"E", 2}, {"E", 1}}), InputError);
    CHECK_THROWS_AS(Signature({{"E", 0}}), InputError);
    Signature s{{{"A", 1}, {"B", 3}}};
    CHECK(s.max_arity() == 3);
    CHECK(s.index_of("B") == 1u);
    CHECK(! s.index_of("C"));
    CHECK(Signature::digraph() == Signature({{"E", 2}}));
}

TEST_CASE("structure validation")
{
    auto g = Signature::digraph();
    CHECK_THROWS_AS(Structure(g, 2, {{{0, 2}}}), InputError);
    CHECK_THROWS_AS(Structure(g, 2, {{{0}}}), InputError);
    Structure s{g, 2, {{{1, 0}, {0, 1}, {1, 0}}}};
    CHECK(s.tuples(0).size() == 2);
    CHECK(s.tuples(0)[0] == Tuple{0, 1});
    CHECK_THROWS_AS(RootedStructure(s, 2), InputError);
}

TEST_CASE("components")
{
    auto s = disjoint_union(arc(), Structure{Signature::digraph(), 1});
    auto cs = components(s);
    REQUIRE(cs.size() == 2);
    CHECK(components(arc()).size() == 1);
    CHECK(components(Structure{Signature::digraph(), 0}).empty());

    auto u = disjoint_union(parse_path_literal("p(++)"), parse_path_literal("p(+)"));
    auto parts = components(u);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].part.vertex_count() == 3);
    CHECK(parts[1].part.vertex_count() == 2);
    CHECK(parts[1].back_map == std::vector<int>{3, 4});
}

TEST_CASE("forest and tree recognition")
{
    auto g = Signature::digraph();
    CHECK(! is_forest(Structure{g, 2, {{{0, 1}, {1, 0}}}}));
    CHECK(! is_forest(loop()));
    CHECK(is_tree(parse_path_literal("p(+-+)")));
    CHECK(is_forest(Structure{g, 0}));
    CHECK(! is_tree(Structure{g, 0}));
    CHECK(is_tree(Structure{g, 1}));
    CHECK(! is_tree(two_arcs()));
    CHECK(is_forest(two_arcs()));
    CHECK(! is_forest(transitive_tournament(3)));
    Structure t{ternary(), 3, {{{0, 1, 2}}, {{1}}}};
    CHECK(is_tree(t));
    CHECK(! is_forest(Structure{ternary(), 2, {{{0, 1, 0}}, { }}}));
}

TEST_CASE("forest recognition matches counting oracle")
{
    for (int n = 0 ; n <= 3 ; ++n)
        for (auto & s : oracle::classes(Signature::digraph(), n))
            CHECK(is_forest(s) == oracle::is_forest(s));
    for (int n = 0 ; n <= 2 ; ++n)
        for (auto & s : oracle::classes(Signature{{{"R", 3}}}, n))
            CHECK(is_forest(s) == oracle::is_forest(s));
}

TEST_CASE("find_hom examples")
{
    auto g = Signature::digraph();
    CHECK(find_hom(Structure{g, 0}, transitive_tournament(2)));
    CHECK(find_hom(Structure{g, 0}, Structure{g, 0}));
    CHECK(! find_hom(parse_path_literal("++"), arc()));
    auto h = find_hom(arc(), transitive_tournament(2));
    REQUIRE(h);
    CHECK(h->map == VertexMap{0, 1});
    CHECK_THROWS_AS(find_hom(arc(), arc(), {std::nullopt, 5}), InputError);
    CHECK_THROWS_AS(find_hom(arc(), arc(), {0, 1, 1}), InputError);
    auto c = find_hom(parse_path_literal("+-"), transitive_tournament(3), {std::nullopt, 1});
    REQUIRE(c);
    CHECK(c->map == VertexMap{0, 1, 0});
    CHECK(! hom_exists(Structure{g, 1}, Structure{g, 0}));
}

TEST_CASE("find_hom returns the lexicographically least homomorphism")
{
    auto g = Signature::digraph();
    std::vector<Structure> small;
    for (int n = 0 ; n <= 3 ; ++n)
        for (auto & s : oracle::classes(g, n))
            small.push_back(s);
    for (auto & a : small)
        for (auto & b : small) {
            auto homs = oracle::all_homs(a, b);
            auto h = find_hom(a, b);
            REQUIRE(h.has_value() == ! homs.empty());
            if (h)
                CHECK(h->map == homs.front());
            CHECK(hom_exists(a, b) == ! homs.empty());
        }
}

TEST_CASE("tree DP agrees with backtracking on forests up to 4 vertices")
{
    auto g = Signature::digraph();
    auto forests = enumerate_structures(g, 4, true);
    auto targets = enumerate_structures(g, 4, false);
    for (auto & a : forests)
        for (auto & b : targets) {
            auto dp = find_hom_tree_dp(a, b);
            auto bt = find_hom_backtracking(a, b);
            REQUIRE(dp.has_value() == bt.has_value());
            if (dp)
                CHECK(*dp == *bt);
        }
}

TEST_CASE("tree DP on a ternary signature with unary relations")
{
    auto sig = ternary();
    auto forests = enumerate_structures(sig, 4, true);
    auto targets = enumerate_structures(sig, 2, false);
    for (auto & a : forests)
        for (auto & b : targets) {
            auto dp = find_hom_tree_dp(a, b);
            CHECK(dp.has_value() == oracle::hom(a, b));
        }
}

TEST_CASE("for_each_hom visits every homomorphism in order")
{
    auto a = parse_path_literal("+-");
    auto b = transitive_tournament(3);
    std::vector<VertexMap> seen;
    for_each_hom(a, b, [&] (const VertexMap & m) { seen.push_back(m); return true; });
    CHECK(seen == oracle::all_homs(a, b));
    CHECK(seen.size() == 5);
}

TEST_CASE("core examples")
{
    CHECK(isomorphic(core(transitive_tournament(2)), transitive_tournament(2)));
    CHECK(isomorphic(core(two_arcs()), arc()));
    CHECK(is_core(Structure{Signature::digraph(), 1}));
    CHECK(core(Structure{Signature::digraph(), 0}).vertex_count() == 0);
    CHECK(isomorphic(core(parse_path_literal("+-+")), arc()));
    CHECK(isomorphic(core(parse_path_literal(std::string("p(") + p_ij_word(1, 1) + ")")),
                parse_path_literal("++(+-+)++")));
    CHECK(is_core(parse_path_literal(p_ij_word(1, 2))));
    CHECK(! is_core(parse_path_literal(p_ij_word(1, 1))));
}

TEST_CASE("core properties on enumerated digraphs up to 3 vertices")
{
    for (auto & s : enumerate_structures(Signature::digraph(), 3, false)) {
        auto c = core(s);
        CHECK(hom_equivalent(c, s));
        CHECK(is_core(c));
        CHECK(core(c) == c);
        CHECK(is_core(s) == oracle::is_core(s));
        if (is_core(s))
            CHECK(c.vertex_count() == s.vertex_count());
    }
}

TEST_CASE("retraction examples")
{
    auto g = Signature::digraph();
    CHECK(is_retraction(arc(), arc(), VertexMap{0, 1}));
    CHECK(is_retraction(two_arcs(), arc(), VertexMap{0, 1, 0, 1}));
    auto p = parse_path_literal("++");
    auto h = find_hom(p, transitive_tournament(3));
    REQUIRE(h);
    CHECK(h->map == VertexMap{0, 1, 2});
    CHECK(! is_retraction(*h));
    CHECK(! oracle::retraction(p, transitive_tournament(3), h->map));

    CHECK(! exists_non_retraction(arc(), arc()));
    auto nr = exists_non_retraction(arc(), two_arcs());
    REQUIRE(nr);
    CHECK(nr->map == VertexMap{0, 1});
    CHECK(! exists_non_retraction(p, p));
    (void) g;
}

TEST_CASE("retraction search agrees with the component characterization up to 3 vertices")
{
    auto all = enumerate_structures(Signature::digraph(), 3, false);
    for (auto & a : all)
        for (auto & b : all)
            for (auto & m : oracle::all_homs(a, b)) {
                bool rs = is_retraction(a, b, m);
                CHECK(rs == is_retraction_by_components(a, b, m));
                CHECK(rs == oracle::retraction(a, b, m));
            }
}

TEST_CASE("products and unions")
{
    auto g = Signature::digraph();
    auto p = direct_product(parse_path_literal("+-"), Structure{g, 1});
    CHECK(p.vertex_count() == 3);
    CHECK(p.tuple_count() == 0);
    auto tt = direct_product(transitive_tournament(2), transitive_tournament(2));
    CHECK(tt.vertex_count() == 4);
    CHECK(tt.tuple_count() == 1);
    auto a = parse_path_literal("+-+");
    auto aa = direct_product(a, a);
    VertexMap diag;
    for (int v = 0 ; v < a.vertex_count() ; ++v)
        diag.push_back(v * a.vertex_count() + v);
    CHECK(is_homomorphism(a, aa, diag));

    CHECK(disjoint_union(a, Structure{g, 0}) == a);
    CHECK(two_arcs().vertex_count() == 4);
    CHECK(two_arcs().tuple_count() == 2);
    CHECK(components(disjoint_union(a, two_arcs())).size() == 3);
}

TEST_CASE("product and union hom laws on enumerated triples")
{
    auto g = Signature::digraph();
    auto all = enumerate_structures(g, 2, false);
    for (auto & a : all)
        for (auto & b : all) {
            auto p = direct_product(a, b);
            auto u = disjoint_union(a, b);
            for (auto & c : all) {
                CHECK(hom_exists(c, p) == (hom_exists(c, a) && hom_exists(c, b)));
                CHECK(hom_exists(u, c) == (hom_exists(a, c) && hom_exists(b, c)));
            }
        }
}

TEST_CASE("hom transitivity on enumerated digraphs up to 2 vertices")
{
    auto all = enumerate_structures(Signature::digraph(), 2, false);
    for (auto & a : all)
        for (auto & b : all)
            for (auto & c : all)
                if (hom_exists(a, b) && hom_exists(b, c))
                    CHECK(hom_exists(a, c));
}

TEST_CASE("rooted combination and concatenation")
{
    auto g = Signature::digraph();
    auto t0 = trivial_rooted(g);
    RootedStructure x{parse_path_literal("+-"), 1};
    CHECK(isomorphic(unroot(combine_rooted(x, t0)), unroot(x)));
    CHECK(isomorphic(unroot(combine_rooted(t0, x)), unroot(x)));

    RootedStructure tail{arc(), 0};
    auto c = combine_rooted(tail, tail);
    CHECK(c.structure.vertex_count() == 3);
    CHECK(c.structure.tuple_count() == 2);
    CHECK(incidence_graph(c.structure).vertex_edges[c.root].size() == 2);

    RootedStructure y{parse_path_literal("++"), 2};
    CHECK(isomorphic(unroot(combine_rooted(x, y)), unroot(combine_rooted(y, x))));

    std::vector<RootedStructure> args{t0, t0};
    CHECK(isomorphic(concatenate(0, args).structure, arc()));
    std::vector<RootedStructure> args2{RootedStructure{arc(), 1}, t0};
    auto cat = concatenate(0, args2);
    CHECK(isomorphic(cat.structure, parse_path_literal("++")));
    CHECK(is_tree(cat.structure));
    std::vector<RootedStructure> bad{t0};
    CHECK_THROWS_AS(concatenate(0, bad), InputError);

    auto r = add_isolated_root(x);
    CHECK(r.root == 3);
    CHECK(components(r.structure).size() == 2);
}

TEST_CASE("combine with the trivial tree is an identity on enumerated rooted forests")
{
    auto g = Signature::digraph();
    for (auto & s : enumerate_structures(g, 4, true))
        for (int v = 0 ; v < s.vertex_count() ; ++v) {
            RootedStructure a{s, v};
            auto c = combine_rooted(a, trivial_rooted(g));
            CHECK(rooted_forest_code(c) == rooted_forest_code(a));
        }
}

TEST_CASE("enumeration counts")
{
    auto g = Signature::digraph();
    CHECK(enumerate_structures(g, 1, false).size() == 3);
    CHECK(enumerate_structures(g, 0, false).size() == 1);
    CHECK(enumerate_structures(g, 3, false).size() == 117);
    CHECK(enumerate_structures(g, 2, true).size() == 4);
    CHECK(enumerate_structures(g, 4, false).size() == 3161);
    CHECK_THROWS_AS(enumerate_structures(g, 5, false), TooLarge);
}

TEST_CASE("enumeration matches the permutation oracle")
{
    auto check = [] (const Signature & sig, int max, bool forests) {
        std::set<Structure> expected;
        for (int n = 0 ; n <= max ; ++n)
            for (auto & s : oracle::classes(sig, n))
                if (! forests || is_forest(s))
                    expected.insert(s);
        auto got = enumerate_structures(sig, max, forests);
        REQUIRE(got.size() == expected.size());
        std::set<std::string> codes;
        for (auto & s : got)
            codes.insert(compact_text(oracle::canonical(s)));
        CHECK(codes.size() == got.size());
        for (auto & s : got)
            CHECK(expected.count(oracle::canonical(s)) == 1);
    };
    check(Signature::digraph(), 3, false);
    check(Signature::digraph(), 4, true);
    check(Signature{{{"R", 3}, {"U", 1}}}, 2, true);
    check(Signature{{{"U", 1}, {"E", 2}}}, 3, false);
}

TEST_CASE("frozen forest counts")
{
    auto g = Signature::digraph();
    CHECK(enumerate_trees(g, 4).size() == 1 + 1 + 3 + 8);
    CHECK(enumerate_trees(g, 6).size() == 1 + 1 + 3 + 8 + 27 + 91);
    CHECK(enumerate_structures(g, 4, true).size() == 23);
}

TEST_CASE("canonical form is invariant under relabelling")
{
    std::mt19937_64 rng(7);
    auto g = Signature::digraph();
    for (int trial = 0 ; trial < 200 ; ++trial) {
        auto f = random_forest(g, 8, rng);
        REQUIRE(is_forest(f));
        std::vector<int> perm(f.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto h = oracle::relabel(f, perm);
        CHECK(canonical_form(f) == canonical_form(h));
        CHECK(forest_code(f) == forest_code(h));
        CHECK(isomorphic(canonical_form(f), f));
    }
    for (auto & s : enumerate_structures(g, 3, false)) {
        std::vector<int> perm(s.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        do
            CHECK(canonical_form(oracle::relabel(s, perm)) == s);
        while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("path literals")
{
    auto p = parse_path_literal("+");
    CHECK(p == arc());
    auto q = parse_path_literal("++");
    CHECK(q.vertex_count() == 3);
    CHECK(q.tuples(0) == std::vector<Tuple>{{0, 1}, {1, 2}});
    auto r = parse_path_literal("p(+-)");
    CHECK(r.tuples(0) == std::vector<Tuple>{{0, 1}, {2, 1}});
    CHECK(parse_path_literal("p()").vertex_count() == 1);
    CHECK(parse_path_literal("").vertex_count() == 1);
    CHECK_THROWS_AS(parse_path_literal("+x"), InputError);
    CHECK_THROWS_AS(parse_path_literal("(+"), InputError);
    CHECK(expand_path_word("++(+-+)^2++") == "+++-++-+++");
    CHECK(p_ij_word(1, 2) == "+++-+++---+--+---");
    CHECK(parse_path_literal(p_ij_word(3, 3)).vertex_count() == 27);
}

TEST_CASE("compact text")
{
    CHECK(compact_text(parse_path_literal("+-")) == "3|E:0-1,2-1");
    CHECK(compact_text(Structure{Signature::digraph(), 2}) == "2");
}
