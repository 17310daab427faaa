#include <doctest.h>

#include <forestdual/errors.hh>
#include <forestdual/families.hh>
#include <forestdual/homomorphism.hh>
#include <forestdual/json_io.hh>
#include <forestdual/path_literal.hh>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

using namespace forestdual;

namespace
{
    struct Run
    {
        int code;
        std::string out;
    };

    auto run(const std::string & args) -> Run
    {
        std::string cmd = std::string(FORESTDUAL_CLI) + " " + args + " 2>/dev/null";
        FILE * pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe);
        std::string out;
        char buf[4096];
        while (auto n = fread(buf, 1, sizeof buf, pipe))
            out.append(buf, n);
        int status = pclose(pipe);
        return Run{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
    }

    auto fixture(const std::string & name) -> std::string
    {
        return std::string(FORESTDUAL_FIXTURES) + "/" + name;
    }

    auto scratch() -> std::filesystem::path
    {
        auto dir = std::filesystem::temp_directory_path() / "forestdual_cli_test";
        std::filesystem::create_directories(dir);
        return dir;
    }

    auto write(const std::filesystem::path & path, const Json & j) -> std::string
    {
        std::ofstream(path) << dump_json(j);
        return path.string();
    }
}

TEST_CASE("structure json round trip")
{
    auto s = parse_path_literal("+-++");
    auto j = to_json(s);
    CHECK(structure_from_json(j) == s);
    CHECK(dump_json(to_json(structure_from_json(j))) == dump_json(j));

    Signature ternary{{{"R", 3}, {"U", 1}}};
    Structure t{ternary, 3, {{{0, 1, 2}}, {{2}}}};
    CHECK(structure_from_json(to_json(t)) == t);
    CHECK(signature_from_json(to_json(ternary)) == ternary);

    CHECK_THROWS_AS(structure_from_json(Json{{"vertex_count", 2}}), InputError);
    auto bad = to_json(s);
    bad["relations"]["E"].push_back(Json::array({0, 9}));
    CHECK_THROWS_AS(structure_from_json(bad), InputError);
}

TEST_CASE("algebra json round trip")
{
    Signature ternary{{{"R", 3}, {"U", 1}}};
    for (auto & alg : {build_finite_family(Signature::digraph(), {parse_path_literal("++")}),
                       build_hom_family(transitive_tournament(2)),
                       build_trees_family(ternary)}) {
        auto j = to_json(alg);
        auto back = algebra_from_json(j);
        CHECK(dump_json(to_json(back)) == dump_json(j));
        CHECK(back.combine == alg.combine);
        CHECK(back.mu == alg.mu);
        CHECK(back.terminal == alg.terminal);
    }
    auto j = to_json(build_trees_family(Signature::digraph()));
    j["nu"] = Json::array({0});
    CHECK_THROWS_AS(algebra_from_json(j), InputError);
}

TEST_CASE("fixtures and cores")
{
    auto r = run("fixtures paths --i 1 --j 2");
    REQUIRE(r.code == 0);
    auto s = structure_from_json(Json::parse(r.out));
    CHECK(s == parse_path_literal(p_ij_word(1, 2)));

    auto c = run("struct core 'p(++(+-+)^1++--(-+-)^1--)'");
    REQUIRE(c.code == 0);
    CHECK(Json::parse(c.out)["path_literal"] == "p(+++-+++)");

    auto text = run("--format text struct core 'p(++(+-+)^1++--(-+-)^1--)'");
    CHECK(text.out == "p(+++-+++)\n");

    auto iscore = run("struct iscore 'p(++(+-+)^1++--(-+-)^2--)'");
    CHECK(Json::parse(iscore.out)["is_core"] == true);
}

TEST_CASE("structure commands")
{
    auto h = run("struct hom 'p(++)' 'p(+)'");
    REQUIRE(h.code == 0);
    CHECK(Json::parse(h.out)["exists"] == false);
    auto h2 = run("struct hom 'p(+)' 'p(++)'");
    CHECK(Json::parse(h2.out)["map"] == Json::array({0, 1}));

    auto comps = Json::parse(run("struct components " + write(scratch() / "two.json",
            to_json(disjoint_union(directed_path(1), directed_path(2))))).out);
    CHECK(comps["count"] == 2);

    CHECK(Json::parse(run("struct isforest 'p(+-)'").out)["is_tree"] == true);
    CHECK(Json::parse(run("struct product 'p(+)' 'p(+)'").out)["vertex_count"] == 4);
    CHECK(Json::parse(run("struct union 'p(+)' 'p(+)'").out)["vertex_count"] == 4);
}

TEST_CASE("verification exit codes")
{
    CHECK(run("verify duality " + fixture("gallai_roy/k2.json")).code == 0);
    CHECK(run("verify duality " + fixture("gallai_roy/k3.json")).code == 0);
    CHECK(run("verify splitting " + fixture("gallai_roy/k3.json")).code == 0);
    CHECK(run("verify splitting " + fixture("gallai_roy/k2.json")).code == 1);
    CHECK(run("verify minimals " + fixture("gallai_roy/k2.json")).code == 0);
    CHECK(run("verify upex --bound 4 " + fixture("finite/arc_and_path.json")).code == 0);

    auto a = run("verify duality --seed 5 " + fixture("gallai_roy/k1.json"));
    auto b = run("verify duality --seed 5 " + fixture("gallai_roy/k1.json"));
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("failures are replayable")
{
    auto tt2 = write(scratch() / "tt2.json", to_json(transitive_tournament(2)));
    auto r = run("verify duality --max-vertices 3 'p(+)' " + tt2);
    REQUIRE(r.code == 1);
    auto report = Json::parse(r.out);
    REQUIRE(! report["failures"].empty());
    CHECK(report["structures_checked"] == 117);
    for (auto & f : report["failures"]) {
        auto b = write(scratch() / "b.json", f["structure"]);
        auto m = write(scratch() / "m.json", f["witness"]["member"]);
        auto replay = Json::parse(run("struct hom " + m + " " + b).out);
        CHECK(replay["exists"] == true);
        CHECK(replay["map"] == f["witness"]["member_hom"]);
        auto into = Json::parse(run("struct hom " + b + " " + tt2).out);
        CHECK(into["map"] == f["witness"]["dual_hom"]);
    }
}

TEST_CASE("algebra commands")
{
    auto dir = scratch();
    auto a = (dir / "a.json").string(), c = (dir / "c.json").string(), i = (dir / "i.json").string();
    REQUIRE(run("algebra finite 'p(++)' 'p(+-)' -o " + a).code == 0);
    REQUIRE(run("algebra complement " + a + " -o " + c).code == 0);
    REQUIRE(run("algebra intersect " + a + " " + c + " -o " + i).code == 0);
    CHECK(Json::parse(run("algebra empty " + i).out)["empty"] == true);
    CHECK(Json::parse(run("algebra empty " + a).out)["empty"] == false);

    auto members = Json::parse(run("algebra members --max-vertices 4 " + a).out);
    CHECK(members["count"] == 2);
    CHECK(run("algebra coherence --trials 200 " + a).code == 0);
    CHECK(Json::parse(run("algebra witness " + a).out)["witness"].is_object());

    auto first = run("algebra minimize " + a);
    std::ofstream(dir / "m.json") << first.out;
    CHECK(run("algebra minimize " + (dir / "m.json").string()).out == first.out);

    CHECK(run("algebra homfam 'p(+)'").code == 0);
    CHECK(run("algebra trees").code == 0);
    CHECK(run("algebra obstruction 'p(+)'").code == 0);
    CHECK(run("algebra union " + a + " " + c).code == 0);
}

TEST_CASE("dual commands")
{
    auto tree = Json::parse(run("dual tree 'p(++)'").out);
    REQUIRE(tree.contains("vertex_states"));
    auto d = structure_from_json(tree);
    CHECK(hom_equivalent(d, transitive_tournament(2)));
    CHECK(tree["vertex_states"].size() == static_cast<std::size_t>(d.vertex_count()));

    auto family = Json::parse(run("dual family " + fixture("finite/two_arcs.json")).out);
    CHECK(family["count"].get<int>() >= 1);
    CHECK(run("dual up 'p(+)'").code == 0);
}

TEST_CASE("input errors")
{
    auto r = run("struct core 'p(+x)'");
    CHECK(r.code == 2);
    CHECK(Json::parse(r.out)["error"] == "input");

    CHECK(run("struct hom 'p(+)'").code == 2);
    CHECK(run("verify duality /nonexistent/file.json").code == 2);
    CHECK(run("nosuchgroup").code == 2);
    CHECK(run("dual tree " + fixture("finite/two_arcs.json")).code == 2);

    auto bad = scratch() / "bad.json";
    std::ofstream(bad) << "{ not json";
    CHECK(run("struct core " + bad.string()).code == 2);
}
