#include <forestdual/antichain.hh>
#include <forestdual/canonical.hh>
#include <forestdual/duality.hh>
#include <forestdual/errors.hh>
#include <forestdual/families.hh>
#include <forestdual/homomorphism.hh>
#include <forestdual/json_io.hh>
#include <forestdual/path_literal.hh>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace forestdual;

using std::optional;
using std::string;
using std::vector;

namespace
{
    struct Options
    {
        std::uint64_t seed = 0;
        int max_vertices = 4;
        int bound = 6;
        int margin = 2;
        int trials = 1000;
        int i = 1;
        int j = 1;
        string format = "json";
        string output;
        string signature;
        vector<string> inputs;
    };

    /// A member list together with duals, as shipped in the fixtures.
    struct Pair
    {
        vector<Structure> members;
        vector<Structure> duals;
    };

    struct Input
    {
        optional<Structure> structure;
        optional<ForestAlgebra> algebra;
        optional<Pair> pair;
    };

    auto structure_list(const Json & j, const char * key) -> vector<Structure>
    {
        vector<Structure> result;
        if (! j.contains(key))
            return result;
        if (! j.at(key).is_array())
            throw InputError(string(key) + " must be an array");
        for (auto & s : j.at(key))
            result.push_back(s.is_string() ? parse_path_literal(s.get<string>()) : structure_from_json(s));
        return result;
    }

    auto load_input(const string & arg, const Options & opt) -> Input
    {
        Input in;
        if (! std::filesystem::exists(arg)) {
            in.structure = parse_path_literal(arg);
            return in;
        }
        auto j = load_json_file(arg);
        if (j.is_object() && j.contains("combine")) {
            in.algebra = algebra_from_json(j);
            validate_user_algebra(*in.algebra, ValidationOptions{200, 5, opt.seed});
        }
        else if (j.is_object() && j.contains("members"))
            in.pair = Pair{structure_list(j, "members"), structure_list(j, "duals")};
        else if (j.is_object() && j.contains("vertex_count"))
            in.structure = structure_from_json(j);
        else
            throw InputError(arg + ": neither a structure, an algebra nor a member list");
        return in;
    }

    auto need(const Options & opt, std::size_t count) -> void
    {
        if (opt.inputs.size() < count)
            throw InputError("expected at least " + std::to_string(count) + " input(s)");
    }

    auto structure_arg(const Options & opt, std::size_t k) -> Structure
    {
        need(opt, k + 1);
        auto in = load_input(opt.inputs[k], opt);
        if (! in.structure)
            throw InputError(opt.inputs[k] + ": expected a structure");
        return *in.structure;
    }

    auto family_arg(const Options & opt, std::size_t k) -> ForestAlgebra
    {
        need(opt, k + 1);
        auto in = load_input(opt.inputs[k], opt);
        if (in.algebra)
            return *in.algebra;
        if (in.pair) {
            if (in.pair->members.empty())
                throw InputError(opt.inputs[k] + ": empty member list");
            return build_finite_family(in.pair->members[0].signature(), in.pair->members);
        }
        return build_finite_family(in.structure->signature(), {*in.structure});
    }

    /// Duals of a pair file at position 0 followed by every later structure argument.
    auto duals_arg(const Options & opt) -> vector<Structure>
    {
        need(opt, 1);
        vector<Structure> duals;
        auto first = load_input(opt.inputs[0], opt);
        if (first.pair)
            duals = first.pair->duals;
        for (std::size_t k = 1 ; k < opt.inputs.size() ; ++k)
            duals.push_back(structure_arg(opt, k));
        return duals;
    }

    auto members_of(const string & arg, const Options & opt) -> vector<Structure>
    {
        auto in = load_input(arg, opt);
        if (in.pair)
            return in.pair->members;
        if (in.structure)
            return {*in.structure};
        throw InputError(arg + ": expected a member list or a structure");
    }

    auto members_arg(const Options & opt) -> vector<Structure>
    {
        need(opt, 1);
        return members_of(opt.inputs[0], opt);
    }

    auto signature_arg(const Options & opt) -> Signature
    {
        if (opt.signature.empty())
            return Signature::digraph();
        return signature_from_json(load_json_file(opt.signature));
    }

    auto structure_json(const Structure & s) -> Json
    {
        auto j = to_json(s);
        if (auto w = path_word_of(s))
            j["path_literal"] = "p(" + *w + ")";
        return j;
    }

    auto structure_text(const Structure & s) -> string
    {
        if (auto w = path_word_of(s))
            return "p(" + *w + ")";
        return compact_text(s);
    }

    struct Result
    {
        Json json;
        string text;
        int exit_code = 0;
    };

    auto report_result(const VerificationReport & report) -> Result
    {
        std::ostringstream text;
        text << (report.passed() ? "passed" : "FAILED") << ": " << report.checked << " structures checked, bound "
             << report.bound << ", " << report.failures.size() << " failure(s)\n";
        for (auto & f : report.failures)
            text << "  " << structure_text(f.structure) << ": " << f.direction << "\n";
        return Result{to_json(report), text.str(), report.passed() ? 0 : 1};
    }

    auto structure_result(const Structure & s) -> Result
    {
        return Result{structure_json(s), structure_text(s) + "\n", 0};
    }

    auto algebra_result(const ForestAlgebra & alg) -> Result
    {
        std::ostringstream text;
        text << alg.size() << " states, " << std::count(alg.terminal.begin(), alg.terminal.end(), true)
             << " terminal, empty " << (alg.empty_in_family ? "in" : "not in") << " family: " << alg.provenance << "\n";
        return Result{to_json(alg), text.str(), 0};
    }

    auto list_result(const vector<Structure> & xs) -> Result
    {
        Json list = Json::array();
        string text;
        for (auto & x : xs) {
            list.push_back(structure_json(x));
            text += structure_text(x) + "\n";
        }
        return Result{Json{{"count", xs.size()}, {"structures", list}}, text, 0};
    }

    auto run_struct(const string & cmd, const Options & opt) -> Result
    {
        if (cmd == "hom") {
            auto a = structure_arg(opt, 0), b = structure_arg(opt, 1);
            auto h = find_hom_map(a, b);
            Json j{{"exists", h.has_value()}};
            j["map"] = h ? Json(*h) : Json(nullptr);
            if (h)
                j["retraction"] = is_retraction(a, b, *h);
            return Result{j, h ? "hom exists\n" : "no hom\n", 0};
        }
        if (cmd == "core")
            return structure_result(core(structure_arg(opt, 0)));
        if (cmd == "iscore") {
            bool c = is_core(structure_arg(opt, 0));
            return Result{Json{{"is_core", c}}, c ? "core\n" : "not a core\n", 0};
        }
        if (cmd == "product")
            return structure_result(direct_product(structure_arg(opt, 0), structure_arg(opt, 1)));
        if (cmd == "union")
            return structure_result(disjoint_union(structure_arg(opt, 0), structure_arg(opt, 1)));
        if (cmd == "components") {
            vector<Structure> parts;
            for (auto & c : components(structure_arg(opt, 0)))
                parts.push_back(c.part);
            return list_result(parts);
        }
        if (cmd == "isforest") {
            auto s = structure_arg(opt, 0);
            bool f = is_forest(s), t = is_tree(s);
            return Result{Json{{"is_forest", f}, {"is_tree", t}}, string(t ? "tree" : f ? "forest" : "not a forest") + "\n", 0};
        }
        throw InputError("unknown struct command " + cmd);
    }

    auto run_algebra(const string & cmd, const Options & opt) -> Result
    {
        if (cmd == "homfam")
            return algebra_result(build_hom_family(structure_arg(opt, 0)));
        if (cmd == "obstruction") {
            vector<Structure> ds;
            for (std::size_t k = 0 ; k < opt.inputs.size() ; ++k)
                ds.push_back(structure_arg(opt, k));
            return algebra_result(build_obstruction_family(ds.empty() ? signature_arg(opt) : ds[0].signature(), ds));
        }
        if (cmd == "trees")
            return algebra_result(build_trees_family(signature_arg(opt)));
        if (cmd == "finite") {
            vector<Structure> ms;
            for (auto & arg : opt.inputs)
                for (auto & m : members_of(arg, opt))
                    ms.push_back(m);
            return algebra_result(build_finite_family(ms.empty() ? signature_arg(opt) : ms[0].signature(), ms));
        }
        if (cmd == "union")
            return algebra_result(family_union(family_arg(opt, 0), family_arg(opt, 1)));
        if (cmd == "intersect")
            return algebra_result(family_intersection(family_arg(opt, 0), family_arg(opt, 1)));
        if (cmd == "complement")
            return algebra_result(family_complement(family_arg(opt, 0)));
        if (cmd == "minimize")
            return algebra_result(minimize(family_arg(opt, 0)));
        if (cmd == "empty" || cmd == "witness") {
            auto alg = family_arg(opt, 0);
            auto w = find_witness(alg);
            Json j = Json::object();
            if (cmd == "empty")
                j["empty"] = ! w;
            j["witness"] = w ? structure_json(*w) : Json(nullptr);
            return Result{j, w ? "member: " + structure_text(*w) + "\n" : "empty\n", 0};
        }
        if (cmd == "members") {
            auto r = list_result(enumerate_members(family_arg(opt, 0), opt.max_vertices));
            r.json["max_vertices"] = opt.max_vertices;
            return r;
        }
        if (cmd == "coherence") {
            auto report = check_coherence(family_arg(opt, 0), opt.trials, opt.max_vertices, opt.seed);
            auto text = string(report.passed ? "coherent" : "INCOHERENT") + " over " + std::to_string(report.trials) + " trials\n";
            return Result{to_json(report), text, report.passed ? 0 : 1};
        }
        throw InputError("unknown algebra command " + cmd);
    }

    auto run_dual(const string & cmd, const Options & opt) -> Result
    {
        if (cmd == "tree") {
            auto dual = tree_dual(family_arg(opt, 0));
            return Result{to_json(dual), compact_text(dual.structure) + "\n", 0};
        }
        if (cmd == "family") {
            auto duals = forest_dual_family(family_arg(opt, 0));
            return list_result(duals);
        }
        if (cmd == "up")
            return algebra_result(up_closure(family_arg(opt, 0)));
        throw InputError("unknown dual command " + cmd);
    }

    auto is_list_input(const Options & opt) -> bool
    {
        need(opt, 1);
        return load_input(opt.inputs[0], opt).pair.has_value();
    }

    auto run_verify(const string & cmd, const Options & opt) -> Result
    {
        if (cmd == "duality") {
            auto duals = duals_arg(opt);
            return report_result(verify_duality(family_arg(opt, 0), duals, opt.max_vertices));
        }
        if (cmd == "splitting") {
            auto duals = duals_arg(opt);
            return report_result(check_splitting(family_arg(opt, 0), duals, opt.max_vertices));
        }
        if (cmd == "minimals") {
            if (! is_list_input(opt))
                throw InputError("verify minimals needs a member list");
            return report_result(check_minimals_are_forests(members_arg(opt), duals_arg(opt), opt.max_vertices));
        }
        if (cmd == "upex") {
            auto result = cores_of_minimals_bounded(family_arg(opt, 0), opt.bound, opt.margin);
            bool ok = result.agree;
            for (auto & s : result.route_a)
                ok = ok && is_core(s) && is_forest(s);
            auto j = to_json(result);
            j["passed"] = ok;
            string text = string(ok ? "passed" : "FAILED") + ": route A " + std::to_string(result.route_a.size())
                        + ", route B " + std::to_string(result.route_b.size()) + "\n";
            for (auto & s : result.route_a)
                text += "  " + structure_text(s) + "\n";
            return Result{j, text, ok ? 0 : 1};
        }
        throw InputError("unknown verify command " + cmd);
    }

    auto run_fixtures(const string & cmd, const Options & opt) -> Result
    {
        if (cmd == "paths")
            return structure_result(parse_path_literal(p_ij_word(opt.i, opt.j)));
        throw InputError("unknown fixtures command " + cmd);
    }

    auto diagnostic(const string & kind, const string & message) -> int
    {
        std::cout << dump_json(Json{{"error", kind}, {"message", message}});
        return 2;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Regular forest families, homomorphism duals and antichain checks"};
    app.require_subcommand(1);
    Options opt;

    app.add_option("--seed", opt.seed, "Random seed");
    app.add_option("--max-vertices", opt.max_vertices, "Vertex bound for exhaustive sweeps");
    app.add_option("--bound", opt.bound, "Bound for oracle routes");
    app.add_option("--margin", opt.margin, "Extra vertices for the non-retraction search");
    app.add_option("--trials", opt.trials, "Coherence trials");
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("-o,--output", opt.output, "Write output to this file");
    app.add_option("--signature", opt.signature, "Signature JSON file, digraph by default");

    const vector<std::pair<string, vector<string>>> groups{
        {"struct", {"hom", "core", "iscore", "product", "union", "components", "isforest"}},
        {"algebra", {"homfam", "obstruction", "trees", "finite", "union", "intersect", "complement",
                     "minimize", "empty", "witness", "members", "coherence"}},
        {"dual", {"tree", "family", "up"}},
        {"verify", {"duality", "splitting", "minimals", "upex"}},
        {"fixtures", {"paths"}}};

    string group, command;
    for (auto & [name, commands] : groups) {
        auto * g = app.add_subcommand(name)->require_subcommand(1)->fallthrough();
        for (auto & c : commands) {
            auto * sub = g->add_subcommand(c)->fallthrough();
            sub->add_option("inputs", opt.inputs, "Structure or algebra JSON files, or path literals");
            if (name == "fixtures") {
                sub->add_option("--i", opt.i, "Left exponent")->required();
                sub->add_option("--j", opt.j, "Right exponent")->required();
            }
            sub->callback([&, name = name, c = c] { group = name; command = c; });
        }
    }

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        return diagnostic("usage", e.what());
    }

    Result result;
    try {
        if (group == "struct")
            result = run_struct(command, opt);
        else if (group == "algebra")
            result = run_algebra(command, opt);
        else if (group == "dual")
            result = run_dual(command, opt);
        else if (group == "verify")
            result = run_verify(command, opt);
        else
            result = run_fixtures(command, opt);
    }
    catch (const InputError & e) {
        return diagnostic("input", e.what());
    }
    catch (const TooLarge & e) {
        return diagnostic("too_large", e.what());
    }
    catch (const nlohmann::json::exception & e) {
        return diagnostic("input", e.what());
    }

    string out = opt.format == "text" ? result.text : dump_json(result.json);
    if (opt.output.empty())
        std::cout << out;
    else {
        std::ofstream file(opt.output);
        if (! file)
            return diagnostic("input", "cannot write " + opt.output);
        file << out;
    }
    return result.exit_code;
}
