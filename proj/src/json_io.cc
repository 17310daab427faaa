#include <forestdual/json_io.hh>
#include <forestdual/errors.hh>

#include <fstream>
#include <sstream>

using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace forestdual
{
    namespace
    {
        auto require(const Json & j, const char * key) -> const Json &
        {
            if (! j.is_object() || ! j.contains(key))
                throw InputError(string("missing field \"") + key + "\"");
            return j.at(key);
        }

        auto as_int(const Json & j, const string & what) -> int
        {
            if (! j.is_number_integer())
                throw InputError(what + " must be an integer");
            return j.get<int>();
        }

        auto state_index(const Json & j, const ForestAlgebra & alg, const string & what) -> int
        {
            int s = as_int(j, what);
            if (s < 0 || s >= alg.size())
                throw InputError(what + " is out of range");
            return s;
        }

        auto nested_mu(const ForestAlgebra & alg, size_t r, int p, vector<int> & prefix) -> Json
        {
            Json level = Json::array();
            int arity = alg.signature.arity(r);
            for (int s = 0 ; s < alg.size() ; ++s) {
                prefix.push_back(s);
                if (static_cast<int>(prefix.size()) == arity)
                    level.push_back(alg.mu_of(r, p, prefix));
                else
                    level.push_back(nested_mu(alg, r, p, prefix));
                prefix.pop_back();
            }
            return level;
        }

        auto read_nested_mu(const Json & j, ForestAlgebra & alg, size_t r, int p, vector<int> & prefix, const string & what) -> void
        {
            if (! j.is_array() || static_cast<int>(j.size()) != alg.size())
                throw InputError(what + " must have one entry per state at every level");
            int arity = alg.signature.arity(r);
            for (int s = 0 ; s < alg.size() ; ++s) {
                prefix.push_back(s);
                if (static_cast<int>(prefix.size()) == arity)
                    alg.mu[r][p][alg.mu_index(prefix)] = state_index(j[s], alg, what);
                else
                    read_nested_mu(j[s], alg, r, p, prefix, what);
                prefix.pop_back();
            }
        }

        auto state_names(const ForestAlgebra & alg, const vector<int> & states) -> Json
        {
            Json names = Json::array();
            for (int s : states)
                names.push_back(alg.states[s]);
            return names;
        }

        auto map_json(const VertexMap & m) -> Json
        {
            Json a = Json::array();
            for (int x : m)
                a.push_back(x);
            return a;
        }
    }

    auto to_json(const Signature & signature) -> Json
    {
        Json rels = Json::array();
        for (auto & r : signature.relations())
            rels.push_back(Json{{"name", r.name}, {"arity", r.arity}});
        return Json{{"relations", rels}};
    }

    auto signature_from_json(const Json & j) -> Signature
    {
        auto & rels = require(j, "relations");
        if (! rels.is_array())
            throw InputError("signature relations must be an array");
        vector<Relation> relations;
        for (auto & r : rels) {
            auto & name = require(r, "name");
            if (! name.is_string())
                throw InputError("relation name must be a string");
            relations.push_back(Relation{name.get<string>(), as_int(require(r, "arity"), "arity")});
        }
        return Signature{std::move(relations)};
    }

    auto to_json(const Structure & s) -> Json
    {
        Json rels = Json::object();
        for (size_t r = 0 ; r < s.signature().size() ; ++r) {
            Json tuples = Json::array();
            for (auto & t : s.tuples(r))
                tuples.push_back(map_json(t));
            rels[s.signature()[r].name] = tuples;
        }
        return Json{{"signature", to_json(s.signature())}, {"vertex_count", s.vertex_count()}, {"relations", rels}};
    }

    auto structure_from_json(const Json & j) -> Structure
    {
        auto signature = signature_from_json(require(j, "signature"));
        int n = as_int(require(j, "vertex_count"), "vertex_count");
        if (n < 0)
            throw InputError("vertex_count must be nonnegative");
        vector<vector<Tuple>> tuples(signature.size());
        if (j.contains("relations")) {
            auto & rels = j.at("relations");
            if (! rels.is_object())
                throw InputError("structure relations must be an object");
            for (auto & [name, list] : rels.items()) {
                auto r = signature.index_of(name);
                if (! r)
                    throw InputError("relation \"" + name + "\" is not in the signature");
                if (! list.is_array())
                    throw InputError("tuples of \"" + name + "\" must be an array");
                for (auto & t : list) {
                    if (! t.is_array())
                        throw InputError("a tuple must be an array");
                    Tuple u;
                    for (auto & x : t)
                        u.push_back(as_int(x, "vertex id"));
                    tuples[*r].push_back(std::move(u));
                }
            }
        }
        return Structure{signature, n, std::move(tuples)};
    }

    auto to_json(const ForestAlgebra & alg) -> Json
    {
        int n = alg.size();
        Json combine = Json::array();
        for (int a = 0 ; a < n ; ++a) {
            Json row = Json::array();
            for (int b = 0 ; b < n ; ++b)
                row.push_back(alg.combine_of(a, b));
            combine.push_back(row);
        }
        Json terminals = Json::array();
        for (int s = 0 ; s < n ; ++s)
            if (alg.terminal[s])
                terminals.push_back(s);
        Json mu = Json::object();
        for (size_t r = 0 ; r < alg.signature.size() ; ++r) {
            Json per = Json::object();
            for (int p = 0 ; p < alg.signature.arity(r) ; ++p) {
                vector<int> prefix;
                per[to_string(p + 1)] = nested_mu(alg, r, p, prefix);
            }
            mu[alg.signature[r].name] = per;
        }
        return Json{
            {"signature", to_json(alg.signature)},
            {"states", alg.states},
            {"init", alg.init},
            {"terminals", terminals},
            {"empty_in_family", alg.empty_in_family},
            {"combine", combine},
            {"nu", alg.nu},
            {"mu", mu},
            {"provenance", alg.provenance}};
    }

    auto algebra_from_json(const Json & j) -> ForestAlgebra
    {
        auto signature = signature_from_json(require(j, "signature"));
        auto & states = require(j, "states");
        if (! states.is_array() || states.empty())
            throw InputError("states must be a nonempty array");
        ForestAlgebra alg{signature, static_cast<int>(states.size())};
        int n = alg.size();
        for (int s = 0 ; s < n ; ++s) {
            if (! states[s].is_string())
                throw InputError("state names must be strings");
            alg.states[s] = states[s].get<string>();
        }
        alg.init = state_index(require(j, "init"), alg, "init");
        auto & terminals = require(j, "terminals");
        if (! terminals.is_array())
            throw InputError("terminals must be an array");
        for (auto & t : terminals)
            alg.terminal[state_index(t, alg, "terminal")] = true;
        auto & empty = require(j, "empty_in_family");
        if (! empty.is_boolean())
            throw InputError("empty_in_family must be a boolean");
        alg.empty_in_family = empty.get<bool>();

        auto & combine = require(j, "combine");
        if (! combine.is_array() || static_cast<int>(combine.size()) != n)
            throw InputError("combine must be an n by n matrix");
        for (int a = 0 ; a < n ; ++a) {
            if (! combine[a].is_array() || static_cast<int>(combine[a].size()) != n)
                throw InputError("combine must be an n by n matrix");
            for (int b = 0 ; b < n ; ++b)
                alg.combine[static_cast<size_t>(a) * n + b] = state_index(combine[a][b], alg, "combine entry");
        }
        auto & nu = require(j, "nu");
        if (! nu.is_array() || static_cast<int>(nu.size()) != n)
            throw InputError("nu must have one entry per state");
        for (int s = 0 ; s < n ; ++s)
            alg.nu[s] = state_index(nu[s], alg, "nu entry");

        auto & mu = require(j, "mu");
        for (size_t r = 0 ; r < signature.size() ; ++r) {
            auto & name = signature[r].name;
            if (! mu.is_object() || ! mu.contains(name))
                throw InputError("mu is missing relation \"" + name + "\"");
            for (int p = 0 ; p < signature.arity(r) ; ++p) {
                auto key = to_string(p + 1);
                if (! mu.at(name).is_object() || ! mu.at(name).contains(key))
                    throw InputError("mu of \"" + name + "\" is missing position " + key);
                vector<int> prefix;
                read_nested_mu(mu.at(name).at(key), alg, r, p, prefix, "mu entry of \"" + name + "\"");
            }
        }
        if (j.contains("provenance") && j.at("provenance").is_string())
            alg.provenance = j.at("provenance").get<string>();
        return alg;
    }

    auto to_json(const VerificationReport & report) -> Json
    {
        Json failures = Json::array();
        for (auto & f : report.failures) {
            Json witness = Json::object();
            if (f.obstruction) {
                witness["member"] = to_json(*f.obstruction);
                if (f.obstruction_hom)
                    witness["member_hom"] = map_json(*f.obstruction_hom);
            }
            if (f.dual_index >= 0) {
                witness["dual_index"] = f.dual_index;
                if (f.dual_hom)
                    witness["dual_hom"] = map_json(*f.dual_hom);
            }
            if (! f.note.empty())
                witness["note"] = f.note;
            failures.push_back(Json{{"structure", to_json(f.structure)}, {"direction", f.direction}, {"witness", witness}});
        }
        return Json{
            {"bound", report.bound},
            {"structures_checked", report.checked},
            {"method", report.method},
            {"passed", report.passed()},
            {"failures", failures}};
    }

    auto to_json(const CoherenceReport & report) -> Json
    {
        Json j{{"passed", report.passed}, {"trials", report.trials}};
        if (report.counterexample) {
            j["counterexample"] = to_json(*report.counterexample);
            j["root"] = report.root;
        }
        if (! report.detail.empty())
            j["detail"] = report.detail;
        return j;
    }

    auto to_json(const TreeDual & dual) -> Json
    {
        Json j = to_json(dual.structure);
        Json annotations = Json::array();
        for (auto & v : dual.vertex_states)
            annotations.push_back(state_names(dual.algebra, v));
        j["vertex_states"] = annotations;
        return j;
    }

    auto to_json(const CoresOfMinimals & result) -> Json
    {
        Json a = Json::array(), b = Json::array();
        for (auto & s : result.route_a)
            a.push_back(to_json(s));
        for (auto & s : result.route_b)
            b.push_back(to_json(s));
        return Json{
            {"bound", result.bound},
            {"margin", result.margin},
            {"agree", result.agree},
            {"caveat", result.caveat},
            {"route_a", a},
            {"route_b", b}};
    }

    auto to_json(const Context & context, const ForestAlgebra & alg) -> Json
    {
        Json steps = Json::array();
        for (auto & step : context) {
            Json s = Json::object();
            switch (step.kind) {
                case ContextStep::Kind::combine:
                    s["op"] = "combine";
                    s["side"] = step.position == 0 ? "left" : "right";
                    break;
                case ContextStep::Kind::nu:
                    s["op"] = "nu";
                    break;
                case ContextStep::Kind::mu:
                    s["op"] = "mu";
                    s["relation"] = alg.signature[step.relation].name;
                    s["position"] = step.position + 1;
                    s["output"] = step.output + 1;
                    break;
            }
            if (step.kind != ContextStep::Kind::nu)
                s["others"] = state_names(alg, step.others);
            steps.push_back(s);
        }
        return steps;
    }

    auto dump_json(const Json & j) -> string
    {
        return j.dump(2) + "\n";
    }

    auto load_json_file(const string & path) -> Json
    {
        std::ifstream in(path);
        if (! in)
            throw InputError("cannot read " + path);
        std::stringstream text;
        text << in.rdbuf();
        try {
            return Json::parse(text.str());
        }
        catch (const nlohmann::json::parse_error & e) {
            throw InputError(path + ": " + e.what());
        }
    }
}
