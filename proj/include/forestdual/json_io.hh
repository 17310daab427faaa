#ifndef FORESTDUAL_JSON_IO_HH
#define FORESTDUAL_JSON_IO_HH 1

#include <forestdual/antichain.hh>
#include <forestdual/duality.hh>
#include <forestdual/forest_algebra.hh>
#include <forestdual/report.hh>

#include <json.hpp>

#include <string>

namespace forestdual
{
    using Json = nlohmann::ordered_json;

    /// {"relations": [{"name": "E", "arity": 2}]}
    auto to_json(const Signature & signature) -> Json;
    auto signature_from_json(const Json & j) -> Signature;

    /// {"signature": ..., "vertex_count": n, "relations": {"E": [[0, 1]]}}.
    /// Relations missing from "relations" are empty.
    auto to_json(const Structure & s) -> Json;
    auto structure_from_json(const Json & j) -> Structure;

    /// States, init, terminals, empty flag, combine as a matrix, nu, and mu
    /// as relation -> position ("1".."r") -> nested arrays over state order.
    auto to_json(const ForestAlgebra & alg) -> Json;
    auto algebra_from_json(const Json & j) -> ForestAlgebra;

    auto to_json(const VerificationReport & report) -> Json;
    auto to_json(const CoherenceReport & report) -> Json;
    auto to_json(const TreeDual & dual) -> Json;
    auto to_json(const CoresOfMinimals & result) -> Json;
    auto to_json(const Context & context, const ForestAlgebra & alg) -> Json;

    /// Two-space indentation and a trailing newline.
    auto dump_json(const Json & j) -> std::string;

    /// Throws InputError when the file is missing or not JSON.
    auto load_json_file(const std::string & path) -> Json;
}

#endif
