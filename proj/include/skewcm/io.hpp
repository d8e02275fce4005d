#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "skewcm/reduction.hpp"
#include "skewcm/sweep.hpp"
#include "skewcm/verify.hpp"

namespace skewcm::io {

using json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Text formats. Signs: first line n, then n rows of n entries from
// {1, +1, -1}. Graph: first line n, then one "i j" edge per line.
SignMatrix parse_signs_text(std::istream& in);
Graph parse_graph_text(std::istream& in);

// JSON formats: {"n": int, "entries": [[...], ...]} and
// {"n": int, "edges": [[i, j], ...]}.
SignMatrix parse_signs_json(const json& j);
Graph parse_graph_json(const json& j);

json to_json(const Graph& g);
json to_json(const Classification& c, bool unicode = false);
json to_json(const ReductionReport& rep);
json to_json(const OracleReport& rep);
json to_json(const AgreementReport& rep, int n, Variant variant, bool unicode = false);
json sweep_to_json(const SweepCounts& counts, const SweepOptions& opt);

// Inverse of to_json(Classification); used by the round-trip checks.
Classification parse_classification_json(const json& j);

std::string render_text(const Classification& c, bool unicode = false);
std::string render_text(const ReductionReport& rep);
std::string render_text(const OracleReport& rep);
std::string render_text(const AgreementReport& rep, int n, Variant variant);
std::string render_sweep_text(const SweepCounts& counts, const SweepOptions& opt);

} // namespace skewcm::io
