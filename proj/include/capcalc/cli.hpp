#pragma once

// Command-line front end. Reports are built as ordered JSON trees and rendered
// either verbatim (--format json) or as indented text from the same tree, so
// both formats carry identical numbers.
//
// Exit codes: 0 success, 1 malformed input, 2 domain error.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "capcalc/lefschetz.hpp"
#include "capcalc/plumbing.hpp"

namespace capcalc::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitDomain = 2;

enum class Format { text, json };

/// Graph file schema:
///   {"vertices": [{"id": "v1", "genus": 0, "self_intersection": -1, "area": "3/2"}],
///    "edges": [["v1", "v2"], ...]}
/// Areas are optional exact rationals given as strings (integers also accepted).
plumbing::AugmentedGraph parse_graph(std::string_view text);
Json graph_to_json(const plumbing::AugmentedGraph& g);

/// {"g": int, "k": int, "exponents": [int], "cycles": [[int, ...], ...]}
lefschetz::MonodromyData parse_monodromy(std::string_view text);

Json integer_json(const Integer& z);
Json rational_json(const Rational& q);

std::string render_text(const Json& report);
void emit(const Json& report, Format format, std::ostream& out);

/// Analysis report for a graph (used by `analyze` and `example`).
Json analyze_report(const plumbing::AugmentedGraph& g, plumbing::GsMode mode);

int execute(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace capcalc::cli
