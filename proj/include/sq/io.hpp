#pragma once

#include <string>

#include <json.hpp>

#include "sq/exact_solver.hpp"
#include "sq/hex_path.hpp"
#include "sq/witness.hpp"

namespace sq {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent input file.
class FormatError : public InvalidParameter {
public:
    using InvalidParameter::InvalidParameter;
};

// Graph: {"kind":"plain|hex|star|product", "n":..., "a":..., "vertices":[{"id":0,"label":...}],
// "edges":[[u,v],...]} with u < v. Hex labels are [a,b]; product labels ["t"|leaf,[a,b]].
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// Layout: {"kind":"stack|queue", "order":[...], "colors":{"u-v":c,...}}
Json layout_to_json(const Layout& layout);
Layout layout_from_json(const Json& j);

/// Accepts a bare array of ids or any object with an "order" array.
LinearOrder order_from_json(const Json& j);

// Colouring: {"n":N, "rows":[["R","B",...],...]}, row b-1 holds cells [1..n, b].
Json coloring_to_json(const GridColoring& coloring);
GridColoring coloring_from_json(const Json& j);

Json path_to_json(int n, const MonochromaticPath& path);
Json boundary_steps_to_json(int n, const std::vector<BoundaryStep>& steps);

Json verify_report_to_json(const VerifyReport& report);
Json solve_result_to_json(const SolveResult& result);

/// {"case":"I.1|I.2|II", "edges":..., "b":..., "selected":..., "lower_bound":...}
/// or {"case":"insufficient", ...}; with_trace adds the intermediate artefacts.
Json witness_to_json(const WitnessReport& report, int n, bool with_trace);

Json parameters_to_json(const ScaleParameters& params);

const char* to_string(LayoutKind kind);
const char* to_string(WitnessCase branch);

/// Graphviz export; edges coloured by layout colour from a fixed 8-colour
/// palette. The layout may be omitted by passing nullptr.
std::string to_dot(const Graph& g, const Layout* layout = nullptr);

/// Parses text as JSON, mapping syntax errors to FormatError.
Json parse_json(const std::string& text);

} // namespace sq
