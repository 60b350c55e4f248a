#include "sq/io.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace sq {

namespace {

Json coord_json(GridCoord p) { return Json::array({p.a, p.b}); }

Json coords_json(int n, const std::vector<VertexId>& ids)
{
    Json arr = Json::array();
    for (VertexId v : ids)
        arr.push_back(coord_json(hex_coord(n, v)));
    return arr;
}

Json edges_json(const std::vector<Edge>& edges)
{
    Json arr = Json::array();
    for (const Edge& e : edges)
        arr.push_back(Json::array({e.u, e.v}));
    return arr;
}

GridCoord coord_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw FormatError("grid label must be [a,b]");
    return {j[0].get<int>(), j[1].get<int>()};
}

const char* kind_name(GraphKind k)
{
    switch (k) {
    case GraphKind::hex:
        return "hex";
    case GraphKind::star:
        return "star";
    case GraphKind::product:
        return "product";
    case GraphKind::plain:
        break;
    }
    return "plain";
}

GraphKind kind_from_name(const std::string& s)
{
    if (s == "plain")
        return GraphKind::plain;
    if (s == "hex")
        return GraphKind::hex;
    if (s == "star")
        return GraphKind::star;
    if (s == "product")
        return GraphKind::product;
    throw FormatError("unknown graph kind '" + s + "'");
}

const Json& field(const Json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name))
        throw FormatError(std::string("missing field '") + name + "'");
    return j.at(name);
}

int int_field(const Json& j, const char* name)
{
    const Json& f = field(j, name);
    if (!f.is_number_integer())
        throw FormatError(std::string("field '") + name + "' must be an integer");
    return f.get<int>();
}

std::string edge_key(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

Edge edge_from_key(const std::string& key)
{
    const auto dash = key.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == key.size())
        throw FormatError("bad edge key '" + key + "'");
    try {
        std::size_t used_u = 0;
        std::size_t used_v = 0;
        const int u = std::stoi(key.substr(0, dash), &used_u);
        const int v = std::stoi(key.substr(dash + 1), &used_v);
        if (used_u != dash || used_v != key.size() - dash - 1 || u >= v || u < 0)
            throw FormatError("bad edge key '" + key + "'");
        return Edge(u, v);
    } catch (const std::logic_error&) {
        throw FormatError("bad edge key '" + key + "'");
    }
}

const char* color_letter(Color c) { return c == Color::red ? "R" : "B"; }

} // namespace

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("JSON parse error: ") + e.what());
    }
}

Json graph_to_json(const Graph& g)
{
    Json j;
    j["kind"] = kind_name(g.kind());
    if (g.kind() == GraphKind::hex || g.kind() == GraphKind::product)
        j["n"] = g.param_n();
    if (g.kind() == GraphKind::star || g.kind() == GraphKind::product)
        j["a"] = g.param_a();
    Json vertices = Json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        Json label;
        std::visit(
            [&](const auto& l) {
                using L = std::decay_t<decltype(l)>;
                if constexpr (std::is_same_v<L, int>)
                    label = l;
                else if constexpr (std::is_same_v<L, GridCoord>)
                    label = coord_json(l);
                else
                    label = Json::array({l.is_root() ? Json("t") : Json(l.star_part), coord_json(l.grid)});
            },
            g.label(v));
        vertices.push_back(Json{{"id", v}, {"label", label}});
    }
    j["vertices"] = std::move(vertices);
    j["edges"] = edges_json(g.edges());
    return j;
}

Graph graph_from_json(const Json& j)
{
    const Json& kind_field = field(j, "kind");
    if (!kind_field.is_string())
        throw FormatError("field 'kind' must be a string");
    const GraphKind kind = kind_from_name(kind_field.get<std::string>());
    const int n = (kind == GraphKind::hex || kind == GraphKind::product) ? int_field(j, "n") : 0;
    const int a = (kind == GraphKind::star || kind == GraphKind::product) ? int_field(j, "a") : 0;

    const Json& vs = field(j, "vertices");
    if (!vs.is_array())
        throw FormatError("'vertices' must be an array");
    const int count = static_cast<int>(vs.size());
    std::vector<VertexLabel> labels(count);
    std::vector<char> seen(count, 0);
    for (const Json& v : vs) {
        const int id = int_field(v, "id");
        if (id < 0 || id >= count || seen[id])
            throw FormatError("vertex ids must be a permutation of 0..|V|-1");
        seen[id] = 1;
        const Json& l = field(v, "label");
        switch (kind) {
        case GraphKind::plain:
        case GraphKind::star:
            if (!l.is_number_integer())
                throw FormatError("plain labels must be integers");
            labels[id] = l.get<int>();
            break;
        case GraphKind::hex:
            labels[id] = coord_from_json(l);
            break;
        case GraphKind::product: {
            if (!l.is_array() || l.size() != 2)
                throw FormatError("product label must be [star, [a,b]]");
            ProductVertex pv;
            if (l[0].is_string() && l[0].get<std::string>() == "t")
                pv.star_part = ProductVertex::root;
            else if (l[0].is_number_integer() && l[0].get<int>() >= 1)
                pv.star_part = l[0].get<int>();
            else
                throw FormatError("product star part must be \"t\" or a leaf index");
            pv.grid = coord_from_json(l[1]);
            labels[id] = pv;
            break;
        }
        }
    }

    const Json& es = field(j, "edges");
    if (!es.is_array())
        throw FormatError("'edges' must be an array");
    std::vector<Edge> edges;
    for (const Json& e : es) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw FormatError("edges must be [u,v] integer pairs");
        const int u = e[0].get<int>();
        const int v = e[1].get<int>();
        if (u >= v)
            throw FormatError("edge [" + std::to_string(u) + "," + std::to_string(v) +
                              "] must have u < v");
        edges.emplace_back(u, v);
    }
    try {
        return Graph::from_edges(count, std::move(edges), std::move(labels), kind, a, n);
    } catch (const FormatError&) {
        throw;
    } catch (const InvalidParameter& e) {
        throw FormatError(e.what());
    }
}

const char* to_string(LayoutKind kind) { return kind == LayoutKind::stack ? "stack" : "queue"; }

const char* to_string(WitnessCase branch)
{
    switch (branch) {
    case WitnessCase::separated_I_sub1:
        return "I.1";
    case WitnessCase::separated_I_sub2:
        return "I.2";
    case WitnessCase::crossing_II:
        break;
    }
    return "II";
}

Json layout_to_json(const Layout& layout)
{
    Json j;
    j["kind"] = to_string(layout.kind);
    j["order"] = layout.order.sequence();
    Json colors = Json::object();
    for (const auto& [e, c] : layout.coloring.colors)
        colors[edge_key(e)] = c;
    j["colors"] = std::move(colors);
    return j;
}

LinearOrder order_from_json(const Json& j)
{
    const Json& arr = j.is_array() ? j : field(j, "order");
    if (!arr.is_array())
        throw FormatError("'order' must be an array");
    std::vector<VertexId> seq;
    for (const Json& v : arr) {
        if (!v.is_number_integer())
            throw FormatError("order entries must be integers");
        seq.push_back(v.get<VertexId>());
    }
    try {
        return LinearOrder(std::move(seq));
    } catch (const InvalidParameter& e) {
        throw FormatError(e.what());
    }
}

Layout layout_from_json(const Json& j)
{
    Layout layout;
    const Json& kind = field(j, "kind");
    if (kind == "stack")
        layout.kind = LayoutKind::stack;
    else if (kind == "queue")
        layout.kind = LayoutKind::queue;
    else
        throw FormatError("layout kind must be \"stack\" or \"queue\"");
    layout.order = order_from_json(j);
    const Json& colors = field(j, "colors");
    if (!colors.is_object())
        throw FormatError("'colors' must be an object");
    for (const auto& [key, value] : colors.items()) {
        if (!value.is_number_integer() || value.get<int>() < 0)
            throw FormatError("colour of " + key + " must be a nonnegative integer");
        layout.coloring.colors[edge_from_key(key)] = value.get<int>();
        layout.coloring.k = std::max(layout.coloring.k, value.get<int>() + 1);
    }
    return layout;
}

Json coloring_to_json(const GridColoring& coloring)
{
    const int n = coloring.n();
    Json rows = Json::array();
    for (int b = 1; b <= n; ++b) {
        Json row = Json::array();
        for (int a = 1; a <= n; ++a)
            row.push_back(color_letter(coloring.at(GridCoord{a, b})));
        rows.push_back(std::move(row));
    }
    return Json{{"n", n}, {"rows", std::move(rows)}};
}

GridColoring coloring_from_json(const Json& j)
{
    const int n = int_field(j, "n");
    if (n < 1)
        throw FormatError("colouring needs n >= 1");
    const Json& rows = field(j, "rows");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw FormatError("'rows' must hold n rows");
    std::vector<Color> cells(static_cast<std::size_t>(n) * n);
    for (int b = 1; b <= n; ++b) {
        const Json& row = rows[b - 1];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw FormatError("row " + std::to_string(b) + " must hold n cells");
        for (int a = 1; a <= n; ++a) {
            const Json& cell = row[a - 1];
            if (cell == "R")
                cells[hex_id(n, {a, b})] = Color::red;
            else if (cell == "B")
                cells[hex_id(n, {a, b})] = Color::blue;
            else
                throw FormatError("cells must be \"R\" or \"B\"");
        }
    }
    return GridColoring(n, std::move(cells));
}

Json path_to_json(int n, const MonochromaticPath& path)
{
    return Json{{"n", n},
                {"color", color_letter(path.color)},
                {"length", path.vertices.size()},
                {"path", coords_json(n, path.vertices)}};
}

Json boundary_steps_to_json(int n, const std::vector<BoundaryStep>& steps)
{
    Json arr = Json::array();
    for (const BoundaryStep& s : steps)
        arr.push_back(Json{{"color", color_letter(s.color)},
                           {"component", coords_json(n, s.component)},
                           {"far_boundary", coords_json(n, s.far_boundary)}});
    return arr;
}

Json verify_report_to_json(const VerifyReport& report)
{
    Json violations = Json::array();
    for (const auto& [e, f] : report.violations)
        violations.push_back(Json::array({Json::array({e.u, e.v}), Json::array({f.u, f.v})}));
    return Json{{"valid", report.valid},
                {"violation_count", report.violations.size()},
                {"violations", std::move(violations)}};
}

Json solve_result_to_json(const SolveResult& result)
{
    return Json{{"kind", to_string(result.layout.kind)},
                {"k", result.k},
                {"exact", result.exact},
                {"lower_bound", result.lower_bound},
                {"orders_examined", result.orders_examined},
                {"layout", layout_to_json(result.layout)}};
}

namespace {

const char* pair_class_name(PairClass c)
{
    switch (c) {
    case PairClass::separated_lt:
        return "<";
    case PairClass::separated_gt:
        return ">";
    case PairClass::crossing:
        return "x";
    case PairClass::neither:
        break;
    }
    return "-";
}

} // namespace

Json witness_to_json(const WitnessReport& report, int n, bool with_trace)
{
    Json j;
    if (report.outcome == WitnessOutcome::insufficient_scale) {
        j["case"] = "insufficient";
        j["b"] = report.family_size_b;
        j["longest_chain"] = report.longest_chain;
        j["largest_antichain"] = report.largest_antichain;
    } else {
        j["case"] = to_string(report.branch);
        j["edges"] = edges_json(report.edges);
        j["b"] = report.family_size_b;
        j["selected"] = report.chain_or_antichain_size;
        j["lower_bound"] = report.lower_bound;
    }
    if (with_trace) {
        const WitnessTrace& t = report.trace;
        Json directions = Json::array();
        for (Direction d : t.family.directions)
            directions.push_back(d == Direction::increasing ? "increasing" : "decreasing");
        Json classification = Json::array();
        for (const auto& row : t.classification) {
            std::string line;
            for (PairClass c : row)
                line += pair_class_name(c);
            classification.push_back(line);
        }
        j["trace"] = Json{{"leaf_family",
                           Json{{"leaves", t.family.leaves},
                                {"directions", std::move(directions)},
                                {"step_sizes", t.family.step_sizes}}},
                          {"grid_coloring", coloring_to_json(t.grid_coloring)},
                          {"q_color", color_letter(t.path_color)},
                          {"q", coords_json(n, t.q)},
                          {"oriented_leaves", t.oriented_leaves},
                          {"classification", std::move(classification)},
                          {"selected", t.selected}};
    }
    return j;
}

Json parameters_to_json(const ScaleParameters& p)
{
    // Big naturals are emitted as decimal strings.
    return Json{{"s", p.s},
                {"n", p.n},
                {"c", p.c},
                {"d", p.d},
                {"m", p.m.str()},
                {"b_bound", p.b_bound.str()},
                {"a_bound", Json{{"base", p.a_base.str()}, {"exponent", p.a_exponent.str()}}},
                {"a_digits", p.a_digits.str()}};
}

std::string to_dot(const Graph& g, const Layout* layout)
{
    static constexpr std::array<const char*, 8> palette = {
        "black", "blue", "green", "red", "orange", "purple", "brown", "cyan"};
    std::ostringstream out;
    out << "graph G {\n";
    const std::vector<VertexId> seq =
        layout ? layout->order.sequence() : all_vertices(g);
    for (std::size_t i = 0; i < seq.size(); ++i)
        out << "  " << seq[i] << " [pos=\"" << i << ",0!\"];\n";
    for (const Edge& e : g.edges()) {
        out << "  " << e.u << " -- " << e.v;
        if (layout) {
            if (auto c = layout->coloring.color_of(e))
                out << " [color=" << palette[*c % palette.size()] << "]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace sq
