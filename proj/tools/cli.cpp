#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sq/io.hpp"
#include "sq/queue_construct.hpp"
#include "sq/random.hpp"

namespace sq::cli {

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FormatError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Written next to the target and renamed into place.
void write_file(const std::string& path, const std::string& text)
{
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw FormatError("cannot write " + path);
        out << text;
    }
    std::filesystem::rename(tmp, target);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void emit(const std::string& text, const std::string& output, std::ostream& out)
{
    if (output.empty())
        out << text;
    else
        write_file(output, text);
}

struct GenArgs {
    std::string kind;
    int n = 0;
    int a = 0;
    std::string output;
    std::string format = "json";
};

int cmd_gen(const GenArgs& args, std::ostream& out)
{
    Graph g;
    const Layout* layout = nullptr;
    Layout constructed;
    if (args.kind == "hex") {
        g = make_hex_dual(args.n);
        constructed = hex_queue_layout(args.n);
        layout = &constructed;
    } else if (args.kind == "star") {
        g = make_star(args.a);
    } else {
        g = cartesian_product(make_star(args.a), make_hex_dual(args.n));
        constructed = product_queue_layout(args.a, args.n);
        layout = &constructed;
    }
    emit(args.format == "dot" ? to_dot(g, layout) : dump(graph_to_json(g)), args.output, out);
    return ok;
}

struct LayoutArgs {
    std::string kind;
    int n = 0;
    int a = 0;
    std::string output;
    std::string format = "json";
};

int cmd_layout(const LayoutArgs& args, std::ostream& out)
{
    Graph g;
    Layout layout;
    if (args.kind == "hex") {
        g = make_hex_dual(args.n);
        layout = hex_queue_layout(args.n);
    } else {
        g = cartesian_product(make_star(args.a), make_hex_dual(args.n));
        layout = product_queue_layout(args.a, args.n);
    }
    emit(args.format == "dot" ? to_dot(g, &layout) : dump(layout_to_json(layout)), args.output, out);
    return ok;
}

int cmd_verify(const std::string& graph_path, const std::string& layout_path, std::ostream& out)
{
    const Graph g = graph_from_json(parse_json(read_file(graph_path)));
    const Layout layout = layout_from_json(parse_json(read_file(layout_path)));
    const auto report = verify_layout(g, layout);
    out << dump(verify_report_to_json(report));
    return report.valid ? ok : invalid_layout;
}

struct SolveArgs {
    std::string graph;
    std::string kind = "stack";
    int max_vertices = SolveBudget{}.max_vertices;
    std::uint64_t max_orders = SolveBudget{}.max_orders;
    std::string output;
};

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err)
{
    const Graph g = graph_from_json(parse_json(read_file(args.graph)));
    SolveBudget budget;
    budget.max_vertices = args.max_vertices;
    budget.max_orders = args.max_orders;
    SolveResult result;
    try {
        result = args.kind == "stack" ? stack_number(g, budget) : queue_number(g, budget);
    } catch (const ResourceLimit& e) {
        err << "budget exceeded: " << e.what() << "\n";
        out << dump(Json{{"kind", args.kind},
                         {"exact", false},
                         {"lower_bound", e.lower_bound()},
                         {"upper_bound", e.upper_bound()}});
        return budget_exceeded;
    }
    Json summary{{"kind", args.kind},
                 {"k", result.k},
                 {"exact", result.exact},
                 {"lower_bound", result.lower_bound},
                 {"orders_examined", result.orders_examined}};
    if (args.output.empty())
        summary["layout"] = layout_to_json(result.layout);
    else
        write_file(args.output, dump(layout_to_json(result.layout)));
    out << dump(summary);
    if (!result.exact) {
        err << "order budget exhausted; k is an upper bound\n";
        return budget_exceeded;
    }
    return ok;
}

struct HexpathArgs {
    std::string coloring;
    bool random = false;
    int n = 0;
    std::uint64_t seed = 0;
    bool trace = false;
    std::string output;
};

int cmd_hexpath(const HexpathArgs& args, std::ostream& out)
{
    GridColoring coloring;
    if (args.random) {
        if (args.n < 1)
            throw InvalidParameter("--random needs --n >= 1");
        Rng rng(args.seed);
        coloring = random_coloring(args.n, rng);
    } else {
        if (args.coloring.empty())
            throw InvalidParameter("give a colouring file or --random --n N");
        coloring = coloring_from_json(parse_json(read_file(args.coloring)));
    }
    const auto path = find_monochromatic_path(coloring);
    Json j = path_to_json(coloring.n(), path);
    if (args.trace) {
        j["coloring"] = coloring_to_json(coloring);
        j["steps"] = boundary_steps_to_json(coloring.n(), boundary_sequence(coloring));
    }
    emit(dump(j), args.output, out);
    return ok;
}

struct WitnessArgs {
    int a = 0;
    int n = 0;
    int c = 2;
    int d = 2;
    std::string order;
    bool random = false;
    std::uint64_t seed = 0;
    bool trace = false;
    std::string output;
};

int cmd_witness(const WitnessArgs& args, std::ostream& out)
{
    if (args.a < 1 || args.n < 1)
        throw InvalidParameter("--a and --n must be >= 1");
    const int size = (args.a + 1) * args.n * args.n;
    LinearOrder order;
    if (args.random) {
        Rng rng(args.seed);
        order = random_order(size, rng);
    } else if (!args.order.empty()) {
        order = order_from_json(parse_json(read_file(args.order)));
        if (order.size() != size)
            throw FormatError("order file must list all " + std::to_string(size) + " vertices");
    } else {
        throw InvalidParameter("give --order FILE or --random");
    }
    const auto report = extract_crossing_witness(args.a, args.n, order, args.c, args.d);
    emit(dump(witness_to_json(report, args.n, args.trace)), args.output, out);
    return report.outcome == WitnessOutcome::witness ? ok : insufficient_scale;
}

int cmd_params(int s, std::ostream& out)
{
    out << dump(parameters_to_json(required_parameters(s)));
    return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Stack and queue layouts of S_a x H_n: constructions, exact solvers, witnesses"};
    app.name("sqlayout");
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph file");
    gen_cmd->add_option("kind", gen.kind, "hex | star | product")
        ->required()
        ->check(CLI::IsMember({"hex", "star", "product"}));
    gen_cmd->add_option("--n", gen.n, "Grid side of H_n");
    gen_cmd->add_option("--a", gen.a, "Leaves of S_a");
    gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");
    gen_cmd->add_option("--format", gen.format, "json | dot")->check(CLI::IsMember({"json", "dot"}));

    LayoutArgs lay;
    auto* lay_cmd = app.add_subcommand("layout", "Emit the constructed queue layout");
    lay_cmd->add_option("kind", lay.kind, "hex | product")
        ->required()
        ->check(CLI::IsMember({"hex", "product"}));
    lay_cmd->add_option("--n", lay.n, "Grid side of H_n");
    lay_cmd->add_option("--a", lay.a, "Leaves of S_a");
    lay_cmd->add_option("-o,--output", lay.output, "Output file (default stdout)");
    lay_cmd->add_option("--format", lay.format, "json | dot")->check(CLI::IsMember({"json", "dot"}));

    std::string verify_graph;
    std::string verify_layout_path;
    auto* verify_cmd = app.add_subcommand("verify", "Check a layout against a graph");
    verify_cmd->add_option("graph", verify_graph, "Graph JSON")->required();
    verify_cmd->add_option("layout", verify_layout_path, "Layout JSON")->required();

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Exact stack or queue number");
    solve_cmd->add_option("graph", solve.graph, "Graph JSON")->required();
    solve_cmd->add_option("--kind", solve.kind, "stack | queue")
        ->check(CLI::IsMember({"stack", "queue"}));
    solve_cmd->add_option("--max-vertices", solve.max_vertices, "Vertex budget");
    solve_cmd->add_option("--max-orders", solve.max_orders, "Order budget");
    solve_cmd->add_option("-o,--output", solve.output, "Write the optimal layout here");

    HexpathArgs hex;
    auto* hex_cmd = app.add_subcommand("hexpath", "Monochromatic path in a 2-coloured H_n");
    hex_cmd->add_option("coloring", hex.coloring, "Colouring JSON");
    hex_cmd->add_flag("--random", hex.random, "Use a seeded random colouring");
    hex_cmd->add_option("--n", hex.n, "Grid side for --random");
    hex_cmd->add_option("--seed", hex.seed, "Seed for --random");
    hex_cmd->add_flag("--trace", hex.trace, "Include the boundary sequence");
    hex_cmd->add_option("-o,--output", hex.output, "Output file (default stdout)");

    WitnessArgs wit;
    auto* wit_cmd = app.add_subcommand("witness", "Pairwise crossing witness for an order of S_a x H_n");
    wit_cmd->add_option("--a", wit.a, "Leaves of S_a")->required();
    wit_cmd->add_option("--n", wit.n, "Grid side of H_n")->required();
    wit_cmd->add_option("--c", wit.c, "Separated-chain target");
    wit_cmd->add_option("--d", wit.d, "Crossing-antichain target");
    auto* order_opt = wit_cmd->add_option("--order", wit.order, "Order JSON");
    auto* random_opt = wit_cmd->add_flag("--random", wit.random, "Use a seeded random order");
    order_opt->excludes(random_opt);
    wit_cmd->add_option("--seed", wit.seed, "Seed for --random");
    wit_cmd->add_flag("--trace", wit.trace, "Include intermediate artefacts");
    wit_cmd->add_option("-o,--output", wit.output, "Output file (default stdout)");

    int s = 0;
    auto* params_cmd = app.add_subcommand("params", "Parameters forcing stack number s");
    params_cmd->add_option("--s", s, "Target stack number")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return input_error;
    }

    try {
        if (*gen_cmd)
            return cmd_gen(gen, out);
        if (*lay_cmd)
            return cmd_layout(lay, out);
        if (*verify_cmd)
            return cmd_verify(verify_graph, verify_layout_path, out);
        if (*solve_cmd)
            return cmd_solve(solve, out, err);
        if (*hex_cmd)
            return cmd_hexpath(hex, out);
        if (*wit_cmd)
            return cmd_witness(wit, out);
        if (*params_cmd)
            return cmd_params(s, out);
    } catch (const ResourceLimit& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return budget_exceeded;
    } catch (const InvalidParameter& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }
    return input_error;
}

} // namespace sq::cli
