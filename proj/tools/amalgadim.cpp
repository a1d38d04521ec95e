// amalgadim: generate graph families, compose amalgamations, compute metric
// dimensions, and run the theorem verification suites.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "amalgadim/amalgam.hpp"
#include "amalgadim/families.hpp"
#include "amalgadim/io.hpp"
#include "amalgadim/resolver.hpp"
#include "amalgadim/suites.hpp"

namespace {

using namespace amalgadim;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::BadFormat, "cannot open " + path);
    out << content;
    if (!content.empty() && content.back() != '\n') out << "\n";
}

FamilyInstance make_family(const std::string& family,
                           const std::vector<int>& params) {
    auto need = [&](size_t k) {
        if (params.size() != k)
            throw Error(ErrorKind::TooSmall,
                        family + " takes " + std::to_string(k) + " parameter(s)");
    };
    if (family == "path") { need(1); return path(params[0]); }
    if (family == "cycle") { need(1); return cycle(params[0]); }
    if (family == "complete") { need(1); return complete(params[0]); }
    if (family == "complete_bipartite") {
        need(2);
        return complete_bipartite(params[0], params[1]);
    }
    if (family == "prism") { need(1); return prism(params[0]); }
    if (family == "dhc") { need(1); return double_hats_cycle(params[0]); }
    throw Error(ErrorKind::BadFormat, "unknown family: " + family);
}

Instance load_instance(const std::string& path, bool g6) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::BadFormat, "cannot open " + path);
    if (g6) {
        std::string line;
        std::getline(in, line);
        return Instance{from_graph6(line), std::nullopt, std::nullopt};
    }
    nlohmann::json j;
    in >> j;
    return instance_from_json(j);
}

struct TerminalOverride {
    size_t index;
    int a;
    int b;  // -1 for vertex overrides
};

TerminalOverride parse_override(const std::string& text, bool edge) {
    TerminalOverride o{0, 0, -1};
    std::istringstream is(text);
    char colon = 0, comma = 0;
    is >> o.index >> colon >> o.a;
    if (edge) is >> comma >> o.b;
    if (!is || colon != ':' || (edge && comma != ','))
        throw Error(ErrorKind::BadFormat,
                    edge ? "expected IDX:A,B" : "expected IDX:V");
    return o;
}

int cmd_dim(const std::string& input, const std::string& method,
            const std::string& format, bool g6, int jobs,
            std::uint64_t budget) {
    Instance inst = load_instance(input, g6);
    auto start = std::chrono::steady_clock::now();
    ResolvingResult res;
    try {
        if (method == "greedy")
            res = greedy_resolving_set(inst.graph);
        else
            res = exact_metric_dimension(inst.graph, {jobs, budget});
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Disconnected) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        if (e.kind() == ErrorKind::TooLarge) {
            std::cerr << "error: " << e.what() << "\n";
            return 3;
        }
        throw;
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (format == "json") {
        nlohmann::json j;
        j["dim"] = res.dim;
        j["basis"] = res.basis;
        auto names = nlohmann::json::array();
        for (int v : res.basis) names.push_back(inst.graph.display_name(v));
        j["basis_labels"] = names;
        j["method"] = res.method == Method::exact ? "exact" : "greedy";
        j["time"] = secs;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "dim " << res.dim << "\n";
        std::cout << "basis";
        for (int v : res.basis)
            std::cout << " " << inst.graph.display_name(v);
        std::cout << "\n";
        std::cout << "method "
                  << (res.method == Method::exact ? "exact" : "greedy") << "\n";
        std::cout << "time " << secs << "s\n";
    }
    return 0;
}

int cmd_amalgamate(const std::string& kind,
                   const std::vector<std::string>& inputs,
                   const std::vector<std::string>& term_overrides,
                   const std::string& out_path, bool g6_in) {
    std::vector<Instance> insts;
    for (const auto& p : inputs) insts.push_back(load_instance(p, g6_in));
    bool edge = kind == "edge";
    for (const auto& t : term_overrides) {
        auto o = parse_override(t, edge);
        if (o.index >= insts.size())
            throw Error(ErrorKind::BadFormat, "override index out of range");
        if (edge)
            insts[o.index].terminal_edge = {o.a, o.b};
        else
            insts[o.index].terminal_vertex = o.a;
    }
    Instance result;
    if (edge) {
        std::vector<EdgeBlock> blocks;
        for (size_t i = 0; i < insts.size(); ++i) {
            if (!insts[i].terminal_edge)
                throw Error(ErrorKind::MissingTerminal,
                            inputs[i] + " has no terminal_edge");
            blocks.push_back({insts[i].graph, insts[i].terminal_edge->first,
                              insts[i].terminal_edge->second});
        }
        auto amal = edge_amal(blocks);
        result.graph = amal.graph;
        result.terminal_edge = {amal.hub_a, amal.hub_b};
    } else {
        std::vector<VertexBlock> blocks;
        for (size_t i = 0; i < insts.size(); ++i) {
            if (!insts[i].terminal_vertex)
                throw Error(ErrorKind::MissingTerminal,
                            inputs[i] + " has no terminal_vertex");
            blocks.push_back({insts[i].graph, *insts[i].terminal_vertex});
        }
        auto amal = vertex_amal(blocks);
        result.graph = amal.graph;
        result.terminal_vertex = amal.hub_a;
    }
    write_output(out_path, instance_to_json(result).dump(2));
    return 0;
}

int cmd_verify(const std::string& suite, const std::string& format,
               const SuiteOptions& opts) {
    if (!suite_known(suite))
        throw Error(ErrorKind::BadFormat, "unknown suite: " + suite);
    std::vector<TheoremReport> reports;
    try {
        reports = run_suite(suite, opts);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::TooLarge) {
            std::cerr << "error: " << e.what() << "\n";
            return 3;
        }
        throw;
    }
    bool any_fail = false;
    for (const auto& r : reports) {
        if (r.status == ReportStatus::fail) any_fail = true;
        if (format == "json")
            std::cout << report_to_json(r).dump() << "\n";
        else
            std::cout << report_tsv_row(r) << "\n";
    }
    return any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"metric dimension of graph amalgamations"};
    app.require_subcommand(1);

    int jobs = 1;
    std::uint64_t budget = 1'000'000'000;
    app.add_option("--jobs", jobs, "search worker threads")->capture_default_str();
    app.add_option("--budget", budget, "candidate-subset budget")
        ->capture_default_str();

    // gen
    auto* gen = app.add_subcommand("gen", "generate a family instance");
    std::string gen_family, gen_out;
    std::vector<int> gen_params;
    bool gen_g6 = false;
    gen->add_option("family", gen_family,
                    "path|cycle|complete|complete_bipartite|prism|dhc")
        ->required();
    gen->add_option("params", gen_params, "integer parameters")->required();
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");
    gen->add_flag("--g6", gen_g6, "write graph6 instead of JSON");

    // dim
    auto* dim = app.add_subcommand("dim", "compute metric dimension");
    std::string dim_input, dim_method = "exact", dim_format = "text";
    bool dim_g6 = false;
    dim->add_option("input", dim_input, "instance file")->required();
    dim->add_option("--method", dim_method, "exact|greedy")
        ->check(CLI::IsMember({"exact", "greedy"}))
        ->capture_default_str();
    dim->add_option("--format", dim_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    dim->add_flag("--g6", dim_g6, "read input as a graph6 line");

    // amalgamate
    auto* am = app.add_subcommand("amalgamate", "amalgamate instance files");
    std::string am_kind, am_out;
    std::vector<std::string> am_inputs, am_terminals;
    bool am_g6 = false;
    am->add_option("kind", am_kind, "vertex|edge")
        ->check(CLI::IsMember({"vertex", "edge"}))
        ->required();
    am->add_option("inputs", am_inputs, "instance files")->required();
    am->add_option("--terminal", am_terminals,
                   "override terminal, IDX:V (vertex) or IDX:A,B (edge)");
    am->add_option("-o,--output", am_out, "output file (default stdout)");
    am->add_flag("--g6", am_g6, "read inputs as graph6 lines");

    // verify
    auto* verify = app.add_subcommand("verify", "run theorem verification");
    std::string verify_suite, verify_format = "tsv";
    SuiteOptions suite_opts;
    verify->add_option("suite", verify_suite,
                       "t1|t2|t3|t4|t5|t6|ladders|families|all")
        ->required();
    verify->add_option("--format", verify_format, "tsv|json")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();
    verify->add_option("--lengths-max", suite_opts.lengths_max,
                       "max cycle length")->capture_default_str();
    verify->add_option("--orders-max", suite_opts.orders_max,
                       "max complete order")->capture_default_str();
    verify->add_option("--prism-max", suite_opts.prism_max,
                       "max prism parameter")->capture_default_str();
    verify->add_option("--n-max", suite_opts.n_max, "max blocks per collection")
        ->capture_default_str();
    verify->add_option("--seed", suite_opts.seed, "mixed-corpus seed")
        ->capture_default_str();
    verify->add_option("--mixed-count", suite_opts.mixed_count,
                       "seeded mixed collections")->capture_default_str();
    verify->add_option("--ladder-n", suite_opts.ladder_n_max,
                       "max ladder block count")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            auto inst = make_family(gen_family, gen_params);
            if (gen_g6) {
                write_output(gen_out, to_graph6(inst.graph));
            } else {
                Instance file{inst.graph, inst.terminal_vertex,
                              inst.terminal_edge};
                write_output(gen_out, instance_to_json(file).dump(2));
            }
            return 0;
        }
        if (*dim) return cmd_dim(dim_input, dim_method, dim_format, dim_g6,
                                 jobs, budget);
        if (*am)
            return cmd_amalgamate(am_kind, am_inputs, am_terminals, am_out,
                                  am_g6);
        if (*verify) {
            suite_opts.search = {jobs, budget};
            return cmd_verify(verify_suite, verify_format, suite_opts);
        }
    } catch (const amalgadim::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
