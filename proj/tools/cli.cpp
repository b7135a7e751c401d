#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gext/calculus.hpp"
#include "gext/cohomology.hpp"
#include "gext/errors.hpp"
#include "gext/form_io.hpp"
#include "gext/selftest.hpp"
#include "gext/uniqueness.hpp"

namespace gext::cli {

namespace {

using nlohmann::json;

struct Streams
{
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

void emit_error(std::ostream& err, const std::string& code, const std::string& message, const std::string& context)
{
    err << json{{"code", code}, {"message", message}, {"context", context}}.dump() << "\n";
}

std::string read_input(const std::string& path, Streams& io)
{
    std::ostringstream buf;
    if (path == "-") {
        buf << io.in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw Error("io_error", "cannot open input file", path);
    buf << file.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text, Streams& io)
{
    if (path == "-") {
        io.out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw Error("io_error", "cannot open output file", path);
    file << text;
}

Graph load_graph(const std::string& path, const std::string& format, Streams& io)
{
    std::string kind = format;
    if (kind == "auto") {
        auto ext = std::filesystem::path(path).extension().string();
        kind = ext == ".json" ? "json" : "edges";
    }
    std::string text = read_input(path, io);
    return kind == "json" ? parse_graph_json(text) : parse_edge_list(text);
}

json load_json(const std::string& path, Streams& io)
{
    try {
        return json::parse(read_input(path, io));
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what(), 1);
    }
}

struct GraphArgs
{
    std::string graph;
    std::string format = "auto";
    std::string out = "-";
    bool json_out = false;

    void attach(CLI::App* sub, bool with_out = true)
    {
        sub->add_option("--graph", graph, "edge list (.edges) or graph JSON (.json); - for stdin")->required();
        sub->add_option("--format", format, "input format override")
            ->check(CLI::IsMember({"auto", "edges", "json"}));
        if (with_out)
            sub->add_option("--out", out, "output path; - for stdout");
        sub->add_flag("--json", json_out, "machine-readable output");
    }
};

int cmd_cliques(const GraphArgs& ga, std::size_t max_card, bool tuples, Streams& io)
{
    Graph g = load_graph(ga.graph, ga.format, io);
    CliqueComplex cx = max_card == 0 ? CliqueComplex::full(std::move(g)) : CliqueComplex(std::move(g), max_card);
    const Graph& graph = cx.graph();
    auto labels = [&](const Clique& c) {
        json arr = json::array();
        for (VertexId v : c)
            arr.push_back(graph.label(v));
        return arr;
    };

    std::string text;
    if (ga.json_out) {
        json levels = json::array();
        for (std::size_t k = 1; k <= cx.max_card(); ++k) {
            json level{{"k", k}, {"count", cx.level_size(k)}};
            if (tuples) {
                level["cliques"] = json::array();
                for (const auto& c : cx.level(k))
                    level["cliques"].push_back(labels(c));
            }
            levels.push_back(std::move(level));
        }
        text = json{{"levels", std::move(levels)}}.dump() + "\n";
    } else {
        for (std::size_t k = 1; k <= cx.max_card(); ++k) {
            text += "level " + std::to_string(k) + " " + std::to_string(cx.level_size(k)) + "\n";
            if (!tuples)
                continue;
            for (const auto& c : cx.level(k)) {
                for (std::size_t i = 0; i < c.size(); ++i)
                    text += (i ? " " : "") + graph.label(c[i]);
                text += "\n";
            }
        }
    }
    write_output(ga.out, text, io);
    return 0;
}

int cmd_d(const GraphArgs& ga, const std::string& form_path, Streams& io)
{
    json doc = load_json(form_path, io);
    auto cx = std::make_shared<const CliqueComplex>(load_graph(ga.graph, ga.format, io), form_degree(doc) + 2);
    Form alpha = form_from_json(doc, cx);
    write_output(ga.out, form_to_string(exterior_derivative(alpha)) + "\n", io);
    return 0;
}

int cmd_wedge(const GraphArgs& ga, const std::string& alpha_path, const std::string& beta_path, Streams& io)
{
    json a = load_json(alpha_path, io), b = load_json(beta_path, io);
    auto cx = std::make_shared<const CliqueComplex>(load_graph(ga.graph, ga.format, io),
                                                    form_degree(a) + form_degree(b) + 1);
    Form alpha = form_from_json(a, cx), beta = form_from_json(b, cx);
    write_output(ga.out, form_to_string(wedge(alpha, beta)) + "\n", io);
    return 0;
}

int cmd_expand(const GraphArgs& ga, const std::string& form_path, Streams& io)
{
    json doc = load_json(form_path, io);
    auto cx = std::make_shared<const CliqueComplex>(load_graph(ga.graph, ga.format, io), form_degree(doc) + 1);
    Form alpha = form_from_json(doc, cx);
    write_output(ga.out, form_to_string(expand_reconstruct(alpha)) + "\n", io);
    return 0;
}

int cmd_betti(const GraphArgs& ga, const std::string& matrix_dir, Streams& io)
{
    CliqueComplex cx = CliqueComplex::full(load_graph(ga.graph, ga.format, io));
    auto b = betti(cx);
    if (!matrix_dir.empty()) {
        std::filesystem::create_directories(matrix_dir);
        for (std::size_t k = 0; k + 2 <= cx.max_card(); ++k) {
            std::ofstream file(std::filesystem::path(matrix_dir) / ("D" + std::to_string(k) + ".txt"));
            if (!file)
                throw Error("io_error", "cannot write matrix file", matrix_dir);
            file << coboundary_matrix(cx, k).to_triplets();
        }
    }
    std::string text;
    if (ga.json_out) {
        text = json{{"betti", b}}.dump() + "\n";
    } else {
        for (std::size_t k = 0; k < b.size(); ++k)
            text += (k ? " " : "") + std::to_string(b[k]);
        text += "\n";
    }
    write_output(ga.out, text, io);
    return 0;
}

int cmd_verify(const GraphArgs& ga, const std::string& op_path, std::size_t trials, std::uint64_t seed,
               const std::string& report_path, Streams& io)
{
    json table = load_json(op_path, io);
    Graph g = load_graph(ga.graph, ga.format, io);
    const std::size_t omega = CliqueComplex::full(g).clique_number();
    const std::size_t cap = std::max({omega + 1, std::size_t{3}, table_max_image_degree(table) + 1});
    auto cx = std::make_shared<const CliqueComplex>(std::move(g), cap);

    Operator op = operator_from_table(table, cx, std::filesystem::path(op_path).filename().string());
    AxiomReport report = audit(op, cx, trials, seed);
    json doc = report.to_json();
    doc["trials"] = trials;
    doc["seed"] = seed;

    if (!report_path.empty())
        write_output(report_path, doc.dump(2) + "\n", io);
    if (ga.json_out) {
        io.out << doc.dump() << "\n";
    } else {
        auto line = [&](const char* name, const Verdict& v) {
            io.out << name << std::string(22 - std::string(name).size(), ' ')
                   << (!v.ran ? "SKIP" : v.pass ? "PASS" : "FAIL") << "  (" << v.checks << " checks"
                   << (v.sampled ? ", sampled" : "") << ")\n";
            if (v.ran && !v.pass)
                io.out << "  witness: " << v.witness.dump() << "\n";
        };
        io.out << "operator " << report.operator_name << " on " << cx->graph().vertex_count() << " vertices\n";
        line("degree_raising", report.degree_raising);
        line("squares_to_zero", report.squares_to_zero);
        line("leibniz", report.leibniz);
        line("agrees_on_functions", report.agrees_on_functions);
        line("linearity_sampled", report.linearity_sampled);
        line("equality_with_d", report.equality_with_d);
        io.out << (report.all_pass() ? "operator equals d on this complex\n" : "operator rejected\n");
    }
    return report.all_pass() ? 0 : 1;
}

int cmd_selftest(std::uint64_t seed, std::size_t trials, const std::string& report_path, bool json_out,
                 Streams& io)
{
    SelftestReport report = run_selftest(seed, trials);
    std::string doc = report.to_json().dump(2) + "\n";
    if (!report_path.empty())
        write_output(report_path, doc, io);
    io.out << (json_out ? doc : report.table());
    return report.pass() ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Streams io{in, out, err};
    CLI::App app{"Exterior calculus on clique complexes of finite graphs", "gext"};
    app.require_subcommand(1);

    GraphArgs cliques_args, d_args, wedge_args, expand_args, betti_args, verify_args;
    std::size_t max_card = 0;
    bool tuples = false;
    std::string form_path, alpha_path, beta_path, expand_path, matrix_dir, op_path, verify_report, self_report;
    std::size_t verify_trials = 20, self_trials = 10;
    std::uint64_t verify_seed = 0, self_seed = 0;
    bool self_json = false;

    auto* cliques = app.add_subcommand("cliques", "enumerate k-cliques per level");
    cliques_args.attach(cliques);
    cliques->add_option("--max-card", max_card, "largest clique cardinality (default: clique number + 1)");
    cliques->add_flag("--tuples", tuples, "list the cliques, one per line");

    auto* dcmd = app.add_subcommand("d", "exterior derivative of a form");
    d_args.attach(dcmd);
    dcmd->add_option("--form", form_path, "form JSON; - for stdin")->required();

    auto* wcmd = app.add_subcommand("wedge", "wedge product of two forms");
    wedge_args.attach(wcmd);
    wcmd->add_option("--alpha", alpha_path, "left factor (form JSON)")->required();
    wcmd->add_option("--beta", beta_path, "right factor (form JSON)")->required();

    auto* ecmd = app.add_subcommand("expand", "rebuild a form from its dchi expansion");
    expand_args.attach(ecmd);
    ecmd->add_option("--form", expand_path, "form JSON; - for stdin")->required();

    auto* bcmd = app.add_subcommand("betti", "Betti numbers of the clique complex over Q");
    betti_args.attach(bcmd);
    bcmd->add_option("--emit-matrices", matrix_dir, "write coboundary matrices D_k as triplet files");

    auto* vcmd = app.add_subcommand("verify-operator", "audit an operator table against the derivation axioms");
    verify_args.attach(vcmd, false);
    vcmd->add_option("--operator", op_path, "operator table JSON")->required();
    vcmd->add_option("--trials", verify_trials, "random samples per check")->check(CLI::PositiveNumber);
    vcmd->add_option("--seed", verify_seed, "random seed (default 0)");
    vcmd->add_option("--report", verify_report, "write the JSON report here");

    auto* scmd = app.add_subcommand("selftest", "run the identity suite on the built-in graphs");
    scmd->add_option("--seed", self_seed, "random seed (default 0)");
    scmd->add_option("--trials", self_trials, "random samples per check")->check(CLI::PositiveNumber);
    scmd->add_option("--report", self_report, "write the JSON report here");
    scmd->add_flag("--json", self_json, "print the JSON report instead of the table");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        emit_error(err, "usage_error", e.what(), e.get_name());
        return 2;
    }

    try {
        if (*cliques)
            return cmd_cliques(cliques_args, max_card, tuples, io);
        if (*dcmd)
            return cmd_d(d_args, form_path, io);
        if (*wcmd)
            return cmd_wedge(wedge_args, alpha_path, beta_path, io);
        if (*ecmd)
            return cmd_expand(expand_args, expand_path, io);
        if (*bcmd)
            return cmd_betti(betti_args, matrix_dir, io);
        if (*vcmd)
            return cmd_verify(verify_args, op_path, verify_trials, verify_seed, verify_report, io);
        if (*scmd)
            return cmd_selftest(self_seed, self_trials, self_report, self_json, io);
    } catch (const Error& e) {
        emit_error(err, e.code(), e.what(), e.context());
        return 2;
    } catch (const std::exception& e) {
        emit_error(err, "internal_error", e.what(), "");
        return 2;
    }
    return 2;
}

} // namespace gext::cli
