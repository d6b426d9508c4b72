#include "spanmu/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>

#include "spanmu/construct.hpp"
#include "spanmu/error.hpp"
#include "spanmu/family.hpp"
#include "spanmu/formulas.hpp"
#include "spanmu/io.hpp"
#include "spanmu/mis.hpp"
#include "spanmu/oracle.hpp"

namespace spanmu {

namespace {

struct Options {
    std::string graph_path;
    std::string cert_path;
    std::string family;
    std::string out_path;
    int start = -1;
    bool all_starts = false;
    bool no_refine = false;
    bool alpha = false;
    bool json = false;
    bool table = false;
    long budget_ms = 10000;
    std::uint64_t cap = kDefaultTreeCap;
    int reps = 1;
    std::optional<std::uint64_t> seed;
};

std::optional<int> exact_alpha(const Graph& g, long budget_ms)
{
    auto r = max_independent_set(g, std::chrono::milliseconds(budget_ms));
    if (!r) {
        return std::nullopt;
    }
    return r->alpha;
}

std::string with_decimal(const Rational& r) { return r.str() + " (" + r.to_decimal(10) + ")"; }

void write_output(const Options& o, const std::string& text, std::ostream& out)
{
    if (o.out_path.empty() || o.out_path == "-") {
        out << text;
        return;
    }
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) {
        throw ParseError("cannot write '" + o.out_path + "'");
    }
    f << text;
}

int cmd_construct(const Options& o, std::ostream& out)
{
    auto g = read_graph_file(o.graph_path);
    BuildOptions opts;
    if (o.start >= 0 && !o.all_starts) {
        opts.start = o.start;
    }
    opts.refine = !o.no_refine;
    auto res = build_spanning_tree(g, opts);

    CertificateDoc doc{res.certificate, res.tree.edges(), std::nullopt};
    if (o.alpha) {
        doc.alpha = exact_alpha(g, o.budget_ms);
    }
    if (!o.table) {
        out << certificate_to_json(doc);
        return exit_code::kOk;
    }
    const auto& c = doc.cert;
    auto row = [&out](const std::string& key, const std::string& value) {
        out << std::left << std::setw(8) << key << value << '\n';
    };
    row("case", std::string(to_string(c.kind)));
    row("n", std::to_string(c.n));
    row("m", std::to_string(c.m));
    row("k", std::to_string(c.k));
    row("t", std::to_string(c.t));
    row("alpha", doc.alpha ? std::to_string(*doc.alpha) : "unknown");
    row("mu", with_decimal(c.mu));
    row("bound", with_decimal(c.bound));
    row("start", std::to_string(c.start));
    std::string edges;
    for (auto [u, v] : doc.tree_edges) {
        edges += (edges.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
    }
    row("tree", edges);
    return exit_code::kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err)
{
    auto g = read_graph_file(o.graph_path);
    auto doc = certificate_from_json(read_text_file(o.cert_path));
    if (doc.cert.n != g.n() || doc.cert.m != g.m()) {
        err << "size-mismatch: certificate is for n=" << doc.cert.n << " m=" << doc.cert.m << ", graph has n="
            << g.n() << " m=" << g.m() << '\n';
        return exit_code::kMismatch;
    }
    std::optional<Tree> tree;
    try {
        tree = Tree::from_edges(g.n(), doc.tree_edges);
    } catch (const InvalidArgument& e) {
        err << "not-spanning-tree: " << e.what() << '\n';
        return exit_code::kFailure;
    }
    std::optional<int> alpha;
    if (doc.alpha) {
        alpha = exact_alpha(g, o.budget_ms);
        if (alpha && *alpha != *doc.alpha) {
            err << "alpha-mismatch: certificate says " << *doc.alpha << ", exact value is " << *alpha << '\n';
            return exit_code::kFailure;
        }
    }
    auto v = verify_certificate(g, *tree, doc.cert, alpha);
    if (!v) {
        err << to_string(v.reason) << ": " << v.detail << '\n';
        return exit_code::kFailure;
    }
    out << "ok\n";
    return exit_code::kOk;
}

int cmd_oracle(const Options& o, std::ostream& out)
{
    Graph g = o.family.empty() ? read_graph_file(o.graph_path) : generate(FamilySpec::parse(o.family));
    auto best = mrct(g, o.cap);
    auto built = build_spanning_tree(g);
    int alpha = independence_number(g);
    const auto& c = built.certificate;
    Rational th_new(alpha + 1);
    Rational th1 = formulas::th1_bound(alpha);

    out << "n: " << g.n() << '\n';
    out << "m: " << g.m() << '\n';
    out << "spanning_trees: " << best.trees << '\n';
    out << "alpha: " << alpha << '\n';
    out << "mrct_mu: " << with_decimal(best.mu) << '\n';
    out << "constructed_mu: " << with_decimal(c.mu) << '\n';
    out << "constructed_case: " << to_string(c.kind) << '\n';
    out << "certificate_bound: " << with_decimal(c.bound) << '\n';
    out << "alpha_plus_one_bound: " << with_decimal(th_new) << '\n';
    out << "refined_bound: " << with_decimal(th1) << '\n';
    out << "gap_constructed_minus_mrct: " << with_decimal(c.mu - best.mu) << '\n';
    out << "gap_certificate_minus_constructed: " << with_decimal(c.bound - c.mu) << '\n';
    out << "gap_alpha_plus_one_minus_mrct: " << with_decimal(th_new - best.mu) << '\n';
    return exit_code::kOk;
}

int cmd_bench(const Options& o, std::ostream& out)
{
    auto base = FamilySpec::parse(o.family);
    if (o.reps < 1) {
        throw InvalidArgument("--reps must be positive");
    }
    const std::uint64_t first = o.seed.value_or(base.seed);

    struct Row {
        std::string family;
        std::uint64_t seed;
        std::string line;
    };
    std::vector<Row> rows;
    for (int r = 0; r < o.reps; ++r) {
        FamilySpec spec = base;
        spec.seed = first + static_cast<std::uint64_t>(r);
        auto g = generate(spec);
        auto res = build_spanning_tree(g);
        auto alpha = exact_alpha(g, o.budget_ms);
        const auto& c = res.certificate;
        FamilySpec unseeded = spec;
        unseeded.seed = 0;
        std::ostringstream line;
        line << spec.str() << ',' << g.n() << ',' << g.m() << ',' << (alpha ? std::to_string(*alpha) : "") << ','
             << c.k << ',' << c.t << ',' << to_string(c.kind) << ',' << c.mu.num_str() << ',' << c.mu.den_str()
             << ',' << c.bound.num_str() << ',' << c.bound.den_str() << ',' << (c.bound - c.mu).to_decimal(10);
        rows.push_back({unseeded.str(), spec.seed, line.str()});
    }
    std::sort(rows.begin(), rows.end(),
              [](const Row& a, const Row& b) { return std::tie(a.family, a.seed) < std::tie(b.family, b.seed); });

    std::string text = "name,n,m,alpha,k,t,case,mu_num,mu_den,bound_num,bound_den,gap_decimal\n";
    for (const auto& r : rows) {
        text += r.line + "\n";
    }
    write_output(o, text, out);
    return exit_code::kOk;
}

int cmd_gen(const Options& o, std::ostream& out)
{
    auto g = generate(FamilySpec::parse(o.family));
    write_output(o, format_graph(g), out);
    return exit_code::kOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Spanning trees with small average distance, with checkable certificates", "spanmu"};
    app.require_subcommand(1);

    auto* construct = app.add_subcommand("construct", "Build a spanning tree and print its certificate");
    construct->add_option("graph", o.graph_path, "Graph file")->required();
    auto* start_opt = construct->add_option("--start", o.start, "Grow from this vertex only");
    construct->add_flag("--all-starts", o.all_starts, "Try every start vertex (default)")->excludes(start_opt);
    construct->add_flag("--no-refine", o.no_refine, "Skip the tree transformations");
    construct->add_flag("--alpha", o.alpha, "Compute the exact independence number");
    auto* json_flag = construct->add_flag("--json", o.json, "JSON output (default)");
    construct->add_flag("--table", o.table, "Human-readable output")->excludes(json_flag);
    construct->add_option("--alpha-budget-ms", o.budget_ms, "Time limit for the independence number");

    auto* verify = app.add_subcommand("verify", "Check a certificate against a graph");
    verify->add_option("graph", o.graph_path, "Graph file")->required();
    verify->add_option("certificate", o.cert_path, "Certificate JSON")->required();
    verify->add_option("--alpha-budget-ms", o.budget_ms, "Time limit for the independence number");

    auto* oracle = app.add_subcommand("oracle", "Compare against the exact optimum by enumeration");
    auto* graph_opt = oracle->add_option("graph", o.graph_path, "Graph file");
    oracle->add_option("--gen", o.family, "Generate the graph from a family spec")->excludes(graph_opt);
    oracle->add_option("--cap", o.cap, "Maximum number of spanning trees to enumerate");

    auto* bench = app.add_subcommand("bench", "Run a family and write a CSV table");
    bench->add_option("--family", o.family, "Family spec")->required();
    bench->add_option("--reps", o.reps, "Instances to generate");
    bench->add_option("--seed", o.seed, "First seed; row r uses seed + r");
    bench->add_option("--out", o.out_path, "Output CSV (default stdout)");
    bench->add_option("--alpha-budget-ms", o.budget_ms, "Time limit for the independence number");

    auto* gen = app.add_subcommand("gen", "Write a generated graph file");
    gen->add_option("--family", o.family, "Family spec")->required();
    gen->add_option("--out", o.out_path, "Output file (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_code::kParse;
    }

    try {
        if (*construct) {
            return cmd_construct(o, out);
        }
        if (*verify) {
            return cmd_verify(o, out, err);
        }
        if (*oracle) {
            if (o.family.empty() && o.graph_path.empty()) {
                err << "oracle needs a graph file or --gen\n";
                return exit_code::kParse;
            }
            return cmd_oracle(o, out);
        }
        if (*bench) {
            return cmd_bench(o, out);
        }
        if (*gen) {
            return cmd_gen(o, out);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_code::kParse;
    } catch (const InvalidArgument& e) {
        err << "invalid argument: " << e.what() << '\n';
        return exit_code::kParse;
    } catch (const DisconnectedGraph& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kDisconnected;
    } catch (const CapExceeded& e) {
        err << "overflow: " << e.what() << '\n';
        return exit_code::kOverflow;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kFailure;
    }
    return exit_code::kParse;
}

} // namespace spanmu
