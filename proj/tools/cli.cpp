#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hsplit/errors.hpp"
#include "hsplit/experiment.hpp"
#include "hsplit/instance.hpp"
#include "hsplit/measures.hpp"
#include "hsplit/oracle.hpp"
#include "hsplit/profile_gen.hpp"
#include "hsplit/reductions.hpp"
#include "hsplit/solvers.hpp"

namespace hsplit {

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open input file '" + path + "'");
    return f;
}

void write_output(const std::string& path, const std::string& text,
                  std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw Error("cannot open output file '" + path + "'");
    f << text;
}

Operation parse_operation_name(const std::string& s) {
    if (s == "atomizing") return Operation::atomizing;
    if (s == "extracting") return Operation::extracting;
    if (s == "dividing") return Operation::dividing;
    throw Error("unknown operation '" + s + "'");
}

Variant parse_variant_name(const std::string& s) {
    if (s == "plain") return Variant::plain;
    if (s == "conservative") return Variant::conservative;
    if (s == "cautious") return Variant::cautious;
    throw Error("unknown variant '" + s + "'");
}

Measure parse_measure_name(const std::string& s) {
    if (s == "sum") return Measure::sum;
    if (s == "union") return Measure::union_;
    if (s == "fusion") return Measure::fusion;
    throw Error("unknown measure '" + s + "'");
}

struct SolveArgs {
    std::string in;
    std::string out;
    bool expect_feasible = false;
    std::string problem, variant, measure;
    std::optional<int> h, k;
};

ProblemInstance load_instance(const SolveArgs& a) {
    auto f = open_input(a.in);
    ProblemInstance inst = parse_instance(f);
    bool overridden = !a.problem.empty() || !a.variant.empty() ||
                      !a.measure.empty() || a.h.has_value() || a.k.has_value();
    if (!overridden) return inst;
    Operation op =
        a.problem.empty() ? inst.operation : parse_operation_name(a.problem);
    Variant variant =
        a.variant.empty() ? inst.variant : parse_variant_name(a.variant);
    Measure measure =
        a.measure.empty() ? inst.measure : parse_measure_name(a.measure);
    int h = a.h.value_or(inst.h);
    std::optional<int> k = a.k.has_value() ? a.k : inst.k;
    if (variant == Variant::plain) k.reset();
    return ProblemInstance::make(std::move(inst.graph), std::move(inst.profile),
                                 op, variant, measure, h, k);
}

int report_solution(const ProblemInstance& inst, const SolveResult& res,
                    const SolveArgs& a, std::ostream& out) {
    std::ostringstream text;
    text << "feasible " << (res.feasible ? "true" : "false") << "\n";
    if (res.feasible) {
        text << "operations_used " << res.operations_used << "\n";
        text << "parts_changed " << res.parts_changed << "\n";
        text << format_refinement(inst.graph, res.refinement->parts,
                                  res.achieved_h);
    } else {
        text << "hindex " << res.achieved_h << "\n";
    }
    write_output(a.out, text.str(), out);
    return res.feasible || !a.expect_feasible ? 0 : 1;
}

void emit_reduction(const ReductionResult& red, const std::string& out_path,
                    std::ostream& out, std::ostream& err) {
    for (const auto& w : red.warnings) err << "warning: " << w << "\n";
    write_output(out_path, serialize_instance(red.instance), out);
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> values;
    std::string tok;
    std::istringstream ss(text);
    std::string normalized = text;
    for (char& c : normalized)
        if (c == ',') c = ' ';
    std::istringstream ns(normalized);
    while (ns >> tok) {
        try {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            values.push_back(v);
        } catch (const std::exception&) {
            throw Error(std::string("invalid ") + what + " '" + tok + "'");
        }
    }
    if (values.empty()) throw Error(std::string("empty ") + what + " list");
    return values;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos)
        throw Error("invalid range '" + text + "': expected <lo>..<hi>");
    int lo, hi;
    try {
        size_t pos = 0;
        lo = std::stoi(text.substr(0, dots), &pos);
        if (pos != dots) throw std::invalid_argument(text);
        std::string rest = text.substr(dots + 2);
        hi = std::stoi(rest, &pos);
        if (pos != rest.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
        throw Error("invalid range '" + text + "': expected <lo>..<hi>");
    }
    if (lo > hi) throw Error("invalid range '" + text + "': lo exceeds hi");
    return {lo, hi};
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            if (!cur.empty()) parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    return parts;
}

// Articles and citations in the instance-file directives (`article`, `cite`).
void parse_arcs_file(std::istream& in, std::vector<std::string>* ids,
                     std::vector<std::pair<std::string, std::string>>* arcs) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string head;
        if (!(ss >> head) || head[0] == '#') continue;
        auto fail = [&](const std::string& msg) {
            throw ParseError("arcs line " + std::to_string(lineno) + ": " + msg);
        };
        if (head == "article") {
            std::string id, extra;
            if (!(ss >> id) || (ss >> extra)) fail("expected 'article <id>'");
            ids->push_back(id);
        } else if (head == "cite") {
            std::string src, dst, extra;
            if (!(ss >> src >> dst) || (ss >> extra))
                fail("expected 'cite <citing> <cited>'");
            arcs->emplace_back(src, dst);
        } else {
            fail("unknown directive '" + head + "'");
        }
    }
}

struct GenArgs {
    std::string titles, arcs, threshold;
    bool random = false;
    int articles = 12, external = 12;
    double density = 0.15, merge_rate = 0.5;
    std::uint64_t seed = 1;
    std::string problem = "atomizing", variant = "plain", measure = "union";
    int h = 0;
    std::optional<int> k;
    std::string out;
};

ProblemInstance generate_instance(const GenArgs& a) {
    Operation op = parse_operation_name(a.problem);
    Variant variant = parse_variant_name(a.variant);
    Measure measure = parse_measure_name(a.measure);
    if (a.random) {
        GeneratedProfile gp = random_profile(a.articles, a.external, a.density,
                                             a.merge_rate, a.seed);
        CitationGraph graph(gp.ids, gp.arcs);
        Profile profile(graph, gp.owned, gp.parts);
        return ProblemInstance::make(std::move(graph), std::move(profile), op,
                                     variant, measure, a.h, a.k);
    }
    if (a.titles.empty() || a.threshold.empty())
        throw Error("gen requires --titles and --threshold (or --random)");
    auto tf = open_input(a.titles);
    std::vector<TitledArticle> titled = parse_titles(tf);
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> arcs;
    for (const auto& t : titled) ids.push_back(t.id);
    if (!a.arcs.empty()) {
        auto af = open_input(a.arcs);
        parse_arcs_file(af, &ids, &arcs);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    Rational t = Rational::parse(a.threshold);
    UndirectedGraph compat = compatibility_graph(titled, t);
    std::vector<std::vector<std::string>> parts;
    for (const auto& clique : greedy_merge(compat)) {
        std::vector<std::string> part;
        for (int v : clique) part.push_back(titled[v - 1].id);
        parts.push_back(std::move(part));
    }
    std::vector<std::string> owned;
    for (const auto& art : titled) owned.push_back(art.id);

    CitationGraph graph(ids, arcs);
    Profile profile(graph, owned, parts);
    return ProblemInstance::make(std::move(graph), std::move(profile), op,
                                 variant, measure, a.h, a.k);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"Exact solvers for raising an h-index by splitting merged "
                 "articles in a citation profile"};
    app.require_subcommand(1);
    // --h is a domain option (target h-index), so help must not claim -h.
    app.set_help_flag("--help", "print help and exit");

    SolveArgs solve_args;
    auto add_solve_options = [&](CLI::App* cmd) {
        cmd->set_help_flag("--help", "print help and exit");
        cmd->add_option("--in", solve_args.in, "instance file")->required();
        cmd->add_option("--out", solve_args.out, "write the report here");
        cmd->add_flag("--expect-feasible", solve_args.expect_feasible,
                      "exit 1 when the instance is infeasible");
        cmd->add_option("--problem", solve_args.problem,
                        "override the instance's operation");
        cmd->add_option("--variant", solve_args.variant,
                        "override the instance's variant");
        cmd->add_option("--measure", solve_args.measure,
                        "override the instance's measure");
        cmd->add_option("--h", solve_args.h, "override the target h");
        cmd->add_option("--k", solve_args.k, "override the budget k");
    };
    auto subcommand = [](CLI::App* parent, const char* name, const char* desc) {
        CLI::App* cmd = parent->add_subcommand(name, desc);
        cmd->set_help_flag("--help", "print help and exit");
        return cmd;
    };
    CLI::App* solve_cmd = subcommand(&app, "solve", "Solve an instance exactly");
    add_solve_options(solve_cmd);
    CLI::App* oracle_cmd = subcommand(
        &app, "oracle", "Solve an instance by exhaustive enumeration");
    add_solve_options(oracle_cmd);

    CLI::App* reduce_cmd = subcommand(
        &app, "reduce", "Generate an instance from a classical hard problem");
    reduce_cmd->require_subcommand(1);
    std::string red_sizes, red_in, red_out, red_problem = "atomizing";
    int red_bins = 0, red_capacity = 0, red_k = 0;
    CLI::App* bp_cmd =
        subcommand(reduce_cmd, "binpacking", "items -> cautious dividing");
    bp_cmd->add_option("--sizes", red_sizes, "item sizes, e.g. 3,2,2,1");
    bp_cmd->add_option("--bins", red_bins, "number of bins");
    bp_cmd->add_option("--capacity", red_capacity, "bin capacity");
    bp_cmd->add_option("--in", red_in, "sizes/bins/capacity file");
    bp_cmd->add_option("--out", red_out, "instance output file");
    CLI::App* sat_cmd =
        subcommand(reduce_cmd, "3sat", "DIMACS cnf -> plain atomizing");
    sat_cmd->add_option("--in", red_in, "DIMACS cnf file")->required();
    sat_cmd->add_option("--out", red_out, "instance output file");
    CLI::App* clique_cmd = subcommand(
        reduce_cmd, "clique", "graph + k -> conservative atomizing");
    clique_cmd->add_option("--in", red_in, "edge list or DIMACS graph file")
        ->required();
    clique_cmd->add_option("--k", red_k, "clique size")->required();
    clique_cmd->add_option("--problem", red_problem,
                           "target operation (atomizing|extracting|dividing)");
    clique_cmd->add_option("--out", red_out, "instance output file");

    GenArgs gen_args;
    CLI::App* gen_cmd =
        subcommand(&app, "gen", "Generate a merged-profile instance");
    gen_cmd->add_option("--titles", gen_args.titles, "<id>\\t<title> lines");
    gen_cmd->add_option("--arcs", gen_args.arcs,
                        "article/cite lines with the citation arcs");
    gen_cmd->add_option("--threshold", gen_args.threshold,
                        "compatibility threshold in [0,1]");
    gen_cmd->add_flag("--random", gen_args.random,
                      "generate a seeded random profile instead");
    gen_cmd->add_option("--articles", gen_args.articles, "owned article count");
    gen_cmd->add_option("--external", gen_args.external, "external citer count");
    gen_cmd->add_option("--density", gen_args.density, "arc probability");
    gen_cmd->add_option("--merge-rate", gen_args.merge_rate,
                        "probability of joining an existing part");
    gen_cmd->add_option("--seed", gen_args.seed, "random seed");
    gen_cmd->add_option("--problem", gen_args.problem, "operation tag");
    gen_cmd->add_option("--variant", gen_args.variant, "variant tag");
    gen_cmd->add_option("--measure", gen_args.measure, "measure tag");
    gen_cmd->add_option("--h", gen_args.h, "target h");
    gen_cmd->add_option("--k", gen_args.k, "budget k");
    gen_cmd->add_option("--out", gen_args.out, "instance output file");

    ExperimentConfig exp_config;
    std::string exp_sweep_t = "0.3,0.5,0.7", exp_sweep_k = "0..3", exp_out;
    CLI::App* exp_cmd = subcommand(
        &app, "experiment", "Threshold/budget sweep over synthetic profiles (CSV)");
    exp_cmd->add_option("--profiles", exp_config.profiles, "profile count");
    exp_cmd->add_option("--articles", exp_config.articles,
                        "owned articles per profile");
    exp_cmd->add_option("--external", exp_config.external,
                        "external citers per profile");
    exp_cmd->add_option("--density", exp_config.arc_density, "arc probability");
    exp_cmd->add_option("--seed", exp_config.seed, "random seed");
    exp_cmd->add_option("--sweep-t", exp_sweep_t, "thresholds, e.g. 0.3,0.5");
    exp_cmd->add_option("--sweep-k", exp_sweep_k, "budget range, e.g. 0..3");
    exp_cmd->add_option("--out", exp_out, "CSV output file");

    std::vector<const char*> argv;
    argv.push_back("hsplit");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve_cmd->parsed() || oracle_cmd->parsed()) {
            ProblemInstance inst = load_instance(solve_args);
            SolveResult res =
                solve_cmd->parsed() ? solve(inst) : oracle_solve(inst);
            return report_solution(inst, res, solve_args, out);
        }
        if (bp_cmd->parsed()) {
            BinPacking bp;
            if (!red_in.empty()) {
                auto f = open_input(red_in);
                bp = parse_bin_packing(f);
            } else {
                if (red_sizes.empty() || red_bins <= 0 || red_capacity <= 0)
                    throw Error(
                        "reduce binpacking needs --sizes, --bins and "
                        "--capacity (or --in)");
                bp.sizes = parse_int_list(red_sizes, "item size");
                bp.bins = red_bins;
                bp.capacity = red_capacity;
            }
            emit_reduction(reduce_bin_packing(bp), red_out, out, err);
            return 0;
        }
        if (sat_cmd->parsed()) {
            auto f = open_input(red_in);
            emit_reduction(reduce_three_sat(parse_cnf(f)), red_out, out, err);
            return 0;
        }
        if (clique_cmd->parsed()) {
            auto f = open_input(red_in);
            UndirectedGraph g = parse_undirected(f);
            emit_reduction(
                reduce_clique(g, red_k, parse_operation_name(red_problem)),
                red_out, out, err);
            return 0;
        }
        if (gen_cmd->parsed()) {
            ProblemInstance inst = generate_instance(gen_args);
            write_output(gen_args.out, serialize_instance(inst), out);
            return 0;
        }
        if (exp_cmd->parsed()) {
            exp_config.thresholds = split_list(exp_sweep_t);
            if (exp_config.thresholds.empty())
                throw Error("empty --sweep-t list");
            auto [lo, hi] = parse_range(exp_sweep_k);
            if (lo < 0) throw Error("--sweep-k budgets must be non-negative");
            exp_config.k_lo = lo;
            exp_config.k_hi = hi;
            std::ostringstream csv;
            write_csv(csv, run_experiment(exp_config));
            write_output(exp_out, csv.str(), out);
            return 0;
        }
        throw Error("no subcommand selected");
    } catch (const BoundExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace hsplit
