#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <iomanip>
#include <fstream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "sparsedom/domset.hpp"
#include "sparsedom/errors.hpp"
#include "sparsedom/fixtures.hpp"
#include "sparsedom/io.hpp"
#include "sparsedom/partition.hpp"

namespace sparsedom::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Bad paths, missing flags and similar mistakes on the caller's side.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::vector<std::string> graphs;
    std::string algo;
    Radius r = 1;
    std::uint64_t seed = 0;
    std::string output;
    std::string report_path;
    unsigned jobs = 1;
    bool lcc = false;
    std::string landmarks;
    std::uint64_t budget = BranchOptions{}.budget;
    std::string domset;
    std::string perfect_code;
    std::string partition;
    std::string model;

    std::string fixture;
    std::string landmarks_out;
    std::size_t n = 10;
    std::size_t m = 0;
    std::size_t k = 3;
    std::size_t ell = 3;
    std::size_t rows = 4;
    std::size_t cols = 4;
    std::size_t q = 1;
    std::size_t vars = 1;
    std::string sets;
    std::string clauses;
};

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << v;
    return out.str();
}

Json rational(const Rational& r) {
    return Json{{"num", r.numerator()}, {"den", r.denominator()}, {"approx", to_double(r)}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    return out;
}

struct Input {
    std::string path;
    Graph graph;
    Json fingerprint;
};

Input load_input(const std::string& path, bool lcc) {
    std::string bytes = read_file(path);
    std::istringstream in(bytes);
    ParseReport parse;
    Input input{path, load_edge_list(in, &parse), {}};
    input.fingerprint = Json{{"path", path},
                             {"n", input.graph.num_vertices()},
                             {"m", input.graph.num_edges()},
                             {"fnv1a64", hex64(fnv1a(bytes))},
                             {"duplicate_edges", parse.duplicate_edges},
                             {"self_loops", parse.self_loops}};
    if (lcc) {
        input.graph = largest_component(input.graph);
        input.fingerprint["lcc"] = Json{{"n", input.graph.num_vertices()}, {"m", input.graph.num_edges()}};
    }
    return input;
}

std::vector<std::string> labels(const Graph& g, std::span<const Vertex> vs) {
    std::vector<std::string> out;
    out.reserve(vs.size());
    for (Vertex v : vs) out.push_back(g.label(v));
    return out;
}

// ---------------------------------------------------------------------------
// domset

bool is_brute(const std::string& algo) { return algo.rfind("brute-", 0) == 0; }

Json run_domset_one(const Options& o, const std::string& path, const std::string& output) {
    Input input = load_input(path, o.lcc);
    const Graph& g = input.graph;
    auto t0 = Clock::now();
    DominatorSet d;
    if (o.algo == "brute-mds") {
        d = brute_force_mds(g, o.r);
    } else if (o.algo == "brute-mcds") {
        d = brute_force_mcds(g, o.r);
    } else {
        d = greedy_dominate(g, o.r, GreedyConfig::named(o.algo, o.seed));
    }
    double runtime = ms_since(t0);

    Json stats{{"algorithm", o.algo},
               {"r", o.r},
               {"seed", o.seed},
               {"size", d.size()},
               {"avg_congestion_num", d.avg_congestion.numerator()},
               {"avg_congestion_den", d.avg_congestion.denominator()},
               {"avg_congestion", rational(d.avg_congestion)},
               {"runtime_ms", runtime}};
    Json result{{"input", input.fingerprint}, {"stats", stats}};
    if (!output.empty()) {
        auto file = open_output(output);
        write_vertex_set(g, d.members, file);
        open_output(output + ".json") << stats.dump(2) << '\n';
        result["output"] = output;
    } else {
        result["members"] = labels(g, d.members);
    }
    return result;
}

int cmd_domset(const Options& o, Json& report) {
    if (o.r == 0) throw UsageError("-r must be at least 1");
    report["config"] = Json{{"algorithm", o.algo}, {"r", o.r}, {"seed", o.seed}, {"lcc", o.lcc},
                            {"jobs", o.jobs}, {"output", o.output}};
    if (is_brute(o.algo)) report["config"]["brute_force_limit"] = default_brute_force_limit();

    const std::size_t count = o.graphs.size();
    std::vector<std::string> outputs(count);
    if (!o.output.empty()) {
        if (count == 1) {
            outputs[0] = o.output;
        } else {
            std::filesystem::create_directories(o.output);
            for (std::size_t i = 0; i < count; ++i) {
                auto stem = std::filesystem::path(o.graphs[i]).stem().string();
                outputs[i] = (std::filesystem::path(o.output) / (stem + ".dom")).string();
            }
        }
    }

    std::vector<Json> results(count);
    std::vector<std::exception_ptr> failures(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < count;) {
            try {
                results[i] = run_domset_one(o, o.graphs[i], outputs[i]);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::min<std::size_t>(o.jobs, count); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    report["results"] = Json::array();
    for (std::size_t i = 0; i < count; ++i) {
        if (failures[i]) std::rethrow_exception(failures[i]);
        report["results"].push_back(std::move(results[i]));
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// partition

Json piece_stats_json(const PieceStats& s) {
    return Json{{"num_pieces", s.sizes.size()},
                {"sizes", s.sizes},
                {"mean", rational(s.mean)},
                {"variance_num", s.variance.numerator()},
                {"variance_den", s.variance.denominator()},
                {"variance", rational(s.variance)},
                {"square_sum", s.square_sum},
                {"stddev", s.stddev},
                {"coefficient_of_variation", s.coefficient_of_variation}};
}

int cmd_partition(const Options& o, Json& report) {
    report["config"] = Json{{"algorithm", o.algo}, {"seed", o.seed}, {"budget", o.budget},
                            {"landmarks", o.landmarks}, {"output", o.output}};
    Input input = load_input(o.graphs.front(), false);
    const Graph& g = input.graph;
    auto landmarks = read_vertex_set_file(g, o.landmarks);
    CompactKernel ck = build_compact_kernel(g, landmarks);

    auto t0 = Clock::now();
    Partition p;
    bool optimal = false;
    Json extra = Json::object();
    if (o.algo == "weight") {
        p = prt_weight(g, landmarks, o.seed);
    } else if (o.algo == "layer") {
        p = prt_layer(g, landmarks);
        optimal = *std::max_element(ck.vertex_layer.begin(), ck.vertex_layer.end()) <= 1;
    } else if (o.algo == "branch") {
        BranchResult br = prt_branch(g, landmarks, {o.budget, o.seed, {}});
        p = std::move(br.partition);
        optimal = br.optimal;
        extra["nodes"] = br.nodes;
    } else {
        p = brute_force_bnp(g, landmarks);
        optimal = true;
    }
    double runtime = ms_since(t0);

    Json stats{{"algorithm", o.algo}, {"seed", o.seed}};
    stats.update(piece_stats_json(piece_stats(p)));
    stats["optimal_flag"] = optimal;
    stats["k"] = ck.multi_choice_bags();
    stats.update(extra);
    stats["runtime_ms"] = runtime;

    Json result{{"input", input.fingerprint}, {"num_landmarks", landmarks.size()}, {"stats", stats}};
    if (!o.output.empty()) {
        auto file = open_output(o.output);
        write_partition(g, p, file);
        open_output(o.output + ".json") << stats.dump(2) << '\n';
        result["output"] = o.output;
    } else {
        Json assignment = Json::object();
        for (Vertex v = 0; v < g.num_vertices(); ++v) assignment[g.label(v)] = g.label(p.landmark_of(v));
        result["assignment"] = std::move(assignment);
    }
    report["results"] = Json::array({result});
    return kOk;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const Options& o, Json& report) {
    int modes = !o.domset.empty() + !o.perfect_code.empty() + !o.partition.empty();
    if (modes != 1) throw UsageError("verify needs exactly one of --domset, --perfect-code, --partition");
    Input input = load_input(o.graphs.front(), false);
    const Graph& g = input.graph;
    Json result{{"input", input.fingerprint}};
    bool ok = false;

    if (!o.partition.empty()) {
        if (o.landmarks.empty()) throw UsageError("--partition requires --landmarks");
        report["config"] = Json{{"check", "partition"}, {"partition", o.partition}, {"landmarks", o.landmarks}};
        auto landmarks = read_vertex_set_file(g, o.landmarks);
        Partition p = read_partition_file(g, landmarks, o.partition);
        PartitionCheck check = verify_partition(g, landmarks, p);
        ok = check.ok;
        if (!ok) {
            result["violation"] = Json{{"kind", violation_name(check.kind)},
                                       {"vertex", g.label(check.vertex)},
                                       {"message", check.message}};
        }
    } else if (!o.domset.empty()) {
        report["config"] = Json{{"check", "r-domination"}, {"domset", o.domset}, {"r", o.r}};
        auto s = read_vertex_set_file(g, o.domset);
        DominationCheck check = verify_r_domination(g, s, o.r);
        ok = check.ok;
        if (!ok) result["violation"] = Json{{"kind", "undominated"}, {"vertex", g.label(*check.witness)}};
    } else {
        report["config"] = Json{{"check", "perfect-code"}, {"domset", o.perfect_code}, {"r", o.r}};
        auto s = read_vertex_set_file(g, o.perfect_code);
        PerfectCodeCheck check = is_perfect_code(g, s, o.r);
        ok = check.ok;
        if (!ok) {
            result["violation"] = Json{{"kind", "congestion"},
                                       {"vertex", g.label(*check.witness)},
                                       {"congestion", check.witness_congestion}};
        }
    }
    result["ok"] = ok;
    report["results"] = Json::array({result});
    return ok ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------------------
// export

int cmd_export(const Options& o, Json& report, std::ostream& out) {
    report["config"] = Json{{"model", o.model}, {"r", o.r}, {"landmarks", o.landmarks}, {"output", o.output}};
    if (o.r == 0) throw UsageError("-r must be at least 1");
    Input input = load_input(o.graphs.front(), false);
    std::string text;
    if (o.model == "bnp-qp") {
        if (o.landmarks.empty()) throw UsageError("--model bnp-qp requires --landmarks");
        text = export_qp(input.graph, read_vertex_set_file(input.graph, o.landmarks));
    } else {
        text = export_ilp(input.graph, o.r, o.model == "mds" ? IlpObjective::size : IlpObjective::congestion);
    }
    Json result{{"input", input.fingerprint}, {"bytes", text.size()}, {"fnv1a64", hex64(fnv1a(text))}};
    if (!o.output.empty()) {
        open_output(o.output) << text;
        result["output"] = o.output;
    } else {
        out << text;
    }
    report["results"] = Json::array({result});
    return kOk;
}

// ---------------------------------------------------------------------------
// stats

int cmd_stats(const Options& o, Json& report) {
    report["config"] = Json{{"r", o.r}, {"domset", o.domset}, {"partition", o.partition}, {"landmarks", o.landmarks}};
    Input input = load_input(o.graphs.front(), false);
    const Graph& g = input.graph;
    Components c = connected_components(g);
    std::size_t largest = c.sizes.empty() ? 0 : *std::max_element(c.sizes.begin(), c.sizes.end());
    Json stats{{"n", g.num_vertices()},
               {"m", g.num_edges()},
               {"min_degree", g.num_vertices() ? g.min_degree() : 0},
               {"max_degree", g.num_vertices() ? g.max_degree() : 0},
               {"avg_degree", rational(g.average_degree())},
               {"components", c.count()},
               {"largest_component", largest}};

    if (!o.domset.empty()) {
        auto s = read_vertex_set_file(g, o.domset);
        stats["domset"] = Json{{"r", o.r},
                               {"size", s.size()},
                               {"avg_congestion", rational(avg_congestion(g, s, o.r))},
                               {"dominates", verify_r_domination(g, s, o.r).ok},
                               {"perfect_code", is_perfect_code(g, s, o.r).ok}};
    }
    if (!o.partition.empty()) {
        if (o.landmarks.empty()) throw UsageError("--partition requires --landmarks");
        auto landmarks = read_vertex_set_file(g, o.landmarks);
        Partition p = read_partition_file(g, landmarks, o.partition);
        Json piece = piece_stats_json(piece_stats(p));
        piece["k"] = build_compact_kernel(g, landmarks).multi_choice_bags();
        PartitionCheck check = verify_partition(g, landmarks, p);
        piece["valid"] = check.ok;
        if (!check.ok) piece["violation"] = check.message;
        stats["partition"] = std::move(piece);
    }
    report["results"] = Json::array({Json{{"input", input.fingerprint}, {"stats", stats}}});
    return kOk;
}

// ---------------------------------------------------------------------------
// generate

std::vector<std::vector<long>> parse_groups(const std::string& text, const char* what) {
    std::vector<std::vector<long>> groups;
    std::istringstream outer(text);
    for (std::string group; std::getline(outer, group, ';');) {
        if (group.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<long> values;
        std::istringstream inner(group);
        for (std::string token; std::getline(inner, token, ',');) {
            try {
                std::size_t used = 0;
                values.push_back(std::stol(token, &used));
                if (token.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(token);
            } catch (const std::logic_error&) {
                throw UsageError(std::string("bad ") + what + " entry '" + token + "'");
            }
        }
        if (values.size() != 3) throw UsageError(std::string(what) + " groups need exactly three entries");
        groups.push_back(std::move(values));
    }
    return groups;
}

int cmd_generate(const Options& o, Json& report, std::ostream& out) {
    report["config"] = Json{{"fixture", o.fixture}, {"seed", o.seed}, {"output", o.output},
                            {"landmarks_out", o.landmarks_out}};
    Json& cfg = report["config"];
    Graph g;
    std::vector<Vertex> landmarks;
    const std::string& f = o.fixture;
    if (f == "fig1-left") {
        g = fixtures::fig1_left();
    } else if (f == "clique-leaves") {
        cfg["ell"] = o.ell;
        g = fixtures::clique_with_leaves(o.ell).graph;
    } else if (f == "biclique-leaves") {
        cfg["k"] = o.k;
        g = fixtures::biclique_with_leaves(o.k).graph;
    } else if (f == "fig3") {
        auto inst = fixtures::fig3();
        g = std::move(inst.graph);
        landmarks = std::move(inst.landmarks);
    } else if (f == "exact-cover") {
        cfg["q"] = o.q;
        cfg["sets"] = o.sets;
        std::vector<std::array<std::uint32_t, 3>> sets;
        for (const auto& s : parse_groups(o.sets, "--sets")) {
            std::array<std::uint32_t, 3> a{};
            for (int i = 0; i < 3; ++i) {
                if (s[i] < 0) throw UsageError("--sets entries must be non-negative");
                a[i] = static_cast<std::uint32_t>(s[i]);
            }
            sets.push_back(a);
        }
        auto inst = fixtures::exact_cover_gadget(o.q, sets);
        g = std::move(inst.graph);
        landmarks = std::move(inst.landmarks);
    } else if (f == "sat") {
        cfg["vars"] = o.vars;
        cfg["clauses"] = o.clauses;
        std::vector<std::array<int, 3>> clauses;
        for (const auto& c : parse_groups(o.clauses, "--clauses")) {
            clauses.push_back({static_cast<int>(c[0]), static_cast<int>(c[1]), static_cast<int>(c[2])});
        }
        auto inst = fixtures::sat_gadget(o.vars, clauses);
        g = std::move(inst.graph);
        landmarks = std::move(inst.landmarks);
    } else if (f == "path" || f == "cycle" || f == "star") {
        cfg["n"] = o.n;
        g = f == "path" ? fixtures::path(o.n) : f == "cycle" ? fixtures::cycle(o.n) : fixtures::star(o.n);
    } else if (f == "grid") {
        cfg["rows"] = o.rows;
        cfg["cols"] = o.cols;
        g = fixtures::grid(o.rows, o.cols);
    } else if (f == "gnm") {
        cfg["n"] = o.n;
        cfg["m"] = o.m;
        g = fixtures::random_gnm(o.n, o.m, o.seed);
    } else {
        cfg["n"] = o.n;
        cfg["m"] = o.m;
        g = fixtures::random_connected(o.n, o.m, o.seed);
    }

    std::ostringstream text;
    write_edge_list(g, text);
    Json result{{"n", g.num_vertices()}, {"m", g.num_edges()}, {"fnv1a64", hex64(fnv1a(text.str()))}};
    if (!o.output.empty()) {
        open_output(o.output) << text.str();
        result["output"] = o.output;
    } else {
        out << text.str();
    }
    if (!o.landmarks_out.empty()) {
        if (landmarks.empty()) throw UsageError("fixture '" + f + "' has no landmark set");
        auto file = open_output(o.landmarks_out);
        write_vertex_set(g, landmarks, file);
        result["landmarks"] = o.landmarks_out;
    }
    report["results"] = Json::array({result});
    return kOk;
}

// ---------------------------------------------------------------------------

void emit_report(const Json& report, const std::string& path, std::ostream& out, std::ostream& err) {
    if (path.empty()) {
        out << report.dump(2) << '\n';
        return;
    }
    std::ofstream file(path);
    if (!file) {
        err << "error: cannot write report '" << path << "'\n";
        return;
    }
    file << report.dump(2) << '\n';
}

const char* status_name(int code) {
    switch (code) {
        case kOk: return "ok";
        case kVerificationFailed: return "verification-failed";
        case kRefused: return "refused";
        default: return "error";
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Sparse r-dominating sets and balanced neighborhood partitions", "sparsedom"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    auto add_report = [&](CLI::App* sub) {
        sub->add_option("--report", o.report_path, "Write the run report here instead of stdout");
    };
    auto add_graph = [&](CLI::App* sub) {
        sub->add_option("graph", o.graphs, "Edge-list file")->required()->expected(1);
    };

    auto* domset = app.add_subcommand("domset", "Compute an r-dominating set");
    domset->add_option("graphs", o.graphs, "Edge-list files")->required();
    domset->add_option("--algo", o.algo, "Algorithm")
        ->required()
        ->check(CLI::IsMember({"degree", "degree+", "ratio", "ratio+", "brute-mds", "brute-mcds"}));
    domset->add_option("-r,--radius", o.r, "Domination radius")->capture_default_str();
    domset->add_option("--seed", o.seed, "Tie-break seed")->capture_default_str();
    domset->add_option("-o,--output", o.output, "Dominator file (a directory when several graphs are given)");
    domset->add_option("--jobs", o.jobs, "Graphs processed in parallel")->check(CLI::PositiveNumber);
    domset->add_flag("--lcc", o.lcc, "Restrict each graph to its largest connected component");
    add_report(domset);

    auto* partition = app.add_subcommand("partition", "Balanced neighborhood partitioning");
    add_graph(partition);
    partition->add_option("--algo", o.algo, "Algorithm")
        ->required()
        ->check(CLI::IsMember({"weight", "layer", "branch", "brute"}));
    partition->add_option("--landmarks", o.landmarks, "Landmark file, one label per line")->required();
    partition->add_option("--seed", o.seed, "Tie-break seed")->capture_default_str();
    partition->add_option("--budget", o.budget, "Node budget for branch")->capture_default_str();
    partition->add_option("-o,--output", o.output, "Assignment file");
    add_report(partition);

    auto* verify = app.add_subcommand("verify", "Check a dominating set, perfect code or partition");
    add_graph(verify);
    verify->add_option("--domset", o.domset, "Vertex-set file to check for r-domination");
    verify->add_option("--perfect-code", o.perfect_code, "Vertex-set file to check for being a perfect code");
    verify->add_option("--partition", o.partition, "Assignment file to check");
    verify->add_option("--landmarks", o.landmarks, "Landmark file for --partition");
    verify->add_option("-r,--radius", o.r, "Radius")->capture_default_str();
    add_report(verify);

    auto* exporter = app.add_subcommand("export", "Write an LP-format model");
    add_graph(exporter);
    exporter->add_option("--model", o.model, "Model kind")->required()->check(CLI::IsMember({"mds", "mac", "bnp-qp"}));
    exporter->add_option("-r,--radius", o.r, "Radius")->capture_default_str();
    exporter->add_option("--landmarks", o.landmarks, "Landmark file for bnp-qp");
    exporter->add_option("-o,--output", o.output, "Model file (stdout if omitted)");
    add_report(exporter);

    auto* stats = app.add_subcommand("stats", "Graph, dominating-set and partition statistics");
    add_graph(stats);
    stats->add_option("--domset", o.domset, "Vertex-set file");
    stats->add_option("-r,--radius", o.r, "Radius for --domset")->capture_default_str();
    stats->add_option("--partition", o.partition, "Assignment file");
    stats->add_option("--landmarks", o.landmarks, "Landmark file for --partition");
    add_report(stats);

    auto* generate = app.add_subcommand("generate", "Write a fixture graph");
    generate->add_option("fixture", o.fixture, "Fixture name")
        ->required()
        ->check(CLI::IsMember({"fig1-left", "clique-leaves", "biclique-leaves", "fig3", "exact-cover", "sat",
                               "path", "cycle", "star", "grid", "gnm", "connected"}));
    generate->add_option("-o,--output", o.output, "Edge-list file (stdout if omitted)");
    generate->add_option("--landmarks-out", o.landmarks_out, "Also write the fixture's landmark set");
    generate->add_option("--n", o.n, "Vertices (path, cycle, gnm, connected) or leaves (star)");
    generate->add_option("--m", o.m, "Edges (gnm) or extra chords (connected)");
    generate->add_option("--k", o.k, "Biclique side size");
    generate->add_option("--ell", o.ell, "Clique size");
    generate->add_option("--rows", o.rows, "Grid rows");
    generate->add_option("--cols", o.cols, "Grid columns");
    generate->add_option("--q", o.q, "Exact cover: elements are 0..3q-1");
    generate->add_option("--sets", o.sets, "Exact cover: triples like '0,1,2;3,4,5'");
    generate->add_option("--vars", o.vars, "Formula: number of variables");
    generate->add_option("--clauses", o.clauses, "Formula: clauses like '1,-2,3;-1,2,2'");
    generate->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    add_report(generate);

    Json report{{"command", args.empty() ? Json() : Json(args.front())}, {"config", Json::object()}};
    auto t0 = Clock::now();
    int code = kOk;
    std::string error;

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        report["status"] = "usage-error";
        report["exit_code"] = static_cast<int>(kUsageError);
        report["error"] = e.what();
        report["wall_ms"] = ms_since(t0);
        emit_report(report, o.report_path, out, err);
        return kUsageError;
    }

    auto* chosen = app.get_subcommands().front();
    report["command"] = chosen->get_name();
    // export and generate without -o own stdout; their report moves to stderr.
    bool payload_on_stdout = (chosen == exporter || chosen == generate) && o.output.empty();
    std::ostream& report_out = payload_on_stdout ? err : out;

    try {
        if (chosen == domset) code = cmd_domset(o, report);
        else if (chosen == partition) code = cmd_partition(o, report);
        else if (chosen == verify) code = cmd_verify(o, report);
        else if (chosen == exporter) code = cmd_export(o, report, out);
        else if (chosen == stats) code = cmd_stats(o, report);
        else code = cmd_generate(o, report, out);
    } catch (const LimitExceeded& e) {
        code = kRefused;
        error = e.what();
    } catch (const std::exception& e) {
        code = kUsageError;
        error = e.what();
    }

    report["status"] = status_name(code);
    report["exit_code"] = code;
    if (!error.empty()) {
        report["error"] = error;
        err << "error: " << error << '\n';
    }
    report["wall_ms"] = ms_since(t0);
    emit_report(report, o.report_path, report_out, err);
    return code;
}

}  // namespace sparsedom::cli
