#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tqcube/broadcast.hpp"
#include "tqcube/construction.hpp"
#include "tqcube/io.hpp"
#include "tqcube/topology.hpp"
#include "tqcube/verification.hpp"

namespace tqcube::cli {

namespace {

struct Options {
    int n = 0;
    std::string kind;
    std::string format;
    std::string out_path;
    std::string input_path;
    std::string report_path;
    std::string question;
    std::string start;
    std::string end;
    std::string rings;
    std::size_t limit = 1;
    bool stream = false;
    int jobs = 1;
    int max_n_flag = 0;
    bool max_n_given = false;
};

int resolve_cap(const Options& opt, int fallback) {
    if (opt.max_n_given) {
        return opt.max_n_flag;
    }
    if (const char* env = std::getenv("TQTOOL_MAX_N")) {
        char* tail = nullptr;
        const long value = std::strtol(env, &tail, 10);
        if (tail == env || *tail != '\0' || value < 1 || value > kMaxDimension) {
            throw ArgumentError(std::string("TQTOOL_MAX_N is not a usable cap: '") + env + "'");
        }
        return static_cast<int>(value);
    }
    return fallback;
}

// Writes either to --out or to standard output.
class OutputTarget {
public:
    OutputTarget(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) {
                throw ArgumentError("cannot open output file '" + path + "'");
            }
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }
    void finish(const std::string& path) {
        if (file_.is_open()) {
            file_.flush();
            if (!file_) {
                throw ArgumentError("failed writing output file '" + path + "'");
            }
        }
    }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ArgumentError("cannot read input file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void render_report(std::ostream& os, const VerificationReport& rep) {
    os << "subject: " << rep.subject << '\n';
    for (const CheckResult& c : rep.checks) {
        os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << ": " << c.detail << '\n';
    }
    os << "overall: " << (rep.overall() ? "PASS" : "FAIL") << '\n';
}

void print_path_text(std::ostream& os, const std::vector<NodeLabel>& nodes, Dimension n) {
    for (NodeLabel b : nodes) {
        os << label_to_string(b, n) << '\n';
    }
}

int cmd_graph(const Options& opt, std::ostream& out) {
    const Dimension n(opt.n);
    const int cap = resolve_cap(opt, kDefaultEnumerationCap);
    const std::string format = opt.format.empty() ? "dot" : opt.format;
    OutputTarget target(opt.out_path, out);
    if (!opt.rings.empty() && format != "dot") {
        throw ArgumentError("--rings only applies to the dot format");
    }
    if (format == "dot") {
        if (!opt.rings.empty()) {
            const PairKind kind = pair_kind_from_string(opt.rings);
            const CyclePair pair = kind == PairKind::edge_disjoint_hamiltonian
                                       ? edh_cycles(n, cap)
                                       : ndc_cycles(n, cap);
            export_dot(target.stream(), n, &pair.p, &pair.q, cap);
        } else {
            export_dot(target.stream(), n, nullptr, nullptr, cap);
        }
    } else if (format == "edgelist") {
        export_edgelist(target.stream(), n, cap);
    } else {
        export_graph_json(target.stream(), n, cap);
    }
    target.finish(opt.out_path);
    return 0;
}

int cmd_cycles(const Options& opt, std::ostream& out) {
    const Dimension n(opt.n);
    const PairKind kind = pair_kind_from_string(opt.kind);
    const int cap = resolve_cap(opt, kDefaultEnumerationCap);
    std::string format = opt.format;
    if (opt.stream) {
        if (format == "json") {
            throw ArgumentError("--stream emits text only; JSON would require materialization");
        }
        format = "text";
    } else if (format.empty()) {
        format = "json";
    }
    OutputTarget target(opt.out_path, out);
    if (opt.stream) {
        for (PathId which : {PathId::P, PathId::Q}) {
            if (which == PathId::Q) {
                target.stream() << '\n';
            }
            PathStream stream(n, kind, which);
            while (const auto b = stream.next()) {
                target.stream() << label_to_string(*b, n) << '\n';
            }
        }
    } else {
        const CyclePair pair =
            kind == PairKind::edge_disjoint_hamiltonian ? edh_cycles(n, cap) : ndc_cycles(n, cap);
        if (format == "json") {
            target.stream() << export_cycles(cycle_document(pair, kind));
        } else {
            print_path_text(target.stream(), pair.p.nodes, n);
            target.stream() << '\n';
            print_path_text(target.stream(), pair.q.nodes, n);
        }
    }
    target.finish(opt.out_path);
    return 0;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    const Dimension n(opt.n);
    const PairKind kind = pair_kind_from_string(opt.kind);
    const int cap = resolve_cap(opt, kDefaultEnumerationCap);

    CyclePair pair = [&] {
        if (opt.input_path.empty()) {
            return kind == PairKind::edge_disjoint_hamiltonian ? edh_cycles(n, cap)
                                                               : ndc_cycles(n, cap);
        }
        const CycleDocument doc = import_cycles(read_file(opt.input_path));
        if (doc.n != n) {
            throw ArgumentError("input document has n=" + std::to_string(doc.n.value()) +
                                ", but --n is " + std::to_string(n.value()));
        }
        if (doc.kind != kind) {
            throw ArgumentError(std::string("input document has kind '") +
                                std::string(to_string(doc.kind)) + "', but --kind is '" +
                                opt.kind + "'");
        }
        return CyclePair{Cycle{n, doc.cycles[0]}, Cycle{n, doc.cycles[1]}};
    }();

    std::vector<VerificationReport> reports;
    if (kind == PairKind::edge_disjoint_hamiltonian) {
        reports.push_back(verify_hamiltonian_cycle(pair.p, cap, opt.jobs));
        reports.push_back(verify_hamiltonian_cycle(pair.q, cap, opt.jobs));
        reports.push_back(verify_edge_disjoint(pair.p, pair.q));
    } else {
        reports.push_back(verify_cycle(pair.p, cap, opt.jobs));
        reports.push_back(verify_cycle(pair.q, cap, opt.jobs));
        reports.push_back(verify_equal_node_disjoint(pair.p, pair.q, n, cap));
    }

    bool all_pass = true;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i > 0) {
            out << '\n';
        }
        render_report(out, reports[i]);
        all_pass = all_pass && reports[i].overall();
    }
    out << "\nverdict: " << (all_pass ? "PASS" : "FAIL") << '\n';
    return all_pass ? 0 : 1;
}

int cmd_oracle(const Options& opt, std::ostream& out) {
    const Dimension n(opt.n);
    if (opt.question == "edh-pair") {
        const OracleEdhAnswer answer = oracle_edh_pair_exists(n);
        out << "question: two edge-disjoint Hamiltonian cycles in TQ_" << n.value() << "?\n";
        for (const std::string& note : answer.notes) {
            out << "  " << note << '\n';
        }
        out << "answer: " << (answer.exists ? "true" : "false") << '\n';
        return 0;
    }
    // ham-path
    if (opt.start.empty() || opt.end.empty()) {
        throw ArgumentError("--question ham-path requires --start and --end node strings");
    }
    const NodeLabel start = parse_label(opt.start, n);
    const NodeLabel end = parse_label(opt.end, n);
    const std::vector<Path> paths = oracle_find_hamiltonian_paths(n, start, end, opt.limit);
    out << "question: Hamiltonian paths " << opt.start << " -> " << opt.end << " in TQ_"
        << n.value() << " (limit " << opt.limit << ")\n";
    out << "found: " << paths.size() << '\n';
    for (const Path& p : paths) {
        out << '\n';
        print_path_text(out, p.nodes, n);
    }
    return 0;
}

int cmd_broadcast(const Options& opt, std::ostream& out) {
    const Dimension n(opt.n);
    const PairKind kind = pair_kind_from_string(opt.kind);
    const int build_cap = resolve_cap(opt, kDefaultEnumerationCap);
    const int sim_cap = resolve_cap(opt, kDefaultSimulationCap);

    const CyclePair pair = kind == PairKind::edge_disjoint_hamiltonian
                               ? edh_cycles(n, build_cap)
                               : ndc_cycles(n, build_cap);
    // Two edge-disjoint Hamiltonian rings split every payload in halves; the
    // node-disjoint rings run two independent whole broadcasts.
    const MessageShare share = kind == PairKind::edge_disjoint_hamiltonian ? MessageShare::half
                                                                           : MessageShare::whole;
    const std::vector<RingSchedule> schedules = {
        RingSchedule{pair.p, RingDirection::forward, share},
        RingSchedule{pair.q, RingDirection::forward, share},
    };
    const LinkLoadReport report = simulate_all_to_all(schedules, sim_cap);

    out << "rings: " << report.rings.size() << '\n';
    for (std::size_t i = 0; i < report.rings.size(); ++i) {
        const RingOutcome& r = report.rings[i];
        out << "ring " << i << ": length=" << r.length << " steps=" << r.steps << " direction="
            << (r.direction == RingDirection::forward ? "forward" : "backward")
            << " share=" << (r.share == MessageShare::whole ? "whole" : "half");
        if (r.payload_half >= 0) {
            out << " payload_half=" << r.payload_half;
        }
        out << " complete=" << (r.complete ? "true" : "false") << '\n';
    }
    out << "steps: " << report.steps << '\n';
    out << "contention_edges: " << report.contention_edges << '\n';
    std::uint64_t load_min = 0;
    std::uint64_t load_max = 0;
    if (!report.directed_load.empty()) {
        load_min = UINT64_MAX;
        for (const auto& [edge, messages] : report.directed_load) {
            load_min = std::min(load_min, messages);
            load_max = std::max(load_max, messages);
        }
    }
    out << "directed_edges_used: " << report.directed_load.size() << '\n';
    out << "per_edge_messages_min: " << load_min << '\n';
    out << "per_edge_messages_max: " << load_max << '\n';

    if (!opt.report_path.empty()) {
        std::ofstream file(opt.report_path, std::ios::binary);
        if (!file) {
            throw ArgumentError("cannot open report file '" + opt.report_path + "'");
        }
        file << export_load_report(report);
        if (!file.good()) {
            throw ArgumentError("failed writing report file '" + opt.report_path + "'");
        }
    }

    const bool all_complete = std::all_of(report.rings.begin(), report.rings.end(),
                                          [](const RingOutcome& r) { return r.complete; });
    return all_complete && report.contention_edges == 0 ? 0 : 1;
}

int cmd_stats(const Options& opt, std::ostream& out) {
    const Dimension n(opt.n);
    const GraphStats stats = graph_stats(n, resolve_cap(opt, kDefaultEnumerationCap));
    out << "nodes=" << stats.node_count << " edges=" << stats.edge_count
        << " regular=" << (stats.is_regular ? "true" : "false") << " degree=" << stats.degree
        << '\n';
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"twisted cube topology, cycle construction, verification and broadcast tool"};
    app.name("tqtool");
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    auto* max_n_opt =
        app.add_option("--max-n", opt.max_n_flag, "override the enumeration/simulation cap")
            ->check(CLI::Range(1, kMaxDimension));
    app.add_option("--jobs", opt.jobs, "worker threads for verification scans")
        ->check(CLI::Range(1, 256));

    CLI::App* graph = app.add_subcommand("graph", "export the whole graph");
    graph->add_option("--n", opt.n, "dimension (odd)")->required();
    graph->add_option("--format", opt.format, "dot|edgelist|json")
        ->check(CLI::IsMember({"dot", "edgelist", "json"}));
    graph->add_option("--out", opt.out_path, "write to file instead of standard output");
    graph->add_option("--rings", opt.rings, "attribute the edh|ndc cycle pair in dot output")
        ->check(CLI::IsMember({"edh", "ndc"}));

    CLI::App* cycles = app.add_subcommand("cycles", "construct the cycle pair");
    cycles->add_option("--n", opt.n, "dimension (odd)")->required();
    cycles->add_option("--kind", opt.kind, "edh|ndc")
        ->required()
        ->check(CLI::IsMember({"edh", "ndc"}));
    cycles->add_option("--format", opt.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    cycles->add_flag("--stream", opt.stream, "constant-memory streaming output (text)");
    cycles->add_option("--out", opt.out_path, "write to file instead of standard output");

    CLI::App* verify = app.add_subcommand("verify", "verify a constructed or imported pair");
    verify->add_option("--n", opt.n, "dimension (odd)")->required();
    verify->add_option("--kind", opt.kind, "edh|ndc")
        ->required()
        ->check(CLI::IsMember({"edh", "ndc"}));
    verify->add_option("--input", opt.input_path, "cycle-document JSON to verify");

    CLI::App* oracle = app.add_subcommand("oracle", "small-dimension search oracle");
    oracle->add_option("--n", opt.n, "dimension (3 or 5)")->required();
    oracle->add_option("--question", opt.question, "edh-pair|ham-path")
        ->required()
        ->check(CLI::IsMember({"edh-pair", "ham-path"}));
    oracle->add_option("--start", opt.start, "start node string (ham-path)");
    oracle->add_option("--end", opt.end, "end node string (ham-path)");
    oracle->add_option("--limit", opt.limit, "maximum number of paths")->check(CLI::Range(1, 1000000));

    CLI::App* broadcast = app.add_subcommand("broadcast", "simulate all-to-all over the pair");
    broadcast->add_option("--n", opt.n, "dimension (odd)")->required();
    broadcast->add_option("--kind", opt.kind, "edh|ndc")
        ->required()
        ->check(CLI::IsMember({"edh", "ndc"}));
    broadcast->add_option("--report", opt.report_path, "write the JSON link-load report here");

    CLI::App* stats = app.add_subcommand("stats", "node/edge counts and regularity");
    stats->add_option("--n", opt.n, "dimension (odd)")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    opt.max_n_given = max_n_opt->count() > 0;

    try {
        if (graph->parsed()) {
            return cmd_graph(opt, out);
        }
        if (cycles->parsed()) {
            return cmd_cycles(opt, out);
        }
        if (verify->parsed()) {
            return cmd_verify(opt, out);
        }
        if (oracle->parsed()) {
            return cmd_oracle(opt, out);
        }
        if (broadcast->parsed()) {
            return cmd_broadcast(opt, out);
        }
        if (stats->parsed()) {
            return cmd_stats(opt, out);
        }
        err << "error: no subcommand selected\n";
        return 2;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace tqcube::cli
