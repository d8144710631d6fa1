// evident: command-line front end.
//
//   evident run <scenario.json> [--out trace.csv] [--window S] [--format csv|table]
//   evident combine <masses.json> [--threshold T]
//   evident route <query.json> <sources.json> [--threshold T]
//
// Exit codes: 0 success, 1 validation error, 2 I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "evident/decision.hpp"
#include "evident/error.hpp"
#include "evident/router.hpp"
#include "evident/scenario.hpp"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw evident::Error(evident::ErrorCode::Io, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw evident::Error(evident::ErrorCode::Io, "cannot read '" + path + "'");
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw evident::Error(evident::ErrorCode::Io, "cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw evident::Error(evident::ErrorCode::Io, "cannot write '" + path + "'");
}

struct RunOptions {
    std::string scenario_path;
    std::string out_path;
    std::string format = "csv";
    std::optional<double> window;
    std::optional<double> step;
    std::optional<double> discount_rate;
    std::optional<double> conflict_threshold;
};

int cmd_run(const RunOptions& opts) {
    auto scenario = evident::load_scenario(read_file(opts.scenario_path));
    if (opts.window) scenario.window = *opts.window;
    if (opts.step) scenario.step = *opts.step;
    if (opts.discount_rate) scenario.discount_rate = *opts.discount_rate;
    if (opts.conflict_threshold) scenario.conflict_threshold = *opts.conflict_threshold;
    evident::validate(scenario);

    const auto format = opts.format == "table" ? evident::TraceFormat::Table : evident::TraceFormat::Csv;
    const auto text = evident::emit_trace(evident::run_scenario(scenario), format);
    if (opts.out_path.empty()) {
        std::cout << text;
    } else {
        write_file(opts.out_path, text);
    }
    return 0;
}

int cmd_combine(const std::string& path, double threshold) {
    const auto bundle = evident::parse_masses(read_file(path));
    const auto report = evident::combine_all(bundle.masses);
    const auto decision = evident::decide(report, threshold);
    const auto& frame = bundle.frame;
    using evident::format_real;

    std::cout << "conflict " << format_real(report.conflict) << '\n';
    std::cout << "focal,mass\n";
    for (const auto& focal : report.result.focals()) {
        std::cout << frame.describe(focal.proposition) << ',' << format_real(focal.mass) << '\n';
    }
    std::cout << "atom,bel,pl\n";
    for (std::size_t i = 0; i < frame.size(); ++i) {
        const auto iv = evident::interval(report.result, frame.singleton(i));
        std::cout << frame.atom(i) << ',' << format_real(iv.support) << ',' << format_real(iv.plausibility) << '\n';
    }
    std::cout << "decision " << evident::status_label(decision);
    if (decision.hypothesis) std::cout << ' ' << *decision.hypothesis;
    std::cout << '\n';
    return 0;
}

int cmd_route(const std::string& query_path, const std::string& sources_path, double threshold) {
    const auto query = evident::parse_query(read_file(query_path));
    const auto sources = evident::parse_sources(read_file(sources_path));
    using evident::format_real;

    const auto shortlist = evident::poll(query, sources, threshold);
    std::cout << "query " << query.to_string() << '\n';
    std::cout << "shortlist " << shortlist.size() << " of " << sources.size() << '\n';
    for (const auto& polled : shortlist) {
        std::cout << "  " << polled.id << " [" << format_real(polled.interval.support) << ", "
                  << format_real(polled.interval.plausibility) << "]\n";
    }
    if (shortlist.empty()) {
        std::cout << "plan none\n";
        return 0;
    }

    std::vector<evident::SourceDescriptor> candidates;
    for (const auto& polled : shortlist) {
        for (const auto& s : sources) {
            if (s.id == polled.id) candidates.push_back(s);
        }
    }
    const auto plan = evident::decompose(query, candidates);
    std::cout << "plan\n";
    for (const auto& a : plan.assignments) {
        std::cout << "  " << a.fragment.to_string() << " -> " << a.source_id << " support " << format_real(a.support)
                  << '\n';
    }
    for (const auto& u : plan.unassigned) std::cout << "  " << u.to_string() << " -> unassigned\n";
    std::cout << "total_support " << format_real(plan.total_support) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Evidential reasoning: scenario replay, evidence combination and source routing"};
    app.require_subcommand(1);

    RunOptions run_opts;
    auto* run = app.add_subcommand("run", "Replay a sensor scenario and print its trace");
    run->add_option("scenario", run_opts.scenario_path, "Scenario JSON file")->required();
    run->add_option("--out", run_opts.out_path, "Write the trace here instead of stdout");
    run->add_option("--window", run_opts.window, "Fusion window in seconds");
    run->add_option("--step", run_opts.step, "Step between trace rows in seconds");
    run->add_option("--discount-rate", run_opts.discount_rate, "Per-second evidence retention in [0, 1]");
    run->add_option("--conflict-threshold", run_opts.conflict_threshold, "Cumulative conflict that flags a row");
    run->add_option("--format", run_opts.format, "csv or table")->check(CLI::IsMember({"csv", "table"}));

    std::string masses_path;
    double combine_threshold = evident::kDefaultConflictThreshold;
    auto* combine = app.add_subcommand("combine", "Combine mass functions and print the result");
    combine->add_option("masses", masses_path, "Masses JSON file")->required();
    combine->add_option("--threshold", combine_threshold, "Conflict threshold for the decision");

    std::string query_path;
    std::string sources_path;
    double route_threshold = evident::kDefaultPollThreshold;
    auto* route = app.add_subcommand("route", "Poll sources for a query and decompose it");
    route->add_option("query", query_path, "Query JSON file")->required();
    route->add_option("sources", sources_path, "Sources JSON file")->required();
    route->add_option("--threshold", route_threshold, "Plausibility cut for polling");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitValidation;
    }

    try {
        if (run->parsed()) return cmd_run(run_opts);
        if (combine->parsed()) return cmd_combine(masses_path, combine_threshold);
        if (route->parsed()) return cmd_route(query_path, sources_path, route_threshold);
    } catch (const evident::Error& e) {
        std::cerr << "evident: " << e.what() << '\n';
        return e.code() == evident::ErrorCode::Io ? kExitIo : kExitValidation;
    }
    return kExitValidation;
}
