#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <thread>

#include "corepeel/bench.hpp"
#include "corepeel/io.hpp"
#include "corepeel/kcore.hpp"
#include "corepeel/pdc.hpp"

using json = nlohmann::ordered_json;
using namespace corepeel;

namespace {

void write_out(const std::string& output, const std::string& text) {
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(output);
    if (!f) throw std::runtime_error(output + ": cannot write");
    f << text;
}

json params_json(const PdcParams& p) {
    return {{"q", p.min_size},
            {"delta", p.min_density},
            {"radius", p.radius},
            {"delta_low", p.delta_low()}};
}

json timings_json(const PhaseTimings& t, double per_arc_s) {
    return {{"phase1_s", t.phase1_s},
            {"phase2_s", t.phase2_s},
            {"phase3_s", t.phase3_s},
            {"total_s", t.total_s()},
            {"per_arc_s", per_arc_s}};
}

int cmd_stats(const std::string& input, const std::string& format) {
    Graph g = load_edge_list_file(input);
    std::size_t max_degree = 0;
    for (NodeId v = 0; v < g.node_count(); ++v)
        max_degree = std::max(max_degree, g.degree(v));
    std::uint32_t max_core = 0;
    for (std::uint32_t c : core_decomposition(g)) max_core = std::max(max_core, c);
    double ratio = g.node_count() > 0
                       ? static_cast<double>(g.arc_count()) / static_cast<double>(g.node_count())
                       : 0.0;

    if (format == "tsv") {
        std::cout << "dataset\tnodes\tarcs\tedges\tratio\tmax_degree\tmax_core\n"
                  << input << '\t' << g.node_count() << '\t' << g.arc_count() << '\t'
                  << g.edge_count() << '\t' << ratio << '\t' << max_degree << '\t' << max_core
                  << '\n';
        return 0;
    }
    json out{{"dataset", input},
             {"nodes", g.node_count()},
             {"arcs", g.arc_count()},
             {"edges", g.edge_count()},
             {"ratio", ratio},
             {"max_degree", max_degree},
             {"max_core", max_core}};
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_run(const std::string& input, const PdcParams& params, bool merge,
            const std::string& format, const std::string& output, bool with_timings) {
    Graph g = load_edge_list_file(input);
    CoverResult cover = core_and_peel(g, params);
    if (merge) cover = merge_pass(g, cover, params);

    if (format == "tsv") {
        std::string text = "community\tsize\tdensity\tnodes\n";
        for (std::size_t i = 0; i < cover.communities.size(); ++i) {
            const NodeSet& c = cover.communities[i];
            text += std::to_string(i) + '\t' + std::to_string(c.size()) + '\t' +
                    std::to_string(density(g, c)) + '\t';
            bool first = true;
            for (NodeId v : c) {
                if (!first) text += ',';
                text += std::to_string(g.label(v));
                first = false;
            }
            text += '\n';
        }
        write_out(output, text);
        return 0;
    }

    json communities = json::array();
    for (const NodeSet& c : cover.communities) {
        json nodes = json::array();
        for (NodeId v : c) nodes.push_back(g.label(v));
        communities.push_back(
            {{"nodes", std::move(nodes)}, {"size", c.size()}, {"density", density(g, c)}});
    }
    json out{{"dataset", input}, {"params", params_json(params)},
             {"communities", std::move(communities)}};
    if (with_timings) {
        double per_arc =
            g.arc_count() > 0
                ? cover.timings.total_s() / static_cast<double>(g.arc_count())
                : 0.0;
        out["timings"] = timings_json(cover.timings, per_arc);
    }
    out["counts"] = {{"seeds_examined", cover.seeds_examined},
                     {"seeds_passed_prefilter", cover.seeds_passed_prefilter}};
    write_out(output, out.dump(2) + '\n');
    return 0;
}

std::size_t trial_concurrency() {
    const char* env = std::getenv("COREPEEL_THREADS");
    if (!env) return 1;
    long v = std::strtol(env, nullptr, 10);
    return v > 0 ? static_cast<std::size_t>(v) : 1;
}

int cmd_bench(const std::string& input, PdcParams params, std::uint64_t seed,
              std::size_t trials, double budget, const std::string& format,
              const std::string& output, bool with_timings) {
    Graph g = load_edge_list_file(input);

    std::vector<BenchReport> reports(trials);
    std::vector<std::exception_ptr> errors(trials);
    const std::size_t threads = std::min(trial_concurrency(), trials);
    if (threads <= 1) {
        for (std::size_t i = 0; i < trials; ++i)
            reports[i] = run_benchmark(g, params, seed + i, budget);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < trials; i = next++) {
                    try {
                        reports[i] = run_benchmark(g, params, seed + i, budget);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    double mp = 0, mr = 0, mf = 0;
    for (const auto& r : reports) {
        mp += r.precision;
        mr += r.recall;
        mf += r.f_measure;
    }
    mp /= static_cast<double>(trials);
    mr /= static_cast<double>(trials);
    mf /= static_cast<double>(trials);

    if (format == "tsv") {
        std::string text = "dataset\tsize\tdensity\tradius\tprecision\trecall\tfmeasure\tnum_embedded\n";
        auto row = [&](const std::string& name, std::size_t size, double p, double r, double f,
                       std::size_t embedded) {
            text += name + '\t' + std::to_string(size) + '\t' + std::to_string(params.min_density) +
                    '\t' + std::to_string(params.radius) + '\t' + std::to_string(p) + '\t' +
                    std::to_string(r) + '\t' + std::to_string(f) + '\t' +
                    std::to_string(embedded) + '\n';
        };
        for (const auto& r : reports) row(input, r.plant_size, r.precision, r.recall, r.f_measure, r.num_embedded);
        row(input + ":mean", reports.front().plant_size, mp, mr, mf, reports.front().num_embedded);
        write_out(output, text);
        return 0;
    }

    json trial_rows = json::array();
    for (const auto& r : reports) {
        json row{{"rng_seed", r.rng_seed},
                 {"planted", r.planted},
                 {"detected", r.detected},
                 {"matched", r.matched},
                 {"precision", r.precision},
                 {"recall", r.recall},
                 {"f_measure", r.f_measure},
                 {"plant_size", r.plant_size},
                 {"num_embedded", r.num_embedded},
                 {"edges_added", r.edges_added},
                 {"cleaned_pass1", r.cleaned_pass1},
                 {"cleaned_pass2", r.cleaned_pass2}};
        if (with_timings) row["timings"] = timings_json(r.timings, r.per_arc_s);
        trial_rows.push_back(std::move(row));
    }
    json out{{"dataset", input},
             {"params", params_json(params)},
             {"budget_fraction", budget},
             {"trials", std::move(trial_rows)},
             {"aggregate", {{"precision", mp}, {"recall", mr}, {"f_measure", mf}}}};
    write_out(output, out.dump(2) + '\n');
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Core & Peel partial dense cover detector"};
    app.require_subcommand(1);

    std::string input, format = "json", output;
    bool no_timings = false;

    auto* stats = app.add_subcommand("stats", "Dataset statistics");
    stats->add_option("input", input)->required();
    stats->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));

    PdcParams params;
    bool merge = false;
    auto* run = app.add_subcommand("run", "Compute a partial dense cover");
    run->add_option("input", input)->required();
    run->add_option("--min-size", params.min_size)->required()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 31));
    run->add_option("--density", params.min_density)->required()
        ->check(CLI::Range(std::numeric_limits<double>::min(), 1.0));
    run->add_option("--radius", params.radius)->required()->check(CLI::IsMember({1, 2}));
    double delta_low = -1.0;
    run->add_option("--delta-low", delta_low);
    run->add_flag("--merge", merge, "Apply the pairwise merge pass");
    run->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));
    run->add_option("--output", output);
    run->add_flag("--no-timings", no_timings, "Omit wall-clock timings from the report");

    std::uint64_t seed = 1;
    std::size_t trials = 1;
    double budget = 0.02;
    auto* bench = app.add_subcommand("bench", "Planted-community benchmark");
    bench->add_option("input", input)->required();
    bench->add_option("--density", params.min_density)->required()
        ->check(CLI::Range(std::numeric_limits<double>::min(), 1.0));
    bench->add_option("--radius", params.radius)->required()->check(CLI::IsMember({1, 2}));
    bench->add_option("--delta-low", delta_low);
    bench->add_option("--seed", seed);
    bench->add_option("--trials", trials)->check(CLI::PositiveNumber);
    bench->add_option("--budget-fraction", budget)->check(CLI::PositiveNumber);
    bench->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));
    bench->add_option("--output", output);
    bench->add_flag("--no-timings", no_timings, "Omit wall-clock timings from the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (delta_low >= 0.0) params.prefilter_density = delta_low;

    try {
        if (stats->parsed()) return cmd_stats(input, format);
        if (run->parsed()) return cmd_run(input, params, merge, format, output, !no_timings);
        return cmd_bench(input, params, seed, trials, budget, format, output, !no_timings);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
