// Command-line front end: instance generation, solving, benchmark grids,
// analytic tables, reductions, and unsat search.
//
// Exit codes: 0 ok, 1 usage/argument error, 2 solver-proven unsat (solve),
// 3 timeout / budget exhausted.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>

#include "pma/bench.hpp"
#include "pma/compact.hpp"
#include "pma/io.hpp"
#include "pma/sizeone.hpp"
#include "pma/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnsat = 2;
constexpr int kExitTimeout = 3;

pma::Instance load_instance(const std::string& path) {
    if (path.empty() || path == "-") return pma::read_instance(std::cin);
    return pma::read_instance_file(path);
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    return file;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"periodic message assignment toolkit"};
    app.require_subcommand(1);

    // --- gen ---
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    int gen_p = 1000, gen_tau = 10, gen_n = 10;
    std::string gen_dist = "uniform", gen_out;
    std::uint64_t gen_seed = 0;
    gen->add_option("--p", gen_p, "period")->required();
    gen->add_option("--tau", gen_tau, "message size")->required();
    gen->add_option("--n", gen_n, "message count")->required();
    gen->add_option("--dist", gen_dist, "delay distribution: uniform|tau");
    gen->add_option("--seed", gen_seed, "rng seed");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // --- solve ---
    auto* solve = app.add_subcommand("solve", "run one scheduler on an instance");
    std::string solve_algo, solve_in, solve_out;
    std::uint64_t solve_seed = 0;
    int solve_k = 8;
    double solve_time_limit = 0;
    long long solve_nodes = 0;
    solve->add_option("--algo", solve_algo, "algorithm name")->required();
    solve->add_option("--in", solve_in, "instance file (default stdin)");
    solve->add_option("--out", solve_out, "assignment file (default stdout)");
    solve->add_option("--seed", solve_seed, "seed (greedy-uniform)");
    solve->add_option("--k", solve_k, "arity (compact-k)");
    solve->add_option("--time-limit", solve_time_limit, "seconds (exact)");
    solve->add_option("--node-budget", solve_nodes, "node budget (exact)");

    // --- bench ---
    auto* bench = app.add_subcommand("bench", "run a success-rate experiment grid");
    std::string bench_preset, bench_config, bench_out, bench_plot_dir;
    int bench_trials = 0;
    std::uint64_t bench_seed = 0;
    bool bench_seed_set = false;
    bench->add_option("--preset", bench_preset, "fig6|fig7|fig8|fig9|fig11|fig12|fig13");
    bench->add_option("--config", bench_config, "config file");
    bench->add_option("--trials", bench_trials, "override trials per point");
    bench->add_option("--seed", bench_seed, "override master seed")
        ->each([&](const std::string&) { bench_seed_set = true; });
    bench->add_option("--out", bench_out, "CSV output (default stdout)");
    bench->add_option("--plot-dir", bench_plot_dir,
                      "also write gnuplot-ready per-algorithm data files here");

    // --- prob ---
    auto* prob = app.add_subcommand("prob", "uniform-greedy success probability");
    int prob_m = 100, prob_n = 0;
    bool prob_grid = false;
    prob->add_option("--m", prob_m, "period (tau = 1)")->required();
    prob->add_option("--n", prob_n, "message count (with --grid: upper bound)");
    prob->add_flag("--grid", prob_grid, "emit rows for n = 1..m");

    // --- bounds ---
    auto* bounds = app.add_subcommand("bounds", "guaranteed-load table for compact k-tuples");
    int bounds_k = 8;
    bounds->add_option("--k", bounds_k, "maximum tuple arity")->required();

    // --- reduce ---
    auto* reduce = app.add_subcommand("reduce", "transform an instance");
    std::string red_mode, red_in, red_out, red_record;
    int red_k = 1;
    reduce->add_option("--mode", red_mode, "normalize|unit|buffer")->required();
    reduce->add_option("--k", red_k, "divisor of tau (buffer)");
    reduce->add_option("--in", red_in, "instance file (default stdin)");
    reduce->add_option("--out", red_out, "reduced instance file (default stdout)");
    reduce->add_option("--record", red_record, "sidecar record file");

    // --- pullback ---
    auto* pull = app.add_subcommand("pullback", "map a reduced assignment back");
    std::string pull_record, pull_assignment, pull_out;
    pull->add_option("--record", pull_record, "record file")->required();
    pull->add_option("--assignment", pull_assignment, "assignment file")->required();
    pull->add_option("--out", pull_out, "output file (default stdout)");

    // --- find-unsat ---
    auto* fu = app.add_subcommand("find-unsat", "search for an unsatisfiable instance");
    double fu_load = 0.8;
    int fu_pmax = 12, fu_pmin = 2, fu_tau = 1;
    long long fu_budget = 10000;
    std::uint64_t fu_seed = 0;
    fu->add_option("--load", fu_load, "target load");
    fu->add_option("--p-min", fu_pmin, "smallest period");
    fu->add_option("--p-max", fu_pmax, "largest period");
    fu->add_option("--tau", fu_tau, "message size");
    fu->add_option("--budget", fu_budget, "instances to try");
    fu->add_option("--seed", fu_seed, "rng seed");

    CLI11_PARSE(app, argc, argv);

    try {
        std::ofstream file;
        if (gen->parsed()) {
            auto inst = pma::gen_instance(gen_p, gen_tau, gen_n,
                                          pma::dist_from_string(gen_dist), gen_seed);
            pma::write_instance(inst, open_out(gen_out, file));
            return kExitOk;
        }

        if (solve->parsed()) {
            auto algo = pma::algo_from_string(solve_algo);
            if (!algo) {
                std::cerr << "unknown algorithm: " << solve_algo << "\n";
                return kExitUsage;
            }
            auto inst = load_instance(solve_in);
            pma::SolveOptions opts;
            opts.seed = solve_seed;
            opts.k = solve_k;
            opts.exact_limits = {solve_time_limit, solve_nodes};
            auto res = pma::solve_with(*algo, inst, opts);
            auto& os = open_out(solve_out, file);
            switch (res.status) {
                case pma::SolveStatus::Sat: {
                    auto check = pma::validate(inst, *res.assignment);
                    if (!check.ok()) {
                        std::cerr << "internal error: invalid assignment produced\n";
                        return kExitUsage;
                    }
                    pma::write_assignment(res.assignment, false, os);
                    return kExitOk;
                }
                case pma::SolveStatus::Unsat:
                    pma::write_assignment(std::nullopt, true, os);
                    return kExitUnsat;
                case pma::SolveStatus::Timeout:
                    pma::write_assignment(std::nullopt, false, os);
                    return kExitTimeout;
                case pma::SolveStatus::Fail:
                    pma::write_assignment(std::nullopt, false, os);
                    return kExitOk;  // heuristic gave up; not a proof
            }
            return kExitOk;
        }

        if (bench->parsed()) {
            if (bench_preset.empty() == bench_config.empty()) {
                std::cerr << "bench: pass exactly one of --preset / --config\n";
                return kExitUsage;
            }
            if (bench_preset == "fig13") {  // the timing figure: load 1, tau 1
                const std::vector<pma::Algo> algos = {
                    pma::Algo::FirstFit, pma::Algo::GreedyUniform, pma::Algo::GreedyPotential,
                    pma::Algo::SwapAndMove};
                const std::vector<int> grid = {25, 50, 100, 200, 400};
                const int trials = bench_trials > 0 ? bench_trials : 50;
                auto& os = open_out(bench_out, file);
                os << "algo,n,mean_ms,slope\n";
                for (auto algo : algos) {
                    auto prof = pma::timing_profile(algo, grid, 1.0, 1, trials,
                                                    bench_seed_set ? bench_seed : 0);
                    for (const auto& p : prof.points) {
                        char buf[64];
                        std::snprintf(buf, sizeof buf, "%.5f", p.mean_ms);
                        os << pma::to_string(algo) << ',' << p.n << ',' << buf << ",\n";
                    }
                    char buf[64];
                    std::snprintf(buf, sizeof buf, "%.3f", prof.slope);
                    os << pma::to_string(algo) << ",,," << buf << '\n';
                    if (!bench_plot_dir.empty()) {
                        std::ofstream pf(bench_plot_dir + "/fig13_" + pma::to_string(algo) +
                                         ".dat");
                        pf << "# n mean_ms   (slope " << buf << ")\n";
                        for (const auto& p : prof.points)
                            pf << p.n << ' ' << p.mean_ms << '\n';
                    }
                }
                return kExitOk;
            }
            pma::ExperimentConfig cfg = bench_preset.empty()
                                            ? pma::read_config_file(bench_config)
                                            : pma::preset_config(bench_preset);
            if (bench_trials > 0) cfg.trials = bench_trials;
            if (bench_seed_set) cfg.master_seed = bench_seed;
            auto report = pma::run_experiment(cfg);
            pma::write_csv(report, open_out(bench_out, file));
            if (!bench_plot_dir.empty()) {
                const std::string tag = bench_preset.empty() ? "grid" : bench_preset;
                std::map<std::string, std::ofstream> files;
                for (const auto& row : report.rows) {
                    auto it = files.find(row.algo);
                    if (it == files.end()) {
                        it = files.emplace(row.algo, std::ofstream(bench_plot_dir + "/" + tag +
                                                                   "_" + row.algo + ".dat"))
                                 .first;
                        it->second << "# load rate\n";
                    }
                    it->second << row.load << ' '
                               << static_cast<double>(row.successes) / row.trials << '\n';
                }
            }
            return kExitOk;
        }

        if (prob->parsed()) {
            auto& os = std::cout;
            os << "m,n,load,probability\n";
            const int lo = prob_grid ? 1 : std::max(1, prob_n);
            const int hi = prob_grid ? (prob_n > 0 ? prob_n : prob_m) : std::max(1, prob_n);
            for (int n = lo; n <= hi && n <= prob_m; ++n) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.6f,%.9f", static_cast<double>(n) / prob_m,
                              pma::success_probability(prob_m, n));
                os << prob_m << ',' << n << ',' << buf << '\n';
            }
            return kExitOk;
        }

        if (bounds->parsed()) {
            auto table = pma::bound_table(bounds_k);
            std::cout << "i,n_i\n";
            for (int i = table.k; i >= 1; --i)
                std::cout << i << ',' << table.tuple_counts[table.k - i].str() << '\n';
            std::cout << "guaranteed_load," << table.guaranteed_load.str() << '\n';
            std::cout << "min_n," << table.min_n << '\n';
            return kExitOk;
        }

        if (reduce->parsed()) {
            auto inst = load_instance(red_in);
            pma::ReductionRecord rec;
            if (red_mode == "normalize")
                rec = pma::normalize_period(inst);
            else if (red_mode == "unit")
                rec = pma::to_unit_size(inst);
            else if (red_mode == "buffer")
                rec = pma::buffer_to_multiple(inst, red_k);
            else {
                std::cerr << "unknown mode: " << red_mode << "\n";
                return kExitUsage;
            }
            pma::write_instance(rec.reduced, open_out(red_out, file));
            if (!red_record.empty()) {
                std::ofstream rf(red_record);
                if (!rf) throw std::runtime_error("cannot open " + red_record);
                pma::write_record(rec, rf);
            }
            return kExitOk;
        }

        if (pull->parsed()) {
            auto rec = pma::read_record_file(pull_record);
            auto reduced = pma::read_assignment_file(pull_assignment);
            if (!reduced) {
                std::cerr << "pullback: assignment file holds no offsets\n";
                return kExitUsage;
            }
            auto a = pma::pullback(rec, *reduced);
            auto target = rec.pullback_target();
            if (!pma::validate(target, a).ok()) {
                std::cerr << "internal error: pullback failed to validate\n";
                return kExitUsage;
            }
            pma::write_assignment(a, false, open_out(pull_out, file));
            return kExitOk;
        }

        if (fu->parsed()) {
            pma::UnsatSearchParams p;
            p.p_min = fu_pmin;
            p.p_max = fu_pmax;
            p.tau = fu_tau;
            p.target_load = fu_load;
            p.budget = fu_budget;
            p.seed = fu_seed;
            auto found = pma::search_unsat(p);
            if (!found) {
                std::cerr << "no unsat instance found within budget\n";
                return kExitTimeout;
            }
            pma::write_instance(found->instance, std::cout);
            std::cerr << "proven unsat after trying " << found->tried << " instances ("
                      << found->proof.nodes_explored << " nodes)\n";
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
