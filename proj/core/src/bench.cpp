#include "pma/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "pma/rng.hpp"
#include "pma/validate.hpp"

namespace pma {

std::string to_string(DelayDist d) {
    return d == DelayDist::UniformPeriod ? "uniform" : "tau";
}

DelayDist dist_from_string(const std::string& s) {
    if (s == "uniform") return DelayDist::UniformPeriod;
    if (s == "tau") return DelayDist::UniformTau;
    throw std::invalid_argument("unknown delay distribution: " + s);
}

Instance gen_instance(int period, int tau, int n, DelayDist dist, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const int bound = dist == DelayDist::UniformPeriod ? period : tau;
    std::vector<int> delays(n);
    for (auto& d : delays) d = static_cast<int>(rng.bounded(static_cast<std::uint32_t>(bound)));
    return Instance(period, tau, std::move(delays));
}

int worker_count() {
    if (const char* env = std::getenv("PMA_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

namespace {

using Clock = std::chrono::steady_clock;

// Static chunking keeps the per-cell aggregation independent of scheduling.
void parallel_trials(int trials, int workers, const std::function<void(int)>& body) {
    if (workers <= 1 || trials < 2 * workers) {
        for (int t = 0; t < trials; ++t) body(t);
        return;
    }
    std::atomic<int> next{0};
    const int chunk = std::max(1, trials / (workers * 8));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                int lo = next.fetch_add(chunk);
                if (lo >= trials) break;
                int hi = std::min(trials, lo + chunk);
                for (int t = lo; t < hi; ++t) body(t);
            }
        });
    }
    for (auto& th : pool) th.join();
}

std::uint64_t trial_seed(std::uint64_t master, const std::string& algo, int P, int tau, int n,
                         DelayDist dist, int trial) {
    std::uint64_t h = hash_str(master, algo);
    return hash_values(h, {static_cast<std::uint64_t>(P), static_cast<std::uint64_t>(tau),
                           static_cast<std::uint64_t>(n),
                           static_cast<std::uint64_t>(dist == DelayDist::UniformTau ? 1 : 0),
                           static_cast<std::uint64_t>(trial)});
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config) {
    if (config.trials < 1) return {};
    std::vector<int> ns = config.n_grid;
    if (ns.empty())
        for (double load : config.load_grid)
            ns.push_back(std::max(1, static_cast<int>(std::lround(load * config.period / config.tau))));

    ExperimentReport report;
    const int workers = worker_count();
    for (int n : ns) {
        for (Algo algo : config.algos) {
            const std::string name = to_string(algo);
            std::atomic<int> successes{0}, flags{0};
            std::atomic<long long> total_ns{0};
            parallel_trials(config.trials, workers, [&](int t) {
                const std::uint64_t seed =
                    trial_seed(config.master_seed, name, config.period, config.tau, n, config.dist, t);
                Instance inst =
                    gen_instance(config.period, config.tau, n, config.dist, hash_values(seed, {1}));
                SolveOptions opts;
                opts.seed = hash_values(seed, {2});
                opts.k = config.compact_k;
                opts.exact_limits.node_budget = config.exact_node_budget;
                const auto start = Clock::now();
                bool ok = false, flagged = false;
                try {
                    SolveResult res = solve_with(algo, inst, opts);
                    if (res.status == SolveStatus::Sat) {
                        if (res.assignment && validate(inst, *res.assignment).ok())
                            ok = true;
                        else
                            flagged = true;  // claimed success that does not validate
                    } else if (res.status == SolveStatus::Timeout) {
                        flagged = true;
                    }
                } catch (const std::exception&) {
                    flagged = true;
                }
                total_ns += std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start)
                                .count();
                if (ok) ++successes;
                if (flagged) ++flags;
            });
            ReportRow row;
            row.algo = name;
            row.period = config.period;
            row.tau = config.tau;
            row.n = n;
            row.load = static_cast<double>(n) * config.tau / config.period;
            row.trials = config.trials;
            row.successes = successes.load();
            row.flags = flags.load();
            row.mean_ms = total_ns.load() / 1e6 / config.trials;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

void write_csv(const ExperimentReport& report, std::ostream& os) {
    os << "algo,P,tau,n,load,trials,successes,rate,mean_ms,flags\n";
    char buf[64];
    for (const auto& r : report.rows) {
        std::snprintf(buf, sizeof buf, "%.6f", r.load);
        os << r.algo << ',' << r.period << ',' << r.tau << ',' << r.n << ',' << buf << ','
           << r.trials << ',' << r.successes << ',';
        std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(r.successes) / r.trials);
        os << buf << ',';
        std::snprintf(buf, sizeof buf, "%.4f", r.mean_ms);
        os << buf << ',' << r.flags << '\n';
    }
}

std::vector<std::string> preset_names() {
    return {"fig6", "fig7", "fig8", "fig9", "fig11", "fig12"};
}

ExperimentConfig preset_config(const std::string& name) {
    ExperimentConfig c;
    auto steps = [](int lo, int hi, int step) {
        std::vector<int> v;
        for (int n = lo; n <= hi; n += step) v.push_back(n);
        return v;
    };
    const std::vector<Algo> large_algos = {Algo::FirstFit, Algo::MetaOffset, Algo::CompactPair,
                                           Algo::CompactFit, Algo::GreedyUniform};
    const std::vector<Algo> unit_algos = {Algo::FirstFit, Algo::GreedyUniform,
                                          Algo::GreedyPotential, Algo::SwapAndMove};
    if (name == "fig6") {
        c.period = 100000; c.tau = 1000; c.n_grid = steps(2, 100, 2); c.algos = large_algos;
    } else if (name == "fig7") {
        c.period = 1000; c.tau = 10; c.n_grid = steps(2, 100, 2); c.algos = large_algos;
    } else if (name == "fig8") {
        c.period = 10000; c.tau = 1000; c.n_grid = steps(1, 10, 1); c.algos = large_algos;
        c.algos.push_back(Algo::Exact);
    } else if (name == "fig9") {
        c.period = 100000; c.tau = 1000; c.n_grid = steps(2, 100, 2); c.algos = large_algos;
        c.dist = DelayDist::UniformTau;
    } else if (name == "fig11") {
        c.period = 100; c.tau = 1; c.n_grid = steps(2, 100, 2); c.algos = unit_algos;
    } else if (name == "fig12") {
        c.period = 10; c.tau = 1; c.n_grid = steps(1, 10, 1); c.algos = unit_algos;
        c.algos.push_back(Algo::Exact);
    } else {
        throw std::invalid_argument("unknown preset: " + name);
    }
    return c;
}

TimingProfile timing_profile(const SolverFn& solver, const std::vector<int>& n_grid, double load,
                             int tau, int trials, std::uint64_t master_seed) {
    if (n_grid.size() < 3) throw std::invalid_argument("timing_profile: need at least 3 points");
    TimingProfile prof;
    for (int n : n_grid) {
        const int P = std::max(tau, static_cast<int>(std::lround(n * tau / load)));
        long long total_ns = 0;
        for (int t = 0; t < trials; ++t) {
            const std::uint64_t seed = trial_seed(master_seed, "timing", P, tau, n,
                                                  DelayDist::UniformPeriod, t);
            Instance inst = gen_instance(P, tau, n, DelayDist::UniformPeriod,
                                         hash_values(seed, {1}));
            const auto start = Clock::now();
            solver(inst, hash_values(seed, {2}));
            total_ns +=
                std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
        }
        prof.points.push_back({n, total_ns / 1e6 / trials});
    }
    // Least-squares slope of log(time) against log(n).
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int good = 0;
    for (const auto& p : prof.points) {
        if (p.mean_ms <= 0) {
            prof.degenerate = true;
            continue;
        }
        const double x = std::log(p.n), y = std::log(p.mean_ms);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++good;
    }
    if (good >= 2)
        prof.slope = (good * sxy - sx * sy) / (good * sxx - sx * sx);
    else
        prof.degenerate = true;
    return prof;
}

TimingProfile timing_profile(Algo algo, const std::vector<int>& n_grid, double load, int tau,
                             int trials, std::uint64_t master_seed) {
    SolverFn fn = [algo](const Instance& inst, std::uint64_t seed) {
        SolveOptions opts;
        opts.seed = seed;
        solve_with(algo, inst, opts);
    };
    return timing_profile(fn, n_grid, load, tau, trials, master_seed);
}

}  // namespace pma
