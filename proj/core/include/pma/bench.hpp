#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "pma/solvers.hpp"

namespace pma {

enum class DelayDist { UniformPeriod, UniformTau };

std::string to_string(DelayDist d);
DelayDist dist_from_string(const std::string& s);

/// Deterministic random instance: delays i.i.d. uniform over [0, P) or
/// [0, tau).
Instance gen_instance(int period, int tau, int n, DelayDist dist, std::uint64_t seed);

struct ExperimentConfig {
    int period = 1000;
    int tau = 10;
    std::vector<int> n_grid;             // used if non-empty, else derived from load_grid
    std::vector<double> load_grid;
    int trials = 10000;
    DelayDist dist = DelayDist::UniformPeriod;
    std::vector<Algo> algos;
    std::uint64_t master_seed = 0;
    int compact_k = 8;
    long long exact_node_budget = 2'000'000;  // keeps exact cells deterministic
};

struct ReportRow {
    std::string algo;
    int period = 0;
    int tau = 0;
    int n = 0;
    double load = 0;
    int trials = 0;
    int successes = 0;
    double mean_ms = 0;
    int flags = 0;  // trials that threw, timed out, or returned an invalid assignment
};

struct ExperimentReport {
    std::vector<ReportRow> rows;
};

/// Runs trials for every (grid point, algorithm) cell. Success is counted
/// only for assignments that re-validate. Per-trial seeds derive from
/// (master_seed, algorithm name, P, tau, n, dist, trial), so cells never
/// perturb each other. Trials run on a small worker pool (PMA_WORKERS caps
/// it); aggregation is order-independent.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Header: algo,P,tau,n,load,trials,successes,rate,mean_ms,flags.
/// Everything except mean_ms is reproducible byte for byte.
void write_csv(const ExperimentReport& report, std::ostream& os);

/// Named parameter sets mirroring the benchmark figures.
std::vector<std::string> preset_names();
ExperimentConfig preset_config(const std::string& name);

struct TimingPoint {
    int n = 0;
    double mean_ms = 0;
};

struct TimingProfile {
    std::vector<TimingPoint> points;
    double slope = 0;      // least-squares d log(time) / d log(n)
    bool degenerate = false;  // some timing was ~0; slope unreliable
};

using SolverFn = std::function<void(const Instance&, std::uint64_t seed)>;

/// Mean solve time per instance across an n grid at fixed load (P scales
/// with n), plus the log-log slope.
TimingProfile timing_profile(const SolverFn& solver, const std::vector<int>& n_grid, double load,
                             int tau, int trials, std::uint64_t master_seed);
TimingProfile timing_profile(Algo algo, const std::vector<int>& n_grid, double load, int tau,
                             int trials, std::uint64_t master_seed);

/// Worker count: PMA_WORKERS when set, else hardware concurrency.
int worker_count();

}  // namespace pma
