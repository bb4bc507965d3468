// Acceptance suite. Run as `pma_acceptance <criterion>` with criterion in
// 1..9 (or `all`); prints one PASS/FAIL line per criterion and exits
// non-zero on any failure.
//
// Statistical conventions, fixed here once:
//  * every randomized check derives its streams from kMasterSeed; reruns are
//    bit-identical,
//  * success-rate claims with an explicit level r use the threshold
//    r - 3*sqrt(r(1-r)/T),
//  * "100%" claims are held to the finest resolution T trials can support:
//    at most 3 failures in T (the rule-of-three band around a perfect rate).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <map>
#include <string>
#include <vector>

#include "pma/available.hpp"
#include "pma/bench.hpp"
#include "pma/compact.hpp"
#include "pma/exact.hpp"
#include "pma/greedy.hpp"
#include "pma/io.hpp"
#include "pma/reductions.hpp"
#include "pma/rng.hpp"
#include "pma/sizeone.hpp"
#include "pma/solvers.hpp"
#include "pma/validate.hpp"

using namespace pma;

namespace {

constexpr std::uint64_t kMasterSeed = 20260809;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
    void note(const std::string& info) {
        if (!detail.empty()) detail += "; ";
        detail += info;
    }
};

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// ---------------------------------------------------------------- utilities

// Regularized upper incomplete gamma Q(a, x); p-value of a chi-square stat
// with dof degrees is Q(dof/2, x/2).
double gamma_q(double a, double x) {
    if (x < 0 || a <= 0) return 1.0;
    if (x == 0) return 1.0;
    if (x < a + 1.0) {  // series for P(a,x), return 1 - P
        double ap = a, sum = 1.0 / a, del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * 1e-14) break;
        }
        return 1.0 - sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    // Lentz continued fraction for Q(a,x)
    double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
    for (int i = 1; i <= 500; ++i) {
        double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < 1e-300) d = 1e-300;
        c = b + an / c;
        if (std::fabs(c) < 1e-300) c = 1e-300;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-14) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

double chi2_pvalue(double stat, int dof) { return gamma_q(dof / 2.0, stat / 2.0); }

struct RateResult {
    int successes = 0;
    int trials = 0;
    int flags = 0;
    double rate() const { return trials ? static_cast<double>(successes) / trials : 0; }
};

RateResult measure_rate(Algo algo, int P, int tau, int n, int trials, int k = 8) {
    ExperimentConfig cfg;
    cfg.period = P;
    cfg.tau = tau;
    cfg.n_grid = {n};
    cfg.trials = trials;
    cfg.algos = {algo};
    cfg.master_seed = kMasterSeed;
    cfg.compact_k = k;
    auto report = run_experiment(cfg);
    return {report.rows[0].successes, report.rows[0].trials, report.rows[0].flags};
}

// threshold for an explicit claimed rate (3 sigma), see header comment
bool meets_rate(const RateResult& r, double claimed, std::string& why, const char* label) {
    double threshold = claimed >= 1.0
                           ? 1.0 - 3.0 / r.trials
                           : claimed - 3.0 * std::sqrt(claimed * (1 - claimed) / r.trials);
    if (r.rate() < threshold || r.flags > 0) {
        why = fmt("%s: %d/%d (%.4f < %.4f)", label, r.successes, r.trials, r.rate(), threshold);
        return false;
    }
    return true;
}

// ------------------------------------------------------------- criterion 1

// Exhaustive validator-vs-brute-force agreement for P <= 16, tau <= 4,
// n <= 4. The space is covered modulo two validity-preserving symmetries,
// each re-verified here on the fly: message permutation (delays enumerated
// as multisets) and offset rotation (first offset pinned to 0).
Outcome criterion1() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    long long checked = 0, disagreements = 0;
    SplitMix64 spot(kMasterSeed);

    int own1[16], own2[16];
    auto brute_ok = [&](int P, int tau, const int* d, const int* o, int n) {
        std::memset(own1, -1, sizeof(int) * P);
        std::memset(own2, -1, sizeof(int) * P);
        for (int i = 0; i < n; ++i) {
            for (int t = 0; t < tau; ++t) {
                int s1 = (o[i] + t) % P;
                int s2 = (o[i] + d[i] + t) % P;
                if (own1[s1] >= 0 || own2[s2] >= 0) return false;
                own1[s1] = i;
                own2[s2] = i;
            }
        }
        return true;
    };

    for (int tau = 1; tau <= 4 && out.pass; ++tau) {
        for (int P = tau; P <= 16 && out.pass; ++P) {
            for (int n = 0; n <= 4; ++n) {
                std::vector<int> d(n, 0), o(n, 0);
                // non-decreasing delays
                auto next_delays = [&]() {
                    for (int i = n - 1; i >= 0; --i) {
                        if (d[i] + 1 < P) {
                            int v = ++d[i];
                            for (int j = i + 1; j < n; ++j) d[j] = v;
                            return true;
                        }
                    }
                    return false;
                };
                do {
                    // offsets: o[0] = 0, rest free
                    std::fill(o.begin(), o.end(), 0);
                    while (true) {
                        Instance inst(P, tau, d);
                        Assignment a{o};
                        bool lib = validate(inst, a).ok();
                        bool ref = brute_ok(P, tau, d.data(), o.data(), n);
                        ++checked;
                        if (lib != ref) {
                            ++disagreements;
                            out.fail(fmt("mismatch at P=%d tau=%d n=%d", P, tau, n));
                            break;
                        }
                        // occasionally re-verify the quotiented symmetries
                        if ((checked & 0xffff) == 0 && n >= 2) {
                            int c = 1 + static_cast<int>(spot.bounded(P - 1));
                            std::vector<int> ro = o;
                            for (auto& x : ro) x = (x + c) % P;
                            std::vector<int> pd = d, po = o;
                            std::swap(pd[0], pd[n - 1]);
                            std::swap(po[0], po[n - 1]);
                            if (validate(inst, Assignment{ro}).ok() != lib ||
                                validate(Instance(P, tau, pd), Assignment{po}).ok() != lib) {
                                out.fail("symmetry spot-check failed");
                                break;
                            }
                        }
                        // advance offsets o[1..n-1]
                        int i = n - 1;
                        for (; i >= 1; --i) {
                            if (++o[i] < P) break;
                            o[i] = 0;
                        }
                        if (i < 1) break;
                    }
                } while (out.pass && n > 0 && next_delays());
                if (!out.pass) break;
            }
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.note(fmt("%lld instances, %lld disagreements, %.1f s", checked, disagreements, secs));
    if (secs > 60) out.fail("exceeded 60 s budget");
    return out;
}

// ------------------------------------------------------------- criterion 2

Outcome criterion2() {
    Outcome out;
    const int T = 10000;
    std::string why;

    for (int tau : {1, 10, 1000}) {
        const int n = 10, P = 3 * n * tau + 1;  // load just under 1/3
        auto r = measure_rate(Algo::FirstFit, P, tau, n, T);
        if (!meets_rate(r, 1.0, why, fmt("first-fit tau=%d", tau).c_str())) out.fail(why);
        if (r.successes != r.trials)
            out.fail(fmt("first-fit tau=%d: %d failures below 1/3", tau, r.trials - r.successes));
    }
    for (int tau : {1, 10}) {
        const int n = 10, m = 3 * n + 1, P = m * tau;
        auto r = measure_rate(Algo::MetaOffset, P, tau, n, T);
        if (r.successes != r.trials)
            out.fail(fmt("meta-offset tau=%d: %d failures below 1/3", tau, r.trials - r.successes));
    }
    {
        const int tau = 10, m = 80, n = 30;  // load exactly 3/8
        auto r = measure_rate(Algo::CompactPair, m * tau, tau, n, T);
        if (r.successes != r.trials)
            out.fail(fmt("compact-pair: %d failures at 3/8", r.trials - r.successes));
    }
    {
        const int tau = 2, m = 551, n = 220;  // load 440/1102 < 0.4, n >= 220
        auto r = measure_rate(Algo::CompactK, m * tau, tau, n, T, 8);
        if (r.successes != r.trials)
            out.fail(fmt("compact-8: %d failures below 0.4", r.trials - r.successes));
    }
    {
        auto r = measure_rate(Algo::SwapAndMove, 100, 1, 61, T);
        if (r.successes != r.trials)
            out.fail(fmt("swap-and-move: %d failures at 0.61", r.trials - r.successes));
    }
    if (out.pass) out.note("five guarantee bands, 10000 instances each, zero failures");
    return out;
}

// ------------------------------------------------------------- criterion 3

Outcome criterion3() {
    Outcome out;
    auto t1 = bound_table(1);
    auto t2 = bound_table(2);
    auto t8 = bound_table(8);
    if (t1.guaranteed_load != Rational(1, 3))
        out.fail("k=1 load " + t1.guaranteed_load.str() + " != 1/3");
    if (t2.guaranteed_load != Rational(3, 8))
        out.fail("k=2 load " + t2.guaranteed_load.str() + " != 3/8");
    if (t2.tuple_counts[0] != Rational(1, 8))
        out.fail("k=2 pair count " + t2.tuple_counts[0].str() + " != m/8");
    if (t8.guaranteed_load != Rational(2, 5))
        out.fail("k=8 load " + t8.guaranteed_load.str() + " != 4/10");
    if (t8.min_n != 220) out.fail(fmt("k=8 min_n %lld != 220", t8.min_n));
    if (out.pass)
        out.note("1/3, 3/8, 4/10 with min_n 220 (capacity " +
                 fmt("%.6f", t8.capacity.to_double()) + "m)");
    return out;
}

// ------------------------------------------------------------- criterion 4

Outcome criterion4() {
    Outcome out;
    const int T = 10000;
    std::string why;

    auto cp = measure_rate(Algo::CompactPair, 1000, 10, 60, T);
    if (!meets_rate(cp, 0.999, why, "compact-pair@0.6")) out.fail(why);

    auto sm = measure_rate(Algo::SwapAndMove, 100, 1, 95, T);
    if (!meets_rate(sm, 0.999, why, "swap-and-move@0.95")) out.fail(why);

    int worst_fail = 0, worst_n = 0;
    const char* worst_algo = "";
    for (int n = 2; n <= 48; n += 2) {
        for (Algo algo : {Algo::MetaOffset, Algo::GreedyUniform}) {
            auto r = measure_rate(algo, 1000, 10, n, T);
            int fails = r.trials - r.successes;
            if (fails > worst_fail) {
                worst_fail = fails;
                worst_n = n;
                worst_algo = algo == Algo::MetaOffset ? "meta-offset" : "greedy-uniform";
            }
            if (!meets_rate(r, 1.0, why, fmt("%s@n=%d", to_string(algo).c_str(), n).c_str()))
                out.fail(why);
        }
    }
    std::string worst = worst_fail == 0
                            ? "no failures in any sub-0.5 cell"
                            : fmt("worst sub-0.5 cell %s@n=%d: %d/10000 failures", worst_algo,
                                  worst_n, worst_fail);
    out.note(fmt("compact-pair@0.6 %.4f, swap-and-move@0.95 %.4f, %s", cp.rate(), sm.rate(),
                 worst.c_str()));
    return out;
}

// ------------------------------------------------------------- criterion 5

Outcome criterion5() {
    Outcome out;
    const int m = 100, T = 10000;

    // (a) empirical greedy-uniform success vs the analytic product, +-2pp.
    double worst_gap = 0;
    int worst_n = 0;
    for (int n = 1; n <= m; ++n) {
        auto r = measure_rate(Algo::GreedyUniform, m, 1, n, T);
        double gap = std::fabs(r.rate() - success_probability(m, n));
        if (gap > worst_gap) {
            worst_gap = gap;
            worst_n = n;
        }
    }
    if (worst_gap > 0.02)
        out.fail(fmt("formula gap %.4f at n=%d exceeds 2pp", worst_gap, worst_n));
    else
        out.note(fmt("max |empirical - formula| = %.4f at n=%d", worst_gap, worst_n));

    // (b) trace uniformity at m = 6, n = 2..4: chi-square over all trace
    // cells with 10000 successful samples per n.
    auto trace_chi2 = [&](int n, bool adaptive, double& pval) {
        const int cells_side = [&] {
            int c = 1;
            for (int i = 0; i < n; ++i) c = c * (6 - i) / (i + 1);
            return c;
        }();
        const int cells = cells_side * cells_side;
        std::map<std::pair<int, int>, int> counts;
        SplitMix64 rng(hash_values(kMasterSeed, {0x7472aceULL, static_cast<std::uint64_t>(n),
                                                 adaptive ? 1ULL : 0ULL}));
        int samples = 0;
        long long guard = 0;
        while (samples < T && guard < 100'000'000LL) {
            ++guard;
            int mask1 = 0, mask2 = 0;
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                int d = static_cast<int>(rng.bounded(6));
                if (adaptive) {
                    int avail[6], cnt = 0;
                    for (int o = 0; o < 6; ++o)
                        if (!(mask1 >> o & 1) && !(mask2 >> ((o + d) % 6) & 1)) avail[cnt++] = o;
                    if (!cnt) { ok = false; break; }
                    int o = avail[rng.bounded(static_cast<std::uint32_t>(cnt))];
                    mask1 |= 1 << o;
                    mask2 |= 1 << ((o + d) % 6);
                } else {  // uniform offset draw; collision aborts the run
                    int o = static_cast<int>(rng.bounded(6));
                    if ((mask1 >> o & 1) || (mask2 >> ((o + d) % 6) & 1)) { ok = false; break; }
                    mask1 |= 1 << o;
                    mask2 |= 1 << ((o + d) % 6);
                }
            }
            if (!ok) continue;
            ++counts[{mask1, mask2}];
            ++samples;
        }
        const double expected = static_cast<double>(samples) / cells;
        double stat = 0;
        long long seen_cells = 0;
        for (const auto& [key, cnt] : counts) {
            stat += (cnt - expected) * (cnt - expected) / expected;
            ++seen_cells;
        }
        stat += (cells - seen_cells) * expected;  // empty cells
        pval = chi2_pvalue(stat, cells - 1);
        return stat;
    };

    for (int n = 2; n <= 4; ++n) {
        double p_adaptive = 0, p_reference = 0;
        trace_chi2(n, true, p_adaptive);
        trace_chi2(n, false, p_reference);
        out.note(fmt("trace chi2 n=%d: p=%.4f (offset-rejection reference p=%.4f)", n,
                     p_adaptive, p_reference));
        if (p_adaptive <= 0.01) out.fail(fmt("trace uniformity rejected at n=%d", n));
    }
    return out;
}

// ------------------------------------------------------------- criterion 6

Outcome criterion6() {
    Outcome out;
    SplitMix64 rng(hash_values(kMasterSeed, {6}));
    long long mutations = 0;
    bool all_ok = true;
    std::string first_bad;

    for (int run = 0; run < 1000 && all_ok; ++run) {
        const int P = 2 + static_cast<int>(rng.bounded(49));
        const int n = 1 + static_cast<int>(rng.bounded(P));
        std::vector<int> delays(n);
        for (auto& d : delays) d = static_cast<int>(rng.bounded(P));
        Instance inst(P, 1, std::move(delays));

        auto observer = [&](const PotentialState& st) {
            ++mutations;
            const auto& pa = st.partial();
            const int k = pa.size();
            long long pos_sum = 0, used_sum = 0;
            for (int p = 0; p < P; ++p) {
                pos_sum += st.position_potential(p);
                if (pa.occ1(p) != PartialAssignment::kFree) used_sum += st.position_potential(p);
            }
            long long msg_sum = 0;
            for (int i = 0; i < inst.n(); ++i) msg_sum += st.message_potential(i);
            bool ok = pos_sum == static_cast<long long>(inst.n()) * k && msg_sum == used_sum &&
                      st.total() == used_sum;
            // incremental == scratch, and the offset-count identity, per delay
            for (int d = 0; d < P && ok; ++d) {
                const int scratch = message_potential(pa, d);
                if (st.potential_of_delay(d) != scratch) ok = false;
                int avail = 0;
                for (int o = 0; o < P; ++o)
                    if (pa.occ1(o) == PartialAssignment::kFree &&
                        pa.occ2((o + d) % P) == PartialAssignment::kFree)
                        ++avail;
                if (avail != P - 2 * k + scratch) ok = false;
            }
            if (!ok && all_ok) {
                all_ok = false;
                first_bad = fmt("run %d P=%d n=%d after %lld mutations", run, P, inst.n(),
                                mutations);
            }
        };
        swap_and_move(inst, observer);
    }
    if (!all_ok) out.fail("invariant violated: " + first_bad);
    out.note(fmt("%lld mutations across 1000 runs checked", mutations));
    return out;
}

// ------------------------------------------------------------- criterion 7

Outcome criterion7() {
    Outcome out;
    SplitMix64 rng(hash_values(kMasterSeed, {7}));

    auto solve_reduced = [&](const Instance& inst) -> std::optional<Assignment> {
        if (auto ff = first_fit(inst); ff.success()) return ff.assignment;
        if (inst.period % inst.msg_size == 0)
            if (auto cp = compact_pair_solve(inst); cp.success()) return cp.assignment;
        if (static_cast<long long>(inst.period) * inst.n() <= 4000) {
            auto ex = exact_solve(inst, {0.0, 300000});
            if (ex.status == ExactStatus::Sat) return ex.assignment;
        }
        return std::nullopt;
    };

    for (int kind = 0; kind < 3; ++kind) {
        const char* names[] = {"normalize", "unit", "buffer"};
        int done = 0, bad = 0;
        long long attempts = 0;
        while (done < 1000 && attempts < 200000) {
            ++attempts;
            const int tau = 1 + static_cast<int>(rng.bounded(4));
            const int P = 2 * tau + static_cast<int>(rng.bounded(64 - 2 * tau));
            const int max_n = std::max(1, P / (4 * tau));  // low load keeps the reduced solvable
            const int n = 1 + static_cast<int>(rng.bounded(max_n));
            std::vector<int> delays(n);
            for (auto& d : delays) d = static_cast<int>(rng.bounded(P));
            Instance inst(P, tau, std::move(delays));

            ReductionRecord rec;
            try {
                if (kind == 0)
                    rec = normalize_period(inst);
                else if (kind == 1)
                    rec = to_unit_size(inst);
                else {
                    std::vector<int> divisors;
                    for (int k = 1; k <= tau; ++k)
                        if (tau % k == 0) divisors.push_back(k);
                    rec = buffer_to_multiple(
                        inst, divisors[rng.bounded(static_cast<std::uint32_t>(divisors.size()))]);
                }
            } catch (const std::invalid_argument&) {
                continue;
            }
            auto reduced_a = solve_reduced(rec.reduced);
            if (!reduced_a) continue;
            auto a = pullback(rec, *reduced_a);
            if (!validate(rec.pullback_target(), a).ok()) ++bad;
            ++done;
        }
        if (done < 1000) out.fail(fmt("%s: only %d pullbacks exercised", names[kind], done));
        if (bad > 0) out.fail(fmt("%s: %d invalid pullbacks", names[kind], bad));
    }
    if (out.pass) out.note("1000 validated pullbacks per reduction kind");
    return out;
}

// ------------------------------------------------------------- criterion 8

Outcome criterion8() {
    Outcome out;

    long long unsat_seen = 0, instances = 0, heuristic_contradictions = 0;
    auto check_instance = [&](const Instance& inst) {
        ++instances;
        auto res = exact_solve(inst, {0.0, 3'000'000});
        if (res.status != ExactStatus::Unsat) return;
        ++unsat_seen;
        bool any =
            first_fit(inst).success() || meta_offset(inst).success() ||
            greedy_uniform(inst, hash_values(kMasterSeed,
                                             {static_cast<std::uint64_t>(instances)}))
                .success();
        if (inst.period % inst.msg_size == 0)
            any = any || compact_pair_solve(inst).success() || compact_fit(inst).success() ||
                  compact_k_tuples_solve(inst, 8).success();
        if (inst.msg_size == 1)
            any = any || swap_and_move(inst).success() || greedy_potential(inst).success();
        if (inst.msg_size == 2 && inst.period % 2 == 0)
            any = any || compact_pair_tau2_solve(inst).success();
        if (any) ++heuristic_contradictions;
    };

    // Exhaustive delay multisets for P <= 8.
    for (int tau : {1, 2}) {
        for (int P = tau; P <= 8; ++P) {
            for (int n = 1; n * tau <= P; ++n) {
                std::vector<int> d(n, 0);
                while (true) {
                    check_instance(Instance(P, tau, d));
                    int i = n - 1;
                    for (; i >= 0; --i) {
                        if (d[i] + 1 < P) {
                            int v = ++d[i];
                            for (int j = i + 1; j < n; ++j) d[j] = v;
                            break;
                        }
                    }
                    if (i < 0) break;
                }
            }
        }
    }
    // Randomized fill-in up to P = 12.
    SplitMix64 rng(hash_values(kMasterSeed, {8}));
    for (int iter = 0; iter < 20000; ++iter) {
        int tau = 1 + static_cast<int>(rng.bounded(2));
        int P = tau + static_cast<int>(rng.bounded(12 - tau + 1));
        int max_n = P / tau;
        if (max_n < 1) continue;
        int n = 1 + static_cast<int>(rng.bounded(max_n));
        std::vector<int> delays(n);
        for (auto& d : delays) d = static_cast<int>(rng.bounded(P));
        check_instance(Instance(P, tau, std::move(delays)));
    }
    if (heuristic_contradictions > 0)
        out.fail(fmt("%lld heuristic successes on proven-unsat instances",
                     heuristic_contradictions));

    // find-unsat at load 0.8 within the desk budget.
    const auto start = std::chrono::steady_clock::now();
    UnsatSearchParams p;
    p.target_load = 0.8;
    p.tau = 2;
    p.p_min = 10;
    p.p_max = 15;
    p.budget = 2'000'000;
    p.seed = kMasterSeed;
    auto hit = search_unsat(p);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!hit) {
        out.fail("find-unsat exhausted its budget at load 0.8");
    } else if (secs > 600) {
        out.fail(fmt("find-unsat took %.0f s (> 600)", secs));
    } else {
        const auto& inst = hit->instance;
        std::string ds;
        for (int d : inst.delays) ds += fmt("%d,", d);
        if (!ds.empty()) ds.pop_back();
        out.note(fmt("%lld instances, %lld unsat, 0 contradictions; witness P=%d tau=%d "
                     "delays=[%s] after %lld tries in %.1f s",
                     instances, unsat_seen, inst.period, inst.msg_size, ds.c_str(), hit->tried,
                     secs));
    }
    return out;
}

// ------------------------------------------------------------- criterion 9

Outcome criterion9() {
    Outcome out;
    using Clock = std::chrono::steady_clock;
    const int T = 10000;

    struct Setup {
        Algo algo;
        int P, tau, n;
    };
    // 10000 load-1 instances of 100 messages per scheduler, sequentially.
    std::vector<Setup> setups = {
        {Algo::FirstFit, 1000, 10, 100},   {Algo::MetaOffset, 1000, 10, 100},
        {Algo::CompactPair, 1000, 10, 100}, {Algo::CompactFit, 1000, 10, 100},
        {Algo::GreedyUniform, 1000, 10, 100},
        {Algo::FirstFit, 100, 1, 100},     {Algo::GreedyUniform, 100, 1, 100},
        {Algo::GreedyPotential, 100, 1, 100}, {Algo::SwapAndMove, 100, 1, 100},
    };
    for (const auto& s : setups) {
        const auto start = Clock::now();
        for (int t = 0; t < T; ++t) {
            auto seed = hash_values(kMasterSeed, {9, static_cast<std::uint64_t>(s.algo),
                                                  static_cast<std::uint64_t>(s.tau),
                                                  static_cast<std::uint64_t>(t)});
            Instance inst = gen_instance(s.P, s.tau, s.n, DelayDist::UniformPeriod, seed);
            SolveOptions opts;
            opts.seed = hash_values(seed, {1});
            solve_with(s.algo, inst, opts);
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        out.note(fmt("%s(P=%d): %.1f s", to_string(s.algo).c_str(), s.P, secs));
        if (secs > 60.0)
            out.fail(fmt("%s took %.1f s for 10000 instances (> 60)",
                         to_string(s.algo).c_str(), secs));
    }

    // Log-log slopes at load 1, tau = 1.
    auto ff = timing_profile(Algo::FirstFit, {50, 100, 200, 400}, 1.0, 1, 60, kMasterSeed);
    out.note(fmt("first-fit slope %.2f", ff.slope));
    if (ff.degenerate || ff.slope <= 1.5 || ff.slope >= 2.5)
        out.fail(fmt("first-fit slope %.2f outside (1.5, 2.5)", ff.slope));

    auto gp = timing_profile(Algo::GreedyPotential, {50, 100, 200, 400}, 1.0, 1, 20, kMasterSeed);
    out.note(fmt("greedy-potential slope %.2f", gp.slope));
    if (gp.degenerate || gp.slope <= 2.5 || gp.slope >= 3.5)
        out.fail(fmt("greedy-potential slope %.2f outside (2.5, 3.5)", gp.slope));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    const char* names[] = {
        "validator oracle equivalence",
        "guaranteed-load theorems at 10000 instances",
        "bound-table thresholds",
        "figure-scale success rates",
        "uniform-greedy analytics",
        "potential invariants under swap-and-move",
        "reduction pullback soundness",
        "exact-solver consistency and unsat search",
        "timing budgets and complexity slopes",
    };
    Outcome (*criteria[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                               criterion6, criterion7, criterion8, criterion9};

    int lo = 1, hi = 9;
    if (argc > 1 && std::string(argv[1]) != "all") {
        lo = hi = std::atoi(argv[1]);
        if (lo < 1 || lo > 9) {
            std::fprintf(stderr, "usage: %s <1..9|all>\n", argv[0]);
            return 2;
        }
    }
    bool all_pass = true;
    for (int c = lo; c <= hi; ++c) {
        Outcome out = criteria[c - 1]();
        std::printf("%s criterion-%d: %s%s%s\n", out.pass ? "PASS" : "FAIL", c, names[c - 1],
                    out.detail.empty() ? "" : " -- ", out.detail.c_str());
        std::fflush(stdout);
        if (!out.pass) all_pass = false;
    }
    return all_pass ? 0 : 1;
}
