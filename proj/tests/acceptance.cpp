// Acceptance gate: one pass/fail line per criterion. Each criterion is its
// own test case, so a red line also fails the suite.
#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "hemc/analytic1b1s.hpp"
#include "hemc/general.hpp"
#include "hemc/generate.hpp"
#include "hemc/heuristics.hpp"
#include "hemc/oracle.hpp"
#include "hemc/packing.hpp"
#include "test_util.hpp"

using namespace hemc;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int criterion, bool ok, const char* what, const std::string& detail) {
    std::printf("criterion %d [%s] %s — %s\n", criterion, ok ? "PASS" : "FAIL", what,
                detail.c_str());
    std::fflush(stdout);
}

struct Instance {
    Workload w;
    Machine m;
    double t_f = 0;
    FractionalAssignment x;
};

// Shared across criteria 2 and 3.
std::vector<Instance>& solved_instances() {
    static std::vector<Instance> v;
    return v;
}

} // namespace

TEST_CASE("criterion 1: reference instance reproduced exactly") {
    auto w = hemc::test::reference_instance();
    auto m = Machine::make(1, 1);

    double best = 1e9;
    double opt = 0, ipc = 0;
    for (int run = 0; run < 20; ++run) {
        auto t0 = Clock::now();
        opt = solve(w, m).t_f;
        ipc = schedule_heuristic(w, m, HeuristicKind::IpcDriven).makespan;
        best = std::min(best, seconds_since(t0));
    }
    double normalized = ipc / opt;
    bool ok = std::abs(opt - 375.0) <= 1e-9 * 375 && std::abs(ipc - 525.0) <= 1e-9 * 525 &&
              std::abs(normalized - 1.4) <= 1e-9 && best < 1e-3;
    report(1, ok, "reference instance reproduction",
           "opt=" + std::to_string(opt) + " ipc=" + std::to_string(ipc) +
               " normalized=" + std::to_string(normalized) +
               " best_runtime_s=" + std::to_string(best));
    CHECK(ok);
}

TEST_CASE("criterion 2: solver matches the independent oracles") {
    std::mt19937_64 rng(20240901);
    std::uniform_int_distribution<int> nd(2, 8), cd(1, 3);
    auto t0 = Clock::now();

    int bad_bisect = 0;
    double worst = 0;
    auto& kept = solved_instances();
    kept.clear();
    for (int i = 0; i < 500; ++i) {
        Instance ins;
        ins.w = hemc::test::random_workload(rng, nd(rng));
        ins.m = Machine::make(cd(rng), cd(rng));
        auto r = solve(ins.w, ins.m);
        ins.t_f = r.t_f;
        ins.x = r.assignment;
        double ref = oracle::bisect_optimum(ins.w, ins.m, 1e-9);
        double rel = std::abs(r.t_f - ref) / ref;
        worst = std::max(worst, rel);
        if (rel > 1e-6)
            ++bad_bisect;
        kept.push_back(std::move(ins));
    }

    int bad_grid = 0;
    for (int i = 0; i < 100; ++i) {
        auto w = hemc::test::random_workload(rng, nd(rng) % 3 + 2); // N in [2,4]
        auto m = Machine::make(cd(rng), cd(rng));
        double t_f = solve(w, m).t_f;
        double g = oracle::grid_optimum(w, m, 200);
        double resolution = 0;
        for (const auto& p : w.processes)
            resolution = std::max(resolution, p.small_time / 200.0);
        if (t_f > g + tol(g) || g > t_f + 2 * resolution)
            ++bad_grid;
    }

    double elapsed = seconds_since(t0);
    bool ok = bad_bisect == 0 && bad_grid == 0 && elapsed < 30.0;
    report(2, ok, "oracle equivalence",
           "500 bisection checks (" + std::to_string(bad_bisect) +
               " off, worst rel err " + std::to_string(worst) + "), 100 grid checks (" +
               std::to_string(bad_grid) + " off), " + std::to_string(elapsed) + " s");
    CHECK(ok);
}

TEST_CASE("criterion 3: every optimum is realizable as a concrete schedule") {
    auto& kept = solved_instances();
    REQUIRE(!kept.empty()); // criterion 2 runs first
    int failures = 0;
    std::string first;
    for (const auto& ins : kept) {
        try {
            auto s = pack(ins.w, ins.m, ins.x, ins.t_f);
            auto vs = validate(s, ins.w, ins.m);
            if (!vs.empty()) {
                ++failures;
                if (first.empty())
                    first = vs[0].rule + " on " + vs[0].subject;
            }
        } catch (const std::exception& e) {
            ++failures;
            if (first.empty())
                first = e.what();
        }
    }
    bool ok = failures == 0;
    report(3, ok, "constructive feasibility",
           std::to_string(kept.size()) + " instances packed and validated, " +
               std::to_string(failures) + " failures" + (first.empty() ? "" : " (" + first + ")"));
    CHECK(ok);
}

TEST_CASE("criterion 4: heuristics never beat the optimum") {
    std::mt19937_64 rng(20240904);
    std::uniform_int_distribution<int> nd(1, 12), cd(1, 3);
    int violations = 0;
    for (int i = 0; i < 1000; ++i) {
        auto w = hemc::test::random_workload(rng, nd(rng));
        auto m = Machine::make(cd(rng), cd(rng));
        double opt = solve(w, m).t_f;
        double ipc = schedule_heuristic(w, m, HeuristicKind::IpcDriven).makespan;
        double ltf = schedule_heuristic(w, m, HeuristicKind::Ltf).makespan;
        if (opt > ipc + tol(opt) || opt > ltf + tol(opt))
            ++violations;
    }
    auto w = hemc::test::reference_instance();
    auto m = Machine::make(1, 1);
    double gap = schedule_heuristic(w, m, HeuristicKind::IpcDriven).makespan / solve(w, m).t_f;
    bool ok = violations == 0 && gap >= 1.39;
    report(4, ok, "dominance",
           "1000 instances, " + std::to_string(violations) +
               " dominance violations; reference instance IPC overhead " + std::to_string(gap));
    CHECK(ok);
}

TEST_CASE("criterion 5: general solver agrees with the analytic 1B1S solvers") {
    std::mt19937_64 rng(20240905);
    std::uniform_int_distribution<int> nd(2, 10);
    auto m = Machine::make(1, 1);
    int bad_n = 0, bad_two = 0, twos = 0;
    for (int i = 0; i < 500; ++i) {
        auto w = hemc::test::random_workload(rng, nd(rng));
        double g = solve(w, m).t_f;
        double a = solve_n_1b1s(w).t_f;
        if (std::abs(g - a) > 1e-9 * a)
            ++bad_n;
        if (w.size() == 2) {
            ++twos;
            auto c = canonical_order(w);
            double t2 = solve_two_1b1s(c.processes[0], c.processes[1]).t_f;
            if (std::abs(g - t2) > 1e-9 * t2)
                ++bad_two;
        }
    }
    bool ok = bad_n == 0 && bad_two == 0 && twos > 0;
    report(5, ok, "module agreement",
           "500 N-process comparisons (" + std::to_string(bad_n) + " off), " +
               std::to_string(twos) + " two-process comparisons (" + std::to_string(bad_two) +
               " off)");
    CHECK(ok);
}

TEST_CASE("criterion 6: near-linear scaling of the solver") {
    auto m = Machine::make(4, 4);
    std::vector<int> sizes = {25000, 50000, 100000};
    std::vector<double> medians;
    for (int n : sizes) {
        RandomParams rp;
        rp.n = n;
        auto wf = generate(Preset::Random, 424242, m, rp);
        std::vector<double> runs;
        for (int r = 0; r < 5; ++r) {
            auto t0 = Clock::now();
            volatile double sink = solve(wf.workload, m).t_f;
            (void)sink;
            runs.push_back(seconds_since(t0));
        }
        std::sort(runs.begin(), runs.end());
        medians.push_back(runs[2]);
    }
    double r1 = medians[1] / medians[0];
    double r2 = medians[2] / medians[1];
    bool ok = r1 <= 2.6 && r2 <= 2.6 && medians[2] < 2.0;
    report(6, ok, "complexity scaling",
           "median solve times s: 25k=" + std::to_string(medians[0]) +
               " 50k=" + std::to_string(medians[1]) + " 100k=" + std::to_string(medians[2]) +
               " ratios " + std::to_string(r1) + ", " + std::to_string(r2));
    CHECK(ok);
}

TEST_CASE("criterion 7: heuristic overhead trends on the benchmark mixes") {
    auto t0 = Clock::now();
    double mix1_ipc = 0, mix1_ltf = 0, stress_ipc = 0, stress_ltf = 0;
    int runs = 0;
    double min_overhead = 0;
    for (int total = 2; total <= 10; ++total) {
        for (int big = 1; big <= total - 1; ++big) {
            auto m = Machine::make(big, total - big);
            for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
                for (auto preset : {Preset::Mix1, Preset::Stress}) {
                    auto wf = generate(preset, seed, m);
                    double opt = solve(wf.workload, m).t_f;
                    double ipc =
                        schedule_heuristic(wf.workload, m, HeuristicKind::IpcDriven).makespan /
                            opt - 1.0;
                    double ltf = schedule_heuristic(wf.workload, m, HeuristicKind::Ltf).makespan /
                                     opt - 1.0;
                    min_overhead = std::min({min_overhead, ipc, ltf});
                    if (preset == Preset::Mix1) {
                        mix1_ipc += ipc;
                        mix1_ltf += ltf;
                    } else {
                        stress_ipc += ipc;
                        stress_ltf += ltf;
                    }
                }
                ++runs;
            }
        }
    }
    mix1_ipc /= runs;
    mix1_ltf /= runs;
    stress_ipc /= runs;
    stress_ltf /= runs;
    double elapsed = seconds_since(t0);
    bool ok = mix1_ipc > mix1_ltf && stress_ltf > stress_ipc && min_overhead >= -1e-9 &&
              elapsed < 60.0;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "mean overheads: single-copy mix ipc=%.4f ltf=%.4f; stress mix ipc=%.4f "
                  "ltf=%.4f; min=%.2e; %.1f s",
                  mix1_ipc, mix1_ltf, stress_ipc, stress_ltf, min_overhead, elapsed);
    report(7, ok, "heuristic overhead trends", buf);
    CHECK(ok);
}

TEST_CASE("criterion 8: solver invariants hold on a randomized sweep") {
    std::mt19937_64 rng(20240908);
    std::uniform_int_distribution<int> nd(2, 12), cd(1, 3);
    int bad = 0;
    std::string first;
    auto flag = [&](const std::string& what) {
        ++bad;
        if (first.empty())
            first = what;
    };
    for (int i = 0; i < 200; ++i) {
        auto w = hemc::test::random_workload(rng, nd(rng));
        auto m = Machine::make(cd(rng), cd(rng));

        std::vector<TraceStep> steps;
        auto r = solve(w, m, [&](const TraceStep& s) { steps.push_back(s); });

        // Spare small cores are unused; the trade trace balances against the
        // cores that can actually carry load.
        int s_eff = std::min(m.small_count, static_cast<int>(w.size()) - m.big_count);
        bool unbalanced = false;
        for (std::size_t j = 0; j < steps.size(); ++j) {
            if (steps[j].event == TradeEvent::UnbalancedMove)
                unbalanced = true;
            if (j > 0 && steps[j].t_max > steps[j - 1].t_max + tol(steps[0].t_max))
                flag("t_max increased during trading");
            if (!unbalanced &&
                std::abs(s_eff * steps[j].t_b - m.big_count * steps[j].t_s) >
                    tol(steps[j].t_b + steps[j].t_s) * 64)
                flag("pool balance broken before the unbalanced phase");
        }

        int fractional = 0;
        for (const auto& [id, x] : r.assignment.fractions)
            if (x > 1e-9 && x < 1 - 1e-9)
                ++fractional;
        if (fractional > static_cast<int>(r.longest_set.size()) + 1)
            flag("more fractional assignments than longest set + 1");

        Workload scaled;
        for (const auto& p : w.processes)
            scaled.processes.push_back(ProcessSpec::make(p.id, p.big_time * 3.5, p.sf));
        if (std::abs(solve(scaled, m).t_f - 3.5 * r.t_f) > tol(3.5 * r.t_f))
            flag("t_f not scale invariant");

        if (solve(w, Machine::make(m.big_count + 1, m.small_count)).t_f > r.t_f + tol(r.t_f))
            flag("extra big core increased t_f");

        auto s = pack(w, m, r.assignment, r.t_f);
        if (!validate(s, w, m).empty())
            flag("packed schedule failed validation");
    }
    bool ok = bad == 0;
    report(8, ok, "invariant sweep",
           "200 instances, " + std::to_string(bad) + " violations" +
               (first.empty() ? "" : " (first: " + first + ")"));
    CHECK(ok);
}
