#include <doctest.h>

#include <algorithm>
#include <random>

#include "hemc/analytic1b1s.hpp"
#include "hemc/oracle.hpp"
#include "test_util.hpp"

using namespace hemc;

TEST_CASE("two processes: P_1 dominates") {
    auto r = solve_two_1b1s(ProcessSpec::make("P1", 500, 1.5), ProcessSpec::make("P2", 100, 1.2));
    CHECK(r.case_tag == Case1B1S::TwoP1Big);
    CHECK(r.t_f == doctest::Approx(500));
    CHECK(r.assignment.at("P1") == doctest::Approx(1.0));
    CHECK(r.assignment.at("P2") == doctest::Approx(0.0));
}

TEST_CASE("two processes: balanced split") {
    auto p1 = ProcessSpec::make("P1", 100, 2.0);
    auto p2 = ProcessSpec::make("P2", 90, 1.5);
    auto r = solve_two_1b1s(p1, p2);
    CHECK(r.case_tag == Case1B1S::TwoBalanced);
    CHECK(r.assignment.at("P1") == doctest::Approx(0.825));
    CHECK(r.assignment.at("P2") == doctest::Approx(7.0 / 18.0));
    CHECK(r.t_f == doctest::Approx(117.5));
    // All four quantities coincide in the balanced case.
    double x1 = r.assignment.at("P1"), x2 = r.assignment.at("P2");
    CHECK(exec_time(p1, x1) == doctest::Approx(117.5));
    CHECK(exec_time(p2, x2) == doctest::Approx(117.5));
    CHECK(p1.small_time * (1 - x1) + p2.small_time * (1 - x2) == doctest::Approx(117.5));
    // Grid oracle brackets the same optimum.
    auto w = Workload::make({p1, p2});
    CHECK(oracle::grid_optimum(w, Machine::make(1, 1), 1000) == doctest::Approx(117.5).epsilon(0.002));
}

TEST_CASE("two processes: P_2 dominates") {
    auto p1 = ProcessSpec::make("P1", 80, 2.0);
    auto p2 = ProcessSpec::make("P2", 200, 1.1);
    auto r = solve_two_1b1s(p1, p2);
    CHECK(r.case_tag == Case1B1S::TwoP2Big);
    CHECK(r.t_f == doctest::Approx(200));
    CHECK(r.assignment.at("P1") == doctest::Approx(0.0));
    CHECK(r.assignment.at("P2") == doctest::Approx(1.0));
    CHECK(oracle::grid_optimum(Workload::make({p1, p2}), Machine::make(1, 1), 400) ==
          doctest::Approx(200).epsilon(0.005));
}

TEST_CASE("two processes: requires canonical order") {
    CHECK_THROWS_AS(
        solve_two_1b1s(ProcessSpec::make("a", 10, 1.2), ProcessSpec::make("b", 10, 1.5)),
        ValidationError);
}

TEST_CASE("two processes with sf = 1 degenerate to a plain balance") {
    auto r = solve_two_1b1s(ProcessSpec::make("a", 100, 1.0), ProcessSpec::make("b", 100, 1.0));
    // T_1^b >= T_2^s holds with equality, so the dominance branch fires.
    CHECK(r.t_f == doctest::Approx(100));
}

TEST_CASE("find_split_k on reference instance") {
    auto w = canonical_order(hemc::test::reference_instance());
    auto [k, x_k] = find_split_k(w);
    CHECK(k == 1); // P_2
    CHECK(x_k == doctest::Approx((675.0 - 150.0) / 900.0));
}

TEST_CASE("find_split_k boundary and single-process cases") {
    auto w3 = Workload::make({ProcessSpec::make("a", 100, 2), ProcessSpec::make("b", 100, 2),
                              ProcessSpec::make("c", 100, 2)});
    auto [k, x_k] = find_split_k(canonical_order(w3));
    CHECK(k == 1);
    CHECK(x_k == doctest::Approx(1.0));

    auto w1 = Workload::make({ProcessSpec::make("solo", 120, 1.8)});
    auto [k1, x1] = find_split_k(w1);
    CHECK(k1 == 0);
    CHECK(x1 == doctest::Approx(216.0 / (120.0 + 216.0)));

    CHECK_THROWS_AS(find_split_k(Workload{}), ValidationError);
}

TEST_CASE("solve_n_1b1s reproduces the reference instance optimum") {
    auto r = solve_n_1b1s(hemc::test::reference_instance());
    CHECK(r.case_tag == Case1B1S::NPkBig);
    CHECK(r.t_f == doctest::Approx(375));
    CHECK(r.assignment.at("P1") == doctest::Approx(0.0));
    CHECK(r.assignment.at("P2") == doctest::Approx(1.0));
    CHECK(r.assignment.at("P3") == doctest::Approx(0.0));
}

TEST_CASE("solve_n_1b1s no-overlap branch") {
    auto w = Workload::make({ProcessSpec::make("a", 100, 2), ProcessSpec::make("b", 100, 2),
                             ProcessSpec::make("c", 100, 2)});
    auto r = solve_n_1b1s(w);
    CHECK(r.case_tag == Case1B1S::NNoOverlap);
    CHECK(r.t_f == doctest::Approx(200));
    CHECK(r.assignment.at("a") == doctest::Approx(1.0));
    CHECK(r.assignment.at("b") == doctest::Approx(1.0));
    CHECK(r.assignment.at("c") == doctest::Approx(0.0));
}

TEST_CASE("solve_n_1b1s trade branch") {
    auto w = Workload::make({ProcessSpec::make("P1", 60, 2.0), ProcessSpec::make("P2", 50, 1.8),
                             ProcessSpec::make("P3", 200, 1.1)});
    auto r = solve_n_1b1s(w);
    CHECK(r.case_tag == Case1B1S::NJTrade);
    CHECK(r.t_f == doctest::Approx(200.0 + 220.0 / 24.0 - 200.0 / 24.0).epsilon(1e-9)); // 200.8333
    CHECK(r.assignment.at("P1") == doctest::Approx(11.0 / 72.0));
    CHECK(r.assignment.at("P2") == doctest::Approx(0.0));
    CHECK(r.assignment.at("P3") == doctest::Approx(23.0 / 24.0));
    REQUIRE(r.split_k.has_value());
    CHECK(*r.split_k == "P3");
    REQUIRE(r.split_j.has_value());
    CHECK(*r.split_j == "P1");

    // t^b = t^s = t_k within 1e-9 relative.
    auto loads = load_report(w, Machine::make(1, 1), r.assignment);
    CHECK(loads.t_b == doctest::Approx(r.t_f).epsilon(1e-9));
    CHECK(loads.t_s == doctest::Approx(r.t_f).epsilon(1e-9));
    CHECK(loads.per_process.at("P3") == doctest::Approx(r.t_f).epsilon(1e-9));
}

TEST_CASE("solve_n_1b1s single process goes fully big") {
    auto r = solve_n_1b1s(Workload::make({ProcessSpec::make("solo", 77, 1.4)}));
    CHECK(r.t_f == doctest::Approx(77));
    CHECK(r.assignment.at("solo") == doctest::Approx(1.0));
}

TEST_CASE("solve_n_1b1s properties on random instances") {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> nd(1, 8);
    auto m = Machine::make(1, 1);
    for (int i = 0; i < 300; ++i) {
        auto w = hemc::test::random_workload(rng, nd(rng));
        auto r = solve_n_1b1s(w);

        // Self-consistency with load_report.
        auto loads = load_report(w, m, r.assignment);
        CHECK(r.t_f == doctest::Approx(loads.t_f).epsilon(1e-9));

        // Oracle equivalence.
        double opt = oracle::bisect_optimum(w, m, 1e-9);
        CHECK(r.t_f == doctest::Approx(opt).epsilon(1e-6));

        // At most two strictly fractional assignments.
        int fractional = 0;
        for (const auto& [id, x] : r.assignment.fractions)
            if (x > 1e-9 && x < 1 - 1e-9)
                ++fractional;
        CHECK(fractional <= 2);
    }
}

TEST_CASE("solve_n_1b1s is permutation invariant") {
    std::mt19937_64 rng(103);
    for (int i = 0; i < 50; ++i) {
        auto w = hemc::test::random_workload(rng, 6);
        auto r1 = solve_n_1b1s(w);
        std::shuffle(w.processes.begin(), w.processes.end(), rng);
        auto r2 = solve_n_1b1s(w);
        CHECK(r1.t_f == doctest::Approx(r2.t_f).epsilon(1e-12));
    }
}
