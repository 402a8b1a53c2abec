#pragma once

#include <optional>
#include <string>

#include "hemc/model.hpp"

namespace hemc {

// Terminal cases of the 1B1S analytical solver.
enum class Case1B1S {
    TwoP1Big,   // T_1^b >= T_2^s: P_1 owns the big core
    TwoBalanced, // both cores balanced, t_1 = t_2 = t^b = t^s
    TwoP2Big,   // T_2^b >= T_1^s: P_2 owns the big core
    NNoOverlap, // balanced split with t^b >= t_k
    NPkBig,     // key process alone on the big core
    NJTrade     // trade down to P_j, t^b = t^s = t_k
};

const char* to_string(Case1B1S c);

struct Solve1B1SResult {
    FractionalAssignment assignment;
    double t_f = 0;
    Case1B1S case_tag = Case1B1S::NNoOverlap;
    std::optional<std::string> split_k; // key process with the balancing split
    std::optional<std::string> split_j; // trade partner, when present
};

// Exact optimum for two processes on one big + one small core.
// Callers pass processes in canonical order (F_1 >= F_2).
Solve1B1SResult solve_two_1b1s(const ProcessSpec& p1, const ProcessSpec& p2);

// Key-process search on a canonically ordered workload: the smallest k whose
// balancing fraction lies in [0,1]. Returns a zero-based index and x_k.
struct SplitK {
    std::size_t k = 0;
    double x_k = 0;
};
SplitK find_split_k(const Workload& w);

// Exact optimum for N processes on one big + one small core.
Solve1B1SResult solve_n_1b1s(const Workload& w);

} // namespace hemc
