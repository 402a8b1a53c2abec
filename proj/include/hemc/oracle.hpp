#pragma once

#include "hemc/model.hpp"

namespace hemc {
namespace oracle {

// Decides whether some fractional assignment finishes every process by t:
// t_k <= t for all k, big pool load <= B*t, small pool load <= S*t.
// Greedy: force the minimum big fraction per process, then shed small-core
// load in descending-SF order (one big-core second removes F_k small-core
// seconds, so high F first).
bool feasible(const Workload& w, const Machine& m, double t);

// Smallest feasible makespan by bisection; feasibility is monotone in t.
double bisect_optimum(const Workload& w, const Machine& m, double rel_tol = 1e-9);

// Brute force over an N-dimensional fraction grid; N <= 5.
double grid_optimum(const Workload& w, const Machine& m, int grid);

} // namespace oracle
} // namespace hemc
