#pragma once

#include <string>
#include <vector>

#include "hemc/model.hpp"

namespace hemc {

struct Segment {
    std::string process;
    double start = 0;
    double end = 0;
};

// Concrete per-core preemptive timelines realizing an assignment at a
// given makespan.
struct Schedule {
    std::vector<std::vector<Segment>> big_cores;
    std::vector<std::vector<Segment>> small_cores;
    double makespan = 0;
};

// Bin-packing realization: big-core portions bottom-up, small-core portions
// top-down, longest split processes first, wrapping into fresh bins so the
// two halves of a wrapped portion never overlap in time.
Schedule pack(const Workload& w, const Machine& m, const FractionalAssignment& a, double t_f);

struct Violation {
    std::string rule;
    std::string subject; // process or core label
    double start = 0;
    double end = 0;
    std::string detail;
};

// Empty result iff the schedule is feasible: sorted non-overlapping core
// timelines, no same-process time overlap across cores, complete work per
// process, makespan equal to the last segment end.
std::vector<Violation> validate(const Schedule& s, const Workload& w, const Machine& m);

} // namespace hemc
