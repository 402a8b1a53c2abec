#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hemc/model.hpp"

namespace hemc {

// Terminal case of the general B-big / S-small solver.
enum class Terminal {
    Trivial,             // a big core per process, everything fully big
    BalancedDominates,   // t_b/B = t_s/S >= t_max at the initial balance
    LongestFullyBig,     // a longest process runs entirely on big cores
    LinesMeet,           // t_max lowered until it meets t_b/B
    CandidatesExhausted  // no trade partners left; unbalanced optimum
};

const char* to_string(Terminal t);

struct SolveReport {
    FractionalAssignment assignment;
    double t_f = 0;
    Terminal terminal = Terminal::BalancedDominates;
    LoadReport loads;
    std::vector<std::string> longest_set; // ids with t_k = t_f
};

enum class TradeEvent {
    InitialBalance,
    LongestSetGrows,     // t_max reached the next-distinct execution time
    CandidateJoins,      // rising t_c of the trade partner met t_max
    CandidateExhausted,  // trade partner fully moved to small cores
    MemberFullyBig,      // a longest process ran out of small-core time
    BalanceMet,          // t_max met t_b/B
    UnbalancedMove       // Fig-8(e)-style move after candidates ran out
};

// Optional per-iteration trace for debugging and the invariant test suite.
struct TraceStep {
    int iteration = 0;
    double t_max = 0;
    double t_b = 0;
    double t_s = 0;
    TradeEvent event = TradeEvent::InitialBalance;
};
using TraceCallback = std::function<void(const TraceStep&)>;

// N < B + S: longest processes (by T^s) on big cores, one process per core.
SolveReport solve_trivial(const Workload& w, const Machine& m);

// Balanced partition generalizing the 1B1S key-process split: prefix fully
// big, suffix fully small, one split process, t_b/B = t_s/S.
struct InitialBalance {
    std::size_t k = 0; // index of the split process in canonical order
    double x_k = 0;
};
InitialBalance initial_balance(const Workload& w, const Machine& m);

// Optimum preemptive makespan and assignment for N processes on B big and
// S small cores.
SolveReport solve(const Workload& w, const Machine& m, const TraceCallback& trace = {});

} // namespace hemc
