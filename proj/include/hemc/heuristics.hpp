#pragma once

#include "hemc/model.hpp"
#include "hemc/packing.hpp"

namespace hemc {

enum class HeuristicKind { IpcDriven, Ltf };

const char* to_string(HeuristicKind k);

// Non-migrating event-driven list scheduler. Each process runs entirely on
// one core. When a core idles: IPC-driven sends the highest-SF waiting
// process to big cores and the lowest-SF one to small cores; LTF sends the
// longest waiting process (by T^s) to any core, big cores first. Ties break
// by ascending id.
Schedule schedule_heuristic(const Workload& w, const Machine& m, HeuristicKind kind);

} // namespace hemc
