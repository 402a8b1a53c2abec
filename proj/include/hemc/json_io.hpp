#pragma once

#include <iosfwd>
#include <string>

#include "hemc/general.hpp"
#include "hemc/model.hpp"
#include "hemc/packing.hpp"

#include <json.hpp>

namespace hemc {

// Workload file: {"format":"hemc/1","machine":{"big":B,"small":S},
//                 "processes":[{"id","big_time","sf"[,"small_time"]}]}
struct WorkloadFile {
    Machine machine;
    Workload workload;
};

WorkloadFile parse_workload(const nlohmann::json& j);
WorkloadFile load_workload(const std::string& path);
nlohmann::json workload_to_json(const WorkloadFile& wf);

// Schedule file: {"format":"hemc-sched/1","makespan":...,
//                 "cores":[{"kind","index","segments":[...]}]}
nlohmann::json schedule_to_json(const Schedule& s);
Schedule parse_schedule(const nlohmann::json& j);

nlohmann::json report_to_json(const SolveReport& r);

void write_json(const std::string& path, const nlohmann::json& j);

} // namespace hemc
