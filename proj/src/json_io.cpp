#include "hemc/json_io.hpp"

#include <fstream>

namespace hemc {

using nlohmann::json;

WorkloadFile parse_workload(const json& j) {
    if (!j.is_object())
        throw ValidationError("workload file: top level must be an object");
    if (j.value("format", "") != "hemc/1")
        throw ValidationError("workload file: expected \"format\": \"hemc/1\"");
    if (!j.contains("machine") || !j["machine"].is_object())
        throw ValidationError("workload file: missing \"machine\" object");
    const auto& jm = j["machine"];
    if (!jm.contains("big") || !jm.contains("small") || !jm["big"].is_number_integer() ||
        !jm["small"].is_number_integer())
        throw ValidationError("workload file: machine.big and machine.small must be integers");
    Machine m = Machine::make(jm["big"].get<int>(), jm["small"].get<int>());

    if (!j.contains("processes") || !j["processes"].is_array())
        throw ValidationError("workload file: missing \"processes\" array");
    std::vector<ProcessSpec> ps;
    int idx = 0;
    for (const auto& jp : j["processes"]) {
        std::string where = "processes[" + std::to_string(idx++) + "]";
        if (!jp.is_object() || !jp.contains("id") || !jp.contains("big_time") || !jp.contains("sf"))
            throw ValidationError("workload file: " + where + " needs id, big_time, sf");
        if (!jp["id"].is_string() || !jp["big_time"].is_number() || !jp["sf"].is_number())
            throw ValidationError("workload file: " + where + " has wrongly typed fields");
        if (jp.contains("small_time")) {
            if (!jp["small_time"].is_number())
                throw ValidationError("workload file: " + where + ".small_time must be a number");
            ps.push_back(ProcessSpec::make(jp["id"].get<std::string>(),
                                           jp["big_time"].get<double>(), jp["sf"].get<double>(),
                                           jp["small_time"].get<double>()));
        } else {
            ps.push_back(ProcessSpec::make(jp["id"].get<std::string>(),
                                           jp["big_time"].get<double>(), jp["sf"].get<double>()));
        }
    }
    if (ps.empty())
        throw ValidationError("workload file: process list is empty");
    return WorkloadFile{m, Workload::make(std::move(ps))};
}

WorkloadFile load_workload(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open workload file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError("workload file '" + path + "': " + e.what());
    }
    return parse_workload(j);
}

json workload_to_json(const WorkloadFile& wf) {
    json j;
    j["format"] = "hemc/1";
    j["machine"] = {{"big", wf.machine.big_count}, {"small", wf.machine.small_count}};
    j["processes"] = json::array();
    for (const auto& p : wf.workload.processes)
        j["processes"].push_back({{"id", p.id}, {"big_time", p.big_time}, {"sf", p.sf}});
    return j;
}

json schedule_to_json(const Schedule& s) {
    json j;
    j["format"] = "hemc-sched/1";
    j["makespan"] = s.makespan;
    j["cores"] = json::array();
    auto emit = [&](const std::vector<std::vector<Segment>>& pool, const char* kind) {
        for (int i = 0; i < static_cast<int>(pool.size()); ++i) {
            json segs = json::array();
            for (const auto& seg : pool[i])
                segs.push_back({{"process", seg.process}, {"start", seg.start}, {"end", seg.end}});
            j["cores"].push_back({{"kind", kind}, {"index", i}, {"segments", std::move(segs)}});
        }
    };
    emit(s.big_cores, "big");
    emit(s.small_cores, "small");
    return j;
}

Schedule parse_schedule(const json& j) {
    if (j.value("format", "") != "hemc-sched/1")
        throw ValidationError("schedule file: expected \"format\": \"hemc-sched/1\"");
    Schedule s;
    s.makespan = j.at("makespan").get<double>();
    for (const auto& jc : j.at("cores")) {
        std::vector<Segment> segs;
        for (const auto& js : jc.at("segments"))
            segs.push_back({js.at("process").get<std::string>(), js.at("start").get<double>(),
                            js.at("end").get<double>()});
        if (jc.at("kind").get<std::string>() == "big")
            s.big_cores.push_back(std::move(segs));
        else
            s.small_cores.push_back(std::move(segs));
    }
    return s;
}

json report_to_json(const SolveReport& r) {
    json j;
    j["format"] = "hemc-report/1";
    j["t_f"] = r.t_f;
    j["terminal"] = to_string(r.terminal);
    j["t_b"] = r.loads.t_b;
    j["t_s"] = r.loads.t_s;
    j["t_max"] = r.loads.t_max;
    j["longest_set"] = r.longest_set;
    json xs = json::object();
    for (const auto& [id, x] : std::map<std::string, double>(r.assignment.fractions.begin(),
                                                            r.assignment.fractions.end()))
        xs[id] = x;
    j["assignment"] = std::move(xs);
    return j;
}

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out)
        throw ValidationError("cannot open output file '" + path + "'");
    out << j.dump(2) << "\n";
}

} // namespace hemc
