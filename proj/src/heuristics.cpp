#include "hemc/heuristics.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <vector>

namespace hemc {

const char* to_string(HeuristicKind k) {
    return k == HeuristicKind::IpcDriven ? "IPC_DRIVEN" : "LTF";
}

namespace {

using Entry = std::pair<double, const ProcessSpec*>;

struct KeyDescIdAsc {
    bool operator()(const Entry& a, const Entry& b) const {
        if (a.first != b.first)
            return a.first > b.first;
        return a.second->id < b.second->id;
    }
};

struct KeyAscIdAsc {
    bool operator()(const Entry& a, const Entry& b) const {
        if (a.first != b.first)
            return a.first < b.first;
        return a.second->id < b.second->id;
    }
};

} // namespace

Schedule schedule_heuristic(const Workload& w_in, const Machine& m, HeuristicKind kind) {
    Workload w = Workload::make(w_in.processes);
    if (w.empty())
        throw ValidationError("schedule_heuristic: empty workload");

    // Waiting pool ordered by each dispatch key. IPC needs both ends of the
    // SF order with the same ascending-id tie rule, hence two SF sets.
    std::set<Entry, KeyDescIdAsc> by_sf_desc, by_ts_desc;
    std::set<Entry, KeyAscIdAsc> by_sf_asc;
    for (const auto& p : w.processes) {
        by_sf_desc.insert({p.sf, &p});
        by_sf_asc.insert({p.sf, &p});
        by_ts_desc.insert({p.small_time, &p});
    }

    Schedule sched;
    sched.big_cores.resize(m.big_count);
    sched.small_cores.resize(m.small_count);

    // (free time, core rank); big cores rank before small ones so they
    // dispatch first at simultaneous events.
    using CoreEvent = std::pair<double, int>;
    std::priority_queue<CoreEvent, std::vector<CoreEvent>, std::greater<>> idle;
    for (int c = 0; c < m.total(); ++c)
        idle.emplace(0.0, c);

    while (!by_sf_desc.empty()) {
        auto [now, rank] = idle.top();
        idle.pop();
        bool is_big = rank < m.big_count;

        const ProcessSpec* p;
        if (kind == HeuristicKind::Ltf)
            p = by_ts_desc.begin()->second;
        else if (is_big)
            p = by_sf_desc.begin()->second; // highest SF
        else
            p = by_sf_asc.begin()->second; // lowest SF
        by_sf_desc.erase({p->sf, p});
        by_sf_asc.erase({p->sf, p});
        by_ts_desc.erase({p->small_time, p});

        double dur = is_big ? p->big_time : p->small_time;
        auto& core = is_big ? sched.big_cores[rank] : sched.small_cores[rank - m.big_count];
        core.push_back({p->id, now, now + dur});
        idle.emplace(now + dur, rank);
        sched.makespan = std::max(sched.makespan, now + dur);
    }
    return sched;
}

} // namespace hemc
