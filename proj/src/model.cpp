#include "hemc/model.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace hemc {

ProcessSpec ProcessSpec::make(std::string id, double big_time, double sf) {
    if (id.empty())
        throw ValidationError("process id must be non-empty");
    if (!(big_time > 0) || !std::isfinite(big_time))
        throw ValidationError("process '" + id + "': big_time must be positive");
    if (!(sf >= 1) || !std::isfinite(sf))
        throw ValidationError("process '" + id + "': sf must be >= 1");
    ProcessSpec p;
    p.id = std::move(id);
    p.big_time = big_time;
    p.sf = sf;
    p.small_time = big_time * sf;
    return p;
}

ProcessSpec ProcessSpec::make(std::string id, double big_time, double sf, double small_time) {
    ProcessSpec p = make(std::move(id), big_time, sf);
    double expected = p.small_time;
    if (std::abs(small_time - expected) > 1e-9 * std::max(std::abs(expected), 1.0))
        throw ValidationError("process '" + p.id + "': small_time " + std::to_string(small_time) +
                              " inconsistent with big_time * sf = " + std::to_string(expected));
    return p;
}

Machine Machine::make(int big_count, int small_count) {
    if (big_count < 1 || small_count < 1)
        throw ValidationError("machine must have at least one big and one small core "
                              "(homogeneous machines are not supported)");
    return Machine{big_count, small_count};
}

Workload Workload::make(std::vector<ProcessSpec> processes) {
    std::unordered_set<std::string> ids;
    for (const auto& p : processes)
        if (!ids.insert(p.id).second)
            throw ValidationError("duplicate process id '" + p.id + "'");
    return Workload{std::move(processes)};
}

double FractionalAssignment::at(const std::string& id) const {
    auto it = fractions.find(id);
    if (it == fractions.end())
        throw ValidationError("assignment is missing process '" + id + "'");
    return it->second;
}

double exec_time(const ProcessSpec& p, double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("fraction x must be in [0,1]");
    return p.big_time * x + p.small_time * (1.0 - x);
}

Workload canonical_order(Workload w) {
    // Validate id uniqueness even for workloads built by aggregate init.
    w = Workload::make(std::move(w.processes));
    std::stable_sort(w.processes.begin(), w.processes.end(),
                     [](const ProcessSpec& a, const ProcessSpec& b) {
                         if (a.sf != b.sf)
                             return a.sf > b.sf;
                         return a.id < b.id;
                     });
    return w;
}

LoadReport load_report(const Workload& w, const Machine& m, const FractionalAssignment& a) {
    LoadReport r;
    for (const auto& p : w.processes) {
        double x = a.at(p.id);
        if (!(x >= 0.0 && x <= 1.0))
            throw ValidationError("assignment for '" + p.id + "' outside [0,1]");
        double t = exec_time(p, x);
        r.per_process[p.id] = t;
        r.t_b += p.big_time * x;
        r.t_s += p.small_time * (1.0 - x);
        r.t_max = std::max(r.t_max, t);
    }
    r.t_f = std::max({r.t_max, r.t_b / m.big_count, r.t_s / m.small_count});
    return r;
}

} // namespace hemc
