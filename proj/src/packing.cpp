#include "hemc/packing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

namespace hemc {

namespace {

// Sequential filler over a pool of bins of height t_f. Big pools fill bottom
// up, small pools top down; a portion that crosses a bin boundary wraps so
// that its earlier-time part lands at the fresh end of the next bin, which
// keeps the two parts disjoint in time.
class PoolFiller {
public:
    PoolFiller(std::vector<std::vector<Segment>>& bins, double t_f, bool bottom_up)
        : bins_(bins), t_f_(t_f), bottom_up_(bottom_up), slack_(tol(t_f) * 16) {}

    void place(const std::string& id, double len) {
        current_id_ = id;
        while (len > 0) {
            std::size_t q = bin_index();
            double pos = std::max(offset_ - static_cast<double>(q) * t_f_, 0.0);
            double room = t_f_ - pos;
            if (len <= room + slack_) {
                emit(q, pos, std::min(len, room));
                offset_ += len;
                return;
            }
            emit(q, pos, room);
            offset_ += room;
            len -= room;
        }
    }

private:
    void emit(std::size_t q, double pos, double len) {
        if (len <= 0)
            return;
        Segment seg;
        seg.process = current_id_;
        if (bottom_up_) {
            seg.start = pos;
            seg.end = pos + len;
        } else {
            seg.end = t_f_ - pos;
            seg.start = seg.end - len;
        }
        if (seg.end > seg.start)
            bins_.at(q).push_back(seg);
    }

    std::size_t bin_index() const {
        auto q = static_cast<std::size_t>((offset_ + slack_) / t_f_);
        return std::min(q, bins_.size() - 1);
    }


    std::vector<std::vector<Segment>>& bins_;
    double t_f_;
    bool bottom_up_;
    double slack_;
    double offset_ = 0;
    std::string current_id_;
};

} // namespace

Schedule pack(const Workload& w_in, const Machine& m, const FractionalAssignment& a, double t_f) {
    Workload w = canonical_order(w_in);
    const auto& ps = w.processes;
    const double slack = tol(t_f) * 16;

    std::vector<double> big_part(ps.size()), small_part(ps.size());
    double sum_b = 0, sum_s = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        double x = a.at(ps[i].id);
        // A portion within eps of zero emits no segment at all.
        big_part[i] = x * ps[i].big_time;
        small_part[i] = (1.0 - x) * ps[i].small_time;
        if (big_part[i] <= 1e-12 * ps[i].big_time)
            big_part[i] = 0;
        if (small_part[i] <= 1e-12 * ps[i].small_time)
            small_part[i] = 0;
        sum_b += big_part[i];
        sum_s += small_part[i];
        if (big_part[i] + small_part[i] > t_f + slack)
            throw ValidationError("pack: process '" + ps[i].id + "' does not fit within t_f");
    }
    if (sum_b > m.big_count * t_f + slack || sum_s > m.small_count * t_f + slack)
        throw ValidationError("pack: pool load exceeds bin capacity at t_f");

    Schedule sched;
    sched.makespan = t_f;
    sched.big_cores.resize(m.big_count);
    sched.small_cores.resize(m.small_count);
    PoolFiller big(sched.big_cores, t_f, true);
    PoolFiller small(sched.small_cores, t_f, false);

    auto is_split = [&](std::size_t i) { return big_part[i] > 0 && small_part[i] > 0; };
    auto place_both = [&](std::size_t i) {
        big.place(ps[i].id, big_part[i]);
        small.place(ps[i].id, small_part[i]);
    };

    // (1) longest split processes, (2) the split process below t_f,
    // (3) fully assigned processes, all in canonical order within a group.
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (is_split(i) && big_part[i] + small_part[i] >= t_f - slack)
            place_both(i);
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (is_split(i) && big_part[i] + small_part[i] < t_f - slack)
            place_both(i);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (is_split(i))
            continue;
        if (big_part[i] > 0)
            big.place(ps[i].id, big_part[i]);
        else if (small_part[i] > 0)
            small.place(ps[i].id, small_part[i]);
    }

    auto by_start = [](const Segment& x, const Segment& y) { return x.start < y.start; };
    for (auto& core : sched.big_cores)
        std::sort(core.begin(), core.end(), by_start);
    for (auto& core : sched.small_cores)
        std::sort(core.begin(), core.end(), by_start);
    return sched;
}

std::vector<Violation> validate(const Schedule& s, const Workload& w, const Machine& m) {
    std::vector<Violation> out;
    const double eps = tol(s.makespan) * 16;

    std::unordered_map<std::string, const ProcessSpec*> specs;
    for (const auto& p : w.processes)
        specs[p.id] = &p;

    struct Interval {
        double start, end;
    };
    std::unordered_map<std::string, std::vector<Interval>> by_process;
    std::unordered_map<std::string, double> work; // completed fraction
    double max_end = 0;

    auto check_core = [&](const std::vector<Segment>& core, const std::string& label, bool is_big) {
        double prev_end = -1;
        for (const auto& seg : core) {
            if (!(seg.end > seg.start))
                out.push_back({"empty-segment", label, seg.start, seg.end, seg.process});
            if (seg.start < -eps || seg.end > s.makespan + eps)
                out.push_back({"out-of-range", label, seg.start, seg.end, seg.process});
            if (prev_end > seg.start + eps)
                out.push_back({"core-overlap", label, seg.start, prev_end, seg.process});
            prev_end = std::max(prev_end, seg.end);
            max_end = std::max(max_end, seg.end);

            auto it = specs.find(seg.process);
            if (it == specs.end()) {
                out.push_back({"unknown-process", label, seg.start, seg.end, seg.process});
                continue;
            }
            by_process[seg.process].push_back({seg.start, seg.end});
            double dur = seg.end - seg.start;
            work[seg.process] += dur / (is_big ? it->second->big_time : it->second->small_time);
        }
    };
    for (int i = 0; i < static_cast<int>(s.big_cores.size()); ++i)
        check_core(s.big_cores[i], "big[" + std::to_string(i) + "]", true);
    for (int i = 0; i < static_cast<int>(s.small_cores.size()); ++i)
        check_core(s.small_cores[i], "small[" + std::to_string(i) + "]", false);

    if (static_cast<int>(s.big_cores.size()) != m.big_count ||
        static_cast<int>(s.small_cores.size()) != m.small_count)
        out.push_back({"core-count-mismatch", "machine", 0, 0,
                       "schedule core counts differ from the machine"});

    for (auto& [id, ivs] : by_process) {
        std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) {
            return a.start < b.start;
        });
        for (std::size_t i = 1; i < ivs.size(); ++i)
            if (ivs[i].start < ivs[i - 1].end - eps)
                out.push_back({"same-process-overlap", id, ivs[i].start, ivs[i - 1].end, ""});
    }

    for (const auto& p : w.processes) {
        auto it = work.find(p.id);
        double done = it == work.end() ? 0.0 : it->second;
        if (std::abs(done - 1.0) > 1e-9)
            out.push_back({"work-incomplete", p.id, 0, 0,
                           "completed fraction " + std::to_string(done)});
    }

    if (std::abs(max_end - s.makespan) > eps)
        out.push_back({"makespan-mismatch", "schedule", max_end, s.makespan,
                       "last segment ends at " + std::to_string(max_end)});
    return out;
}

} // namespace hemc
