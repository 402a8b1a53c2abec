#include "hemc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace hemc {
namespace oracle {

bool feasible(const Workload& w_in, const Machine& m, double t) {
    if (!(t > 0))
        return false;
    Workload w = canonical_order(w_in);
    const auto& ps = w.processes;
    const double B = m.big_count, S = m.small_count;
    const double slack = tol(t);

    // Minimum big fraction forced by t_k <= t.
    std::vector<double> x(ps.size(), 0.0);
    double big_load = 0, small_load = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const auto& p = ps[i];
        if (p.big_time > t + slack)
            return false; // t_k >= T^b regardless of the split
        if (p.small_time - p.big_time > kAbsEps && p.small_time > t) {
            x[i] = (p.small_time - t) / (p.small_time - p.big_time);
            if (x[i] > 1)
                x[i] = 1;
        }
        big_load += x[i] * p.big_time;
        small_load += (1.0 - x[i]) * p.small_time;
    }
    if (big_load > B * t + slack)
        return false;

    // Shed remaining small-core load with the big-core budget, highest SF
    // first (one big second removes F_k small seconds).
    for (std::size_t i = 0; i < ps.size() && small_load > S * t + slack; ++i) {
        double budget = B * t - big_load;
        if (budget <= 0)
            break;
        double raise = std::min(1.0 - x[i], budget / ps[i].big_time);
        if (raise <= 0)
            continue;
        big_load += raise * ps[i].big_time;
        small_load -= raise * ps[i].small_time;
    }
    return small_load <= S * t + slack;
}

double bisect_optimum(const Workload& w, const Machine& m, double rel_tol) {
    if (rel_tol < 1e-12)
        throw ValidationError("bisect_optimum: rel_tol must be >= 1e-12");
    if (w.empty())
        throw ValidationError("bisect_optimum: empty workload");
    double hi = 0;
    for (const auto& p : w.processes)
        hi += p.small_time;
    double lo = 0;
    for (int iter = 0; iter < 200 && hi - lo > rel_tol * hi; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (feasible(w, m, mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

namespace {

struct GridContext {
    std::vector<double> tb, ts;
    double B = 1, S = 1;
    int g = 10;
    double best = 0;
};

// With every other coordinate fixed, the objective as a function of the last
// fraction is a max of non-increasing terms and one increasing term, so it
// is unimodal; locate the crossing by binary search over grid steps.
void min_over_last(GridContext& c, double t_b, double t_s, double t_max) {
    std::size_t i = c.tb.size() - 1;
    auto dec = [&](int j) {
        double x = static_cast<double>(j) / c.g;
        double tk = c.tb[i] * x + c.ts[i] * (1 - x);
        return std::max({t_max, tk, (t_s + c.ts[i] * (1 - x)) / c.S});
    };
    auto inc = [&](int j) { return (t_b + c.tb[i] * static_cast<double>(j) / c.g) / c.B; };

    int lo = 0, hi = c.g;
    while (lo < hi) { // smallest j with inc >= dec
        int mid = (lo + hi) / 2;
        if (inc(mid) >= dec(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    for (int j = std::max(0, lo - 1); j <= std::min(c.g, lo + 1); ++j)
        c.best = std::min(c.best, std::max(dec(j), inc(j)));
}

void grid_recurse(GridContext& c, std::size_t i, double t_b, double t_s, double t_max) {
    if (i + 1 == c.tb.size()) {
        min_over_last(c, t_b, t_s, t_max);
        return;
    }
    for (int j = 0; j <= c.g; ++j) {
        double x = static_cast<double>(j) / c.g;
        grid_recurse(c, i + 1, t_b + c.tb[i] * x, t_s + c.ts[i] * (1 - x),
                     std::max(t_max, c.tb[i] * x + c.ts[i] * (1 - x)));
    }
}

} // namespace

double grid_optimum(const Workload& w_in, const Machine& m, int grid) {
    if (w_in.empty())
        throw ValidationError("grid_optimum: empty workload");
    if (w_in.size() > 5)
        throw ValidationError("grid_optimum: refusing N > 5 (cost G^N)");
    if (grid < 10)
        throw ValidationError("grid_optimum: grid must be >= 10");

    Workload w = canonical_order(w_in);
    GridContext c;
    for (const auto& p : w.processes) {
        c.tb.push_back(p.big_time);
        c.ts.push_back(p.small_time);
        c.best += p.small_time; // everything-on-small upper bound
    }
    c.B = m.big_count;
    c.S = m.small_count;
    c.g = grid;
    grid_recurse(c, 0, 0, 0, 0);
    return c.best;
}

} // namespace hemc::oracle
} // namespace hemc
