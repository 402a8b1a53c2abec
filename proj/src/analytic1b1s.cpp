#include "hemc/analytic1b1s.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace hemc {

const char* to_string(Case1B1S c) {
    switch (c) {
    case Case1B1S::TwoP1Big: return "TWO_P1_BIG";
    case Case1B1S::TwoBalanced: return "TWO_BALANCED";
    case Case1B1S::TwoP2Big: return "TWO_P2_BIG";
    case Case1B1S::NNoOverlap: return "N_NO_OVERLAP";
    case Case1B1S::NPkBig: return "N_PK_BIG";
    case Case1B1S::NJTrade: return "N_J_TRADE";
    }
    return "?";
}

namespace {

double clamp01(double x) { return x < 0 ? 0.0 : (x > 1 ? 1.0 : x); }

} // namespace

Solve1B1SResult solve_two_1b1s(const ProcessSpec& p1, const ProcessSpec& p2) {
    if (p1.sf < p2.sf)
        throw ValidationError("solve_two_1b1s expects F_1 >= F_2 (canonical order)");
    Solve1B1SResult r;
    double scale = std::max(p1.small_time, p2.small_time);

    if (approx_ge(p1.big_time, p2.small_time, scale)) {
        // P_1 dominates even when run entirely on the big core.
        r.assignment.fractions = {{p1.id, 1.0}, {p2.id, 0.0}};
        r.t_f = p1.big_time;
        r.case_tag = Case1B1S::TwoP1Big;
        return r;
    }
    if (approx_ge(p2.big_time, p1.small_time, scale)) {
        r.assignment.fractions = {{p1.id, 0.0}, {p2.id, 1.0}};
        r.t_f = p2.big_time;
        r.case_tag = Case1B1S::TwoP2Big;
        return r;
    }

    double denom = 1.0 - 1.0 / (p1.sf * p2.sf);
    double x1, x2;
    if (denom < kRelEps) {
        // Both scaling factors are 1: every balanced split is optimal; keep
        // P_2 on the small core and balance with P_1 alone.
        x2 = 0.0;
        x1 = clamp01((p1.small_time + p2.small_time) / (p1.big_time + p1.small_time));
    } else {
        x1 = clamp01((1.0 - p2.big_time / p1.small_time) / denom);
        x2 = clamp01((1.0 - p1.big_time / p2.small_time) / denom);
    }
    r.assignment.fractions = {{p1.id, x1}, {p2.id, x2}};
    r.t_f = p1.big_time * x1 + p2.big_time * x2; // t^b; equals t_1 = t_2 = t^s here
    r.case_tag = Case1B1S::TwoBalanced;
    r.split_k = p1.id;
    r.split_j = p2.id;
    return r;
}

SplitK find_split_k(const Workload& w) {
    if (w.empty())
        throw ValidationError("find_split_k: empty workload");
    const auto& ps = w.processes;
    std::size_t n = ps.size();

    double total_s = 0;
    for (const auto& p : ps)
        total_s += p.small_time;
    double scale = total_s;

    double prefix_b = 0;   // sum of T_i^b for i < k
    double suffix_s = total_s; // sum of T_i^s for i >= k
    for (std::size_t k = 0; k < n; ++k) {
        bool lo = approx_le(prefix_b, suffix_s, scale);
        bool hi = approx_ge(prefix_b + ps[k].big_time, suffix_s - ps[k].small_time, scale);
        if (lo && hi) {
            double x = (suffix_s - prefix_b) / (ps[k].big_time + ps[k].small_time);
            return SplitK{k, clamp01(x)};
        }
        prefix_b += ps[k].big_time;
        suffix_s -= ps[k].small_time;
    }
    throw std::logic_error("find_split_k: no key process found (tolerance bug)");
}

Solve1B1SResult solve_n_1b1s(const Workload& w_in) {
    if (w_in.empty())
        throw ValidationError("solve_n_1b1s: empty workload");
    Workload w = canonical_order(w_in);
    const auto& ps = w.processes;
    std::size_t n = ps.size();

    std::vector<double> prefix_b(n + 1, 0), suffix_s(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        prefix_b[i + 1] = prefix_b[i] + ps[i].big_time;
    for (std::size_t i = n; i-- > 0;)
        suffix_s[i] = suffix_s[i + 1] + ps[i].small_time;
    double scale = suffix_s[0];

    auto [k, x_k] = find_split_k(w);
    const ProcessSpec& pk = ps[k];

    Solve1B1SResult r;
    r.split_k = pk.id;
    auto& x = r.assignment.fractions;
    for (std::size_t i = 0; i < n; ++i)
        x[ps[i].id] = i < k ? 1.0 : 0.0;

    double t_b = prefix_b[k] + x_k * pk.big_time;
    double t_k = exec_time(pk, x_k);
    if (approx_ge(t_b, t_k, scale)) {
        // Balanced partition has no self-overlap of P_k.
        x[pk.id] = x_k;
        r.t_f = t_b;
        r.case_tag = Case1B1S::NNoOverlap;
        return r;
    }

    double other_s = suffix_s[0] - pk.small_time;
    if (approx_ge(pk.big_time, other_s, scale)) {
        // P_k runs alone on the big core; everything else fits on the small one.
        for (std::size_t i = 0; i < n; ++i)
            x[ps[i].id] = i == k ? 1.0 : 0.0;
        r.t_f = pk.big_time;
        r.case_tag = Case1B1S::NPkBig;
        return r;
    }

    // Trade lower-SF big-core processes against the small-core part of P_k
    // until some P_j (j < k) splits and t^b = t^s = t_k.
    for (std::size_t j = k; j-- > 0;) {
        // sum of T_i^s for i in [j..N) excluding k (k > j always here)
        double tail_excl_j = suffix_s[j] - pk.small_time;
        double tail_excl_j1 = suffix_s[j + 1] - pk.small_time;
        bool lo = approx_ge(prefix_b[j] + pk.sf * tail_excl_j, pk.small_time, scale);
        bool hi = approx_le(prefix_b[j + 1] + pk.sf * tail_excl_j1, pk.small_time, scale);
        if (!(lo && hi))
            continue;

        const ProcessSpec& pj = ps[j];
        double denom = pk.sf * pj.small_time - pj.big_time;
        if (denom <= kAbsEps)
            continue; // F_j = F_k = 1; unreachable unless an earlier branch already fired
        double x_j = (prefix_b[j] + pk.sf * tail_excl_j - pk.small_time) / denom;
        x_j = clamp01(x_j);
        // x_k from the defining balance pair: x_k T_k^b equals the small-core
        // load below it.
        double new_x_k = ((1.0 - x_j) * pj.small_time + tail_excl_j1) / pk.big_time;
        new_x_k = clamp01(new_x_k);

        for (std::size_t i = 0; i < n; ++i)
            x[ps[i].id] = i < j ? 1.0 : 0.0;
        x[pj.id] = x_j;
        x[pk.id] = new_x_k;
        r.t_f = exec_time(pk, new_x_k);
        r.case_tag = Case1B1S::NJTrade;
        r.split_j = pj.id;
        return r;
    }
    throw std::logic_error("solve_n_1b1s: no trade partner P_j found (tolerance bug)");
}

} // namespace hemc
