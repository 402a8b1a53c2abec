#include "hemc/general.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <vector>

namespace hemc {

const char* to_string(Terminal t) {
    switch (t) {
    case Terminal::Trivial: return "TRIVIAL";
    case Terminal::BalancedDominates: return "BALANCED_DOMINATES";
    case Terminal::LongestFullyBig: return "LONGEST_FULLY_BIG";
    case Terminal::LinesMeet: return "LINES_MEET";
    case Terminal::CandidatesExhausted: return "CANDIDATES_EXHAUSTED";
    }
    return "?";
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double clamp01(double x) { return x < 0 ? 0.0 : (x > 1 ? 1.0 : x); }

SolveReport build_report(const Workload& w, const Machine& m, Terminal terminal,
                         const std::vector<double>& big_part) {
    SolveReport r;
    r.terminal = terminal;
    for (std::size_t i = 0; i < w.size(); ++i)
        r.assignment.fractions[w.processes[i].id] = clamp01(big_part[i] / w.processes[i].big_time);
    r.loads = load_report(w, m, r.assignment);
    r.t_f = r.loads.t_f;
    for (const auto& p : w.processes)
        if (approx_ge(r.loads.per_process.at(p.id), r.t_f, r.t_f))
            r.longest_set.push_back(p.id);
    return r;
}

// A tied longest process under lazy equal-rate lowering. Its small-core
// time at cumulative reduction D is s_join - u * (D - join_delta).
struct Member {
    std::size_t idx;
    double join_delta;
    double s_join;
    double g_join;
    double u; // small-core seconds donated per unit of t reduction: F/(F-1)
};

} // namespace

SolveReport solve_trivial(const Workload& w_in, const Machine& m) {
    Workload w = Workload::make(w_in.processes);
    if (w.empty())
        throw ValidationError("solve_trivial: empty workload");
    if (static_cast<int>(w.size()) >= m.total())
        throw ValidationError("solve_trivial requires N < B + S");
    std::vector<const ProcessSpec*> order;
    for (const auto& p : w.processes)
        order.push_back(&p);
    std::sort(order.begin(), order.end(), [](const ProcessSpec* a, const ProcessSpec* b) {
        if (a->small_time != b->small_time)
            return a->small_time > b->small_time;
        return a->id < b->id;
    });
    SolveReport r;
    r.terminal = Terminal::Trivial;
    for (std::size_t i = 0; i < order.size(); ++i)
        r.assignment.fractions[order[i]->id] = i < static_cast<std::size_t>(m.big_count) ? 1.0 : 0.0;
    r.loads = load_report(w, m, r.assignment);
    r.t_f = r.loads.t_f;
    for (const auto& p : w.processes)
        if (approx_ge(r.loads.per_process.at(p.id), r.t_f, r.t_f))
            r.longest_set.push_back(p.id);
    return r;
}

InitialBalance initial_balance(const Workload& w, const Machine& m) {
    if (w.empty())
        throw ValidationError("initial_balance: empty workload");
    if (static_cast<int>(w.size()) < m.total())
        throw ValidationError("initial_balance requires N >= B + S");
    const auto& ps = w.processes;
    const double B = m.big_count, S = m.small_count;

    double total_s = 0;
    for (const auto& p : ps)
        total_s += p.small_time;
    double scale = std::max(B, S) * total_s;

    double prefix_b = 0;
    double suffix_s = total_s;
    for (std::size_t k = 0; k < ps.size(); ++k) {
        bool lo = approx_le(S * prefix_b, B * suffix_s, scale);
        bool hi = approx_ge(S * (prefix_b + ps[k].big_time), B * (suffix_s - ps[k].small_time), scale);
        if (lo && hi) {
            double x = (B * suffix_s - S * prefix_b) / (S * ps[k].big_time + B * ps[k].small_time);
            return InitialBalance{k, clamp01(x)};
        }
        prefix_b += ps[k].big_time;
        suffix_s -= ps[k].small_time;
    }
    throw std::logic_error("initial_balance: no split process found (tolerance bug)");
}

SolveReport solve(const Workload& w_in, const Machine& m, const TraceCallback& trace) {
    if (w_in.empty())
        throw ValidationError("solve: empty workload");
    // With a big core per process, fully-big is a matched lower bound
    // (t_k >= T_k^b always).
    if (static_cast<int>(w_in.size()) <= m.big_count)
        return solve_trivial(w_in, m);
    // Fewer processes than cores, but not enough big cores for everyone:
    // small cores beyond N - B can never carry load (each process adds at
    // most t to the small pool, and big-ward shifting caps the pool at
    // (N - B) * t), so the instance collapses to a machine the main
    // algorithm handles.
    if (static_cast<int>(w_in.size()) < m.total()) {
        Machine reduced = Machine::make(m.big_count, static_cast<int>(w_in.size()) - m.big_count);
        SolveReport r = solve(w_in, reduced, trace);
        r.loads = load_report(w_in, m, r.assignment);
        r.t_f = r.loads.t_f;
        r.longest_set.clear();
        for (const auto& p : canonical_order(w_in).processes)
            if (approx_ge(r.loads.per_process.at(p.id), r.t_f, r.t_f))
                r.longest_set.push_back(p.id);
        return r;
    }

    Workload w = canonical_order(w_in);
    const auto& ps = w.processes;
    const std::size_t n = ps.size();
    const double B = m.big_count, S = m.small_count;

    auto [k, x_k] = initial_balance(w, m);
    std::vector<double> g(n), s(n), t(n);
    for (std::size_t i = 0; i < n; ++i) {
        double x = i < k ? 1.0 : (i == k ? x_k : 0.0);
        g[i] = x * ps[i].big_time;
        s[i] = (1.0 - x) * ps[i].small_time;
        t[i] = g[i] + s[i];
    }
    double t_b = 0, t_s = 0, t_max = 0;
    for (std::size_t i = 0; i < n; ++i) {
        t_b += g[i];
        t_s += s[i];
        t_max = std::max(t_max, t[i]);
    }
    const double scale = t_max;
    const double atol = tol(scale);

    int iteration = 0;
    auto emit = [&](TradeEvent e) {
        if (trace)
            trace(TraceStep{iteration, t_max, t_b, t_s, e});
    };
    emit(TradeEvent::InitialBalance);

    if (approx_ge(t_b / B, t_max, scale))
        return build_report(w, m, Terminal::BalancedDominates, g);

    // --- iterative trading state ---
    double delta = 0; // cumulative reduction of t_max
    std::vector<Member> members;
    std::vector<char> in_set(n, 0);
    double sum_u = 0, sum_v = 0;
    // (delta at which a member's small portion runs out, member idx)
    std::priority_queue<std::pair<double, std::size_t>, std::vector<std::pair<double, std::size_t>>,
                        std::greater<>> exhaust;
    bool irreducible = false; // an F = 1 process joined the longest set
    std::multiset<std::pair<double, std::size_t>> statics;

    auto add_member = [&](std::size_t i) {
        in_set[i] = 1;
        if (ps[i].sf <= 1.0 + kRelEps) {
            if (s[i] > atol)
                irreducible = true;
            else
                exhaust.emplace(delta, i); // already fully big
            members.push_back(Member{i, delta, s[i], g[i], kInf});
            return;
        }
        double u = ps[i].sf / (ps[i].sf - 1.0);
        members.push_back(Member{i, delta, s[i], g[i], u});
        sum_u += u;
        sum_v += u / ps[i].sf;
        exhaust.emplace(delta + s[i] / u, i);
    };
    auto materialize = [&]() {
        for (const auto& mb : members) {
            double moved = std::isinf(mb.u) ? 0.0 : std::min(mb.s_join, mb.u * (delta - mb.join_delta));
            s[mb.idx] = mb.s_join - moved;
            g[mb.idx] = mb.g_join + moved / ps[mb.idx].sf;
            t[mb.idx] = g[mb.idx] + s[mb.idx];
        }
    };
    auto finish = [&](Terminal term) {
        materialize();
        return build_report(w, m, term, g);
    };

    for (std::size_t i = 0; i < n; ++i) {
        if (approx_ge(t[i], t_max, scale))
            add_member(i);
        else
            statics.emplace(t[i], i);
    }

    // Candidates are scanned in ascending-SF order over processes with a
    // positive big portion, i.e. from the split index downward.
    std::ptrdiff_t cand = static_cast<std::ptrdiff_t>(k);
    std::ptrdiff_t active = -1;

    const int max_iter = 2 * (static_cast<int>(n) + m.total()) + 8;
    bool candidates_left = true;
    while (candidates_left) {
        if (++iteration > max_iter)
            throw std::logic_error("solve: trade loop exceeded its iteration bound");
        if (irreducible || (!exhaust.empty() && exhaust.top().first <= delta + atol))
            return finish(Terminal::LongestFullyBig);
        if (approx_ge(t_b / B, t_max, scale)) {
            emit(TradeEvent::BalanceMet);
            return finish(Terminal::LinesMeet);
        }

        while (cand >= 0 && (in_set[cand] || g[cand] <= atol))
            --cand;
        if (cand < 0)
            break; // no trade partners: fall through to the unbalanced finish
        if (active != cand) {
            statics.erase(statics.find({t[cand], static_cast<std::size_t>(cand)}));
            active = cand;
        }
        const std::size_t c = static_cast<std::size_t>(cand);
        const double fc = ps[c].sf;
        const double alpha = (S * sum_v + B * sum_u) / (S + B * fc);

        double d_static = statics.empty() ? kInf : t_max - statics.rbegin()->first;
        double d_cand = (t_max - t[c]) / (1.0 + alpha * (fc - 1.0));
        double d_gc = g[c] / alpha;
        double d_exhaust = exhaust.empty() ? kInf : exhaust.top().first - delta;
        double meet_rate = 1.0 + (sum_v - alpha) / B;
        double d_meet = meet_rate > kAbsEps ? (t_max - t_b / B) / meet_rate : kInf;

        double d = std::min({d_static, d_cand, d_gc, d_exhaust, d_meet});
        if (d < 0)
            d = 0;

        delta += d;
        t_max -= d;
        double a = d * alpha;
        g[c] -= a;
        s[c] += a * fc;
        t[c] += a * (fc - 1.0);
        t_b += d * sum_v - a;
        t_s += a * fc - d * sum_u;

        if (d_exhaust <= d + atol) {
            emit(TradeEvent::MemberFullyBig);
            return finish(Terminal::LongestFullyBig);
        }
        if (d_meet <= d + atol) {
            emit(TradeEvent::BalanceMet);
            return finish(Terminal::LinesMeet);
        }
        bool cand_joined = d_cand <= d + atol;
        if (cand_joined) {
            add_member(c);
            active = -1;
            emit(TradeEvent::CandidateJoins);
        } else if (d_gc <= d + atol) {
            g[c] = 0;
            statics.emplace(t[c], c);
            active = -1;
            --cand;
            emit(TradeEvent::CandidateExhausted);
        }
        if (d_static <= d + atol) {
            while (!statics.empty() && approx_ge(statics.rbegin()->first, t_max, scale)) {
                auto it = std::prev(statics.end());
                add_member(it->second);
                statics.erase(it);
            }
            emit(TradeEvent::LongestSetGrows);
        }
    }

    // Fig-8(e) regime: every big-core process is in the longest set. Keep
    // lowering the set by moving small portions to big cores until a member
    // becomes fully big or the big pool average catches up.
    while (true) {
        if (++iteration > max_iter)
            throw std::logic_error("solve: unbalanced phase exceeded its iteration bound");
        if (irreducible || (!exhaust.empty() && exhaust.top().first <= delta + atol))
            return finish(Terminal::CandidatesExhausted);
        if (approx_ge(t_b / B, t_max, scale))
            return finish(Terminal::CandidatesExhausted);

        double d_static = statics.empty() ? kInf : t_max - statics.rbegin()->first;
        double d_exhaust = exhaust.empty() ? kInf : exhaust.top().first - delta;
        double d_meet = (t_max - t_b / B) / (1.0 + sum_v / B);
        double d = std::min({d_static, d_exhaust, d_meet});
        if (d < 0)
            d = 0;
        if (!std::isfinite(d))
            return finish(Terminal::CandidatesExhausted);

        delta += d;
        t_max -= d;
        t_b += d * sum_v;
        t_s -= d * sum_u;
        emit(TradeEvent::UnbalancedMove);

        if (d_exhaust <= d + atol || d_meet <= d + atol)
            return finish(Terminal::CandidatesExhausted);
        while (!statics.empty() && approx_ge(statics.rbegin()->first, t_max, scale)) {
            auto it = std::prev(statics.end());
            add_member(it->second);
            statics.erase(it);
        }
    }
}

} // namespace hemc
