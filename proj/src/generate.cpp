#include "hemc/generate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace hemc {

Preset preset_from_string(const std::string& s) {
    if (s == "mix1")
        return Preset::Mix1;
    if (s == "mix5")
        return Preset::Mix5;
    if (s == "stress")
        return Preset::Stress;
    if (s == "random")
        return Preset::Random;
    throw ValidationError("unknown preset '" + s + "' (expected mix1|mix5|stress|random)");
}

namespace {

std::string padded_id(const char* prefix, int i) {
    std::string n = std::to_string(i);
    if (n.size() < 2)
        n = "0" + n;
    return std::string(prefix) + n;
}

// 19 single-copy processes: SF uniform in [1.09, 2.5], big_time log-uniform
// over one decade, and the largest one stretched to at least 3x the median
// so a long process dominates like in the single-copy benchmark mix.
std::vector<ProcessSpec> mix1_processes(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> sf_dist(1.09, 2.5);
    std::uniform_real_distribution<double> log_time(1.0, 2.0); // 10..100 time units
    struct Raw {
        double big_time, sf;
    };
    std::vector<Raw> raw;
    for (int i = 0; i < 19; ++i) {
        double sf = sf_dist(rng);
        double bt = std::pow(10.0, log_time(rng));
        raw.push_back({bt, sf});
    }
    std::vector<double> times;
    for (const auto& r : raw)
        times.push_back(r.big_time);
    std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
    double median = times[times.size() / 2];
    auto longest = std::max_element(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
        return a.big_time < b.big_time;
    });
    longest->big_time = std::max(longest->big_time, 3.0 * median);

    std::vector<ProcessSpec> ps;
    for (int i = 0; i < 19; ++i)
        ps.push_back(ProcessSpec::make(padded_id("p", i), raw[i].big_time, raw[i].sf));
    return ps;
}

} // namespace

WorkloadFile generate(Preset preset, std::uint64_t seed, const Machine& m,
                      const RandomParams& rp) {
    std::vector<ProcessSpec> ps;
    switch (preset) {
    case Preset::Mix1:
        ps = mix1_processes(seed);
        break;
    case Preset::Mix5:
        for (const auto& p : mix1_processes(seed))
            for (int c = 0; c < 5; ++c)
                ps.push_back(ProcessSpec::make(p.id + "_c" + std::to_string(c), p.big_time, p.sf));
        break;
    case Preset::Stress:
        for (int i = 0; i < 40; ++i)
            ps.push_back(ProcessSpec::make(padded_id("hi", i), 100.0, 2.5));
        for (int i = 0; i < 40; ++i)
            ps.push_back(ProcessSpec::make(padded_id("lo", i), 100.0, 1.09));
        break;
    case Preset::Random: {
        if (rp.n < 1)
            throw ValidationError("random preset: n must be >= 1");
        if (!(rp.sf_min >= 1) || rp.sf_max < rp.sf_min)
            throw ValidationError("random preset: need 1 <= sf-min <= sf-max");
        if (!(rp.time_min > 0) || rp.time_max < rp.time_min)
            throw ValidationError("random preset: need 0 < time-min <= time-max");
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> sf_dist(rp.sf_min, rp.sf_max);
        std::uniform_real_distribution<double> t_dist(rp.time_min, rp.time_max);
        for (int i = 0; i < rp.n; ++i) {
            double sf = sf_dist(rng);
            double bt = t_dist(rng);
            ps.push_back(ProcessSpec::make(padded_id("r", i), bt, sf));
        }
        break;
    }
    }
    return WorkloadFile{m, Workload::make(std::move(ps))};
}

} // namespace hemc
