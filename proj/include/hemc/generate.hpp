#pragma once

#include <cstdint>
#include <string>

#include "hemc/json_io.hpp"
#include "hemc/model.hpp"

namespace hemc {

// Synthetic workload presets mirroring the benchmark mixes used for the
// scheduler comparison: a single copy of 19 processes with SF in
// [1.09, 2.5] (one deliberately long), 5 copies of each, and an 80-process
// two-SF stress mix.
enum class Preset { Mix1, Mix5, Stress, Random };

Preset preset_from_string(const std::string& s);

struct RandomParams {
    int n = 8;
    double sf_min = 1.0;
    double sf_max = 3.0;
    double time_min = 1.0;
    double time_max = 1000.0;
};

// Deterministic for a given (preset, seed).
WorkloadFile generate(Preset preset, std::uint64_t seed, const Machine& m,
                      const RandomParams& rp = {});

} // namespace hemc
