#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace hemc {

// Tolerance policy used by every solver: relative eps with an absolute floor.
inline constexpr double kRelEps = 1e-9;
inline constexpr double kAbsEps = 1e-12;

inline double tol(double scale) {
    double s = scale < 0 ? -scale : scale;
    double t = kRelEps * s;
    return t > kAbsEps ? t : kAbsEps;
}

inline bool approx_eq(double a, double b, double scale) { return (a > b ? a - b : b - a) <= tol(scale); }
inline bool approx_ge(double a, double b, double scale) { return a >= b - tol(scale); }
inline bool approx_le(double a, double b, double scale) { return a <= b + tol(scale); }

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One process: execution time on a big core and the performance scaling
// factor F = T^s / T^b (>= 1).
struct ProcessSpec {
    std::string id;
    double big_time = 0;   // T^b
    double sf = 1;         // F
    double small_time = 0; // T^s = T^b * F

    static ProcessSpec make(std::string id, double big_time, double sf);
    // Accepts a redundantly supplied small_time; mismatch beyond 1e-9
    // relative is a validation error, not a silent correction.
    static ProcessSpec make(std::string id, double big_time, double sf, double small_time);
};

struct Machine {
    int big_count = 1;   // B
    int small_count = 1; // S

    static Machine make(int big_count, int small_count);
    int total() const { return big_count + small_count; }
};

// Ordered process set. Canonical order: descending sf, ties by ascending id.
struct Workload {
    std::vector<ProcessSpec> processes;

    static Workload make(std::vector<ProcessSpec> processes);
    std::size_t size() const { return processes.size(); }
    bool empty() const { return processes.empty(); }
};

// Per-process big-core fraction x in [0,1], measured in big-core time share.
struct FractionalAssignment {
    std::unordered_map<std::string, double> fractions;

    double at(const std::string& id) const;
};

struct LoadReport {
    double t_b = 0;   // sum of x_k * T_k^b over the big pool
    double t_s = 0;   // sum of (1-x_k) * T_k^s over the small pool
    double t_max = 0; // max_k t_k
    double t_f = 0;   // max{t_max, t_b/B, t_s/S}
    std::map<std::string, double> per_process;
};

// t_k = T^b * x + T^s * (1 - x). Monotone non-increasing in x for F >= 1.
double exec_time(const ProcessSpec& p, double x);

Workload canonical_order(Workload w);

LoadReport load_report(const Workload& w, const Machine& m, const FractionalAssignment& a);

} // namespace hemc
