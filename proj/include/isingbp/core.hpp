#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace isingbp {

// Arguments of arctanh are clamped to this bound, which keeps the
// single-real message form finite (|nu| <= atanh(1-1e-12) ~ 14.2).
inline constexpr double kAtanhClip = 1.0 - 1e-12;

struct size_limit_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct numeric_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct tracking_failure : numeric_failure {
    using numeric_failure::numeric_failure;
};

struct estimation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Deterministic random source. Doubles are derived from the raw engine
// output so that streams are identical across platforms and standard
// library versions (std::uniform_real_distribution is not portable).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() {  // [0,1)
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Box-Muller; two raw draws per call, no cached spare.
    double normal(double sigma = 1.0) {
        double u1 = 1.0 - uniform();
        double u2 = uniform();
        return sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  private:
    std::mt19937_64 engine_;
};

inline double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

inline double log_sum_exp(double a, double b) {
    double m = a > b ? a : b;
    if (m == -std::numeric_limits<double>::infinity()) return m;
    return m + std::log(std::exp(a - m) + std::exp(b - m));
}

inline double atanh_clipped(double x) {
    if (x > kAtanhClip) x = kAtanhClip;
    if (x < -kAtanhClip) x = -kAtanhClip;
    return std::atanh(x);
}

inline double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace isingbp
