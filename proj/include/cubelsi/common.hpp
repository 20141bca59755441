#ifndef CUBELSI_COMMON_HPP
#define CUBELSI_COMMON_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubelsi {

inline constexpr const char* kVersion = "0.1.0";

/// Invalid input: a violated precondition or a malformed parameter.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Request beyond what exact enumeration supports (e.g. n too large).
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Iterative routine failed to converge. Carries the last bracket.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double lo, double hi)
        : std::runtime_error(what), lo_(lo), hi_(hi) {}
    double bracket_lo() const noexcept { return lo_; }
    double bracket_hi() const noexcept { return hi_; }

private:
    double lo_;
    double hi_;
};

/// Pairwise (cascade) summation. The tree shape depends only on the length,
/// so results are reproducible regardless of how the terms were produced.
double pairwise_sum(std::span<const double> terms);

inline double pairwise_mean(std::span<const double> terms) {
    return terms.empty() ? 0.0 : pairwise_sum(terms) / static_cast<double>(terms.size());
}

/// Worker count: CUBELSI_THREADS if set, else hardware concurrency.
unsigned thread_count();

/// Runs body(i) for i in [0, count) on up to thread_count() workers with
/// static chunking. Bodies must write only to slots owned by their index.
template <typename Body>
void parallel_for(std::size_t count, Body&& body);

/// Counter-based generator: value k of stream (seed, stream) is a pure
/// function of (seed, stream, k), so substreams can be consumed in any order.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix(seed ^ mix(stream + 0x632BE59BD9B4E019ULL))) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    result_type operator()() { return mix(key_ + 0x9E3779B97F4A7C15ULL * ++counter_); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, bound) (Lemire's multiply-shift with rejection).
    std::uint64_t below(std::uint64_t bound);

    /// Standard normal via Box-Muller (one draw per call, deterministic).
    double normal();

    bool coin() { return ((*this)() >> 63) != 0; }

    Rng substream(std::uint64_t task) const { return Rng(key_, task + 1); }

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace cubelsi

#include <algorithm>
#include <thread>

namespace cubelsi {

template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
    const std::size_t workers = std::min<std::size_t>(thread_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([begin, end, &body] {
            for (std::size_t i = begin; i < end; ++i) body(i);
        });
    }
}

}  // namespace cubelsi

#endif  // CUBELSI_COMMON_HPP
