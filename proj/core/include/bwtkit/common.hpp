/*
 * common.hpp
 *
 * Shared basic types: positions, symbols, suffix-array intervals, error
 * classes and the strategy-selection thresholds used across the library.
 *
 * Conventions (used consistently by every public interface):
 *  - positions are 1-based;
 *  - rank(c, i) counts occurrences of c in positions [1, i-1];
 *  - an interval <L, L-1> is empty, and L-1 is still the number of
 *    suffixes strictly smaller than the queried string.
 */

#ifndef BWTKIT_COMMON_HPP_
#define BWTKIT_COMMON_HPP_

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bwtkit {

using pos_t = std::uint64_t;
using sym_t = std::uint8_t;

/* terminator code: always 0, lexicographically smallest */
inline constexpr sym_t TERM = 0;

inline constexpr std::uint32_t MAX_SIGMA = 256;

struct interval {
    pos_t left = 1;
    pos_t right = 0;

    bool empty() const { return right + 1 == left; }
    pos_t length() const { return right + 1 - left; }

    friend bool operator==(const interval&, const interval&) = default;
};

/* violation of a monitored internal invariant (write-once cells, stack
 * bounds, queue discipline). These checks stay on in release builds. */
struct invariant_error : std::logic_error {
    explicit invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

/* input that is structurally not a BWT / collection we can process */
struct malformed_input : std::runtime_error {
    explicit malformed_input(const std::string& msg) : std::runtime_error(msg) {}
};

/* an LCP value does not fit the selected output width */
struct width_overflow : std::runtime_error {
    width_overflow(const std::string& msg, unsigned required_bytes)
        : std::runtime_error(msg), required(required_bytes) {}
    unsigned required;
};

inline std::uint32_t ceil_log2(pos_t n) {
    return n <= 1 ? 0 : std::uint32_t(std::bit_width(n - 1));
}

/* ---- strategy thresholds -------------------------------------------
 * The asymptotic branch conditions need a concrete reading at small n:
 * both are computed with floating point log2 and clamped below by 1. */

/* node-type pass: queue-based (BGOS) iff sigma > sqrt(n)/log^2(n) */
inline bool bgos_preferred(pos_t n, std::uint32_t sigma) {
    double l = std::log2(double(n < 2 ? 2 : n));
    double t = std::max(1.0, std::sqrt(double(n)) / (l * l));
    return double(sigma) > t;
}

/* leaf-type / merge pass: queue iff sigma > n/log^3(n) */
inline bool queue_preferred(pos_t n, std::uint32_t sigma) {
    double l = std::log2(double(n < 2 ? 2 : n));
    double t = std::max(1.0, double(n) / (l * l * l));
    return double(sigma) > t;
}

/* hybrid queue representation switch: ceil(n / log2 n), at least 1 */
inline pos_t hybrid_threshold(pos_t n) {
    double l = std::log2(double(n < 2 ? 2 : n));
    pos_t t = pos_t(std::ceil(double(n) / l));
    return t < 1 ? 1 : t;
}

} // namespace bwtkit

#endif
