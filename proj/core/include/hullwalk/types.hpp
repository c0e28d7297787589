#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>

namespace hullwalk {

/// Integer lattice point or displacement in Z^2.
struct IntVec2 {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend constexpr bool operator==(const IntVec2&, const IntVec2&) = default;
    friend constexpr auto operator<=>(const IntVec2&, const IntVec2&) = default;

    friend constexpr IntVec2 operator+(IntVec2 a, IntVec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr IntVec2 operator-(IntVec2 a, IntVec2 b) { return {a.x - b.x, a.y - b.y}; }
    constexpr IntVec2 operator-() const { return {-x, -y}; }
};

/// Symmetric four-point step law on Z: +k, -k, +m, -m with probability 1/4
/// each. Coinciding values accumulate mass, so (k,k) is the +-k walk with
/// probability 1/2 per side, and (k,0) has an atom of mass 1/2 at zero.
struct StepLawSpec {
    int k = 1;
    int m = 1;

    friend constexpr bool operator==(const StepLawSpec&, const StepLawSpec&) = default;
    friend constexpr auto operator<=>(const StepLawSpec&, const StepLawSpec&) = default;

    constexpr bool valid() const { return k >= 0 && m >= 0 && (k > 0 || m > 0); }
    constexpr int max_step() const { return k > m ? k : m; }
};

/// The chord S_{n1}S_{n2} inside an n-step walk, 0 <= n1 < n2 <= n.
struct EdgeEventSpec {
    std::int64_t n1 = 0;
    std::int64_t n2 = 1;
    std::int64_t n = 1;

    friend constexpr bool operator==(const EdgeEventSpec&, const EdgeEventSpec&) = default;

    constexpr bool valid() const { return 0 <= n1 && n1 < n2 && n2 <= n; }
};

/// Arithmetic mode for the counting engines. Exact mode works in
/// arbitrary-precision rationals, floating mode in doubles. The mode is
/// always chosen by the caller; nothing switches silently.
enum class ArithMode { exact, floating };

inline void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

} // namespace hullwalk
