#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "hullwalk/types.hpp"

namespace hullwalk {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow4(std::int64_t n) {
    BigInt r = 1;
    return r << (2 * n);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// A probability carrying its arithmetic mode. `value` is always usable;
/// `exact` is meaningful only when mode == ArithMode::exact.
struct Probability {
    ArithMode mode = ArithMode::floating;
    Rational exact{};
    double value = 0.0;

    static Probability from_exact(Rational r) {
        Probability p;
        p.mode = ArithMode::exact;
        p.value = to_double(r);
        p.exact = std::move(r);
        return p;
    }
    static Probability from_double(double v) {
        Probability p;
        p.mode = ArithMode::floating;
        p.value = v;
        return p;
    }
};

} // namespace hullwalk
