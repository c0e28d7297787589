#pragma once

#include "hullwalk/quadrature.hpp"
#include "hullwalk/types.hpp"

namespace hullwalk {

// The stay-positive asymptotics p_n ~ C_{k,m} / sqrt(pi n) with
//   C_{k,m} = exp( (1/4pi) int_{-pi}^{pi}
//                  ln(1 - (cos k t + cos m t)/2) dt ).
// The integrand equals ln(sin^2(k t/2) + sin^2(m t/2)), which is the
// cancellation-free form used throughout this module. Its logarithmic
// zeros sit at the multiples of 2pi/g, g = gcd(k, m) (gcd(k, 0) = k).

enum class ConstantMethod { quadrature, series_tail };

struct AsymptoticConstant {
    StepLawSpec law;
    double value = 0.0;
    ConstantMethod method = ConstantMethod::quadrature;
    double error_bound = 0.0;
};

/// C_{k,m} by singularity-split tanh-sinh quadrature, accurate to the
/// requested absolute tolerance (default ~1e-10, far past what the
/// reference tables need).
AsymptoticConstant ckm_quadrature(const StepLawSpec& law,
                                  const QuadratureSpec& spec = {});

/// C_{k,m} = exp( - sum_{n>=1} h_n / (2n) ) truncated after `terms`
/// terms. Independent of the quadrature route. The reported error_bound
/// is a tail estimate of order 1/sqrt(terms) built from the empirical
/// envelope h_n ~ B/sqrt(n); terms = 0 yields the empty product 1 with an
/// infinite bound.
AsymptoticConstant ckm_series_tail(const StepLawSpec& law, std::int64_t terms);

/// Leading-order approximation C_{k,m} / sqrt(pi n).
double asymptotic_pn(const StepLawSpec& law, std::int64_t n,
                     const QuadratureSpec& spec = {});

/// Finite-n proxy for the chord-probability constant: sqrt(n_large) times
/// the exact chord-on-hull probability with the horizon extended to
/// n_large. Converges to a positive limit as n_large grows; the limit
/// itself is not claimed, only estimated.
double edge_constant_estimate(std::int64_t n1, std::int64_t n2, std::int64_t n_large);

} // namespace hullwalk
