#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "hullwalk/rational.hpp"
#include "hullwalk/types.hpp"

namespace hullwalk {

// One-dimensional fluctuation machinery for the projected step law:
// return probabilities h_n = P(S_n = 0), positivity probabilities
// a_n = P(S_n > 0) = (1 - h_n)/2, and stay-positive probabilities
// p_n = P(S_1 > 0, ..., S_n > 0). The generating functions satisfy
//   P(s) = exp( int_0^s A(sigma)/sigma dsigma ),
//   2 A(s) = 1/(1-s) - H(s),
// which at coefficient level gives the recursion
//   n p_n = sum_{j=1..n} a_j p_{n-j},  p_0 = 1.

enum class SeriesKind { P, H, A };

/// Truncated power-series coefficients of P, H or A for one step law.
/// For kind H and A the entry at index 0 is unused and stored as zero.
struct CoefficientSeries {
    StepLawSpec law;
    SeriesKind kind = SeriesKind::P;
    ArithMode mode = ArithMode::exact;
    std::variant<std::vector<Rational>, std::vector<double>> coefficients;

    std::size_t order() const;
    double at(std::size_t i) const;
    const std::vector<Rational>& exact() const { return std::get<0>(coefficients); }
    const std::vector<double>& approx() const { return std::get<1>(coefficients); }
};

/// h_n: probability the projected walk sits at zero after n steps,
/// via integer convolution over the reachable position range. In exact
/// mode the denominator divides 4^n.
Probability return_probability(const StepLawSpec& law, std::int64_t n, ArithMode mode);

/// a_n = (1 - h_n) / 2.
Probability positivity_probability(const StepLawSpec& law, std::int64_t n, ArithMode mode);

/// p_n by the coefficient recursion n p_n = sum a_j p_{n-j}.
Probability stay_positive(const StepLawSpec& law, std::int64_t n, ArithMode mode);

/// All of p_0..p_n in one pass. The recursion is O(n^2) after the h-table.
std::vector<Rational> stay_positive_prefix_exact(const StepLawSpec& law, std::int64_t n);
std::vector<double> stay_positive_prefix_float(const StepLawSpec& law, std::int64_t n);

/// p_n by forward dynamic programming over positive positions, sharing no
/// code with the recursion. Used as an independent cross-check.
Probability stay_positive_dp(const StepLawSpec& law, std::int64_t n, ArithMode mode);

/// Truncated coefficients of P, H or A up to `order` inclusive.
CoefficientSeries series(SeriesKind kind, const StepLawSpec& law, std::int64_t order, ArithMode mode);

/// Closed form
///   P(s) = (1-s)^{-1/2} exp( (1/4pi) int_{-pi}^{pi}
///            ln(1 - (s/2)(cos k t + cos m t)) dt ),
/// evaluated by quadrature. Requires 0 <= s < 1; the integrand is then
/// smooth since (s/2)(cos k t + cos m t) < 1.
double closed_form_P(const StepLawSpec& law, double s, double quadrature_tol = 1e-13);

/// Termwise check of the series identity
///   ln P(s) = -(1/2) ln(1-s) - sum_{n>=1} h_n s^n / (2n),
/// i.e. P(s) = exp( sum_{n>=1} (1-h_n)/(2n) s^n ). The exponential is
/// expanded by truncated Taylor summation in exact rationals, a route
/// independent of the coefficient recursion, and compared to p_n for all
/// n <= order. Also verifies 2 a_n = 1 - h_n termwise.
bool log_series_identity_check(const StepLawSpec& law, std::int64_t order);

/// Stay-positive probability of a bridge: P(S_1 > 0, ..., S_{L-1} > 0
/// given S_L = 0). Throws NullBridgeError when no length-L bridge exists.
Probability bridge_stay_positive_1d(const StepLawSpec& law, std::int64_t L, ArithMode mode);

/// Oracle: exact p_n by full enumeration of the 4^n step-label sequences.
/// Limited to n <= 12.
Rational brute_force_stay_positive(const StepLawSpec& law, std::int64_t n);

namespace detail {
/// Counts of step-label sequences that sit at position 0 after j steps,
/// for j = 0..n (index 0 holds the empty-path count 1). Total sequences
/// at step j is 4^j.
std::vector<BigInt> zero_count_table(const StepLawSpec& law, std::int64_t n);
/// Same table in probability units (entries h_j).
std::vector<double> zero_prob_table(const StepLawSpec& law, std::int64_t n);
} // namespace detail

} // namespace hullwalk
