#include "hullwalk/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <vector>

#include "hullwalk/edge_exact.hpp"
#include "hullwalk/persistence.hpp"

namespace hullwalk {

namespace {

// ln(sin^2(k t/2) + sin^2(m t/2)). By periodicity the same expression
// evaluated at the distance from any singular point theta* = 2 pi j / g
// equals the integrand there, so near-singularity evaluation just feeds
// the endpoint distance through the identical formula.
double log_kernel(double k, double m, double t) {
    const double sk = std::sin(0.5 * k * t);
    const double sm = std::sin(0.5 * m * t);
    return std::log(sk * sk + sm * sm);
}

} // namespace

AsymptoticConstant ckm_quadrature(const StepLawSpec& law, const QuadratureSpec& spec) {
    require(law.valid(), "step law must have a nonzero step");
    const double k = law.k;
    const double m = law.m;
    const int g = law.m == 0 ? law.k : std::gcd(law.k, law.m);

    // Split [0, pi] at the logarithmic zeros 2 pi j / g.
    std::vector<double> pts;
    for (int j = 0; 2.0 * std::numbers::pi * j / g < std::numbers::pi - 1e-12; ++j)
        pts.push_back(2.0 * std::numbers::pi * j / g);
    pts.push_back(std::numbers::pi);
    const bool pi_singular = g % 2 == 0;

    QuadratureSpec per = spec;
    per.absolute_tolerance = spec.absolute_tolerance / static_cast<double>(pts.size() - 1);

    double total = 0.0;
    double err = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const bool left_singular = true; // every split point 2 pi j / g is a zero
        const bool right_singular = i + 2 < pts.size() || pi_singular;
        const auto f = [&](double x, double u, double v) {
            if (left_singular && (u <= v || !right_singular)) return log_kernel(k, m, u);
            if (right_singular) return log_kernel(k, m, v);
            return log_kernel(k, m, x);
        };
        const auto r = tanh_sinh_integrate(f, pts[i], pts[i + 1], per);
        total += r.value;
        err += r.error_estimate;
    }

    AsymptoticConstant c;
    c.law = law;
    c.method = ConstantMethod::quadrature;
    c.value = std::exp(total / (2.0 * std::numbers::pi));
    c.error_bound = c.value * (err + 1e-15) / (2.0 * std::numbers::pi);
    return c;
}

AsymptoticConstant ckm_series_tail(const StepLawSpec& law, std::int64_t terms) {
    require(law.valid(), "step law must have a nonzero step");
    require(terms >= 0, "terms must be >= 0");
    AsymptoticConstant c;
    c.law = law;
    c.method = ConstantMethod::series_tail;
    if (terms == 0) {
        c.value = 1.0;
        c.error_bound = std::numeric_limits<double>::infinity();
        return c;
    }

    const auto h = detail::zero_prob_table(law, terms);
    double logsum = 0.0;
    for (std::int64_t j = 1; j <= terms; ++j) logsum += h[j] / (2.0 * j);
    c.value = std::exp(-logsum);

    // Tail estimate: h_n tracks B / sqrt(n) on its nonzero residues. With
    // period delta, sum_{n > N} h_n/(2n) ~ B / (delta sqrt(N)); a 1.5x
    // margin covers both the envelope fit and the exp linearization.
    bool odd_zero = true;
    for (std::int64_t j = 1; j <= terms; j += 2)
        if (h[j] != 0.0) {
            odd_zero = false;
            break;
        }
    const int delta = odd_zero ? 2 : 1;
    double envelope = 0.0;
    const std::int64_t lo = std::max<std::int64_t>(1, terms - 100);
    for (std::int64_t j = lo; j <= terms; ++j)
        envelope = std::max(envelope, h[j] * std::sqrt(static_cast<double>(j)));
    const double tail = envelope / (delta * std::sqrt(static_cast<double>(terms)));
    c.error_bound = 1.5 * tail;
    return c;
}

double asymptotic_pn(const StepLawSpec& law, std::int64_t n, const QuadratureSpec& spec) {
    require(n >= 1, "asymptotic approximation needs n >= 1");
    const auto c = ckm_quadrature(law, spec);
    return c.value / std::sqrt(std::numbers::pi * static_cast<double>(n));
}

double edge_constant_estimate(std::int64_t n1, std::int64_t n2, std::int64_t n_large) {
    const EdgeEventSpec spec{n1, n2, n_large};
    require(spec.valid(), "edge spec must satisfy 0 <= n1 < n2 <= n");
    const auto r = exact_edge_probability(spec, ArithMode::floating);
    return std::sqrt(static_cast<double>(n_large)) * r.value.value;
}

} // namespace hullwalk
