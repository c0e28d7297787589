#pragma once

#include <functional>

namespace hullwalk {

struct QuadratureSpec {
    double absolute_tolerance = 1e-10;
    int max_subdivisions = 12; // refinement levels per panel

    bool valid() const { return absolute_tolerance > 0 && max_subdivisions >= 1; }
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int levels = 0;
};

/// Integrand evaluated at x with exact distances to the panel endpoints:
/// f(x, x - a, b - x). The distances stay accurate down to ~1e-80 even
/// when x itself has rounded onto an endpoint, which is what makes
/// integrable endpoint singularities (log blow-ups) workable.
using Integrand = std::function<double(double, double, double)>;

/// Tanh-sinh (double exponential) quadrature on [a, b]. Nodes cluster
/// double-exponentially at the endpoints, so endpoint log singularities
/// converge at full speed. Throws ToleranceError if the level cap is hit
/// before |I_l - I_{l-1}| <= tol.
QuadratureResult tanh_sinh_integrate(const Integrand& f, double a, double b,
                                     const QuadratureSpec& spec);

} // namespace hullwalk
