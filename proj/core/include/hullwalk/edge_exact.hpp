#pragma once

#include <map>
#include <vector>

#include "hullwalk/rational.hpp"
#include "hullwalk/types.hpp"

namespace hullwalk {

// Exact finite-n probability that the chord S_{n1}S_{n2} lies on the hull
// boundary, through the three-factor split along the chord normal:
//
//   P = 2 * sum_{(a,b) != 0}  J(a, b, n2-n1)
//                           * p_{n1}(law(|a|,|b|)) * p_{n-n2}(law(|a|,|b|))
//
// where J(a,b,L) is the joint probability that the middle block ends at
// displacement (a,b) with every interior point strictly positive under the
// chord normal, and the outer factors are unconditional stay-positive
// probabilities of the projected walk (the leading block via time
// reversal). The factor 2 covers the mirrored all-negative event and is
// suppressed when no time other than n1, n2 exists (then P = 1).

/// Law of the L-step displacement S_L. Closed form per atom:
/// P(S_L = (a,b)) = 4^{-L} C(L, (L+a+b)/2) C(L, (L+a-b)/2).
struct DisplacementLaw {
    std::int64_t L = 0;
    std::map<IntVec2, Rational> support;
};

DisplacementLaw displacement_law(std::int64_t L);

/// Joint probability of the middle block: the walk ends at (a,b) after L
/// steps and every interior point has strictly positive normal projection
/// against direction (a,b). `parity_ok` distinguishes an endpoint that is
/// unreachable by parity from a reachable one whose positive-interior
/// count happens to be zero.
struct BridgePositive2D {
    Probability joint;
    bool parity_ok = true;
};

BridgePositive2D bridge_positive_2d(std::int64_t a, std::int64_t b, std::int64_t L,
                                    ArithMode mode = ArithMode::exact);

enum class EdgeMethod { exact_factored, brute_force, monte_carlo };

struct EdgeProbabilityResult {
    EdgeEventSpec spec;
    Probability value;
    EdgeMethod method = EdgeMethod::exact_factored;
};

/// The factored exact probability. Exact mode is practical to n of a few
/// hundred; floating mode to several thousand.
EdgeProbabilityResult exact_edge_probability(const EdgeEventSpec& spec,
                                             ArithMode mode = ArithMode::exact);

/// Oracle: enumerate all 4^n walks and apply the strict one-sided
/// predicate. Limited to n <= 12.
EdgeProbabilityResult brute_force_edge_probability(const EdgeEventSpec& spec);

} // namespace hullwalk
