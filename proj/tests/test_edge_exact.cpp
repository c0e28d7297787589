#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "hullwalk/edge_exact.hpp"
#include "hullwalk/errors.hpp"
#include "hullwalk/hull.hpp"
#include "support/enumerate.hpp"

using namespace hullwalk;

namespace {

// Independent displacement law: plain 2-D convolution counting.
std::map<IntVec2, BigInt> displacement_counts(std::int64_t L) {
    std::map<IntVec2, BigInt> cur{{{0, 0}, 1}};
    constexpr IntVec2 steps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (std::int64_t j = 0; j < L; ++j) {
        std::map<IntVec2, BigInt> nxt;
        for (const auto& [p, c] : cur)
            for (const auto s : steps) nxt[p + s] += c;
        cur = std::move(nxt);
    }
    return cur;
}

} // namespace

TEST_CASE("displacement law closed form") {
    const auto l1 = displacement_law(1);
    CHECK(l1.support.size() == 4);
    for (const auto& [p, prob] : l1.support) CHECK(prob == Rational(1, 4));

    const auto l2 = displacement_law(2);
    CHECK(l2.support.at({0, 0}) == Rational(1, 4));
    CHECK(l2.support.at({1, 1}) == Rational(1, 8));
    CHECK(l2.support.at({2, 0}) == Rational(1, 16));

    for (std::int64_t L : {1, 2, 3, 7, 14, 30}) {
        const auto law = displacement_law(L);
        Rational total = 0;
        for (const auto& [p, prob] : law.support) {
            CHECK(std::abs(p.x) + std::abs(p.y) <= L);
            CHECK((p.x + p.y - L) % 2 == 0);
            total += prob;
        }
        CHECK(total == 1);

        const auto counts = displacement_counts(L);
        CHECK(counts.size() == law.support.size());
        for (const auto& [p, c] : counts)
            CHECK(law.support.at(p) == Rational(c, pow4(L)));
    }
}

TEST_CASE("bridge positive joint probabilities") {
    CHECK(bridge_positive_2d(1, 1, 2).joint.exact == Rational(1, 16));
    CHECK(bridge_positive_2d(1, 0, 1).joint.exact == Rational(1, 4));
    CHECK(bridge_positive_2d(0, -1, 1).joint.exact == Rational(1, 4));

    // parity-infeasible endpoint is flagged, not conflated with zero
    const auto bad = bridge_positive_2d(1, 1, 3);
    CHECK(!bad.parity_ok);
    CHECK(bad.joint.exact == 0);
    // reachable endpoint whose positive-interior count vanishes
    const auto axis = bridge_positive_2d(2, 0, 2);
    CHECK(axis.parity_ok);
    CHECK(axis.joint.exact == 0);

    CHECK_THROWS_AS(bridge_positive_2d(0, 0, 2), std::invalid_argument);

    // enumeration cross-check for every endpoint at L = 3 and 4
    for (std::int64_t L : {3, 4}) {
        std::map<IntVec2, BigInt> good;
        hullwalk::testing::for_each_walk(static_cast<int>(L), [&](const std::vector<IntVec2>& pts) {
            const IntVec2 end = pts.back();
            if (end == IntVec2{0, 0}) return;
            for (std::size_t j = 1; j + 1 < pts.size(); ++j) {
                if (end.x * pts[j].y - end.y * pts[j].x <= 0) return;
            }
            good[end] += 1;
        });
        for (std::int64_t a = -L; a <= L; ++a) {
            for (std::int64_t b = -L + std::abs(a); b <= L - std::abs(a); ++b) {
                if ((a == 0 && b == 0) || (a + b - L) % 2 != 0) continue;
                const auto it = good.find({a, b});
                const Rational expect = it == good.end() ? 0 : Rational(it->second, pow4(L));
                CHECK(bridge_positive_2d(a, b, L).joint.exact == expect);
            }
        }
    }
}

TEST_CASE("bridge masses sum below one, exactly one at L = 1") {
    for (std::int64_t L : {1, 2, 3, 5}) {
        Rational total = 0;
        for (std::int64_t a = -L; a <= L; ++a)
            for (std::int64_t b = -L + std::abs(a); b <= L - std::abs(a); ++b) {
                if ((a == 0 && b == 0) || (a + b - L) % 2 != 0) continue;
                total += bridge_positive_2d(a, b, L).joint.exact;
            }
        if (L == 1)
            CHECK(total == 1);
        else
            CHECK(total < 1);
    }
}

TEST_CASE("factored probability equals brute force") {
    CHECK(exact_edge_probability({0, 1, 1}).value.exact == 1);
    const std::vector<EdgeEventSpec> specs = {
        {0, 1, 2}, {0, 2, 2}, {1, 2, 2}, {0, 1, 3}, {0, 2, 3}, {1, 3, 3}, {0, 3, 3},
        {0, 1, 6}, {1, 3, 8}, {0, 2, 7}, {1, 2, 6}, {2, 4, 7}, {1, 4, 7}, {3, 5, 8},
    };
    for (const auto& spec : specs) {
        const auto exact = exact_edge_probability(spec);
        const auto brute = brute_force_edge_probability(spec);
        CHECK(exact.value.exact == brute.value.exact);
        CHECK(exact.value.exact >= 0);
        CHECK(exact.value.exact <= 1);
    }
    CHECK_THROWS_AS(brute_force_edge_probability({0, 1, 13}), ResourceLimitError);
    CHECK_THROWS_AS(exact_edge_probability({2, 1, 3}), std::invalid_argument);
}

TEST_CASE("float mode tracks exact mode") {
    for (const auto& spec :
         {EdgeEventSpec{0, 1, 6}, {1, 3, 8}, {0, 2, 9}, {2, 4, 10}, {3, 7, 20}}) {
        const double ex = to_double(exact_edge_probability(spec, ArithMode::exact).value.exact);
        const double fl = exact_edge_probability(spec, ArithMode::floating).value.value;
        CHECK(std::abs(ex - fl) <= 1e-12);
    }
}

TEST_CASE("scaled probability is stable in n") {
    const double a = std::sqrt(500.0) *
                     exact_edge_probability({0, 1, 500}, ArithMode::floating).value.value;
    const double b = std::sqrt(2000.0) *
                     exact_edge_probability({0, 1, 2000}, ArithMode::floating).value.value;
    CHECK(std::abs(a - b) / b <= 0.02);
}
