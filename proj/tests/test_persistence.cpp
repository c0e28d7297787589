#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hullwalk/errors.hpp"
#include "hullwalk/persistence.hpp"
#include "support/enumerate.hpp"

using namespace hullwalk;
using hullwalk::testing::enumerate_projected;

namespace {
const std::vector<StepLawSpec> kLaws = {{1, 1}, {2, 1}, {3, 2}, {5, 7}, {1, 0}, {0, 2}};
}

TEST_CASE("enumeration oracle pins h, a, p for n <= 8") {
    for (const auto& law : kLaws) {
        for (int n = 1; n <= 8; ++n) {
            const auto e = enumerate_projected(law, n);
            const Rational denom(pow4(n));
            CHECK(return_probability(law, n, ArithMode::exact).exact ==
                  Rational(e.at_zero, pow4(n)));
            CHECK(positivity_probability(law, n, ArithMode::exact).exact ==
                  Rational(e.positive, pow4(n)));
            CHECK(stay_positive(law, n, ArithMode::exact).exact ==
                  Rational(e.stay_positive, pow4(n)));
            CHECK(stay_positive_dp(law, n, ArithMode::exact).exact ==
                  Rational(e.stay_positive, pow4(n)));
            CHECK(brute_force_stay_positive(law, n) == Rational(e.stay_positive, pow4(n)));
            // symmetry decomposition: positives, negatives and zeros partition
            CHECK(2 * e.positive + e.at_zero == pow4(n));
        }
    }
}

TEST_CASE("return probability values") {
    CHECK(return_probability({1, 1}, 2, ArithMode::exact).exact == Rational(1, 2));
    CHECK(return_probability({2, 1}, 2, ArithMode::exact).exact == Rational(1, 4));
    CHECK(return_probability({3, 4}, 1, ArithMode::exact).exact == 0);
    CHECK(return_probability({1, 0}, 1, ArithMode::exact).exact == Rational(1, 2));
    CHECK(return_probability({1, 1}, 2, ArithMode::floating).value == doctest::Approx(0.5));
    CHECK_THROWS_AS(return_probability({1, 1}, 0, ArithMode::exact), std::invalid_argument);
}

TEST_CASE("positivity probability values") {
    CHECK(positivity_probability({1, 1}, 1, ArithMode::exact).exact == Rational(1, 2));
    CHECK(positivity_probability({1, 0}, 1, ArithMode::exact).exact == Rational(1, 4));
    CHECK(positivity_probability({2, 1}, 2, ArithMode::exact).exact == Rational(3, 8));
}

TEST_CASE("stay-positive values") {
    CHECK(stay_positive({1, 1}, 2, ArithMode::exact).exact == Rational(1, 4));
    CHECK(stay_positive({2, 1}, 2, ArithMode::exact).exact == Rational(5, 16));
    CHECK(stay_positive({1, 1}, 3, ArithMode::exact).exact == Rational(1, 4));
    CHECK(stay_positive({7, 3}, 1, ArithMode::exact).exact == Rational(1, 2));
    CHECK(stay_positive({1, 1}, 0, ArithMode::exact).exact == 1);
    CHECK(stay_positive_dp({1, 0}, 0, ArithMode::exact).exact == 1);
    CHECK(brute_force_stay_positive({1, 0}, 2) == Rational(3, 16));
    CHECK(brute_force_stay_positive({2, 1}, 1) == Rational(1, 2));
    CHECK_THROWS_AS(brute_force_stay_positive({1, 1}, 13), ResourceLimitError);
}

TEST_CASE("recursion equals position DP exactly up to n = 200") {
    for (const auto& law : kLaws) {
        const auto prefix = stay_positive_prefix_exact(law, 200);
        for (int n = 1; n <= 100; ++n)
            CHECK(stay_positive_dp(law, n, ArithMode::exact).exact == prefix[n]);
        for (int n : {157, 200})
            CHECK(stay_positive_dp(law, n, ArithMode::exact).exact == prefix[n]);
    }
}

TEST_CASE("binomial closed form for the +-1 law up to r = 500") {
    const auto prefix = stay_positive_prefix_exact({1, 1}, 1000);
    BigInt binom = 1; // C(2r, r)
    for (std::int64_t r = 1; r <= 500; ++r) {
        binom *= 2 * r * (2 * r - 1);
        binom /= r * r;
        CHECK(prefix[2 * r] == Rational(binom, 2 * pow4(r)));
    }
}

TEST_CASE("parity pattern of h") {
    const auto z11 = detail::zero_count_table({1, 1}, 21);
    const auto z57 = detail::zero_count_table({5, 7}, 21);
    for (int n = 1; n <= 21; n += 2) {
        CHECK(z11[n] == 0);
        CHECK(z57[n] == 0);
    }
    CHECK(return_probability({2, 1}, 3, ArithMode::exact).exact > 0);
    CHECK(return_probability({1, 0}, 1, ArithMode::exact).exact == Rational(1, 2));
}

TEST_CASE("series coefficients") {
    const auto H = series(SeriesKind::H, {1, 1}, 4, ArithMode::exact);
    CHECK(H.exact()[1] == 0);
    CHECK(H.exact()[2] == Rational(1, 2));
    CHECK(H.exact()[3] == 0);
    CHECK(H.exact()[4] == Rational(3, 8));

    const auto P = series(SeriesKind::P, {2, 1}, 2, ArithMode::exact);
    CHECK(P.exact()[0] == 1);
    CHECK(P.exact()[1] == Rational(1, 2));
    CHECK(P.exact()[2] == Rational(5, 16));

    for (const auto& law : kLaws) {
        const auto h = series(SeriesKind::H, law, 40, ArithMode::exact);
        const auto a = series(SeriesKind::A, law, 40, ArithMode::exact);
        const auto p = series(SeriesKind::P, law, 40, ArithMode::exact);
        CHECK(p.exact()[0] == 1);
        for (int n = 1; n <= 40; ++n) {
            CHECK(a.exact()[n] == (1 - h.exact()[n]) / 2);
            CHECK(h.exact()[n] >= 0);
            CHECK(h.exact()[n] <= 1);
            CHECK(p.exact()[n] > 0);
            CHECK(p.exact()[n] <= p.exact()[n - 1]); // nonincreasing
        }
        // n p_n = sum a_j p_{n-j} holds on the emitted coefficients
        for (int n = 1; n <= 40; ++n) {
            Rational s = 0;
            for (int j = 1; j <= n; ++j) s += a.exact()[j] * p.exact()[n - j];
            CHECK(s == n * p.exact()[n]);
        }
    }
}

TEST_CASE("float mode tracks exact mode") {
    for (const auto& law : kLaws) {
        const auto ex = stay_positive_prefix_exact(law, 200);
        const auto fl = stay_positive_prefix_float(law, 200);
        for (int n = 0; n <= 200; n += 7)
            CHECK(std::abs(to_double(ex[n]) - fl[n]) <= 1e-12);
    }
}

TEST_CASE("closed form P(s) against the truncated series") {
    CHECK(closed_form_P({3, 2}, 0.0) == 1.0);

    for (const auto& law : {StepLawSpec{1, 1}, StepLawSpec{2, 1}, StepLawSpec{5, 7}}) {
        const auto p = stay_positive_prefix_exact(law, 60);
        double sum = 0.0;
        double pw = 1.0;
        for (int n = 0; n <= 60; ++n, pw *= 0.5) sum += to_double(p[n]) * pw;
        CHECK(std::abs(closed_form_P(law, 0.5) - sum) <= 1e-12);
    }

    {
        const auto p = stay_positive_prefix_float({5, 7}, 400);
        double sum = 0.0;
        double pw = 1.0;
        for (int n = 0; n <= 400; ++n, pw *= 0.9) sum += p[n] * pw;
        CHECK(std::abs(closed_form_P({5, 7}, 0.9) - sum) <= 1e-10);
    }
    {
        const auto p = stay_positive_prefix_float({2, 1}, 120);
        double sum = 0.0;
        double pw = 1.0;
        for (int n = 0; n <= 120; ++n, pw *= 0.3) sum += p[n] * pw;
        CHECK(std::abs(closed_form_P({2, 1}, 0.3) - sum) <= 1e-12);
    }

    CHECK_THROWS_AS(closed_form_P({1, 1}, 1.0), std::invalid_argument);
}

TEST_CASE("log-series identity") {
    CHECK(log_series_identity_check({1, 1}, 50));
    CHECK(log_series_identity_check({2, 1}, 50));
    CHECK(log_series_identity_check({1, 0}, 30));
    CHECK(log_series_identity_check({5, 7}, 30));
}

TEST_CASE("bridge stay-positive") {
    CHECK(bridge_stay_positive_1d({1, 1}, 2, ArithMode::exact).exact == Rational(1, 2));
    CHECK(bridge_stay_positive_1d({2, 1}, 2, ArithMode::exact).exact == Rational(1, 2));
    CHECK_THROWS_AS(bridge_stay_positive_1d({1, 1}, 3, ArithMode::exact), NullBridgeError);
    CHECK_THROWS_AS(bridge_stay_positive_1d({1, 1}, 1, ArithMode::exact), NullBridgeError);
    // zero atom: a bridge of length 1 exists and its empty interior wins
    CHECK(bridge_stay_positive_1d({1, 0}, 1, ArithMode::exact).exact == 1);

    // enumeration cross-check: interior-positive bridges / all bridges
    for (const auto& law : kLaws) {
        for (int L = 2; L <= 7; ++L) {
            const std::int64_t vals[4] = {law.k, -law.k, law.m, -law.m};
            BigInt bridges = 0, good = 0;
            const std::uint64_t total = 1ull << (2 * L);
            for (std::uint64_t code = 0; code < total; ++code) {
                std::int64_t s = 0;
                bool inner_pos = true;
                std::uint64_t c = code;
                for (int j = 0; j < L; ++j, c >>= 2) {
                    s += vals[c & 3u];
                    if (j + 1 < L && s <= 0) inner_pos = false;
                }
                if (s == 0) {
                    ++bridges;
                    if (inner_pos) ++good;
                }
            }
            if (bridges == 0) {
                CHECK_THROWS_AS(bridge_stay_positive_1d(law, L, ArithMode::exact),
                                NullBridgeError);
            } else {
                CHECK(bridge_stay_positive_1d(law, L, ArithMode::exact).exact ==
                      Rational(good, bridges));
            }
        }
    }
}
