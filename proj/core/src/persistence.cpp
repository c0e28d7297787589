#include "hullwalk/persistence.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "hullwalk/errors.hpp"
#include "hullwalk/quadrature.hpp"

namespace hullwalk {

namespace {

// Distinct step offsets with label multiplicities (out of 4 labels).
std::array<std::pair<int, int>, 4> step_offsets(const StepLawSpec& law, int& count) {
    require(law.valid(), "step law must have a nonzero step");
    std::array<std::pair<int, int>, 4> w{};
    count = 0;
    for (int off : {law.k, -law.k, law.m, -law.m}) {
        bool merged = false;
        for (int i = 0; i < count; ++i) {
            if (w[i].first == off) {
                ++w[i].second;
                merged = true;
                break;
            }
        }
        if (!merged) w[count++] = {off, 1};
    }
    return w;
}

// Dense random-walk convolution over positions [-n*K, n*K]; returns the
// value at the origin after each step. Num is BigInt (unit = label count)
// or double (unit = 1/4 probability mass).
template <class Num>
std::vector<Num> origin_table(const StepLawSpec& law, std::int64_t n, const Num& unit) {
    int nofs = 0;
    const auto ofs = step_offsets(law, nofs);
    const std::int64_t K = std::max(law.max_step(), 1);
    const std::int64_t half = n * K;
    std::vector<Num> cur(2 * half + 1), nxt(2 * half + 1);
    cur[half] = Num(1);

    std::vector<Num> at_zero;
    at_zero.reserve(n + 1);
    at_zero.push_back(cur[half]);

    for (std::int64_t j = 1; j <= n; ++j) {
        const std::int64_t reach = j * K;
        std::fill(nxt.begin() + (half - reach), nxt.begin() + (half + reach + 1), Num(0));
        const std::int64_t prev = (j - 1) * K;
        for (std::int64_t x = -prev; x <= prev; ++x) {
            const Num& c = cur[half + x];
            if (c == 0) continue;
            for (int i = 0; i < nofs; ++i) {
                Num add = c * ofs[i].second;
                add *= unit;
                nxt[half + x + ofs[i].first] += add;
            }
        }
        cur.swap(nxt);
        at_zero.push_back(cur[half]);
    }
    return at_zero;
}

template <class Num>
std::vector<Num> stay_positive_scaled(const std::vector<Num>& at_zero, std::int64_t n,
                                      const Num& step_total) {
    // n p_n = sum_{j=1..n} a_j p_{n-j} in homogeneous units: P_j = p_j * T^j
    // and A_j = a_j * T^j = (T^j - Z_j) / 2 with T the per-step total mass.
    std::vector<Num> tot(n + 1), A(n + 1), P(n + 1);
    tot[0] = Num(1);
    for (std::int64_t j = 1; j <= n; ++j) tot[j] = tot[j - 1] * step_total;
    for (std::int64_t j = 1; j <= n; ++j) A[j] = (tot[j] - at_zero[j]) / 2;
    P[0] = Num(1);
    for (std::int64_t i = 1; i <= n; ++i) {
        Num sum(0);
        for (std::int64_t j = 1; j <= i; ++j) sum += A[j] * P[i - j];
        P[i] = sum / i;
    }
    return P;
}

Rational rational_from_counts(const BigInt& count, std::int64_t n) {
    return Rational(count, pow4(n));
}

// Truncated product of two rational power series.
std::vector<Rational> mul_trunc(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                std::size_t order) {
    std::vector<Rational> out(order + 1);
    for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
        if (a[i] == 0) continue;
        const std::size_t jmax = std::min(b.size() - 1, order - i);
        for (std::size_t j = 0; j < b.size() && j <= jmax; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

} // namespace

namespace detail {

std::vector<BigInt> zero_count_table(const StepLawSpec& law, std::int64_t n) {
    return origin_table<BigInt>(law, n, BigInt(1));
}

std::vector<double> zero_prob_table(const StepLawSpec& law, std::int64_t n) {
    return origin_table<double>(law, n, 0.25);
}

} // namespace detail

std::size_t CoefficientSeries::order() const {
    return std::visit([](const auto& v) { return v.size(); }, coefficients) - 1;
}

double CoefficientSeries::at(std::size_t i) const {
    if (mode == ArithMode::exact) return to_double(exact()[i]);
    return approx()[i];
}

Probability return_probability(const StepLawSpec& law, std::int64_t n, ArithMode mode) {
    require(n >= 1, "return probability needs n >= 1");
    if (mode == ArithMode::exact) {
        const auto z = detail::zero_count_table(law, n);
        return Probability::from_exact(rational_from_counts(z[n], n));
    }
    return Probability::from_double(detail::zero_prob_table(law, n)[n]);
}

Probability positivity_probability(const StepLawSpec& law, std::int64_t n, ArithMode mode) {
    const Probability h = return_probability(law, n, mode);
    if (mode == ArithMode::exact)
        return Probability::from_exact((1 - h.exact) / 2);
    return Probability::from_double((1.0 - h.value) / 2.0);
}

std::vector<Rational> stay_positive_prefix_exact(const StepLawSpec& law, std::int64_t n) {
    const auto z = detail::zero_count_table(law, n);
    const auto P = stay_positive_scaled<BigInt>(z, n, BigInt(4));
    std::vector<Rational> out(n + 1);
    for (std::int64_t j = 0; j <= n; ++j) out[j] = rational_from_counts(P[j], j);
    return out;
}

std::vector<double> stay_positive_prefix_float(const StepLawSpec& law, std::int64_t n) {
    const auto z = detail::zero_prob_table(law, n);
    return stay_positive_scaled<double>(z, n, 1.0);
}

Probability stay_positive(const StepLawSpec& law, std::int64_t n, ArithMode mode) {
    require(n >= 0, "stay-positive probability needs n >= 0");
    if (n == 0) {
        return mode == ArithMode::exact ? Probability::from_exact(Rational(1))
                                        : Probability::from_double(1.0);
    }
    if (mode == ArithMode::exact)
        return Probability::from_exact(stay_positive_prefix_exact(law, n).back());
    return Probability::from_double(stay_positive_prefix_float(law, n).back());
}

namespace {

// Forward DP over strictly positive positions; the start state sits at 0
// and the first step must already land above it.
template <class Num>
Num stay_positive_dp_impl(const StepLawSpec& law, std::int64_t n, const Num& unit) {
    int nofs = 0;
    const auto ofs = step_offsets(law, nofs);
    const std::int64_t K = std::max(law.max_step(), 1);
    const std::int64_t top = std::max<std::int64_t>(n, 1) * K;
    std::vector<Num> alive(top + 1), next(top + 1);

    // first step, from the origin
    if (n >= 1) {
        for (int i = 0; i < nofs; ++i) {
            if (ofs[i].first >= 1) {
                Num add(ofs[i].second);
                add *= unit;
                alive[ofs[i].first] += add;
            }
        }
    }
    for (std::int64_t j = 2; j <= n; ++j) {
        const std::int64_t reach = std::min(top, (j - 1) * K);
        std::fill(next.begin() + 1, next.begin() + std::min(top, j * K) + 1, Num(0));
        for (std::int64_t y = 1; y <= reach; ++y) {
            const Num& c = alive[y];
            if (c == 0) continue;
            for (int i = 0; i < nofs; ++i) {
                const std::int64_t t = y + ofs[i].first;
                if (t >= 1) {
                    Num add = c * ofs[i].second;
                    add *= unit;
                    next[t] += add;
                }
            }
        }
        alive.swap(next);
    }
    Num sum(0);
    if (n == 0) return Num(1);
    for (std::int64_t y = 1; y <= top; ++y) sum += alive[y];
    return sum;
}

} // namespace

Probability stay_positive_dp(const StepLawSpec& law, std::int64_t n, ArithMode mode) {
    require(n >= 0, "stay-positive probability needs n >= 0");
    int nofs = 0;
    step_offsets(law, nofs); // validates the law
    if (mode == ArithMode::exact) {
        const BigInt count = stay_positive_dp_impl<BigInt>(law, n, BigInt(1));
        return Probability::from_exact(n == 0 ? Rational(1) : rational_from_counts(count, n));
    }
    return Probability::from_double(stay_positive_dp_impl<double>(law, n, 0.25));
}

CoefficientSeries series(SeriesKind kind, const StepLawSpec& law, std::int64_t order,
                         ArithMode mode) {
    require(order >= 1, "series order must be >= 1");
    CoefficientSeries s;
    s.law = law;
    s.kind = kind;
    s.mode = mode;
    if (mode == ArithMode::exact) {
        std::vector<Rational> c(order + 1);
        if (kind == SeriesKind::P) {
            c = stay_positive_prefix_exact(law, order);
        } else {
            const auto z = detail::zero_count_table(law, order);
            for (std::int64_t j = 1; j <= order; ++j) {
                const Rational h = rational_from_counts(z[j], j);
                c[j] = kind == SeriesKind::H ? h : (1 - h) / 2;
            }
        }
        s.coefficients = std::move(c);
    } else {
        std::vector<double> c(order + 1, 0.0);
        if (kind == SeriesKind::P) {
            c = stay_positive_prefix_float(law, order);
        } else {
            const auto z = detail::zero_prob_table(law, order);
            for (std::int64_t j = 1; j <= order; ++j)
                c[j] = kind == SeriesKind::H ? z[j] : (1.0 - z[j]) / 2.0;
        }
        s.coefficients = std::move(c);
    }
    return s;
}

double closed_form_P(const StepLawSpec& law, double s, double quadrature_tol) {
    require(law.valid(), "step law must have a nonzero step");
    require(s >= 0.0 && s < 1.0, "closed form needs 0 <= s < 1");
    if (s == 0.0) return 1.0;

    const double k = law.k;
    const double m = law.m;
    // 1 - (s/2)(cos kt + cos mt) = (1-s) + s (sin^2(kt/2) + sin^2(mt/2))
    const auto f = [&](double t, double, double) {
        const double sk = std::sin(0.5 * k * t);
        const double sm = std::sin(0.5 * m * t);
        return std::log((1.0 - s) + s * (sk * sk + sm * sm));
    };
    QuadratureSpec q;
    q.absolute_tolerance = quadrature_tol;
    const auto r = tanh_sinh_integrate(f, 0.0, std::numbers::pi, q);
    const double expo = r.value / (2.0 * std::numbers::pi);
    return std::exp(expo) / std::sqrt(1.0 - s);
}

bool log_series_identity_check(const StepLawSpec& law, std::int64_t order) {
    require(order >= 1, "identity check order must be >= 1");
    const auto z = detail::zero_count_table(law, order);
    const std::size_t ord = static_cast<std::size_t>(order);

    // b_n = (1 - h_n) / (2n); check exp(sum b_n s^n) == P(s) termwise and
    // the rearrangement 2 a_n = 1 - h_n.
    std::vector<Rational> b(ord + 1);
    for (std::size_t j = 1; j <= ord; ++j) {
        const Rational h = rational_from_counts(z[j], j);
        const Rational a = (1 - h) / 2;
        if (2 * a != 1 - h) return false;
        b[j] = a / static_cast<std::int64_t>(j);
    }

    // exp by plain Taylor summation over truncated powers of b.
    std::vector<Rational> acc(ord + 1), term(ord + 1);
    acc[0] = 1;
    term[0] = 1;
    for (std::size_t i = 1; i <= ord; ++i) {
        term = mul_trunc(term, b, ord);
        for (auto& t : term) t /= static_cast<std::int64_t>(i);
        for (std::size_t j = 0; j <= ord; ++j) acc[j] += term[j];
    }

    const auto p = stay_positive_prefix_exact(law, order);
    for (std::size_t j = 0; j <= ord; ++j)
        if (acc[j] != p[j]) return false;
    return true;
}

Probability bridge_stay_positive_1d(const StepLawSpec& law, std::int64_t L, ArithMode mode) {
    require(L >= 1, "bridge length must be >= 1");
    int nofs = 0;
    const auto ofs = step_offsets(law, nofs);

    const auto z = detail::zero_count_table(law, L);
    const BigInt& bridges = z[L];
    if (bridges == 0)
        throw NullBridgeError("no bridge of this length exists for the step law");

    // Alive interior mass after L-1 steps, then one closing step to 0.
    BigInt positive(0);
    if (L == 1) {
        for (int i = 0; i < nofs; ++i)
            if (ofs[i].first == 0) positive += ofs[i].second;
    } else {
        const std::int64_t K = std::max(law.max_step(), 1);
        const std::int64_t top = (L - 1) * K;
        std::vector<BigInt> alive(top + 1), next(top + 1);
        for (int i = 0; i < nofs; ++i)
            if (ofs[i].first >= 1) alive[ofs[i].first] += ofs[i].second;
        for (std::int64_t j = 2; j <= L - 1; ++j) {
            std::fill(next.begin(), next.end(), BigInt(0));
            for (std::int64_t y = 1; y <= std::min(top, (j - 1) * K); ++y) {
                if (alive[y] == 0) continue;
                for (int i = 0; i < nofs; ++i) {
                    const std::int64_t t = y + ofs[i].first;
                    if (t >= 1 && t <= top) next[t] += alive[y] * ofs[i].second;
                }
            }
            alive.swap(next);
        }
        for (std::int64_t y = 1; y <= top; ++y) {
            if (alive[y] == 0) continue;
            for (int i = 0; i < nofs; ++i)
                if (y + ofs[i].first == 0) positive += alive[y] * ofs[i].second;
        }
    }

    const Rational r(positive, bridges);
    if (mode == ArithMode::exact) return Probability::from_exact(r);
    return Probability::from_double(to_double(r));
}

Rational brute_force_stay_positive(const StepLawSpec& law, std::int64_t n) {
    require(law.valid(), "step law must have a nonzero step");
    require(n >= 0, "n must be >= 0");
    if (n > 12) throw ResourceLimitError("brute-force enumeration is capped at n = 12");
    if (n == 0) return Rational(1);

    const int vals[4] = {law.k, -law.k, law.m, -law.m};
    const std::uint64_t total = 1ull << (2 * n);
    std::uint64_t hits = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::int64_t s = 0;
        std::uint64_t c = code;
        bool ok = true;
        for (std::int64_t j = 0; j < n; ++j, c >>= 2) {
            s += vals[c & 3u];
            if (s <= 0) {
                ok = false;
                break;
            }
        }
        hits += ok;
    }
    return Rational(BigInt(hits), pow4(n));
}

} // namespace hullwalk
