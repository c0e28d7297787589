#include "hullwalk/edge_exact.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "hullwalk/errors.hpp"
#include "hullwalk/hull.hpp"
#include "hullwalk/lattice_path.hpp"
#include "hullwalk/persistence.hpp"

namespace hullwalk {

namespace {

BigInt binomial(std::int64_t n, std::int64_t r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    BigInt out = 1;
    for (std::int64_t i = 1; i <= r; ++i) {
        out *= n - r + i;
        out /= i;
    }
    return out;
}

constexpr IntVec2 kUnitSteps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

// Middle-block DP: paths of length L ending at (a,b) whose interior points
// all have cross((a,b), point) > 0. Positions live in |x|,|y| <= L.
template <class Num>
Num bridge_positive_count(std::int64_t a, std::int64_t b, std::int64_t L, const Num& unit) {
    const std::int64_t side = 2 * L + 1;
    const auto idx = [&](std::int64_t x, std::int64_t y) {
        return static_cast<std::size_t>((x + L) * side + (y + L));
    };
    std::vector<Num> cur(side * side), nxt(side * side);
    cur[idx(0, 0)] = Num(1);

    for (std::int64_t j = 1; j <= L; ++j) {
        std::fill(nxt.begin(), nxt.end(), Num(0));
        const std::int64_t reach = j - 1;
        for (std::int64_t x = -reach; x <= reach; ++x) {
            for (std::int64_t y = -(reach - std::abs(x)); y <= reach - std::abs(x); ++y) {
                const Num& c = cur[idx(x, y)];
                if (c == 0) continue;
                for (const IntVec2 s : kUnitSteps) {
                    const std::int64_t nx = x + s.x;
                    const std::int64_t ny = y + s.y;
                    if (j < L) {
                        if (a * ny - b * nx <= 0) continue; // interior must be strictly positive
                    } else if (nx != a || ny != b) {
                        continue;
                    }
                    Num add = c;
                    add *= unit;
                    nxt[idx(nx, ny)] += add;
                }
            }
        }
        cur.swap(nxt);
    }
    return cur[idx(a, b)];
}

} // namespace

DisplacementLaw displacement_law(std::int64_t L) {
    require(L >= 1, "displacement law needs L >= 1");
    DisplacementLaw law;
    law.L = L;
    const BigInt denom = pow4(L);
    for (std::int64_t a = -L; a <= L; ++a) {
        for (std::int64_t b = -(L - std::abs(a)); b <= L - std::abs(a); ++b) {
            if (((a + b) - L) % 2 != 0) continue;
            const BigInt ways = binomial(L, (L + a + b) / 2) * binomial(L, (L + a - b) / 2);
            if (ways == 0) continue;
            law.support.emplace(IntVec2{a, b}, Rational(ways, denom));
        }
    }
    return law;
}

BridgePositive2D bridge_positive_2d(std::int64_t a, std::int64_t b, std::int64_t L,
                                    ArithMode mode) {
    require(L >= 1, "bridge length must be >= 1");
    require(a != 0 || b != 0, "bridge endpoint must be nonzero");
    BridgePositive2D out;
    out.parity_ok = std::abs(a) + std::abs(b) <= L && ((std::abs(a) + std::abs(b)) - L) % 2 == 0;
    if (!out.parity_ok) {
        out.joint = mode == ArithMode::exact ? Probability::from_exact(Rational(0))
                                             : Probability::from_double(0.0);
        return out;
    }
    if (mode == ArithMode::exact) {
        const BigInt count = bridge_positive_count<BigInt>(a, b, L, BigInt(1));
        out.joint = Probability::from_exact(Rational(count, pow4(L)));
    } else {
        out.joint = Probability::from_double(bridge_positive_count<double>(a, b, L, 0.25));
    }
    return out;
}

namespace {

template <class Num>
Num exact_edge_sum(const EdgeEventSpec& spec, const Num& unit) {
    const std::int64_t L = spec.n2 - spec.n1;
    // Outer stay-positive tables per projected law, keyed by (|a|, |b|).
    std::map<StepLawSpec, std::pair<Num, Num>> outer;
    Num total(0);
    for (std::int64_t a = -L; a <= L; ++a) {
        for (std::int64_t b = -(L - std::abs(a)); b <= L - std::abs(a); ++b) {
            if ((a == 0 && b == 0) || ((a + b) - L) % 2 != 0) continue;
            const Num mid = bridge_positive_count<Num>(a, b, L, unit);
            if (mid == 0) continue;
            const StepLawSpec law{static_cast<int>(std::abs(a)), static_cast<int>(std::abs(b))};
            auto it = outer.find(law);
            if (it == outer.end()) {
                std::pair<Num, Num> pp;
                if constexpr (std::is_same_v<Num, double>) {
                    pp.first = spec.n1 == 0 ? 1.0 : stay_positive_prefix_float(law, spec.n1).back();
                    pp.second = spec.n == spec.n2
                                    ? 1.0
                                    : stay_positive_prefix_float(law, spec.n - spec.n2).back();
                } else {
                    pp.first = spec.n1 == 0
                                   ? Num(1)
                                   : Num(stay_positive_prefix_exact(law, spec.n1).back());
                    pp.second = spec.n == spec.n2
                                    ? Num(1)
                                    : Num(stay_positive_prefix_exact(law, spec.n - spec.n2).back());
                }
                it = outer.emplace(law, std::move(pp)).first;
            }
            total += mid * it->second.first * it->second.second;
        }
    }
    return 2 * total;
}

} // namespace

EdgeProbabilityResult exact_edge_probability(const EdgeEventSpec& spec, ArithMode mode) {
    require(spec.valid(), "edge spec must satisfy 0 <= n1 < n2 <= n");
    EdgeProbabilityResult res;
    res.spec = spec;
    res.method = EdgeMethod::exact_factored;
    if (spec.n == 1) {
        // The only points are the chord endpoints; one-sidedness is vacuous.
        res.value = mode == ArithMode::exact ? Probability::from_exact(Rational(1))
                                             : Probability::from_double(1.0);
        return res;
    }
    if (mode == ArithMode::exact) {
        res.value = Probability::from_exact(exact_edge_sum<Rational>(spec, Rational(1, 4)));
    } else {
        res.value = Probability::from_double(exact_edge_sum<double>(spec, 0.25));
    }
    return res;
}

EdgeProbabilityResult brute_force_edge_probability(const EdgeEventSpec& spec) {
    require(spec.valid(), "edge spec must satisfy 0 <= n1 < n2 <= n");
    if (spec.n > 12) throw ResourceLimitError("brute-force enumeration is capped at n = 12");

    const std::int64_t n = spec.n;
    const std::uint64_t total = 1ull << (2 * n);
    std::vector<IntVec2> pts(static_cast<std::size_t>(n) + 1);
    std::uint64_t hits = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (std::int64_t j = 0; j < n; ++j, c >>= 2)
            pts[j + 1] = pts[j] + kUnitSteps[c & 3u];
        hits += chord_on_boundary_strict(pts, spec);
    }
    EdgeProbabilityResult res;
    res.spec = spec;
    res.method = EdgeMethod::brute_force;
    res.value = Probability::from_exact(Rational(BigInt(hits), pow4(n)));
    return res;
}

} // namespace hullwalk
