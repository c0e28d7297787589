#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hullwalk/types.hpp"

namespace hullwalk {

/// Parameters of one simulation: walk length, run count, seed, workers.
/// workers = 0 picks the hardware thread count. Results are bitwise
/// identical for any worker count.
struct RunSpec {
    std::int64_t n = 1;
    std::uint64_t runs = 1;
    std::uint64_t seed = 0;
    unsigned workers = 0;
};

struct MCEstimate {
    double mean = 0.0;
    double std_error = 0.0; // binomial: sqrt(mean (1-mean) / runs)
    std::uint64_t runs = 0;
    std::uint64_t seed = 0;
    std::optional<double> derived_constant; // mean * sqrt(pi n) or mean * sqrt(n)
};

/// Fraction of simulated projected walks whose partial sums stay strictly
/// positive through step n, with early exit at the first failure.
/// derived_constant = mean * sqrt(pi n).
MCEstimate mc_stay_positive(const StepLawSpec& law, const RunSpec& run);

/// Same estimator without the early exit, consuming the identical
/// substreams. Exists to pin down that the early exit is purely an
/// optimization; the two agree run by run.
MCEstimate mc_stay_positive_full(const StepLawSpec& law, const RunSpec& run);

/// Fraction of simulated 2-D walks whose chord S_{n1}S_{n2} passes the
/// strict one-sided predicate. derived_constant = mean * sqrt(n).
MCEstimate mc_edge_probability(const EdgeEventSpec& spec, const RunSpec& run);

/// One row of a stay-positive ratio table.
struct RatioTableRow {
    StepLawSpec law;
    std::int64_t n = 0;
    double ratio = 0.0;   // mean / (C / sqrt(pi n))
    double c_theor = 0.0; // quadrature constant
    double c_sim = 0.0;   // mean * sqrt(pi n)
    double std_error = 0.0;
    std::uint64_t runs = 0;
    std::uint64_t seed = 0; // per-cell seed derived from the master seed
};

struct RatioTable {
    std::vector<StepLawSpec> laws;
    std::vector<std::int64_t> ns;
    std::uint64_t runs = 0;
    std::uint64_t seed = 0;
    std::vector<RatioTableRow> rows; // grouped by law, then by n
};

/// Simulated reproduction of the reference tables: one row per (law, n)
/// with the ratio of the simulated stay-positive probability to its
/// asymptotic value and both versions of the constant.
RatioTable ratio_table(const std::vector<StepLawSpec>& laws,
                       const std::vector<std::int64_t>& ns,
                       std::uint64_t runs, std::uint64_t seed, unsigned workers = 0);

/// CSV with caption comments per law and the fixed column order
/// n,ratio,c_theor,c_sim,stderr,runs,seed.
std::string ratio_table_csv(const RatioTable& table);

/// JSON document {schema_version, experiment, params, rows}.
std::string ratio_table_json(const RatioTable& table);

} // namespace hullwalk
