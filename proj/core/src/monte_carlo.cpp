#include "hullwalk/monte_carlo.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "hullwalk/asymptotics.hpp"
#include "hullwalk/hull.hpp"
#include "hullwalk/lattice_path.hpp"
#include "hullwalk/philox.hpp"

namespace hullwalk {

namespace {

unsigned resolve_workers(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

// Runs the per-run indicator over [0, runs) on `workers` threads and sums
// the hit counts. Each run draws from its own (seed, run_index) substream,
// so the partition has no effect on any drawn value and the integer
// reduction makes the estimate bitwise stable.
template <class Indicator>
MCEstimate run_indicator(const RunSpec& run, Indicator&& indicator) {
    require(run.runs >= 1, "need at least one run");
    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(run.workers), run.runs));
    std::vector<std::uint64_t> hits(workers, 0);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = run.runs / workers;
    const std::uint64_t rem = run.runs % workers;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t end = begin + chunk + (w < rem ? 1 : 0);
        pool.emplace_back([&, w, begin, end] {
            std::uint64_t local = 0;
            for (std::uint64_t r = begin; r < end; ++r) local += indicator(r) ? 1 : 0;
            hits[w] = local;
        });
        begin = end;
    }
    for (auto& t : pool) t.join();

    std::uint64_t total = 0;
    for (std::uint64_t h : hits) total += h;

    MCEstimate est;
    est.runs = run.runs;
    est.seed = run.seed;
    est.mean = static_cast<double>(total) / static_cast<double>(run.runs);
    est.std_error = std::sqrt(est.mean * (1.0 - est.mean) / static_cast<double>(run.runs));
    return est;
}

} // namespace

MCEstimate mc_stay_positive(const StepLawSpec& law, const RunSpec& run) {
    require(law.valid(), "step law must have a nonzero step");
    require(run.n >= 1, "walk length must be >= 1");
    const std::int64_t vals[4] = {law.k, -law.k, law.m, -law.m};
    const std::int64_t n = run.n;
    MCEstimate est = run_indicator(run, [&](std::uint64_t r) {
        RunStream rng(run.seed, r);
        std::int64_t s = 0;
        for (std::int64_t j = 0; j < n; ++j) {
            s += vals[rng.next2()];
            if (s <= 0) return false;
        }
        return true;
    });
    est.derived_constant = est.mean * std::sqrt(std::numbers::pi * static_cast<double>(n));
    return est;
}

MCEstimate mc_stay_positive_full(const StepLawSpec& law, const RunSpec& run) {
    require(law.valid(), "step law must have a nonzero step");
    require(run.n >= 1, "walk length must be >= 1");
    const std::int64_t vals[4] = {law.k, -law.k, law.m, -law.m};
    const std::int64_t n = run.n;
    MCEstimate est = run_indicator(run, [&](std::uint64_t r) {
        RunStream rng(run.seed, r);
        std::int64_t s = 0;
        bool ok = true;
        for (std::int64_t j = 0; j < n; ++j) {
            s += vals[rng.next2()];
            ok = ok && s > 0;
        }
        return ok;
    });
    est.derived_constant = est.mean * std::sqrt(std::numbers::pi * static_cast<double>(n));
    return est;
}

MCEstimate mc_edge_probability(const EdgeEventSpec& spec, const RunSpec& run) {
    require(spec.valid(), "edge spec must satisfy 0 <= n1 < n2 <= n");
    RunSpec r2 = run;
    r2.n = spec.n;
    const std::int64_t n = spec.n;
    MCEstimate est = run_indicator(r2, [&, n](std::uint64_t r) {
        thread_local std::vector<IntVec2> pts;
        pts.resize(static_cast<std::size_t>(n) + 1);
        pts[0] = {0, 0};
        RunStream rng(run.seed, r);
        for (std::int64_t j = 0; j < n; ++j)
            pts[j + 1] = pts[j] + unit_step(rng.next2());
        return chord_on_boundary_strict(pts, spec);
    });
    est.derived_constant = est.mean * std::sqrt(static_cast<double>(n));
    return est;
}

RatioTable ratio_table(const std::vector<StepLawSpec>& laws, const std::vector<std::int64_t>& ns,
                       std::uint64_t runs, std::uint64_t seed, unsigned workers) {
    RatioTable table;
    table.laws = laws;
    table.ns = ns;
    table.runs = runs;
    table.seed = seed;
    for (const StepLawSpec& law : laws) {
        const double c = ckm_quadrature(law).value;
        for (std::int64_t n : ns) {
            // Independent cell seed so different cells never share substreams.
            const std::uint64_t cell_seed =
                mix64(seed ^ mix64((std::uint64_t(law.k) << 42) ^ (std::uint64_t(law.m) << 21) ^
                                   std::uint64_t(n)));
            RunSpec rs{n, runs, cell_seed, workers};
            const MCEstimate est = mc_stay_positive(law, rs);
            RatioTableRow row;
            row.law = law;
            row.n = n;
            row.c_theor = c;
            row.c_sim = *est.derived_constant;
            row.ratio = row.c_sim / c;
            row.std_error = est.std_error;
            row.runs = runs;
            row.seed = cell_seed;
            table.rows.push_back(row);
        }
    }
    return table;
}

std::string ratio_table_csv(const RatioTable& table) {
    std::ostringstream out;
    out << std::setprecision(10);
    out << "n,ratio,c_theor,c_sim,stderr,runs,seed\n";
    const StepLawSpec* current = nullptr;
    for (const auto& row : table.rows) {
        if (current == nullptr || !(*current == row.law)) {
            out << "# k = " << row.law.k << ", m = " << row.law.m << "\n";
            current = &row.law;
        }
        out << row.n << ',' << row.ratio << ',' << row.c_theor << ',' << row.c_sim << ','
            << row.std_error << ',' << row.runs << ',' << row.seed << "\n";
    }
    return out.str();
}

std::string ratio_table_json(const RatioTable& table) {
    nlohmann::json doc;
    doc["schema_version"] = 1;
    doc["experiment"] = "ratio_table";
    nlohmann::json laws = nlohmann::json::array();
    for (const auto& l : table.laws) laws.push_back({{"k", l.k}, {"m", l.m}});
    doc["params"] = {{"laws", laws},
                     {"ns", table.ns},
                     {"runs", table.runs},
                     {"seed", table.seed}};
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        rows.push_back({{"k", row.law.k},
                        {"m", row.law.m},
                        {"n", row.n},
                        {"ratio", row.ratio},
                        {"c_theor", row.c_theor},
                        {"c_sim", row.c_sim},
                        {"stderr", row.std_error},
                        {"runs", row.runs},
                        {"seed", row.seed}});
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2);
}

} // namespace hullwalk
