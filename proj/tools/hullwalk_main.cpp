// hullwalk: convex hulls of planar lattice walks, stay-positive
// probabilities of the projected one-dimensional walks, and the constants
// tying the two together. Every numeric engine of the core library is
// reachable from here with reproducible, diff-able output.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hullwalk/asymptotics.hpp"
#include "hullwalk/chord.hpp"
#include "hullwalk/edge_exact.hpp"
#include "hullwalk/errors.hpp"
#include "hullwalk/hull.hpp"
#include "hullwalk/lattice_path.hpp"
#include "hullwalk/monte_carlo.hpp"
#include "hullwalk/persistence.hpp"

namespace {

using nlohmann::json;
using namespace hullwalk;

constexpr int kExitOk = 0;
constexpr int kExitParam = 2;
constexpr int kExitTolerance = 3;
constexpr int kExitResource = 4;

enum class OutFormat { text, json_doc, csv };

std::string fmt6(double v) {
    std::ostringstream os;
    os << std::setprecision(6) << v;
    return os.str();
}

/// Uniform command envelope: serializes to JSON and to a flat one-row CSV
/// (header of dotted keys, then values); text mode prints the principal
/// value first and the rest as key = value lines.
struct CommandResult {
    std::string command;
    json params = json::object();
    json result = json::object();
    json provenance = json::object();
    std::string principal; // name of the headline result field

    json to_json() const {
        return json{{"schema_version", 1},
                    {"command", command},
                    {"params", params},
                    {"result", result},
                    {"provenance", provenance}};
    }

    void flatten(const json& obj, const std::string& prefix, std::vector<std::string>& keys,
                 std::vector<std::string>& vals) const {
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
            if (it->is_object()) {
                flatten(*it, key, keys, vals);
            } else {
                keys.push_back(key);
                vals.push_back(it->is_string() ? it->get<std::string>() : it->dump());
            }
        }
    }

    std::string to_csv() const {
        std::vector<std::string> keys{"command"};
        std::vector<std::string> vals{command};
        flatten(params, "params", keys, vals);
        flatten(result, "result", keys, vals);
        flatten(provenance, "provenance", keys, vals);
        std::ostringstream os;
        for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
        os << "\n";
        for (std::size_t i = 0; i < vals.size(); ++i) os << (i ? "," : "") << vals[i];
        os << "\n";
        return os.str();
    }

    std::string to_text() const {
        std::ostringstream os;
        if (!principal.empty() && result.contains(principal)) {
            const json& v = result.at(principal);
            os << (v.is_string() ? v.get<std::string>()
                                 : (v.is_number_float() ? fmt6(v.get<double>()) : v.dump()))
               << "\n";
        }
        for (auto it = result.begin(); it != result.end(); ++it) {
            if (it.key() == principal) continue;
            os << it.key() << " = "
               << (it->is_string() ? it->get<std::string>()
                                   : (it->is_number_float() ? fmt6(it->get<double>())
                                                            : it->dump()))
               << "\n";
        }
        for (auto it = provenance.begin(); it != provenance.end(); ++it)
            os << it.key() << " = "
               << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
        return os.str();
    }

    void emit(OutFormat fmt) const {
        switch (fmt) {
            case OutFormat::text: std::cout << to_text(); break;
            case OutFormat::json_doc: std::cout << to_json().dump(2) << "\n"; break;
            case OutFormat::csv: std::cout << to_csv(); break;
        }
    }
};

json probability_json(const Probability& p) {
    json j;
    j["value"] = p.value;
    if (p.mode == ArithMode::exact) {
        std::ostringstream os;
        os << p.exact;
        j["exact"] = os.str();
    }
    return j;
}

OutFormat parse_out(const std::string& s) {
    if (s == "text") return OutFormat::text;
    if (s == "json") return OutFormat::json_doc;
    if (s == "csv") return OutFormat::csv;
    throw CLI::ValidationError("--out must be one of text|json|csv");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open path file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CliOptions {
    int k = 0, m = 0;
    std::int64_t n = 0, n1 = 0, n2 = 0;
    double tol = 1e-10;
    std::string method = "quadrature";
    std::int64_t terms = 2000;
    std::string mode = "exact";
    std::string arith = "rational";
    std::uint64_t runs = 1000000;
    std::uint64_t seed = 1;
    unsigned workers = 0;
    std::string out = "text";
    std::string in_file;
    std::string ns_list = "100,1000,10000";
    std::string laws_list = "1,1;2,1;5,7";
};

ArithMode parse_arith(const std::string& s) {
    if (s == "rational" || s == "exact") return ArithMode::exact;
    if (s == "float") return ArithMode::floating;
    throw CLI::ValidationError("--arith must be rational|float");
}

int cmd_ckm(const CliOptions& o) {
    const StepLawSpec law{o.k, o.m};
    require(law.valid(), "law must have a nonzero step");
    CommandResult res;
    res.command = "ckm";
    res.params = {{"k", o.k}, {"m", o.m}, {"method", o.method}, {"tol", o.tol}};
    if (o.method == "quadrature") {
        QuadratureSpec q;
        q.absolute_tolerance = o.tol;
        const auto c = ckm_quadrature(law, q);
        res.result = {{"c", c.value}, {"error_bound", c.error_bound}};
        res.provenance = {{"method", "quadrature"}, {"tolerance", o.tol}};
    } else if (o.method == "series") {
        const auto c = ckm_series_tail(law, o.terms);
        res.result = {{"c", c.value}, {"error_bound", c.error_bound}};
        res.provenance = {{"method", "series-tail"}, {"terms", o.terms}};
        res.params["terms"] = o.terms;
    } else {
        throw std::invalid_argument("--method must be quadrature|series");
    }
    res.principal = "c";
    res.emit(parse_out(o.out));
    return kExitOk;
}

int cmd_pn(const CliOptions& o) {
    const StepLawSpec law{o.k, o.m};
    require(law.valid(), "law must have a nonzero step");
    require(o.n >= 0, "n must be >= 0");
    CommandResult res;
    res.command = "pn";
    res.params = {{"k", o.k}, {"m", o.m}, {"n", o.n}, {"mode", o.mode}};
    const ArithMode am = parse_arith(o.arith);

    if (o.mode == "exact" || o.mode == "dp") {
        const Probability p = o.mode == "exact" ? stay_positive(law, o.n, am)
                                                : stay_positive_dp(law, o.n, am);
        res.result = probability_json(p);
        res.provenance = {{"mode", o.mode},
                          {"arith", am == ArithMode::exact ? "rational" : "float"}};
        res.params["arith"] = o.arith;
    } else if (o.mode == "brute") {
        const Rational p = brute_force_stay_positive(law, o.n);
        res.result = probability_json(Probability::from_exact(p));
        res.provenance = {{"mode", "brute"}, {"arith", "rational"}};
    } else if (o.mode == "asymp") {
        QuadratureSpec q;
        q.absolute_tolerance = o.tol;
        res.result = {{"value", asymptotic_pn(law, o.n, q)}};
        res.provenance = {{"mode", "asymp"}, {"tolerance", o.tol}};
    } else if (o.mode == "mc") {
        const RunSpec rs{o.n, o.runs, o.seed, o.workers};
        const MCEstimate est = mc_stay_positive(law, rs);
        res.result = {{"value", est.mean},
                      {"stderr", est.std_error},
                      {"derived_constant", *est.derived_constant}};
        res.provenance = {{"mode", "mc"}, {"runs", o.runs}, {"seed", o.seed}, {"stderr", est.std_error}};
        res.params["runs"] = o.runs;
        res.params["seed"] = o.seed;
    } else {
        throw std::invalid_argument("--mode must be exact|dp|mc|asymp|brute");
    }
    res.principal = res.result.contains("exact") ? "exact" : "value";
    res.emit(parse_out(o.out));
    return kExitOk;
}

int cmd_edge(const CliOptions& o) {
    const EdgeEventSpec spec{o.n1, o.n2, o.n};
    require(spec.valid(), "edge spec must satisfy 0 <= n1 < n2 <= n");
    CommandResult res;
    res.command = "edge";
    res.params = {{"n1", o.n1}, {"n2", o.n2}, {"n", o.n}, {"mode", o.mode}};

    if (o.mode == "exact") {
        const ArithMode am = parse_arith(o.arith);
        const auto r = exact_edge_probability(spec, am);
        res.result = probability_json(r.value);
        res.provenance = {{"mode", "exact-factored"},
                          {"arith", am == ArithMode::exact ? "rational" : "float"}};
        res.params["arith"] = o.arith;
    } else if (o.mode == "brute") {
        const auto r = brute_force_edge_probability(spec);
        res.result = probability_json(r.value);
        res.provenance = {{"mode", "brute"}, {"arith", "rational"}};
    } else if (o.mode == "mc") {
        const RunSpec rs{o.n, o.runs, o.seed, o.workers};
        const MCEstimate est = mc_edge_probability(spec, rs);
        res.result = {{"value", est.mean},
                      {"stderr", est.std_error},
                      {"derived_constant", *est.derived_constant}};
        res.provenance = {{"mode", "mc"}, {"runs", o.runs}, {"seed", o.seed}, {"stderr", est.std_error}};
        res.params["runs"] = o.runs;
        res.params["seed"] = o.seed;
    } else {
        throw std::invalid_argument("--mode must be exact|mc|brute");
    }
    res.principal = res.result.contains("exact") ? "exact" : "value";
    res.emit(parse_out(o.out));
    return kExitOk;
}

std::vector<std::int64_t> parse_ns(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
    require(!out.empty(), "--ns must list at least one n");
    return out;
}

std::vector<StepLawSpec> parse_laws(const std::string& s) {
    std::vector<StepLawSpec> out;
    std::stringstream ss(s);
    std::string pair;
    while (std::getline(ss, pair, ';')) {
        const auto comma = pair.find(',');
        require(comma != std::string::npos, "--laws entries must look like k,m");
        StepLawSpec law{std::stoi(pair.substr(0, comma)), std::stoi(pair.substr(comma + 1))};
        require(law.valid(), "law must have a nonzero step");
        out.push_back(law);
    }
    require(!out.empty(), "--laws must list at least one law");
    return out;
}

int cmd_tables(const CliOptions& o) {
    const auto laws = parse_laws(o.laws_list);
    const auto ns = parse_ns(o.ns_list);
    const RatioTable table = ratio_table(laws, ns, o.runs, o.seed, o.workers);
    const OutFormat fmt = parse_out(o.out);
    if (fmt == OutFormat::csv) {
        std::cout << ratio_table_csv(table);
    } else if (fmt == OutFormat::json_doc) {
        std::cout << ratio_table_json(table) << "\n";
    } else {
        std::cout << std::setprecision(6);
        for (const auto& law : laws) {
            std::cout << "k = " << law.k << ", m = " << law.m << "\n";
            std::cout << std::setw(8) << "n" << std::setw(12) << "ratio" << std::setw(12)
                      << "c_theor" << std::setw(12) << "c_sim" << std::setw(12) << "stderr"
                      << "\n";
            for (const auto& row : table.rows) {
                if (!(row.law == law)) continue;
                std::cout << std::setw(8) << row.n << std::setw(12) << row.ratio << std::setw(12)
                          << row.c_theor << std::setw(12) << row.c_sim << std::setw(12)
                          << row.std_error << "\n";
            }
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int cmd_hull(const CliOptions& o) {
    const LatticePath path = LatticePath::parse(read_file(o.in_file));
    CommandResult res;
    res.command = "hull";
    res.params = {{"in", o.in_file}, {"n1", o.n1}, {"n2", o.n2}, {"n", path.steps()}};

    const HullPolygon hull = convex_hull(path.points());
    json verts = json::array();
    for (const auto& v : hull.vertices) verts.push_back({v.x, v.y});
    res.result["hull"] = std::move(verts);
    res.result["degenerate"] = hull.degenerate();

    const EdgeEventSpec spec{o.n1, o.n2, path.steps()};
    require(spec.valid(), "edge spec must satisfy 0 <= n1 < n2 <= n");
    res.result["strict"] = chord_on_boundary_strict(path, spec);
    res.result["geometric"] = chord_is_hull_edge_geometric(path, spec);
    res.principal = "hull";
    res.emit(parse_out(o.out));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"convex-hull chord probabilities for planar lattice walks"};
    app.require_subcommand(1);
    CliOptions o;

    auto* ckm = app.add_subcommand("ckm", "stay-positive constant C_{k,m}");
    ckm->add_option("k", o.k, "first step value")->required();
    ckm->add_option("m", o.m, "second step value")->required();
    ckm->add_option("--tol", o.tol, "absolute tolerance on the exponent integral");
    ckm->add_option("--method", o.method, "quadrature|series");
    ckm->add_option("--terms", o.terms, "series-tail term count");
    ckm->add_option("--out", o.out, "text|json|csv");

    auto* pn = app.add_subcommand("pn", "stay-positive probability p_n");
    pn->add_option("k", o.k)->required();
    pn->add_option("m", o.m)->required();
    pn->add_option("n", o.n)->required();
    pn->add_option("--mode", o.mode, "exact|dp|mc|asymp|brute");
    pn->add_option("--arith", o.arith, "rational|float (exact and dp modes)");
    pn->add_option("--runs", o.runs, "Monte Carlo run count");
    pn->add_option("--seed", o.seed, "Monte Carlo seed");
    pn->add_option("--tol", o.tol, "tolerance for asymp mode");
    pn->add_option("--workers", o.workers, "worker threads (0 = auto)")
        ->envname("HULLWALK_WORKERS");
    pn->add_option("--out", o.out, "text|json|csv");

    auto* edge = app.add_subcommand("edge", "probability the chord S_n1 S_n2 lies on the hull");
    edge->add_option("n1", o.n1)->required();
    edge->add_option("n2", o.n2)->required();
    edge->add_option("n", o.n)->required();
    edge->add_option("--mode", o.mode, "exact|mc|brute");
    edge->add_option("--arith", o.arith, "rational|float (exact mode)");
    edge->add_option("--runs", o.runs, "Monte Carlo run count");
    edge->add_option("--seed", o.seed, "Monte Carlo seed");
    edge->add_option("--workers", o.workers, "worker threads (0 = auto)")
        ->envname("HULLWALK_WORKERS");
    edge->add_option("--out", o.out, "text|json|csv");

    auto* tables = app.add_subcommand("tables", "simulated ratio tables with both constants");
    tables->add_option("--runs", o.runs, "runs per cell");
    tables->add_option("--seed", o.seed, "master seed");
    tables->add_option("--ns", o.ns_list, "comma-separated walk lengths");
    tables->add_option("--laws", o.laws_list, "semicolon-separated k,m pairs");
    tables->add_option("--workers", o.workers, "worker threads (0 = auto)")
        ->envname("HULLWALK_WORKERS");
    tables->add_option("--out", o.out, "text|json|csv");

    auto* hull = app.add_subcommand("hull", "hull vertices and chord predicates for a path file");
    hull->add_option("--in", o.in_file, "path file: E/W/N/S steps or JSON [[x,y],...]")
        ->required();
    hull->add_option("n1", o.n1)->required();
    hull->add_option("n2", o.n2)->required();
    hull->add_option("--out", o.out, "text|json|csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParam;
    }

    try {
        if (ckm->parsed()) return cmd_ckm(o);
        if (pn->parsed()) return cmd_pn(o);
        if (edge->parsed()) return cmd_edge(o);
        if (tables->parsed()) return cmd_tables(o);
        if (hull->parsed()) return cmd_hull(o);
        return kExitParam;
    } catch (const ToleranceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTolerance;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const NullBridgeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParam;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParam;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParam;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
