// Command-line surface over the library: exact distributions, moments,
// normal/Edgeworth approximations, log-concavity tables and the built-in
// verification suites.  Big integers and rationals are always serialized as
// decimal strings (rationals as "p/q"), never as floating point.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/domain error,
// 3 I/O error.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mahonian/approx.hpp"
#include "mahonian/arith.hpp"
#include "mahonian/composition.hpp"
#include "mahonian/distribution.hpp"
#include "mahonian/moments.hpp"
#include "mahonian/polynomial.hpp"
#include "mahonian/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

// Emits newline-terminated UTF-8 text to stdout or to --out PATH.
int emit(const std::string& text, const std::string& out_path) {
    std::string payload = text;
    if (payload.empty() || payload.back() != '\n') payload += '\n';
    if (out_path.empty()) {
        std::cout << payload;
        return kExitOk;
    }
    std::ofstream file(out_path);
    if (!file) {
        std::cerr << "error: cannot open output file '" << out_path << "'\n";
        return kExitIo;
    }
    file << payload;
    file.flush();
    if (!file) {
        std::cerr << "error: write failed for '" << out_path << "'\n";
        return kExitIo;
    }
    return kExitOk;
}

json parts_json(const std::vector<std::int64_t>& parts) { return json(parts); }

int cmd_dist(const std::vector<std::int64_t>& parts, const std::string& format,
             const std::string& out_path) {
    const auto d = mahonian::MahonianDistribution::build(parts);

    if (format == "csv") {
        std::ostringstream csv;
        csv << "k,coefficient\n";
        const auto& c = d.coeffs().coeffs();
        for (std::size_t k = 0; k < c.size(); ++k) {
            csv << k << "," << c[k].str() << "\n";
        }
        return emit(csv.str(), out_path);
    }

    json j;
    j["parts"] = parts_json(parts);
    j["total"] = mahonian::to_decimal_string(d.total());
    j["mu"] = mahonian::to_decimal_string(d.mu());
    j["sigma2"] = mahonian::to_decimal_string(d.sigma2());
    json coeffs = json::array();
    for (const auto& c : d.coeffs().coeffs()) coeffs.push_back(c.str());
    j["coefficients"] = std::move(coeffs);
    return emit(j.dump(2), out_path);
}

int cmd_moments(const std::vector<std::int64_t>& parts, int order, const std::string& method,
                const std::string& out_path) {
    mahonian::MomentTable table = [&] {
        if (method == "recurrence") {
            if (parts.size() != 2) {
                throw std::invalid_argument("method 'recurrence' requires a two-letter composition");
            }
            return mahonian::moment_table_recurrence(parts[0], parts[1], order);
        }
        const auto d = mahonian::MahonianDistribution::build(parts);
        return mahonian::moment_table_exact(d, order);
    }();

    json j;
    j["parts"] = parts_json(parts);
    j["order"] = order;
    j["method"] = method;
    json binomial = json::array();
    for (const auto& a : table.binomial) binomial.push_back(mahonian::to_decimal_string(a));
    json central = json::array();
    for (const auto& m : table.central) central.push_back(mahonian::to_decimal_string(m));
    j["binomial"] = std::move(binomial);
    j["central"] = std::move(central);
    return emit(j.dump(2), out_path);
}

int cmd_approx(const std::vector<std::int64_t>& parts, std::optional<std::int64_t> k,
               const std::string& out_path) {
    const auto d = mahonian::MahonianDistribution::build(parts);

    json j;
    j["parts"] = parts_json(parts);
    if (k) {
        const mahonian::EdgeworthExpansion edgeworth(d);
        const double pmf_gauss = mahonian::gaussian_pmf(d, *k);
        const double pmf_edge = edgeworth.pmf(*k);
        const double total = mahonian::to_double(d.total());
        j["k"] = *k;
        j["pmf"] = {
            {"exact", d.pmf_real(*k)},
            {"gaussian", pmf_gauss},
            {"edgeworth", pmf_edge},
        };
        j["count"] = {
            {"exact", mahonian::to_decimal_string(d.coeffs().coeff(*k))},
            {"gaussian", pmf_gauss * total},
            {"edgeworth", pmf_edge * total},
        };
    } else {
        const auto report = mahonian::local_limit_report(d);
        j["sup_abs_error"] = report.sup_abs_error;
        j["scaled_llt_error"] = report.scaled_llt_error;
        j["kolmogorov"] = report.kolmogorov;
    }
    return emit(j.dump(2), out_path);
}

int cmd_logconcave(std::optional<std::int64_t> table_nmax, const std::vector<std::int64_t>& parts,
                   const std::vector<std::int64_t>& range, const std::string& format,
                   const std::string& out_path) {
    if (table_nmax.has_value() == !parts.empty()) {
        throw std::invalid_argument("give either --table NMAX or --parts ... with --range LO HI");
    }

    std::vector<mahonian::LogConcavityRecord> rows;
    bool table_mode = table_nmax.has_value();
    if (table_mode) {
        rows = mahonian::central_delta_table(*table_nmax);
    } else {
        if (range.size() != 2) throw std::invalid_argument("--range expects LO HI");
        const auto d = mahonian::MahonianDistribution::build(parts);
        rows = mahonian::logconcavity_scan(d, range[0], range[1]);
    }

    if (format == "csv") {
        std::ostringstream csv;
        csv << (table_mode ? "n,delta\n" : "j,delta\n");
        for (const auto& row : rows) {
            csv << (table_mode ? row.n : row.j) << "," << row.delta.str() << "\n";
        }
        return emit(csv.str(), out_path);
    }

    json j;
    if (!table_mode) j["parts"] = parts_json(parts);
    json jrows = json::array();
    for (const auto& row : rows) {
        json entry;
        if (table_mode) {
            entry["n"] = row.n;
        } else {
            entry["j"] = row.j;
        }
        entry["delta"] = row.delta.str();
        jrows.push_back(std::move(entry));
    }
    j["rows"] = std::move(jrows);
    return emit(j.dump(2), out_path);
}

int cmd_verify(const std::string& scope) {
    std::vector<mahonian::PropertyResult> results;
    if (scope == "oracle") {
        results = mahonian::verify_oracle();
    } else if (scope == "moments") {
        results = mahonian::verify_moments();
    } else if (scope == "table") {
        results = mahonian::verify_table();
    } else if (scope == "all") {
        results = mahonian::verify_all();
    } else {
        throw std::invalid_argument("scope must be one of: oracle, moments, table, all");
    }

    bool all_passed = true;
    for (const auto& r : results) {
        if (r.passed) {
            std::cout << "PASS " << r.name << "\n";
        } else {
            all_passed = false;
            std::cout << "FAIL " << r.name << " -- " << r.detail << "\n";
        }
    }
    return all_passed ? kExitOk : kExitVerifyFailure;
}

int cmd_cf(const std::vector<std::int64_t>& parts, double theta, const std::string& out_path) {
    const auto d = mahonian::MahonianDistribution::build(parts);
    const std::complex<double> value =
        mahonian::eval_unit_circle(d.coeffs(), theta) / mahonian::to_double(d.total());

    json j;
    j["parts"] = parts_json(parts);
    j["theta"] = theta;
    j["modulus"] = std::abs(value);
    return emit(j.dump(2), out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Mahonian (inversion-count) distributions on multiset words"};
    app.require_subcommand(1);

    std::vector<std::int64_t> parts;
    std::string format = "json";
    std::string out_path;
    std::string method = "exact";
    std::string scope;
    int order = 2;
    std::optional<std::int64_t> k_value;
    std::optional<std::int64_t> table_nmax;
    std::vector<std::int64_t> scan_parts;
    std::vector<std::int64_t> scan_range;
    double theta = 0.0;

    auto* dist = app.add_subcommand("dist", "Exact coefficient vector, total, mean and variance");
    dist->add_option("parts", parts, "composition parts (a1 a2 ...)")->required();
    dist->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    dist->add_option("--out", out_path, "write output to PATH instead of stdout");

    auto* moments = app.add_subcommand("moments", "Exact binomial and central moments");
    moments->add_option("parts", parts)->required();
    moments->add_option("--order", order, "highest moment order")->required()->check(CLI::PositiveNumber);
    moments->add_option("--method", method)->check(CLI::IsMember({"exact", "recurrence"}));
    moments->add_option("--out", out_path);

    auto* approx = app.add_subcommand("approx", "Normal and Edgeworth approximations, error report");
    approx->add_option("parts", parts)->required();
    approx->add_option("--k", k_value, "evaluate approximations at inversion count K");
    approx->add_option("--out", out_path);

    auto* logconcave = app.add_subcommand("logconcave", "Log-concavity deltas c_j^2 - c_{j-1} c_{j+1}");
    logconcave->add_option("--table", table_nmax, "central deltas for (n,n), n = 2,4..NMAX");
    logconcave->add_option("--parts", scan_parts, "composition to scan");
    logconcave->add_option("--range", scan_range, "scan range LO HI")->expected(2);
    logconcave->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    logconcave->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "Run the built-in invariant suites");
    verify->add_option("scope", scope, "oracle | moments | table | all")->required();

    auto* cf = app.add_subcommand("cf", "Normalized generating function modulus on the unit circle");
    cf->add_option("parts", parts)->required();
    cf->add_option("--theta", theta, "angle in radians")->required();
    cf->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(dist)) return cmd_dist(parts, format, out_path);
        if (app.got_subcommand(moments)) return cmd_moments(parts, order, method, out_path);
        if (app.got_subcommand(approx)) return cmd_approx(parts, k_value, out_path);
        if (app.got_subcommand(logconcave)) {
            return cmd_logconcave(table_nmax, scan_parts, scan_range, format, out_path);
        }
        if (app.got_subcommand(verify)) return cmd_verify(scope);
        if (app.got_subcommand(cf)) return cmd_cf(parts, theta, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
