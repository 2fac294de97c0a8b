#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>

#include <json.hpp>

#include "cli_runner.hpp"
#include "mahonian/arith.hpp"
#include "mahonian/distribution.hpp"

using nlohmann::json;
using testutil::run_cli;

TEST_CASE("dist emits the exact distribution as decimal strings") {
    const auto result = run_cli("dist 2 2 --format json");
    REQUIRE(result.exit_code == 0);
    const json j = json::parse(result.out);
    CHECK(j["parts"] == json({2, 2}));
    CHECK(j["total"] == "6");
    CHECK(j["mu"] == "2");
    CHECK(j["sigma2"] == "5/3");
    CHECK(j["coefficients"] == json({"1", "1", "2", "1", "1"}));
}

TEST_CASE("dist handles a single letter and rejects invalid parts") {
    const auto single = run_cli("dist 1 --format json");
    REQUIRE(single.exit_code == 0);
    const json j = json::parse(single.out);
    CHECK(j["coefficients"] == json({"1"}));
    CHECK(j["sigma2"] == "0");

    CHECK(run_cli("dist 0 2").exit_code == 2);
    CHECK(run_cli("dist").exit_code == 2);
}

TEST_CASE("dist csv uses the fixed header") {
    const auto result = run_cli("dist 2 2 --format csv");
    REQUIRE(result.exit_code == 0);
    CHECK(result.out == "k,coefficient\n0,1\n1,1\n2,2\n3,1\n4,1\n");
}

TEST_CASE("emitted coefficients round-trip to the exact big integers") {
    const auto result = run_cli("dist 5 7 --format json");
    REQUIRE(result.exit_code == 0);
    const json j = json::parse(result.out);

    const auto d = mahonian::MahonianDistribution::build({5, 7});
    const auto& coeffs = d.coeffs().coeffs();
    REQUIRE(j["coefficients"].size() == coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        REQUIRE(mahonian::BigInt(j["coefficients"][k].get<std::string>()) == coeffs[k]);
    }
    CHECK(mahonian::BigInt(j["total"].get<std::string>()) == d.total());
}

TEST_CASE("moments subcommand emits identical tables for both methods") {
    const auto exact = run_cli("moments 2 2 --order 4 --method exact");
    const auto recurrence = run_cli("moments 2 2 --order 4 --method recurrence");
    REQUIRE(exact.exit_code == 0);
    REQUIRE(recurrence.exit_code == 0);

    const json je = json::parse(exact.out);
    const json jr = json::parse(recurrence.out);
    CHECK(je["central"] == jr["central"]);
    CHECK(je["binomial"] == jr["binomial"]);
    CHECK(je["central"][2] == "5/3");
    CHECK(je["binomial"][2] == "5/6");
    CHECK(je["central"][0] == "1");
    CHECK(je["central"][1] == "0");

    CHECK(run_cli("moments 1 1 1 --order 2 --method recurrence").exit_code == 2);
    CHECK(run_cli("moments 2 2 --method exact").exit_code == 2);  // --order is required
}

TEST_CASE("approx with k reports densities and approximate counts") {
    const auto result = run_cli("approx 4 4 4 --k 24");  // k = mu = e2/2 = 48/2
    REQUIRE(result.exit_code == 0);
    const json j = json::parse(result.out);
    CHECK(j["k"] == 24);
    CHECK(j["pmf"]["exact"].get<double>() > 0.0);
    CHECK(j["count"]["gaussian"].get<double>() ==
          Catch::Approx(j["pmf"]["gaussian"].get<double>() *
                        mahonian::to_double(mahonian::MahonianDistribution::build({4, 4, 4}).total())));

    const auto d = mahonian::MahonianDistribution::build({4, 4, 4});
    CHECK(mahonian::BigInt(j["count"]["exact"].get<std::string>()) == d.coeffs().coeff(24));
}

TEST_CASE("approx count at the mean is close to total over sqrt(2 pi) sigma") {
    const auto result = run_cli("approx 100 100 100 --k 15000");  // k = e2/2
    REQUIRE(result.exit_code == 0);
    const json j = json::parse(result.out);

    const auto d = mahonian::MahonianDistribution::build({100, 100, 100});
    const double sigma = std::sqrt(mahonian::to_double(d.sigma2()));
    const double expected =
        mahonian::to_double(d.total()) / (std::sqrt(2.0 * std::numbers::pi) * sigma);
    CHECK(j["count"]["gaussian"].get<double>() == Catch::Approx(expected));
}

TEST_CASE("approx without k emits the report scalars") {
    const auto result = run_cli("approx 20 20");
    REQUIRE(result.exit_code == 0);
    const json j = json::parse(result.out);
    CHECK(j.contains("kolmogorov"));
    CHECK(j.contains("scaled_llt_error"));
    CHECK(j.contains("sup_abs_error"));
    CHECK(j["kolmogorov"].get<double>() > 0.0);
    CHECK(j["kolmogorov"].get<double>() < 1.0);

    CHECK(run_cli("approx 5").exit_code == 2);  // degenerate
}

TEST_CASE("logconcave table ends at the n = 20 entry") {
    const auto result = run_cli("logconcave --table 20");
    REQUIRE(result.exit_code == 0);
    const json j = json::parse(result.out);
    REQUIRE(j["rows"].size() == 10);
    CHECK(j["rows"][0]["n"] == 2);
    CHECK(j["rows"][0]["delta"] == "-1");
    CHECK(j["rows"][9]["n"] == 20);
    CHECK(j["rows"][9]["delta"] == "1501943866215277");

    CHECK(run_cli("logconcave --table 21").exit_code == 2);
}

TEST_CASE("logconcave scan mode") {
    const auto result = run_cli("logconcave --parts 2 2 --range 1 3 --format csv");
    REQUIRE(result.exit_code == 0);
    CHECK(result.out == "j,delta\n1,-1\n2,3\n3,-1\n");

    CHECK(run_cli("logconcave --parts 2 2 --range 0 3").exit_code == 2);
    CHECK(run_cli("logconcave --parts 2 2").exit_code == 2);
    CHECK(run_cli("logconcave").exit_code == 2);
    CHECK(run_cli("logconcave --table 4 --parts 2 2 --range 1 3").exit_code == 2);
}

TEST_CASE("cf evaluates the normalized generating function modulus") {
    const auto at_zero = run_cli("cf 3 2 --theta 0");
    REQUIRE(at_zero.exit_code == 0);
    CHECK(json::parse(at_zero.out)["modulus"].get<double>() == Catch::Approx(1.0));

    // F_{n1,1}(-1) = 1/N for even n1
    const auto at_pi = run_cli("cf 4 1 --theta 3.14159265358979312");
    REQUIRE(at_pi.exit_code == 0);
    CHECK(json::parse(at_pi.out)["modulus"].get<double>() == Catch::Approx(0.2).margin(1e-9));
}

TEST_CASE("verify scopes pass and print one line per property") {
    const auto table = run_cli("verify table");
    REQUIRE(table.exit_code == 0);
    CHECK(table.out.find("PASS") != std::string::npos);
    CHECK(table.out.find("FAIL") == std::string::npos);

    const auto moments = run_cli("verify moments");
    REQUIRE(moments.exit_code == 0);
    CHECK(moments.out.find("FAIL") == std::string::npos);

    CHECK(run_cli("verify nonsense").exit_code == 2);
    CHECK(run_cli("verify").exit_code == 2);
}

TEST_CASE("help exits zero") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("dist --help").exit_code == 0);
}

TEST_CASE("output files are written, unwritable paths exit 3") {
    const auto path = std::filesystem::temp_directory_path() / "mahonian_cli_test_dist.json";
    const auto result = run_cli("dist 2 2 --out " + path.string());
    REQUIRE(result.exit_code == 0);
    std::ifstream file(path);
    REQUIRE(file.good());
    json j;
    file >> j;
    CHECK(j["total"] == "6");
    std::filesystem::remove(path);

    CHECK(run_cli("dist 2 2 --out /nonexistent-dir/out.json").exit_code == 3);
}
