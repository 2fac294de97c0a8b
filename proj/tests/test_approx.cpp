#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "mahonian/approx.hpp"
#include "mahonian/distribution.hpp"
#include "mahonian/verify.hpp"

using mahonian::BigInt;
using mahonian::MahonianDistribution;

TEST_CASE("gaussian density approximation") {
    const auto d = MahonianDistribution::build({2, 2});
    const double sigma = std::sqrt(mahonian::to_double(d.sigma2()));
    CHECK(mahonian::gaussian_pmf(d, 2) ==
          Catch::Approx(1.0 / (std::sqrt(2.0 * std::numbers::pi) * sigma)));

    const auto big = MahonianDistribution::build({20, 20});
    CHECK(mahonian::gaussian_pmf(big, 150) == Catch::Approx(mahonian::gaussian_pmf(big, 250)));

    // at the mean the density is within ~1/Abar of the exact pmf
    const double exact = big.pmf_real(200);
    CHECK(std::abs(mahonian::gaussian_pmf(big, 200) / exact - 1.0) < 0.05);

    CHECK_THROWS_AS(mahonian::gaussian_pmf(MahonianDistribution::build({5}), 0), std::domain_error);
}

TEST_CASE("edgeworth refinement beats the plain gaussian at the center") {
    const auto d = MahonianDistribution::build({20, 20});
    const double exact = d.pmf_real(200);
    const double gauss_err = std::abs(mahonian::gaussian_pmf(d, 200) - exact);
    const double edge_err = std::abs(mahonian::edgeworth_pmf(d, 200) - exact);
    CHECK(edge_err < gauss_err);

    CHECK_THROWS_AS(mahonian::edgeworth_pmf(MahonianDistribution::build({3}), 0), std::domain_error);
}

TEST_CASE("edgeworth sup-error within three sigma of the mean") {
    for (std::int64_t n : {20, 40}) {
        const auto d = MahonianDistribution::build({n, n});
        const mahonian::EdgeworthExpansion expansion(d);
        const double mu = mahonian::to_double(d.mu());
        const double sigma = std::sqrt(mahonian::to_double(d.sigma2()));
        double gauss_sup = 0.0, edge_sup = 0.0;
        for (std::int64_t k = static_cast<std::int64_t>(std::ceil(mu - 3 * sigma));
             k <= static_cast<std::int64_t>(std::floor(mu + 3 * sigma)); ++k) {
            const double exact = d.pmf_real(k);
            gauss_sup = std::max(gauss_sup, std::abs(mahonian::gaussian_pmf(d, k) - exact));
            edge_sup = std::max(edge_sup, std::abs(expansion.pmf(k) - exact));
        }
        REQUIRE(edge_sup <= gauss_sup);
    }
}

TEST_CASE("edgeworth on tiny compositions is defined but carries no accuracy contract") {
    const auto coin = MahonianDistribution::build({1, 1});
    const double value = mahonian::edgeworth_pmf(coin, 0);
    CHECK(std::isfinite(value));
}

TEST_CASE("equal-part compositions are platykurtic") {
    for (std::int64_t n = 1; n <= 20; ++n) {
        const mahonian::EdgeworthExpansion e(MahonianDistribution::build({n, n}));
        REQUIRE(e.kappa4() < 0);
    }
}

TEST_CASE("local limit report on the uniform case") {
    // (n,1) has all-ones coefficients: exactly uniform on {0..n}
    const auto d = MahonianDistribution::build({30, 1});
    for (std::int64_t k = 0; k <= d.support_max(); ++k) {
        REQUIRE(d.coeffs().coeff(k) == 1);
    }
    // Abar stays at 1, so the uniform-vs-gaussian gap does not vanish
    const auto report = mahonian::local_limit_report(d);
    CHECK(report.sup_abs_error > 0.01);
    CHECK(report.kolmogorov > 0.01);
}

TEST_CASE("normal convergence diagnostics along (n,n)") {
    const auto r10 = mahonian::local_limit_report(MahonianDistribution::build({10, 10}));
    const auto r20 = mahonian::local_limit_report(MahonianDistribution::build({20, 20}));
    const auto r40 = mahonian::local_limit_report(MahonianDistribution::build({40, 40}));

    CHECK(r10.kolmogorov > r20.kolmogorov);
    CHECK(r20.kolmogorov > r40.kolmogorov);
    CHECK(r10.kolmogorov <= 1.0);

    const double lo = std::min({r10.scaled_llt_error, r20.scaled_llt_error, r40.scaled_llt_error});
    const double hi = std::max({r10.scaled_llt_error, r20.scaled_llt_error, r40.scaled_llt_error});
    CHECK(hi / lo < 3.0);

    CHECK_THROWS_AS(mahonian::local_limit_report(MahonianDistribution::build({7})), std::domain_error);
}

TEST_CASE("per-k table and continuity correction options") {
    const auto d = MahonianDistribution::build({20, 20});
    mahonian::LocalLimitOptions options;
    options.include_per_k = true;
    const auto report = mahonian::local_limit_report(d, options);
    REQUIRE(report.per_k.has_value());
    REQUIRE(report.per_k->size() == static_cast<std::size_t>(d.support_max()) + 1);
    CHECK((*report.per_k)[200].pmf_exact == Catch::Approx(d.pmf_real(200)));

    mahonian::LocalLimitOptions corrected;
    corrected.continuity_correction = true;
    CHECK(mahonian::local_limit_report(d, corrected).kolmogorov < report.kolmogorov);
}

TEST_CASE("log-concavity scan") {
    const auto d = MahonianDistribution::build({2, 2});
    // from [1,1,2,1,1]: 1-2, 4-1, 1-2
    const auto records = mahonian::logconcavity_scan(d, 1, 3);
    REQUIRE(records.size() == 3);
    CHECK(records[0].delta == -1);
    CHECK(records[1].delta == 3);
    CHECK(records[2].delta == -1);
    CHECK(records[0].j == 1);

    // 1 + q + 2q^2 + ... is never log-concave at j = 1 when both parts >= 2
    for (std::int64_t n1 : {2, 3, 7}) {
        for (std::int64_t n2 : {2, 5}) {
            const auto scan = mahonian::logconcavity_scan(MahonianDistribution::build({n1, n2}), 1, 1);
            REQUIRE(scan[0].delta == -1);
        }
    }

    CHECK_THROWS_AS(mahonian::logconcavity_scan(d, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(mahonian::logconcavity_scan(d, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(mahonian::logconcavity_scan(d, 3, 1), std::invalid_argument);
}

TEST_CASE("central log-concavity table") {
    const auto rows = mahonian::central_delta_table(20);
    const auto& expected = mahonian::reference_table_values();
    REQUIRE(rows.size() == expected.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        REQUIRE(rows[i].n == expected[i].first);
        REQUIRE(rows[i].j == rows[i].n * rows[i].n / 2 - 1);
        REQUIRE(rows[i].delta == BigInt(expected[i].second));
    }

    CHECK_THROWS_AS(mahonian::central_delta_table(21), std::invalid_argument);
    CHECK_THROWS_AS(mahonian::central_delta_table(0), std::invalid_argument);
}

TEST_CASE("log-concavity holds through the central window") {
    for (std::int64_t n : {12, 16}) {
        const auto d = MahonianDistribution::build({n, n});
        const double mu = mahonian::to_double(d.mu());
        const double sigma = std::sqrt(mahonian::to_double(d.sigma2()));
        const auto jlo = static_cast<std::int64_t>(std::ceil(mu - sigma));
        const auto jhi = static_cast<std::int64_t>(std::floor(mu + sigma));
        for (const auto& rec : mahonian::logconcavity_scan(d, jlo, jhi)) {
            REQUIRE(rec.delta > 0);
        }
    }
}

TEST_CASE("asymptotic size of the table entries") {
    const auto rows = mahonian::central_delta_table(20);
    const double exact20 = mahonian::to_double(rows.back().delta);
    const double predicted = mahonian::logconcavity_asymptotic(20);
    CHECK(predicted / exact20 > 1.0 / 1.5);
    CHECK(predicted / exact20 < 1.5);

    // useless at tiny n: positive while the exact delta is -1
    CHECK(mahonian::logconcavity_asymptotic(2) > 0.0);

    // increasing once 4 ln 2 > 7/n, i.e. from n = 3 on
    for (std::int64_t n = 3; n < 30; ++n) {
        REQUIRE(mahonian::logconcavity_asymptotic(n + 1) > mahonian::logconcavity_asymptotic(n));
    }

    CHECK_THROWS_AS(mahonian::logconcavity_asymptotic(0), std::invalid_argument);
}

TEST_CASE("irwin-hall cdf") {
    CHECK(mahonian::irwin_hall_cdf(-0.5, 2) == 0.0);
    CHECK(mahonian::irwin_hall_cdf(2.5, 2) == 1.0);
    CHECK(mahonian::irwin_hall_cdf(1.0, 2) == Catch::Approx(0.5));
    CHECK(mahonian::irwin_hall_cdf(0.5, 1) == Catch::Approx(0.5));
    CHECK(mahonian::irwin_hall_cdf(0.5, 2) == Catch::Approx(0.125));
    CHECK(mahonian::irwin_hall_cdf(1.5, 2) == Catch::Approx(0.875));
    CHECK_THROWS_AS(mahonian::irwin_hall_cdf(0.5, 0), std::invalid_argument);
}

TEST_CASE("fixed-Abar comparison against sums of uniforms") {
    // (n,1) against a single uniform: the distance is exactly 1/(n+1)
    const double d50 = mahonian::irwin_hall_compare(MahonianDistribution::build({50, 1}));
    const double d200 = mahonian::irwin_hall_compare(MahonianDistribution::build({200, 1}));
    CHECK(d50 == Catch::Approx(1.0 / 51));
    CHECK(d200 == Catch::Approx(1.0 / 201));
    CHECK(d200 < d50);

    const double d_two = mahonian::irwin_hall_compare(MahonianDistribution::build({100, 1, 1}));
    CHECK(d_two < 0.05);

    // the inversions among the non-max letters are dropped by the limit,
    // so the distance is small but genuinely nonzero
    const double d_pair = mahonian::irwin_hall_compare(MahonianDistribution::build({100, 2}));
    CHECK(d_pair < 0.05);
    CHECK(d_pair > 1e-4);

    CHECK_THROWS_AS(mahonian::irwin_hall_compare(MahonianDistribution::build({9})), std::domain_error);

    mahonian::IrwinHallOptions half;
    half.half_step = true;
    const double d_half = mahonian::irwin_hall_compare(MahonianDistribution::build({50, 1}), half);
    CHECK(d_half >= 0.0);
    CHECK(d_half < 1.0);
}
