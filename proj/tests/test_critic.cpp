#include <doctest.h>

#include <cmath>

#include "compare.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "ivqrof/critic.hpp"
#include "ivqrof/error.hpp"
#include "ivqrof/fuzzy_core.hpp"
#include "ivqrof/pipeline.hpp"
#include "ivqrof/rounding.hpp"
#include "oracle.hpp"

using namespace ivqrof;
using fixtures::n4;

namespace {

DecisionMatrix case_study_aggregate() {
  const auto g = fixtures::case_study();
  const RungContext ctx{3.0, 2.0};
  DMWeightOptions opts;
  opts.similarity_decimals = 2;
  return aggregate_experts(g.experts, dm_weight_matrix(g.experts, ctx, opts), ctx);
}

}  // namespace

TEST_CASE("column means of the standardized case-study matrix") {
  const RungContext ctx{3.0, 2.0};
  const auto x = standardize(case_study_aggregate(), ctx);
  const IVqROFN printed[5] = {n4(0.68, 0.81, 0.21, 0.32), n4(0.52, 0.65, 0.22, 0.34), n4(0.58, 0.69, 0.24, 0.36),
                              n4(0.51, 0.62, 0.21, 0.32), n4(0.50, 0.62, 0.16, 0.27)};
  for (std::size_t j = 0; j < 5; ++j) CHECK(max_diff(column_mean(x, j, ctx), printed[j]) <= 0.01);
}

TEST_CASE("interval weights and real weights agree with the high-precision oracle") {
  const auto g = fixtures::case_study();
  const auto run = oracle::run(fixtures::nested(g), 3, 2, oracle::real(0.5), oracle::real(0.5));
  const RungContext ctx{3.0, 2.0};
  const auto r = aggregate_experts(g.experts, dm_weight_matrix(g.experts, ctx), ctx);
  const auto w = interval_weights(r, ctx);
  const auto omega = realize_weights(w, DistanceMode::nis, {}, ctx);
  for (std::size_t j = 0; j < 5; ++j) {
    CHECK(max_diff(w[j], run.interval_weights[j]) < 1e-12);
    CHECK(max_diff(omega[j], run.omega[j]) < 1e-12);
  }
  CHECK(w[0].mu.lo == doctest::Approx(0.056423908362055672).epsilon(1e-11));
  CHECK(w[0].mu.hi == doctest::Approx(0.15713379217739196).epsilon(1e-11));
  CHECK(w[0].nu.lo == doctest::Approx(0.0015947470973766854).epsilon(1e-11));
  CHECK(w[0].nu.hi == doctest::Approx(0.024423855113683141).epsilon(1e-11));
  CHECK(omega[0] == doctest::Approx(0.20000074480155178).epsilon(1e-12));
}

TEST_CASE("standardization handles cost attributes and degenerate columns") {
  const RungContext ctx{3.0, 2.0};
  const auto hi = n4(0.8, 0.9, 0.1, 0.2), mid = n4(0.5, 0.6, 0.3, 0.4), lo = n4(0.2, 0.3, 0.6, 0.7);
  const DecisionMatrix a(make_matrix({{hi, mid, mid}, {mid, hi, mid}, {lo, lo, mid}}),
                         {Polarity::benefit, Polarity::cost, Polarity::benefit});
  AuditLog audit;
  const auto x = standardize(a, ctx, &audit);
  const auto range0 = sub(hi, lo, ctx);
  CHECK(x(0, 0) == div(sub(hi, lo, ctx), range0, ctx));
  CHECK(x(2, 0) == div(sub(lo, lo, ctx), range0, ctx));
  CHECK(x(1, 1) == div(sub(hi, hi, ctx), sub(hi, lo, ctx), ctx));
  CHECK(x(2, 1) == div(sub(hi, lo, ctx), sub(hi, lo, ctx), ctx));
  CHECK(x(0, 2) == mid);
  REQUIRE(audit.entries.size() == 1);
  CHECK(audit.entries[0].kind == "degenerate_column");
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(is_valid(x(i, j), ctx));
  }
}

TEST_CASE("CRITIC stages are closed and thread-count independent") {
  gen::Source src(61);
  for (int it = 0; it < 50; ++it) {
    const double q = src.uniform(1.5, 5.0);
    const RungContext ctx{q, src.uniform(1.0, 4.0)};
    const auto m = static_cast<std::size_t>(src.integer(2, 6));
    const auto n = static_cast<std::size_t>(src.integer(1, 6));
    const auto x = standardize(src.matrix(m, n, q), ctx);
    const auto one = critic(x, ctx, 1);
    const auto many = critic(x, ctx, 3);
    CHECK(one == many);
    for (const auto& w : one.weights) CHECK(is_valid(w, ctx));
    for (const auto& s : one.stddev) CHECK(is_valid(s, ctx));
    CHECK(one.correlation.rows() == n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) CHECK(one.correlation(j, k) == one.correlation(k, j));
    }
  }
}

TEST_CASE("statistic helpers match the report") {
  gen::Source src(62);
  const RungContext ctx{3.0, 2.0};
  const auto x = standardize(src.matrix(4, 3, 3.0), ctx);
  const auto rep = critic(x, ctx);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(column_mean(x, j, ctx) == rep.means[j]);
    CHECK(column_stddev(x, j, ctx) == rep.stddev[j]);
    CHECK(attribute_index(rep.stddev[j], rep.correlation.row(j), ctx) == rep.index[j]);
    for (std::size_t k = 0; k < 3; ++k) CHECK(correlation(x, j, k, ctx) == rep.correlation(j, k));
  }
}

TEST_CASE("distance modes for realizing weights") {
  gen::Source src(63);
  const RungContext ctx{3.0, 2.0};
  const auto w = src.numbers(5, 3.0);
  const auto dn = weight_distances(w, DistanceMode::nis, {}, ctx);
  const auto dp = weight_distances(w, DistanceMode::pis, {}, ctx);
  const auto dc = weight_distances(w, DistanceMode::cis, {0.5}, ctx);
  for (std::size_t j = 0; j < 5; ++j) {
    CHECK(dp[j] == doctest::Approx(dn[j]).epsilon(1e-14));
    CHECK(dc[j] == doctest::Approx(0.5).epsilon(1e-14));
  }
  for (auto mode : {DistanceMode::nis, DistanceMode::pis, DistanceMode::cis}) {
    const auto omega = realize_weights(w, mode, {0.3}, ctx);
    double total = 0.0;
    for (double x : omega.values()) total += x;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(to_string(DistanceMode::cis) == "cis");
}

TEST_CASE("all-zero distances fall back to equal weights") {
  const RungContext ctx{3.0, 2.0};
  AuditLog audit;
  const auto omega = realize_weights({negative_ideal, negative_ideal}, DistanceMode::nis, {}, ctx, &audit);
  CHECK(omega[0] == 0.5);
  REQUIRE(audit.entries.size() == 1);
  CHECK(audit.entries[0].kind == "uniform_fallback");
}

TEST_CASE("CRITIC input checks") {
  const RungContext ctx{3.0, 2.0};
  const DecisionMatrix one_row(make_matrix({{positive_ideal, negative_ideal}}));
  CHECK_THROWS_AS(standardize(one_row, ctx), domain_error);
  CHECK_THROWS_AS(critic(one_row, ctx), domain_error);
  CHECK_THROWS_AS(realize_weights({}, DistanceMode::nis, {}, ctx), domain_error);
  gen::Source src(64);
  CHECK_THROWS_AS(column_mean(src.matrix(3, 2, 3.0), 5, ctx), shape_error);
}
