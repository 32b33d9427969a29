#include <doctest.h>

#include "compare.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "ivqrof/error.hpp"
#include "ivqrof/fuzzy_core.hpp"
#include "oracle.hpp"

using namespace ivqrof;
using fixtures::n4;

TEST_CASE("classic operations agree with the high-precision oracle") {
  gen::Source src(11);
  for (int it = 0; it < 2000; ++it) {
    const double q = src.rung();
    const RungContext ctx{q};
    const auto a = src.number(q);
    const auto b = src.number(q);
    const double l = src.uniform(0.05, 4.0);
    const oracle::real oq(q), ol(l);
    const auto oa = oracle::from(a), ob = oracle::from(b);
    CHECK(max_diff(add(a, b, ctx), oracle::add(oa, ob, oq)) < 1e-12);
    CHECK(max_diff(mul(a, b, ctx), oracle::mul(oa, ob, oq)) < 1e-12);
    CHECK(max_diff(scale(l, a, ctx), oracle::scale(ol, oa, oq)) < 1e-12);
    CHECK(max_diff(power(a, l, ctx), oracle::power(oa, ol, oq)) < 1e-12);
    CHECK(max_diff(sub(a, b, ctx), oracle::sub(oa, ob, oq)) < 1e-12);
    CHECK(max_diff(div(a, b, ctx), oracle::div(oa, ob, oq)) < 1e-12);
  }
}

TEST_CASE("frozen values of the classic operations at q = 3") {
  const RungContext ctx{3.0};
  const auto a = n4(0.5, 0.6, 0.2, 0.3);
  const auto b = n4(0.4, 0.7, 0.1, 0.2);
  const auto s = add(a, b, ctx);
  CHECK(s.mu.lo == doctest::Approx(0.5656652825822911).epsilon(1e-14));
  CHECK(s.mu.hi == doctest::Approx(0.78563527895073848).epsilon(1e-14));
  CHECK(s.nu.lo == doctest::Approx(0.02).epsilon(1e-14));
  CHECK(s.nu.hi == doctest::Approx(0.06).epsilon(1e-14));
  const auto d = sub(a, b, ctx);
  CHECK(d.mu.lo == doctest::Approx(0.05).epsilon(1e-14));
  CHECK(d.mu.hi == doctest::Approx(0.12).epsilon(1e-14));
  CHECK(d.nu.lo == doctest::Approx(0.41502830406461094).epsilon(1e-14));
  CHECK(d.nu.hi == doctest::Approx(0.71186509563777711).epsilon(1e-14));
}

TEST_CASE("every classic operation is closed over valid numbers") {
  gen::Source src(12);
  for (int it = 0; it < 5000; ++it) {
    const double q = src.rung();
    const RungContext ctx{q};
    const auto a = src.number(q);
    const auto b = src.number(q);
    const double l = src.uniform(0.01, 10.0);
    CHECK(is_valid(add(a, b, ctx), ctx));
    CHECK(is_valid(mul(a, b, ctx), ctx));
    CHECK(is_valid(scale(l, a, ctx), ctx));
    CHECK(is_valid(power(a, l, ctx), ctx));
    CHECK(is_valid(sub(a, b, ctx), ctx));
    CHECK(is_valid(div(a, b, ctx), ctx));
    const auto h = hesitancy(a, ctx);
    CHECK(h.lo <= h.hi + 1e-12);
    CHECK(h.lo >= 0.0);
    CHECK(h.hi <= 1.0);
  }
}

TEST_CASE("classic algebra laws hold on random instances") {
  gen::Source src(13);
  for (int it = 0; it < 2000; ++it) {
    const double q = src.rung();
    const RungContext ctx{q};
    const auto a = src.interior(q);
    const auto b = src.interior(q);
    const auto c = src.interior(q);
    const double l1 = src.uniform(0.1, 3.0), l2 = src.uniform(0.1, 3.0);
    CHECK(add(a, b, ctx) == add(b, a, ctx));
    CHECK(mul(a, b, ctx) == mul(b, a, ctx));
    CHECK(max_diff(add(add(a, b, ctx), c, ctx), add(a, add(b, c, ctx), ctx)) < 1e-12);
    CHECK(max_diff(mul(mul(a, b, ctx), c, ctx), mul(a, mul(b, c, ctx), ctx)) < 1e-12);
    CHECK(max_diff(scale(l1, add(a, b, ctx), ctx), add(scale(l1, a, ctx), scale(l1, b, ctx), ctx)) < 1e-12);
    CHECK(max_diff(scale(l1 + l2, a, ctx), add(scale(l1, a, ctx), scale(l2, a, ctx), ctx)) < 1e-12);
    CHECK(max_diff(power(mul(a, b, ctx), l1, ctx), mul(power(a, l1, ctx), power(b, l1, ctx), ctx)) < 1e-12);
    CHECK(max_diff(power(a, l1 + l2, ctx), mul(power(a, l1, ctx), power(a, l2, ctx), ctx)) < 1e-12);
    CHECK(max_diff(scale(1.0, a, ctx), a) < 1e-12);
    CHECK(max_diff(power(a, 1.0, ctx), a) < 1e-12);
    // complement duality between the sum and the product
    CHECK(max_diff(complement(add(a, b, ctx)), mul(complement(a), complement(b), ctx)) < 1e-15);
  }
}

TEST_CASE("ideals act as identities and absorbers") {
  const RungContext ctx{3.0};
  const auto a = n4(0.3, 0.6, 0.2, 0.5);
  CHECK(max_diff(add(a, negative_ideal, ctx), n4(0.3, 0.6, 0.2, 0.5)) < 1e-15);
  CHECK(max_diff(mul(a, positive_ideal, ctx), a) < 1e-15);
  CHECK(max_diff(add(a, positive_ideal, ctx), positive_ideal) < 1e-15);
}

TEST_CASE("operations reject bad inputs") {
  const RungContext ctx{3.0};
  const auto a = n4(0.3, 0.6, 0.2, 0.5);
  CHECK_THROWS_AS(scale(0.0, a, ctx), domain_error);
  CHECK_THROWS_AS(scale(-1.0, a, ctx), domain_error);
  CHECK_THROWS_AS(power(a, std::nan(""), ctx), domain_error);
  CHECK_THROWS_AS(add(a, n4(0.6, 0.3, 0.2, 0.5), ctx), validity_error);
  CHECK_THROWS_AS(add(a, n4(0.9, 0.95, 0.8, 0.9), ctx), validity_error);
  CHECK_THROWS_AS(add(a, a, RungContext{0.5}), parameter_error);
  CHECK_THROWS_AS(sum({}, ctx), domain_error);
}

TEST_CASE("sum folds left to right") {
  gen::Source src(14);
  const RungContext ctx{3.0};
  const auto xs = src.numbers(6, 3.0);
  auto acc = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) acc = add(acc, xs[i], ctx);
  CHECK(sum(xs, ctx) == acc);
}

TEST_CASE("infer_q returns the least feasible integer rung") {
  CHECK(infer_q(std::vector<IVqROFN>{negative_ideal}) == 1);
  CHECK(infer_q(std::vector<IVqROFN>{n4(0.5, 0.6, 0.3, 0.4)}) == 1);
  // 0.9^2 + 0.5^2 = 1.06, 0.9^3 + 0.5^3 = 0.854
  CHECK(infer_q(std::vector<IVqROFN>{n4(0.8, 0.9, 0.4, 0.5)}) == 3);
  CHECK(infer_q(std::vector<IVqROFN>{n4(0.99, 0.99, 0.99, 0.99)}) == 69);
  CHECK_THROWS_AS(infer_q(std::vector<IVqROFN>{n4(1.0, 1.0, 0.1, 0.1)}), infeasible_error);
  CHECK_THROWS_AS(infer_q(std::vector<IVqROFN>{n4(0.6, 0.5, 0.1, 0.1)}), validity_error);
  CHECK_THROWS_AS(infer_q(std::vector<IVqROFN>{}), domain_error);
}

TEST_CASE("infer_q on the bundled case study") {
  const auto g = fixtures::case_study();
  CHECK(infer_q(g.experts) == 2);
}

TEST_CASE("inferred rung is minimal and sufficient on random data") {
  gen::Source src(15);
  for (int it = 0; it < 500; ++it) {
    std::vector<IVqROFN> xs;
    for (int i = 0; i < 5; ++i) {
      const double uh = src.uniform(0.0, 0.999), vh = src.uniform(0.0, 0.999);
      xs.push_back(n4(src.uniform(0.0, uh), uh, src.uniform(0.0, vh), vh));
    }
    const int q = infer_q(xs);
    for (const auto& x : xs) CHECK_FALSE(violation(x, q));
    if (q > 1) {
      bool some_fails = false;
      for (const auto& x : xs) some_fails = some_fails || violation(x, q - 1).has_value();
      CHECK(some_fails);
    }
  }
}
