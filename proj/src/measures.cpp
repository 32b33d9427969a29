#include "ivqrof/measures.hpp"

#include <cmath>

#include "ivqrof/error.hpp"

namespace ivqrof {

void ScoreParams::check() const {
  if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta) ||
      std::fabs(alpha + beta - 1.0) > 1e-12) {
    throw parameter_error("score weights need alpha > 0, beta > 0, alpha + beta = 1; got alpha = " +
                          std::to_string(alpha) + ", beta = " + std::to_string(beta));
  }
}

void CISParams::check() const {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw parameter_error("theta must lie in [0,1], got " + std::to_string(theta));
  }
}

namespace {

void check_range(const IVqROFN& a, const RungContext& ctx) {
  if (auto why = range_violation(a, ctx.eps.valid)) {
    throw validity_error("invalid interval pair " + format(a) + ": " + *why);
  }
}

double end_gap(double u1, double u2, double v1, double v2, double q) {
  return std::fabs(std::pow(u1, q) - std::pow(u2, q) - (std::pow(v1, q) - std::pow(v2, q)));
}

}  // namespace

double distance(const IVqROFN& a1, const IVqROFN& a2, const RungContext& ctx) {
  ctx.check();
  check_range(a1, ctx);
  check_range(a2, ctx);
  const double q = ctx.q;
  return 0.25 * (end_gap(a1.mu.lo, a2.mu.lo, a1.nu.lo, a2.nu.lo, q) +
                 end_gap(a1.mu.hi, a2.mu.hi, a1.nu.hi, a2.nu.hi, q));
}

double nis(const IVqROFN& a, const RungContext& ctx) { return distance(a, negative_ideal, ctx); }

double pis(const IVqROFN& a, const RungContext& ctx) { return distance(a, positive_ideal, ctx); }

double cis(const IVqROFN& a, const CISParams& params, const RungContext& ctx) {
  params.check();
  return params.theta * pis(a, ctx) + (1.0 - params.theta) * nis(a, ctx);
}

namespace detail {

double score_weighted(const IVqROFN& a, double alpha, double beta, double q) {
  const double r = 1.0 / q;
  const double lower = std::pow(a.mu.lo, r) + std::pow(1.0 - a.nu.lo, r);
  const double upper = std::pow(a.mu.hi, r) + std::pow(1.0 - a.nu.hi, r);
  return 0.5 * (alpha * lower + beta * upper);
}

}  // namespace detail

double score(const IVqROFN& a, const ScoreParams& params, const RungContext& ctx) {
  ctx.check();
  if (!(ctx.q > 1.0)) {
    throw parameter_error("the score function requires q > 1, got q = " + std::to_string(ctx.q));
  }
  params.check();
  require_valid(a, ctx);
  return detail::score_weighted(a, params.alpha, params.beta, ctx.q);
}

std::weak_ordering compare(const IVqROFN& a1, const IVqROFN& a2, const ScoreParams& params,
                           const RungContext& ctx) {
  const double s1 = score(a1, params, ctx);
  const double s2 = score(a2, params, ctx);
  if (s1 < s2) return std::weak_ordering::less;
  if (s1 > s2) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

namespace diagnostics {

double score_cheng(const IVqROFN& a) {
  return 0.5 * (a.mu.lo - a.nu.lo + a.mu.hi - a.nu.hi) + 1.0;
}

double score_bai(const IVqROFN& a) {
  return 0.5 * (a.mu.lo + a.mu.hi + a.mu.lo * (1.0 - a.mu.lo - a.nu.lo) +
                a.mu.hi * (1.0 - a.mu.hi - a.nu.hi));
}

double score_gongma(const IVqROFN& a) {
  const double den = a.nu.hi + a.nu.lo + a.mu.hi + a.mu.lo;
  if (den == 0.0) throw domain_error("score_gongma: all four bounds are zero");
  return 0.5 * (a.nu.hi + a.nu.lo - a.mu.hi - a.mu.lo) +
         (a.mu.hi + a.mu.lo + 2.0 * (a.mu.hi * a.mu.lo - a.nu.hi * a.nu.lo)) / den;
}

}  // namespace diagnostics

}  // namespace ivqrof
