#include "ivqrof/yager.hpp"

#include <algorithm>
#include <cmath>

#include "ivqrof/error.hpp"

namespace ivqrof {

namespace {

void check_inputs(const RungContext& ctx, const IVqROFN& a) {
  ctx.check();
  require_valid(a, ctx);
}

void check_delta(double delta, const char* op) {
  if (!std::isfinite(delta) || delta <= 0.0) {
    throw domain_error(std::string(op) + ": delta must be a finite real > 0, got " +
                       std::to_string(delta));
  }
}

double sat(double x) { return std::min(1.0, x); }

// membership side of the Yager sum: min{1, (x1^{qp} + x2^{qp})^{1/p}}^{1/q}
double conorm(double x1, double x2, const RungContext& ctx) {
  const double qp = ctx.q * ctx.p;
  return detail::root(sat(std::pow(std::pow(x1, qp) + std::pow(x2, qp), 1.0 / ctx.p)), ctx);
}

// 1 - min{1, S^{1/p}} for S = (1-y1^q)^p + (1-y2^q)^p. A sum near 1 is
// taken as its offset from 1, carried by the term with the smaller y.
double tnorm_radicand(double y1, double y2, const RungContext& ctx) {
  const double lo = std::min(y1, y2);
  const double hi = std::max(y1, y2);
  const double t_hi = std::pow(1.0 - std::pow(hi, ctx.q), ctx.p);
  const double t_lo = std::pow(1.0 - std::pow(lo, ctx.q), ctx.p);
  const double s = t_lo + t_hi;
  const double log_s =
      s < 0.5 ? std::log(s) : std::log1p(std::expm1(ctx.p * std::log1p(-std::pow(lo, ctx.q))) + t_hi);
  return log_s >= 0.0 ? 0.0 : -std::expm1(log_s / ctx.p);
}

// non-membership side: (1 - min{1, ((1-y1^q)^p + (1-y2^q)^p)^{1/p}})^{1/q}
double tnorm(double y1, double y2, const RungContext& ctx) { return detail::root(tnorm_radicand(y1, y2, ctx), ctx); }

double conorm_scaled(double x, double delta, const RungContext& ctx) {
  return detail::root(sat(std::pow(delta * std::pow(x, ctx.q * ctx.p), 1.0 / ctx.p)), ctx);
}

// 1 - min{1, c (1 - y^q)} with c = delta^{1/p}; for c <= 1 it is summed
// as (1 - c) + c y^q
double tnorm_scaled(double y, double delta, const RungContext& ctx) {
  const double c = std::pow(delta, 1.0 / ctx.p);
  const double yq = std::pow(y, ctx.q);
  const double r = c <= 1.0 ? -std::expm1(std::log(delta) / ctx.p) + c * yq : 1.0 - c * (1.0 - yq);
  return detail::root(std::max(0.0, r), ctx);
}

}  // namespace

IVqROFN yager_add(const IVqROFN& a1, const IVqROFN& a2, const RungContext& ctx) {
  check_inputs(ctx, a1);
  require_valid(a2, ctx);
  return {{conorm(a1.mu.lo, a2.mu.lo, ctx), conorm(a1.mu.hi, a2.mu.hi, ctx)},
          {tnorm(a1.nu.lo, a2.nu.lo, ctx), tnorm(a1.nu.hi, a2.nu.hi, ctx)}};
}

IVqROFN yager_mul(const IVqROFN& a1, const IVqROFN& a2, const RungContext& ctx) {
  check_inputs(ctx, a1);
  require_valid(a2, ctx);
  return {{tnorm(a1.mu.lo, a2.mu.lo, ctx), tnorm(a1.mu.hi, a2.mu.hi, ctx)},
          {conorm(a1.nu.lo, a2.nu.lo, ctx), conorm(a1.nu.hi, a2.nu.hi, ctx)}};
}

IVqROFN yager_scale(double delta, const IVqROFN& a, const RungContext& ctx) {
  check_delta(delta, "yager_scale");
  check_inputs(ctx, a);
  return {{conorm_scaled(a.mu.lo, delta, ctx), conorm_scaled(a.mu.hi, delta, ctx)},
          {tnorm_scaled(a.nu.lo, delta, ctx), tnorm_scaled(a.nu.hi, delta, ctx)}};
}

IVqROFN yager_power(const IVqROFN& a, double delta, const RungContext& ctx) {
  check_delta(delta, "yager_power");
  check_inputs(ctx, a);
  return {{tnorm_scaled(a.mu.lo, delta, ctx), tnorm_scaled(a.mu.hi, delta, ctx)},
          {conorm_scaled(a.nu.lo, delta, ctx), conorm_scaled(a.nu.hi, delta, ctx)}};
}

}  // namespace ivqrof
