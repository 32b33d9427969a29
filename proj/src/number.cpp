#include "ivqrof/number.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "ivqrof/error.hpp"

namespace ivqrof {

void RungContext::check() const {
  if (!std::isfinite(q) || q < 1.0) {
    throw parameter_error("rung q must be a finite real >= 1, got " + std::to_string(q));
  }
  if (!std::isfinite(p) || p < 1.0) {
    throw parameter_error("Yager parameter p must be a finite real >= 1, got " + std::to_string(p));
  }
  if (!(eps.valid >= 0.0) || !(eps.clamp >= 0.0)) {
    throw parameter_error("epsilon policy values must be >= 0");
  }
}

namespace {

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

std::optional<std::string> range_violation(const IVqROFN& a, double eps_valid) {
  const double c[4] = {a.mu.lo, a.mu.hi, a.nu.lo, a.nu.hi};
  const char* names[4] = {"mu_lo", "mu_hi", "nu_lo", "nu_hi"};
  for (int i = 0; i < 4; ++i) {
    if (!std::isfinite(c[i])) return std::string(names[i]) + " is not a finite number";
    if (c[i] < 0.0 || c[i] > 1.0) {
      return std::string(names[i]) + " = " + fmt(c[i]) + " is outside [0,1]";
    }
  }
  if (a.mu.lo > a.mu.hi + eps_valid) {
    return "mu_lo = " + fmt(a.mu.lo) + " > mu_hi = " + fmt(a.mu.hi);
  }
  if (a.nu.lo > a.nu.hi + eps_valid) {
    return "nu_lo = " + fmt(a.nu.lo) + " > nu_hi = " + fmt(a.nu.hi);
  }
  return std::nullopt;
}

std::optional<std::string> violation(const IVqROFN& a, double q, double eps_valid) {
  if (auto why = range_violation(a, eps_valid)) return why;
  const double s = std::pow(a.mu.hi, q) + std::pow(a.nu.hi, q);
  if (s > 1.0 + eps_valid) {
    return "mu_hi^q + nu_hi^q = " + fmt(s) + " > 1 at q = " + fmt(q);
  }
  return std::nullopt;
}

bool is_valid(const IVqROFN& a, const RungContext& ctx) {
  return !violation(a, ctx.q, ctx.eps.valid).has_value();
}

void require_valid(const IVqROFN& a, const RungContext& ctx) {
  if (auto why = violation(a, ctx.q, ctx.eps.valid)) {
    throw validity_error("invalid IVq-ROFN " + format(a) + ": " + *why);
  }
}

std::string format(const IVqROFN& a, int decimals) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "<[%.*f,%.*f],[%.*f,%.*f]>", decimals, a.mu.lo, decimals, a.mu.hi,
                decimals, a.nu.lo, decimals, a.nu.hi);
  return buf;
}

std::ostream& operator<<(std::ostream& os, const IVqROFN& a) { return os << format(a); }

namespace detail {

double clamp_unit(double x, const RungContext& ctx) {
  if (x >= 0.0 && x <= 1.0) return x;
  if (std::isnan(x)) throw numeric_error("NaN produced inside a fuzzy operation");
  const bool wide = x < -ctx.eps.clamp || x > 1.0 + ctx.eps.clamp;
  if (ctx.clamps) ctx.clamps->record(wide);
  return x < 0.0 ? 0.0 : 1.0;
}

double root(double x, const RungContext& ctx) {
  x = clamp_unit(x, ctx);
  return ctx.q == 1.0 ? x : std::pow(x, 1.0 / ctx.q);
}

}  // namespace detail

}  // namespace ivqrof
