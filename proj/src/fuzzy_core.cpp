#include "ivqrof/fuzzy_core.hpp"

#include <cmath>

#include "ivqrof/error.hpp"

namespace ivqrof {

namespace {

void check_inputs(const RungContext& ctx, const IVqROFN& a) {
  ctx.check();
  require_valid(a, ctx);
}

void check_inputs(const RungContext& ctx, const IVqROFN& a1, const IVqROFN& a2) {
  check_inputs(ctx, a1);
  require_valid(a2, ctx);
}

void check_factor(double lambda, const char* op) {
  if (!std::isfinite(lambda) || lambda <= 0.0) {
    throw domain_error(std::string(op) + ": lambda must be a finite real > 0, got " +
                       std::to_string(lambda));
  }
}

// (a^q + b^q - a^q b^q)^(1/q)
double qsum(double a, double b, const RungContext& ctx) {
  const double aq = std::pow(a, ctx.q);
  const double bq = std::pow(b, ctx.q);
  return detail::root(aq + bq - aq * bq, ctx);
}

// (1 - (1 - x^q)^lambda)^(1/q), via log1p/expm1 so a tiny x^q is not lost
double qscale(double x, double lambda, const RungContext& ctx) {
  return detail::root(-std::expm1(lambda * std::log1p(-std::pow(x, ctx.q))), ctx);
}

}  // namespace

Interval hesitancy(const IVqROFN& a, const RungContext& ctx) {
  check_inputs(ctx, a);
  const double q = ctx.q;
  return {detail::root(1.0 - std::pow(a.mu.hi, q) - std::pow(a.nu.hi, q), ctx),
          detail::root(1.0 - std::pow(a.mu.lo, q) - std::pow(a.nu.lo, q), ctx)};
}

IVqROFN add(const IVqROFN& a1, const IVqROFN& a2, const RungContext& ctx) {
  check_inputs(ctx, a1, a2);
  return {{qsum(a1.mu.lo, a2.mu.lo, ctx), qsum(a1.mu.hi, a2.mu.hi, ctx)},
          {a1.nu.lo * a2.nu.lo, a1.nu.hi * a2.nu.hi}};
}

IVqROFN mul(const IVqROFN& a1, const IVqROFN& a2, const RungContext& ctx) {
  check_inputs(ctx, a1, a2);
  return {{a1.mu.lo * a2.mu.lo, a1.mu.hi * a2.mu.hi},
          {qsum(a1.nu.lo, a2.nu.lo, ctx), qsum(a1.nu.hi, a2.nu.hi, ctx)}};
}

IVqROFN scale(double lambda, const IVqROFN& a, const RungContext& ctx) {
  check_factor(lambda, "scale");
  check_inputs(ctx, a);
  return {{qscale(a.mu.lo, lambda, ctx), qscale(a.mu.hi, lambda, ctx)},
          {std::pow(a.nu.lo, lambda), std::pow(a.nu.hi, lambda)}};
}

IVqROFN power(const IVqROFN& a, double lambda, const RungContext& ctx) {
  check_factor(lambda, "power");
  check_inputs(ctx, a);
  return {{std::pow(a.mu.lo, lambda), std::pow(a.mu.hi, lambda)},
          {qscale(a.nu.lo, lambda, ctx), qscale(a.nu.hi, lambda, ctx)}};
}

IVqROFN sub(const IVqROFN& a1, const IVqROFN& a2, const RungContext& ctx) {
  check_inputs(ctx, a1, a2);
  return {{a1.mu.lo * a2.nu.lo, a1.mu.hi * a2.nu.hi},
          {qsum(a1.nu.lo, a2.mu.lo, ctx), qsum(a1.nu.hi, a2.mu.hi, ctx)}};
}

IVqROFN div(const IVqROFN& a1, const IVqROFN& a2, const RungContext& ctx) {
  check_inputs(ctx, a1, a2);
  return {{qsum(a1.mu.lo, a2.nu.lo, ctx), qsum(a1.mu.hi, a2.nu.hi, ctx)},
          {a1.nu.lo * a2.mu.lo, a1.nu.hi * a2.mu.hi}};
}

IVqROFN sum(const std::vector<IVqROFN>& items, const RungContext& ctx) {
  if (items.empty()) throw domain_error("sum of an empty sequence");
  IVqROFN acc = items.front();
  require_valid(acc, ctx);
  for (std::size_t i = 1; i < items.size(); ++i) acc = add(acc, items[i], ctx);
  return acc;
}

int infer_q(const std::vector<IVqROFN>& entries, double eps_valid) {
  if (entries.empty()) throw domain_error("infer_q needs at least one entry");
  for (const auto& a : entries) {
    if (auto why = range_violation(a, eps_valid)) {
      throw validity_error("invalid IVq-ROFN " + format(a) + ": " + *why);
    }
    const double u = a.mu.hi;
    const double v = a.nu.hi;
    if ((u >= 1.0 && v > 0.0) || (v >= 1.0 && u > 0.0)) {
      throw infeasible_error("entry " + format(a) + " satisfies mu_hi^q + nu_hi^q <= 1 for no finite q");
    }
  }
  auto ok = [&](double q) {
    for (const auto& a : entries) {
      if (std::pow(a.mu.hi, q) + std::pow(a.nu.hi, q) > 1.0 + eps_valid) return false;
    }
    return true;
  };
  if (ok(1.0)) return 1;
  long long lo = 1;  // fails
  long long hi = 2;
  while (!ok(static_cast<double>(hi))) {
    lo = hi;
    hi *= 2;
    if (hi > (1LL << 30)) throw infeasible_error("no rung q below 2^30 satisfies the data");
  }
  while (hi - lo > 1) {
    const long long mid = lo + (hi - lo) / 2;
    if (ok(static_cast<double>(mid))) hi = mid; else lo = mid;
  }
  return static_cast<int>(hi);
}

int infer_q(const std::vector<DecisionMatrix>& matrices, double eps_valid) {
  std::vector<IVqROFN> all;
  for (const auto& m : matrices) all.insert(all.end(), m.cells.data().begin(), m.cells.data().end());
  return infer_q(all, eps_valid);
}

}  // namespace ivqrof
