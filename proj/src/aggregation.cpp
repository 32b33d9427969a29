#include "ivqrof/aggregation.hpp"

#include <algorithm>
#include <cmath>

#include "ivqrof/error.hpp"

namespace ivqrof {

WeightVector::WeightVector(std::vector<double> w) : w_(std::move(w)) {
  if (w_.empty()) throw domain_error("weight vector is empty");
  double total = 0.0;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (!std::isfinite(w_[i]) || w_[i] < 0.0 || w_[i] > 1.0) {
      throw domain_error("weight " + std::to_string(i + 1) + " = " + std::to_string(w_[i]) +
                         " is outside [0,1]");
    }
    total += w_[i];
  }
  if (std::fabs(total - 1.0) > 1e-9) {
    throw domain_error("weights sum to " + std::to_string(total) + ", expected 1");
  }
}

WeightVector WeightVector::uniform(std::size_t n) {
  if (n == 0) throw domain_error("weight vector is empty");
  return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

namespace {

void check(const std::vector<IVqROFN>& items, const WeightVector& w, const RungContext& ctx) {
  ctx.check();
  if (items.empty()) throw domain_error("aggregation of an empty sequence");
  if (items.size() != w.size()) {
    throw shape_error("aggregation of " + std::to_string(items.size()) + " items with " +
                      std::to_string(w.size()) + " weights");
  }
  for (const auto& a : items) require_valid(a, ctx);
}

// terms are added in ascending order, so the result does not depend on the
// order in which (item, weight) pairs are listed
double ordered_sum(std::vector<double>& terms) {
  std::sort(terms.begin(), terms.end());
  double acc = 0.0;
  double carry = 0.0;
  for (double t : terms) {
    const double next = acc + t;
    carry += std::fabs(acc) >= std::fabs(t) ? (acc - next) + t : (t - next) + acc;
    acc = next;
  }
  return acc + carry;
}

// membership side: min{1, (sum w x^{qp})^{1/p}}^{1/q}
double average_side(const std::vector<IVqROFN>& items, const WeightVector& w, const RungContext& ctx,
                    double Interval::*end, Interval IVqROFN::*side) {
  const double qp = ctx.q * ctx.p;
  std::vector<double> terms(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) terms[i] = w[i] * std::pow(items[i].*side.*end, qp);
  const double acc = ordered_sum(terms);
  return detail::root(std::min(1.0, std::pow(acc, 1.0 / ctx.p)), ctx);
}

// non-membership side: (1 - min{1, (sum w (1 - y^q)^p)^{1/p}})^{1/q}.
// A sum near 1 is carried as its offset from 1,
// sum w ((1 - y^q)^p - 1) + (sum w - 1), so that small y keep their digits.
double dual_side(const std::vector<IVqROFN>& items, const WeightVector& w, const RungContext& ctx,
                 double Interval::*end, Interval IVqROFN::*side) {
  std::vector<double> direct(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    direct[i] = w[i] * std::pow(1.0 - std::pow(items[i].*side.*end, ctx.q), ctx.p);
  }
  const double s = ordered_sum(direct);
  double log_s = 0.0;
  if (s < 0.5) {
    log_s = std::log(s);
  } else {
    std::vector<double> offset;
    offset.reserve(2 * items.size() + 1);
    for (std::size_t i = 0; i < items.size(); ++i) {
      offset.push_back(w[i] * std::expm1(ctx.p * std::log1p(-std::pow(items[i].*side.*end, ctx.q))));
      offset.push_back(w[i]);
    }
    offset.push_back(-1.0);
    log_s = std::log1p(ordered_sum(offset));
  }
  return detail::root(log_s >= 0.0 ? 0.0 : -std::expm1(log_s / ctx.p), ctx);
}

}  // namespace

IVqROFN ivqrofywa(const std::vector<IVqROFN>& items, const WeightVector& w, const RungContext& ctx) {
  check(items, w, ctx);
  return {{average_side(items, w, ctx, &Interval::lo, &IVqROFN::mu),
           average_side(items, w, ctx, &Interval::hi, &IVqROFN::mu)},
          {dual_side(items, w, ctx, &Interval::lo, &IVqROFN::nu),
           dual_side(items, w, ctx, &Interval::hi, &IVqROFN::nu)}};
}

IVqROFN ivqrofywg(const std::vector<IVqROFN>& items, const WeightVector& w, const RungContext& ctx) {
  check(items, w, ctx);
  return {{dual_side(items, w, ctx, &Interval::lo, &IVqROFN::mu),
           dual_side(items, w, ctx, &Interval::hi, &IVqROFN::mu)},
          {average_side(items, w, ctx, &Interval::lo, &IVqROFN::nu),
           average_side(items, w, ctx, &Interval::hi, &IVqROFN::nu)}};
}

}  // namespace ivqrof
