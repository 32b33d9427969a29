#include "ivqrof/waspas.hpp"

#include <algorithm>
#include <numeric>

#include "ivqrof/error.hpp"
#include "ivqrof/fuzzy_core.hpp"

namespace ivqrof {

void WaspasParams::check() const {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw parameter_error("WASPAS lambda must lie in [0,1], got " + std::to_string(lambda));
  }
}

namespace {

void check_shape(const DecisionMatrix& x, const WeightVector& w) {
  if (x.cols() != w.size()) {
    throw shape_error("matrix has " + std::to_string(x.cols()) + " attributes but " +
                      std::to_string(w.size()) + " weights were given");
  }
}

}  // namespace

std::vector<IVqROFN> wsm_importance(const DecisionMatrix& x, const WeightVector& w, const RungContext& ctx) {
  check_shape(x, w);
  std::vector<IVqROFN> out;
  out.reserve(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) out.push_back(ivqrofywa(x.cells.row(i), w, ctx));
  return out;
}

std::vector<IVqROFN> wpm_importance(const DecisionMatrix& x, const WeightVector& w, const RungContext& ctx) {
  check_shape(x, w);
  std::vector<IVqROFN> out;
  out.reserve(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) out.push_back(ivqrofywg(x.cells.row(i), w, ctx));
  return out;
}

IVqROFN blend(const IVqROFN& q1, const IVqROFN& q2, const WaspasParams& params, const RungContext& ctx) {
  params.check();
  if (params.lambda == 1.0) {
    require_valid(q1, ctx);
    return q1;
  }
  if (params.lambda == 0.0) {
    require_valid(q2, ctx);
    return q2;
  }
  return add(scale(params.lambda, q1, ctx), scale(1.0 - params.lambda, q2, ctx), ctx);
}

Ranking rank(const std::vector<IVqROFN>& r, const ScoreParams& params, const RungContext& ctx) {
  Ranking out;
  out.scores.reserve(r.size());
  for (const auto& a : r) out.scores.push_back(score(a, params, ctx));
  out.order.resize(r.size());
  std::iota(out.order.begin(), out.order.end(), std::size_t{0});
  std::stable_sort(out.order.begin(), out.order.end(),
                   [&](std::size_t a, std::size_t b) { return out.scores[a] > out.scores[b]; });
  return out;
}

}  // namespace ivqrof
