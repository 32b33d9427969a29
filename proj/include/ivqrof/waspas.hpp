#ifndef IVQROF_WASPAS_HPP_
#define IVQROF_WASPAS_HPP_

#include <cstddef>
#include <vector>

#include "ivqrof/aggregation.hpp"
#include "ivqrof/matrix.hpp"
#include "ivqrof/measures.hpp"
#include "ivqrof/number.hpp"

namespace ivqrof {

struct WaspasParams {
  // 1 is the pure weighted sum, 0 the pure weighted product
  double lambda = 0.5;

  void check() const;
};

std::vector<IVqROFN> wsm_importance(const DecisionMatrix& x, const WeightVector& w, const RungContext& ctx);
std::vector<IVqROFN> wpm_importance(const DecisionMatrix& x, const WeightVector& w, const RungContext& ctx);

// scale(lambda, q1) (+) scale(1 - lambda, q2) in the classic algebra
IVqROFN blend(const IVqROFN& q1, const IVqROFN& q2, const WaspasParams& params, const RungContext& ctx);

struct Ranking {
  std::vector<double> scores;      // by alternative index
  std::vector<std::size_t> order;  // best first; equal scores keep index order

  friend bool operator==(const Ranking&, const Ranking&) = default;
};

Ranking rank(const std::vector<IVqROFN>& r, const ScoreParams& params, const RungContext& ctx);

}  // namespace ivqrof

#endif
