#ifndef IVQROF_MEASURES_HPP_
#define IVQROF_MEASURES_HPP_

#include <compare>

#include "ivqrof/number.hpp"

namespace ivqrof {

struct ScoreParams {
  double alpha = 0.5;
  double beta = 0.5;

  static ScoreParams from_alpha(double alpha) { return {alpha, 1.0 - alpha}; }
  // alpha > 0, beta > 0, alpha + beta = 1 within 1e-12
  void check() const;
};

struct CISParams {
  double theta = 0.5;

  void check() const;
};

// Distance and ideal distances are plain formula evaluations: they check
// ranges and ordering but not the rung constraint.
double distance(const IVqROFN& a1, const IVqROFN& a2, const RungContext& ctx);
double nis(const IVqROFN& a, const RungContext& ctx);
double pis(const IVqROFN& a, const RungContext& ctx);
double cis(const IVqROFN& a, const CISParams& params, const RungContext& ctx);

// requires ctx.q > 1
double score(const IVqROFN& a, const ScoreParams& params, const RungContext& ctx);

// by score; equal scores compare equivalent, callers break ties by position
std::weak_ordering compare(const IVqROFN& a1, const IVqROFN& a2, const ScoreParams& params,
                           const RungContext& ctx);

namespace detail {

// the score with independent end weights, used to probe its partial derivatives
double score_weighted(const IVqROFN& a, double alpha, double beta, double q);

}  // namespace detail

namespace diagnostics {

// reference scores of interval-valued fuzzy numbers, kept for comparison only
double score_cheng(const IVqROFN& a);
double score_bai(const IVqROFN& a);
double score_gongma(const IVqROFN& a);

}  // namespace diagnostics

}  // namespace ivqrof

#endif
