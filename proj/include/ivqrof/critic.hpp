#ifndef IVQROF_CRITIC_HPP_
#define IVQROF_CRITIC_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "ivqrof/aggregation.hpp"
#include "ivqrof/audit.hpp"
#include "ivqrof/matrix.hpp"
#include "ivqrof/measures.hpp"
#include "ivqrof/number.hpp"

namespace ivqrof {

using IntervalWeightVector = std::vector<IVqROFN>;

enum class DistanceMode { nis, pis, cis };

std::string to_string(DistanceMode mode);

// Column max/min are picked by score (alpha = beta = 0.5), ties to the lowest
// row. A column whose max and min scores coincide is copied unchanged and
// flagged in the audit log.
DecisionMatrix standardize(const DecisionMatrix& a, const RungContext& ctx, AuditLog* audit = nullptr);

IVqROFN column_mean(const DecisionMatrix& x, std::size_t j, const RungContext& ctx);
IVqROFN correlation(const DecisionMatrix& x, std::size_t j, std::size_t k, const RungContext& ctx);
IVqROFN column_stddev(const DecisionMatrix& x, std::size_t j, const RungContext& ctx);
// sigma_j (x) sum_k (1 (-) rho_jk)
IVqROFN attribute_index(const IVqROFN& sigma, const std::vector<IVqROFN>& rhos, const RungContext& ctx);

struct CriticReport {
  std::vector<IVqROFN> means;
  Matrix<IVqROFN> correlation;
  std::vector<IVqROFN> stddev;
  std::vector<IVqROFN> index;
  IntervalWeightVector weights;

  friend bool operator==(const CriticReport&, const CriticReport&) = default;
};

// every CRITIC stage on an already standardized matrix
CriticReport critic(const DecisionMatrix& x, const RungContext& ctx, unsigned threads = 1);

// standardize followed by critic(...).weights
IntervalWeightVector interval_weights(const DecisionMatrix& a, const RungContext& ctx,
                                      AuditLog* audit = nullptr);

// d_j before normalization: nis(w_j), 1 - pis(w_j) or 1 - cis(w_j)
std::vector<double> weight_distances(const IntervalWeightVector& w, DistanceMode mode,
                                     const CISParams& cis_params, const RungContext& ctx);

WeightVector realize_weights(const IntervalWeightVector& w, DistanceMode mode, const CISParams& cis_params,
                             const RungContext& ctx, AuditLog* audit = nullptr);

}  // namespace ivqrof

#endif
