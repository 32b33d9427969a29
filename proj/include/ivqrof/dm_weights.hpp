#ifndef IVQROF_DM_WEIGHTS_HPP_
#define IVQROF_DM_WEIGHTS_HPP_

#include <optional>
#include <vector>

#include "ivqrof/audit.hpp"
#include "ivqrof/matrix.hpp"
#include "ivqrof/number.hpp"

namespace ivqrof {

// m x n, entries in [0,1]
using SimilarityMatrix = Matrix<double>;
// m x k, row i holds the expert weights for alternative i
using DMWeightMatrix = Matrix<double>;

struct DMWeightOptions {
  // round each similarity before summing
  std::optional<int> similarity_decimals;
  unsigned threads = 1;
};

struct DMWeightReport {
  std::vector<SimilarityMatrix> similarity;  // one per expert, as used in the sums
  Matrix<double> row_sums;                   // m x k
  DMWeightMatrix lambda;

  friend bool operator==(const DMWeightReport&, const DMWeightReport&) = default;
};

// sim_ij = nis / (nis + pis); a cell with nis + pis = 0 maps to 0.5 and is
// reported in the audit log
SimilarityMatrix similarity_matrix(const DecisionMatrix& a, const RungContext& ctx,
                                   AuditLog* audit = nullptr);

DMWeightReport dm_weight_report(const std::vector<DecisionMatrix>& experts, const RungContext& ctx,
                                const DMWeightOptions& options = {}, AuditLog* audit = nullptr);

DMWeightMatrix dm_weight_matrix(const std::vector<DecisionMatrix>& experts, const RungContext& ctx,
                                const DMWeightOptions& options = {}, AuditLog* audit = nullptr);

}  // namespace ivqrof

#endif
