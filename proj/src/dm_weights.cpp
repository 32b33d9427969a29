#include "ivqrof/dm_weights.hpp"

#include "ivqrof/error.hpp"
#include "ivqrof/measures.hpp"
#include "ivqrof/parallel.hpp"
#include "ivqrof/rounding.hpp"

namespace ivqrof {

namespace {

struct Degenerate {
  std::size_t row;
  std::size_t col;
};

SimilarityMatrix similarity_impl(const DecisionMatrix& a, const RungContext& ctx,
                                 std::vector<Degenerate>& degenerate) {
  SimilarityMatrix sim(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double dn = nis(a(i, j), ctx);
      const double dp = pis(a(i, j), ctx);
      if (dn + dp == 0.0) {
        sim(i, j) = 0.5;
        degenerate.push_back({i, j});
      } else {
        sim(i, j) = dn / (dn + dp);
      }
    }
  }
  return sim;
}

std::string cell_name(std::size_t row, std::size_t col) {
  return "row " + std::to_string(row + 1) + ", col " + std::to_string(col + 1);
}

}  // namespace

SimilarityMatrix similarity_matrix(const DecisionMatrix& a, const RungContext& ctx, AuditLog* audit) {
  std::vector<Degenerate> degenerate;
  auto sim = similarity_impl(a, ctx, degenerate);
  if (audit) {
    for (const auto& d : degenerate) {
      audit->add("similarity", "degenerate_cell", cell_name(d.row, d.col) + ": nis + pis = 0, sim set to 0.5");
    }
  }
  return sim;
}

DMWeightReport dm_weight_report(const std::vector<DecisionMatrix>& experts, const RungContext& ctx,
                                const DMWeightOptions& options, AuditLog* audit) {
  ctx.check();
  if (experts.empty()) throw domain_error("at least one expert matrix is required");
  const std::size_t k = experts.size();
  const std::size_t m = experts.front().rows();
  const std::size_t n = experts.front().cols();
  for (std::size_t t = 0; t < k; ++t) {
    if (experts[t].rows() != m || experts[t].cols() != n) {
      throw shape_error("expert " + std::to_string(t + 1) + " matrix is " +
                        std::to_string(experts[t].rows()) + "x" + std::to_string(experts[t].cols()) +
                        ", expected " + std::to_string(m) + "x" + std::to_string(n));
    }
  }
  if (options.similarity_decimals && (*options.similarity_decimals < 0 || *options.similarity_decimals > 15)) {
    throw parameter_error("similarity_decimals must lie in [0,15]");
  }

  DMWeightReport report;
  report.similarity.resize(k);
  std::vector<std::vector<Degenerate>> degenerate(k);
  parallel_for(k, options.threads, [&](std::size_t t) {
    report.similarity[t] = similarity_impl(experts[t], ctx, degenerate[t]);
    if (options.similarity_decimals) {
      auto& s = report.similarity[t];
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) s(i, j) = round_half_away(s(i, j), *options.similarity_decimals);
      }
    }
  });
  if (audit) {
    for (std::size_t t = 0; t < k; ++t) {
      for (const auto& d : degenerate[t]) {
        audit->add("similarity", "degenerate_cell",
                   "expert " + std::to_string(t + 1) + ", " + cell_name(d.row, d.col) +
                       ": nis + pis = 0, sim set to 0.5");
      }
    }
  }

  report.row_sums = Matrix<double>(m, k);
  report.lambda = DMWeightMatrix(m, k);
  for (std::size_t i = 0; i < m; ++i) {
    double total = 0.0;
    for (std::size_t t = 0; t < k; ++t) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += report.similarity[t](i, j);
      report.row_sums(i, t) = s;
      total += s;
    }
    if (total == 0.0) {
      for (std::size_t t = 0; t < k; ++t) report.lambda(i, t) = 1.0 / static_cast<double>(k);
      if (audit) {
        audit->add("dm_weights", "uniform_fallback",
                   "alternative " + std::to_string(i + 1) + ": all similarity sums are zero, weights set to 1/k");
      }
      continue;
    }
    for (std::size_t t = 0; t < k; ++t) report.lambda(i, t) = report.row_sums(i, t) / total;
  }
  return report;
}

DMWeightMatrix dm_weight_matrix(const std::vector<DecisionMatrix>& experts, const RungContext& ctx,
                                const DMWeightOptions& options, AuditLog* audit) {
  return dm_weight_report(experts, ctx, options, audit).lambda;
}

}  // namespace ivqrof
