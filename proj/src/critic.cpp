#include "ivqrof/critic.hpp"

#include "ivqrof/error.hpp"
#include "ivqrof/fuzzy_core.hpp"
#include "ivqrof/parallel.hpp"

namespace ivqrof {

std::string to_string(DistanceMode mode) {
  switch (mode) {
    case DistanceMode::nis: return "nis";
    case DistanceMode::pis: return "pis";
    case DistanceMode::cis: return "cis";
  }
  return "nis";
}

namespace {

void require_rows(const DecisionMatrix& x, std::size_t min_rows, const char* op) {
  if (x.rows() < min_rows) {
    throw domain_error(std::string(op) + " needs at least " + std::to_string(min_rows) +
                       " alternatives, got " + std::to_string(x.rows()));
  }
}

void require_col(const DecisionMatrix& x, std::size_t j) {
  if (j >= x.cols()) throw shape_error("attribute index " + std::to_string(j) + " out of range");
}

std::vector<IVqROFN> deviations(const DecisionMatrix& x, std::size_t j, const IVqROFN& mean,
                                const RungContext& ctx) {
  std::vector<IVqROFN> dev;
  dev.reserve(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) dev.push_back(sub(x(i, j), mean, ctx));
  return dev;
}

IVqROFN sum_of_squares(const std::vector<IVqROFN>& dev, const RungContext& ctx) {
  std::vector<IVqROFN> sq;
  sq.reserve(dev.size());
  for (const auto& d : dev) sq.push_back(power(d, 2.0, ctx));
  return sum(sq, ctx);
}

IVqROFN correlation_from(const std::vector<IVqROFN>& dj, const std::vector<IVqROFN>& dk,
                         const RungContext& ctx) {
  std::vector<IVqROFN> cross;
  cross.reserve(dj.size());
  for (std::size_t i = 0; i < dj.size(); ++i) cross.push_back(mul(dj[i], dk[i], ctx));
  const IVqROFN num = sum(cross, ctx);
  const IVqROFN den = power(mul(sum_of_squares(dj, ctx), sum_of_squares(dk, ctx), ctx), 0.5, ctx);
  return div(num, den, ctx);
}

IVqROFN stddev_from(const std::vector<IVqROFN>& dev, const RungContext& ctx) {
  const double inv_m = 1.0 / static_cast<double>(dev.size());
  return power(scale(inv_m, sum_of_squares(dev, ctx), ctx), 0.5, ctx);
}

}  // namespace

DecisionMatrix standardize(const DecisionMatrix& a, const RungContext& ctx, AuditLog* audit) {
  require_rows(a, 2, "standardize");
  const ScoreParams order{0.5, 0.5};
  DecisionMatrix x = a;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    std::size_t imax = 0;
    std::size_t imin = 0;
    double smax = score(a(0, j), order, ctx);
    double smin = smax;
    for (std::size_t i = 1; i < a.rows(); ++i) {
      const double s = score(a(i, j), order, ctx);
      if (s > smax) {
        smax = s;
        imax = i;
      }
      if (s < smin) {
        smin = s;
        imin = i;
      }
    }
    if (smax == smin) {
      if (audit) {
        audit->add("standardize", "degenerate_column",
                   "attribute " + std::to_string(j + 1) + ": max and min scores coincide, column left unchanged");
      }
      continue;
    }
    const IVqROFN& hi = a(imax, j);
    const IVqROFN& lo = a(imin, j);
    const IVqROFN range = sub(hi, lo, ctx);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const IVqROFN num = a.polarity[j] == Polarity::benefit ? sub(a(i, j), lo, ctx) : sub(hi, a(i, j), ctx);
      x(i, j) = div(num, range, ctx);
    }
  }
  return x;
}

IVqROFN column_mean(const DecisionMatrix& x, std::size_t j, const RungContext& ctx) {
  require_rows(x, 1, "column_mean");
  require_col(x, j);
  return ivqrofywa(x.cells.col(j), WeightVector::uniform(x.rows()), ctx);
}

IVqROFN correlation(const DecisionMatrix& x, std::size_t j, std::size_t k, const RungContext& ctx) {
  require_rows(x, 2, "correlation");
  require_col(x, j);
  require_col(x, k);
  const auto dj = deviations(x, j, column_mean(x, j, ctx), ctx);
  const auto dk = deviations(x, k, column_mean(x, k, ctx), ctx);
  return correlation_from(dj, dk, ctx);
}

IVqROFN column_stddev(const DecisionMatrix& x, std::size_t j, const RungContext& ctx) {
  require_rows(x, 2, "column_stddev");
  require_col(x, j);
  return stddev_from(deviations(x, j, column_mean(x, j, ctx), ctx), ctx);
}

IVqROFN attribute_index(const IVqROFN& sigma, const std::vector<IVqROFN>& rhos, const RungContext& ctx) {
  if (rhos.empty()) throw domain_error("attribute_index needs at least one correlation");
  std::vector<IVqROFN> terms;
  terms.reserve(rhos.size());
  for (const auto& r : rhos) terms.push_back(sub(positive_ideal, r, ctx));
  return mul(sigma, sum(terms, ctx), ctx);
}

CriticReport critic(const DecisionMatrix& x, const RungContext& ctx, unsigned threads) {
  require_rows(x, 2, "critic");
  const std::size_t n = x.cols();
  if (n == 0) throw domain_error("critic needs at least one attribute");
  CriticReport rep;
  rep.means.resize(n);
  rep.stddev.resize(n);
  std::vector<std::vector<IVqROFN>> dev(n);
  parallel_for(n, threads, [&](std::size_t j) {
    rep.means[j] = column_mean(x, j, ctx);
    dev[j] = deviations(x, j, rep.means[j], ctx);
    rep.stddev[j] = stddev_from(dev[j], ctx);
  });
  rep.correlation = Matrix<IVqROFN>(n, n);
  parallel_for(n * n, threads, [&](std::size_t idx) {
    const std::size_t j = idx / n;
    const std::size_t k = idx % n;
    rep.correlation(j, k) = correlation_from(dev[j], dev[k], ctx);
  });
  rep.index.resize(n);
  for (std::size_t j = 0; j < n; ++j) rep.index[j] = attribute_index(rep.stddev[j], rep.correlation.row(j), ctx);
  const IVqROFN total = sum(rep.index, ctx);
  rep.weights.reserve(n);
  for (std::size_t j = 0; j < n; ++j) rep.weights.push_back(div(rep.index[j], total, ctx));
  return rep;
}

IntervalWeightVector interval_weights(const DecisionMatrix& a, const RungContext& ctx, AuditLog* audit) {
  return critic(standardize(a, ctx, audit), ctx).weights;
}

std::vector<double> weight_distances(const IntervalWeightVector& w, DistanceMode mode,
                                     const CISParams& cis_params, const RungContext& ctx) {
  std::vector<double> d;
  d.reserve(w.size());
  for (const auto& wj : w) {
    switch (mode) {
      case DistanceMode::nis: d.push_back(nis(wj, ctx)); break;
      case DistanceMode::pis: d.push_back(1.0 - pis(wj, ctx)); break;
      case DistanceMode::cis: d.push_back(1.0 - cis(wj, cis_params, ctx)); break;
    }
  }
  return d;
}

WeightVector realize_weights(const IntervalWeightVector& w, DistanceMode mode, const CISParams& cis_params,
                             const RungContext& ctx, AuditLog* audit) {
  if (w.empty()) throw domain_error("realize_weights needs at least one interval weight");
  const auto d = weight_distances(w, mode, cis_params, ctx);
  double total = 0.0;
  for (double x : d) total += x;
  if (total == 0.0) {
    if (audit) {
      audit->add("realize_weights", "uniform_fallback",
                 "all " + to_string(mode) + " distances are zero, attribute weights set to 1/n");
    }
    return WeightVector::uniform(w.size());
  }
  std::vector<double> omega;
  omega.reserve(d.size());
  for (double x : d) omega.push_back(x / total);
  return WeightVector(std::move(omega));
}

}  // namespace ivqrof
