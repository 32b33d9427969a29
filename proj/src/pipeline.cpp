#include "ivqrof/pipeline.hpp"

#include <cmath>

#include "ivqrof/aggregation.hpp"
#include "ivqrof/error.hpp"
#include "ivqrof/fuzzy_core.hpp"
#include "ivqrof/parallel.hpp"

namespace ivqrof {

void SolveParams::check() const {
  if (q && (!std::isfinite(*q) || *q < 1.0)) {
    throw parameter_error("q must be a finite real >= 1, got " + std::to_string(*q));
  }
  if (!std::isfinite(p) || p < 1.0) throw parameter_error("p must be a finite real >= 1, got " + std::to_string(p));
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw parameter_error("alpha must lie in (0,1), got " + std::to_string(alpha));
  }
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw parameter_error("lambda must lie in [0,1], got " + std::to_string(lambda));
  }
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw parameter_error("theta must lie in [0,1], got " + std::to_string(theta));
  }
  if (similarity_decimals && (*similarity_decimals < 0 || *similarity_decimals > 15)) {
    throw parameter_error("similarity_decimals must lie in [0,15]");
  }
}

GroupProblem make_problem(std::vector<DecisionMatrix> experts, SolveParams params) {
  GroupProblem g;
  const std::size_t m = experts.empty() ? 0 : experts.front().rows();
  const std::size_t n = experts.empty() ? 0 : experts.front().cols();
  for (std::size_t i = 0; i < m; ++i) g.alternatives.push_back("y" + std::to_string(i + 1));
  for (std::size_t j = 0; j < n; ++j) {
    const Polarity pol = experts.front().polarity.size() == n ? experts.front().polarity[j] : Polarity::benefit;
    g.attributes.push_back({"C" + std::to_string(j + 1), pol});
  }
  for (std::size_t t = 0; t < experts.size(); ++t) g.expert_names.push_back("e" + std::to_string(t + 1));
  g.experts = std::move(experts);
  g.params = params;
  return g;
}

namespace {

std::string where(std::size_t t, std::size_t i, std::size_t j) {
  return "expert " + std::to_string(t + 1) + ", row " + std::to_string(i + 1) + ", col " + std::to_string(j + 1);
}

}  // namespace

void validate(const GroupProblem& g) {
  if (g.experts.empty()) throw shape_error("the problem has no expert matrices");
  const std::size_t m = g.m();
  const std::size_t n = g.n();
  if (m == 0) throw shape_error("the problem has no alternatives");
  if (n == 0) throw shape_error("the problem has no attributes");
  if (g.expert_names.size() != g.k()) {
    throw shape_error(std::to_string(g.expert_names.size()) + " expert names for " + std::to_string(g.k()) +
                      " expert matrices");
  }
  for (std::size_t t = 0; t < g.k(); ++t) {
    const auto& a = g.experts[t];
    if (a.rows() != m || a.cols() != n) {
      throw shape_error("expert " + std::to_string(t + 1) + ": matrix is " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + ", expected " + std::to_string(m) + "x" + std::to_string(n));
    }
    if (a.polarity.size() != n) throw shape_error("expert " + std::to_string(t + 1) + ": polarity vector size mismatch");
    for (std::size_t j = 0; j < n; ++j) {
      if (a.polarity[j] != g.attributes[j].polarity) {
        throw shape_error("expert " + std::to_string(t + 1) + ": polarity of attribute " + std::to_string(j + 1) +
                          " differs from the attribute list");
      }
    }
  }
  g.params.check();
  const EpsilonPolicy eps;
  for (std::size_t t = 0; t < g.k(); ++t) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const IVqROFN& a = g.experts[t](i, j);
        if (auto why = range_violation(a, eps.valid)) throw validity_error(where(t, i, j) + ": " + *why);
        const double u = a.mu.hi;
        const double v = a.nu.hi;
        if ((u >= 1.0 && v > 0.0) || (v >= 1.0 && u > 0.0)) {
          throw infeasible_error(where(t, i, j) + ": mu_hi^q + nu_hi^q > 1 for every finite q");
        }
        if (g.params.q) {
          if (auto why = violation(a, *g.params.q, eps.valid)) throw validity_error(where(t, i, j) + ": " + *why);
        }
      }
    }
  }
}

RungResolution resolve_rung(const GroupProblem& g) {
  RungResolution r;
  r.inferred = infer_q(g.experts);
  if (g.params.q) {
    if (!(*g.params.q > 1.0)) {
      throw parameter_error("q = " + std::to_string(*g.params.q) + " is not usable: the score function needs q > 1");
    }
    r.q = *g.params.q;
    return r;
  }
  r.q = r.inferred;
  if (r.inferred == 1) {
    r.q = 2.0;
    r.promoted = true;
  }
  return r;
}

DecisionMatrix aggregate_experts(const std::vector<DecisionMatrix>& experts, const DMWeightMatrix& lambda,
                                 const RungContext& ctx, unsigned threads) {
  if (experts.empty()) throw domain_error("aggregate_experts needs at least one expert");
  const std::size_t m = experts.front().rows();
  const std::size_t n = experts.front().cols();
  const std::size_t k = experts.size();
  for (const auto& a : experts) {
    if (a.rows() != m || a.cols() != n) throw shape_error("expert matrices differ in shape");
  }
  if (lambda.rows() != m || lambda.cols() != k) {
    throw shape_error("weight matrix is " + std::to_string(lambda.rows()) + "x" + std::to_string(lambda.cols()) +
                      ", expected " + std::to_string(m) + "x" + std::to_string(k));
  }
  DecisionMatrix out(Matrix<IVqROFN>(m, n), experts.front().polarity);
  parallel_for(m, threads, [&](std::size_t i) {
    const WeightVector w(lambda.row(i));
    std::vector<IVqROFN> cell(k);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t t = 0; t < k; ++t) cell[t] = experts[t](i, j);
      out(i, j) = ivqrofywa(cell, w, ctx);
    }
  });
  return out;
}

RankingResult solve(const GroupProblem& g, const SolveOptions& options) {
  validate(g);
  if (g.m() < 2) throw shape_error("solving needs at least two alternatives, got " + std::to_string(g.m()));
  const RungResolution rung = resolve_rung(g);

  RankingResult res;
  res.params = g.params;
  res.params.q = rung.q;
  res.q_inferred = rung.inferred;
  if (rung.promoted) {
    res.audit.add("rung", "promoted", "inferred q = 1 but the score function needs q > 1; using q = 2");
  }

  ClampCounter clamps;
  RungContext ctx;
  ctx.q = rung.q;
  ctx.p = g.params.p;
  ctx.clamps = &clamps;
  const unsigned threads = options.threads;

  try {
    res.dm = dm_weight_report(g.experts, ctx, {g.params.similarity_decimals, threads}, &res.audit);
    const DecisionMatrix r = aggregate_experts(g.experts, res.dm.lambda, ctx, threads);
    res.aggregated = r.cells;
    const DecisionMatrix x = standardize(r, ctx, &res.audit);
    res.standardized = x.cells;
    res.critic = critic(x, ctx, threads);

    const CISParams cis_params{g.params.theta};
    res.distances = weight_distances(res.critic.weights, g.params.mode, cis_params, ctx);
    const WeightVector omega = realize_weights(res.critic.weights, g.params.mode, cis_params, ctx, &res.audit);
    res.weights = omega.values();

    res.wsm = wsm_importance(x, omega, ctx);
    res.wpm = wpm_importance(x, omega, ctx);
    const WaspasParams wp{g.params.lambda};
    res.r.reserve(g.m());
    for (std::size_t i = 0; i < g.m(); ++i) res.r.push_back(blend(res.wsm[i], res.wpm[i], wp, ctx));

    const Ranking rk = rank(res.r, ScoreParams::from_alpha(g.params.alpha), ctx);
    res.scores = rk.scores;
    res.ranking = rk.order;
  } catch (const numeric_error&) {
    throw;
  } catch (const error& e) {
    throw numeric_error(std::string("numeric failure during solve: ") + e.what());
  }

  res.audit.roundoff_clamps = clamps.roundoff();
  res.audit.wide_clamps = clamps.wide();
  if (res.audit.wide_clamps > 0) {
    res.audit.add("numeric", "clamp",
                  std::to_string(res.audit.wide_clamps) + " radicands outside [0,1] beyond the clamp width were clamped");
  }
  return res;
}

std::vector<SolveParams> sweep_grid(const SolveParams& base, const SweepAxes& axes) {
  auto or_base = [](const std::vector<double>& axis, double b) { return axis.empty() ? std::vector<double>{b} : axis; };
  std::vector<std::optional<double>> qs;
  if (axes.q.empty()) {
    qs.push_back(base.q);
  } else {
    for (double q : axes.q) qs.push_back(q);
  }
  const auto ps = or_base(axes.p, base.p);
  const auto alphas = or_base(axes.alpha, base.alpha);
  const auto lambdas = or_base(axes.lambda, base.lambda);
  const auto thetas = or_base(axes.theta, base.theta);
  const auto modes = axes.modes.empty() ? std::vector<DistanceMode>{base.mode} : axes.modes;

  std::vector<SolveParams> grid;
  for (const auto& q : qs) {
    for (double p : ps) {
      for (double alpha : alphas) {
        for (double lambda : lambdas) {
          for (double theta : thetas) {
            for (DistanceMode mode : modes) {
              SolveParams pt = base;
              pt.q = q;
              pt.p = p;
              pt.alpha = alpha;
              pt.lambda = lambda;
              pt.theta = theta;
              pt.mode = mode;
              grid.push_back(pt);
            }
          }
        }
      }
    }
  }
  return grid;
}

SensitivityReport sweep(const GroupProblem& g, const SweepAxes& axes, const SolveOptions& options) {
  const auto grid = sweep_grid(g.params, axes);
  for (const auto& pt : grid) pt.check();
  SensitivityReport rep;
  rep.points.resize(grid.size());
  parallel_for(grid.size(), options.threads, [&](std::size_t idx) {
    GroupProblem local = g;
    local.params = grid[idx];
    const RankingResult res = solve(local);
    rep.points[idx] = {res.params, res.scores, res.ranking};
  });
  for (std::size_t idx = 1; idx < rep.points.size(); ++idx) {
    if (rep.points[idx].ranking != rep.points.front().ranking) {
      rep.stable = false;
      rep.first_divergence = idx;
      break;
    }
  }
  return rep;
}

}  // namespace ivqrof
