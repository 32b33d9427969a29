#ifndef IVQROF_PIPELINE_HPP_
#define IVQROF_PIPELINE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ivqrof/audit.hpp"
#include "ivqrof/critic.hpp"
#include "ivqrof/dm_weights.hpp"
#include "ivqrof/matrix.hpp"
#include "ivqrof/number.hpp"
#include "ivqrof/waspas.hpp"

namespace ivqrof {

struct SolveParams {
  std::optional<double> q;  // inferred when absent
  double p = 2.0;
  double alpha = 0.5;  // beta = 1 - alpha
  double lambda = 0.5;
  double theta = 0.5;
  DistanceMode mode = DistanceMode::nis;
  std::optional<int> similarity_decimals;

  // ranges only; q feasibility depends on the data
  void check() const;

  friend bool operator==(const SolveParams&, const SolveParams&) = default;
};

struct Attribute {
  std::string name;
  Polarity polarity = Polarity::benefit;

  friend bool operator==(const Attribute&, const Attribute&) = default;
};

struct GroupProblem {
  std::vector<std::string> alternatives;
  std::vector<Attribute> attributes;
  std::vector<std::string> expert_names;
  std::vector<DecisionMatrix> experts;
  SolveParams params;

  std::size_t m() const { return alternatives.size(); }
  std::size_t n() const { return attributes.size(); }
  std::size_t k() const { return experts.size(); }

  friend bool operator==(const GroupProblem&, const GroupProblem&) = default;
};

// Builds a problem with default names (y1.., C1.., e1..) and benefit attributes.
GroupProblem make_problem(std::vector<DecisionMatrix> experts, SolveParams params = {});

// Shapes, names, parameter ranges, cell ranges and rung feasibility. Cell
// errors name the expert, row and column. Does not require q > 1.
void validate(const GroupProblem& problem);

struct RungResolution {
  int inferred = 1;
  double q = 1.0;
  bool promoted = false;  // inferred q = 1 raised to 2 for the score function
};

RungResolution resolve_rung(const GroupProblem& problem);

struct SolveOptions {
  unsigned threads = 1;
};

struct RankingResult {
  SolveParams params;  // as used, q filled in
  int q_inferred = 1;
  DMWeightReport dm;
  Matrix<IVqROFN> aggregated;
  Matrix<IVqROFN> standardized;
  CriticReport critic;
  std::vector<double> distances;
  std::vector<double> weights;
  std::vector<IVqROFN> wsm;
  std::vector<IVqROFN> wpm;
  std::vector<IVqROFN> r;
  std::vector<double> scores;
  std::vector<std::size_t> ranking;  // best first
  AuditLog audit;

  friend bool operator==(const RankingResult&, const RankingResult&) = default;
};

// r_ij = ivqrofywa over experts of a_ij with weights lambda row i
DecisionMatrix aggregate_experts(const std::vector<DecisionMatrix>& experts, const DMWeightMatrix& lambda,
                                 const RungContext& ctx, unsigned threads = 1);

RankingResult solve(const GroupProblem& problem, const SolveOptions& options = {});

struct SweepAxes {
  std::vector<double> q;
  std::vector<double> p;
  std::vector<double> alpha;
  std::vector<double> lambda;
  std::vector<double> theta;
  std::vector<DistanceMode> modes;
};

struct SweepPoint {
  SolveParams params;
  std::vector<double> scores;
  std::vector<std::size_t> ranking;

  friend bool operator==(const SweepPoint&, const SweepPoint&) = default;
};

struct SensitivityReport {
  std::vector<SweepPoint> points;
  bool stable = true;
  std::optional<std::size_t> first_divergence;  // index into points

  friend bool operator==(const SensitivityReport&, const SensitivityReport&) = default;
};

// Cartesian grid, q outermost then p, alpha, lambda, theta, mode. An empty
// axis keeps the problem's own value.
std::vector<SolveParams> sweep_grid(const SolveParams& base, const SweepAxes& axes);

SensitivityReport sweep(const GroupProblem& problem, const SweepAxes& axes, const SolveOptions& options = {});

}  // namespace ivqrof

#endif
