#ifndef IVQROF_FUZZY_CORE_HPP_
#define IVQROF_FUZZY_CORE_HPP_

#include <vector>

#include "ivqrof/matrix.hpp"
#include "ivqrof/number.hpp"

namespace ivqrof {

Interval hesitancy(const IVqROFN& a, const RungContext& ctx);

IVqROFN add(const IVqROFN& a1, const IVqROFN& a2, const RungContext& ctx);
IVqROFN mul(const IVqROFN& a1, const IVqROFN& a2, const RungContext& ctx);
IVqROFN scale(double lambda, const IVqROFN& a, const RungContext& ctx);
IVqROFN power(const IVqROFN& a, double lambda, const RungContext& ctx);
IVqROFN sub(const IVqROFN& a1, const IVqROFN& a2, const RungContext& ctx);
IVqROFN div(const IVqROFN& a1, const IVqROFN& a2, const RungContext& ctx);

// left fold of add; throws domain_error on empty input
IVqROFN sum(const std::vector<IVqROFN>& items, const RungContext& ctx);

// Least integer q >= 1 with mu_hi^q + nu_hi^q <= 1 (+eps_valid) for every
// entry. Throws infeasible_error when no finite q exists.
int infer_q(const std::vector<DecisionMatrix>& matrices, double eps_valid = 1e-9);
int infer_q(const std::vector<IVqROFN>& entries, double eps_valid = 1e-9);

}  // namespace ivqrof

#endif
