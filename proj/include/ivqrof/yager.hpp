#ifndef IVQROF_YAGER_HPP_
#define IVQROF_YAGER_HPP_

#include "ivqrof/number.hpp"

namespace ivqrof {

// Yager t-conorm / t-norm arithmetic with parameter ctx.p
IVqROFN yager_add(const IVqROFN& a1, const IVqROFN& a2, const RungContext& ctx);
IVqROFN yager_mul(const IVqROFN& a1, const IVqROFN& a2, const RungContext& ctx);
IVqROFN yager_scale(double delta, const IVqROFN& a, const RungContext& ctx);
IVqROFN yager_power(const IVqROFN& a, double delta, const RungContext& ctx);

}  // namespace ivqrof

#endif
