#ifndef IVQROF_AGGREGATION_HPP_
#define IVQROF_AGGREGATION_HPP_

#include <cstddef>
#include <vector>

#include "ivqrof/number.hpp"

namespace ivqrof {

// Nonnegative weights summing to 1 within 1e-9. Not renormalized.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<double> w);

  static WeightVector uniform(std::size_t n);

  std::size_t size() const noexcept { return w_.size(); }
  double operator[](std::size_t i) const { return w_[i]; }
  const std::vector<double>& values() const noexcept { return w_; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<double> w_;
};

// closed-form Yager weighted average / geometric mean
IVqROFN ivqrofywa(const std::vector<IVqROFN>& items, const WeightVector& w, const RungContext& ctx);
IVqROFN ivqrofywg(const std::vector<IVqROFN>& items, const WeightVector& w, const RungContext& ctx);

}  // namespace ivqrof

#endif
