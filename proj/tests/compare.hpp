#ifndef IVQROF_TESTS_COMPARE_HPP_
#define IVQROF_TESTS_COMPARE_HPP_

#include <algorithm>
#include <cmath>

#include "ivqrof/number.hpp"
#include "oracle.hpp"

inline double max_diff(const ivqrof::IVqROFN& a, const ivqrof::IVqROFN& b) {
  return std::max({std::fabs(a.mu.lo - b.mu.lo), std::fabs(a.mu.hi - b.mu.hi), std::fabs(a.nu.lo - b.nu.lo),
                   std::fabs(a.nu.hi - b.nu.hi)});
}

inline double max_diff(const ivqrof::IVqROFN& a, const oracle::Num& b) { return max_diff(a, oracle::to_double(b)); }

inline double max_diff(double a, const oracle::real& b) { return std::fabs(a - b.convert_to<double>()); }

// component-wise envelope of a set of numbers
inline bool within_envelope(const ivqrof::IVqROFN& r, const std::vector<ivqrof::IVqROFN>& xs, double tol) {
  auto lo = xs.front(), hi = xs.front();
  for (const auto& x : xs) {
    lo.mu.lo = std::min(lo.mu.lo, x.mu.lo);
    lo.mu.hi = std::min(lo.mu.hi, x.mu.hi);
    lo.nu.lo = std::min(lo.nu.lo, x.nu.lo);
    lo.nu.hi = std::min(lo.nu.hi, x.nu.hi);
    hi.mu.lo = std::max(hi.mu.lo, x.mu.lo);
    hi.mu.hi = std::max(hi.mu.hi, x.mu.hi);
    hi.nu.lo = std::max(hi.nu.lo, x.nu.lo);
    hi.nu.hi = std::max(hi.nu.hi, x.nu.hi);
  }
  return r.mu.lo >= lo.mu.lo - tol && r.mu.lo <= hi.mu.lo + tol && r.mu.hi >= lo.mu.hi - tol &&
         r.mu.hi <= hi.mu.hi + tol && r.nu.lo >= lo.nu.lo - tol && r.nu.lo <= hi.nu.lo + tol &&
         r.nu.hi >= lo.nu.hi - tol && r.nu.hi <= hi.nu.hi + tol;
}

#endif
