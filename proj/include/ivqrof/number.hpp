#ifndef IVQROF_NUMBER_HPP_
#define IVQROF_NUMBER_HPP_

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace ivqrof {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

// <[mu_lo, mu_hi], [nu_lo, nu_hi]>; the rung q lives in RungContext
struct IVqROFN {
  Interval mu;
  Interval nu;

  friend bool operator==(const IVqROFN&, const IVqROFN&) = default;
};

constexpr IVqROFN make_number(double mu_lo, double mu_hi, double nu_lo, double nu_hi) {
  return IVqROFN{{mu_lo, mu_hi}, {nu_lo, nu_hi}};
}

inline constexpr IVqROFN positive_ideal = make_number(1.0, 1.0, 0.0, 0.0);
inline constexpr IVqROFN negative_ideal = make_number(0.0, 0.0, 1.0, 1.0);

// swaps membership and non-membership
constexpr IVqROFN complement(const IVqROFN& a) { return IVqROFN{a.nu, a.mu}; }

// Counts radicands pushed back into [0,1]. "roundoff" clamps are within
// eps.clamp of the boundary, "wide" ones are beyond it.
class ClampCounter {
 public:
  void record(bool wide) noexcept {
    (wide ? wide_ : roundoff_).fetch_add(1, std::memory_order_relaxed);
  }
  std::uint64_t roundoff() const noexcept { return roundoff_.load(std::memory_order_relaxed); }
  std::uint64_t wide() const noexcept { return wide_.load(std::memory_order_relaxed); }
  void reset() noexcept {
    roundoff_.store(0);
    wide_.store(0);
  }

 private:
  std::atomic<std::uint64_t> roundoff_{0};
  std::atomic<std::uint64_t> wide_{0};
};

struct EpsilonPolicy {
  double valid = 1e-9;
  double clamp = 1e-12;
};

struct RungContext {
  double q = 3.0;
  double p = 2.0;
  EpsilonPolicy eps{};
  ClampCounter* clamps = nullptr;

  // throws parameter_error unless q >= 1, p >= 1 and eps >= 0
  void check() const;
};

// range [0,1] and interval ordering only, independent of q
std::optional<std::string> range_violation(const IVqROFN& a, double eps_valid = 1e-9);
// nullopt when a is a valid number at rung q, otherwise a description
std::optional<std::string> violation(const IVqROFN& a, double q, double eps_valid = 1e-9);
bool is_valid(const IVqROFN& a, const RungContext& ctx);
void require_valid(const IVqROFN& a, const RungContext& ctx);

std::string format(const IVqROFN& a, int decimals = 6);
std::ostream& operator<<(std::ostream& os, const IVqROFN& a);

namespace detail {

double clamp_unit(double x, const RungContext& ctx);
// clamp_unit(x)^(1/q)
double root(double x, const RungContext& ctx);

}  // namespace detail

}  // namespace ivqrof

#endif
