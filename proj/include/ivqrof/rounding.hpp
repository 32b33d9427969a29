#ifndef IVQROF_ROUNDING_HPP_
#define IVQROF_ROUNDING_HPP_

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace ivqrof {

// Rounds the exact binary value of x to the given decimals, ties away from
// zero. 0.295 is stored slightly below 0.295 and so rounds to 0.29, whereas
// std::round(x * 100) / 100 would give 0.30.
inline double round_half_away(double x, int decimals) {
  if (!std::isfinite(x) || decimals < 0 || decimals > 300) return x;
  char buf[800];
  // glibc prints the exact expansion; 40 guard digits separate any double
  // from a decimal tie at these magnitudes
  std::snprintf(buf, sizeof buf, "%.*f", decimals + 40, std::fabs(x));
  std::string digits(buf);
  const std::size_t dot = digits.find('.');
  const bool up = digits[dot + 1 + static_cast<std::size_t>(decimals)] >= '5';
  std::string kept = digits.substr(0, dot) + digits.substr(dot + 1, static_cast<std::size_t>(decimals));
  if (up) {
    std::size_t i = kept.size();
    while (i > 0) {
      --i;
      if (kept[i] == '9') {
        kept[i] = '0';
      } else {
        ++kept[i];
        break;
      }
      if (i == 0) kept.insert(kept.begin(), '1');
    }
  }
  const std::size_t int_len = kept.size() - static_cast<std::size_t>(decimals);
  const std::string text = kept.substr(0, int_len) + "." + kept.substr(int_len) + "e0";
  const double v = std::strtod(text.c_str(), nullptr);
  return std::signbit(x) ? -v : v;
}

inline std::string fixed(double x, int decimals) {
  char buf[400];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, round_half_away(x, decimals));
  return buf;
}

}  // namespace ivqrof

#endif
