#ifndef LIEFORGE_RATIONAL_HPP
#define LIEFORGE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lieforge {

using Rat = mpq_class;
using Int = mpz_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

inline Rat rat_of(long num, long den = 1) { return Rat(num, den); }

inline Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

/// Catalan numbers by the convolution recurrence, C(0)=1.
inline Int catalan(int n) {
  std::vector<Int> c(n + 1);
  c[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Int s = 0;
    for (int i = 0; i < m; ++i) s += c[i] * c[m - 1 - i];
    c[m] = s;
  }
  return c[n];
}

inline std::string rat_str(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rat r(s);
  r.canonicalize();
  return r;
}

}  // namespace lieforge

#endif
