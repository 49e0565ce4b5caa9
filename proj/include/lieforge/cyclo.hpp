#ifndef LIEFORGE_CYCLO_HPP
#define LIEFORGE_CYCLO_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lieforge/rational.hpp"

namespace lieforge {

/// Coefficient vectors of the cyclotomic polynomials Phi_n, obtained by
/// repeatedly dividing x^n - 1 by the Phi_d for proper divisors d.
inline const std::vector<Rat>& cyclotomic_poly(int n) {
  static std::map<int, std::vector<Rat>> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;

  // x^n - 1
  std::vector<Rat> p(n + 1, Rat(0));
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<Rat>& phi_d = cyclotomic_poly(d);
    // exact division p /= phi_d
    std::vector<Rat> q(p.size() - phi_d.size() + 1, Rat(0));
    std::vector<Rat> r = p;
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
      Rat c = r[k + phi_d.size() - 1] / phi_d.back();
      q[k] = c;
      if (!is_zero(c))
        for (size_t j = 0; j < phi_d.size(); ++j) r[k + j] -= c * phi_d[j];
    }
    for (const Rat& c : r)
      if (!is_zero(c)) throw std::logic_error("cyclotomic division not exact");
    p = q;
  }
  return memo.emplace(n, std::move(p)).first->second;
}

/// Exact arithmetic in Q[w]/(Phi_n) with w a primitive n-th root of unity.
class CycloScalar {
 public:
  CycloScalar() : n_(1), c_(1, Rat(0)) {}
  CycloScalar(int v) : n_(1), c_(1, Rat(v)) {}
  CycloScalar(const Rat& v) : n_(1), c_(1, v) {}

  static CycloScalar rational(int n, const Rat& v) {
    CycloScalar s;
    s.n_ = n;
    s.c_.assign(deg(n), Rat(0));
    if (!s.c_.empty()) s.c_[0] = v;
    s.trim_order();
    return s;
  }

  /// w^k in Q[w]/(Phi_n).
  static CycloScalar root_power(int n, long k) {
    k %= n;
    if (k < 0) k += n;
    CycloScalar s;
    s.n_ = n;
    s.c_.assign(n == 1 ? 1 : n, Rat(0));
    if (n == 1) {
      s.c_[0] = 1;
    } else {
      s.c_[k] = 1;
      s.reduce();
    }
    s.trim_order();
    return s;
  }

  int order() const { return n_; }
  bool is_zero() const {
    for (const Rat& c : c_)
      if (!lieforge::is_zero(c)) return false;
    return true;
  }

  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (!lieforge::is_zero(c_[i])) return false;
    return true;
  }
  Rat rational_part() const { return c_.empty() ? Rat(0) : c_[0]; }

  friend CycloScalar operator+(const CycloScalar& x, const CycloScalar& y) {
    auto [a, b] = promote(x, y);
    for (size_t i = 0; i < b.c_.size(); ++i) a.c_[i] += b.c_[i];
    a.trim_order();
    return a;
  }
  friend CycloScalar operator-(const CycloScalar& x, const CycloScalar& y) {
    auto [a, b] = promote(x, y);
    for (size_t i = 0; i < b.c_.size(); ++i) a.c_[i] -= b.c_[i];
    a.trim_order();
    return a;
  }
  friend CycloScalar operator-(const CycloScalar& x) {
    CycloScalar r = x;
    for (Rat& c : r.c_) c = -c;
    return r;
  }
  friend CycloScalar operator*(const CycloScalar& x, const CycloScalar& y) {
    auto [a, b] = promote(x, y);
    std::vector<Rat> prod(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (lieforge::is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j)
        prod[i + j] += a.c_[i] * b.c_[j];
    }
    CycloScalar r;
    r.n_ = a.n_;
    r.c_ = std::move(prod);
    r.reduce();
    r.trim_order();
    return r;
  }
  friend CycloScalar operator*(const Rat& c, const CycloScalar& x) {
    CycloScalar r = x;
    for (Rat& v : r.c_) v *= c;
    return r;
  }
  CycloScalar& operator+=(const CycloScalar& o) { return *this = *this + o; }
  CycloScalar& operator-=(const CycloScalar& o) { return *this = *this - o; }
  CycloScalar& operator*=(const CycloScalar& o) { return *this = *this * o; }

  bool operator==(const CycloScalar& o) const {
    return (*this - o).is_zero();
  }

  /// "2/3", "w", "w^2-1", ... with w the chosen primitive root.
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
      if (lieforge::is_zero(c_[i])) continue;
      std::string mono;
      std::string cs = rat_str(c_[i]);
      if (i == 0) {
        mono = cs;
      } else {
        std::string w = (i == 1) ? "w" : "w^" + std::to_string(i);
        if (cs == "1") mono = w;
        else if (cs == "-1") mono = "-" + w;
        else mono = cs + "*" + w;
      }
      if (out.empty()) out = mono;
      else if (mono[0] == '-') out += mono;
      else out += "+" + mono;
    }
    return out;
  }

 private:
  static size_t deg(int n) {
    size_t d = cyclotomic_poly(n).size() - 1;
    return d == 0 ? 1 : d;
  }

  void reduce() {
    const std::vector<Rat>& phi = cyclotomic_poly(n_);
    size_t d = phi.size() - 1;
    for (size_t k = c_.size(); k-- > d && k >= d;) {
      Rat c = c_[k] / phi[d];
      if (!lieforge::is_zero(c))
        for (size_t j = 0; j <= d; ++j) c_[k - d + j] -= c * phi[j];
      if (k == d) break;
    }
    c_.resize(d == 0 ? 1 : d);
  }

  // A value that happens to be rational compares equal across orders; keep
  // order-1 representation for plain rationals so mixed arithmetic works.
  void trim_order() {
    if (n_ != 1 && is_rational()) {
      Rat v = rational_part();
      n_ = 1;
      c_.assign(1, v);
    }
  }

  static std::pair<CycloScalar, CycloScalar> promote(const CycloScalar& x,
                                                     const CycloScalar& y) {
    if (x.n_ == y.n_) return {x, y};
    if (x.n_ == 1) {
      CycloScalar a = rational(y.n_, x.rational_part());
      CycloScalar b = y;
      a.c_.resize(std::max(a.c_.size(), b.c_.size()), Rat(0));
      b.c_.resize(a.c_.size(), Rat(0));
      return {a, b};
    }
    if (y.n_ == 1) {
      auto [b, a] = promote(y, x);
      return {a, b};
    }
    throw std::invalid_argument("mixed cyclotomic orders " +
                                std::to_string(x.n_) + " and " +
                                std::to_string(y.n_));
  }

  int n_;
  std::vector<Rat> c_;  // coefficients of 1, w, w^2, ...
};

inline bool is_zero(const CycloScalar& x) { return x.is_zero(); }

}  // namespace lieforge

#endif
