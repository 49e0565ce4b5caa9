#ifndef LIEFORGE_POLY2_HPP
#define LIEFORGE_POLY2_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "lieforge/rational.hpp"

namespace lieforge {

/// Exact polynomials in two commuting variables a, b over Q.
///
/// Terms are kept in degree-lex order: higher total degree first, then
/// higher a-exponent. No zero coefficients are stored.
class Poly2 {
 public:
  struct Key {
    int i, j;  // a^i b^j
    bool operator==(const Key&) const = default;
    bool operator<(const Key& o) const {
      if (i + j != o.i + o.j) return i + j > o.i + o.j;
      return i > o.i;
    }
  };

  Poly2() = default;
  Poly2(int c) { if (c != 0) terms_[{0, 0}] = c; }
  Poly2(const Rat& c) { if (!lieforge::is_zero(c)) terms_[{0, 0}] = c; }

  static Poly2 monomial(const Rat& c, int i, int j) {
    Poly2 p;
    if (!lieforge::is_zero(c)) p.terms_[{i, j}] = c;
    return p;
  }
  static Poly2 var_a() { return monomial(1, 1, 0); }
  static Poly2 var_b() { return monomial(1, 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rat>& terms() const { return terms_; }

  Rat coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rat(0) : it->second;
  }

  Poly2& operator+=(const Poly2& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Poly2& operator-=(const Poly2& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend Poly2 operator+(Poly2 x, const Poly2& y) { return x += y; }
  friend Poly2 operator-(Poly2 x, const Poly2& y) { return x -= y; }
  friend Poly2 operator-(const Poly2& x) {
    Poly2 r;
    for (const auto& [k, c] : x.terms_) r.terms_[k] = -c;
    return r;
  }
  friend Poly2 operator*(const Poly2& x, const Poly2& y) {
    Poly2 r;
    for (const auto& [kx, cx] : x.terms_)
      for (const auto& [ky, cy] : y.terms_)
        r.add_term({kx.i + ky.i, kx.j + ky.j}, cx * cy);
    return r;
  }
  Poly2& operator*=(const Poly2& o) { return *this = *this * o; }
  friend Poly2 operator*(const Rat& c, const Poly2& x) {
    Poly2 r;
    if (lieforge::is_zero(c)) return r;
    for (const auto& [k, v] : x.terms_) r.terms_[k] = c * v;
    return r;
  }
  bool operator==(const Poly2& o) const { return terms_ == o.terms_; }

  Rat eval(const Rat& a, const Rat& b) const {
    Rat s = 0;
    for (const auto& [k, c] : terms_) {
      Rat m = c;
      for (int t = 0; t < k.i; ++t) m *= a;
      for (int t = 0; t < k.j; ++t) m *= b;
      s += m;
    }
    return s;
  }

  /// True iff every stored coefficient is negative (used to pull a sign out
  /// when pretty-printing).
  bool all_negative() const {
    if (terms_.empty()) return false;
    for (const auto& [k, c] : terms_)
      if (sgn(c) >= 0) return false;
    return true;
  }

  bool is_monomial() const { return terms_.size() == 1; }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
  }

  /// Compact form, e.g. "a^2+3*a*b+b^2", "-a", "1/2".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      std::string mono = monomial_str(k, c, /*verbose=*/false);
      if (first) {
        out = mono;
        first = false;
      } else if (!mono.empty() && mono[0] == '-') {
        out += mono;
      } else {
        out += "+" + mono;
      }
    }
    return out;
  }

  /// Verbose form with an explicit numeric factor on every term,
  /// e.g. "-1*a", "3*a*b". Used by the JSON serializers.
  std::string str_verbose() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      std::string mono = monomial_str(k, c, /*verbose=*/true);
      if (first) {
        out = mono;
        first = false;
      } else if (!mono.empty() && mono[0] == '-') {
        out += mono;
      } else {
        out += "+" + mono;
      }
    }
    return out;
  }

 private:
  void add_term(const Key& k, const Rat& c) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      if (!lieforge::is_zero(c)) terms_[k] = c;
    } else {
      it->second += c;
      if (lieforge::is_zero(it->second)) terms_.erase(it);
    }
  }

  static std::string monomial_str(const Key& k, const Rat& c, bool verbose) {
    std::string vars;
    if (k.i > 0) vars += (k.i == 1) ? "a" : "a^" + std::to_string(k.i);
    if (k.j > 0) {
      if (!vars.empty()) vars += "*";
      vars += (k.j == 1) ? "b" : "b^" + std::to_string(k.j);
    }
    std::string cs = rat_str(c);
    if (vars.empty()) return cs;
    if (verbose) return cs + "*" + vars;
    if (cs == "1") return vars;
    if (cs == "-1") return "-" + vars;
    return cs + "*" + vars;
  }

  std::map<Key, Rat> terms_;
};

inline bool is_zero(const Poly2& p) { return p.is_zero(); }

}  // namespace lieforge

#endif
