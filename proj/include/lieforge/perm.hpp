#ifndef LIEFORGE_PERM_HPP
#define LIEFORGE_PERM_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "lieforge/rational.hpp"

namespace lieforge {

/// A word: letters are positive integers, usually pairwise distinct.
using Word = std::vector<int>;

/// Permutation in one-line notation, 1-based values.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> vals) : v_(std::move(vals)) {
    std::vector<bool> seen(v_.size() + 1, false);
    for (int x : v_) {
      if (x < 1 || x > static_cast<int>(v_.size()) || seen[x])
        throw std::invalid_argument("not a permutation");
      seen[x] = true;
    }
  }

  static Perm identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v));
  }

  int size() const { return static_cast<int>(v_.size()); }
  const std::vector<int>& vals() const { return v_; }
  /// 1-based position access: sigma(i).
  int operator()(int i) const { return v_[i - 1]; }

  Perm inverse() const {
    if (inv_.empty() && !v_.empty()) {
      inv_.resize(v_.size());
      for (int i = 0; i < size(); ++i) inv_[v_[i] - 1] = i + 1;
    }
    Perm p;
    p.v_ = inv_;
    return p;
  }

  /// Reversal: sigma-bar = (sigma_n, ..., sigma_1).
  Perm reversed() const {
    std::vector<int> v(v_.rbegin(), v_.rend());
    return Perm(std::move(v));
  }

  /// Group product: (compose(s, t))(i) = s(t(i)).
  friend Perm compose(const Perm& s, const Perm& t) {
    if (s.size() != t.size()) throw std::invalid_argument("size mismatch");
    std::vector<int> v(s.size());
    for (int i = 0; i < s.size(); ++i) v[i] = s.v_[t.v_[i] - 1];
    Perm p;
    p.v_ = std::move(v);
    return p;
  }

  /// Lex rank in S_n via the factorial number system; doubles as the key
  /// and pivot order everywhere (rank order = lex order on one-line words).
  std::uint64_t rank() const {
    if (size() > 20) throw std::overflow_error("rank overflow for n > 20");
    std::uint64_t r = 0;
    for (int i = 0; i < size(); ++i) {
      int smaller = 0;
      for (int j = i + 1; j < size(); ++j) smaller += v_[j] < v_[i];
      r = r * (size() - i) + smaller;
    }
    return r;
  }

  static Perm unrank(std::uint64_t r, int n) {
    std::vector<int> code(n, 0);
    for (int i = n - 1; i >= 0; --i) {
      code[i] = static_cast<int>(r % (n - i));
      r /= (n - i);
    }
    std::vector<int> avail(n);
    std::iota(avail.begin(), avail.end(), 1);
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) {
      v[i] = avail[code[i]];
      avail.erase(avail.begin() + code[i]);
    }
    Perm p;
    p.v_ = std::move(v);
    return p;
  }

  std::vector<int> descents() const {
    std::vector<int> d;
    for (int i = 1; i < size(); ++i)
      if (v_[i - 1] > v_[i]) d.push_back(i);
    return d;
  }
  int des() const { return static_cast<int>(descents().size()); }
  int maj() const {
    int m = 0;
    for (int i : descents()) m += i;
    return m;
  }

  bool operator==(const Perm& o) const { return v_ == o.v_; }
  bool operator<(const Perm& o) const { return v_ < o.v_; }

  /// "3142" for n <= 9, "[3,1,4,2]" otherwise.
  std::string str() const {
    if (size() <= 9) {
      std::string s;
      for (int x : v_) s += static_cast<char>('0' + x);
      return s;
    }
    std::string s = "[";
    for (int i = 0; i < size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v_[i]);
    }
    return s + "]";
  }

  static Perm parse(const std::string& s);

 private:
  std::vector<int> v_;
  mutable std::vector<int> inv_;
};

/// Composition of n, encoding a descent subset of {1..n-1}.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts) : p_(std::move(parts)) {
    for (int x : p_)
      if (x <= 0) throw std::invalid_argument("composition parts must be > 0");
  }

  static Composition from_descents(int n, const std::vector<int>& des) {
    std::vector<int> parts;
    int prev = 0;
    for (int d : des) {
      if (d <= prev || d >= n) throw std::invalid_argument("bad descent set");
      parts.push_back(d - prev);
      prev = d;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
  }

  const std::vector<int>& parts() const { return p_; }
  int length() const { return static_cast<int>(p_.size()); }
  int weight() const { return std::accumulate(p_.begin(), p_.end(), 0); }

  std::vector<int> descent_set() const {
    std::vector<int> d;
    int s = 0;
    for (size_t i = 0; i + 1 < p_.size(); ++i) {
      s += p_[i];
      d.push_back(s);
    }
    return d;
  }

  bool operator==(const Composition& o) const { return p_ == o.p_; }
  bool operator<(const Composition& o) const { return p_ < o.p_; }

  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < p_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(p_[i]);
    }
    return s + ")";
  }

  static Composition parse(const std::string& s);

 private:
  std::vector<int> p_;
};

/// Maximal runs of a permutation: breakpoints 1 = i_0 < ... < i_{p+1} = n
/// with each restriction monotone and no two consecutive runs merging.
struct RunDecomposition {
  std::vector<int> breakpoints;     // 1-based, first = 1, last = n
  std::vector<char> directions;     // '+' increasing / '-' decreasing per run
};

/// Sign sequence with its minimal decomposition into stacks.
class SignSequence {
 public:
  explicit SignSequence(std::vector<int> signs) : s_(std::move(signs)) {
    for (int x : s_)
      if (x != 1 && x != -1) throw std::invalid_argument("signs must be +-1");
    if (s_.empty()) throw std::invalid_argument("empty sign sequence");
  }

  static SignSequence parse(const std::string& txt) {
    std::vector<int> s;
    for (size_t i = 0; i < txt.size();) {
      if (txt[i] == '+') { s.push_back(1); ++i; }
      else if (txt[i] == '-') { s.push_back(-1); ++i; }
      else if (txt.compare(i, 3, "−") == 0) { s.push_back(-1); i += 3; }
      else throw std::invalid_argument("bad sign character");
    }
    return SignSequence(std::move(s));
  }

  int size() const { return static_cast<int>(s_.size()); }
  const std::vector<int>& signs() const { return s_; }

  /// Minimal decomposition into maximal stacks of identical signs.
  std::vector<std::pair<int, int>> stacks() const {
    std::vector<std::pair<int, int>> st;
    for (int x : s_) {
      if (!st.empty() && st.back().first == x) st.back().second++;
      else st.push_back({x, 1});
    }
    return st;
  }

  /// The composition I of n+1 with Des(I) = positions of minus signs.
  Composition composition() const {
    std::vector<int> des;
    for (int i = 0; i < size(); ++i)
      if (s_[i] == -1) des.push_back(i + 1);
    return Composition::from_descents(size() + 1, des);
  }

  std::string str() const {
    std::string t;
    for (int x : s_) t += (x == 1) ? '+' : '-';
    return t;
  }

 private:
  std::vector<int> s_;
};

/// std(w): the unique permutation with the same inversions as w.
/// Ties between equal letters are broken by position.
inline Perm standardize(const Word& w) {
  int n = static_cast<int>(w.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int i, int j) { return w[i] < w[j]; });
  std::vector<int> v(n);
  for (int r = 0; r < n; ++r) v[idx[r]] = r + 1;
  return Perm(std::move(v));
}

inline Composition descent_composition(const Perm& s) {
  if (s.size() == 0)
    throw std::invalid_argument("size 0 has no composition");
  return Composition::from_descents(s.size(), s.descents());
}

inline RunDecomposition runs(const Perm& s) {
  if (s.size() == 0) throw std::invalid_argument("runs of empty permutation");
  RunDecomposition rd;
  rd.breakpoints.push_back(1);
  if (s.size() == 1) return rd;  // single point, no runs
  int i = 1;
  while (i < s.size()) {
    bool inc = s(i) < s(i + 1);
    int j = i + 1;
    while (j < s.size() && (s(j) < s(j + 1)) == inc) ++j;
    rd.breakpoints.push_back(j);
    rd.directions.push_back(inc ? '+' : '-');
    i = j;
  }
  return rd;
}

/// All words gamma = uv with std(u) = a and std(v) = b, as permutations of
/// size |a|+|b|; the support of the convolution G_a G_b.
inline std::vector<Perm> convolution_support(const Perm& a, const Perm& b) {
  int m = a.size(), n = b.size(), N = m + n;
  std::vector<Perm> out;
  std::vector<int> comb(m);
  std::iota(comb.begin(), comb.end(), 0);
  auto emit = [&]() {
    std::vector<bool> used(N, false);
    std::vector<int> uvals, vvals;
    for (int c : comb) used[c] = true;
    for (int x = 0; x < N; ++x) (used[x] ? uvals : vvals).push_back(x + 1);
    std::vector<int> w(N);
    for (int i = 0; i < m; ++i) w[i] = uvals[a(i + 1) - 1];
    for (int i = 0; i < n; ++i) w[m + i] = vvals[b(i + 1) - 1];
    out.push_back(Perm(std::move(w)));
  };
  if (m == 0 || n == 0) {
    std::vector<int> w;
    for (int i = 1; i <= m; ++i) w.push_back(a(i));
    for (int i = 1; i <= n; ++i) w.push_back(b(i));
    out.push_back(Perm(std::move(w)));
    return out;
  }
  // iterate over m-subsets of {0..N-1}
  while (true) {
    emit();
    int k = m - 1;
    while (k >= 0 && comb[k] == N - m + k) --k;
    if (k < 0) break;
    ++comb[k];
    for (int j = k + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// All interleavings of two letter-disjoint words.
inline std::vector<Word> shuffle(const Word& u, const Word& v) {
  for (int x : u)
    for (int y : v)
      if (x == y)
        throw std::invalid_argument("shuffle requires disjoint alphabets");
  std::vector<Word> out;
  Word cur;
  auto rec = [&](auto&& self, size_t i, size_t j) -> void {
    if (i == u.size() && j == v.size()) {
      out.push_back(cur);
      return;
    }
    if (i < u.size()) {
      cur.push_back(u[i]);
      self(self, i + 1, j);
      cur.pop_back();
    }
    if (j < v.size()) {
      cur.push_back(v[j]);
      self(self, i, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

inline Perm Perm::parse(const std::string& s) {
  std::vector<int> v;
  if (!s.empty() && s[0] == '[') {
    size_t i = 1;
    while (i < s.size() && s[i] != ']') {
      size_t j = i;
      while (j < s.size() && s[j] != ',' && s[j] != ']') ++j;
      v.push_back(std::stoi(s.substr(i, j - i)));
      i = (j < s.size() && s[j] == ',') ? j + 1 : j;
    }
  } else {
    for (char c : s) {
      if (c < '1' || c > '9')
        throw std::invalid_argument("digit-string parsing needs 1..9");
      v.push_back(c - '0');
    }
  }
  return Perm(std::move(v));
}

inline Composition Composition::parse(const std::string& s) {
  std::vector<int> p;
  size_t i = 0;
  if (i < s.size() && s[i] == '(') ++i;
  while (i < s.size() && s[i] != ')') {
    size_t j = i;
    while (j < s.size() && s[j] != ',' && s[j] != ')') ++j;
    p.push_back(std::stoi(std::string(s.substr(i, j - i))));
    i = (j < s.size() && s[j] == ',') ? j + 1 : j;
  }
  return Composition(std::move(p));
}

/// All permutations of S_n in lex (= rank) order; memoized per n.
inline const std::vector<Perm>& all_perms(int n) {
  static std::map<int, std::vector<Perm>> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  std::vector<Perm> v;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    v.push_back(Perm(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return memo.emplace(n, std::move(v)).first->second;
}

}  // namespace lieforge

#endif
