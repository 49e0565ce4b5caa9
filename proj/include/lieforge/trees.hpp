#ifndef LIEFORGE_TREES_HPP
#define LIEFORGE_TREES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "lieforge/rational.hpp"

namespace lieforge {

/// Incomplete binary tree (possibly empty); immutable and cheaply shared.
/// Serialization: "_" empty, "(L R)" node, "o" abbreviates "(_ _)".
class BinaryTree {
 public:
  BinaryTree() = default;  // empty tree

  BinaryTree(const BinaryTree& l, const BinaryTree& r) {
    auto node = std::make_shared<Node>();
    node->left = l;
    node->right = r;
    node->size = 1 + l.size() + r.size();
    node->repr = (l.empty() && r.empty()) ? "o"
                                          : "(" + l.str() + " " + r.str() + ")";
    n_ = std::move(node);
  }

  static BinaryTree leaf() { return BinaryTree(BinaryTree(), BinaryTree()); }

  bool empty() const { return n_ == nullptr; }
  int size() const { return n_ ? n_->size : 0; }
  const BinaryTree& left() const { return n_->left; }
  const BinaryTree& right() const { return n_->right; }
  const std::string& str() const {
    static const std::string kEmpty = "_";
    return n_ ? n_->repr : kEmpty;
  }

  bool operator==(const BinaryTree& o) const {
    if (n_ == o.n_) return true;
    return str() == o.str();
  }
  bool operator<(const BinaryTree& o) const { return str() < o.str(); }

  /// (left edges, right edges); an edge to a nonempty child.
  std::pair<int, int> edge_counts() const {
    if (empty()) return {0, 0};
    auto [ll, lr] = left().edge_counts();
    auto [rl, rr] = right().edge_counts();
    return {ll + rl + !left().empty(), lr + rr + !right().empty()};
  }
  int right_edges() const { return edge_counts().second; }
  int left_edges() const { return edge_counts().first; }

  static BinaryTree parse(const std::string& s) {
    size_t pos = 0;
    BinaryTree t = parse_at(s, pos);
    if (pos != s.size()) throw std::invalid_argument("trailing tree input");
    return t;
  }

  static BinaryTree left_comb(int n) {
    BinaryTree t;
    for (int i = 0; i < n; ++i) t = BinaryTree(t, BinaryTree());
    return t;
  }
  static BinaryTree right_comb(int n) {
    BinaryTree t;
    for (int i = 0; i < n; ++i) t = BinaryTree(BinaryTree(), t);
    return t;
  }

 private:
  struct Node {
    BinaryTree left, right;
    int size = 0;
    std::string repr;
  };

  static BinaryTree parse_at(const std::string& s, size_t& pos) {
    if (pos >= s.size()) throw std::invalid_argument("truncated tree");
    if (s[pos] == '_') { ++pos; return BinaryTree(); }
    if (s[pos] == 'o') { ++pos; return leaf(); }
    if (s[pos] != '(') throw std::invalid_argument("bad tree syntax");
    ++pos;
    BinaryTree l = parse_at(s, pos);
    while (pos < s.size() && s[pos] == ' ') ++pos;
    BinaryTree r = parse_at(s, pos);
    if (pos >= s.size() || s[pos] != ')')
      throw std::invalid_argument("unbalanced tree");
    ++pos;
    return BinaryTree(l, r);
  }

  std::shared_ptr<const Node> n_;
};

/// All binary trees with n nodes, sorted by serialization; memoized.
inline const std::vector<BinaryTree>& all_binary_trees(int n) {
  static std::map<int, std::vector<BinaryTree>> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  std::vector<BinaryTree> v;
  if (n == 0) {
    v.push_back(BinaryTree());
  } else {
    for (int k = 0; k < n; ++k)
      for (const BinaryTree& l : all_binary_trees(k))
        for (const BinaryTree& r : all_binary_trees(n - 1 - k))
          v.push_back(BinaryTree(l, r));
  }
  std::sort(v.begin(), v.end());
  return memo.emplace(n, std::move(v)).first->second;
}

/// Hook-length count: the number of permutations of S_n whose decreasing
/// tree has shape t (t with n nodes).
inline Int hook_count(const BinaryTree& t) {
  if (t.empty()) return 1;
  Int prod = 1;
  auto rec = [&](auto&& self, const BinaryTree& u) -> void {
    if (u.empty()) return;
    prod *= u.size();
    self(self, u.left());
    self(self, u.right());
  };
  rec(rec, t);
  return factorial(t.size()) / prod;
}

/// Plane rooted tree (never empty). Serialization "[c1,...,ck]".
class PlaneTree {
 public:
  PlaneTree() {
    auto node = std::make_shared<Node>();
    node->size = 1;
    node->repr = "[]";
    n_ = std::move(node);
  }
  explicit PlaneTree(std::vector<PlaneTree> children) {
    auto node = std::make_shared<Node>();
    node->ch = std::move(children);
    node->size = 1;
    node->repr = "[";
    for (size_t i = 0; i < node->ch.size(); ++i) {
      node->size += node->ch[i].size();
      if (i) node->repr += ",";
      node->repr += node->ch[i].str();
    }
    node->repr += "]";
    n_ = std::move(node);
  }

  int size() const { return n_->size; }
  const std::vector<PlaneTree>& children() const { return n_->ch; }
  const std::string& str() const { return n_->repr; }

  bool operator==(const PlaneTree& o) const {
    return n_ == o.n_ || str() == o.str();
  }
  bool operator<(const PlaneTree& o) const { return str() < o.str(); }

  bool is_leaf() const { return n_->ch.empty(); }

  static PlaneTree chain(int n) {
    PlaneTree t;
    for (int i = 1; i < n; ++i) t = PlaneTree({t});
    return t;
  }
  static PlaneTree corolla(int n) {
    std::vector<PlaneTree> ch(n - 1);
    return n == 1 ? PlaneTree() : PlaneTree(ch);
  }

  static PlaneTree parse(const std::string& s) {
    size_t pos = 0;
    PlaneTree t = parse_at(s, pos);
    if (pos != s.size()) throw std::invalid_argument("trailing tree input");
    return t;
  }

  int internal_count() const {
    int c = 0;
    auto rec = [&](auto&& self, const PlaneTree& t) -> void {
      if (!t.is_leaf()) ++c;
      for (const PlaneTree& u : t.children()) self(self, u);
    };
    rec(rec, *this);
    return c;
  }

 private:
  struct Node {
    std::vector<PlaneTree> ch;
    int size = 0;
    std::string repr;
  };

  static PlaneTree parse_at(const std::string& s, size_t& pos) {
    if (pos >= s.size() || s[pos] != '[')
      throw std::invalid_argument("bad plane tree syntax");
    ++pos;
    std::vector<PlaneTree> ch;
    while (pos < s.size() && s[pos] != ']') {
      ch.push_back(parse_at(s, pos));
      if (pos < s.size() && s[pos] == ',') ++pos;
    }
    if (pos >= s.size()) throw std::invalid_argument("unbalanced plane tree");
    ++pos;
    return ch.empty() ? PlaneTree() : PlaneTree(std::move(ch));
  }

  std::shared_ptr<const Node> n_;
};

/// Butcher product: graft t1 as the new leftmost child of t2's root.
inline PlaneTree butcher(const PlaneTree& t1, const PlaneTree& t2) {
  std::vector<PlaneTree> ch;
  ch.push_back(t1);
  for (const PlaneTree& c : t2.children()) ch.push_back(c);
  return PlaneTree(std::move(ch));
}

/// Root above a forest; B(t) for a single tree makes a chain link.
inline PlaneTree root_over(const std::vector<PlaneTree>& forest) {
  return forest.empty() ? PlaneTree() : PlaneTree(forest);
}

/// Knuth rotation K: plane trees with n vertices -> binary trees with n-1
/// nodes, K(t1 => t2) = K(t1) ^ K(t2).
inline BinaryTree knuth(const PlaneTree& t) {
  if (t.is_leaf()) return BinaryTree();
  // t = t1 => t2 with t1 the leftmost subtree of the root
  const PlaneTree& t1 = t.children().front();
  std::vector<PlaneTree> rest(t.children().begin() + 1, t.children().end());
  PlaneTree t2 = rest.empty() ? PlaneTree() : PlaneTree(std::move(rest));
  return BinaryTree(knuth(t1), knuth(t2));
}

inline PlaneTree knuth_inverse(const BinaryTree& b) {
  if (b.empty()) return PlaneTree();
  return butcher(knuth_inverse(b.left()), knuth_inverse(b.right()));
}

inline const std::vector<PlaneTree>& all_plane_trees(int n) {
  static std::map<int, std::vector<PlaneTree>> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  std::vector<PlaneTree> v;
  for (const BinaryTree& b : all_binary_trees(n - 1))
    v.push_back(knuth_inverse(b));
  std::sort(v.begin(), v.end());
  return memo.emplace(n, std::move(v)).first->second;
}

/// Non-plane rooted tree in canonical form (children sorted by repr).
class RootedTree {
 public:
  RootedTree() {
    auto node = std::make_shared<Node>();
    node->size = 1;
    node->repr = "[]";
    n_ = std::move(node);
  }
  explicit RootedTree(std::vector<RootedTree> children) {
    std::sort(children.begin(), children.end(),
              [](const RootedTree& a, const RootedTree& b) {
                return a.str() < b.str();
              });
    auto node = std::make_shared<Node>();
    node->ch = std::move(children);
    node->size = 1;
    node->repr = "[";
    for (size_t i = 0; i < node->ch.size(); ++i) {
      node->size += node->ch[i].size();
      if (i) node->repr += ",";
      node->repr += node->ch[i].str();
    }
    node->repr += "]";
    n_ = std::move(node);
  }

  int size() const { return n_->size; }
  const std::vector<RootedTree>& children() const { return n_->ch; }
  const std::string& str() const { return n_->repr; }
  bool operator==(const RootedTree& o) const { return str() == o.str(); }
  bool operator<(const RootedTree& o) const { return str() < o.str(); }

 private:
  struct Node {
    std::vector<RootedTree> ch;
    int size = 0;
    std::string repr;
  };
  std::shared_ptr<const Node> n_;
};

inline RootedTree forget_planarity(const PlaneTree& t) {
  std::vector<RootedTree> ch;
  for (const PlaneTree& c : t.children()) ch.push_back(forget_planarity(c));
  return ch.empty() ? RootedTree() : RootedTree(std::move(ch));
}

/// |Aut(tau)| = product over vertices of the factorials of multiplicities of
/// identical child subtrees.
inline Int aut_order(const RootedTree& t) {
  Int a = 1;
  size_t i = 0;
  const auto& ch = t.children();
  while (i < ch.size()) {
    size_t j = i;
    while (j < ch.size() && ch[j] == ch[i]) ++j;
    a *= factorial(static_cast<int>(j - i));
    i = j;
  }
  for (const RootedTree& c : ch) a *= aut_order(c);
  return a;
}

inline const std::vector<RootedTree>& all_rooted_trees(int n) {
  static std::map<int, std::vector<RootedTree>> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  std::vector<RootedTree> v;
  for (const PlaneTree& t : all_plane_trees(n)) {
    RootedTree r = forget_planarity(t);
    if (std::find(v.begin(), v.end(), r) == v.end()) v.push_back(r);
  }
  std::sort(v.begin(), v.end());
  return memo.emplace(n, std::move(v)).first->second;
}

/// Grafting of the root of t1 on all nodes of t2 (non-plane); the
/// Chapoton-Livernet preLie product support, as a multiset.
inline std::vector<RootedTree> rooted_graftings(const RootedTree& t1,
                                                const RootedTree& t2) {
  std::vector<RootedTree> out;
  // graft at root
  {
    std::vector<RootedTree> ch = t2.children();
    ch.push_back(t1);
    out.push_back(RootedTree(std::move(ch)));
  }
  for (size_t i = 0; i < t2.children().size(); ++i) {
    for (const RootedTree& g : rooted_graftings(t1, t2.children()[i])) {
      std::vector<RootedTree> ch = t2.children();
      ch[i] = g;
      out.push_back(RootedTree(std::move(ch)));
    }
  }
  return out;
}

/// Labelled binary tree used for decreasing trees.
struct LabTree {
  int label = 0;
  std::shared_ptr<const LabTree> left, right;

  BinaryTree shape() const {
    BinaryTree l = left ? left->shape() : BinaryTree();
    BinaryTree r = right ? right->shape() : BinaryTree();
    return BinaryTree(l, r);
  }
  void infix(std::vector<int>& out) const {
    if (left) left->infix(out);
    out.push_back(label);
    if (right) right->infix(out);
  }
};

/// Decreasing tree of a word with distinct letters: root is the maximum,
/// subtrees are the decreasing trees of the flanks.
inline std::shared_ptr<const LabTree> decreasing_tree(const Word& w) {
  if (w.empty()) return nullptr;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] == w[j])
        throw std::invalid_argument("decreasing tree needs distinct letters");
  auto rec = [&](auto&& self, size_t lo, size_t hi)
      -> std::shared_ptr<const LabTree> {
    if (lo >= hi) return nullptr;
    size_t mx = lo;
    for (size_t i = lo + 1; i < hi; ++i)
      if (w[i] > w[mx]) mx = i;
    auto node = std::make_shared<LabTree>();
    node->label = w[mx];
    node->left = self(self, lo, mx);
    node->right = self(self, mx + 1, hi);
    return node;
  };
  return rec(rec, 0, w.size());
}

inline BinaryTree dt_shape(const Word& w) {
  auto t = decreasing_tree(w);
  return t ? t->shape() : BinaryTree();
}

/// Tamari covers on plane trees: cut the leftmost subtree of a vertex x
/// (neither root nor leaf) and graft it back on the left of x's parent.
inline std::vector<PlaneTree> tamari_covers(const PlaneTree& t) {
  std::vector<PlaneTree> out;
  auto covers = [&](auto&& self, const PlaneTree& u) -> std::vector<PlaneTree> {
    std::vector<PlaneTree> res;
    const auto& ch = u.children();
    for (size_t i = 0; i < ch.size(); ++i) {
      // x = ch[i]: eligible if not a leaf (x is not the root of t here)
      if (!ch[i].is_leaf()) {
        std::vector<PlaneTree> nch;
        for (size_t j = 0; j < ch.size(); ++j) {
          if (j == i) {
            nch.push_back(ch[i].children().front());  // grafted left of x
            std::vector<PlaneTree> xch(ch[i].children().begin() + 1,
                                       ch[i].children().end());
            nch.push_back(xch.empty() ? PlaneTree() : PlaneTree(std::move(xch)));
          } else {
            nch.push_back(ch[j]);
          }
        }
        res.push_back(PlaneTree(std::move(nch)));
      }
      // recurse into child i
      for (const PlaneTree& rewritten : self(self, ch[i])) {
        std::vector<PlaneTree> nch = ch;
        nch[i] = rewritten;
        res.push_back(PlaneTree(std::move(nch)));
      }
    }
    return res;
  };
  out = covers(covers, t);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// The Tamari lattice on plane trees of size n: covers, order, Moebius.
/// Minimum is the chain, maximum the corolla. Built once per size.
class TamariLattice {
 public:
  explicit TamariLattice(int n) : n_(n), trees_(all_plane_trees(n)) {
    int m = static_cast<int>(trees_.size());
    for (int i = 0; i < m; ++i) index_[trees_[i].str()] = i;
    covers_.resize(m);
    for (int i = 0; i < m; ++i)
      for (const PlaneTree& c : tamari_covers(trees_[i]))
        covers_[i].push_back(index_.at(c.str()));
    // reachability: leq_[i] = set of j with i <= j
    leq_.assign(m, std::vector<bool>(m, false));
    for (int i = m - 1; i >= 0; --i) {
      leq_[i][i] = true;
      for (int c : covers_[i])
        for (int j = 0; j < m; ++j)
          if (leq_[c][j]) leq_[i][j] = true;
    }
    // moebius: mu(u,t) for u <= t, by downward recursion on u
    mu_.assign(m, std::vector<long>(m, 0));
    for (int t = 0; t < m; ++t) {
      mu_[t][t] = 1;
      // process u in decreasing order of interval size; simple fixpoint:
      // mu(u,t) = -sum_{u < v <= t} mu(v,t)
      std::vector<int> below;
      for (int u = 0; u < m; ++u)
        if (leq_[u][t] && u != t) below.push_back(u);
      // order: by number of elements in [u,t] ascending ensures v computed
      std::sort(below.begin(), below.end(), [&](int a, int b) {
        return interval_size(a, t) < interval_size(b, t);
      });
      for (int u : below) {
        long s = 0;
        for (int v = 0; v < m; ++v)
          if (v != u && leq_[u][v] && leq_[v][t]) s += mu_[v][t];
        mu_[u][t] = -s;
      }
    }
  }

  int n() const { return n_; }
  const std::vector<PlaneTree>& trees() const { return trees_; }
  int index(const PlaneTree& t) const { return index_.at(t.str()); }

  bool leq(int u, int t) const { return leq_[u][t]; }
  bool leq(const PlaneTree& u, const PlaneTree& t) const {
    if (u.size() != t.size() || u.size() != n_)
      throw std::invalid_argument("size mismatch in Tamari comparison");
    return leq_[index(u)][index(t)];
  }
  long moebius(int u, int t) const {
    if (!leq_[u][t]) throw std::invalid_argument("moebius of incomparable pair");
    return mu_[u][t];
  }
  long moebius(const PlaneTree& u, const PlaneTree& t) const {
    return moebius(index(u), index(t));
  }
  std::vector<int> upper_set(int t) const {
    std::vector<int> r;
    for (size_t j = 0; j < trees_.size(); ++j)
      if (leq_[t][j]) r.push_back(static_cast<int>(j));
    return r;
  }
  std::vector<int> lower_set(int t) const {
    std::vector<int> r;
    for (size_t j = 0; j < trees_.size(); ++j)
      if (leq_[j][t]) r.push_back(static_cast<int>(j));
    return r;
  }
  std::vector<int> interval(int u, int t) const {
    std::vector<int> r;
    for (size_t j = 0; j < trees_.size(); ++j)
      if (leq_[u][j] && leq_[j][t]) r.push_back(static_cast<int>(j));
    return r;
  }
  const std::vector<std::vector<int>>& covers() const { return covers_; }

  int interval_size(int u, int t) const {
    int c = 0;
    for (size_t j = 0; j < trees_.size(); ++j)
      if (leq_[u][j] && leq_[j][t]) ++c;
    return c;
  }

 private:
  int n_;
  std::vector<PlaneTree> trees_;
  std::map<std::string, int> index_;
  std::vector<std::vector<int>> covers_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<long>> mu_;
};

inline const TamariLattice& tamari(int n) {
  static std::map<int, std::unique_ptr<TamariLattice>> memo;
  auto it = memo.find(n);
  if (it == memo.end())
    it = memo.emplace(n, std::make_unique<TamariLattice>(n)).first;
  return *it->second;
}

/// Tamari order transported to binary trees (size m <-> plane trees m+1).
inline bool tamari_leq_binary(const BinaryTree& u, const BinaryTree& t) {
  if (u.size() != t.size())
    throw std::invalid_argument("size mismatch in Tamari comparison");
  const TamariLattice& L = tamari(u.size() + 1);
  return L.leq(knuth_inverse(u), knuth_inverse(t));
}

inline long tamari_moebius_binary(const BinaryTree& u, const BinaryTree& t) {
  const TamariLattice& L = tamari(u.size() + 1);
  return L.moebius(knuth_inverse(u), knuth_inverse(t));
}

/// Canonical labelling: label of a vertex = size of its subtree + number of
/// vertices strictly to its left; postfix traversal reads the identity.
/// Returns labels in postfix order... by construction postfix order is
/// 1..n, so instead we return, for each vertex in a fixed traversal
/// (preorder), its canonical label.
inline std::vector<int> canonical_labelling_preorder(const PlaneTree& t) {
  std::vector<int> out;
  auto rec = [&](auto&& self, const PlaneTree& u, int left) -> void {
    out.push_back(u.size() + left);
    int off = left;
    for (const PlaneTree& c : u.children()) {
      self(self, c, off);
      off += c.size();
    }
  };
  rec(rec, t, 0);
  return out;
}

}  // namespace lieforge

#endif
