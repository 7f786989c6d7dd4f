#pragma once

// Test-only brute-force model of a free graded Lie algebra slot: the span of
// ALL bracketings of the given weight/degree/character modulo the ideal
// generated by graded antisymmetry and graded Jacobi, placed in every context.
// Shares nothing with sht::free_lie beyond the rational type.

#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "oracles/naive_linalg.hpp"

namespace oracle {

struct LetterSpec {
  int degree;           // reduced degree
  std::vector<long> ch; // character (already reduced; no torsion in oracle use)
};

struct Tree {
  int leaf = -1;
  std::shared_ptr<Tree> l, r;
};
using TreeP = std::shared_ptr<Tree>;

inline TreeP mk_leaf(int g) { auto t = std::make_shared<Tree>(); t->leaf = g; return t; }
inline TreeP mk(TreeP a, TreeP b) { auto t = std::make_shared<Tree>(); t->l = a; t->r = b; return t; }

inline std::string key(const TreeP& t) {
  if (t->leaf >= 0) return std::to_string(t->leaf);
  return "[" + key(t->l) + "," + key(t->r) + "]";
}

inline int tdeg(const TreeP& t, const std::vector<LetterSpec>& g) {
  return t->leaf >= 0 ? g[t->leaf].degree : tdeg(t->l, g) + tdeg(t->r, g);
}

struct BruteSlot {
  std::vector<TreeP> trees;
  std::map<std::string, std::size_t> index;
  Dense relations;

  std::size_t word_count() const { return trees.size(); }

  std::size_t dim() const {
    if (trees.empty()) return 0;
    return trees.size() - naive_rank(relations);
  }

  /// True iff the vector (over trees) lies in the relation ideal.
  bool vanishes(const std::vector<sht::Rational>& v) const {
    Dense aug = relations;
    aug.push_back(v);
    return naive_rank(aug) == naive_rank(relations);
  }

  std::vector<sht::Rational> vector_of(const std::string& k, sht::Rational c = 1) const {
    std::vector<sht::Rational> v(trees.size());
    v.at(index.at(k)) += c;
    return v;
  }
};

/// All trees with `weight` leaves whose letters satisfy the degree and
/// character constraints.
inline BruteSlot brute_slot(const std::vector<LetterSpec>& g, int degree, int weight, const std::vector<long>& ch) {
  std::function<std::vector<TreeP>(int)> shapes = [&](int w) {
    std::vector<TreeP> out;
    if (w == 1) {
      out.push_back(mk_leaf(-2));  // placeholder leaf
      return out;
    }
    for (int k = 1; k < w; ++k)
      for (auto& a : shapes(k))
        for (auto& b : shapes(w - k)) out.push_back(mk(a, b));
    return out;
  };
  std::function<int(const TreeP&)> leaves = [&](const TreeP& t) { return t->leaf != -1 ? 1 : leaves(t->l) + leaves(t->r); };
  std::function<TreeP(const TreeP&, const std::vector<int>&, std::size_t&)> fill =
      [&](const TreeP& t, const std::vector<int>& word, std::size_t& pos) -> TreeP {
    if (t->leaf != -1) return mk_leaf(word[pos++]);
    auto a = fill(t->l, word, pos);
    auto b = fill(t->r, word, pos);
    return mk(a, b);
  };

  BruteSlot s;
  std::vector<int> word(weight);
  const int n = static_cast<int>(g.size());
  std::function<void(int, int, std::vector<long>)> words = [&](int i, int d, std::vector<long> c) {
    if (i == weight) {
      if (d != degree || c != ch) return;
      for (auto& sh : shapes(weight)) {
        std::size_t pos = 0;
        TreeP t = fill(sh, word, pos);
        std::string k = key(t);
        if (s.index.emplace(k, s.trees.size()).second) s.trees.push_back(t);
      }
      return;
    }
    for (int a = 0; a < n; ++a) {
      if (d + g[a].degree > degree) continue;
      word[i] = a;
      std::vector<long> c2 = c;
      for (std::size_t k = 0; k < c2.size(); ++k) c2[k] += g[a].ch[k];
      words(i + 1, d + g[a].degree, c2);
    }
  };
  words(0, 0, std::vector<long>(ch.size(), 0));

  // Relations in every context: rebuild the tree with the subtree at a
  // given path replaced.
  std::function<void(const TreeP&, const std::function<TreeP(TreeP)>&)> visit =
      [&](const TreeP& node, const std::function<TreeP(TreeP)>& ctx) {
        if (node->leaf >= 0) return;
        const TreeP& A = node->l;
        const TreeP& B = node->r;
        int sAB = ((tdeg(A, g) & 1) && (tdeg(B, g) & 1)) ? -1 : 1;
        {
          std::vector<sht::Rational> v(s.trees.size());
          v[s.index.at(key(ctx(mk(A, B))))] += 1;
          v[s.index.at(key(ctx(mk(B, A))))] += sAB;
          s.relations.push_back(v);
        }
        if (B->leaf < 0) {
          const TreeP& Bb = B->l;
          const TreeP& C = B->r;
          int sAb = ((tdeg(A, g) & 1) && (tdeg(Bb, g) & 1)) ? -1 : 1;
          std::vector<sht::Rational> v(s.trees.size());
          v[s.index.at(key(ctx(mk(A, mk(Bb, C)))))] += 1;
          v[s.index.at(key(ctx(mk(mk(A, Bb), C))))] -= 1;
          v[s.index.at(key(ctx(mk(Bb, mk(A, C)))))] -= sAb;
          s.relations.push_back(v);
        }
        visit(A, [&, B](TreeP x) { return ctx(mk(x, B)); });
        visit(B, [&, A](TreeP x) { return ctx(mk(A, x)); });
      };
  for (const auto& t : std::vector<TreeP>(s.trees)) visit(t, [](TreeP x) { return x; });
  return s;
}

inline long mobius(long n) {
  long result = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

/// Witt's formula for the multidegree component (counts per generator) of a
/// free Lie algebra on even generators.
inline long witt(const std::vector<int>& counts) {
  int n = std::accumulate(counts.begin(), counts.end(), 0);
  if (n == 0) return 0;
  int g = 0;
  for (int c : counts) g = std::gcd(g, c);
  auto fact = [](int k) { sht::Integer f = 1; for (int i = 2; i <= k; ++i) f *= i; return f; };
  sht::Integer sum = 0;
  for (int d = 1; d <= g; ++d) {
    if (g % d) continue;
    sht::Integer multinom = fact(n / d);
    for (int c : counts) multinom /= fact(c / d);
    sum += mobius(d) * multinom;
  }
  return sht::Integer(sum / n).get_si();
}

}  // namespace oracle
