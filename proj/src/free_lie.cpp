#include "sht/free_lie.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sht/error.hpp"

namespace sht {

BracketWord BracketWord::leaf(const GeneratorSet& g, std::size_t generator) {
  if (generator >= g.generators.size()) throw Error(ErrorCode::OutOfRange, "generator index out of range");
  auto n = std::make_shared<Node>();
  const Generator& gen = g.generators[generator];
  n->generator = static_cast<int>(generator);
  n->degree = gen.reduced_degree;
  n->weight = 1;
  n->character = gen.character.empty() ? g.lattice.zero() : gen.character;
  return BracketWord(std::move(n));
}

BracketWord BracketWord::bracket(const BracketWord& a, const BracketWord& b) {
  auto n = std::make_shared<Node>();
  n->left = a.node_;
  n->right = b.node_;
  n->degree = a.reduced_degree() + b.reduced_degree();
  n->weight = a.weight() + b.weight();
  n->character = a.character();
  for (std::size_t k = 0; k < n->character.size(); ++k) n->character[k] += b.character()[k];
  return BracketWord(std::move(n));
}

std::vector<int> BracketWord::letters() const {
  if (is_leaf()) return {node_->generator};
  auto l = left().letters();
  auto r = right().letters();
  l.insert(l.end(), r.begin(), r.end());
  return l;
}

std::string BracketWord::to_string(const GeneratorSet& g) const {
  if (is_leaf()) return g.generators[generator()].id;
  return "[" + left().to_string(g) + "," + right().to_string(g) + "]";
}

bool operator==(const BracketWord& a, const BracketWord& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() || b.is_leaf()) return a.is_leaf() && b.is_leaf() && a.generator() == b.generator();
  return a.left() == b.left() && a.right() == b.right();
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end())) return false;
  return true;
}

namespace {

void add_term(Polynomial& p, const Word& w, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = p.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) p.erase(it);
  }
}

Polynomial product(const Polynomial& x, const Polynomial& y, const Rational& scale) {
  Polynomial out;
  for (const auto& [u, a] : x)
    for (const auto& [v, b] : y) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      add_term(out, w, scale * a * b);
    }
  return out;
}

// Standard bracketing of a Lyndon word: w = uv with v the longest proper
// Lyndon suffix.
BracketWord standard_bracketing(const GeneratorSet& g, const Word& w) {
  if (w.size() == 1) return BracketWord::leaf(g, static_cast<std::size_t>(w[0]));
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word v(w.begin() + i, w.end());
    if (is_lyndon(v)) {
      Word u(w.begin(), w.begin() + i);
      return BracketWord::bracket(standard_bracketing(g, u), standard_bracketing(g, v));
    }
  }
  throw std::logic_error("standard_bracketing: not a Lyndon word");
}

struct Candidate {
  Word key;  // Lyndon word, or zz for a square
  BracketWord word;
};

}  // namespace

Polynomial super_commutator(const Polynomial& x, int parity_x, const Polynomial& y, int parity_y) {
  Polynomial out = product(x, y, Rational(1));
  Polynomial yx = product(y, x, Rational(-koszul_sign(parity_x, parity_y)));
  for (const auto& [w, c] : yx) add_term(out, w, c);
  return out;
}

std::vector<SlotKey> FreeLieBasis::slots() const {
  std::vector<SlotKey> out;
  for (const auto& [k, s] : slots_) out.push_back(k);
  return out;
}

std::vector<SlotKey> FreeLieBasis::slots_at(int r, int w) const {
  std::vector<SlotKey> out;
  for (const auto& [k, s] : slots_)
    if (k.degree == r && k.weight == w) out.push_back(k);
  return out;
}

const std::vector<BracketWord>& FreeLieBasis::words(const SlotKey& k) const {
  static const std::vector<BracketWord> empty;
  auto it = slots_.find(k);
  return it == slots_.end() ? empty : it->second.words;
}

SlotKey FreeLieBasis::key_of(const BracketWord& w) const {
  return {w.reduced_degree(), w.weight(), gens_.lattice.reduce(w.character())};
}

Polynomial FreeLieBasis::polynomial(const BracketWord& w) const {
  if (w.is_leaf()) return {{Word{static_cast<int>(w.generator())}, Rational(1)}};
  return super_commutator(polynomial(w.left()), w.left().parity(), polynomial(w.right()), w.right().parity());
}

Polynomial FreeLieBasis::polynomial(const LieElement& e) const {
  Polynomial out;
  auto it = slots_.find(e.slot);
  if (it == slots_.end()) return out;
  for (std::size_t i = 0; i < e.coords.size(); ++i) {
    if (is_zero(e.coords[i])) continue;
    for (const auto& [w, c] : it->second.polys[i]) add_term(out, w, c * e.coords[i]);
  }
  return out;
}

Vector FreeLieBasis::coordinates(const SlotKey& k, const Polynomial& f) const {
  auto it = slots_.find(k);
  if (it == slots_.end()) {
    if (!f.empty()) throw Error(ErrorCode::InvalidInput, "polynomial is not a Lie element of an empty slot");
    return {};
  }
  const Slot& s = it->second;
  const std::size_t n = s.words.size();
  Vector c(n);
  for (std::size_t j = 0; j < s.pivot_words.size(); ++j) {
    auto fj = f.find(s.pivot_words[j]);
    if (fj == f.end()) continue;
    for (const auto& [i, v] : s.inverse.row(j)) c[i] += fj->second * v;
  }
  Polynomial check;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_zero(c[i]))
      for (const auto& [w, x] : s.polys[i]) add_term(check, w, c[i] * x);
  if (check != f) throw Error(ErrorCode::InvalidInput, "polynomial is not in the span of the slot basis");
  return c;
}

FreeLieBasis basis(const GeneratorSet& g, int max_r, int max_w) {
  if (max_w < 1) throw Error(ErrorCode::CutoffTooSmall, "max weight must be at least 1");
  std::set<std::string> ids;
  for (const auto& gen : g.generators) {
    if (!ids.insert(gen.id).second) throw Error(ErrorCode::InvalidInput, "duplicate generator id '" + gen.id + "'");
    if (gen.reduced_degree < 0) throw Error(ErrorCode::InvalidInput, "negative reduced degree for '" + gen.id + "'");
  }

  FreeLieBasis b;
  b.gens_ = g;
  b.max_r_ = max_r;
  b.max_w_ = max_w;
  const int n = static_cast<int>(g.generators.size());

  // Lyndon words within the cutoffs by depth-first enumeration; degrees are
  // nonnegative so the bounds prune monotonically.
  std::vector<Word> lyndon;
  Word cur;
  auto dfs = [&](auto&& self, int degree) -> void {
    for (int a = 0; a < n; ++a) {
      int d = degree + g.generators[a].reduced_degree;
      if (d > max_r) continue;
      cur.push_back(a);
      if (is_lyndon(cur)) lyndon.push_back(cur);
      if (static_cast<int>(cur.size()) < max_w) self(self, d);
      cur.pop_back();
    }
  };
  dfs(dfs, 0);

  std::map<SlotKey, std::vector<Candidate>> grouped;
  for (const Word& w : lyndon) {
    BracketWord bw = standard_bracketing(g, w);
    grouped[b.key_of(bw)].push_back({w, bw});
    if (bw.parity() == 1 && 2 * bw.weight() <= max_w && 2 * bw.reduced_degree() <= max_r) {
      Word zz = w;
      zz.insert(zz.end(), w.begin(), w.end());
      BracketWord sq = BracketWord::bracket(bw, bw);
      grouped[b.key_of(sq)].push_back({zz, sq});
    }
  }

  for (auto& [key, cands] : grouped) {
    std::sort(cands.begin(), cands.end(), [](const auto& x, const auto& y) { return x.key < y.key; });
    FreeLieBasis::Slot s;
    std::map<Word, std::size_t> column;
    for (const auto& c : cands) {
      s.words.push_back(c.word);
      s.polys.push_back(b.polynomial(c.word));
      for (const auto& [w, x] : s.polys.back()) column.emplace(w, 0);
    }
    std::vector<Word> col_words;
    for (auto& [w, j] : column) {
      j = col_words.size();
      col_words.push_back(w);
    }
    RationalMatrix m(s.words.size(), col_words.size());
    for (std::size_t i = 0; i < s.polys.size(); ++i)
      for (const auto& [w, x] : s.polys[i]) m.set(i, column[w], x);
    RowEchelon e = rref(m);
    if (e.pivots.size() != s.words.size())
      throw std::logic_error("super-Lyndon words are linearly dependent in slot");
    RationalMatrix square(s.words.size(), s.words.size());
    for (std::size_t i = 0; i < s.words.size(); ++i)
      for (std::size_t j = 0; j < e.pivots.size(); ++j) square.set(i, j, m.at(i, e.pivots[j]));
    // c * square = f_P  =>  c = f_P * square^{-1}
    auto inv = solve(square, RationalMatrix::identity(s.words.size()));
    if (!inv) throw std::logic_error("pivot block is singular");
    s.inverse = std::move(*inv);
    for (auto p : e.pivots) s.pivot_words.push_back(col_words[p]);
    b.slots_.emplace(key, std::move(s));
  }
  return b;
}

LieElement expand(const BracketWord& expr, const FreeLieBasis& b) {
  if (!b.within_cutoffs(expr.reduced_degree(), expr.weight()))
    throw Error(ErrorCode::OutOfRange, "expression " + expr.to_string(b.generators()) + " exceeds the basis cutoffs");
  SlotKey k = b.key_of(expr);
  return {k, b.coordinates(k, b.polynomial(expr))};
}

LieElement bracket(const LieElement& x, const LieElement& y, const FreeLieBasis& b) {
  SlotKey k{x.slot.degree + y.slot.degree, x.slot.weight + y.slot.weight, x.slot.character};
  for (std::size_t i = 0; i < k.character.size(); ++i) k.character[i] += y.slot.character[i];
  k.character = b.reduce(k.character);
  if (!b.within_cutoffs(k.degree, k.weight)) throw Error(ErrorCode::OutOfRange, "bracket exceeds the basis cutoffs");
  Polynomial p = super_commutator(b.polynomial(x), x.slot.degree & 1, b.polynomial(y), y.slot.degree & 1);
  return {k, b.coordinates(k, p)};
}

std::size_t dim(int p, int q, const FreeLieBasis& b) {
  if (q < 1) throw Error(ErrorCode::OutOfRange, "bracket length must be at least 1");
  if (p < q) return 0;
  if (!b.within_cutoffs(p - q, q)) throw Error(ErrorCode::OutOfRange, "L_{p,q} beyond the basis cutoffs");
  std::size_t total = 0;
  for (const auto& k : b.slots_at(p - q, q)) total += b.slot_dim(k);
  return total;
}

std::pair<int, int> translate_index(int m, int i) { return {m + i, i + 1}; }

std::pair<int, int> e1_to_lie_index(int P, int Q) { return {Q - 1, P}; }

}  // namespace sht
