#pragma once

// Free graded Lie (super)algebras over Q.
//
// Generators carry a reduced degree (whose parity drives every Koszul sign)
// and a character. Slots are indexed by (reduced degree r, weight w, character);
// the bigraded piece L_{p,q} of unreduced total degree p and bracket length q
// is the sum over characters of the slots (r = p - q, w = q).
//
// Elements are manipulated through the embedding into the tensor algebra,
// where [a, b] = ab - (-1)^{|a||b|} ba.

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sht/exactlin.hpp"
#include "sht/graded_core.hpp"

namespace sht {

struct Generator {
  std::string id;
  int reduced_degree = 0;
  Character character;  // empty means zero
};

struct GeneratorSet {
  CharacterLattice lattice;
  std::vector<Generator> generators;  // order = Lyndon alphabet order
};

/// Fully parenthesised bracket of generators.
class BracketWord {
 public:
  static BracketWord leaf(const GeneratorSet& g, std::size_t generator);
  static BracketWord bracket(const BracketWord& a, const BracketWord& b);

  bool is_leaf() const { return node_->generator >= 0; }
  std::size_t generator() const { return static_cast<std::size_t>(node_->generator); }
  BracketWord left() const { return BracketWord(node_->left); }
  BracketWord right() const { return BracketWord(node_->right); }

  int reduced_degree() const { return node_->degree; }
  int weight() const { return node_->weight; }
  int parity() const { return node_->degree & 1; }
  /// Componentwise sum of leaf characters (not reduced mod torsion).
  const Character& character() const { return node_->character; }

  /// Leaves left to right.
  std::vector<int> letters() const;
  std::string to_string(const GeneratorSet& g) const;

  friend bool operator==(const BracketWord& a, const BracketWord& b);

 private:
  struct Node {
    int generator = -1;
    std::shared_ptr<const Node> left, right;
    int degree = 0;
    int weight = 0;
    Character character;
  };
  explicit BracketWord(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct SlotKey {
  int degree = 0;  // reduced
  int weight = 0;
  Character character;
  auto operator<=>(const SlotKey&) const = default;
};

using Word = std::vector<int>;
/// Element of the tensor algebra: word -> coefficient, no zero entries.
using Polynomial = std::map<Word, Rational>;

/// A homogeneous Lie element in basis coordinates.
struct LieElement {
  SlotKey slot;
  Vector coords;
};

class FreeLieBasis {
 public:
  const GeneratorSet& generators() const { return gens_; }
  int max_degree() const { return max_r_; }
  int max_weight() const { return max_w_; }
  bool within_cutoffs(int r, int w) const { return r >= 0 && w >= 1 && r <= max_r_ && w <= max_w_; }

  /// Nonempty slots in key order.
  std::vector<SlotKey> slots() const;
  std::vector<SlotKey> slots_at(int r, int w) const;
  const std::vector<BracketWord>& words(const SlotKey& k) const;
  std::size_t slot_dim(const SlotKey& k) const { return words(k).size(); }

  /// Slot key of an expression, with the character reduced in the lattice.
  SlotKey key_of(const BracketWord& w) const;
  Character reduce(const Character& c) const { return gens_.lattice.reduce(c); }

  Polynomial polynomial(const BracketWord& w) const;
  Polynomial polynomial(const LieElement& e) const;
  /// Coordinates of a Lie polynomial in the slot basis; throws INVALID_INPUT
  /// when f is not in the span.
  Vector coordinates(const SlotKey& k, const Polynomial& f) const;

 private:
  friend FreeLieBasis basis(const GeneratorSet& g, int max_r, int max_w);

  struct Slot {
    std::vector<BracketWord> words;
    std::vector<Polynomial> polys;
    std::vector<Word> pivot_words;
    RationalMatrix inverse;  // coords = f[pivot_words] * inverse
  };

  GeneratorSet gens_;
  int max_r_ = 0;
  int max_w_ = 0;
  std::map<SlotKey, Slot> slots_;
};

/// Super-Lyndon basis (Lyndon words in standard bracketing, plus [z, z] for
/// odd Lyndon z) for every slot with r <= max_r and w <= max_w.
/// Throws CUTOFF_TOO_SMALL when max_w < 1.
FreeLieBasis basis(const GeneratorSet& g, int max_r, int max_w);

/// Throws OUT_OF_RANGE when expr lies outside the cutoffs of b.
LieElement expand(const BracketWord& expr, const FreeLieBasis& b);

LieElement bracket(const LieElement& x, const LieElement& y, const FreeLieBasis& b);

/// dim L_{p,q}. Zero for p < q; OUT_OF_RANGE for q < 1 or beyond cutoffs.
std::size_t dim(int p, int q, const FreeLieBasis& b);

/// Weight-i graded piece of pi_m lives in L_{m+i, i+1}.
std::pair<int, int> translate_index(int m, int i);

/// E_1^{P,Q} of the weight spectral sequence is L_{Q-1, P}.
std::pair<int, int> e1_to_lie_index(int P, int Q);

/// Graded commutator of homogeneous tensor-algebra elements.
Polynomial super_commutator(const Polynomial& x, int parity_x, const Polynomial& y, int parity_y);

bool is_lyndon(const Word& w);

}  // namespace sht
