#include "sht/quillen_weight.hpp"

#include <algorithm>

#include "sht/error.hpp"

namespace sht {

namespace {

void add_term(Polynomial& p, const Word& w, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = p.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) p.erase(it);
  }
}

}  // namespace

Polynomial FormalLieModel::d(const Polynomial& f) const {
  const auto& gens = generators().generators;
  Polynomial out;
  for (const auto& [w, c] : f) {
    int prefix = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Polynomial& dx = gen_d_[w[i]];
      Rational sc = (prefix & 1) ? Rational(-c) : c;
      for (const auto& [u, a] : dx) {
        Word nw(w.begin(), w.begin() + i);
        nw.insert(nw.end(), u.begin(), u.end());
        nw.insert(nw.end(), w.begin() + i + 1, w.end());
        add_term(out, nw, sc * a);
      }
      prefix += gens[w[i]].reduced_degree;
    }
  }
  return out;
}

LieElement FormalLieModel::d(const LieElement& x) const {
  SlotKey t{x.slot.degree - 1, x.slot.weight + 1, x.slot.character};
  if (t.degree < 0) return {t, {}};
  if (!basis_.within_cutoffs(t.degree, t.weight)) throw Error(ErrorCode::OutOfRange, "d lands beyond the model cutoffs");
  return {t, basis_.coordinates(t, d(basis_.polynomial(x)))};
}

std::optional<RationalMatrix> FormalLieModel::differential(const SlotKey& k) const {
  auto it = d_.find(k);
  if (it != d_.end()) return it->second;
  std::size_t n = basis_.slot_dim(k);
  if (k.degree == 0) return RationalMatrix(0, n);
  SlotKey t{k.degree - 1, k.weight + 1, k.character};
  if (!basis_.within_cutoffs(t.degree, t.weight) || !basis_.within_cutoffs(k.degree, k.weight)) return std::nullopt;
  // empty source slot
  return RationalMatrix(basis_.slot_dim(t), n);
}

FormalLieModel build_model(const AlgebraPresentation& p, int max_m, int max_w) {
  if (max_m < 1 || max_w < 1) throw Error(ErrorCode::CutoffTooSmall, "cutoffs must be at least 1");
  FormalLieModel model;
  model.algebra_ = GradedAlgebra::from(p);
  const GradedAlgebra& a = model.algebra_;
  model.simply_connected_ = is_simply_connected_type(p);
  model.max_m_ = max_m;
  model.max_w_ = max_w;

  GeneratorSet gens;
  gens.lattice = a.lattice();
  std::vector<int> gen_of(a.dimension(), -1);
  for (std::size_t i : a.positive_degree()) {
    gen_of[i] = static_cast<int>(gens.generators.size());
    gens.generators.push_back({a.id(i), a.degree(i) - 1, a.character(i)});
    model.source_.push_back(i);
  }
  model.basis_ = basis(gens, max_m, max_w + 1);

  ReducedCoproduct cop = dualize(a);
  const Rational half(1, 2);
  for (std::size_t g = 0; g < model.source_.size(); ++g) {
    Polynomial dg;
    for (const auto& t : cop.of(model.source_[g])) {
      int ra = a.degree(t.left) - 1, rb = a.degree(t.right) - 1;
      Rational c = half * t.coeff * koszul_sign(ra, 1);
      Word ab{gen_of[t.left], gen_of[t.right]}, ba{gen_of[t.right], gen_of[t.left]};
      add_term(dg, ab, c);
      add_term(dg, ba, -c * koszul_sign(ra, rb));
    }
    model.gen_d_.push_back(std::move(dg));
  }

  const FreeLieBasis& b = model.basis_;
  for (const SlotKey& k : b.slots()) {
    if (k.degree == 0) continue;
    SlotKey t{k.degree - 1, k.weight + 1, k.character};
    if (!b.within_cutoffs(t.degree, t.weight)) continue;
    const auto& words = b.words(k);
    RationalMatrix m(b.slot_dim(t), words.size());
    for (std::size_t j = 0; j < words.size(); ++j) {
      Vector c = b.coordinates(t, model.d(b.polynomial(words[j])));
      for (std::size_t i = 0; i < c.size(); ++i)
        if (!is_zero(c[i])) m.set(i, j, c[i]);
    }
    model.d_.emplace(k, std::move(m));
  }

  for (const auto& [k, m] : model.d_) {
    SlotKey t{k.degree - 1, k.weight + 1, k.character};
    auto next = model.differential(t);
    if (!next || next->rows() == 0) continue;
    RationalMatrix sq = *next * m;
    if (sq.is_zero()) continue;
    for (std::size_t i = 0; i < sq.rows(); ++i)
      if (!sq.row(i).empty()) {
        std::size_t j = sq.row(i).front().first;
        throw Error(ErrorCode::DSquaredNonzero, "d^2 != 0 on " + b.words(k)[j].to_string(gens));
      }
  }
  return model;
}

std::size_t HomotopyTable::at(int m, int w, const Character& chi) const {
  auto it = entries.find({m, w, chi});
  return it == entries.end() ? 0 : it->second;
}

std::size_t HomotopyTable::weight_total(int m, int w) const {
  std::size_t s = 0;
  for (const auto& [k, v] : entries)
    if (std::get<0>(k) == m && std::get<1>(k) == w) s += v;
  return s;
}

std::size_t HomotopyTable::total(int m) const {
  std::size_t s = 0;
  for (const auto& [k, v] : entries)
    if (std::get<0>(k) == m) s += v;
  return s;
}

HomotopyTable homotopy_table(const FormalLieModel& model, int max_m, int max_w) {
  if (max_m > model.max_m() || max_w > model.max_w())
    throw Error(ErrorCode::OutOfRange, "requested table exceeds the model cutoffs");
  HomotopyTable t;
  t.max_m = max_m;
  t.max_w = max_w;
  t.complete = model.simply_connected();
  t.min_m = t.complete ? 2 : 1;
  // weight of pi_m is at most m - 1 when every generator has reduced degree >= 1
  if (t.complete && max_w < max_m - 1)
    throw Error(ErrorCode::CutoffExceeded, "pi_" + std::to_string(max_m) + " needs weights up to " +
                                               std::to_string(max_m - 1) + ", max weight is " + std::to_string(max_w));
  const FreeLieBasis& b = model.basis();
  for (int m = t.min_m; m <= max_m; ++m)
    for (int w = 1; w <= max_w; ++w)
      for (const SlotKey& k : b.slots_at(m - 1, w)) {
        auto d_out = model.differential(k);
        if (!d_out) throw Error(ErrorCode::OutOfRange, "outgoing differential beyond cutoffs");
        RationalMatrix d_in(b.slot_dim(k), 0);
        if (w >= 2) {
          SlotKey src{m, w - 1, k.character};
          if (b.slot_dim(src) > 0) {
            auto in = model.differential(src);
            if (!in) throw Error(ErrorCode::OutOfRange, "incoming differential beyond cutoffs");
            d_in = *in;
          }
        }
        std::size_t h = homology_dim(d_in, *d_out);
        if (h) t.entries[{m, w, k.character}] = h;
      }
  return t;
}

std::set<Character> supports(const HomotopyTable& t, int m) {
  std::set<Character> out;
  for (const auto& [k, v] : t.entries)
    if (std::get<0>(k) == m) out.insert(std::get<2>(k));
  return out;
}

HurewiczImage hurewicz_rank(const FormalLieModel& model, int m) {
  if (!model.simply_connected())
    throw Error(ErrorCode::NotComplete, "Hurewicz image needs simply connected input");
  if (m < 2 || m > model.max_m()) throw Error(ErrorCode::OutOfRange, "m out of range for the model");
  const GradedAlgebra& a = model.algebra();
  const FreeLieBasis& b = model.basis();
  HurewiczImage img;
  std::vector<std::size_t> hm = a.in_degree(m);
  for (std::size_t i : hm) img.ids.push_back(a.id(i));
  for (const SlotKey& k : b.slots_at(m - 1, 1)) {
    auto d = model.differential(k);
    SubspaceBasis ker = kernel_basis(*d);
    const auto& words = b.words(k);
    for (std::size_t v = 0; v < ker.dim(); ++v) {
      Vector local = ker.vector(v), full(hm.size());
      for (std::size_t j = 0; j < words.size(); ++j) {
        std::size_t src = model.generator_source()[words[j].generator()];
        auto pos = std::find(hm.begin(), hm.end(), src) - hm.begin();
        full[pos] = local[j];
      }
      img.basis.push_back(std::move(full));
    }
  }
  img.basis = [&] {
    SubspaceBasis s = SubspaceBasis::span(hm.size(), img.basis);
    std::vector<Vector> out;
    for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(s.vector(i));
    return out;
  }();
  img.rank = img.basis.size();
  return img;
}

}  // namespace sht
