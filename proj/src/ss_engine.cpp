#include "sht/ss_engine.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "sht/error.hpp"

namespace sht {

namespace {

RationalMatrix from_columns(std::size_t rows, const std::vector<Vector>& cols) {
  return RationalMatrix::from_dense(cols, rows).transpose();
}

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

}  // namespace

FilteredComplex::FilteredComplex(int min_degree, std::vector<RationalMatrix> d, int length,
                                 std::vector<std::vector<SubspaceBasis>> filtration)
    : min_(min_degree), length_(length), d_(std::move(d)), f_(std::move(filtration)) {
  auto bad = [](const std::string& m) { throw Error(ErrorCode::InvalidInput, "filtered complex: " + m); };
  if (d_.empty()) bad("no degrees");
  if (length_ < 0) bad("negative filtration length");
  if (d_[0].rows() != 0) bad("bottom differential must have no rows");
  if (f_.size() != d_.size()) bad("filtration needs one entry per degree");
  for (std::size_t i = 1; i < d_.size(); ++i) {
    if (d_[i].rows() != d_[i - 1].cols()) bad("differential shapes do not chain");
    if (!(d_[i - 1] * d_[i]).is_zero()) bad("d^2 != 0 in degree " + std::to_string(min_ + static_cast<int>(i)));
  }
  for (std::size_t i = 0; i < d_.size(); ++i) {
    const std::size_t n = d_[i].cols();
    zero_.emplace_back(n);
    const auto& fi = f_[i];
    if (fi.size() != static_cast<std::size_t>(length_) + 1) bad("filtration must list F^0..F^length");
    for (const auto& s : fi)
      if (s.ambient_dim() != n) bad("filtration subspace has the wrong ambient dimension");
    if (fi.front().dim() != n) bad("F^0 must be everything");
    if (fi.back().dim() != 0) bad("F^length must be zero");
    for (int p = 0; p < length_; ++p) {
      if (!fi[p].contains(fi[p + 1])) bad("filtration is not decreasing");
      if (i > 0 && !f_[i - 1][p].contains(image(d_[i], fi[p])))
        bad("d does not preserve F^" + std::to_string(p) + " in degree " + std::to_string(min_ + static_cast<int>(i)));
    }
  }
}

std::size_t FilteredComplex::dim(int n) const {
  if (n < min_ || n > max_degree()) return 0;
  return d_[n - min_].cols();
}

const SubspaceBasis& FilteredComplex::F(int n, int p) const {
  const auto& fi = f_[n - min_];
  if (p <= 0) return fi.front();
  if (p >= length_) return zero_[n - min_];
  return fi[p];
}

std::size_t FilteredComplex::homology(int n) const {
  std::size_t out_rank = rank(d(n));
  std::size_t in_rank = n < max_degree() ? rank(d(n + 1)) : 0;
  return dim(n) - out_rank - in_rank;
}

std::size_t SpectralSequencePage::dim(int p, int q) const {
  auto it = dims.find({p, q});
  return it == dims.end() ? 0 : it->second;
}

bool SpectralSequencePage::differentials_vanish() const {
  return std::all_of(differentials.begin(), differentials.end(), [](const auto& e) { return e.second.is_zero(); });
}

namespace {

class PageBuilder {
 public:
  PageBuilder(const FilteredComplex& fc, int r) : fc_(fc), r_(r) {}

  SubspaceBasis Z(int n, int p, int r) const {
    const SubspaceBasis& f = fc_.F(n, p);
    if (n == fc_.min_degree()) return f;
    return intersect(f, preimage(fc_.d(n), fc_.F(n - 1, p + r)));
  }

  SubspaceBasis B(int n, int p, int r) const {
    if (n == fc_.max_degree()) return SubspaceBasis(fc_.dim(n));
    return intersect(fc_.F(n, p), image(fc_.d(n + 1), fc_.F(n + 1, p - r)));
  }

  struct Entry {
    std::vector<Vector> reps;
    SubspaceBasis denominator;
  };

  const Entry& entry(int n, int p) {
    auto it = cache_.find({n, p});
    if (it != cache_.end()) return it->second;
    Entry e;
    SubspaceBasis z = Z(n, p, r_);
    e.denominator = sum(Z(n, p + 1, r_ - 1), B(n, p, r_ - 1));
    e.reps = complement_basis(z, e.denominator);
    return cache_.emplace(std::pair{n, p}, std::move(e)).first->second;
  }

 private:
  const FilteredComplex& fc_;
  int r_;
  std::map<std::pair<int, int>, Entry> cache_;
};

}  // namespace

SpectralSequencePage page(const FilteredComplex& fc, int r) {
  if (r < 1) throw Error(ErrorCode::OutOfRange, "page index must be at least 1");
  SpectralSequencePage pg;
  pg.r = r;
  PageBuilder b(fc, r);
  for (int n = fc.min_degree(); n <= fc.max_degree(); ++n)
    for (int p = 0; p < fc.length(); ++p) {
      const auto& src = b.entry(n, p);
      if (src.reps.empty()) continue;
      pg.dims[{p, n + p}] = src.reps.size();

      int tn = n - 1, tp = p + r;
      if (tn < fc.min_degree() || tp >= fc.length()) {
        pg.differentials[{p, n + p}] = RationalMatrix(0, src.reps.size());
        continue;
      }
      const auto& tgt = b.entry(tn, tp);
      std::vector<Vector> cols = tgt.reps;
      for (std::size_t i = 0; i < tgt.denominator.dim(); ++i) cols.push_back(tgt.denominator.vector(i));
      RationalMatrix a = from_columns(fc.dim(tn), cols);
      RationalMatrix dr(tgt.reps.size(), src.reps.size());
      for (std::size_t j = 0; j < src.reps.size(); ++j) {
        Vector y = fc.d(n).apply(src.reps[j]);
        auto x = solve(a, from_columns(fc.dim(tn), {y}));
        if (!x) throw std::logic_error("d_r image not in Z_r of the target");
        for (std::size_t i = 0; i < tgt.reps.size(); ++i) dr.set(i, j, x->at(i, 0));
      }
      pg.differentials[{p, n + p}] = std::move(dr);
    }
  return pg;
}

DegenerationReport check_degeneration(const FilteredComplex& fc, int r0, int r_max) {
  if (r0 < 1) throw Error(ErrorCode::OutOfRange, "r0 must be at least 1");
  DegenerationReport rep;
  SpectralSequencePage first = page(fc, r0);
  for (int r = r0; r <= r_max; ++r) {
    SpectralSequencePage pg = r == r0 ? first : page(fc, r);
    for (const auto& [bd, m] : pg.differentials)
      if (!m.is_zero()) {
        rep.degenerates = false;
        rep.first_nonzero_page = r;
        rep.detail = "d_" + std::to_string(r) + " nonzero out of (" + std::to_string(bd.first) + "," +
                     std::to_string(bd.second) + ")";
        return rep;
      }
  }
  if (r_max >= r0 && page(fc, r_max + 1).dims != first.dims) {
    rep.degenerates = false;
    rep.detail = "E_" + std::to_string(r0) + " differs from E_" + std::to_string(r_max + 1);
  }
  return rep;
}

std::map<Bidegree, std::size_t> e_infinity(const FilteredComplex& fc) { return page(fc, fc.length() + 1).dims; }

std::optional<std::string> convergence_violation(const FilteredComplex& fc) {
  auto rank_at = [](const SpectralSequencePage& pg, int p, int q) -> std::size_t {
    auto it = pg.differentials.find({p, q});
    return it == pg.differentials.end() ? 0 : rank(it->second);
  };
  auto where = [](int r, int p, int q) {
    return " on page " + std::to_string(r) + " at (" + std::to_string(p) + "," + std::to_string(q) + ")";
  };
  SpectralSequencePage e = page(fc, 1);
  for (int r = 1; r <= fc.length() + 1; ++r) {
    SpectralSequencePage next = page(fc, r + 1);
    for (int n = fc.min_degree(); n <= fc.max_degree(); ++n)
      for (int p = 0; p < fc.length(); ++p) {
        const int q = n + p;
        std::size_t h = e.dim(p, q) - rank_at(e, p, q) - rank_at(e, p - r, q - r + 1);
        if (next.dim(p, q) != h) return "E_{r+1} != H(E_r)" + where(r, p, q);
        auto in = e.differentials.find({p - r, q - r + 1});
        auto out = e.differentials.find({p, q});
        if (in != e.differentials.end() && out != e.differentials.end() && !(out->second * in->second).is_zero())
          return "d_r d_r != 0" + where(r, p, q);
      }
    e = std::move(next);
  }
  auto einf = e_infinity(fc);
  for (int n = fc.min_degree(); n <= fc.max_degree(); ++n) {
    std::size_t s = 0;
    for (int p = 0; p < fc.length(); ++p) s += einf.count({p, p + n}) ? einf.at({p, p + n}) : 0;
    if (s != fc.homology(n)) return "E_infinity does not sum to H_" + std::to_string(n);
  }
  return std::nullopt;
}

FilteredComplex filtered_from_model(const FormalLieModel& model) {
  const FreeLieBasis& b = model.basis();
  const int top_r = b.max_degree();
  const int length = b.max_weight() + 1;

  // per degree n = r + 1: slots in key order, with offsets
  std::vector<std::vector<std::pair<SlotKey, std::size_t>>> layout(top_r + 1);
  std::vector<std::size_t> dims(top_r + 1, 0);
  for (const SlotKey& k : b.slots()) {
    layout[k.degree].push_back({k, dims[k.degree]});
    dims[k.degree] += b.slot_dim(k);
  }
  auto offset = [&](const SlotKey& k) -> std::optional<std::size_t> {
    if (k.degree < 0 || k.degree > top_r) return std::nullopt;
    for (const auto& [kk, off] : layout[k.degree])
      if (kk == k) return off;
    return std::nullopt;
  };

  std::vector<RationalMatrix> d;
  std::vector<std::vector<SubspaceBasis>> filt;
  for (int r = 0; r <= top_r; ++r) {
    RationalMatrix dn(r == 0 ? 0 : dims[r - 1], dims[r]);
    for (const auto& [k, off] : layout[r]) {
      if (r == 0) break;
      auto m = model.differential(k);
      if (!m || m->rows() == 0) continue;  // lands past the top weight: quotient
      auto toff = offset({k.degree - 1, k.weight + 1, k.character});
      if (!toff) throw std::logic_error("missing target slot");
      for (std::size_t i = 0; i < m->rows(); ++i)
        for (const auto& [j, v] : m->row(i)) dn.set(*toff + i, off + j, v);
    }
    d.push_back(std::move(dn));

    std::vector<SubspaceBasis> fr;
    for (int p = 0; p <= length; ++p) {
      std::vector<Vector> gens;
      for (const auto& [k, off] : layout[r])
        if (k.weight >= p)
          for (std::size_t i = 0; i < b.slot_dim(k); ++i) gens.push_back(unit(dims[r], off + i));
      fr.push_back(SubspaceBasis::span(dims[r], gens));
    }
    filt.push_back(std::move(fr));
  }
  return FilteredComplex(1, std::move(d), length, std::move(filt));
}

FilteredComplex random_filtered_complex(std::mt19937_64& rng, std::size_t max_total, int max_length) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int length = uniform(1, std::max(1, max_length));
  const int degrees = uniform(1, 4);
  const std::size_t target = static_cast<std::size_t>(uniform(0, static_cast<int>(max_total)));

  // old basis vectors: filtration level per degree; pairs x -> y
  std::vector<std::vector<int>> level(degrees);
  std::vector<std::tuple<int, std::size_t, std::size_t>> arrows;  // (n, x index in n, y index in n-1)
  std::size_t total = 0;
  while (total < target) {
    bool pair = degrees > 1 && total + 2 <= target && uniform(0, 2) > 0;
    if (!pair) {
      level[uniform(0, degrees - 1)].push_back(uniform(0, length - 1));
      total += 1;
      continue;
    }
    int n = uniform(1, degrees - 1);
    int p = uniform(0, length - 1);
    level[n].push_back(p);
    level[n - 1].push_back(uniform(p, length - 1));
    arrows.emplace_back(n, level[n].size() - 1, level[n - 1].size() - 1);
    total += 2;
  }

  // generic change of basis per degree: old = T new
  std::vector<RationalMatrix> t, tinv;
  for (int n = 0; n < degrees; ++n) {
    const std::size_t k = level[n].size();
    while (true) {
      RationalMatrix m(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m.set(i, j, uniform(-2, 2));
      if (rank(m) != k) continue;
      tinv.push_back(*solve(m, RationalMatrix::identity(k)));
      t.push_back(std::move(m));
      break;
    }
  }

  std::vector<RationalMatrix> d;
  std::vector<std::vector<SubspaceBasis>> filt;
  for (int n = 0; n < degrees; ++n) {
    const std::size_t k = level[n].size();
    RationalMatrix old(n == 0 ? 0 : level[n - 1].size(), k);
    for (const auto& [an, x, y] : arrows)
      if (an == n) old.set(y, x, uniform(1, 3));
    d.push_back(n == 0 ? old : tinv[n - 1] * old * t[n]);

    std::vector<SubspaceBasis> fr;
    for (int p = 0; p <= length; ++p) {
      std::vector<Vector> gens;
      for (std::size_t i = 0; i < k; ++i)
        if (level[n][i] >= p) gens.push_back(tinv[n].apply(unit(k, i)));
      fr.push_back(SubspaceBasis::span(k, gens));
    }
    filt.push_back(std::move(fr));
  }
  return FilteredComplex(0, std::move(d), length, std::move(filt));
}

}  // namespace sht
