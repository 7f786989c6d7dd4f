#include "sht/sullivan_oracle.hpp"

#include <algorithm>
#include <sstream>

#include "sht/error.hpp"

namespace sht {

namespace {

// Monomials per degree beyond this raise DEGREE_CUTOFF.
constexpr std::size_t kMaxMonomials = 50000;

void add_term(SymPoly& p, const Monomial& m, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = p.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) p.erase(it);
  }
}

}  // namespace

std::size_t MinimalModel::count(int degree) const {
  return std::count_if(gens_.begin(), gens_.end(), [&](const auto& g) { return g.degree == degree; });
}

std::map<int, std::size_t> MinimalModel::counts() const {
  std::map<int, std::size_t> out;
  for (int k = 2; k <= n_; ++k) out[k] = count(k);
  return out;
}

int MinimalModel::degree(const Monomial& m) const {
  int s = 0;
  for (auto g : m) s += gens_[g].degree;
  return s;
}

std::vector<Monomial> MinimalModel::monomials(int degree) const {
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, std::size_t from, int left) -> void {
    if (left == 0) {
      out.push_back(cur);
      if (out.size() > kMaxMonomials)
        throw Error(ErrorCode::DegreeCutoff, "more than " + std::to_string(kMaxMonomials) + " monomials in degree " +
                                                 std::to_string(degree));
      return;
    }
    for (std::size_t g = from; g < gens_.size(); ++g) {
      int dg = gens_[g].degree;
      if (dg <= 0 || dg > left) continue;
      bool odd = dg & 1;
      if (odd && !cur.empty() && cur.back() == g) continue;
      cur.push_back(g);
      self(self, odd ? g + 1 : g, left - dg);
      cur.pop_back();
    }
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end());
  return out;
}

SymPoly MinimalModel::multiply(const SymPoly& a, const SymPoly& b) const {
  SymPoly out;
  for (const auto& [l, x] : a)
    for (const auto& [r, y] : b) {
      // sign of sorting l.r: one flip per odd pair (i in l, j in r) with j < i
      int sign = 1;
      bool zero = false;
      for (auto i : l) {
        if (!(gens_[i].degree & 1)) continue;
        for (auto j : r) {
          if (!(gens_[j].degree & 1)) continue;
          if (j == i) zero = true;
          if (j < i) sign = -sign;
        }
      }
      if (zero) continue;
      Monomial m = l;
      m.insert(m.end(), r.begin(), r.end());
      std::sort(m.begin(), m.end());
      add_term(out, m, sign * x * y);
    }
  return out;
}

SymPoly MinimalModel::d(const SymPoly& f) const {
  SymPoly out;
  for (const auto& [m, c] : f) {
    int prefix = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const SymPoly& dx = gens_[m[i]].differential;
      if (!dx.empty()) {
        SymPoly left{{Monomial(m.begin(), m.begin() + i), (prefix & 1) ? Rational(-c) : c}};
        SymPoly right{{Monomial(m.begin() + i + 1, m.end()), Rational(1)}};
        for (const auto& [t, v] : multiply(multiply(left, dx), right)) add_term(out, t, v);
      }
      prefix += gens_[m[i]].degree;
    }
  }
  return out;
}

Vector MinimalModel::phi(const SymPoly& f) const {
  const std::size_t n = algebra_.dimension();
  Vector out(n);
  for (const auto& [m, c] : f) {
    Vector acc(n);
    acc[algebra_.unit()] = 1;
    for (auto g : m) {
      Vector next(n);
      for (std::size_t a = 0; a < n; ++a) {
        if (is_zero(acc[a])) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (is_zero(gens_[g].image[b])) continue;
          for (const auto& [k, x] : algebra_.product(a, b)) next[k] += acc[a] * gens_[g].image[b] * x;
        }
      }
      acc = std::move(next);
    }
    for (std::size_t k = 0; k < n; ++k) out[k] += c * acc[k];
  }
  return out;
}

std::string MinimalModel::format(const SymPoly& f) const {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f) {
    Rational a = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    bool unit_coeff = a == 1 && !m.empty();
    if (!unit_coeff) os << to_string(a);
    for (std::size_t i = 0; i < m.size(); ++i) os << ((i || !unit_coeff) ? "*" : "") << gens_[m[i]].name;
  }
  return os.str();
}

namespace {

struct Degree {
  std::vector<Monomial> monos;
  std::map<Monomial, std::size_t> index;
};

Degree degree_basis(const MinimalModel& mm, int k) {
  Degree d;
  d.monos = mm.monomials(k);
  for (std::size_t i = 0; i < d.monos.size(); ++i) d.index[d.monos[i]] = i;
  return d;
}

// d : M^k -> M^{k+1}
RationalMatrix d_matrix(const MinimalModel& mm, const Degree& src, const Degree& tgt) {
  RationalMatrix m(tgt.monos.size(), src.monos.size());
  for (std::size_t j = 0; j < src.monos.size(); ++j)
    for (const auto& [t, c] : mm.d({{src.monos[j], Rational(1)}})) m.set(tgt.index.at(t), j, c);
  return m;
}

// phi : M^k -> A^k
RationalMatrix phi_matrix(const MinimalModel& mm, const Degree& src, int k) {
  auto ak = mm.target().in_degree(k);
  RationalMatrix m(ak.size(), src.monos.size());
  for (std::size_t j = 0; j < src.monos.size(); ++j) {
    Vector v = mm.phi({{src.monos[j], Rational(1)}});
    for (std::size_t i = 0; i < ak.size(); ++i)
      if (!is_zero(v[ak[i]])) m.set(i, j, v[ak[i]]);
  }
  return m;
}

SymPoly poly_from(const Degree& d, const Vector& v) {
  SymPoly p;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) p[d.monos[i]] = v[i];
  return p;
}

}  // namespace

MinimalModel minimal_model(const AlgebraPresentation& p, int n) {
  MinimalModel mm;
  mm.algebra_ = GradedAlgebra::from(p);
  if (!is_simply_connected_type(p)) throw Error(ErrorCode::NotSimplyConnected, "input has degree-1 classes");
  if (n < 2) throw Error(ErrorCode::OutOfRange, "degree cutoff must be at least 2");
  mm.n_ = n;
  const GradedAlgebra& a = mm.algebra_;

  for (int k = 2; k <= n; ++k) {
    int made = 0;
    auto name = [&] { return "g" + std::to_string(k) + "_" + std::to_string(++made); };

    // (a) surject onto H^k(A) = A^k
    Degree mk = degree_basis(mm, k), mk1 = degree_basis(mm, k + 1);
    SubspaceBasis zk = kernel_basis(d_matrix(mm, mk, mk1));
    auto ak = a.in_degree(k);
    SubspaceBasis reached = image(phi_matrix(mm, mk, k), zk);
    for (const Vector& c : complement_basis(SubspaceBasis::whole(ak.size()), reached)) {
      SullivanGenerator g{name(), k, {}, Vector(a.dimension())};
      for (std::size_t i = 0; i < ak.size(); ++i) g.image[ak[i]] = c[i];
      mm.gens_.push_back(std::move(g));
    }

    // (b) kill the kernel of H^{k+1}(M) -> A^{k+1}
    mk = degree_basis(mm, k);
    mk1 = degree_basis(mm, k + 1);
    Degree mk2 = degree_basis(mm, k + 2);
    RationalMatrix dk1 = d_matrix(mm, mk1, mk2), phik1 = phi_matrix(mm, mk1, k + 1);
    RationalMatrix both[] = {dk1, phik1};
    SubspaceBasis kernel = kernel_basis(vstack(both, mk1.monos.size()));
    SubspaceBasis bounds = image(d_matrix(mm, mk, mk1), SubspaceBasis::whole(mk.monos.size()));
    for (const Vector& z : complement_basis(kernel, bounds))
      mm.gens_.push_back({name(), k, poly_from(mk1, z), Vector(a.dimension())});
  }
  return mm;
}

ModelCheck verify(const MinimalModel& mm) {
  ModelCheck r;
  auto fail = [&](std::string s) {
    r.ok = false;
    r.problems.push_back(std::move(s));
  };
  for (const auto& g : mm.generators()) {
    SymPoly dg = g.differential;
    for (const auto& [m, c] : dg)
      if (m.size() < 2) fail("d(" + g.name + ") has a linear term");
    if (!mm.d(dg).empty()) fail("d^2(" + g.name + ") != 0");
    if (mm.phi(dg) != Vector(mm.target().dimension())) fail("phi(d " + g.name + ") != 0");
  }
  const GradedAlgebra& a = mm.target();
  for (int k = 2; k <= mm.max_degree() + 1; ++k) {
    Degree mk = degree_basis(mm, k), mk1 = degree_basis(mm, k + 1), mkm = degree_basis(mm, k - 1);
    SubspaceBasis z = kernel_basis(d_matrix(mm, mk, mk1));
    SubspaceBasis b = image(d_matrix(mm, mkm, mk), SubspaceBasis::whole(mkm.monos.size()));
    RationalMatrix ph = phi_matrix(mm, mk, k);
    SubspaceBasis reached = image(ph, z);
    SubspaceBasis kern = intersect(z, kernel_basis(ph));
    if (kern.dim() != b.dim()) fail("H^" + std::to_string(k) + "(phi) is not injective");
    if (k <= mm.max_degree() && reached.dim() != a.in_degree(k).size())
      fail("H^" + std::to_string(k) + "(phi) is not surjective");
  }
  return r;
}

CompareReport compare(const MinimalModel& mm, const HomotopyTable& ht) {
  if (!ht.complete) throw Error(ErrorCode::CutoffMismatch, "homotopy table is truncated, not comparable");
  if (ht.max_m != mm.max_degree())
    throw Error(ErrorCode::CutoffMismatch, "table runs to " + std::to_string(ht.max_m) + ", model to " +
                                               std::to_string(mm.max_degree()));
  CompareReport rep;
  for (int m = 2; m <= mm.max_degree(); ++m) {
    std::size_t g = mm.count(m), t = ht.total(m);
    rep.rows[m] = {g, t};
    if (g != t) {
      rep.pass = false;
      rep.mismatched.push_back(m);
    }
  }
  return rep;
}

}  // namespace sht
