#include "sht/dold_kan.hpp"

#include <algorithm>
#include <map>

#include "sht/error.hpp"

namespace sht {

CochainComplex CochainComplex::truncated(int m) const {
  CochainComplex out;
  for (int n = 0; n <= m; ++n) out.dims.push_back(n <= top_degree() ? dims[n] : 0);
  for (int n = 0; n < m; ++n)
    out.d.push_back(n < static_cast<int>(d.size()) ? d[n] : RationalMatrix(out.dims[n + 1], out.dims[n]));
  return out;
}

void CochainComplex::check() const {
  if (d.size() + 1 != dims.size() && !(dims.empty() && d.empty()))
    throw Error(ErrorCode::InvalidInput, "cochain complex needs one differential per degree below the top");
  for (std::size_t n = 0; n < d.size(); ++n) {
    if (d[n].cols() != dims[n] || d[n].rows() != dims[n + 1])
      throw Error(ErrorCode::InvalidInput, "d_" + std::to_string(n) + " has the wrong shape");
    if (n + 1 < d.size() && !(d[n + 1] * d[n]).is_zero())
      throw Error(ErrorCode::InvalidInput, "d^2 != 0 at degree " + std::to_string(n));
  }
}

std::vector<SimplexMap> surjections(int n, int k) {
  std::vector<SimplexMap> out;
  if (k < 0 || k > n) return out;
  SimplexMap s{0};
  auto rec = [&](auto&& self) -> void {
    int pos = static_cast<int>(s.size());
    if (pos == n + 1) {
      if (s.back() == k) out.push_back(s);
      return;
    }
    int remaining = n + 1 - pos;
    for (int step = 0; step <= 1; ++step) {
      int v = s.back() + step;
      if (v > k || k - v > remaining - 1) continue;
      s.push_back(v);
      self(self);
      s.pop_back();
    }
  };
  rec(rec);
  return out;
}

SimplexMap coface(int n, int i) {
  SimplexMap s(n + 1);
  for (int x = 0; x <= n; ++x) s[x] = x < i ? x : x + 1;
  return s;
}

SimplexMap codegeneracy(int n, int j) {
  SimplexMap s(n + 2);
  for (int x = 0; x <= n + 1; ++x) s[x] = x <= j ? x : x - 1;
  return s;
}

namespace {

SimplexMap compose(const SimplexMap& outer, const SimplexMap& inner) {
  SimplexMap s(inner.size());
  for (std::size_t x = 0; x < inner.size(); ++x) s[x] = outer[inner[x]];
  return s;
}

}  // namespace

std::size_t DenormalBasis::index(const SimplexMap& s, std::size_t b) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), std::pair{s, b}, [](const auto& x, const auto& y) {
    if (x.first.back() != y.first.back()) return x.first.back() < y.first.back();
    return x < y;
  });
  if (it == labels.end() || it->first != s || it->second != b) throw std::logic_error("label not in basis");
  return static_cast<std::size_t>(it - labels.begin());
}

DenormalBasis denormal_basis(const std::vector<std::size_t>& dims, int n) {
  DenormalBasis out;
  for (int k = 0; k <= n && k < static_cast<int>(dims.size()); ++k)
    for (const auto& s : surjections(n, k))
      for (std::size_t b = 0; b < dims[k]; ++b) out.labels.push_back({s, b});
  return out;
}

namespace {

// theta_* : D^n -> D^{n'} for theta : [n] -> [n'].
RationalMatrix induced(const CochainComplex& c, const SimplexMap& theta, const DenormalBasis& src,
                       const DenormalBasis& tgt, int n_target) {
  RationalMatrix m(tgt.labels.size(), src.labels.size());
  std::map<int, std::vector<SimplexMap>> surj;
  auto surj_to = [&](int k) -> const std::vector<SimplexMap>& {
    auto it = surj.find(k);
    if (it == surj.end()) it = surj.emplace(k, surjections(n_target, k)).first;
    return it->second;
  };
  for (std::size_t col = 0; col < src.labels.size(); ++col) {
    const auto& [tau, b] = src.labels[col];
    const int k = tau.back();
    for (const auto& sigma : surj_to(k))
      if (compose(sigma, theta) == tau) m.add_to(tgt.index(sigma, b), col, 1);
    if (k < c.top_degree()) {
      SimplexMap shifted = tau;
      for (auto& x : shifted) x += 1;
      const RationalMatrix& dk = c.d[k];
      for (const auto& sigma : surj_to(k + 1)) {
        if (compose(sigma, theta) != shifted) continue;
        for (std::size_t r = 0; r < dk.rows(); ++r) {
          Rational v = dk.at(r, b);
          if (!is_zero(v)) m.add_to(tgt.index(sigma, r), col, v);
        }
      }
    }
  }
  return m;
}

}  // namespace

CosimplicialVS denormalize(const CochainComplex& c, int m) {
  c.check();
  if (m < 0) throw Error(ErrorCode::OutOfRange, "truncation level must be >= 0");
  CosimplicialVS v;
  v.levels = m;
  std::vector<DenormalBasis> bases;
  for (int n = 0; n <= m; ++n) {
    bases.push_back(denormal_basis(c.dims, n));
    v.dims.push_back(bases.back().labels.size());
  }
  v.cofaces.resize(m);
  v.codegeneracies.resize(m + 1);
  for (int n = 0; n < m; ++n)
    for (int i = 0; i <= n + 1; ++i) v.cofaces[n].push_back(induced(c, coface(n, i), bases[n], bases[n + 1], n + 1));
  for (int n = 1; n <= m; ++n)
    for (int j = 0; j < n; ++j)
      v.codegeneracies[n].push_back(induced(c, codegeneracy(n - 1, j), bases[n], bases[n - 1], n - 1));
  return v;
}

std::optional<std::string> CosimplicialVS::identity_violation() const {
  auto name = [](const std::string& s, int n) { return s + " at level " + std::to_string(n); };
  auto D = [&](int n, int i) -> const RationalMatrix& { return cofaces[n][i]; };
  auto S = [&](int n, int j) -> const RationalMatrix& { return codegeneracies[n][j]; };
  auto sup = [](const char* a, int i) { return std::string(a) + "^" + std::to_string(i); };

  if (static_cast<int>(dims.size()) != levels + 1 || static_cast<int>(cofaces.size()) != levels ||
      static_cast<int>(codegeneracies.size()) != levels + 1)
    return "shape: truncation level and stored maps disagree";
  for (int n = 0; n < levels; ++n)
    if (static_cast<int>(cofaces[n].size()) != n + 2) return name("shape: coface count", n);
  for (int n = 1; n <= levels; ++n)
    if (static_cast<int>(codegeneracies[n].size()) != n) return name("shape: codegeneracy count", n);

  for (int n = 0; n + 2 <= levels; ++n)
    for (int j = 1; j <= n + 2; ++j)
      for (int i = 0; i < j; ++i)
        if (D(n + 1, j) * D(n, i) != D(n + 1, i) * D(n, j - 1))
          return name(sup("d", j) + " " + sup("d", i) + " = " + sup("d", i) + " " + sup("d", j - 1), n);
  for (int n = 0; n + 2 <= levels; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        if (S(n + 1, j) * S(n + 2, i) != S(n + 1, i) * S(n + 2, j + 1))
          return name(sup("s", j) + " " + sup("s", i) + " = " + sup("s", i) + " " + sup("s", j + 1), n + 2);
  for (int n = 0; n + 1 <= levels; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        RationalMatrix lhs = S(n + 1, j) * D(n, i);
        std::string id = sup("s", j) + " " + sup("d", i) + " = ";
        if (i < j) {
          if (lhs != D(n - 1, i) * S(n, j - 1)) return name(id + sup("d", i) + " " + sup("s", j - 1), n);
        } else if (i == j || i == j + 1) {
          if (lhs != RationalMatrix::identity(dims[n])) return name(id + "id", n);
        } else if (lhs != D(n - 1, i - 1) * S(n, j)) {
          return name(id + sup("d", i - 1) + " " + sup("s", j), n);
        }
      }
  return std::nullopt;
}

CochainComplex normalize(const CosimplicialVS& v) {
  if (auto bad = v.identity_violation()) throw Error(ErrorCode::SimplicialIdentityViolation, *bad);
  std::vector<SubspaceBasis> nb;
  for (int n = 0; n <= v.levels; ++n) {
    SubspaceBasis k = SubspaceBasis::whole(v.dims[n]);
    for (const auto& s : v.codegeneracies[n]) k = intersect(k, kernel_basis(s));
    nb.push_back(std::move(k));
  }
  CochainComplex c;
  for (const auto& b : nb) c.dims.push_back(b.dim());
  for (int n = 0; n < v.levels; ++n) {
    RationalMatrix delta(v.dims[n + 1], v.dims[n]);
    for (int i = 0; i <= n + 1; ++i) {
      const RationalMatrix& f = v.cofaces[n][i];
      for (std::size_t r = 0; r < f.rows(); ++r)
        for (const auto& [col, x] : f.row(r)) delta.add_to(r, col, (i & 1) ? Rational(-x) : x);
    }
    RationalMatrix dn(nb[n + 1].dim(), nb[n].dim());
    for (std::size_t j = 0; j < nb[n].dim(); ++j) {
      auto coords = nb[n + 1].coordinates(delta.apply(nb[n].vector(j)));
      if (!coords) throw Error(ErrorCode::SimplicialIdentityViolation, "alternating coface sum leaves the normalized part");
      for (std::size_t i = 0; i < coords->size(); ++i) dn.set(i, j, (*coords)[i]);
    }
    c.d.push_back(std::move(dn));
  }
  return c;
}

Cdga Cdga::formal(const GradedAlgebra& a) {
  Cdga c{a, {}};
  for (int n = 0; n < a.top_degree(); ++n)
    c.d.emplace_back(a.in_degree(n + 1).size(), a.in_degree(n).size());
  return c;
}

CochainComplex Cdga::complex() const {
  CochainComplex c;
  for (int n = 0; n <= algebra.top_degree(); ++n) c.dims.push_back(algebra.in_degree(n).size());
  c.d = d;
  return c;
}

namespace {

// Full-basis helpers for the Leibniz check.
Vector mul_full(const GradedAlgebra& a, const Vector& x, const Vector& y) {
  Vector out(a.dimension());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (is_zero(y[j])) continue;
      for (const auto& [k, c] : a.product(i, j)) out[k] += x[i] * y[j] * c;
    }
  }
  return out;
}

Vector d_full(const Cdga& c, const Vector& x) {
  const GradedAlgebra& a = c.algebra;
  Vector out(a.dimension());
  for (int n = 0; n < static_cast<int>(c.d.size()); ++n) {
    auto src = a.in_degree(n), tgt = a.in_degree(n + 1);
    Vector local(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) local[i] = x[src[i]];
    Vector img = c.d[n].apply(local);
    for (std::size_t i = 0; i < tgt.size(); ++i) out[tgt[i]] += img[i];
  }
  return out;
}

}  // namespace

void Cdga::check() const {
  const GradedAlgebra& a = algebra;
  const int top = a.top_degree();
  if (static_cast<int>(d.size()) != top)
    throw Error(ErrorCode::NotACdga, "need one differential per degree below " + std::to_string(top));
  for (int n = 0; n < top; ++n)
    if (d[n].cols() != a.in_degree(n).size() || d[n].rows() != a.in_degree(n + 1).size())
      throw Error(ErrorCode::NotACdga, "d_" + std::to_string(n) + " has the wrong shape");
  for (int n = 0; n + 1 < top; ++n)
    if (!(d[n + 1] * d[n]).is_zero()) throw Error(ErrorCode::NotACdga, "d^2 != 0 on degree " + std::to_string(n));
  auto e = [&](std::size_t i) {
    Vector v(a.dimension());
    v[i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < a.dimension(); ++i)
    for (std::size_t j = 0; j < a.dimension(); ++j) {
      Vector lhs = d_full(*this, mul_full(a, e(i), e(j)));
      Vector r1 = mul_full(a, d_full(*this, e(i)), e(j));
      Vector r2 = mul_full(a, e(i), d_full(*this, e(j)));
      int s = koszul_sign(a.degree(i), 1);
      for (std::size_t k = 0; k < lhs.size(); ++k)
        if (lhs[k] != r1[k] + s * r2[k])
          throw Error(ErrorCode::NotACdga, "Leibniz fails on " + a.id(i) + "*" + a.id(j));
    }
}

CosimplicialAlgebra denormalize_algebra(const Cdga& a, int m) {
  a.check();
  CosimplicialAlgebra out;
  out.a_ = a;
  CochainComplex c = a.complex();
  out.vs_ = denormalize(c, m);
  for (int n = 0; n <= m; ++n) out.bases_.push_back(denormal_basis(c.dims, n));
  out.offsets_.assign(a.algebra.dimension(), 0);
  for (int n = 0; n <= a.algebra.top_degree(); ++n) {
    auto idx = a.algebra.in_degree(n);
    for (std::size_t i = 0; i < idx.size(); ++i) out.offsets_[idx[i]] = i;
  }
  return out;
}

Vector CosimplicialAlgebra::unit(int n) const {
  Vector u(vs_.dims[n]);
  u[bases_[n].index(SimplexMap(n + 1, 0), 0)] = 1;
  return u;
}

Vector CosimplicialAlgebra::multiply(int n, const Vector& u, const Vector& v) const {
  const DenormalBasis& b = bases_[n];
  const GradedAlgebra& alg = a_.algebra;
  Vector out(b.labels.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (is_zero(u[i])) continue;
    const auto& [sigma, ia] = b.labels[i];
    const int p = sigma.back();
    const std::size_t xa = alg.in_degree(p)[ia];
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (is_zero(v[j])) continue;
      const auto& [tau, ib] = b.labels[j];
      const int q = tau.back();
      // shuffle: steps of sigma and tau must not coincide
      SimplexMap rho(n + 1);
      int y_seen = 0, inversions = 0;
      bool diagonal = false;
      for (int x = 1; x <= n; ++x) {
        int ds = sigma[x] - sigma[x - 1], dt = tau[x] - tau[x - 1];
        if (ds && dt) {
          diagonal = true;
          break;
        }
        if (dt) ++y_seen;
        if (ds) inversions += y_seen;
      }
      if (diagonal) continue;
      for (int x = 0; x <= n; ++x) rho[x] = sigma[x] + tau[x];
      const std::size_t xb = alg.in_degree(q)[ib];
      Rational coeff = u[i] * v[j] * ((inversions & 1) ? -1 : 1);
      for (const auto& [k, c] : alg.product(xa, xb)) out[b.index(rho, offsets_[k])] += coeff * c;
    }
  }
  return out;
}

AlgebraCheck check_cosimplicial_algebra(const CosimplicialAlgebra& a, int assoc_levels) {
  AlgebraCheck r;
  auto fail = [&](std::string s) {
    r.ok = false;
    if (r.problems.size() < 20) r.problems.push_back(std::move(s));
  };
  const CosimplicialVS& v = a.vs();
  if (auto bad = v.identity_violation()) fail("cosimplicial identity " + *bad);
  auto e = [](std::size_t n, std::size_t i) {
    Vector x(n);
    x[i] = 1;
    return x;
  };
  for (int n = 0; n <= v.levels; ++n) {
    const std::size_t dim = v.dims[n];
    const std::string at = " at level " + std::to_string(n);
    Vector one = a.unit(n);
    std::vector<std::vector<Vector>> prod(dim, std::vector<Vector>(dim));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) prod[i][j] = a.multiply(n, e(dim, i), e(dim, j));
    for (std::size_t i = 0; i < dim; ++i) {
      if (a.multiply(n, one, e(dim, i)) != e(dim, i)) fail("unit law" + at);
      for (std::size_t j = i + 1; j < dim; ++j)
        if (prod[i][j] != prod[j][i]) fail("commutativity" + at);
    }
    if (n <= assoc_levels)
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          for (std::size_t k = 0; k < dim; ++k)
            if (a.multiply(n, prod[i][j], e(dim, k)) != a.multiply(n, e(dim, i), prod[j][k])) fail("associativity" + at);

    auto multiplicative = [&](const RationalMatrix& f, int tn, const std::string& what) {
      if (f.apply(one) != a.unit(tn)) fail(what + " does not preserve the unit" + at);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j)
          if (f.apply(prod[i][j]) != a.multiply(tn, f.apply(e(dim, i)), f.apply(e(dim, j))))
            fail(what + " is not multiplicative" + at);
    };
    if (n < v.levels)
      for (std::size_t i = 0; i < v.cofaces[n].size(); ++i) multiplicative(v.cofaces[n][i], n + 1, "d^" + std::to_string(i));
    if (n >= 1)
      for (std::size_t j = 0; j < v.codegeneracies[n].size(); ++j)
        multiplicative(v.codegeneracies[n][j], n - 1, "s^" + std::to_string(j));
  }
  return r;
}

CochainComplex random_cochain_complex(std::mt19937_64& rng, int max_degree, std::size_t max_dim) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int top = uniform(0, max_degree);
  CochainComplex c;
  for (int k = 0; k <= top; ++k) c.dims.push_back(static_cast<std::size_t>(uniform(0, static_cast<int>(max_dim))));

  // ranks with r_{k-1} + r_k <= dim_k
  std::vector<std::size_t> r(top + 1, 0);
  for (int k = 0; k < top; ++k) {
    std::size_t used = k ? r[k - 1] : 0;
    std::size_t cap = std::min(c.dims[k] - used, c.dims[k + 1]);
    r[k] = static_cast<std::size_t>(uniform(0, static_cast<int>(cap)));
  }
  std::vector<RationalMatrix> t, tinv;
  for (int k = 0; k <= top; ++k) {
    const std::size_t n = c.dims[k];
    while (true) {
      RationalMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, uniform(-2, 2));
      if (rank(m) != n) continue;
      tinv.push_back(*solve(m, RationalMatrix::identity(n)));
      t.push_back(std::move(m));
      break;
    }
  }
  for (int k = 0; k < top; ++k) {
    RationalMatrix e(c.dims[k + 1], c.dims[k]);
    std::size_t off = k ? r[k - 1] : 0;
    for (std::size_t i = 0; i < r[k]; ++i) e.set(i, off + i, uniform(1, 3));
    c.d.push_back(tinv[k + 1] * e * t[k]);
  }
  return c;
}

}  // namespace sht
