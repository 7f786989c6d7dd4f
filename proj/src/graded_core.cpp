#include "sht/graded_core.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sht/error.hpp"

namespace sht {

CharacterLattice::CharacterLattice(std::size_t free_rank, std::vector<long> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {}

Character CharacterLattice::reduce(Character c) const {
  if (c.empty()) c = zero();
  if (c.size() != arity()) throw Error(ErrorCode::InvalidInput, "character " + format_character(c) + " has wrong arity");
  for (std::size_t k = 0; k < torsion_.size(); ++k) {
    long t = torsion_[k];
    long& x = c[free_rank_ + k];
    x = ((x % t) + t) % t;
  }
  return c;
}

Character CharacterLattice::add(const Character& a, const Character& b) const {
  Character ra = reduce(a), rb = reduce(b);
  for (std::size_t k = 0; k < ra.size(); ++k) ra[k] += rb[k];
  return reduce(std::move(ra));
}

std::string format_character(const Character& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
  os << ')';
  return os.str();
}

bool ValidationReport::has(const std::string& code) const {
  return std::any_of(issues.begin(), issues.end(), [&](const auto& i) { return i.code == code; });
}

namespace {

void accumulate(LinearCombination& acc, std::size_t index, const Rational& value) {
  auto it = std::lower_bound(acc.begin(), acc.end(), index, [](const auto& e, std::size_t k) { return e.first < k; });
  if (it != acc.end() && it->first == index) {
    it->second += value;
    if (is_zero(it->second)) acc.erase(it);
  } else if (!is_zero(value)) {
    acc.insert(it, {index, value});
  }
}

LinearCombination scaled(const LinearCombination& v, const Rational& f) {
  LinearCombination out;
  if (is_zero(f)) return out;
  for (const auto& [k, x] : v) out.emplace_back(k, x * f);
  return out;
}

struct Resolved {
  std::map<std::string, std::size_t> index;
  std::vector<std::vector<LinearCombination>> table;
  std::size_t unit = 0;
};

// Runs every check; fills `resolved` when the presentation is structurally
// sound enough to build a product table.
ValidationReport check(const AlgebraPresentation& p, Resolved* resolved) {
  ValidationReport rep;
  auto issue = [&](std::string code, std::string msg) { rep.issues.push_back({std::move(code), std::move(msg)}); };
  const CharacterLattice& lat = p.lattice;

  for (long t : lat.torsion())
    if (t < 2) issue("LATTICE", "torsion order " + std::to_string(t) + " is < 2");

  std::map<std::string, std::size_t> index;
  std::vector<Character> chars(p.basis.size());
  bool structural_ok = true;
  for (std::size_t i = 0; i < p.basis.size(); ++i) {
    const auto& b = p.basis[i];
    if (!index.emplace(b.id, i).second) {
      issue("DUPLICATE_ID", "basis id '" + b.id + "' appears more than once");
      structural_ok = false;
    }
    if (b.degree < 0) {
      issue("NEGATIVE_DEGREE", "'" + b.id + "' has negative degree");
      structural_ok = false;
    }
    if (!b.character.empty() && b.character.size() != lat.arity()) {
      issue("CHARACTER_ARITY", "'" + b.id + "' character " + format_character(b.character) + " needs " +
                                   std::to_string(lat.arity()) + " entries");
      structural_ok = false;
      chars[i] = lat.zero();
    } else {
      chars[i] = lat.reduce(b.character);
    }
  }

  auto unit_it = index.find(p.unit_id);
  if (unit_it == index.end()) {
    issue("MISSING_UNIT", "unit '" + p.unit_id + "' is not a basis id");
    structural_ok = false;
  } else {
    const auto& u = p.basis[unit_it->second];
    if (u.degree != 0) issue("UNIT_DEGREE", "unit '" + u.id + "' has degree " + std::to_string(u.degree));
    if (!lat.is_zero(chars[unit_it->second])) issue("UNIT_CHARACTER", "unit '" + u.id + "' has nonzero character");
  }
  std::size_t deg0 = std::count_if(p.basis.begin(), p.basis.end(), [](const auto& b) { return b.degree == 0; });
  if (deg0 != 1) issue("NOT_CONNECTED", std::to_string(deg0) + " basis elements of degree 0; exactly one required");

  const std::size_t n = p.basis.size();
  std::vector<std::vector<LinearCombination>> table(n, std::vector<LinearCombination>(n));
  std::vector<std::vector<bool>> listed(n, std::vector<bool>(n, false));
  for (const auto& e : p.products) {
    auto li = index.find(e.left), ri = index.find(e.right);
    if (li == index.end() || ri == index.end()) {
      issue("UNKNOWN_ID", "product '" + e.left + "*" + e.right + "' references an unknown id");
      structural_ok = false;
      continue;
    }
    std::size_t a = li->second, b = ri->second;
    if (a > b) {
      issue("PRODUCT_ORDER", "product '" + e.left + "*" + e.right + "' must be listed as '" + e.right + "*" + e.left + "'");
      structural_ok = false;
      continue;
    }
    if (listed[a][b]) {
      issue("DUPLICATE_PRODUCT", "product '" + e.left + "*" + e.right + "' listed twice");
      structural_ok = false;
      continue;
    }
    listed[a][b] = true;
    LinearCombination lc;
    for (const auto& t : e.result) {
      auto ti = index.find(t.id);
      if (ti == index.end()) {
        issue("UNKNOWN_ID", "product '" + e.left + "*" + e.right + "' has unknown term '" + t.id + "'");
        structural_ok = false;
        continue;
      }
      accumulate(lc, ti->second, t.coeff);
    }
    for (const auto& [c, x] : lc) {
      const auto& bc = p.basis[c];
      if (bc.degree != p.basis[a].degree + p.basis[b].degree)
        issue("DEGREE_MISMATCH", "'" + e.left + "*" + e.right + "' has term '" + bc.id + "' of degree " +
                                     std::to_string(bc.degree) + ", expected " +
                                     std::to_string(p.basis[a].degree + p.basis[b].degree));
      if (lat.arity() > 0 && chars[c] != lat.add(chars[a], chars[b]))
        issue("CHARACTER_MISMATCH", "'" + e.left + "*" + e.right + "' has term '" + bc.id + "' of character " +
                                        format_character(chars[c]));
    }
    table[a][b] = lc;
    if (a != b) table[b][a] = scaled(lc, koszul_sign(p.basis[a].degree, p.basis[b].degree));
  }

  if (!structural_ok) return rep;
  const std::size_t u = unit_it->second;
  for (std::size_t x = 0; x < n; ++x) {
    LinearCombination expect{{x, Rational(1)}};
    if ((listed[std::min(u, x)][std::max(u, x)]) && table[u][x] != expect)
      issue("UNIT_LAW", "listed product of unit with '" + p.basis[x].id + "' is not '" + p.basis[x].id + "'");
    table[u][x] = expect;
    table[x][u] = expect;
  }

  for (std::size_t a = 0; a < n; ++a)
    if (p.basis[a].degree % 2 != 0 && !table[a][a].empty())
      issue("COMMUTATIVITY", "'" + p.basis[a].id + "' has odd degree but nonzero square");

  auto mul = [&](const LinearCombination& v, std::size_t c, bool left) {
    LinearCombination acc;
    for (const auto& [k, x] : v)
      for (const auto& [m, y] : left ? table[k][c] : table[c][k]) accumulate(acc, m, x * y);
    return acc;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (a == u || b == u || c == u) continue;
        LinearCombination lhs = mul(table[a][b], c, true);
        LinearCombination rhs = mul(table[b][c], a, false);
        if (lhs != rhs)
          issue("ASSOCIATIVITY", "(" + p.basis[a].id + "*" + p.basis[b].id + ")*" + p.basis[c].id + " != " +
                                     p.basis[a].id + "*(" + p.basis[b].id + "*" + p.basis[c].id + ")");
      }

  if (resolved) {
    resolved->index = std::move(index);
    resolved->table = std::move(table);
    resolved->unit = u;
  }
  return rep;
}

}  // namespace

ValidationReport validate_algebra(const AlgebraPresentation& p) { return check(p, nullptr); }

GradedAlgebra GradedAlgebra::from(const AlgebraPresentation& p) {
  Resolved r;
  ValidationReport rep = check(p, &r);
  if (!rep.ok()) {
    std::string msg = "presentation '" + p.name + "' is invalid:";
    for (const auto& i : rep.issues) msg += " [" + i.code + "] " + i.message + ";";
    throw Error(ErrorCode::InvalidInput, msg);
  }
  GradedAlgebra g;
  g.name_ = p.name;
  g.lattice_ = p.lattice;
  for (const auto& b : p.basis) {
    g.ids_.push_back(b.id);
    g.degrees_.push_back(b.degree);
    g.characters_.push_back(p.lattice.reduce(b.character));
  }
  g.unit_ = r.unit;
  g.table_ = std::move(r.table);
  return g;
}

int GradedAlgebra::top_degree() const { return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end()); }

std::vector<std::size_t> GradedAlgebra::in_degree(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    if (degrees_[i] == d) out.push_back(i);
  return out;
}

std::vector<std::size_t> GradedAlgebra::positive_degree() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    if (degrees_[i] > 0) out.push_back(i);
  return out;
}

Rational GradedAlgebra::product_coeff(std::size_t a, std::size_t b, std::size_t c) const {
  for (const auto& [k, x] : table_[a][b])
    if (k == c) return x;
  return 0;
}

const std::vector<CoproductTerm>& ReducedCoproduct::of(std::size_t c) const {
  static const std::vector<CoproductTerm> empty;
  auto it = terms.find(c);
  return it == terms.end() ? empty : it->second;
}

ReducedCoproduct dualize(const GradedAlgebra& a) {
  ReducedCoproduct d;
  d.lattice = a.lattice();
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    d.ids.push_back(a.id(i));
    d.degrees.push_back(a.degree(i));
    d.characters.push_back(a.character(i));
  }
  auto pos = a.positive_degree();
  for (std::size_t c : pos) d.terms[c];
  for (std::size_t l : pos)
    for (std::size_t r : pos)
      for (const auto& [c, x] : a.product(l, r)) d.terms[c].push_back({l, r, x});
  for (auto& [c, ts] : d.terms)
    std::sort(ts.begin(), ts.end(),
              [](const auto& x, const auto& y) { return std::tie(x.left, x.right) < std::tie(y.left, y.right); });
  return d;
}

ReducedCoproduct dualize(const AlgebraPresentation& p) { return dualize(GradedAlgebra::from(p)); }

std::map<std::pair<std::size_t, std::size_t>, LinearCombination> product_table_from(const ReducedCoproduct& d) {
  std::map<std::pair<std::size_t, std::size_t>, LinearCombination> out;
  for (const auto& [c, ts] : d.terms)
    for (const auto& t : ts) accumulate(out[{t.left, t.right}], c, t.coeff);
  for (auto it = out.begin(); it != out.end();) it = it->second.empty() ? out.erase(it) : std::next(it);
  return out;
}

bool is_simply_connected_type(const AlgebraPresentation& p) {
  return std::none_of(p.basis.begin(), p.basis.end(), [](const auto& b) { return b.degree == 1; });
}

}  // namespace sht
