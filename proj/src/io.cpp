#include "sht/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sht/error.hpp"

namespace sht {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::Schema, path + ": " + what);
}

void only_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : obj.items())
    if (!ok.count(k)) bad(path, "unknown key '" + k + "'");
}

const json& field(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(path, std::string("missing '") + key + "'");
  return *it;
}

std::string str(const json& v, const std::string& path) {
  if (!v.is_string()) bad(path, "expected a string");
  return v.get<std::string>();
}

long integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) bad(path, "expected an integer");
  return v.get<long>();
}

long nat(const json& v, const std::string& path) {
  long n = integer(v, path);
  if (n < 0) bad(path, "expected a non-negative integer");
  return n;
}

const json& array(const json& v, const std::string& path) {
  if (!v.is_array()) bad(path, "expected an array");
  return v;
}

Rational coefficient(const json& v, const std::string& path) {
  // "p/q" or "n"; a bare JSON integer is accepted too since it is exact
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long>()));
  if (!v.is_string()) bad(path, "expected a rational string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

}  // namespace

InputDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Schema, std::string("not JSON: ") + e.what());
  }
  if (!root.is_object()) bad("$", "expected an object");
  only_keys(root, "$", {"name", "characters", "basis", "unit", "products", "cutoffs"});

  InputDocument doc;
  AlgebraPresentation& p = doc.algebra;
  p.name = str(field(root, "$", "name"), "name");

  if (auto it = root.find("characters"); it != root.end()) {
    if (!it->is_object()) bad("characters", "expected an object");
    only_keys(*it, "characters", {"free_rank", "torsion"});
    long rank = it->contains("free_rank") ? nat((*it)["free_rank"], "characters.free_rank") : 0;
    std::vector<long> torsion;
    if (it->contains("torsion")) {
      const json& t = array((*it)["torsion"], "characters.torsion");
      for (std::size_t i = 0; i < t.size(); ++i) {
        std::string at = "characters.torsion[" + std::to_string(i) + "]";
        long n = nat(t[i], at);
        if (n < 2) bad(at, "torsion orders must be at least 2");
        torsion.push_back(n);
      }
    }
    p.lattice = CharacterLattice(static_cast<std::size_t>(rank), torsion);
  }

  const json& basis = array(field(root, "$", "basis"), "basis");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::string at = "basis[" + std::to_string(i) + "]";
    const json& b = basis[i];
    if (!b.is_object()) bad(at, "expected an object");
    only_keys(b, at, {"id", "degree", "char"});
    BasisElement e;
    e.id = str(field(b, at, "id"), at + ".id");
    e.degree = static_cast<int>(nat(field(b, at, "degree"), at + ".degree"));
    if (auto c = b.find("char"); c != b.end()) {
      const json& arr = array(*c, at + ".char");
      for (std::size_t k = 0; k < arr.size(); ++k)
        e.character.push_back(integer(arr[k], at + ".char[" + std::to_string(k) + "]"));
    }
    p.basis.push_back(std::move(e));
  }

  p.unit_id = str(field(root, "$", "unit"), "unit");

  if (auto it = root.find("products"); it != root.end()) {
    const json& prods = array(*it, "products");
    for (std::size_t i = 0; i < prods.size(); ++i) {
      std::string at = "products[" + std::to_string(i) + "]";
      const json& e = prods[i];
      if (!e.is_object()) bad(at, "expected an object");
      only_keys(e, at, {"left", "right", "result"});
      ProductEntry pe;
      pe.left = str(field(e, at, "left"), at + ".left");
      pe.right = str(field(e, at, "right"), at + ".right");
      const json& res = array(field(e, at, "result"), at + ".result");
      for (std::size_t k = 0; k < res.size(); ++k) {
        std::string rt = at + ".result[" + std::to_string(k) + "]";
        if (!res[k].is_object()) bad(rt, "expected an object");
        only_keys(res[k], rt, {"id", "coeff"});
        pe.result.push_back({str(field(res[k], rt, "id"), rt + ".id"), coefficient(field(res[k], rt, "coeff"), rt + ".coeff")});
      }
      p.products.push_back(std::move(pe));
    }
  }

  if (auto it = root.find("cutoffs"); it != root.end()) {
    if (!it->is_object()) bad("cutoffs", "expected an object");
    only_keys(*it, "cutoffs", {"max_degree", "max_weight"});
    if (it->contains("max_degree"))
      doc.cutoffs.max_degree = static_cast<int>(nat((*it)["max_degree"], "cutoffs.max_degree"));
    if (it->contains("max_weight"))
      doc.cutoffs.max_weight = static_cast<int>(nat((*it)["max_weight"], "cutoffs.max_weight"));
  }
  return doc;
}

InputDocument read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::Io, "error reading '" + path + "'");
  return parse_document(ss.str());
}

std::string write_document(const InputDocument& doc) {
  const AlgebraPresentation& p = doc.algebra;
  json root;
  root["name"] = p.name;
  if (p.lattice.arity() > 0)
    root["characters"] = {{"free_rank", p.lattice.free_rank()}, {"torsion", p.lattice.torsion()}};
  root["basis"] = json::array();
  for (const auto& b : p.basis) {
    json e = {{"id", b.id}, {"degree", b.degree}};
    if (!b.character.empty()) e["char"] = b.character;
    root["basis"].push_back(std::move(e));
  }
  root["unit"] = p.unit_id;
  root["products"] = json::array();
  for (const auto& pe : p.products) {
    json res = json::array();
    for (const auto& t : pe.result) res.push_back({{"id", t.id}, {"coeff", to_string(t.coeff)}});
    root["products"].push_back({{"left", pe.left}, {"right", pe.right}, {"result", std::move(res)}});
  }
  if (doc.cutoffs.max_degree || doc.cutoffs.max_weight) {
    json c = json::object();
    if (doc.cutoffs.max_degree) c["max_degree"] = *doc.cutoffs.max_degree;
    if (doc.cutoffs.max_weight) c["max_weight"] = *doc.cutoffs.max_weight;
    root["cutoffs"] = std::move(c);
  }
  return root.dump(2) + "\n";
}

}  // namespace sht
