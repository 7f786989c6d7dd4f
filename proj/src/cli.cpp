#include "sht/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sht/dold_kan.hpp"
#include "sht/error.hpp"
#include "sht/free_lie.hpp"
#include "sht/io.hpp"
#include "sht/quillen_weight.hpp"
#include "sht/ss_engine.hpp"
#include "sht/sullivan_oracle.hpp"

namespace sht {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;
constexpr int kCutoff = 3;

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::Schema:
    case ErrorCode::Io:
      return kBadInput;
    case ErrorCode::CutoffExceeded:
    case ErrorCode::CutoffTooSmall:
    case ErrorCode::CutoffMismatch:
    case ErrorCode::DegreeCutoff:
    case ErrorCode::OutOfRange:
      return kCutoff;
    default:
      return kFailed;
  }
}

struct Options {
  std::string input;
  int max_degree = 8;
  int max_weight = 0;
  bool json = false;
  int page = 2;
  bool check_degeneration = false;
  int fuzz = 0;
  std::uint64_t seed = 1;
  int levels = 4;
  int degree = 0;
  bool compare = false;

  CLI::Option* max_degree_opt = nullptr;
  CLI::Option* max_weight_opt = nullptr;
  CLI::Option* fuzz_opt = nullptr;
  CLI::Option* degree_opt = nullptr;
};

// Everything a command produces; rendered once at the end so a failure
// halfway never leaves half a table on stdout.
struct Session {
  std::string command;
  json payload = json::object();
  std::ostringstream text;
  int status = kOk;
};

// Aborts the command with an exit status after the report is written.
struct Stop {
  int status;
};

struct Loaded {
  AlgebraPresentation algebra;
  int n = 8;
  int w = 8;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string format_vector(const Vector& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(to_string(x));
  return "[" + join(parts, ",") + "]";
}

json vector_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Loaded load(const Options& o, Session& s) {
  InputDocument doc = read_document(o.input);
  Loaded l;
  l.algebra = std::move(doc.algebra);
  l.n = o.max_degree_opt->count() ? o.max_degree : doc.cutoffs.max_degree.value_or(8);
  l.w = o.max_weight_opt->count() ? o.max_weight : doc.cutoffs.max_weight.value_or(l.n);

  s.payload["input"] = l.algebra.name;
  s.payload["cutoffs"] = {{"max_degree", l.n}, {"max_weight", l.w}};

  ValidationReport r = validate_algebra(l.algebra);
  if (!r.ok()) {
    s.text << "INVALID\n";
    json issues = json::array();
    for (const auto& i : r.issues) {
      s.text << i.code << "\t" << i.message << "\n";
      issues.push_back({{"code", i.code}, {"message", i.message}});
    }
    s.payload["ok"] = false;
    s.payload["issues"] = std::move(issues);
    throw Stop{kFailed};
  }
  s.text << "# " << s.command << "\t" << l.algebra.name << "\tmax-degree " << l.n << "\tmax-weight " << l.w << "\n";
  return l;
}

void banner(const HomotopyTable& t, Session& s) {
  s.payload["complete"] = t.complete;
  if (!t.complete) {
    s.text << "TRUNCATED AT WEIGHT " << t.max_w << "\n";
    s.payload["truncated_at_weight"] = t.max_w;
  }
}

// validate ------------------------------------------------------------------

void cmd_validate(const Options& o, Session& s) {
  InputDocument doc = read_document(o.input);
  s.payload["input"] = doc.algebra.name;
  ValidationReport r = validate_algebra(doc.algebra);
  json issues = json::array();
  for (const auto& i : r.issues) issues.push_back({{"code", i.code}, {"message", i.message}});
  s.payload["ok"] = r.ok();
  s.payload["issues"] = std::move(issues);
  if (r.ok()) {
    s.payload["simply_connected"] = is_simply_connected_type(doc.algebra);
    s.text << "OK\n";
    return;
  }
  s.text << "INVALID\n";
  for (const auto& i : r.issues) s.text << i.code << "\t" << i.message << "\n";
  s.status = kFailed;
}

// pi, supports, hurewicz ------------------------------------------------------

void cmd_pi(const Options& o, Session& s) {
  Loaded l = load(o, s);
  FormalLieModel model = build_model(l.algebra, l.n, l.w);
  HomotopyTable t = homotopy_table(model, l.n, l.w);
  banner(t, s);

  s.text << "m\ttotal\tweights\n";
  json rows = json::array();
  for (int m = t.min_m; m <= l.n; ++m) {
    std::vector<std::size_t> weights;
    for (int w = 1; w <= l.w; ++w) weights.push_back(t.weight_total(m, w));
    while (!weights.empty() && weights.back() == 0) weights.pop_back();
    std::vector<std::string> parts;
    for (auto x : weights) parts.push_back(std::to_string(x));
    s.text << m << "\t" << t.total(m) << "\t[" << join(parts, ",") << "]\n";
    rows.push_back({{"m", m}, {"total", t.total(m)}, {"weights", weights}});
  }
  s.payload["rows"] = std::move(rows);

  json entries = json::array();
  for (const auto& [key, dim] : t.entries)
    if (dim) entries.push_back({{"m", std::get<0>(key)}, {"weight", std::get<1>(key)}, {"character", std::get<2>(key)}, {"dim", dim}});
  s.payload["entries"] = entries;
  if (l.algebra.lattice.arity() > 0) {
    s.text << "\nm\tweight\tcharacter\tdim\n";
    for (const auto& e : entries)
      s.text << e["m"].get<int>() << "\t" << e["weight"].get<int>() << "\t"
             << format_character(e["character"].get<Character>()) << "\t" << e["dim"].get<std::size_t>() << "\n";
  }
}

void cmd_supports(const Options& o, Session& s) {
  Loaded l = load(o, s);
  HomotopyTable t = homotopy_table(build_model(l.algebra, l.n, l.w), l.n, l.w);
  banner(t, s);
  s.text << "m\tsupport\n";
  json rows = json::array();
  for (int m = t.min_m; m <= l.n; ++m) {
    std::vector<std::string> parts;
    json chars = json::array();
    for (const auto& c : supports(t, m)) {
      parts.push_back(format_character(c));
      chars.push_back(c);
    }
    s.text << m << "\t" << (parts.empty() ? "-" : join(parts, " ")) << "\n";
    rows.push_back({{"m", m}, {"support", std::move(chars)}});
  }
  s.payload["rows"] = std::move(rows);
}

void cmd_hurewicz(const Options& o, Session& s) {
  Loaded l = load(o, s);
  FormalLieModel model = build_model(l.algebra, l.n, l.w);
  int lo = o.degree_opt->count() ? o.degree : 2;
  int hi = o.degree_opt->count() ? o.degree : l.n;
  s.text << "m\trank\tbasis\timage\n";
  json rows = json::array();
  for (int m = lo; m <= hi; ++m) {
    HurewiczImage h = hurewicz_rank(model, m);
    std::vector<std::string> image;
    json vectors = json::array();
    for (const auto& v : h.basis) {
      image.push_back(format_vector(v));
      vectors.push_back(vector_json(v));
    }
    s.text << m << "\t" << h.rank << "\t" << (h.ids.empty() ? "-" : join(h.ids, ",")) << "\t"
           << (image.empty() ? "-" : join(image, " ")) << "\n";
    rows.push_back({{"m", m}, {"rank", h.rank}, {"basis", h.ids}, {"image", std::move(vectors)}});
  }
  s.payload["rows"] = std::move(rows);
}

// ss ---------------------------------------------------------------------------

void cmd_ss(const Options& o, Session& s) {
  if (o.fuzz_opt->count()) {
    std::mt19937_64 rng(o.seed);
    s.payload["seed"] = o.seed;
    s.payload["trials"] = o.fuzz;
    json failures = json::array();
    std::ostringstream detail;
    for (int i = 0; i < o.fuzz; ++i) {
      FilteredComplex fc = random_filtered_complex(rng, 24, 4);
      if (auto bad = convergence_violation(fc)) {
        failures.push_back({{"trial", i}, {"detail", *bad}});
        detail << i << "\t" << *bad << "\n";
      }
    }
    s.text << "trials\tfailures\n" << o.fuzz << "\t" << failures.size() << "\n";
    if (!failures.empty()) s.text << "\ntrial\tdetail\n" << detail.str();
    s.payload["failures"] = std::move(failures);
    if (!s.payload["failures"].empty()) s.status = kFailed;
    return;
  }
  if (o.input.empty()) throw CLI::RequiredError("INPUT");

  Loaded l = load(o, s);
  FormalLieModel model = build_model(l.algebra, l.n, l.w);
  HomotopyTable t = homotopy_table(model, l.n, l.w);
  banner(t, s);
  FilteredComplex fc = filtered_from_model(model);
  SpectralSequencePage pg = page(fc, o.page);

  // only the range the truncated model computes faithfully
  s.text << "E" << o.page << "\np\tq\tdim\n";
  json dims = json::array();
  for (const auto& [pq, dim] : pg.dims) {
    auto [p, q] = pq;
    if (p > l.w || q - p > l.n) continue;
    s.text << p << "\t" << q << "\t" << dim << "\n";
    dims.push_back({{"p", p}, {"q", q}, {"dim", dim}});
  }
  s.payload["page"] = o.page;
  s.payload["dims"] = std::move(dims);

  if (o.check_degeneration) {
    DegenerationReport rep = check_degeneration(fc, o.page, std::max(o.page, fc.length() + 1));
    s.text << "degenerate from page " << o.page << ": " << (rep.degenerates ? "true" : "false") << "\n";
    if (!rep.degenerates) s.text << "first nonzero differential on page " << rep.first_nonzero_page << "\n";
    s.payload["degenerates"] = rep.degenerates;
    s.payload["first_nonzero_page"] = rep.first_nonzero_page;
  }
}

// minimal-model --------------------------------------------------------------

void cmd_minimal_model(const Options& o, Session& s) {
  Loaded l = load(o, s);
  MinimalModel mm = minimal_model(l.algebra, l.n);

  std::optional<CompareReport> cmp;
  if (o.compare) cmp = compare(mm, homotopy_table(build_model(l.algebra, l.n, l.w), l.n, l.w));

  s.text << "degree\tgenerators" << (cmp ? "\tpi" : "") << "\n";
  json counts = json::array();
  for (const auto& [k, c] : mm.counts()) {
    s.text << k << "\t" << c;
    json row = {{"degree", k}, {"generators", c}};
    if (cmp) {
      s.text << "\t" << cmp->rows.at(k).second;
      row["pi"] = cmp->rows.at(k).second;
    }
    s.text << "\n";
    counts.push_back(std::move(row));
  }
  s.payload["counts"] = std::move(counts);

  s.text << "\nname\tdegree\tdifferential\n";
  json gens = json::array();
  for (const auto& g : mm.generators()) {
    s.text << g.name << "\t" << g.degree << "\t" << mm.format(g.differential) << "\n";
    gens.push_back({{"name", g.name}, {"degree", g.degree}, {"differential", mm.format(g.differential)}});
  }
  s.payload["generators"] = std::move(gens);

  if (cmp) {
    s.text << "compare: " << (cmp->pass ? "PASS" : "FAIL") << "\n";
    s.payload["compare"] = {{"pass", cmp->pass}, {"mismatched", cmp->mismatched}};
    if (!cmp->pass) s.status = kFailed;
  }
}

// doldkan --------------------------------------------------------------------

void cmd_doldkan(const Options& o, Session& s) {
  if (o.fuzz_opt->count()) {
    std::mt19937_64 rng(o.seed);
    s.payload["seed"] = o.seed;
    s.payload["trials"] = o.fuzz;
    json failures = json::array();
    for (int i = 0; i < o.fuzz; ++i) {
      CochainComplex c = random_cochain_complex(rng, 5, 4);
      int m = std::uniform_int_distribution<int>(0, 5)(rng);
      CosimplicialVS v = denormalize(c, m);
      if (auto bad = v.identity_violation())
        failures.push_back({{"trial", i}, {"detail", *bad}});
      else if (!(normalize(v) == c.truncated(m)))
        failures.push_back({{"trial", i}, {"detail", "normalize(denormalize(c)) != c at level " + std::to_string(m)}});
    }
    s.text << "trials\tfailures\n" << o.fuzz << "\t" << failures.size() << "\n";
    if (!failures.empty()) {
      s.text << "\ntrial\tdetail\n";
      for (const auto& f : failures) s.text << f["trial"].get<int>() << "\t" << f["detail"].get<std::string>() << "\n";
      s.status = kFailed;
    }
    s.payload["failures"] = std::move(failures);
    return;
  }
  if (o.input.empty()) throw CLI::RequiredError("INPUT");

  Loaded l = load(o, s);
  Cdga c = Cdga::formal(GradedAlgebra::from(l.algebra));
  CosimplicialAlgebra a = denormalize_algebra(c, o.levels);

  s.text << "level\tdim\n";
  json dims = json::array();
  for (int n = 0; n <= o.levels; ++n) {
    s.text << n << "\t" << a.vs().dims[n] << "\n";
    dims.push_back(a.vs().dims[n]);
  }
  auto violation = a.vs().identity_violation();
  bool round_trip = !violation && normalize(a.vs()) == c.complex().truncated(o.levels);
  AlgebraCheck alg = check_cosimplicial_algebra(a, std::min(o.levels, 3));

  s.text << "simplicial identities: " << (violation ? "false (" + *violation + ")" : std::string("true")) << "\n";
  s.text << "round trip: " << (round_trip ? "true" : "false") << "\n";
  s.text << "shuffle product: " << (alg.ok ? "true" : "false") << "\n";
  for (const auto& p : alg.problems) s.text << "\t" << p << "\n";

  s.payload["levels"] = o.levels;
  s.payload["dims"] = std::move(dims);
  s.payload["simplicial_identities"] = !violation;
  s.payload["round_trip"] = round_trip;
  s.payload["shuffle_product"] = alg.ok;
  s.payload["problems"] = alg.problems;
  if (violation || !round_trip || !alg.ok) s.status = kFailed;
}

// lie-dims ---------------------------------------------------------------------

void cmd_lie_dims(const Options& o, Session& s) {
  Loaded l = load(o, s);
  FormalLieModel model = build_model(l.algebra, l.n, l.w);
  const FreeLieBasis& b = model.basis();
  bool chars = l.algebra.lattice.arity() > 0;

  s.text << "generators\t";
  std::vector<std::string> gens;
  for (const auto& g : b.generators().generators) gens.push_back(g.id + ":" + std::to_string(g.reduced_degree));
  s.text << join(gens, " ") << "\n";

  s.text << "degree\tweight\t" << (chars ? "character\t" : "") << "dim\n";
  json rows = json::array();
  for (const auto& k : b.slots()) {
    if (k.weight > l.w) continue;
    std::size_t d = b.slot_dim(k);
    if (!d) continue;
    s.text << k.degree << "\t" << k.weight << "\t" << (chars ? format_character(k.character) + "\t" : "") << d << "\n";
    rows.push_back({{"degree", k.degree}, {"weight", k.weight}, {"character", k.character}, {"dim", d}});
  }
  s.payload["rows"] = std::move(rows);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weight-graded rational homotopy of formal spaces, computed exactly.", "sht"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c, bool input_required) {
    auto* in = c->add_option("INPUT", o.input, "algebra presentation (JSON)")->check(CLI::ExistingFile);
    if (input_required) in->required();
    auto* md = c->add_option("--max-degree", o.max_degree, "homotopy degree cutoff N (default 8)")->check(CLI::NonNegativeNumber);
    auto* mw = c->add_option("--max-weight", o.max_weight, "weight cutoff (default N)")->check(CLI::NonNegativeNumber);
    c->add_flag("--json", o.json, "machine-readable output");
    return std::pair{md, mw};
  };

  std::map<CLI::App*, std::pair<CLI::Option*, CLI::Option*>> cutoff_opts;
  auto sub = [&](const char* name, const char* help, bool input_required) {
    CLI::App* c = app.add_subcommand(name, help);
    cutoff_opts[c] = common(c, input_required);
    return c;
  };

  sub("validate", "check a presentation", true);
  sub("pi", "weight-graded homotopy table", true);
  sub("supports", "characters occurring in each homotopy group", true);
  CLI::App* hur = sub("hurewicz", "Hurewicz images", true);
  CLI::App* ss = sub("ss", "weight spectral sequence", false);
  CLI::App* mm = sub("minimal-model", "Sullivan minimal model", true);
  CLI::App* dk = sub("doldkan", "Dold-Kan round trip and shuffle products", false);
  sub("lie-dims", "free Lie algebra slot dimensions", true);

  CLI::Option* hur_degree = hur->add_option("--degree", o.degree, "single degree m");
  ss->add_option("--page", o.page, "page r (default 2)")->check(CLI::PositiveNumber);
  ss->add_flag("--check-degeneration", o.check_degeneration, "check d_r = 0 from this page on");
  CLI::Option* ss_fuzz = ss->add_option("--fuzz", o.fuzz, "random filtered complexes instead of INPUT")->check(CLI::NonNegativeNumber);
  ss->add_option("--seed", o.seed, "fuzz seed");
  mm->add_flag("--compare", o.compare, "compare generator counts with the homotopy table");
  dk->add_option("--levels", o.levels, "truncation level (default 4)")->check(CLI::NonNegativeNumber);
  CLI::Option* dk_fuzz = dk->add_option("--fuzz", o.fuzz, "random complexes instead of INPUT")->check(CLI::NonNegativeNumber);
  dk->add_option("--seed", o.seed, "fuzz seed");

  Session s;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  CLI::App* chosen = app.get_subcommands().front();
  s.command = chosen->get_name();
  std::tie(o.max_degree_opt, o.max_weight_opt) = cutoff_opts.at(chosen);
  o.degree_opt = hur_degree;
  o.fuzz_opt = chosen == dk ? dk_fuzz : ss_fuzz;
  s.payload["command"] = s.command;

  try {
    if (s.command == "validate") cmd_validate(o, s);
    else if (s.command == "pi") cmd_pi(o, s);
    else if (s.command == "supports") cmd_supports(o, s);
    else if (s.command == "hurewicz") cmd_hurewicz(o, s);
    else if (s.command == "ss") cmd_ss(o, s);
    else if (s.command == "minimal-model") cmd_minimal_model(o, s);
    else if (s.command == "doldkan") cmd_doldkan(o, s);
    else cmd_lie_dims(o, s);
  } catch (const Stop& stop) {
    s.status = stop.status;
  } catch (const Error& e) {
    s.status = exit_code(e.code());
    s.payload["error"] = {{"code", to_string(e.code())}, {"message", e.what()}};
    err << "error: " << e.what() << "\n";
    if (!o.json) return s.status;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  if (o.json) {
    s.payload["exit"] = s.status;
    out << s.payload.dump(2) << "\n";
  } else {
    out << s.text.str();
  }
  return s.status;
}

}  // namespace sht
