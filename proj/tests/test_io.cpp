#include <filesystem>

#include "doctest.h"
#include "sht/error.hpp"
#include "sht/io.hpp"

using namespace sht;

namespace {

ErrorCode code_of(std::string_view text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("document was accepted");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("minimal document") {
  InputDocument d = parse_document(R"({"name": "pt", "basis": [{"id": "1", "degree": 0}], "unit": "1"})");
  CHECK(d.algebra.name == "pt");
  CHECK(d.algebra.basis.size() == 1);
  CHECK(d.algebra.products.empty());
  CHECK(d.algebra.lattice.arity() == 0);
  CHECK(!d.cutoffs.max_degree);
}

TEST_CASE("coefficients, characters and cutoffs") {
  InputDocument d = parse_document(R"({
    "name": "q", "characters": {"free_rank": 1, "torsion": [3]},
    "basis": [{"id": "1", "degree": 0, "char": [0, 0]}, {"id": "a", "degree": 2, "char": [1, -1]},
              {"id": "aa", "degree": 4, "char": [2, 1]}],
    "unit": "1",
    "products": [{"left": "a", "right": "a", "result": [{"id": "aa", "coeff": "-6/4"}]}],
    "cutoffs": {"max_degree": 6}})");
  CHECK(d.algebra.products[0].result[0].coeff == Rational(-3, 2));
  CHECK(d.algebra.lattice.torsion() == std::vector<long>{3});
  CHECK(d.algebra.basis[1].character == Character{1, -1});
  CHECK(d.cutoffs.max_degree == 6);
  CHECK(!d.cutoffs.max_weight);
  InputDocument again = parse_document(write_document(d));
  CHECK(write_document(again) == write_document(d));
}

TEST_CASE("schema errors") {
  CHECK(code_of("not json") == ErrorCode::Schema);
  CHECK(code_of("[]") == ErrorCode::Schema);
  CHECK(code_of(R"({"basis": [], "unit": "1"})") == ErrorCode::Schema);
  CHECK(code_of(R"({"name": "x", "basis": [{"id": "1", "degree": -1}], "unit": "1"})") == ErrorCode::Schema);
  CHECK(code_of(R"({"name": "x", "basis": [{"id": "1", "degree": 1.5}], "unit": "1"})") == ErrorCode::Schema);
  CHECK(code_of(R"({"name": "x", "basis": [], "unit": "1", "extra": 0})") == ErrorCode::Schema);
  CHECK(code_of(R"({"name": "x", "basis": [], "unit": "1",
                    "products": [{"left": "1", "right": "1", "result": [{"id": "1", "coeff": "1/0"}]}]})") ==
        ErrorCode::Schema);
  CHECK(code_of(R"({"name": "x", "characters": {"torsion": [1]}, "basis": [], "unit": "1"})") == ErrorCode::Schema);
  try {
    parse_document(R"({"name": "x", "basis": [{"id": "1", "degree": 0}, {"id": 2, "degree": 2}], "unit": "1"})");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("basis[1].id") != std::string::npos);
  }
}

TEST_CASE("unreadable file") {
  try {
    read_document("/nonexistent/x.json");
    FAIL("expected IO_ERROR");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
}

TEST_CASE("shipped corpus round-trips through write_document") {
  int seen = 0;
  for (const auto& f : std::filesystem::directory_iterator(SHT_CORPUS_DIR)) {
    if (f.path().extension() != ".json") continue;
    INFO(f.path().string());
    InputDocument d = read_document(f.path().string());
    CHECK(write_document(parse_document(write_document(d))) == write_document(d));
    ++seen;
  }
  CHECK(seen >= 10);
}
