#include "sht/rational.hpp"

#include <cctype>

#include "sht/error.hpp"

namespace sht {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "INVALID_INPUT";
    case ErrorCode::CompositionNonzero: return "COMPOSITION_NONZERO";
    case ErrorCode::CutoffTooSmall: return "CUTOFF_TOO_SMALL";
    case ErrorCode::OutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::DSquaredNonzero: return "DSQUARED_NONZERO";
    case ErrorCode::CutoffExceeded: return "CUTOFF_EXCEEDED";
    case ErrorCode::NotComplete: return "NOT_COMPLETE";
    case ErrorCode::NotSimplyConnected: return "NOT_SIMPLY_CONNECTED";
    case ErrorCode::DegreeCutoff: return "DEGREE_CUTOFF";
    case ErrorCode::CutoffMismatch: return "CUTOFF_MISMATCH";
    case ErrorCode::SimplicialIdentityViolation: return "SIMPLICIAL_IDENTITY_VIOLATION";
    case ErrorCode::NotACdga: return "NOT_A_CDGA";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::Schema: return "SCHEMA_ERROR";
    case ErrorCode::Io: return "IO_ERROR";
  }
  return "UNKNOWN";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorCode::Schema, "malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Integer p(n, 10), q(std::string(den), 10);
  if (q == 0) throw Error(ErrorCode::Schema, "zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace sht
