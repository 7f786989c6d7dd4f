#pragma once

// JSON input documents: an algebra presentation plus optional default cutoffs.

#include <optional>
#include <string>
#include <string_view>

#include "sht/graded_core.hpp"

namespace sht {

struct Cutoffs {
  std::optional<int> max_degree;
  std::optional<int> max_weight;
};

struct InputDocument {
  AlgebraPresentation algebra;
  Cutoffs cutoffs;
};

/// Throws Error(Schema) naming the offending path, e.g. "basis[2].degree".
InputDocument parse_document(std::string_view text);

/// parse_document on a file; Error(Io) when it cannot be read.
InputDocument read_document(const std::string& path);

/// Canonical JSON text of a presentation (products in input order).
std::string write_document(const InputDocument& doc);

}  // namespace sht
