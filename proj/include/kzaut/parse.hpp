#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "kzaut/endo.hpp"
#include "kzaut/ncpoly.hpp"
#include "kzaut/poly.hpp"

namespace kzaut {

// Expression grammar (whitespace-insensitive):
//
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := rational ['*'] factor* | factor+      ('*' may separate factors)
//   factor   := symbol ['^' uint] | '(' expr ')' ['^' uint]
//   rational := uint ['/' uint]
//
// An identifier that is not a generator name is split greedily into the
// longest known names, so "zxz" reads as "z x z" and "z1z2" as "z1 z2".
// Errors are ParseError with 1-based line and column; line and column give
// the position of the first character of text.

NCPoly parse_ncpoly(std::string_view text, const AlgebraPtr& alg, std::size_t line = 1, std::size_t column = 1);

CommPoly parse_commpoly(std::string_view text, const RingPtr& ring, std::size_t line = 1, std::size_t column = 1);

// EndoFile:
//
//   # comment
//   vars: x y, fixed: z        (optional; otherwise the left-hand sides in order, fixed z)
//   field: q | fp:<p>          (optional)
//   x -> <expr>
//   y -> <expr>
//
// field_override, when set, replaces the field named in the file.
KzEndo parse_endo(std::string_view text, std::optional<Field> field_override = std::nullopt);

/// Header lines and one "x -> f" line per generator; parse_endo reads it back.
std::string print_endo(const KzEndo& phi);

}  // namespace kzaut
