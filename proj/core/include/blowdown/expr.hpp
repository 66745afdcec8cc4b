#pragma once

#include "blowdown/field.hpp"

#include <string>

namespace blowdown {

// Parses scalar expressions over Q(i, sqrt2, sqrt3) as they appear in
// scenario files: integers, fractions, the constants i/sqrt2/sqrt3/sqrt6,
// + - * / ^, and parentheses. Examples:
//   "-(1+sqrt3)*sqrt2*i"      "(sqrt2/2)*i"      "2*sqrt2*i"      "-3/4"
FieldElement parse_field_expr(const std::string& text);

} // namespace blowdown
