#pragma once

#include <string_view>

#include "switchlab/graph.hpp"

namespace switchlab {

/// Parses a degree vector written either as a plain comma list ("4,3,3,4"),
/// kept in the given vertex order, or with multiplicities ("3^1,2^6,1^3"),
/// expanded and sorted nonincreasing. Malformed input raises ParseError with
/// the character position; an odd sum raises InfeasibleError.
DegreeVector parse_degree_expression(std::string_view expr);

}  // namespace switchlab
