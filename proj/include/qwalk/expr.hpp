#pragma once

#include "qwalk/function_field.hpp"

#include <string>

namespace qwalk {

// Rational expression in x, y, t and numeric literals with + - * / ^ and parentheses,
// evaluated in the function field. Errors are ParseError with line 1 and the column.
CurveFunction parse_function(const FunctionField& ff, const std::string& text);

} // namespace qwalk
