#pragma once

#include <string>
#include <vector>

#include "kohn/poly.hpp"

namespace kohn {

// Text syntax: variables z1..zN or w1..wN, integer or rational coefficients,
// operators + - * ^ and parentheses, e.g. "z1^2 - 3/2*z2*z3".

// Parse with a fixed ambient variable count.
Poly parse_poly(const std::string& text, unsigned nvars);

// Parse a comma-separated list; the ambient variable count is the largest
// index appearing anywhere in the list (or an explicit override).
std::vector<Poly> parse_poly_list(const std::string& text, unsigned nvars_override = 0);

// Largest variable index mentioned (1-based), 0 if none.
unsigned max_variable_index(const std::string& text);

// Render using the given variable prefix ("z" or "w").
std::string poly_to_string(const Poly& p, const std::string& var_prefix = "z");

}  // namespace kohn
