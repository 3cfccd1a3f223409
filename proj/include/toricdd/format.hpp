#pragma once

#include <string>
#include <vector>

#include "toricdd/polynomial.hpp"

namespace toricdd {

/// Renders in the library's interchange format: variables as x[l,i,j], s[i],
/// t[j], z[l,i,j]; coefficients as p/q; terms joined by " + " / " - ".
/// parse(print(f)) == f for every normalized polynomial.
std::string to_string(const Polynomial& f);
std::string to_string(const Monomial& m, const RingSpec& ring);

/// Parses a polynomial in the interchange format into the given ring.
/// Throws std::invalid_argument on syntax errors or unknown variables.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

/// Reads one polynomial per line; '#' starts a comment, blank lines skipped.
std::vector<Polynomial> parse_ideal_lines(const std::string& text, const RingPtr& ring);

/// Variable ids mentioned in a chunk of interchange-format text (used to
/// infer ring dimensions from ideal files).
std::vector<VarId> scan_variables(const std::string& text);

}  // namespace toricdd
