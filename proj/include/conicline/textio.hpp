#ifndef CONICLINE_TEXTIO_HPP
#define CONICLINE_TEXTIO_HPP

#include <string>

#include "conicline/unipoly.hpp"

namespace conicline {

/// Parses the sparse polynomial text format: a sum of terms
/// "coeff", "coeff*t^k", "t^k", "t", with '+'/'-' separators (the unicode
/// minus is accepted) and rational coefficients "a/b".
UniPoly parse_poly(const FieldSpec& f, const std::string& text);

/// Canonical rendering: terms by descending degree, "0" for the zero
/// polynomial.
std::string format_poly(const UniPoly& p);

}  // namespace conicline

#endif
