#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "faclab/gaussian_rational.hpp"
#include "faclab/multi_poly.hpp"
#include "faclab/uni_poly.hpp"

namespace faclab::cli {

/// Syntax error with the zero-based character offset where parsing stopped.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses terms like "3*X1^2*X2 - 1/2*X3 + (1+2i)*X1". Variables are
/// X1, X2, ... (or x1, ...; a bare X means X1). The result has
/// max(min_vars, highest index) variables.
MultiPoly parse_poly(std::string_view text, std::size_t min_vars = 1);

/// "3", "-1/2", "2i", "1/2-3i", optionally wrapped in parentheses.
GaussianRational parse_scalar(std::string_view text);
/// Comma-separated scalars.
std::vector<GaussianRational> parse_scalar_list(std::string_view text);
/// Either "lo..hi" (integers, inclusive) or a comma-separated scalar list.
std::vector<GaussianRational> parse_grid(std::string_view text);

/// Prints terms in decreasing lexicographic exponent order; the output
/// reparses to an equal polynomial. Default names are X1..Xm.
std::string format_poly(const MultiPoly& f, std::span<const std::string> names = {});
std::string format_unipoly(const UniPoly& p, const std::string& name = "X");
std::string format_list(std::span<const GaussianRational> values);

}  // namespace faclab::cli
