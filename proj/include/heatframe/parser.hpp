#ifndef HEATFRAME_PARSER_HPP
#define HEATFRAME_PARSER_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "heatframe/operators.hpp"
#include "heatframe/polynomial.hpp"

namespace heatframe {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Text grammar shared by the CLI, the reports and the table transcriptions.
/// Terms look like `-4/3*l4^2`, `z1^3`, `psi[1,1,3]`, `1/2*d/dz1^2`,
/// `(3/2*l8 - 2/5*l4^2)*z3^2`. Whitespace is ignored; printing followed by
/// parsing is the identity.
Polynomial parse_polynomial(std::string_view text);
DiffOperator parse_operator(std::string_view text);

}  // namespace heatframe

#endif
