#ifndef HEATFRAME_LINALG_HPP
#define HEATFRAME_LINALG_HPP

#include <vector>

#include "heatframe/rational.hpp"

namespace heatframe {

/// Outcome of solving A x = b exactly over the rationals.
struct LinearSolution {
  bool consistent = false;
  std::vector<Rational> particular;              // free variables set to 0
  std::vector<std::vector<Rational>> kernel;     // basis of ker A
  size_t kernel_dim() const { return kernel.size(); }
};

/// In-place reduced row echelon form; returns the pivot column of each row
/// (rows of zeros are moved to the bottom).
std::vector<size_t> rref(std::vector<std::vector<Rational>>& m);

/// Exact Gaussian elimination. rows = equations, cols = unknowns.
LinearSolution solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace heatframe

#endif
