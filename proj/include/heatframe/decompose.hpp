#ifndef HEATFRAME_DECOMPOSE_HPP
#define HEATFRAME_DECOMPOSE_HPP

#include <vector>

#include "heatframe/operators.hpp"

namespace heatframe {

enum class DecomposeStatus { Ok, NotInModule, Ambiguous };

/// Result of expressing target = sum c_k * generator_k with c_k in Q[lambda].
/// kernel_dim > 0 means the coefficients are not unique (status Ambiguous);
/// the particular solution is still reported, never guessed silently.
struct StructureDecomposition {
  DecomposeStatus status = DecomposeStatus::NotInModule;
  std::vector<Polynomial> coefficients;
  DiffOperator residual;
  size_t kernel_dim = 0;

  bool ok() const { return status == DecomposeStatus::Ok; }
  bool unique() const { return status == DecomposeStatus::Ok && kernel_dim == 0; }
};

/// All lambda-monomials of the given weight over the genus' lambda alphabet.
std::vector<Monomial> lambda_monomials_of_weight(const GenusContext& ctx, long long weight);

/// Grading makes the candidate space finite: wt c_k = wt target - wt gen_k
/// bounds the lambda-monomials exactly, and the rest is one exact linear
/// solve over Q. Target and generators must be homogeneous.
StructureDecomposition decompose(const DiffOperator& target,
                                 const std::vector<DiffOperator>& generators,
                                 const GenusContext& ctx);

}  // namespace heatframe

#endif
