#ifndef HEATFRAME_SIGMA_HPP
#define HEATFRAME_SIGMA_HPP

#include <map>
#include <vector>

#include "heatframe/frame.hpp"
#include "heatframe/polynomial.hpp"

namespace heatframe {

/// Weight-homogeneous formal series of weight -n, n = g(g+1)/2, truncated
/// at a lambda-weight bound. A truncation is an ordinary polynomial.
struct GradedSeries {
  int genus = 0;
  long long total_weight = 0;  // -n
  int lambda_bound = 0;        // W
  long long first_stratum = 0; // lambda-weight of the leading stratum
  Polynomial value;
};

struct SolutionBasis {
  std::vector<GradedSeries> elements;
  /// Solution-space dimension discovered at each lambda-weight stratum.
  std::map<long long, size_t> kernel_dims;
};

struct EmptyKernel : std::runtime_error {
  explicit EmptyKernel(const std::string& what) : std::runtime_error(what) {}
};

/// z-monomials of the given weighted degree (sum k * exp_k).
std::vector<Monomial> z_monomials_of_degree(const GenusContext& ctx, long long degree);

/// Terms of H_{2k} whose coefficients are lambda-free; these are the only
/// parts that act within a lambda-weight stratum.
DiffOperator lambda_free_part(const DiffOperator& op);

/// Solves Q phi = 0 stratum by stratum in lambda-weight. ops holds operator
/// labels 2k and must contain 0; strata are triangular because every L_{2k}
/// with k >= 1 strictly raises lambda-weight. The first basis element is
/// normalized so its distinguished lambda-free monomial has coefficient 1.
SolutionBasis kernel_basis(int genus, const std::vector<int>& ops, int max_lambda_weight);

/// Q_{2k} applied to the truncation; zero on all strata of lambda-weight
/// <= W - 2k whenever the series solves the full system.
Polynomial sigma_residual(int genus, const GradedSeries& s, int k);

/// The monomial used for scale normalization (z1 for g=1, z3 for g=2,
/// lowest total degree then canonical order in general).
Monomial distinguished_monomial(int genus);

}  // namespace heatframe

#endif
