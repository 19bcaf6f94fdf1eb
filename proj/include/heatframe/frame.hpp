#ifndef HEATFRAME_FRAME_HPP
#define HEATFRAME_FRAME_HPP

#include <stdexcept>
#include <vector>

#include "heatframe/decompose.hpp"
#include "heatframe/operators.hpp"
#include "heatframe/report.hpp"

namespace heatframe {

struct UnsupportedGenus : std::invalid_argument {
  explicit UnsupportedGenus(int g)
      : std::invalid_argument("no explicit heat operator family for genus " + std::to_string(g)) {}
};

/// Symmetric 2g x 2g matrix of lambda-polynomials indexed by even labels
/// (2k, 2m); entry (2k, 2m) is homogeneous of weight 2k + 2m.
class TMatrix {
public:
  TMatrix(int genus, std::vector<std::vector<Polynomial>> entries)
      : genus_(genus), entries_(std::move(entries)) {}

  int genus() const { return genus_; }
  int size() const { return 2 * genus_; }
  /// 1-based row/column (k, m), i.e. labels (2k, 2m).
  const Polynomial& at(int k, int m) const { return entries_.at(k - 1).at(m - 1); }
  const Polynomial& at_labels(int two_k, int two_m) const { return at(two_k / 2, two_m / 2); }

  std::string to_latex() const;

private:
  int genus_;
  std::vector<std::vector<Polynomial>> entries_;
};

/// T from the closed formula, with out-of-range lambdas identically zero.
TMatrix build_T(int genus);
/// The printed matrices for g = 1,2,3, kept as independent ground truth.
TMatrix transcribed_T(int genus);

/// Vector fields L_0, L_2, ..., L_{4g-2} tangent to the discriminant.
std::vector<DiffOperator> build_L(int genus);

struct HeatOperatorFamily {
  int genus;
  std::vector<DiffOperator> L;  // index k holds the weight-2k operator
  std::vector<DiffOperator> H;
  std::vector<DiffOperator> Q;  // Q = L - H
};

/// Heat operators for g in {1,2,3}; throws UnsupportedGenus otherwise.
HeatOperatorFamily build_Q(int genus);

/// One row of a bracket table: [X_{2i}, X_{2j}] = sum_k coeffs[k] X_{2k}.
struct BracketRow {
  int i;
  int j;
  std::vector<Polynomial> coeffs;
};

/// The printed commutator matrices for g = 2, 3 (shared by the L-frame,
/// the Q-frame and the jet-ring frame).
std::vector<BracketRow> transcribed_M(int genus);

/// Euler relations, the printed bracket tables, [Q, lambda] = T, uniqueness
/// of every decomposition and all Jacobi triples, for both frames.
RelationReport verify_frame_relations(int genus);

/// Degree constraints of the heat-operator shape; also extracts the
/// constants c_k with delta = c_k lambda_{2k} and reports them.
RelationReport shape_check(const HeatOperatorFamily& fam);

enum class FrameKind { LFrame, QFrame };

/// Derivation action, module compatibility, grading consistency and
/// freeness of the chosen frame over Q[lambda].
RelationReport check_polynomial_lie_axioms(int genus, FrameKind which);

/// Structure polynomials c_{i,j}^k and v_k^q extracted from both frames
/// must coincide pairwise.
RelationReport check_isomorphism(int genus);

/// Q_{2k} for 2k >= 6 expressed through Q_0, Q_2, Q_4 and iterated
/// brackets; each expression is verified exactly.
struct ReductionExpression {
  int target;      // generator index k of Q_{2k}
  int bracket_i;   // [Q_{2i}, Q_{2j}]
  int bracket_j;
  std::vector<std::pair<Polynomial, int>> subtract;  // coeff * Q_{2k}
  Rational divisor;
  std::string text;
};

struct ReductionNotFound : std::runtime_error {
  explicit ReductionNotFound(const std::string& what) : std::runtime_error(what) {}
};

std::vector<ReductionExpression> sufficiency_reduction(int genus,
                                                       RelationReport* report = nullptr);

/// Exact determinant of a square polynomial matrix (Laplace expansion).
Polynomial polynomial_det(const std::vector<std::vector<Polynomial>>& m);

}  // namespace heatframe

#endif
