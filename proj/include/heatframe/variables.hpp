#ifndef HEATFRAME_VARIABLES_HPP
#define HEATFRAME_VARIABLES_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace heatframe {

/// Variable alphabet shared by every module:
///   z_k      weight -k, k odd            (coordinates)
///   l_k      weight +k, k even >= 4      (curve parameters)
///   psi[I]   weight sum(I), I sorted odd (logarithmic derivatives)
///   Llnphi[2k], lnphi                    (transient jet symbols)
enum class VarKind : uint8_t { Z = 0, Lambda = 1, Psi = 2, AuxL = 3, AuxLog = 4 };

class VariableId {
public:
  static VariableId z(int k) {
    if (k < 1 || k % 2 == 0) throw std::invalid_argument("z index must be odd positive");
    return VariableId(VarKind::Z, k, 0);
  }
  static VariableId lambda(int k) {
    if (k < 4 || k % 2 != 0) throw std::invalid_argument("lambda index must be even >= 4");
    return VariableId(VarKind::Lambda, k, 0);
  }
  /// Indices are sorted on construction; a psi multi-index is a multiset.
  static VariableId psi(std::vector<int> indices);
  static VariableId aux_heat(int two_k) {
    if (two_k < 0 || two_k % 2 != 0) throw std::invalid_argument("aux index must be even >= 0");
    return VariableId(VarKind::AuxL, two_k, 0);
  }
  static VariableId aux_log() { return VariableId(VarKind::AuxLog, 0, 0); }

  VarKind kind() const { return kind_; }
  int index() const { return a_; }
  long long weight() const;

  /// Multi-index of a psi variable, ascending.
  std::vector<int> psi_indices() const;
  int psi_order() const { return a_; }

  /// Variable with one more derivative index (psi only).
  VariableId psi_extended(int k) const;

  std::string to_string() const;
  std::string to_latex() const;

  auto operator<=>(const VariableId& o) const {
    if (auto c = kind_ <=> o.kind_; c != 0) return c;
    if (auto c = a_ <=> o.a_; c != 0) return c;
    return b_ <=> o.b_;
  }
  bool operator==(const VariableId& o) const = default;

private:
  VariableId(VarKind k, int a, uint64_t b) : kind_(k), a_(a), b_(b) {}

  VarKind kind_;
  int32_t a_ = 0;   // z/lambda/aux index; psi: number of indices
  uint64_t b_ = 0;  // psi: indices packed 4 bits each, first index most significant
};

/// Genus-aware variable factory. Structural validity is enforced by
/// VariableId itself; range validity (k <= 2g-1, lambda <= 4g+2) here.
class GenusContext {
public:
  explicit GenusContext(int genus) : g_(genus) {
    if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  }

  int genus() const { return g_; }

  bool has_z(int k) const { return k >= 1 && k <= 2 * g_ - 1 && k % 2 == 1; }
  bool has_lambda(int k) const { return k >= 4 && k <= 4 * g_ + 2 && k % 2 == 0; }

  VariableId z(int k) const {
    if (!has_z(k)) throw std::invalid_argument("z index out of range for genus");
    return VariableId::z(k);
  }
  VariableId lambda(int k) const {
    if (!has_lambda(k)) throw std::invalid_argument("lambda index out of range for genus");
    return VariableId::lambda(k);
  }

  std::vector<int> z_indices() const;       // 1, 3, ..., 2g-1
  std::vector<int> lambda_indices() const;  // 4, 6, ..., 4g+2

private:
  int g_;
};

}  // namespace heatframe

#endif
