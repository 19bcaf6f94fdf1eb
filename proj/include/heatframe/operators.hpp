#ifndef HEATFRAME_OPERATORS_HPP
#define HEATFRAME_OPERATORS_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heatframe/polynomial.hpp"

namespace heatframe {

/// One derivative symbol: d/dz_k (weight +k) or d/dl_k (weight -k).
struct DerivSymbol {
  enum class Kind : uint8_t { Dz = 0, Dl = 1 };
  Kind kind;
  int index;

  static DerivSymbol dz(int k) { return {Kind::Dz, k}; }
  static DerivSymbol dl(int k) { return {Kind::Dl, k}; }

  long long weight() const { return kind == Kind::Dz ? index : -index; }
  /// Variable this symbol differentiates.
  VariableId target() const {
    return kind == Kind::Dz ? VariableId::z(index) : VariableId::lambda(index);
  }

  auto operator<=>(const DerivSymbol&) const = default;

  std::string to_string() const {
    return (kind == Kind::Dz ? "d/dz" : "d/dl") + std::to_string(index);
  }
  std::string to_latex() const {
    if (kind == Kind::Dz) return "\\partial_{" + std::to_string(index) + "}";
    return "\\partial_{\\lambda_{" + std::to_string(index) + "}}";
  }
};

/// Product of derivative symbols, z-derivatives before lambda-derivatives,
/// ascending index, positive exponents.
class DerivMonomial {
public:
  struct Factor {
    DerivSymbol sym;
    int exp;
    auto operator<=>(const Factor&) const = default;
  };

  DerivMonomial() = default;
  explicit DerivMonomial(std::vector<Factor> factors);
  static DerivMonomial identity() { return DerivMonomial(); }
  static DerivMonomial single(const DerivSymbol& s, int exp = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_identity() const { return factors_.empty(); }
  long long weight() const { return weight_; }
  int order() const;

  DerivMonomial times(const DerivSymbol& s) const;
  DerivMonomial times(const DerivMonomial& o) const;
  /// Flat list with multiplicities expanded.
  std::vector<DerivSymbol> expanded() const;

  auto operator<=>(const DerivMonomial& o) const { return factors_ <=> o.factors_; }
  bool operator==(const DerivMonomial& o) const = default;

  std::string to_string() const;
  std::string to_latex() const;

private:
  std::vector<Factor> factors_;
  long long weight_ = 0;
};

/// Normal-ordered linear differential operator: for each derivative monomial
/// a polynomial coefficient standing on its left. Operators whose terms all
/// share weight(coefficient) + weight(derivatives) are homogeneous.
class DiffOperator {
public:
  using TermMap = std::map<DerivMonomial, Polynomial>;

  DiffOperator() = default;

  static DiffOperator multiplication(const Polynomial& p);
  static DiffOperator derivative(const DerivSymbol& s);
  static DiffOperator term(const Polynomial& coeff, const DerivMonomial& d);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Polynomial coefficient(const DerivMonomial& d) const;
  Polynomial identity_part() const { return coefficient(DerivMonomial::identity()); }

  void add_term(const DerivMonomial& d, const Polynomial& coeff);

  DiffOperator operator-() const;
  DiffOperator operator+(const DiffOperator& o) const;
  DiffOperator operator-(const DiffOperator& o) const;
  DiffOperator& operator+=(const DiffOperator& o);
  DiffOperator& operator-=(const DiffOperator& o);
  DiffOperator scaled(const Rational& c) const;
  /// p * A: multiply every coefficient on the left; no Leibniz involved.
  DiffOperator left_multiplied(const Polynomial& p) const;

  bool operator==(const DiffOperator& o) const { return terms_ == o.terms_; }
  bool operator!=(const DiffOperator& o) const { return !(*this == o); }

  std::optional<long long> weight() const;

  std::string to_string() const;
  std::string to_latex() const;

private:
  TermMap terms_;
};

/// Normal-ordered product a(b(.)). Coefficients must not contain psi or aux
/// symbols; those live in the jet module which has its own chain rule.
DiffOperator compose(const DiffOperator& a, const DiffOperator& b);

/// compose(a,b) - compose(b,a).
DiffOperator commutator(const DiffOperator& a, const DiffOperator& b);

/// Act on a polynomial in (z, lambda).
Polynomial apply(const DiffOperator& a, const Polynomial& f);

}  // namespace heatframe

#endif
