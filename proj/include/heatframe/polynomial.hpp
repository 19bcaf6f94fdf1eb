#ifndef HEATFRAME_POLYNOMIAL_HPP
#define HEATFRAME_POLYNOMIAL_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heatframe/rational.hpp"
#include "heatframe/variables.hpp"

namespace heatframe {

struct ZeroPolynomialError : std::domain_error {
  ZeroPolynomialError() : std::domain_error("weight of the zero polynomial is undefined") {}
};

/// Power product of variables. Factors are kept sorted by variable id with
/// positive exponents; the empty product is the unit of weight 0.
class Monomial {
public:
  struct Factor {
    VariableId var;
    int exp;
    bool operator==(const Factor& o) const = default;
  };

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial unit() { return Monomial(); }
  static Monomial variable(const VariableId& v, int exp = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  long long weight() const { return weight_; }
  int total_degree() const;
  int exponent_of(const VariableId& v) const;

  Monomial times(const Monomial& o) const;
  /// Divides by v^1; exponent of v must be positive.
  Monomial divided_by(const VariableId& v) const;

  /// Weight contributed by lambda factors alone.
  long long lambda_weight() const;

  bool operator==(const Monomial& o) const { return factors_ == o.factors_; }

  /// Canonical term order: total weight, then lexicographic on the factor
  /// sequence. Printed reports are byte-stable because of this.
  bool less(const Monomial& o) const;

  std::string to_string() const;  // "z1^3*l4"
  std::string to_latex() const;

private:
  std::vector<Factor> factors_;
  long long weight_ = 0;

  void recompute_weight();
};

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.less(b); }
};

/// Finite sum of monomials with exact rational coefficients. No zero
/// coefficients are stored; the term map is ordered canonically.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, MonomialLess>;

  Polynomial() = default;
  Polynomial(long long c) { add_term(Monomial::unit(), Rational(c)); }
  explicit Polynomial(const Rational& c) { add_term(Monomial::unit(), c); }
  explicit Polynomial(const VariableId& v) { add_term(Monomial::variable(v), Rational(1)); }
  explicit Polynomial(const Monomial& m) { add_term(m, Rational(1)); }
  Polynomial(const Monomial& m, const Rational& c) { add_term(m, c); }

  static Polynomial variable(const VariableId& v) { return Polynomial(v); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  bool is_constant() const;
  /// Constant term (coefficient of the unit monomial).
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(int e) const;

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Common weight of all terms; nullopt if inhomogeneous.
  /// Throws ZeroPolynomialError on the zero polynomial.
  std::optional<long long> weight() const;
  bool is_homogeneous_of_weight(long long w) const;

  /// Formal partial derivative treating every variable as independent.
  Polynomial partial(const VariableId& v) const;

  bool contains_kind(VarKind k) const;
  /// Largest psi multi-index length appearing, 0 if none.
  int max_psi_order() const;

  /// Substitute variables by polynomials (missing vars stay themselves).
  Polynomial substitute(const std::function<const Polynomial*(const VariableId&)>& lookup) const;

  /// Component whose lambda factors weigh exactly w.
  Polynomial lambda_weight_part(long long w) const;
  std::vector<long long> lambda_weights_present() const;

  std::string to_string() const;
  std::string to_latex() const;

private:
  TermMap terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

}  // namespace heatframe

#endif
