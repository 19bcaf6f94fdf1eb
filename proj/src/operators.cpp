#include "heatframe/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace heatframe {

namespace {

void check_operand_coefficients(const DiffOperator& op, const char* what) {
  for (const auto& [d, p] : op.terms()) {
    if (p.contains_kind(VarKind::Psi) || p.contains_kind(VarKind::AuxL) ||
        p.contains_kind(VarKind::AuxLog)) {
      throw std::logic_error(std::string(what) +
                             ": coefficients must be polynomials in z, lambda only");
    }
  }
}

}  // namespace

DerivMonomial::DerivMonomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const Factor& a, const Factor& b) { return a.sym < b.sym; });
  std::vector<Factor> merged;
  for (const Factor& f : factors_) {
    if (f.exp == 0) continue;
    if (f.exp < 0) throw std::invalid_argument("DerivMonomial: negative exponent");
    if (!merged.empty() && merged.back().sym == f.sym)
      merged.back().exp += f.exp;
    else
      merged.push_back(f);
  }
  factors_ = std::move(merged);
  weight_ = 0;
  for (const Factor& f : factors_) weight_ += f.sym.weight() * f.exp;
}

DerivMonomial DerivMonomial::single(const DerivSymbol& s, int exp) {
  return DerivMonomial({Factor{s, exp}});
}

int DerivMonomial::order() const {
  int d = 0;
  for (const Factor& f : factors_) d += f.exp;
  return d;
}

DerivMonomial DerivMonomial::times(const DerivSymbol& s) const {
  std::vector<Factor> fs = factors_;
  fs.push_back({s, 1});
  return DerivMonomial(std::move(fs));
}

DerivMonomial DerivMonomial::times(const DerivMonomial& o) const {
  std::vector<Factor> fs = factors_;
  fs.insert(fs.end(), o.factors_.begin(), o.factors_.end());
  return DerivMonomial(std::move(fs));
}

std::vector<DerivSymbol> DerivMonomial::expanded() const {
  std::vector<DerivSymbol> r;
  for (const Factor& f : factors_)
    for (int i = 0; i < f.exp; ++i) r.push_back(f.sym);
  return r;
}

std::string DerivMonomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += "*";
    s += factors_[i].sym.to_string();
    if (factors_[i].exp != 1) s += "^" + std::to_string(factors_[i].exp);
  }
  return s;
}

std::string DerivMonomial::to_latex() const {
  if (factors_.empty()) return "";
  std::string s;
  for (const Factor& f : factors_) {
    s += f.sym.to_latex();
    if (f.exp != 1) s += "^{" + std::to_string(f.exp) + "}";
  }
  return s;
}

DiffOperator DiffOperator::multiplication(const Polynomial& p) {
  DiffOperator r;
  r.add_term(DerivMonomial::identity(), p);
  return r;
}

DiffOperator DiffOperator::derivative(const DerivSymbol& s) {
  DiffOperator r;
  r.add_term(DerivMonomial::single(s), Polynomial(1));
  return r;
}

DiffOperator DiffOperator::term(const Polynomial& coeff, const DerivMonomial& d) {
  DiffOperator r;
  r.add_term(d, coeff);
  return r;
}

Polynomial DiffOperator::coefficient(const DerivMonomial& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Polynomial() : it->second;
}

void DiffOperator::add_term(const DerivMonomial& d, const Polynomial& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(d, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffOperator DiffOperator::operator-() const {
  DiffOperator r;
  for (const auto& [d, p] : terms_) r.terms_.emplace(d, -p);
  return r;
}

DiffOperator DiffOperator::operator+(const DiffOperator& o) const {
  DiffOperator r = *this;
  r += o;
  return r;
}

DiffOperator DiffOperator::operator-(const DiffOperator& o) const {
  DiffOperator r = *this;
  r -= o;
  return r;
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
  for (const auto& [d, p] : o.terms_) add_term(d, p);
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) {
  for (const auto& [d, p] : o.terms_) add_term(d, -p);
  return *this;
}

DiffOperator DiffOperator::scaled(const Rational& c) const {
  DiffOperator r;
  if (c.is_zero()) return r;
  for (const auto& [d, p] : terms_) r.terms_.emplace(d, p.scaled(c));
  return r;
}

DiffOperator DiffOperator::left_multiplied(const Polynomial& p) const {
  DiffOperator r;
  for (const auto& [d, q] : terms_) r.add_term(d, p * q);
  return r;
}

std::optional<long long> DiffOperator::weight() const {
  if (terms_.empty()) throw ZeroPolynomialError();
  std::optional<long long> w;
  for (const auto& [d, p] : terms_) {
    auto pw = p.weight();
    if (!pw) return std::nullopt;
    long long tw = *pw + d.weight();
    if (!w)
      w = tw;
    else if (*w != tw)
      return std::nullopt;
  }
  return w;
}

std::string DiffOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [d, p] : terms_) {
    std::string piece;
    bool negative = false;
    if (p.term_count() == 1) {
      piece = p.to_string();
      if (!piece.empty() && piece[0] == '-') {
        negative = true;
        piece = piece.substr(1);
      }
      if (!d.is_identity()) {
        if (piece == "1")
          piece = d.to_string();
        else
          piece += "*" + d.to_string();
      }
    } else {
      piece = "(" + p.to_string() + ")";
      if (!d.is_identity()) piece += "*" + d.to_string();
    }
    if (first) {
      s += negative ? "-" + piece : piece;
      first = false;
    } else {
      s += negative ? " - " + piece : " + " + piece;
    }
  }
  return s;
}

std::string DiffOperator::to_latex() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [d, p] : terms_) {
    std::string coeff = p.term_count() > 1 ? "\\left(" + p.to_latex() + "\\right)" : p.to_latex();
    std::string piece = d.is_identity() ? coeff : coeff + " " + d.to_latex();
    if (!first) s += " + ";
    s += piece;
    first = false;
  }
  return s;
}

DiffOperator compose(const DiffOperator& a, const DiffOperator& b) {
  check_operand_coefficients(a, "compose");
  check_operand_coefficients(b, "compose");
  DiffOperator result;
  for (const auto& [da, pa] : a.terms()) {
    for (const auto& [db, pb] : b.terms()) {
      // push the derivatives of the left term through the right term
      DiffOperator acc = DiffOperator::term(pb, db);
      for (const DerivSymbol& s : da.expanded()) {
        DiffOperator next;
        for (const auto& [d, p] : acc.terms()) {
          next.add_term(d, p.partial(s.target()));
          next.add_term(d.times(s), p);
        }
        acc = std::move(next);
      }
      for (const auto& [d, p] : acc.terms()) result.add_term(d, pa * p);
    }
  }
  return result;
}

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b) {
  return compose(a, b) - compose(b, a);
}

Polynomial apply(const DiffOperator& a, const Polynomial& f) {
  if (f.contains_kind(VarKind::Psi) || f.contains_kind(VarKind::AuxL) ||
      f.contains_kind(VarKind::AuxLog)) {
    throw std::logic_error("apply: argument must be a polynomial in z, lambda only");
  }
  Polynomial result;
  for (const auto& [d, p] : a.terms()) {
    Polynomial g = f;
    for (const DerivSymbol& s : d.expanded()) {
      g = g.partial(s.target());
      if (g.is_zero()) break;
    }
    result += p * g;
  }
  return result;
}

}  // namespace heatframe
