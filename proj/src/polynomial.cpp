#include "heatframe/polynomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace heatframe {

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const Factor& a, const Factor& b) { return a.var < b.var; });
  // merge duplicates, drop zero exponents
  std::vector<Factor> merged;
  for (const Factor& f : factors_) {
    if (f.exp == 0) continue;
    if (f.exp < 0) throw std::invalid_argument("Monomial: negative exponent");
    if (!merged.empty() && merged.back().var == f.var)
      merged.back().exp += f.exp;
    else
      merged.push_back(f);
  }
  factors_ = std::move(merged);
  recompute_weight();
}

Monomial Monomial::variable(const VariableId& v, int exp) {
  return Monomial({Factor{v, exp}});
}

void Monomial::recompute_weight() {
  weight_ = 0;
  for (const Factor& f : factors_) weight_ += f.var.weight() * f.exp;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const Factor& f : factors_) d += f.exp;
  return d;
}

int Monomial::exponent_of(const VariableId& v) const {
  for (const Factor& f : factors_)
    if (f.var == v) return f.exp;
  return 0;
}

Monomial Monomial::times(const Monomial& o) const {
  std::vector<Factor> r;
  r.reserve(factors_.size() + o.factors_.size());
  size_t i = 0, j = 0;
  while (i < factors_.size() && j < o.factors_.size()) {
    if (factors_[i].var == o.factors_[j].var) {
      r.push_back({factors_[i].var, factors_[i].exp + o.factors_[j].exp});
      ++i;
      ++j;
    } else if (factors_[i].var < o.factors_[j].var) {
      r.push_back(factors_[i++]);
    } else {
      r.push_back(o.factors_[j++]);
    }
  }
  while (i < factors_.size()) r.push_back(factors_[i++]);
  while (j < o.factors_.size()) r.push_back(o.factors_[j++]);
  Monomial m;
  m.factors_ = std::move(r);
  m.weight_ = weight_ + o.weight_;
  return m;
}

Monomial Monomial::divided_by(const VariableId& v) const {
  Monomial m = *this;
  for (size_t i = 0; i < m.factors_.size(); ++i) {
    if (m.factors_[i].var == v) {
      if (--m.factors_[i].exp == 0) m.factors_.erase(m.factors_.begin() + static_cast<long>(i));
      m.weight_ -= v.weight();
      return m;
    }
  }
  throw std::invalid_argument("Monomial: dividing by absent variable");
}

long long Monomial::lambda_weight() const {
  long long w = 0;
  for (const Factor& f : factors_)
    if (f.var.kind() == VarKind::Lambda) w += f.var.weight() * f.exp;
  return w;
}

bool Monomial::less(const Monomial& o) const {
  if (weight_ != o.weight_) return weight_ < o.weight_;
  size_t n = std::min(factors_.size(), o.factors_.size());
  for (size_t i = 0; i < n; ++i) {
    if (factors_[i].var != o.factors_[i].var) return factors_[i].var < o.factors_[i].var;
    if (factors_[i].exp != o.factors_[i].exp) return factors_[i].exp < o.factors_[i].exp;
  }
  return factors_.size() < o.factors_.size();
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += "*";
    s += factors_[i].var.to_string();
    if (factors_[i].exp != 1) s += "^" + std::to_string(factors_[i].exp);
  }
  return s;
}

std::string Monomial::to_latex() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const Factor& f : factors_) {
    s += f.var.to_latex();
    if (f.exp != 1) s += "^{" + std::to_string(f.exp) + "}";
  }
  return s;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial::unit());
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma.times(mb), ca * cb);
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  Polynomial r;
  if (c.is_zero()) return r;
  for (const auto& [mm, v] : terms_) r.add_term(mm.times(m), v * c);
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("Polynomial: negative power");
  Polynomial r(1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::optional<long long> Polynomial::weight() const {
  if (terms_.empty()) throw ZeroPolynomialError();
  long long w = terms_.begin()->first.weight();
  for (const auto& [m, c] : terms_)
    if (m.weight() != w) return std::nullopt;
  return w;
}

bool Polynomial::is_homogeneous_of_weight(long long w) const {
  for (const auto& [m, c] : terms_)
    if (m.weight() != w) return false;
  return true;
}

Polynomial Polynomial::partial(const VariableId& v) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent_of(v);
    if (e == 0) continue;
    r.add_term(m.divided_by(v), c * Rational(e));
  }
  return r;
}

bool Polynomial::contains_kind(VarKind k) const {
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors())
      if (f.var.kind() == k) return true;
  return false;
}

int Polynomial::max_psi_order() const {
  int best = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors())
      if (f.var.kind() == VarKind::Psi) best = std::max(best, f.var.psi_order());
  return best;
}

Polynomial Polynomial::substitute(
    const std::function<const Polynomial*(const VariableId&)>& lookup) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    Polynomial term(c);
    for (const auto& f : m.factors()) {
      const Polynomial* rep = lookup(f.var);
      if (rep == nullptr) {
        term = term.times_monomial(Monomial::variable(f.var, f.exp), Rational(1));
      } else {
        term = term * rep->pow(f.exp);
      }
    }
    r += term;
  }
  return r;
}

Polynomial Polynomial::lambda_weight_part(long long w) const {
  Polynomial r;
  for (const auto& [m, c] : terms_)
    if (m.lambda_weight() == w) r.terms_.emplace(m, c);
  return r;
}

std::vector<long long> Polynomial::lambda_weights_present() const {
  std::set<long long> ws;
  for (const auto& [m, c] : terms_) ws.insert(m.lambda_weight());
  return {ws.begin(), ws.end()};
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a.is_negative()) {
        s += "-";
        a = -a;
      }
    } else {
      s += a.is_negative() ? " - " : " + ";
      if (a.is_negative()) a = -a;
    }
    if (m.is_unit()) {
      s += a.to_string();
    } else if (a.is_one()) {
      s += m.to_string();
    } else {
      s += a.to_string() + "*" + m.to_string();
    }
    first = false;
  }
  return s;
}

std::string Polynomial::to_latex() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a.is_negative()) {
        s += "-";
        a = -a;
      }
    } else {
      s += a.is_negative() ? " - " : " + ";
      if (a.is_negative()) a = -a;
    }
    if (m.is_unit()) {
      s += a.to_latex();
    } else if (a.is_one()) {
      s += m.to_latex();
    } else {
      s += a.to_latex() + " " + m.to_latex();
    }
    first = false;
  }
  return s;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

}  // namespace heatframe
