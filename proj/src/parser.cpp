#include "heatframe/parser.hpp"

#include <cctype>
#include <vector>

namespace heatframe {

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  DiffOperator parse() {
    DiffOperator r = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return r;
  }

private:
  std::string_view text_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat_word(std::string_view w) {
    skip_ws();
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  long long parse_uint() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected number");
    long long v = 0;
    int digits = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (++digits > 15) fail("numeral too long");
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  DiffOperator parse_expr() {
    DiffOperator acc;
    bool negative = eat('-');
    if (!negative) eat('+');
    acc += parse_term().scaled(Rational(negative ? -1 : 1));
    while (true) {
      skip_ws();
      if (eat('+')) {
        acc += parse_term();
      } else if (eat('-')) {
        acc -= parse_term();
      } else {
        break;
      }
    }
    return acc;
  }

  // either a polynomial or a derivative monomial
  struct Factor {
    bool is_deriv;
    Polynomial poly;
    DerivMonomial deriv;
  };

  DiffOperator parse_term() {
    Polynomial coeff(1);
    DerivMonomial deriv;
    bool saw_deriv = false;
    while (true) {
      Factor f = parse_factor();
      if (f.is_deriv) {
        deriv = deriv.times(f.deriv);
        saw_deriv = true;
      } else {
        if (saw_deriv) fail("coefficients must precede derivative factors");
        coeff = coeff * f.poly;
      }
      skip_ws();
      if (!eat('*')) break;
    }
    return DiffOperator::term(coeff, deriv);
  }

  Factor parse_factor() {
    Factor base = parse_base();
    skip_ws();
    if (eat('^')) {
      long long e = parse_uint();
      if (base.is_deriv) {
        std::vector<DerivMonomial::Factor> fs;
        for (const auto& f : base.deriv.factors()) fs.push_back({f.sym, f.exp * static_cast<int>(e)});
        base.deriv = DerivMonomial(std::move(fs));
      } else {
        base.poly = base.poly.pow(static_cast<int>(e));
      }
    }
    return base;
  }

  Factor parse_base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");

    if (eat('(')) {
      DiffOperator inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      for (const auto& [d, p] : inner.terms())
        if (!d.is_identity()) fail("parenthesized factor must be a polynomial");
      return Factor{false, inner.identity_part(), {}};
    }

    if (eat_word("d/dz")) {
      int k = static_cast<int>(parse_uint());
      return Factor{true, {}, DerivMonomial::single(DerivSymbol::dz(k))};
    }
    if (eat_word("d/dl")) {
      int k = static_cast<int>(parse_uint());
      return Factor{true, {}, DerivMonomial::single(DerivSymbol::dl(k))};
    }
    if (eat_word("psi[")) {
      std::vector<int> idx;
      idx.push_back(static_cast<int>(parse_uint()));
      while (eat(',')) idx.push_back(static_cast<int>(parse_uint()));
      if (!eat(']')) fail("expected ']'");
      return Factor{false, Polynomial(VariableId::psi(std::move(idx))), {}};
    }
    if (eat_word("Llnphi[")) {
      int k = static_cast<int>(parse_uint());
      if (!eat(']')) fail("expected ']'");
      return Factor{false, Polynomial(VariableId::aux_heat(k)), {}};
    }
    if (eat_word("lnphi")) {
      return Factor{false, Polynomial(VariableId::aux_log()), {}};
    }

    char c = peek();
    if (c == 'z') {
      ++pos_;
      return Factor{false, Polynomial(VariableId::z(static_cast<int>(parse_uint()))), {}};
    }
    if (c == 'l') {
      ++pos_;
      return Factor{false, Polynomial(VariableId::lambda(static_cast<int>(parse_uint()))), {}};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long num = parse_uint();
      if (eat('/')) {
        long long den = parse_uint();
        return Factor{false, Polynomial(Rational(num, den)), {}};
      }
      return Factor{false, Polynomial(Rational(num)), {}};
    }
    fail("unexpected character");
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  DiffOperator op = Parser(text).parse();
  for (const auto& [d, p] : op.terms())
    if (!d.is_identity()) throw ParseError("expected polynomial, found derivative factor");
  return op.identity_part();
}

DiffOperator parse_operator(std::string_view text) { return Parser(text).parse(); }

}  // namespace heatframe
