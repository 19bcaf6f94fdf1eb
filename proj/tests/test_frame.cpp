#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heatframe/frame.hpp"
#include "heatframe/parser.hpp"

using namespace heatframe;

namespace {
Polynomial P(const char* s) { return parse_polynomial(s); }

bool all_passed(const RelationReport& r) {
  for (const CheckRecord& c : r.checks()) {
    if (c.status == CheckStatus::Fail) {
      MESSAGE(c.id, " :: ", c.witness);
      return false;
    }
  }
  return true;
}
}  // namespace

TEST_CASE("T matrix from the closed formula equals the printed matrices") {
  for (int g = 1; g <= 3; ++g) {
    TMatrix built = build_T(g);
    TMatrix printed = transcribed_T(g);
    for (int k = 1; k <= 2 * g; ++k)
      for (int m = 1; m <= 2 * g; ++m) {
        INFO("g=", g, " entry (", 2 * k, ",", 2 * m, ")");
        CHECK(built.at(k, m) == printed.at(k, m));
      }
  }
}

TEST_CASE("selected T entries") {
  CHECK(build_T(1).at_labels(2, 2) == P("4*l4"));
  CHECK(build_T(1).at_labels(4, 4) == P("-4/3*l4^2"));
  CHECK(build_T(2).at_labels(4, 4) == P("8*l8 - 12/5*l4^2"));
  CHECK(build_T(3).at_labels(4, 4) == P("8*l8 - 20/7*l4^2"));
}

TEST_CASE("T is defined for any genus") {
  for (int g = 4; g <= 6; ++g) {
    TMatrix t = build_T(g);
    for (int k = 1; k <= 2 * g; ++k)
      for (int m = 1; m <= 2 * g; ++m) {
        CHECK(t.at(k, m) == t.at(m, k));
        if (!t.at(k, m).is_zero()) CHECK(t.at(k, m).weight() == 2 * (k + m));
        // strata of the series solver stay triangular
        CHECK(t.at(k, m).lambda_weight_part(0).is_zero());
      }
  }
}

TEST_CASE("lambda fields") {
  std::vector<DiffOperator> l1 = build_L(1);
  CHECK(l1[0] == parse_operator("4*l4*d/dl4 + 6*l6*d/dl6"));
  CHECK(l1[1] == parse_operator("6*l6*d/dl4 - 4/3*l4^2*d/dl6"));

  // L0 is the Euler field for every genus
  for (int g = 1; g <= 4; ++g) {
    GenusContext ctx(g);
    DiffOperator euler;
    for (int k : ctx.lambda_indices())
      euler.add_term(DerivMonomial::single(DerivSymbol::dl(k)),
                     P(("l" + std::to_string(k)).c_str()).scaled(Rational(k)));
    CHECK(build_L(g)[0] == euler);
  }

  // coefficient of d/dl10 in L6 at genus 2
  std::vector<DiffOperator> l2 = build_L(2);
  CHECK(l2[3].coefficient(DerivMonomial::single(DerivSymbol::dl(10))) ==
        P("4*l6*l10 - 8/5*l8^2"));
}

TEST_CASE("heat operator families") {
  HeatOperatorFamily f1 = build_Q(1);
  CHECK(f1.H[0] == parse_operator("z1*d/dz1 - 1"));
  CHECK(f1.Q[0] == f1.L[0] - f1.H[0]);

  HeatOperatorFamily f2 = build_Q(2);
  CHECK(f2.H[3].identity_part().coefficient(Monomial::variable(VariableId::lambda(6))) ==
        Rational(-1, 2));

  HeatOperatorFamily f3 = build_Q(3);
  Monomial z1z3 = Monomial::variable(VariableId::z(1)).times(Monomial::variable(VariableId::z(3)));
  CHECK(f3.H[5].identity_part().coefficient(
            z1z3.times(Monomial::variable(VariableId::lambda(14)))) == Rational(4));

  for (int g = 1; g <= 3; ++g) {
    HeatOperatorFamily fam = build_Q(g);
    for (int k = 0; k < 2 * g; ++k) {
      CHECK(fam.Q[static_cast<size_t>(k)].weight() == 2 * k);
      CHECK(fam.Q[static_cast<size_t>(k)] ==
            fam.L[static_cast<size_t>(k)] - fam.H[static_cast<size_t>(k)]);
    }
  }
  CHECK_THROWS_AS(build_Q(4), UnsupportedGenus);
}

TEST_CASE("shape of the heat operators") {
  for (int g = 1; g <= 3; ++g) {
    RelationReport rep = shape_check(build_Q(g));
    CHECK(all_passed(rep));
  }
  // extracted constants
  RelationReport rep = shape_check(build_Q(2));
  std::vector<std::string> cs;
  for (const CheckRecord& c : rep.checks())
    if (c.status == CheckStatus::Info) cs.push_back(c.witness);
  REQUIRE(cs.size() == 4);
  CHECK(cs[0] == "c_0 = -3");
  CHECK(cs[1] == "c_1 = 0");
  CHECK(cs[2] == "c_2 = -1");
  CHECK(cs[3] == "c_3 = -1/2");
}

TEST_CASE("shape violations are detected") {
  HeatOperatorFamily fam = build_Q(2);
  // an out-of-pattern second-order term
  fam.H[1] += DiffOperator::term(P("1"), DerivMonomial::single(DerivSymbol::dz(1)).times(
                                             DerivSymbol::dz(3)));
  RelationReport rep = shape_check(fam);
  bool failed = false;
  for (const CheckRecord& c : rep.checks())
    if (c.status == CheckStatus::Fail) failed = true;
  CHECK(failed);
}

TEST_CASE("frame relations verify for every genus") {
  for (int g = 1; g <= 3; ++g) {
    RelationReport rep = verify_frame_relations(g);
    CHECK(rep.size() > 0);
    CHECK(all_passed(rep));
  }
}

TEST_CASE("euler relations explicitly") {
  for (int g = 1; g <= 3; ++g) {
    std::vector<DiffOperator> ls = build_L(g);
    HeatOperatorFamily fam = build_Q(g);
    for (int k = 0; k < 2 * g; ++k) {
      CHECK(commutator(ls[0], ls[static_cast<size_t>(k)]) ==
            ls[static_cast<size_t>(k)].scaled(Rational(2 * k)));
      CHECK(commutator(fam.Q[0], fam.Q[static_cast<size_t>(k)]) ==
            fam.Q[static_cast<size_t>(k)].scaled(Rational(2 * k)));
    }
  }
}

TEST_CASE("commutator with a multiplication operator gives the T entry") {
  for (int g = 1; g <= 3; ++g) {
    GenusContext ctx(g);
    HeatOperatorFamily fam = build_Q(g);
    TMatrix t = build_T(g);
    for (int k = 0; k < 2 * g; ++k)
      for (int s = 2; s <= 2 * g + 1; ++s) {
        DiffOperator lhs = commutator(fam.Q[static_cast<size_t>(k)],
                                      DiffOperator::multiplication(Polynomial(ctx.lambda(2 * s))));
        CHECK(lhs == DiffOperator::multiplication(t.at_labels(2 * k + 2, 2 * s - 2)));
      }
  }
}

TEST_CASE("polynomial lie algebra axioms") {
  for (int g = 1; g <= 3; ++g) {
    CHECK(all_passed(check_polynomial_lie_axioms(g, FrameKind::LFrame)));
    CHECK(all_passed(check_polynomial_lie_axioms(g, FrameKind::QFrame)));
  }
}

TEST_CASE("grading of the action") {
  // wt(L2(l6)) = 6 + 2 = 8 and L2(l6) equals the (4,4) entry of T
  std::vector<DiffOperator> ls = build_L(2);
  Polynomial v = apply(ls[1], P("l6"));
  CHECK(v.weight() == 8);
  CHECK(v == build_T(2).at_labels(4, 4));
}

TEST_CASE("structure polynomials coincide across the frames") {
  for (int g = 1; g <= 3; ++g) CHECK(all_passed(check_isomorphism(g)));
}

TEST_CASE("sufficiency reductions") {
  RelationReport rep2;
  std::vector<ReductionExpression> ex2 = sufficiency_reduction(2, &rep2);
  CHECK(all_passed(rep2));
  REQUIRE(ex2.size() == 1);
  CHECK(ex2[0].target == 3);
  CHECK(ex2[0].bracket_i == 1);
  CHECK(ex2[0].bracket_j == 2);
  CHECK(ex2[0].divisor == Rational(2));
  REQUIRE(ex2[0].subtract.size() == 2);
  CHECK(ex2[0].subtract[0].first == P("8/5*l6"));
  CHECK(ex2[0].subtract[0].second == 0);
  CHECK(ex2[0].subtract[1].first == P("-8/5*l4"));
  CHECK(ex2[0].subtract[1].second == 1);

  RelationReport rep3;
  std::vector<ReductionExpression> ex3 = sufficiency_reduction(3, &rep3);
  CHECK(all_passed(rep3));
  REQUIRE(ex3.size() == 3);
  CHECK(ex3[0].divisor == Rational(2));
  CHECK(ex3[0].subtract[0].first == P("16/7*l6"));
  CHECK(ex3[1].divisor == Rational(4));
  CHECK(ex3[2].divisor == Rational(6));
  CHECK_THROWS_AS(sufficiency_reduction(1), UnsupportedGenus);
}

TEST_CASE("polynomial determinant") {
  std::vector<std::vector<Polynomial>> d = {{P("l4"), P("0")}, {P("0"), P("l6")}};
  CHECK(polynomial_det(d) == P("l4*l6"));
  std::vector<std::vector<Polynomial>> t1 = {{P("4*l4"), P("6*l6")},
                                             {P("6*l6"), P("-4/3*l4^2")}};
  CHECK(polynomial_det(t1) == P("-16/3*l4^3 - 36*l6^2"));
}
