#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heatframe/decompose.hpp"
#include "heatframe/frame.hpp"
#include "heatframe/parser.hpp"
#include "test_util.hpp"

using namespace heatframe;
namespace tu = heatframe::testutil;

namespace {
Polynomial P(const char* s) { return parse_polynomial(s); }
DiffOperator Op(const char* s) { return parse_operator(s); }
}  // namespace

TEST_CASE("normal ordering by composition") {
  CHECK(compose(Op("d/dz1"), Op("z1")) == Op("z1*d/dz1 + 1"));
  CHECK(compose(Op("d/dl4"), Op("l4^2")) == Op("l4^2*d/dl4 + 2*l4"));
  CHECK(compose(Op("d/dz1^2"), Op("z1")) == Op("z1*d/dz1^2 + 2*d/dz1"));
}

TEST_CASE("composition agrees with application") {
  // independent route: apply both sides of d1^2 . z1 to a cubic
  Polynomial f = P("z1^3");
  Polynomial via_compose = apply(compose(Op("d/dz1^2"), Op("z1")), f);
  Polynomial direct = apply(Op("d/dz1^2"), P("z1") * f);
  CHECK(via_compose == direct);
  CHECK(via_compose == P("12*z1^2"));
}

TEST_CASE("commutator examples") {
  CHECK(commutator(Op("d/dz1"), Op("d/dz3")).is_zero());
  // genus 1 lambda fields transcribed directly
  DiffOperator l0 = Op("4*l4*d/dl4 + 6*l6*d/dl6");
  DiffOperator l2 = Op("6*l6*d/dl4 - 4/3*l4^2*d/dl6");
  CHECK(commutator(l0, l2) == l2.scaled(Rational(2)));
}

TEST_CASE("application examples") {
  DiffOperator l0 = Op("4*l4*d/dl4 + 6*l6*d/dl6");
  CHECK(apply(l0, P("l4*l6")) == P("10*l4*l6"));
  CHECK(apply(Op("d/dz1^2"), P("z1^3")) == P("6*z1"));
  HeatOperatorFamily fam = build_Q(1);
  CHECK(apply(fam.Q[0], P("z1")).is_zero());
}

TEST_CASE("operator weights") {
  CHECK(Op("z1*d/dz1").weight() == 0);
  CHECK(Op("1/2*d/dz1^2").weight() == 2);
  CHECK(Op("l4*z3*d/dz1").weight() == 2);
  CHECK(Op("d/dz1 + l4*d/dz1").weight() == std::nullopt);
}

TEST_CASE("coefficients must stay in z and lambda") {
  DiffOperator bad = DiffOperator::term(P("psi[1]"), DerivMonomial::single(DerivSymbol::dz(1)));
  CHECK_THROWS(compose(bad, bad));
  CHECK_THROWS(apply(Op("d/dz1"), P("psi[1]")));
}

TEST_CASE("antisymmetry of the commutator, randomized") {
  tu::Rng rng(6);
  for (int i = 0; i < 1000; ++i) {
    DiffOperator a = tu::random_operator(rng, 2, 3);
    DiffOperator b = tu::random_operator(rng, 2, 3);
    CHECK(commutator(a, b) == -commutator(b, a));
  }
}

TEST_CASE("weight additivity of the commutator, randomized") {
  tu::Rng rng(7);
  HeatOperatorFamily fam = build_Q(2);
  GenusContext ctx(2);
  std::uniform_int_distribution<size_t> pick(0, fam.Q.size() - 1);
  auto monos4 = lambda_monomials_of_weight(ctx, 4);
  auto monos6 = lambda_monomials_of_weight(ctx, 6);
  int checked = 0;
  for (int i = 0; checked < 1000 && i < 4000; ++i) {
    size_t x = pick(rng), y = pick(rng);
    // homogeneous module elements p(lambda) Q
    DiffOperator a = fam.Q[x].left_multiplied(Polynomial(monos4[i % monos4.size()]));
    DiffOperator b = fam.Q[y].left_multiplied(Polynomial(monos6[i % monos6.size()]));
    DiffOperator c = commutator(a, b);
    if (c.is_zero()) continue;
    REQUIRE(a.weight().has_value());
    REQUIRE(b.weight().has_value());
    CHECK(c.weight() == *a.weight() + *b.weight());
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("composition associates with application, randomized") {
  tu::Rng rng(8);
  auto pool = tu::variable_pool(2, false);
  for (int i = 0; i < 500; ++i) {
    DiffOperator a = tu::random_operator(rng, 2, 2);
    DiffOperator b = tu::random_operator(rng, 2, 2);
    Polynomial f = tu::random_polynomial(rng, pool, 3);
    CHECK(apply(compose(a, b), f) == apply(a, apply(b, f)));
  }
}

TEST_CASE("jacobi identity on random triples") {
  tu::Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    DiffOperator a = tu::random_operator(rng, 2, 2);
    DiffOperator b = tu::random_operator(rng, 2, 2);
    DiffOperator c = tu::random_operator(rng, 2, 2);
    DiffOperator jac = commutator(commutator(a, b), c) + commutator(commutator(b, c), a) +
                       commutator(commutator(c, a), b);
    CHECK(jac.is_zero());
  }
}

TEST_CASE("decompose the printed bracket rows") {
  GenusContext ctx2(2);
  HeatOperatorFamily fam2 = build_Q(2);
  StructureDecomposition d = decompose(commutator(fam2.Q[1], fam2.Q[2]), fam2.Q, ctx2);
  REQUIRE(d.unique());
  CHECK(d.coefficients[0] == P("8/5*l6"));
  CHECK(d.coefficients[1] == P("-8/5*l4"));
  CHECK(d.coefficients[2].is_zero());
  CHECK(d.coefficients[3] == P("2"));

  StructureDecomposition id = decompose(fam2.Q[1], fam2.Q, ctx2);
  REQUIRE(id.unique());
  CHECK(id.coefficients[0].is_zero());
  CHECK(id.coefficients[1] == P("1"));
  CHECK(id.coefficients[2].is_zero());
  CHECK(id.coefficients[3].is_zero());

  GenusContext ctx3(3);
  std::vector<DiffOperator> ls = build_L(3);
  StructureDecomposition d3 = decompose(commutator(ls[1], ls[3]), ls, ctx3);
  REQUIRE(d3.unique());
  CHECK(d3.coefficients[0] == P("12/7*l8"));
  CHECK(d3.coefficients[1].is_zero());
  CHECK(d3.coefficients[2] == P("-12/7*l4"));
  CHECK(d3.coefficients[3].is_zero());
  CHECK(d3.coefficients[4] == P("4"));
  CHECK(d3.coefficients[5].is_zero());
}

TEST_CASE("decompose failure modes") {
  GenusContext ctx(2);
  HeatOperatorFamily fam = build_Q(2);
  // a multiplication operator is not in the span of the heat family
  StructureDecomposition no = decompose(DiffOperator::multiplication(P("l4")), fam.Q, ctx);
  CHECK(no.status == DecomposeStatus::NotInModule);
  CHECK_FALSE(no.residual.is_zero());

  // duplicated generators make the answer ambiguous
  std::vector<DiffOperator> dup = {fam.Q[1], fam.Q[1]};
  StructureDecomposition amb = decompose(fam.Q[1], dup, ctx);
  CHECK(amb.status == DecomposeStatus::Ambiguous);
  CHECK(amb.kernel_dim == 1);
  CHECK(amb.residual.is_zero());
}

TEST_CASE("operator print-parse round trip") {
  tu::Rng rng(10);
  for (int i = 0; i < 400; ++i) {
    DiffOperator a = tu::random_operator(rng, 2, 3);
    CHECK(parse_operator(a.to_string()) == a);
  }
  HeatOperatorFamily fam = build_Q(3);
  for (const DiffOperator& q : fam.Q) CHECK(parse_operator(q.to_string()) == q);
}
