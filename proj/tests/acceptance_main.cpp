// Acceptance suite: one line per criterion, exit 0 iff everything holds.
// All comparisons are exact rational equality; the runtime bounds are the
// stated ones and are checked with a monotonic clock.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "heatframe/jet.hpp"
#include "heatframe/parser.hpp"
#include "heatframe/sigma.hpp"
#include "heatframe/suite.hpp"

using namespace heatframe;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void report(int number, const std::string& what, bool ok, double seconds, double limit) {
  bool in_time = limit <= 0 || seconds < limit;
  if (!ok || !in_time) ++failures;
  std::printf("[%s] criterion %2d: %s (%.2fs%s)\n", ok && in_time ? "PASS" : "FAIL", number,
              what.c_str(), seconds,
              limit > 0 ? (" / limit " + std::to_string(static_cast<int>(limit)) + "s").c_str()
                        : "");
  std::fflush(stdout);
}

bool report_has_failures(const RelationReport& rep) {
  for (const CheckRecord& c : rep.checks())
    if (c.status == CheckStatus::Fail) {
      std::printf("        failing: %s :: %s\n", c.id.c_str(), c.witness.c_str());
      return true;
    }
  return false;
}

Polynomial P(const char* s) { return parse_polynomial(s); }

// 1. the closed T formula reproduces the printed matrices exactly
void criterion_1() {
  Timer t;
  bool ok = true;
  for (int g = 1; g <= 3; ++g) {
    TMatrix built = build_T(g);
    TMatrix printed = transcribed_T(g);
    for (int k = 1; k <= 2 * g; ++k)
      for (int m = 1; m <= 2 * g; ++m)
        if (!(built.at(k, m) == printed.at(k, m))) ok = false;
  }
  report(1, "T matrices reproduce the printed tables for g = 1, 2, 3", ok, t.seconds(), 1.0);
}

// 2. the lambda-field brackets decompose exactly and uniquely per the
//    printed rows
void criterion_2() {
  Timer t;
  bool ok = true;
  for (int g = 2; g <= 3; ++g) {
    GenusContext ctx(g);
    std::vector<DiffOperator> ls = build_L(g);
    for (const BracketRow& row : transcribed_M(g)) {
      DiffOperator lhs =
          commutator(ls[static_cast<size_t>(row.i)], ls[static_cast<size_t>(row.j)]);
      DiffOperator rhs;
      for (size_t k = 0; k < row.coeffs.size(); ++k)
        rhs += ls[k].left_multiplied(row.coeffs[k]);
      if (!(lhs == rhs)) ok = false;
      StructureDecomposition d = decompose(lhs, ls, ctx);
      if (!d.unique()) ok = false;
      for (size_t k = 0; k < row.coeffs.size(); ++k)
        if (!(d.coefficients[k] == row.coeffs[k])) ok = false;
    }
  }
  report(2, "frame commutators match the printed M matrices uniquely (g = 2, 3)", ok,
         t.seconds(), 10.0);
}

// 3. the heat-operator algebra: multiplication commutators, the printed
//    bracket tables, and the Jacobi identity on both frames
void criterion_3() {
  Timer t;
  bool ok = true;
  for (int g = 1; g <= 3; ++g) {
    GenusContext ctx(g);
    HeatOperatorFamily fam = build_Q(g);
    TMatrix tm = build_T(g);
    for (int k = 0; k < 2 * g; ++k)
      for (int s = 2; s <= 2 * g + 1; ++s) {
        DiffOperator lhs = commutator(fam.Q[static_cast<size_t>(k)],
                                      DiffOperator::multiplication(Polynomial(ctx.lambda(2 * s))));
        if (!(lhs == DiffOperator::multiplication(tm.at_labels(2 * k + 2, 2 * s - 2)))) ok = false;
      }
    for (int k = 0; k < 2 * g; ++k)
      if (!(commutator(fam.Q[0], fam.Q[static_cast<size_t>(k)]) ==
            fam.Q[static_cast<size_t>(k)].scaled(Rational(2 * k))))
        ok = false;
    if (g >= 2) {
      for (const BracketRow& row : transcribed_M(g)) {
        DiffOperator lhs =
            commutator(fam.Q[static_cast<size_t>(row.i)], fam.Q[static_cast<size_t>(row.j)]);
        DiffOperator rhs;
        for (size_t k = 0; k < row.coeffs.size(); ++k)
          rhs += fam.Q[k].left_multiplied(row.coeffs[k]);
        if (!(lhs == rhs)) ok = false;
      }
    }
    for (const auto& frame : {build_L(g), fam.Q}) {
      for (int i = 0; i < 2 * g; ++i)
        for (int j = i + 1; j < 2 * g; ++j)
          for (int k = j + 1; k < 2 * g; ++k) {
            DiffOperator jac =
                commutator(commutator(frame[static_cast<size_t>(i)], frame[static_cast<size_t>(j)]),
                           frame[static_cast<size_t>(k)]) +
                commutator(commutator(frame[static_cast<size_t>(j)], frame[static_cast<size_t>(k)]),
                           frame[static_cast<size_t>(i)]) +
                commutator(commutator(frame[static_cast<size_t>(k)], frame[static_cast<size_t>(i)]),
                           frame[static_cast<size_t>(j)]);
            if (!jac.is_zero()) ok = false;
          }
    }
  }
  report(3, "heat-operator algebra and Jacobi identities hold (g = 1, 2, 3)", ok, t.seconds(),
         60.0);
}

// 4. the two frames have identical structure polynomials
void criterion_4() {
  Timer t;
  bool ok = true;
  for (int g = 1; g <= 3; ++g)
    if (report_has_failures(check_isomorphism(g))) ok = false;
  report(4, "structure polynomials of the two frames coincide (g = 1, 2, 3)", ok, t.seconds(),
         0.0);
}

// 5. three operators suffice: explicit bracket expressions and vanishing
//    residuals of the three-operator kernel
void criterion_5() {
  Timer t;
  bool ok = true;
  for (int g = 2; g <= 3; ++g) {
    RelationReport rep;
    try {
      sufficiency_reduction(g, &rep);
    } catch (const ReductionNotFound&) {
      ok = false;
    }
    if (report_has_failures(rep)) ok = false;

    const int w = 10;
    SolutionBasis basis = kernel_basis(g, {0, 2, 4}, w);
    if (basis.elements.empty()) ok = false;
    for (int k = 3; k <= 2 * g - 1 && !basis.elements.empty(); ++k) {
      Polynomial residual = sigma_residual(g, basis.elements[0], k);
      for (const auto& [m, c] : residual.terms())
        if (m.lambda_weight() <= w - 2 * k) ok = false;
    }
  }
  report(5, "Q6 (and Q8, Q10) reduce to brackets of Q0, Q2, Q4; kernel residuals vanish", ok,
         t.seconds(), 0.0);
}

// 6. the derived nonlinear system matches the printed tables under the
//    plus convention, any mismatch confined to the declared loci
void criterion_6() {
  Timer t;
  bool ok = true;
  size_t mismatches = 0;
  for (int g = 1; g <= 3; ++g) {
    RelationReport rep = diff_against_reference_tables(g, build_cole_hopf_derived(g, SignConvention::Plus));
    if (report_has_failures(rep)) ok = false;  // undeclared mismatch
    for (const CheckRecord& c : rep.checks())
      if (c.status == CheckStatus::Info) ++mismatches;
  }
  if (mismatches != known_table_mismatches().size()) ok = false;
  report(6, "derived transformation tables match the printed ones at all but the declared loci",
         ok, t.seconds(), 60.0);
}

// 7. the printed bracket tables of the jet derivations hold on every
//    generator up to order 6, psi corrections included
void criterion_7() {
  Timer t;
  bool ok = true;
  for (int g = 1; g <= 3; ++g) {
    JetScope scope(g, SignConvention::Plus);
    if (report_has_failures(derivation_commutator_tables(scope, 6))) ok = false;
  }
  report(7, "jet bracket tables hold as derivation identities up to order 6 (g = 1, 2, 3)", ok,
         t.seconds(), 0.0);
}

// 8. the flows preserve the jet ring on generators of order 2..5
void criterion_8() {
  Timer t;
  bool ok = true;
  for (int g = 1; g <= 3; ++g) {
    JetScope scope(g, SignConvention::Plus);
    if (report_has_failures(closure_check(scope, 5))) ok = false;
  }
  report(8, "flow actions stay inside the jet ring for orders 2..5 (g = 1, 2, 3)", ok,
         t.seconds(), 0.0);
}

// 9. the series solver reproduces the expansion at genus 1 and the
//    lambda-free stratum at genus 2
void criterion_9() {
  Timer t;
  bool ok = true;
  SolutionBasis g1 = kernel_basis(1, {0, 2}, 8);
  if (g1.elements.size() != 1 ||
      !(g1.elements[0].value == P("z1 + 1/60*l4*z1^5 + 1/210*l6*z1^7 - 1/10080*l4^2*z1^9")))
    ok = false;

  SolutionBasis g2 = kernel_basis(2, {0, 2, 4}, 10);
  if (g2.elements.empty() ||
      !(g2.elements[0].value.lambda_weight_part(0) == P("z3 - 1/3*z1^3")))
    ok = false;
  if (g2.kernel_dims.at(0) != 1) ok = false;

  // the stated wall-clock budget covers truncation 10 at every genus
  kernel_basis(3, {0, 2, 4}, 10);
  report(9, "sigma series: exact genus-1 expansion and genus-2 leading stratum", ok, t.seconds(),
         30.0);
}

// 10. randomized property suites, 1000 cases each, zero failures
void criterion_10() {
  Timer t;
  bool ok = true;
  std::mt19937_64 rng(20250808);
  GenusContext ctx(2);
  std::vector<VariableId> pool;
  for (int k : ctx.z_indices()) pool.push_back(VariableId::z(k));
  for (int k : ctx.lambda_indices()) pool.push_back(VariableId::lambda(k));
  std::vector<VariableId> jet_pool = pool;
  jet_pool.push_back(VariableId::psi({1}));
  jet_pool.push_back(VariableId::psi({3}));
  jet_pool.push_back(VariableId::psi({1, 3}));
  jet_pool.push_back(VariableId::psi({1, 1, 3}));

  std::uniform_int_distribution<int> coeff_num(-9, 9), coeff_den(1, 7), nterms(0, 4),
      nfactors(0, 3), expn(1, 3);
  auto rnd_poly = [&](const std::vector<VariableId>& vars) {
    Polynomial p;
    int n = nterms(rng);
    std::uniform_int_distribution<size_t> pick(0, vars.size() - 1);
    for (int i = 0; i < n; ++i) {
      std::vector<Monomial::Factor> fs;
      int f = nfactors(rng);
      for (int j = 0; j < f; ++j) fs.push_back({vars[pick(rng)], expn(rng)});
      p.add_term(Monomial(std::move(fs)), Rational(coeff_num(rng), coeff_den(rng)));
    }
    return p;
  };
  std::vector<DerivSymbol> syms = {DerivSymbol::dz(1), DerivSymbol::dz(3), DerivSymbol::dl(4),
                                   DerivSymbol::dl(6), DerivSymbol::dl(8), DerivSymbol::dl(10)};
  auto rnd_op = [&](int max_terms) {
    DiffOperator op;
    std::uniform_int_distribution<int> nt(1, max_terms), order(0, 2);
    std::uniform_int_distribution<size_t> pick(0, syms.size() - 1);
    int n = nt(rng);
    for (int i = 0; i < n; ++i) {
      std::vector<DerivMonomial::Factor> fs;
      int o = order(rng);
      for (int j = 0; j < o; ++j) fs.push_back({syms[pick(rng)], 1});
      op.add_term(DerivMonomial(std::move(fs)), rnd_poly(pool));
    }
    return op;
  };

  // ring axioms
  for (int i = 0; i < 1000 && ok; ++i) {
    Polynomial a = rnd_poly(jet_pool), b = rnd_poly(jet_pool), c = rnd_poly(jet_pool);
    if (!((a + b) + c == a + (b + c))) ok = false;
    if (!(a * b == b * a)) ok = false;
    if (!((a * b) * c == a * (b * c))) ok = false;
    if (!(a * (b + c) == a * b + a * c)) ok = false;
  }
  // canonicalization: print then parse is the identity
  for (int i = 0; i < 1000 && ok; ++i) {
    Polynomial p = rnd_poly(jet_pool);
    if (!(parse_polynomial(p.to_string()) == p)) ok = false;
  }
  // commutator antisymmetry
  for (int i = 0; i < 1000 && ok; ++i) {
    DiffOperator a = rnd_op(3), b = rnd_op(3);
    if (!(commutator(a, b) == -commutator(b, a))) ok = false;
  }
  // weight additivity on homogeneous module elements
  {
    HeatOperatorFamily fam = build_Q(2);
    auto m4 = lambda_monomials_of_weight(ctx, 4);
    auto m6 = lambda_monomials_of_weight(ctx, 6);
    std::uniform_int_distribution<size_t> pick(0, fam.Q.size() - 1);
    int done = 0;
    for (int i = 0; done < 1000 && i < 4000 && ok; ++i) {
      DiffOperator a = fam.Q[pick(rng)].left_multiplied(Polynomial(m4[i % m4.size()]));
      DiffOperator b = fam.Q[pick(rng)].left_multiplied(Polynomial(m6[i % m6.size()]));
      DiffOperator c = commutator(a, b);
      if (c.is_zero()) continue;
      if (!(c.weight() == *a.weight() + *b.weight())) ok = false;
      ++done;
    }
    if (done < 1000) ok = false;
  }
  // jet chain-rule coherence
  std::uniform_int_distribution<int> zidx(0, 1);
  for (int i = 0; i < 1000 && ok; ++i) {
    Polynomial e = rnd_poly(jet_pool);
    int a = 2 * zidx(rng) + 1, b = 2 * zidx(rng) + 1;
    if (!(jet_partial(a, jet_partial(b, e)) == jet_partial(b, jet_partial(a, e)))) ok = false;
  }
  // derivation Leibniz rule for flows and coordinates
  {
    JetScope scope(2, SignConvention::Plus);
    for (int i = 0; i < 1000 && ok; ++i) {
      Polynomial e = rnd_poly(jet_pool), f = rnd_poly(jet_pool);
      const JetDerivation& d =
          i % 3 == 0 ? scope.coordinate(i % 2 ? 1 : 3) : scope.flow(i % 4);
      if (!(d.act(e * f) == d.act(e) * f + e * d.act(f))) ok = false;
    }
  }
  report(10, "randomized property suites (1000 cases each) pass", ok, t.seconds(), 0.0);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures == 0) {
    std::printf("acceptance: all criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return 1;
}
