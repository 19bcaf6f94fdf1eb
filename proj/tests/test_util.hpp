#ifndef HEATFRAME_TEST_UTIL_HPP
#define HEATFRAME_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "heatframe/operators.hpp"
#include "heatframe/polynomial.hpp"

namespace heatframe::testutil {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  return Rational(num(rng), den(rng));
}

/// variables available at the given genus, plus a few psi symbols
inline std::vector<VariableId> variable_pool(int genus, bool with_psi) {
  GenusContext ctx(genus);
  std::vector<VariableId> pool;
  for (int k : ctx.z_indices()) pool.push_back(VariableId::z(k));
  for (int k : ctx.lambda_indices()) pool.push_back(VariableId::lambda(k));
  if (with_psi) {
    pool.push_back(VariableId::psi({1}));
    pool.push_back(VariableId::psi({1, 1}));
    if (genus >= 2) {
      pool.push_back(VariableId::psi({3}));
      pool.push_back(VariableId::psi({1, 3}));
      pool.push_back(VariableId::psi({1, 1, 3}));
    }
    if (genus >= 3) {
      pool.push_back(VariableId::psi({5}));
      pool.push_back(VariableId::psi({3, 5, 5}));
    }
  }
  return pool;
}

inline Monomial random_monomial(Rng& rng, const std::vector<VariableId>& pool, int max_factors) {
  std::uniform_int_distribution<int> nf(0, max_factors);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> exp(1, 3);
  std::vector<Monomial::Factor> fs;
  int n = nf(rng);
  for (int i = 0; i < n; ++i) fs.push_back({pool[pick(rng)], exp(rng)});
  return Monomial(std::move(fs));
}

inline Polynomial random_polynomial(Rng& rng, const std::vector<VariableId>& pool,
                                    int max_terms, int max_factors = 3) {
  std::uniform_int_distribution<int> nt(0, max_terms);
  Polynomial p;
  int n = nt(rng);
  for (int i = 0; i < n; ++i)
    p.add_term(random_monomial(rng, pool, max_factors), random_rational(rng));
  return p;
}

inline DerivMonomial random_deriv_monomial(Rng& rng, int genus, int max_order) {
  GenusContext ctx(genus);
  std::vector<DerivSymbol> syms;
  for (int k : ctx.z_indices()) syms.push_back(DerivSymbol::dz(k));
  for (int k : ctx.lambda_indices()) syms.push_back(DerivSymbol::dl(k));
  std::uniform_int_distribution<int> no(0, max_order);
  std::uniform_int_distribution<size_t> pick(0, syms.size() - 1);
  std::vector<DerivMonomial::Factor> fs;
  int n = no(rng);
  for (int i = 0; i < n; ++i) fs.push_back({syms[pick(rng)], 1});
  return DerivMonomial(std::move(fs));
}

inline DiffOperator random_operator(Rng& rng, int genus, int max_terms) {
  std::uniform_int_distribution<int> nt(1, max_terms);
  std::vector<VariableId> pool = variable_pool(genus, false);
  DiffOperator op;
  int n = nt(rng);
  for (int i = 0; i < n; ++i) {
    Polynomial coeff;
    coeff.add_term(random_monomial(rng, pool, 2), random_rational(rng));
    op.add_term(random_deriv_monomial(rng, genus, 2), coeff);
  }
  return op;
}

}  // namespace heatframe::testutil

#endif
