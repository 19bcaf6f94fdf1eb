#include "heatframe/decompose.hpp"

#include <map>
#include <stdexcept>

#include "heatframe/linalg.hpp"

namespace heatframe {

namespace {

void enumerate(const std::vector<int>& weights, size_t pos, long long remaining,
               std::vector<Monomial::Factor>& current, std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (pos == weights.size()) return;
  int w = weights[pos];
  // exponent 0 first, then increasing
  enumerate(weights, pos + 1, remaining, current, out);
  long long maxe = remaining / w;
  for (long long e = 1; e <= maxe; ++e) {
    current.push_back({VariableId::lambda(w), static_cast<int>(e)});
    enumerate(weights, pos + 1, remaining - e * w, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Monomial> lambda_monomials_of_weight(const GenusContext& ctx, long long weight) {
  std::vector<Monomial> out;
  if (weight < 0) return out;
  std::vector<Monomial::Factor> current;
  enumerate(ctx.lambda_indices(), 0, weight, current, out);
  return out;
}

StructureDecomposition decompose(const DiffOperator& target,
                                 const std::vector<DiffOperator>& generators,
                                 const GenusContext& ctx) {
  StructureDecomposition result;
  result.coefficients.assign(generators.size(), Polynomial());

  if (target.is_zero()) {
    result.status = DecomposeStatus::Ok;
    return result;
  }

  auto target_weight = target.weight();
  if (!target_weight) throw std::invalid_argument("decompose: target is inhomogeneous");

  // unknowns: one rational per (generator, candidate lambda-monomial)
  struct Unknown {
    size_t gen;
    Monomial mono;
  };
  std::vector<Unknown> unknowns;
  std::vector<DiffOperator> columns;
  for (size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].is_zero()) continue;
    auto gw = generators[g].weight();
    if (!gw) throw std::invalid_argument("decompose: generator is inhomogeneous");
    for (const Monomial& m : lambda_monomials_of_weight(ctx, *target_weight - *gw)) {
      unknowns.push_back({g, m});
      columns.push_back(generators[g].left_multiplied(Polynomial(m)));
    }
  }

  // flatten operator coefficients into equation rows
  std::map<std::pair<DerivMonomial, Monomial>, size_t,
           decltype([](const auto& a, const auto& b) {
             if (a.first != b.first) return a.first < b.first;
             return a.second.less(b.second);
           })>
      row_of;
  auto row_index = [&](const DerivMonomial& d, const Monomial& m) {
    auto [it, inserted] = row_of.try_emplace({d, m}, row_of.size());
    return it->second;
  };
  for (const auto& col : columns)
    for (const auto& [d, p] : col.terms())
      for (const auto& [m, c] : p.terms()) row_index(d, m);
  for (const auto& [d, p] : target.terms())
    for (const auto& [m, c] : p.terms()) row_index(d, m);

  std::vector<std::vector<Rational>> a(row_of.size(),
                                       std::vector<Rational>(unknowns.size(), Rational(0)));
  std::vector<Rational> b(row_of.size(), Rational(0));
  for (size_t j = 0; j < columns.size(); ++j)
    for (const auto& [d, p] : columns[j].terms())
      for (const auto& [m, c] : p.terms()) a[row_index(d, m)][j] = c;
  for (const auto& [d, p] : target.terms())
    for (const auto& [m, c] : p.terms()) b[row_index(d, m)] = c;

  LinearSolution sol = solve_linear(std::move(a), std::move(b));
  if (!sol.consistent) {
    result.status = DecomposeStatus::NotInModule;
    result.residual = target;
    return result;
  }

  for (size_t j = 0; j < unknowns.size(); ++j)
    result.coefficients[unknowns[j].gen] += Polynomial(unknowns[j].mono, sol.particular[j]);

  DiffOperator reconstruction;
  for (size_t g = 0; g < generators.size(); ++g)
    reconstruction += generators[g].left_multiplied(result.coefficients[g]);
  result.residual = target - reconstruction;
  if (!result.residual.is_zero()) throw std::logic_error("decompose: inconsistent solve");

  result.kernel_dim = sol.kernel_dim();
  result.status = result.kernel_dim == 0 ? DecomposeStatus::Ok : DecomposeStatus::Ambiguous;
  return result;
}

}  // namespace heatframe
