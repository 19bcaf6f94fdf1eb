#include "heatframe/sigma.hpp"

#include <algorithm>

#include "heatframe/decompose.hpp"
#include "heatframe/linalg.hpp"

namespace heatframe {

namespace {

void z_enumerate(const std::vector<int>& indices, size_t pos, long long remaining,
                 std::vector<Monomial::Factor>& current, std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (pos == indices.size()) return;
  int w = indices[pos];
  z_enumerate(indices, pos + 1, remaining, current, out);
  long long maxe = remaining / w;
  for (long long e = 1; e <= maxe; ++e) {
    current.push_back({VariableId::z(indices[pos]), static_cast<int>(e)});
    z_enumerate(indices, pos + 1, remaining - e * w, current, out);
    current.pop_back();
  }
}

/// splits a monomial into its z-part and lambda-part
std::pair<Monomial, Monomial> split_z_lambda(const Monomial& m) {
  std::vector<Monomial::Factor> z, l;
  for (const auto& f : m.factors()) {
    if (f.var.kind() == VarKind::Z)
      z.push_back(f);
    else
      l.push_back(f);
  }
  return {Monomial(std::move(z)), Monomial(std::move(l))};
}

}  // namespace

std::vector<Monomial> z_monomials_of_degree(const GenusContext& ctx, long long degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  std::vector<Monomial::Factor> current;
  z_enumerate(ctx.z_indices(), 0, degree, current, out);
  std::sort(out.begin(), out.end(), MonomialLess{});
  return out;
}

DiffOperator lambda_free_part(const DiffOperator& op) {
  DiffOperator out;
  for (const auto& [d, p] : op.terms()) {
    Polynomial filtered;
    for (const auto& [m, c] : p.terms())
      if (m.lambda_weight() == 0) filtered.add_term(m, c);
    out.add_term(d, filtered);
  }
  return out;
}

Monomial distinguished_monomial(int genus) {
  GenusContext ctx(genus);
  long long n = static_cast<long long>(genus) * (genus + 1) / 2;
  std::vector<Monomial> candidates = z_monomials_of_degree(ctx, n);
  Monomial best = candidates.front();
  for (const Monomial& m : candidates) {
    if (m.total_degree() < best.total_degree() ||
        (m.total_degree() == best.total_degree() && m.less(best)))
      best = m;
  }
  return best;
}

SolutionBasis kernel_basis(int genus, const std::vector<int>& ops, int max_lambda_weight) {
  GenusContext ctx(genus);
  if (std::find(ops.begin(), ops.end(), 0) == ops.end())
    throw std::invalid_argument("kernel_basis: operator set must contain Q0");
  HeatOperatorFamily fam = build_Q(genus);
  long long n = static_cast<long long>(genus) * (genus + 1) / 2;

  std::vector<int> ks;
  for (int label : ops) {
    if (label % 2 != 0 || label < 0 || label / 2 > 2 * genus - 1)
      throw std::invalid_argument("kernel_basis: bad operator label " + std::to_string(label));
    ks.push_back(label / 2);
  }

  // triangularity: every T entry has positive lambda degree, so the lambda
  // parts of the operators strictly raise the stratum
  TMatrix tri = build_T(genus);
  for (int k = 1; k <= 2 * genus; ++k)
    for (int m = 1; m <= 2 * genus; ++m)
      if (!tri.at(k, m).lambda_weight_part(0).is_zero())
        throw std::logic_error("kernel_basis: strata are not triangular");

  SolutionBasis basis;
  std::vector<GradedSeries> series;

  for (long long u = 0; u <= max_lambda_weight; u += 2) {
    std::vector<Monomial> lambda_monos = lambda_monomials_of_weight(ctx, u);
    if (lambda_monos.empty()) continue;
    std::vector<Monomial> z_basis = z_monomials_of_degree(ctx, n + u);
    if (z_basis.empty()) continue;

    // per operator slot a complete block of target z-monomials
    struct Slot {
      std::map<Monomial, size_t, MonomialLess> row_of;  // within the block
    };
    std::vector<Slot> slots(ks.size());
    size_t nrows = 0;
    for (size_t kk = 0; kk < ks.size(); ++kk)
      for (const Monomial& m : z_monomials_of_degree(ctx, n + u - 2 * ks[kk]))
        slots[kk].row_of.emplace(m, nrows++);

    size_t fresh_dim = 0;
    for (const Monomial& mu : lambda_monos) {
      // [Q_{2k}(mu x)] at this stratum carries the lambda-monomial mu
      // exactly, so the systems decouple per lambda-monomial
      std::vector<std::vector<Rational>> a(nrows,
                                           std::vector<Rational>(z_basis.size(), Rational(0)));
      for (size_t kk = 0; kk < ks.size(); ++kk) {
        for (size_t i = 0; i < z_basis.size(); ++i) {
          Polynomial image =
              apply(fam.Q[static_cast<size_t>(ks[kk])], Polynomial(z_basis[i].times(mu)));
          for (const auto& [m, c] : image.terms()) {
            auto [zm, lm] = split_z_lambda(m);
            if (!(lm == mu)) continue;
            a[slots[kk].row_of.at(zm)][i] = c;
          }
        }
      }

      // extend every existing series through this stratum
      for (GradedSeries& s : series) {
        std::vector<Rational> b(nrows, Rational(0));
        bool any = false;
        for (size_t kk = 0; kk < ks.size(); ++kk) {
          Polynomial residual = apply(fam.Q[static_cast<size_t>(ks[kk])], s.value);
          for (const auto& [m, c] : residual.terms()) {
            auto [zm, lm] = split_z_lambda(m);
            if (!(lm == mu)) continue;
            auto row = slots[kk].row_of.find(zm);
            if (row == slots[kk].row_of.end())
              throw std::logic_error("kernel_basis: residual outside the stratum block");
            b[row->second] = c;
            any = true;
          }
        }
        if (!any) continue;
        for (Rational& v : b) v = -v;
        LinearSolution sol = solve_linear(a, b);
        if (!sol.consistent)
          throw std::logic_error("kernel_basis: stratum system inconsistent at weight " +
                                 std::to_string(u));
        for (size_t i = 0; i < z_basis.size(); ++i)
          s.value.add_term(z_basis[i].times(mu), sol.particular[i]);
      }

      // fresh solutions whose leading stratum is u
      LinearSolution hom = solve_linear(a, std::vector<Rational>(nrows, Rational(0)));
      fresh_dim += hom.kernel_dim();
      for (const std::vector<Rational>& v : hom.kernel) {
        GradedSeries s;
        s.genus = genus;
        s.total_weight = -n;
        s.lambda_bound = max_lambda_weight;
        s.first_stratum = u;
        for (size_t i = 0; i < z_basis.size(); ++i) s.value.add_term(z_basis[i].times(mu), v[i]);
        series.push_back(std::move(s));
      }
    }
    basis.kernel_dims[u] = fresh_dim;
    if (u == 0 && series.empty())
      throw EmptyKernel("no lambda-free solution of weight " + std::to_string(-n));
  }

  // scale normalization of the leading basis element
  if (!series.empty() && series.front().first_stratum == 0) {
    GradedSeries& lead = series.front();
    Rational c = lead.value.coefficient(distinguished_monomial(genus));
    if (c.is_zero() && !lead.value.is_zero()) c = lead.value.terms().begin()->second;
    if (!c.is_zero()) lead.value = lead.value.scaled(c.inverse());
  }

  basis.elements = std::move(series);
  return basis;
}

Polynomial sigma_residual(int genus, const GradedSeries& s, int k) {
  HeatOperatorFamily fam = build_Q(genus);
  return apply(fam.Q.at(static_cast<size_t>(k)), s.value);
}

}  // namespace heatframe
