#ifndef HEATFRAME_JET_HPP
#define HEATFRAME_JET_HPP

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "heatframe/frame.hpp"
#include "heatframe/polynomial.hpp"
#include "heatframe/report.hpp"

namespace heatframe {

/// Sorted multi-index over the odd coordinates; psi indices commute.
using JetIndex = std::vector<int>;

JetIndex normalized_jet_index(JetIndex idx);
JetIndex extended_jet_index(const JetIndex& idx, int k);
std::string jet_index_name(const JetIndex& idx);

/// All sorted multi-indices with min_order <= |I| <= max_order.
std::vector<JetIndex> enumerate_jet_indices(const GenusContext& ctx, int min_order,
                                            int max_order);

/// psi_I = s * (d_I ln phi), fixed uniformly for a whole run.
enum class SignConvention : int { Plus = 1, Minus = -1 };
inline Rational sign_value(SignConvention c) { return Rational(static_cast<int>(c)); }
inline char sign_char(SignConvention c) { return c == SignConvention::Plus ? '+' : '-'; }

struct InternalInconsistency : std::logic_error {
  explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

/// Derivation d/dz_k of the jet ring: z_j -> delta_{kj}, lambda -> 0,
/// psi_I -> psi_{I k}. Aux symbols may not be differentiated.
Polynomial jet_partial(int k, const Polynomial& e);
Polynomial jet_partial_multi(const JetIndex& idx, const Polynomial& e);

/// Membership in R_phi: no z, no first-order psi, no aux symbols.
bool in_jet_ring(const Polynomial& e);

/// E_{2k} = Llnphi[2k] - R_{2k} where (Q_{2k} phi)/phi written in log
/// derivatives is E_{2k}; the heat equation states E_{2k} = 0.
Polynomial heat_residual_in_jets(int genus, int k, SignConvention conv);
/// The aux-free right-hand side R_{2k} with Llnphi[2k] = R_{2k} on solutions.
Polynomial heat_log_rhs(int genus, int k, SignConvention conv);

/// L_{2k} psi_I as a jet polynomial, assuming the heat system.
Polynomial derive_L_action(int genus, int k, const JetIndex& idx, SignConvention conv);

/// First-order derivation of the jet ring: a lambda vector field part,
/// coefficients on each d/dz_k, and an action on every psi generator.
class JetDerivation {
public:
  using PsiAction = std::function<Polynomial(const JetIndex&)>;

  JetDerivation(std::map<int, Polynomial> z_action, std::map<int, Polynomial> lambda_action,
                PsiAction psi_action);

  Polynomial act_z(int k) const;
  Polynomial act_lambda(int k) const;
  const Polynomial& act_psi(const JetIndex& idx) const;

  /// Leibniz extension to arbitrary jet polynomials.
  Polynomial act(const Polynomial& e) const;

  const std::map<int, Polynomial>& z_actions() const;
  const std::map<int, Polynomial>& lambda_actions() const;

private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

JetDerivation jet_bracket(const JetDerivation& a, const JetDerivation& b);
JetDerivation jet_combination(std::vector<std::pair<Polynomial, JetDerivation>> parts);

/// Compares two derivations on z, lambda and every psi_I with |I| <= max_order.
/// Returns the failing generator names.
std::vector<std::string> derivation_mismatches(const JetDerivation& a, const JetDerivation& b,
                                               const GenusContext& ctx, int max_order);

/// The nonlinear system L_{2k} psi_s = w_{2k,s}: the operator split into the
/// first-order part (z_parts[k][j] is the coefficient on d/dz_j) and the
/// derivative-free sources.
struct ColeHopfSystem {
  int genus = 0;
  SignConvention conv = SignConvention::Plus;
  std::vector<std::map<int, Polynomial>> z_parts;
  std::vector<std::map<int, Polynomial>> sources;
};

/// Split of the derived actions: every term holding a second-order psi is
/// operator transport, derivative-free remainders are sources.
ColeHopfSystem build_cole_hopf_derived(int genus, SignConvention conv);
/// The printed tables, transcribed verbatim (typos included).
ColeHopfSystem transcribed_cole_hopf(int genus);

/// Table entries where the derivation disagrees with the printed value
/// under conv = +1; each carries the reason.
struct KnownMismatch {
  int genus;
  std::string key;  // e.g. "w[4,3]"
  std::string note;
};
const std::vector<KnownMismatch>& known_table_mismatches();

RelationReport diff_against_reference_tables(int genus, const ColeHopfSystem& derived);

/// Shared precomputed state for one (genus, convention) run.
class JetScope {
public:
  JetScope(int genus, SignConvention conv);

  int genus() const { return genus_; }
  SignConvention conv() const { return conv_; }
  const GenusContext& ctx() const { return ctx_; }
  const ColeHopfSystem& derived() const { return derived_; }

  const JetDerivation& flow(int k) const { return flows_.at(static_cast<size_t>(k)); }
  const JetDerivation& coordinate(int k) const;  // d/dz_k, k odd

private:
  int genus_;
  SignConvention conv_;
  GenusContext ctx_;
  ColeHopfSystem derived_;
  std::vector<JetDerivation> flows_;
  std::map<int, JetDerivation> coordinates_;
};

/// Verifies every printed commutation relation between the flows and the
/// coordinate derivations as derivation identities on all generators with
/// |I| <= max_order, psi-correction matrices included.
RelationReport derivation_commutator_tables(const JetScope& scope, int max_order);

/// L_{2k} psi_I stays inside R_phi for |I| >= 2.
RelationReport closure_check(const JetScope& scope, int max_order);

/// Erasing the coordinate terms maps the verified bracket tables onto the
/// lambda-field tables; [d_k, L_{2s}] decomposes over the coordinates with
/// coefficients in R_phi.
RelationReport homomorphism_check(const JetScope& scope);

}  // namespace heatframe

#endif
