#pragma once

// The fixed-point subalgebra layer attached to an involutive diagram
// automorphism: embedded generators
//   B_i = F_i + s_i T_{w_bullet}(E_{tau i}) Ktilde_i^{-1}   (i unpainted,
//         with a parameter s_i = sign * q^exponent),
//   B_i = F_i                                               (i painted),
// together with E_i (i painted) and K_mu (mu in the theta-fixed lattice).
//
// The twisted bar involution on a based module is psi_i = Upsilon . psi,
// where the intertwiner Upsilon = sum_nu Upsilon_nu (Upsilon_0 = 1,
// Upsilon_nu a raising operator of weight nu) is the unique solution of
//   B_i Upsilon = Upsilon psibar(B_i),   K_mu Upsilon = Upsilon K_mu,
// with psibar(B_i) = F_i + bar(s_i) T_{w_bullet}(E_{tau i}) Ktilde_i.
// The graded components are found degreewise by exact linear solves on the
// module; for completely reducible modules the solution is unique.
//
// The i-canonical basis of a based module is the unique psi_i-fixed basis
// b^i = b + sum t_{b;b'} b' with corrections t in q^{-1} Z[q^{-1}] at
// strictly higher weights; it is produced by the same triangular bar solve
// that builds canonical bases of tensor products.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qsym/module.hpp"

namespace qsym {

// One parameter per unpainted node, stored as sign * q^exponent.  Entries
// at painted nodes are carried but ignored.
struct IParams {
  std::vector<int> sign;
  std::vector<int> expo;

  RatFunc sigma(int i) const;      // sign_i q^{expo_i}
  RatFunc sigma_bar(int i) const;  // sign_i q^{-expo_i}
  std::string fingerprint() const;
};

// CONFIG_INVALID unless both vectors have rank entries and signs are +-1.
void validate_iparams(const IRootDatum& id, const IParams& p);

// Shipped defaults: q^{-1} at nodes fixed by tau, +1 at swapped nodes.
// They agree with what sweep_parameters discovers for the presets.
IParams default_iparams(const IRootDatum& id);

// Exact matrix of B_i on a weight module over the base datum.
SpMat bi_action(int i, const WeightModule& m, const IRootDatum& id,
                const IParams& p);

// Diagonal matrix of K_mu on a weight module.
SpMat k_mu_matrix(const WeightModule& m, const Coweight& mu);

// Values of the counit on the embedded generators; the generators listed
// with value 0 span the augmentation ideal together with K_mu - 1.
std::map<std::string, RatFunc> counit_on_igenerators(const IRootDatum& id);

// Truncated intertwiner acting on one module: the action matrix of each
// graded component, and their sum.
struct UpsilonTrunc {
  int bound = 0;
  std::map<std::vector<int>, SpMat> comp;
  SpMat total;
};

// Solve for the intertwiner on m up to the given height (auto-resolved to
// the weight spread of m when bound < 0; BOUND_TOO_SMALL if an explicit
// bound cannot cover it).  SINGULAR_SYSTEM when the parameters admit no
// intertwiner or the result fails its involution/commutation checks.
// Results are cached per (datum, parameters, module) under a shared mutex.
std::shared_ptr<const UpsilonTrunc> compute_upsilon(const BasedModule& m,
                                                    const IRootDatum& id,
                                                    const IParams& p,
                                                    int bound = -1);

// Matrix P of the twisted bar involution psi_i = Upsilon . psi; the map
// itself sends v to P * bar(v).
SpMat psi_i_matrix(const BasedModule& m, const IRootDatum& id,
                   const IParams& p);

inline Vec apply_antilinear(const SpMat& p, const Vec& v) {
  return p.apply(vec_bar(v));
}

// An i-canonical basis: columns of t are the b^i in the host basis.
struct IBasisData {
  BasedModule host;
  IParams params;
  SpMat t;     // unitriangular, off-diagonal entries in q^{-1} Z[q^{-1}]
  SpMat tinv;
  SpMat psi;   // psi_i matrix on the host basis
};

IBasisData icanonical_basis(const BasedModule& m, const IRootDatum& id,
                            const IParams& p);

// Span of the augmentation ideal applied to m: the smallest subspace
// containing all B_i m, E_i/F_i m (painted i), (K_mu - 1) m and stable
// under the embedded generators.
Span augmentation_span(const BasedModule& m, const IRootDatum& id,
                       const IParams& p);

// dim Hom(V(la), V(0)) over the embedded subalgebra; equals the codimension
// of the augmentation span in V(la).
int hom_to_trivial_dim(const Weight& la, const IRootDatum& id,
                       const IParams& p);

// The equivariant functional on v (an irreducible with highest weight la)
// vanishing on the augmentation span, scaled to 1 on the highest weight
// vector, as a 1 x dim matrix.  NO_MORPHISM when the span is the whole
// module or the functional misses the highest weight vector.
SpMat trivial_functional(const BasedModule& v, const Weight& la,
                         const IRootDatum& id, const IParams& p);

// True iff the equivariant map f carries every b^i of src into an
// i-canonical basis element of dst (or zero) plus q^{-1} times the lattice
// regular at q = infinity.  NOT_EQUIVARIANT if f fails to commute with the
// embedded generators.
bool check_based_imorphism(const SpMat& f, const IBasisData& src,
                           const IBasisData& dst, const IRootDatum& id);

// Builds the unique morphism V(la) -> V(0) with v+ -> v+ (NOT_SPHERICAL /
// NO_MORPHISM when it cannot exist) and reports whether it is based.
// Parameter classes that admit no intertwiner or break a lattice property
// report false rather than throwing.
bool validate_parameters(const Weight& la, const IRootDatum& id,
                         const IParams& p);

// First parameter choice (signs +-1, exponents in [-3,3], preferring small
// |exponent|, then negative exponent, then + sign) that validates on every
// listed weight.  NOT_BASED when the whole sweep fails.
IParams sweep_parameters(const IRootDatum& id,
                         const std::vector<Weight>& test_weights);

}  // namespace qsym
