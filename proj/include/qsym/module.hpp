#pragma once

// Finite-dimensional weight modules over the quantized enveloping algebra
// attached to a root datum, with exact sparse operator matrices, and based
// modules (modules carrying a distinguished bar-invariant basis).
//
// Conventions pinned here once and used everywhere:
//   K_mu v        = q^{<mu, wt v>} v
//   Ktilde_i      = K_{eps_i alpha_i^vee},  so Ktilde_i v = q_i^{<alpha_i^vee, wt v>} v
//   [E_i, F_j]    = delta_ij (Ktilde_i - Ktilde_i^{-1})/(q_i - q_i^{-1})
//   Delta(E_i)    = E_i x 1 + Ktilde_i x E_i
//   Delta(F_i)    = F_i x Ktilde_i^{-1} + 1 x F_i
//   bar-coproduct = Delta conjugated by bar: E_i x 1 + Ktilde_i^{-1} x E_i, etc.
//   psi(E)=E, psi(F)=F, psi(K_mu)=K_{-mu}, psi(q)=q^{-1}   (bar involution)
//   sigma.omega:  E^{(n)} -> F^{(n)}, F^{(n)} -> E^{(n)}, K_mu -> K_mu
//                 (an algebra anti-automorphism; right action x.u := sigma omega(u) x)

#include <memory>

#include "qsym/linalg.hpp"
#include "qsym/root_datum.hpp"

namespace qsym {

class WeightModule {
 public:
  WeightModule() = default;
  WeightModule(RootDatum rd, std::vector<Weight> wts, std::vector<std::string> labels);

  // Builders assign the single-power operator matrices, then finalize() to
  // verify the module relations and precompute divided powers.
  void set_e(int i, SpMat m);
  void set_f(int i, SpMat m);
  void finalize();

  int dim() const { return (int)wt_.size(); }
  const RootDatum& datum() const { return *rd_; }
  const Weight& weight(int k) const { return wt_[(size_t)k]; }
  const std::vector<Weight>& weights() const { return wt_; }
  const std::string& label(int k) const { return label_[(size_t)k]; }
  const std::vector<std::string>& labels() const { return label_; }

  const SpMat& e_pow(int i, int n) const;  // E_i^{(n)}; identity for n=0
  const SpMat& f_pow(int i, int n) const;
  int depth() const { return depth_; }

  // K_mu is diagonal: coefficient on basis vector k.
  RatFunc k_coeff(const Coweight& mu, int k) const;
  RatFunc ktilde_coeff(int i, int k, int sign) const;  // sign = +1 or -1
  Vec apply_k(const Coweight& mu, const Vec& v) const;
  Vec apply_ktilde(int i, int sign, const Vec& v) const;
  SpMat ktilde_mat(int i, int sign) const;

  void verify_relations() const;

 private:
  std::shared_ptr<const RootDatum> rd_;
  std::vector<Weight> wt_;
  std::vector<std::string> label_;
  std::vector<std::vector<SpMat>> epow_, fpow_;  // [i][n]
  int depth_ = 0;
};

// A weight module together with a distinguished basis (the labels) and the
// bar involution psi expressed in that basis: psi(v) = psi_mat * bar(v).
// For a canonical basis psi_mat is the identity.
struct BasedModule {
  WeightModule mod;
  SpMat psi_mat;
  std::string provenance;

  Vec apply_psi(const Vec& v) const { return psi_mat.apply(vec_bar(v)); }
  int dim() const { return mod.dim(); }
};

// Word in the generators for act(); divided powers for E/F, coweight for K.
struct GenPower {
  enum Kind { E, F, K } kind;
  int i = 0;        // generator index for E/F
  int n = 1;        // divided power for E/F
  Coweight mu;      // for K
};

// Left-to-right composition: the first entry of `word` acts first.
Vec act_word(const WeightModule& m, const std::vector<GenPower>& word, Vec v);

// The irreducible V(la) with its canonical basis.  Cached per (datum, la).
BasedModule build_irreducible(const RootDatum& rd, const Weight& la);

// Index of the highest-weight basis vector (unique weight-la element).
int highest_weight_index(const BasedModule& m, const Weight& la);

}  // namespace qsym
