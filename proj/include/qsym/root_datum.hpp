#pragma once

// Root data of finite type, their Weyl groups, the dominance order, weight
// multiplicities (Freudenthal), and the quotient/fixed-point lattices
// attached to an involutive diagram automorphism:
//   theta = -w_bullet . tau,   X_i = X/(1-theta)X,   Y^i = {mu : theta mu = mu}.
// Everything is exact: integer matrices, rational solves, GMP throughout.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsym/error.hpp"

namespace qsym {

using Weight = std::vector<long>;    // coordinates in the chosen basis of X
using Coweight = std::vector<long>;  // coordinates in the chosen basis of Y
using IMat = std::vector<std::vector<long>>;

Weight w_add(const Weight& a, const Weight& b);
Weight w_sub(const Weight& a, const Weight& b);
Weight w_neg(const Weight& a);
Weight w_scaled(const Weight& a, long k);
bool w_is_zero(const Weight& a);
std::string w_str(const Weight& a);
IMat imat_identity(int n);
IMat imat_mul(const IMat& a, const IMat& b);
Weight imat_apply(const IMat& m, const Weight& v);
IMat imat_neg(const IMat& m);

struct WeylElt {
  IMat on_x, on_y;
  int length = 0;
  std::vector<int> word;  // one reduced expression
};

// Raw description as supplied by a user or a preset; validated into a
// RootDatum by RootDatum::validate.
struct RootDatumDesc {
  int rank = 0;                 // |I|
  IMat cartan;                  // a_ij
  IMat pairing;                 // <e_a^Y, e_b^X>, dim Y rows x dim X cols
  std::vector<Weight> alpha;    // simple roots in X coordinates
  std::vector<Coweight> alpha_vee;  // simple coroots in Y coordinates
};

class RootDatum {
 public:
  static RootDatum validate(const RootDatumDesc& d);

  int rank() const { return n_; }
  int dim_x() const { return dx_; }
  int dim_y() const { return dy_; }
  const IMat& cartan() const { return cartan_; }
  const IMat& pairing() const { return pairing_; }
  const Weight& alpha(int i) const { return alpha_[(size_t)i]; }
  const Coweight& alpha_vee(int i) const { return alpha_vee_[(size_t)i]; }
  long eps(int i) const { return eps_[(size_t)i]; }

  long pair(const Coweight& mu, const Weight& la) const;
  long pair_coroot(int i, const Weight& la) const;  // <alpha_i^vee, la>
  Weight reflect(int i, const Weight& la) const;    // s_i on X
  Coweight reflect_co(int i, const Coweight& mu) const;  // s_i on Y

  bool dominant(const Weight& la) const;
  // Exact rational coordinates of v in the simple-root basis, if v lies in
  // the rational span of the roots.
  std::optional<std::vector<mpq_class>> root_coords(const Weight& v) const;
  bool dominance_leq(const Weight& la, const Weight& mu) const;  // la <= mu
  // Height of v = sum of its simple-root coordinates (requires root span).
  mpq_class height(const Weight& v) const;
  // Dominance-compatible deterministic total order: height first, then
  // lexicographically larger coordinates first.
  bool total_less(const Weight& a, const Weight& b) const;

  const std::vector<WeylElt>& weyl() const { return weyl_; }
  const WeylElt& w0() const { return weyl_[(size_t)w0_index_]; }
  Weight minus_w0(const Weight& la) const;
  // Longest element of the parabolic subgroup generated by the listed
  // simple reflections.
  WeylElt longest_parabolic(const std::vector<int>& subset) const;

  const std::vector<Weight>& positive_roots() const { return pos_roots_; }
  // Unique dominant Weyl-orbit representative.
  Weight dominant_rep(const Weight& v) const;

  // All weights of the irreducible V(la) with multiplicities (Freudenthal).
  std::map<Weight, mpz_class> weight_multiplicities(const Weight& la) const;
  mpz_class weyl_dim(const Weight& la) const;

  // Deterministic serialization of the defining data; used as a cache key.
  std::string fingerprint() const;

 private:
  int n_ = 0, dx_ = 0, dy_ = 0;
  IMat cartan_, pairing_;
  std::vector<Weight> alpha_;
  std::vector<Coweight> alpha_vee_;
  std::vector<long> eps_;
  std::vector<WeylElt> weyl_;
  int w0_index_ = 0;
  std::vector<Weight> pos_roots_;

  void build_weyl();
  void build_positive_roots();
  // (x, alpha) for alpha a positive root, via (x, alpha_i) = eps_i <alpha_i^vee, x>.
  mpq_class form_with_root(const Weight& x, const Weight& root) const;
};

class IRootDatum {
 public:
  // tau given as a permutation of {0..rank-1}; its action on X/Y is the
  // corresponding coordinate permutation unless explicit matrices are given.
  static IRootDatum validate(RootDatum base, std::vector<int> ibullet,
                             std::vector<int> tau,
                             std::optional<IMat> tau_on_x = std::nullopt,
                             std::optional<IMat> tau_on_y = std::nullopt);

  const RootDatum& base() const { return base_; }
  const std::vector<int>& ibullet() const { return ibullet_; }
  bool is_black(int i) const;
  const std::vector<int>& icirc() const { return icirc_; }  // I minus I_bullet
  int tau(int i) const { return tau_[(size_t)i]; }
  const IMat& tau_x() const { return tau_x_; }
  const IMat& theta_x() const { return theta_x_; }
  const IMat& theta_y() const { return theta_y_; }
  const WeylElt& w_bullet() const { return w_bullet_; }
  Weight theta(const Weight& la) const { return imat_apply(theta_x_, la); }

  // Hermite basis of the sublattice (1-theta)X.
  const std::vector<Weight>& one_minus_theta_basis() const { return hnf_basis_; }
  // Basis of the fixed lattice Y^i.
  const std::vector<Coweight>& y_fixed_basis() const { return y_fixed_; }

  bool image_is_zero_in_xi(const Weight& la) const;  // la in (1-theta)X
  bool is_spherical(const Weight& la) const;         // requires la dominant
  std::vector<Weight> spherical_enumerate(long bound) const;

  // Deterministic serialization (base datum plus painting and tau); cache key.
  std::string fingerprint() const;

 private:
  RootDatum base_;
  std::vector<int> ibullet_, icirc_, tau_;
  IMat tau_x_, tau_y_, theta_x_, theta_y_;
  WeylElt w_bullet_;
  std::vector<Weight> hnf_basis_;
  std::vector<Coweight> y_fixed_;
};

}  // namespace qsym
