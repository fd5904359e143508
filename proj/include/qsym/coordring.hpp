#pragma once

// Cell-quotient models of the modified form and the canonical basis of the
// coordinate ring of K\G.
//
// The modified form U-dot is filtered by two-sided ideals; the quotient by
// the ideal at a dominant bound la is modelled here layer by layer: the
// la-layer is the bimodule V(la) (x) sigma-omega V(la) with basis
// B(la) x B(la).  The dual basis elements supported on the starred
// i-canonical elements of the layers assemble into the canonical basis of
// the invariant coordinate ring; its graded pieces, character data, and the
// two-sided (biinvariant) elements are computed and verified here.
//
// Conventions:
//  * A layer piece carries the left action on the first tensor factor and
//    the sigma-omega twisted right action on the second:
//       (v (x) w) . u  =  v (x) sigma omega(u) w.
//    Right weights are recorded with the sign that makes right-E raise and
//    right-F lower, mirroring the left conventions: rwt(v (x) w) = -wt(w).
//    The right-weight multiset of the la-layer is then the character of
//    V(-w0 la), which is what the good-filtration theorem predicts for the
//    la-graded piece of the ring.
//  * Every report ranges over the dominant weights in the coordinate box
//    spanned by 0 and a dominant bound, in the deterministic total order.
//  * Each graded piece self-checks its bi-character against independently
//    computed weight multiplicities (CHARACTER_MISMATCH on failure).

#include <map>
#include <memory>

#include "qsym/coinv.hpp"
#include "qsym/iqsp.hpp"

namespace qsym {

enum class Tier { GRADED, FULL_RANK1 };

// A canonical basis label of the rank-one modified form: E^(a) F^(b) 1_n
// with n <= b - a, or F^(b) E^(a) 1_n with n >= b - a; the labels with
// n = b - a coincide and are stored with e_first = true.
struct Rank1Label {
  long a = 0, b = 0, n = 0;
  bool e_first = true;
  long cell() const { return e_first ? 2 * b - n : 2 * a + n; }
  std::string str() const;
};

// Explicit truncation of the rank-one modified form: the canonical basis
// labels in the cells <= bound (the cells of one parity, (c+1)^2 labels in
// cell c), in a deterministic order ascending by cell.
struct Rank1Model {
  long bound = 0;
  std::vector<Rank1Label> labels;
  std::map<long, std::vector<int>> by_cell;  // cell -> label indices
};

std::shared_ptr<const Rank1Model> build_rank1_truncation(long bound);

// One layer V(mu) (x) sigma-omega V(mu).  As a left module it is the direct
// sum of dim V(mu) copies of V(mu); host index = b1 * vdim + b2, where b2
// names the copy.  psi is the identity on the basis of pairs.
struct GradedPiece {
  Weight mu;
  int vdim = 0;
  BasedModule host;
  std::vector<Weight> right_wt;  // -wt(b2) per host index
  std::vector<SpMat> re, rf;     // right E_i / F_i (single powers, per node)
};

GradedPiece build_graded_piece(const IRootDatum& id, const Weight& mu);

// The model of the quotient of the modified form at the dominant bound la.
// GRADED: one piece per dominant mu <= la in dominance order, ascending in
// the total order.  FULL_RANK1 is only available for rank-one data and is
// built by build_rank1_truncation (TIER_UNSUPPORTED otherwise).
struct CellQuotientModel {
  Tier tier = Tier::GRADED;
  Weight bound;
  std::vector<GradedPiece> pieces;               // GRADED payload
  std::shared_ptr<const Rank1Model> rank1;       // FULL_RANK1 payload

  int dim() const;
};

CellQuotientModel build_cell_quotient(const IRootDatum& id, const Weight& la,
                                      Tier tier);

// Dominant weights mu <= la in the dominance order (the cells of the
// quotient at la), ascending in the total order.
std::vector<Weight> dominant_cells_below(const RootDatum& rd, const Weight& la);

// Dominant weights in the coordinate box spanned by 0 and the bound,
// ascending in the total order.  NOT_DOMINANT if the bound is not.
std::vector<Weight> dominant_box(const RootDatum& rd, const Weight& bound);

// The la-graded piece of the canonical basis of the invariant ring: the
// starred i-canonical elements of the la-layer.  For spherical la these are
// in bijection with B(la) through the pairs (highest-weight element, b2);
// the bijection is asserted, not assumed.
struct CKGCell {
  Weight lambda;
  bool spherical = false;
  std::vector<int> host_index;        // within the la-layer, = hw * vdim + j
  std::vector<std::string> labels;    // layer labels of the starred elements
  std::vector<Weight> right_wt;       // right weight per starred element
};

struct CKGBasis {
  Weight bound;
  std::vector<CKGCell> cells;  // one per box weight, ascending total order
};

// Runs the parameter validation, the i-canonical basis, and the coinvariant
// construction on each layer at a box weight; collects the starred labels.
// Propagates the verification failures of those stages.
CKGBasis ckg_basis(const IRootDatum& id, const IParams& p, const Weight& bound);

// Character comparison for the good filtration: for each box weight, the
// right-weight multiset of the la-graded basis piece against the weight
// multiplicities of V(-w0 la); non-spherical pieces must be empty.  Any
// spherical mismatch aborts with CHARACTER_MISMATCH.
struct FiltrationRow {
  Weight lambda;
  bool spherical = false;
  Weight dual;                          // -w0 lambda
  std::map<Weight, mpz_class> piece_char;
  bool match = false;
};

std::vector<FiltrationRow> filtration_report(const IRootDatum& id,
                                             const IParams& p,
                                             const Weight& bound);

// Span of the twisted augmentation ideal on the sigma-omega twist of v: the
// smallest subspace containing the images of sigma omega(B_i) (unpainted),
// E_i and F_i (painted), (K_mu - 1), and stable under those operators.
// TIER_UNSUPPORTED when unpainted nodes coexist with a painted subdiagram
// (the twist of the cross-braid generator is not implemented).
Span right_augmentation_span(const BasedModule& v, const IRootDatum& id,
                             const IParams& p);

// The right-module coinvariant functional on the la-layer's coinvariant
// space, in the B(la) coordinates supplied by the starred basis: the unique
// functional killing the twisted augmentation span, scaled to 1 at the
// vector of dominant right weight (the lowest-weight element of V(la)).
// NO_MORPHISM when the span is everything or the scaling vector is missed.
SpMat right_coinvariant_functional(const IRootDatum& id, const IParams& p,
                                   const Weight& la);

// Two-sided coinvariants per box weight: the right-module coinvariant
// construction applied on top of the left one.  For each spherical la the
// count is asserted to be 1 (0 otherwise), by two independent computations:
// the quotient of the layer by the sum of both augmentation spans, and the
// twisted closure on the left-coinvariant space.  The module also asserts
// that the descended right action on the left coinvariants equals the
// sigma-omega action on V(la) on the nose.
struct BiinvariantCell {
  Weight lambda;
  bool spherical = false;
  int count = 0;
  std::vector<std::string> labels;  // layer labels of the doubly starred
};

std::vector<BiinvariantCell> biinvariant_basis(const IRootDatum& id,
                                               const IParams& p,
                                               const Weight& bound);

// Classical oracle for the rank-one split pair: dimensions of the space of
// polynomials on SL2 (coordinates a,b,c,d modulo ad - bc = 1) of total
// degree <= k that are invariant under the infinitesimal left rotation
// a -> c, b -> d, c -> -a, d -> -b, for k = 0..max_degree.  Exact linear
// algebra over the rationals; CONFIG_INVALID when max_degree > 6.
std::vector<int> so2_invariant_dims(int max_degree);

}  // namespace qsym
