#pragma once

// Coinvariants of a based module with respect to the embedded subalgebra:
// the quotient F(M) = M / M_+ by the image of the augmentation ideal.  The
// starred subset of the i-canonical basis,
//   B*(M) = { b^i : b in B[la]^hi for a spherical cell la },
// descends to a basis of F(M), so F(M) is modeled as a labeled coordinate
// space.  The projection f is assembled cell by cell: the decomposition
// into irreducibles followed by the normalized functional on each spherical
// copy, then a triangular correction making the starred images exact
// coordinate vectors.  Every structural claim along the way is verified on
// the computed matrices (triangularity and integrality of the correction,
// vanishing on the non-starred basis, bar-equivariance, integrality of the
// result), so a successful build is a certificate for the module at hand.

#include <string>
#include <vector>

#include "qsym/cells.hpp"
#include "qsym/iqsp.hpp"

namespace qsym {

// One starred basis element: which host basis element it is, the cell it
// lives in, and its position within that cell's hi list.
struct StarLabel {
  int host_index = 0;
  Weight lambda;
  int copy = 0;
};

struct CoinvariantDatum {
  IBasisData basis;               // host module with its i-canonical basis
  Span mplus;                     // image of the augmentation ideal
  std::vector<StarLabel> bstar;   // quotient basis, cells in descending order
  std::vector<std::string> labels;  // host labels of the starred elements
  SpMat f;                        // |bstar| x dim projection, host coordinates
};

// Exact span of the augmentation ideal applied to the module: all B_i m,
// E_i m and F_i m at painted nodes, and (K_mu - 1) m, closed under the
// embedded generators.
Span augmentation_submodule(const IBasisData& m, const IRootDatum& id);

// Starred subset of the i-canonical basis, in the row order of the
// projection: cells in descending total order, copies in hi order.
std::vector<StarLabel> bstar(const IBasisData& m, const IRootDatum& id);

// The projection M -> F(M) in host coordinates.  Callers are expected to
// have validated the parameters for the spherical cells; structural
// failures surface as CORRECTION_NOT_INTEGRAL (triangular correction not
// vanishing at q = infinity), BASIS_SPAN_MISMATCH (a non-starred element
// survives the projection), or LATTICE_VIOLATION (entries of the corrected
// map leave Z[q^{-1}]).
SpMat build_f_map(const IBasisData& m, const IRootDatum& id);

// Full pipeline: the projection together with the augmentation span and
// the verification that the non-starred i-canonical elements span it.
CoinvariantDatum coinvariants(const IBasisData& m, const IRootDatum& id);

// Matrix of the induced map F(src) -> F(dst) of a based morphism on the
// starred coordinates (NOT_BASED when the map is not one).  At q = infinity
// each column is a coordinate vector or zero.
SpMat coinv_morphism(const SpMat& fmap, const CoinvariantDatum& src,
                     const CoinvariantDatum& dst, const IRootDatum& id);

}  // namespace qsym
