#pragma once

// Cell structure of a based module.  For dominant la,
//   M[>=la] = sum over dominant mu >= la of the submodule generated by all
//             E-singular vectors of weight mu,
// which for a based module is spanned by a subset B[>=la] of the basis;
// B[la] = B[>=la] - B[>la], and B[la]^hi is the set of weight-la elements
// of B[la] whose E_i-images lie in M[>la].  From these one builds the
// explicit decomposition of M into irreducibles compatible with the basis:
// a filtration-triangular isomorphism phi with unitriangular diagonal
// blocks whose off-block entries vanish at q = infinity.

#include "qsym/module.hpp"

namespace qsym {

struct CellDatum {
  std::vector<Weight> lambdas;  // dominant, ascending in the total order
  std::vector<int> n_lambda;    // |B[la]^hi|
  std::vector<std::vector<int>> ge;    // indices of B[>=la]
  std::vector<std::vector<int>> gt;    // indices of B[>la]
  std::vector<std::vector<int>> cell;  // indices of B[la]
  std::vector<std::vector<int>> hi;    // indices of B[la]^hi
};

CellDatum cell_filtration(const BasedModule& m);

// Restriction of a based module to the span of a subset of its basis
// (which must be stable under the operators and under psi).
BasedModule based_submodule(const BasedModule& m, const std::vector<int>& idx,
                            std::string provenance);

// Quotient of a based module by the span of a subset of its basis (which
// must be stable under the operators and under psi); the remaining labels
// index the quotient basis, in their original order.
BasedModule based_quotient(const BasedModule& m, const std::vector<int>& drop,
                           std::string provenance);

// The cell submodule M[>=la] for the maximal la present.
BasedModule top_cell(const BasedModule& m);

struct KaDecomposition {
  CellDatum cells;
  std::vector<BasedModule> irr;  // irr[j] = V(lambdas[j])

  // Target coordinates of the direct sum: blocks in descending-la order,
  // one copy of V(la_j) per element of hi[j], vectors in canonical order.
  std::vector<int> block_of;  // target index -> j into cells.lambdas
  std::vector<int> copy_of;   // target index -> position within hi[j]
  std::vector<int> vec_of;    // target index -> basis index in irr[j]

  SpMat t;    // direct sum -> M (columns are the embedded canonical bases)
  SpMat phi;  // = t^{-1}
};

KaDecomposition ka_decomposition(const BasedModule& m);

}  // namespace qsym
