#pragma once

// Tensor products of based modules.  The coproduct action is
//   E_i |-> E_i x 1 + Ktilde_i x E_i,    F_i |-> F_i x Ktilde_i^{-1} + 1 x F_i,
// the bar involution of a tensor product is psi_M(x)N = Theta o (psi_M x psi_N)
// with Theta the quasi-R-matrix, and the canonical basis of the product is
// obtained from the pure tensors by the triangular bar-solve.

#include <memory>

#include "qsym/module.hpp"

namespace qsym {

// Index of e_a (x) e_b inside M (x) N (left factor major).
inline int tensor_index(int a, int b, int ndim) { return a * ndim + b; }

// Kronecker product compatible with tensor_index.
SpMat kron(const SpMat& a, const SpMat& b);

WeightModule tensor_module(const WeightModule& m, const WeightModule& n);

// Truncated quasi-R-matrix, computed as an operator on a fixed M (x) N.
// Components are graded by nu in the positive root-lattice cone (stored as
// the tuple of simple-root coefficients); `bound` is the first height at
// which every component vanishes, so the data is complete.
struct ThetaTrunc {
  int bound = 0;
  std::map<std::vector<int>, SpMat> comp;
  SpMat total;
};

std::shared_ptr<const ThetaTrunc> compute_theta(const BasedModule& m,
                                                const BasedModule& n);

// Columns: the canonical basis of M (x) N in pure-tensor coordinates.
SpMat diamond_basis(const BasedModule& m, const BasedModule& n,
                    const ThetaTrunc& th);

// The based tensor product, expressed in its own canonical basis (so its
// psi matrix is the identity).
BasedModule tensor_based(const BasedModule& m, const BasedModule& n);

}  // namespace qsym
