#pragma once

// Triangular solve for bar-invariant bases.  Given an involution
// psi(v) = P * bar(v) that is unitriangular with respect to SOME ordering
// of the coordinates (discovered here by topological sorting of the
// support of P - I), produce the unique basis {c_j} with
//   psi(c_j) = c_j,   c_j in e_j + sum_k q^{-1} Z[q^{-1}] e_k.
// Columns of the result are the c_j.  `key` breaks ties deterministically
// when several coordinates are ready (smaller key first, then index).

#include <gmpxx.h>

#include "qsym/linalg.hpp"

namespace qsym {

SpMat bar_triangular_solve(const SpMat& p, const std::vector<mpq_class>& key);

}  // namespace qsym
