#pragma once

// Independent oracles used by the test suites.  These deliberately avoid the
// production code paths: Smith normal form here, Hermite form in the library.

#include <gmpxx.h>

#include <vector>

namespace oracles {

using ZMat = std::vector<std::vector<mpz_class>>;  // row-major

struct Snf {
  std::vector<mpz_class> diag;  // invariant factors d_1 | d_2 | ...
  ZMat u;                       // row transform: u * m * v = smith form
};

// Smith normal form with row-transform tracking (column ops untracked; they
// do not change the column lattice).
inline Snf smith(ZMat m) {
  size_t nr = m.size(), nc = nr ? m[0].size() : 0;
  ZMat u(nr, std::vector<mpz_class>(nr, 0));
  for (size_t i = 0; i < nr; ++i) u[i][i] = 1;
  size_t t = 0;
  while (t < nr && t < nc) {
    // find a nonzero pivot of minimal absolute value in the t.. submatrix
    size_t pi = nr, pj = nc;
    for (size_t i = t; i < nr; ++i)
      for (size_t j = t; j < nc; ++j)
        if (m[i][j] != 0 && (pi == nr || cmp(abs(m[i][j]), abs(m[pi][pj])) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi == nr) break;  // submatrix is zero
    std::swap(m[t], m[pi]);
    std::swap(u[t], u[pi]);
    for (size_t i = 0; i < nr; ++i) std::swap(m[i][t], m[i][pj]);
    bool clean = true;
    for (size_t i = t + 1; i < nr; ++i) {
      mpz_class q = m[i][t] / m[t][t];
      if (q != 0)
        for (size_t j = 0; j < nc; ++j) m[i][j] -= q * m[t][j];
      if (q != 0)
        for (size_t j = 0; j < nr; ++j) u[i][j] -= q * u[t][j];
      if (m[i][t] != 0) clean = false;
    }
    for (size_t j = t + 1; j < nc; ++j) {
      mpz_class q = m[t][j] / m[t][t];
      if (q != 0)
        for (size_t i = 0; i < nr; ++i) m[i][j] -= q * m[i][t];
      if (m[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // repeat with smaller remainders
    // divisibility fix-up: pivot must divide every remaining entry
    bool fixed = true;
    for (size_t i = t + 1; i < nr && fixed; ++i)
      for (size_t j = t + 1; j < nc && fixed; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (size_t jj = 0; jj < nc; ++jj) m[t][jj] += m[i][jj];
          for (size_t jj = 0; jj < nr; ++jj) u[t][jj] += u[i][jj];
          fixed = false;
        }
    if (!fixed) continue;
    if (m[t][t] < 0) {
      for (size_t j = 0; j < nc; ++j) m[t][j] = -m[t][j];
      for (size_t j = 0; j < nr; ++j) u[t][j] = -u[t][j];
    }
    ++t;
  }
  Snf out;
  for (size_t i = 0; i < t; ++i) out.diag.push_back(m[i][i]);
  out.u = std::move(u);
  return out;
}

// Is v in the lattice generated by the columns of m?
inline bool snf_column_lattice_member(const ZMat& m, const std::vector<mpz_class>& v) {
  Snf s = smith(m);
  size_t nr = m.size();
  std::vector<mpz_class> y(nr, 0);
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nr; ++j) y[i] += s.u[i][j] * v[j];
  for (size_t i = 0; i < nr; ++i) {
    if (i < s.diag.size()) {
      if (y[i] % s.diag[i] != 0) return false;
    } else {
      if (y[i] != 0) return false;
    }
  }
  return true;
}

}  // namespace oracles
