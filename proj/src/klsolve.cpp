#include "qsym/klsolve.hpp"

#include <queue>
#include <set>

#include "qsym/laurent.hpp"

namespace qsym {

namespace {

// Strictly-negative-exponent part of a bar-antisymmetric Laurent polynomial;
// t - bar(t) recovers the input.
LaurentInt negative_part(const LaurentInt& x) {
  LaurentInt t;
  for (const auto& [e, c] : x.terms())
    if (e < 0) t = t + LaurentInt::monomial(c, e);
  return t;
}

}  // namespace

SpMat bar_triangular_solve(const SpMat& p, const std::vector<mpq_class>& key) {
  const int n = p.rows();
  require(p.cols() == n, Err::INTERNAL, "bar solve needs a square matrix");
  require((int)key.size() == n, Err::INTERNAL, "bar solve key size mismatch");

  // psi(e_j) = e_j + (strictly earlier terms): find an ordering making the
  // off-diagonal support of P strictly triangular.
  const RatFunc one(LaurentInt(1));
  std::vector<std::vector<int>> out(n);  // k -> {j : P[k][j] != 0, j != k}
  std::vector<int> indeg(n, 0);
  for (int j = 0; j < n; ++j) {
    require(p.at(j, j) == one, Err::TRIANGULARITY_FAILURE,
            "bar involution is not unitriangular on the given basis");
    for (const auto& [k, c] : p.col(j)) {
      (void)c;
      if (k == j) continue;
      out[k].push_back(j);
      ++indeg[j];
    }
  }
  auto cmp = [&](int a, int b) {
    if (key[(size_t)a] != key[(size_t)b]) return key[(size_t)a] < key[(size_t)b];
    return a < b;
  };
  std::set<int, decltype(cmp)> ready(cmp);
  for (int j = 0; j < n; ++j)
    if (indeg[j] == 0) ready.insert(j);
  std::vector<int> order;
  std::vector<int> pos(n, -1);
  while (!ready.empty()) {
    int j = *ready.begin();
    ready.erase(ready.begin());
    pos[j] = (int)order.size();
    order.push_back(j);
    for (int t : out[j])
      if (--indeg[t] == 0) ready.insert(t);
  }
  require((int)order.size() == n, Err::TRIANGULARITY_FAILURE,
          "bar involution has a cyclic dependency; no triangular order");

  SpMat c(n, n);
  for (int j : order) {
    Vec v;
    v[j] = one;
    for (;;) {
      Vec delta = p.apply(vec_bar(v));
      vec_add_scaled(delta, v, RatFunc(LaurentInt(-1)));
      if (vec_is_zero(delta)) break;
      // Largest outstanding position in the triangular order.
      int k = -1;
      for (const auto& [idx, val] : delta) {
        (void)val;
        if (k < 0 || pos[idx] > pos[k]) k = idx;
      }
      require(pos[k] < pos[j], Err::TRIANGULARITY_FAILURE,
              "correction would escape the triangular order");
      RatFunc d = vec_get(delta, k);
      require(d.lattice_member(LatticeId::INT_LAURENT), Err::LATTICE_VIOLATION,
              "bar defect is not an integral Laurent polynomial");
      LaurentInt x = d.to_laurent();
      require(x.bar() == LaurentInt() - x, Err::INTERNAL,
              "bar defect is not antisymmetric; psi is not an involution");
      LaurentInt t = negative_part(x);
      vec_set(v, k, vec_get(v, k) + RatFunc(t));
    }
    c.col_mut(j) = std::move(v);
  }
  return c;
}

}  // namespace qsym
