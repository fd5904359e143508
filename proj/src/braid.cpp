#include "qsym/braid.hpp"

#include "qsym/laurent.hpp"

namespace qsym {

Vec braid_action(const WeightModule& m, int i, const Vec& v) {
  return braid_matrix(m, i).apply(v);
}

SpMat braid_matrix(const WeightModule& m, int i) {
  require(i >= 0 && i < m.datum().rank(), Err::UNKNOWN_INDEX,
          "braid generator index out of range");
  const int d = m.dim();
  const long eps = m.datum().eps(i);
  SpMat t(d, d);
  for (int j = 0; j < d; ++j) {
    const long n = m.datum().pair_coroot(i, m.weight(j));
    Vec ej;
    ej[j] = RatFunc(LaurentInt(1));
    Vec acc;
    for (int c = 0; c <= m.depth(); ++c) {
      Vec x1 = m.e_pow(i, c).apply(ej);
      if (vec_is_zero(x1)) continue;
      for (int b = 0; b <= m.depth(); ++b) {
        const long a = (long)b - (long)c - n;
        if (a < 0) continue;
        Vec x2 = m.f_pow(i, b).apply(x1);
        if (vec_is_zero(x2)) continue;
        Vec x3 = m.e_pow(i, (int)a).apply(x2);
        if (vec_is_zero(x3)) continue;
        RatFunc coeff = RatFunc::q_power(eps * ((long)b - a * (long)c));
        if (b % 2 == 1) coeff = RatFunc() - coeff;
        vec_add_scaled(acc, x3, coeff);
      }
    }
    t.col_mut(j) = std::move(acc);
  }
  return t;
}

SpMat braid_word_matrix(const WeightModule& m, const std::vector<int>& word) {
  SpMat t = SpMat::identity(m.dim());
  for (int i : word) t = t * braid_matrix(m, i);
  return t;
}

const SpMat& right_e(const WeightModule& m, int i, int n) {
  return m.f_pow(i, n);
}

const SpMat& right_f(const WeightModule& m, int i, int n) {
  return m.e_pow(i, n);
}

Vec act_word_right(const WeightModule& m, const std::vector<GenPower>& word,
                   Vec v) {
  for (const auto& g : word) {
    switch (g.kind) {
      case GenPower::E:
        v = right_e(m, g.i, g.n).apply(v);
        break;
      case GenPower::F:
        v = right_f(m, g.i, g.n).apply(v);
        break;
      case GenPower::K:
        require((int)g.mu.size() == m.datum().dim_y(), Err::UNKNOWN_GENERATOR,
                "K coweight has wrong dimension");
        v = m.apply_k(g.mu, v);
        break;
    }
    if (v.empty()) break;
  }
  return v;
}

}  // namespace qsym
