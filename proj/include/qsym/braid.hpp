#pragma once

// Braid group operators and the sigma.omega right-module twist.
//
// The braid operator acting on a weight vector m with n = <alpha_i^vee, wt m>:
//   T_i(m) = sum_{a,b,c >= 0, b-a-c = n} (-1)^b q_i^{b-ac}
//            E_i^{(a)} F_i^{(b)} E_i^{(c)} m        (rightmost factor first).
// It is invertible, maps the wt-mu space to the wt-s_i(mu) space, and the
// operators satisfy the braid relations of the Weyl group.
//
// The twist sigma.omega is the algebra anti-automorphism with
// E^{(n)} -> F^{(n)}, F^{(n)} -> E^{(n)}, K_mu -> K_mu; it turns a left
// module into a right module via x.u := sigma.omega(u) x.

#include "qsym/module.hpp"

namespace qsym {

SpMat braid_matrix(const WeightModule& m, int i);
Vec braid_action(const WeightModule& m, int i, const Vec& v);
// Composite T_{i1} T_{i2} ... applied left to right (word order = letter
// order of a reduced word; the last letter acts first).
SpMat braid_word_matrix(const WeightModule& m, const std::vector<int>& word);

// Right-action matrices under the sigma.omega twist.
const SpMat& right_e(const WeightModule& m, int i, int n);  // acts as F^{(n)}
const SpMat& right_f(const WeightModule& m, int i, int n);  // acts as E^{(n)}
// Right action of a word: x . (g1 g2 ...) applies sigma.omega(g1) first.
Vec act_word_right(const WeightModule& m, const std::vector<GenPower>& word,
                   Vec v);

}  // namespace qsym
