#include "qsym/tensor.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

#include "qsym/klsolve.hpp"
#include "qsym/laurent.hpp"

namespace qsym {

SpMat kron(const SpMat& a, const SpMat& b) {
  SpMat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ja = 0; ja < a.cols(); ++ja)
    for (const auto& [ia, ca] : a.col(ja))
      for (int jb = 0; jb < b.cols(); ++jb) {
        if (b.col(jb).empty()) continue;
        Vec& dst = r.col_mut(tensor_index(ja, jb, b.cols()));
        for (const auto& [ib, cb] : b.col(jb))
          dst[tensor_index(ia, ib, b.rows())] = ca * cb;
      }
  return r;
}

WeightModule tensor_module(const WeightModule& m, const WeightModule& n) {
  require(m.datum().fingerprint() == n.datum().fingerprint(), Err::INTERNAL,
          "tensor factors live over different root data");
  const int dm = m.dim(), dn = n.dim();
  std::vector<Weight> wts((size_t)(dm * dn));
  std::vector<std::string> labels((size_t)(dm * dn));
  for (int a = 0; a < dm; ++a)
    for (int b = 0; b < dn; ++b) {
      int t = tensor_index(a, b, dn);
      wts[(size_t)t] = w_add(m.weight(a), n.weight(b));
      labels[(size_t)t] = m.label(a) + "*" + n.label(b);
    }
  WeightModule T(m.datum(), std::move(wts), std::move(labels));
  SpMat idm = SpMat::identity(dm), idn = SpMat::identity(dn);
  for (int i = 0; i < m.datum().rank(); ++i) {
    SpMat e = kron(m.e_pow(i, 1), idn) + kron(m.ktilde_mat(i, +1), n.e_pow(i, 1));
    SpMat f = kron(m.f_pow(i, 1), n.ktilde_mat(i, -1)) + kron(idm, n.f_pow(i, 1));
    T.set_e(i, std::move(e));
    T.set_f(i, std::move(f));
  }
  T.finalize();
  return T;
}

namespace {

// Vectorize an operator matrix for span arithmetic.
Vec vectorize(const SpMat& m) {
  Vec v;
  for (int j = 0; j < m.cols(); ++j)
    for (const auto& [i, c] : m.col(j)) v[j * m.rows() + i] = c;
  return v;
}

// Basis matrices of the span of the listed candidates.
std::vector<SpMat> span_basis(const std::vector<SpMat>& cand) {
  Span s;
  std::vector<SpMat> basis;
  for (const auto& m : cand)
    if (!m.is_zero() && s.insert(vectorize(m))) basis.push_back(m);
  return basis;
}

std::string theta_key(const BasedModule& m, const BasedModule& n) {
  std::ostringstream os;
  os << m.mod.datum().fingerprint() << "#" << m.provenance << "#"
     << n.provenance << "#" << m.dim() << "x" << n.dim() << "#";
  for (int k = 0; k < m.dim(); ++k) os << w_str(m.mod.weight(k));
  os << "#";
  for (int k = 0; k < n.dim(); ++k) os << w_str(n.mod.weight(k));
  return os.str();
}

std::shared_mutex theta_cache_mutex;
std::map<std::string, std::shared_ptr<const ThetaTrunc>>& theta_cache() {
  static std::map<std::string, std::shared_ptr<const ThetaTrunc>> c;
  return c;
}

}  // namespace

std::shared_ptr<const ThetaTrunc> compute_theta(const BasedModule& m,
                                                const BasedModule& n) {
  require(m.mod.datum().fingerprint() == n.mod.datum().fingerprint(),
          Err::INTERNAL, "tensor factors live over different root data");
  const std::string key = theta_key(m, n);
  {
    std::shared_lock lock(theta_cache_mutex);
    auto it = theta_cache().find(key);
    if (it != theta_cache().end()) return it->second;
  }

  const RootDatum& rd = m.mod.datum();
  const int nI = rd.rank();
  const int dm = m.dim(), dn = n.dim(), dt = dm * dn;
  SpMat idm = SpMat::identity(dm), idn = SpMat::identity(dn);

  auto th = std::make_shared<ThetaTrunc>();
  th->total = SpMat::identity(dt);
  th->comp[std::vector<int>((size_t)nI, 0)] = SpMat::identity(dt);

  // Operators entering the defining equations, one set per generator index:
  //   [E_i x 1, Theta_nu] = Theta_{nu-a_i} (Ktilde_i^{-1} x E_i)
  //                         - (Ktilde_i x E_i) Theta_{nu-a_i}
  //   [1 x F_i, Theta_nu] = Theta_{nu-a_i} (F_i x Ktilde_i)
  //                         - (F_i x Ktilde_i^{-1}) Theta_{nu-a_i}
  std::vector<SpMat> e_left, ke_minus, ke_plus, f_right, fk_plus, fk_minus;
  for (int i = 0; i < nI; ++i) {
    e_left.push_back(kron(m.mod.e_pow(i, 1), idn));
    ke_minus.push_back(kron(m.mod.ktilde_mat(i, -1), n.mod.e_pow(i, 1)));
    ke_plus.push_back(kron(m.mod.ktilde_mat(i, +1), n.mod.e_pow(i, 1)));
    f_right.push_back(kron(idm, n.mod.f_pow(i, 1)));
    fk_plus.push_back(kron(m.mod.f_pow(i, 1), n.mod.ktilde_mat(i, +1)));
    fk_minus.push_back(kron(m.mod.f_pow(i, 1), n.mod.ktilde_mat(i, -1)));
  }

  // Action-span bases of U^-_nu on M (down) and U^+_nu on N (up), per degree.
  std::map<std::vector<int>, std::vector<SpMat>> down, up;
  std::vector<int> zero((size_t)nI, 0);
  down[zero] = {idm};
  up[zero] = {idn};

  std::map<std::vector<int>, SpMat> prev_level = th->comp;
  const int height_cap = 4096;
  int h = 1;
  for (; h < height_cap; ++h) {
    // Degrees at this height reachable from the previous level's spans.
    std::map<std::vector<int>, std::vector<SpMat>> down_next, up_next;
    std::map<std::vector<int>, std::vector<SpMat>> down_cand, up_cand;
    for (const auto& [nu, basis] : down)
      for (int i = 0; i < nI; ++i) {
        std::vector<int> nu2 = nu;
        ++nu2[(size_t)i];
        for (const auto& a : basis)
          down_cand[nu2].push_back(m.mod.f_pow(i, 1) * a);
      }
    for (const auto& [nu, basis] : up)
      for (int i = 0; i < nI; ++i) {
        std::vector<int> nu2 = nu;
        ++nu2[(size_t)i];
        for (const auto& a : basis)
          up_cand[nu2].push_back(n.mod.e_pow(i, 1) * a);
      }
    for (auto& [nu, cand] : down_cand) {
      auto b = span_basis(cand);
      if (!b.empty()) down_next[nu] = std::move(b);
    }
    for (auto& [nu, cand] : up_cand) {
      auto b = span_basis(cand);
      if (!b.empty()) up_next[nu] = std::move(b);
    }

    std::map<std::vector<int>, SpMat> level;
    bool all_zero = true;
    for (const auto& [nu, dbasis] : down_next) {
      auto itu = up_next.find(nu);
      if (itu == up_next.end()) continue;
      const auto& ubasis = itu->second;

      // Ansatz Theta_nu = sum c_ab kron(dbasis[a], ubasis[b]); one linear
      // system stacking every defining equation.
      std::vector<SpMat> pairs;
      for (const auto& da : dbasis)
        for (const auto& ub : ubasis) pairs.push_back(kron(da, ub));

      Vec rhs;
      int row_block = 0;
      const int block_sz = dt * dt;
      SpMat cols((int)(2 * nI) * block_sz, (int)pairs.size());
      for (int pidx = 0; pidx < (int)pairs.size(); ++pidx) {
        const SpMat& X = pairs[(size_t)pidx];
        row_block = 0;
        for (int i = 0; i < nI; ++i) {
          SpMat lhs_e = e_left[(size_t)i] * X - X * e_left[(size_t)i];
          SpMat lhs_f = f_right[(size_t)i] * X - X * f_right[(size_t)i];
          for (const auto& [vi, vc] : vectorize(lhs_e))
            cols.col_mut(pidx)[row_block * block_sz + vi] = vc;
          ++row_block;
          for (const auto& [vi, vc] : vectorize(lhs_f))
            cols.col_mut(pidx)[row_block * block_sz + vi] = vc;
          ++row_block;
        }
      }
      row_block = 0;
      for (int i = 0; i < nI; ++i) {
        std::vector<int> nu_prev = nu;
        --nu_prev[(size_t)i];
        bool have_prev = std::all_of(nu_prev.begin(), nu_prev.end(),
                                     [](int x) { return x >= 0; });
        SpMat prev = SpMat(dt, dt);
        if (have_prev) {
          auto itp = prev_level.find(nu_prev);
          if (itp != prev_level.end()) prev = itp->second;
        }
        SpMat rhs_e = prev * ke_minus[(size_t)i] - ke_plus[(size_t)i] * prev;
        SpMat rhs_f = prev * fk_plus[(size_t)i] - fk_minus[(size_t)i] * prev;
        for (const auto& [vi, vc] : vectorize(rhs_e))
          rhs[row_block * block_sz + vi] = vc;
        ++row_block;
        for (const auto& [vi, vc] : vectorize(rhs_f))
          rhs[row_block * block_sz + vi] = vc;
        ++row_block;
      }

      auto sol = solve(cols, rhs);
      require(sol.has_value(), Err::SINGULAR_SYSTEM,
              "quasi-R-matrix equations are inconsistent");
      SpMat theta_nu(dt, dt);
      for (const auto& [pidx, c] : *sol)
        theta_nu = theta_nu + pairs[(size_t)pidx].scaled(c);
      if (!theta_nu.is_zero()) {
        all_zero = false;
        th->comp[nu] = theta_nu;
        th->total = th->total + theta_nu;
        level[nu] = std::move(theta_nu);
      }
    }

    down = std::move(down_next);
    up = std::move(up_next);
    prev_level = std::move(level);
    if (all_zero || (down.empty() && up.empty())) break;
  }
  require(h < height_cap, Err::INTERNAL, "quasi-R-matrix did not terminate");
  th->bound = h;

  // Global verification: Theta intertwines the two coproducts, and
  // Theta bar(Theta) = 1.
  for (int i = 0; i < nI; ++i) {
    SpMat dE = e_left[(size_t)i] + ke_plus[(size_t)i];
    SpMat dE_bar = e_left[(size_t)i] + ke_minus[(size_t)i];
    SpMat dF = fk_minus[(size_t)i] + f_right[(size_t)i];
    SpMat dF_bar = fk_plus[(size_t)i] + f_right[(size_t)i];
    require(dE * th->total == th->total * dE_bar, Err::INTERNAL,
            "quasi-R-matrix fails to intertwine E actions");
    require(dF * th->total == th->total * dF_bar, Err::INTERNAL,
            "quasi-R-matrix fails to intertwine F actions");
  }
  require(th->total * th->total.bar_entrywise() == SpMat::identity(dt),
          Err::INTERNAL, "quasi-R-matrix is not inverse to its bar");

  std::unique_lock lock(theta_cache_mutex);
  theta_cache().emplace(key, th);
  return theta_cache()[key];
}

SpMat diamond_basis(const BasedModule& m, const BasedModule& n,
                    const ThetaTrunc& th) {
  SpMat p = th.total * kron(m.psi_mat, n.psi_mat);
  require(p * p.bar_entrywise() == SpMat::identity(p.rows()), Err::INTERNAL,
          "tensor bar operator is not an involution");
  // Corrections strictly lower the left-factor weight; key by its height.
  std::vector<mpq_class> key((size_t)(m.dim() * n.dim()));
  for (int a = 0; a < m.dim(); ++a) {
    mpq_class ha = m.mod.datum().height(m.mod.weight(a));
    for (int b = 0; b < n.dim(); ++b)
      key[(size_t)tensor_index(a, b, n.dim())] = ha;
  }
  return bar_triangular_solve(p, key);
}

BasedModule tensor_based(const BasedModule& m, const BasedModule& n) {
  WeightModule t = tensor_module(m.mod, n.mod);
  auto th = compute_theta(m, n);
  SpMat c = diamond_basis(m, n, *th);
  SpMat cinv = inverse(c);

  WeightModule reb(t.datum(), t.weights(), t.labels());
  for (int i = 0; i < t.datum().rank(); ++i) {
    reb.set_e(i, cinv * t.e_pow(i, 1) * c);
    reb.set_f(i, cinv * t.f_pow(i, 1) * c);
  }
  reb.finalize();

  // In the new basis psi must be the identity involution.
  SpMat p = th->total * kron(m.psi_mat, n.psi_mat);
  require(cinv * p * c.bar_entrywise() == SpMat::identity(t.dim()),
          Err::INTERNAL, "canonical tensor basis is not bar-invariant");

  BasedModule out;
  out.mod = std::move(reb);
  out.psi_mat = SpMat::identity(t.dim());
  out.provenance = m.provenance + "(x)" + n.provenance;
  return out;
}

}  // namespace qsym
