#include "qsym/module.hpp"

#include <sstream>

#include "qsym/laurent.hpp"

namespace qsym {

WeightModule::WeightModule(RootDatum rd, std::vector<Weight> wts,
                           std::vector<std::string> labels)
    : rd_(std::make_shared<RootDatum>(std::move(rd))),
      wt_(std::move(wts)),
      label_(std::move(labels)) {
  require(wt_.size() == label_.size(), Err::INTERNAL,
          "weights/labels size mismatch");
  for (const auto& w : wt_)
    require((int)w.size() == rd_->dim_x(), Err::INTERNAL,
            "weight has wrong dimension");
  const int n = rd_->rank();
  const int d = dim();
  epow_.assign((size_t)n, {SpMat::identity(d)});
  fpow_.assign((size_t)n, {SpMat::identity(d)});
}

void WeightModule::set_e(int i, SpMat m) {
  require(i >= 0 && i < rd_->rank(), Err::UNKNOWN_GENERATOR, "generator index");
  require(m.rows() == dim() && m.cols() == dim(), Err::INTERNAL,
          "operator matrix has wrong shape");
  epow_[(size_t)i] = {SpMat::identity(dim()), std::move(m)};
}

void WeightModule::set_f(int i, SpMat m) {
  require(i >= 0 && i < rd_->rank(), Err::UNKNOWN_GENERATOR, "generator index");
  require(m.rows() == dim() && m.cols() == dim(), Err::INTERNAL,
          "operator matrix has wrong shape");
  fpow_[(size_t)i] = {SpMat::identity(dim()), std::move(m)};
}

namespace {

// Extend a divided-power family X^{(0)}, X^{(1)}, ... until it vanishes:
// X^{(k)} = X^{(k-1)} X / [k].
void extend_divided_powers(std::vector<SpMat>& pows, long eps) {
  if (pows.size() < 2) return;              // no single-power matrix set
  if (pows.back().is_zero()) return;
  const SpMat x1 = pows[1];  // copy: push_back below reallocates the vector
  for (int k = (int)pows.size();; ++k) {
    RatFunc inv_qk = RatFunc(LaurentInt(1), qint(k, eps));
    SpMat next = (pows.back() * x1).scaled(inv_qk);
    pows.push_back(next);
    if (next.is_zero()) break;
    require(k < 4096, Err::INTERNAL, "generator is not nilpotent");
  }
}

}  // namespace

void WeightModule::finalize() {
  verify_relations();
  depth_ = 0;
  for (int i = 0; i < rd_->rank(); ++i) {
    extend_divided_powers(epow_[(size_t)i], rd_->eps(i));
    extend_divided_powers(fpow_[(size_t)i], rd_->eps(i));
    // Each family ends with its first vanishing power, so the largest
    // nonzero divided power sits two before the end.
    depth_ = std::max(depth_, (int)epow_[(size_t)i].size() - 2);
    depth_ = std::max(depth_, (int)fpow_[(size_t)i].size() - 2);
  }
}

const SpMat& WeightModule::e_pow(int i, int n) const {
  require(i >= 0 && i < rd_->rank(), Err::UNKNOWN_GENERATOR, "generator index");
  require(n >= 0, Err::UNKNOWN_GENERATOR, "negative divided power");
  const auto& p = epow_[(size_t)i];
  require(p.size() >= 2, Err::INTERNAL, "E operator was never assigned");
  if ((size_t)n >= p.size()) return p.back();  // zero matrix
  return p[(size_t)n];
}

const SpMat& WeightModule::f_pow(int i, int n) const {
  require(i >= 0 && i < rd_->rank(), Err::UNKNOWN_GENERATOR, "generator index");
  require(n >= 0, Err::UNKNOWN_GENERATOR, "negative divided power");
  const auto& p = fpow_[(size_t)i];
  require(p.size() >= 2, Err::INTERNAL, "F operator was never assigned");
  if ((size_t)n >= p.size()) return p.back();
  return p[(size_t)n];
}

RatFunc WeightModule::k_coeff(const Coweight& mu, int k) const {
  return RatFunc::q_power(rd_->pair(mu, wt_[(size_t)k]));
}

RatFunc WeightModule::ktilde_coeff(int i, int k, int sign) const {
  long e = rd_->eps(i) * rd_->pair_coroot(i, wt_[(size_t)k]);
  return RatFunc::q_power(sign >= 0 ? e : -e);
}

Vec WeightModule::apply_k(const Coweight& mu, const Vec& v) const {
  Vec r;
  for (const auto& [k, c] : v) r[k] = c * k_coeff(mu, k);
  return r;
}

Vec WeightModule::apply_ktilde(int i, int sign, const Vec& v) const {
  Vec r;
  for (const auto& [k, c] : v) r[k] = c * ktilde_coeff(i, k, sign);
  return r;
}

SpMat WeightModule::ktilde_mat(int i, int sign) const {
  SpMat m(dim(), dim());
  for (int k = 0; k < dim(); ++k) m.set(k, k, ktilde_coeff(i, k, sign));
  return m;
}

void WeightModule::verify_relations() const {
  const int n = rd_->rank();
  for (int i = 0; i < n; ++i) {
    // Weight homogeneity: E_i raises by alpha_i, F_i lowers by alpha_i.
    for (int sgn = 0; sgn < 2; ++sgn) {
      const auto& fam = sgn == 0 ? epow_[(size_t)i] : fpow_[(size_t)i];
      if (fam.size() < 2) continue;
      const SpMat& m = fam[1];
      Weight shift = sgn == 0 ? rd_->alpha(i) : w_neg(rd_->alpha(i));
      for (int j = 0; j < dim(); ++j)
        for (const auto& [r, c] : m.col(j)) {
          (void)c;
          require(wt_[(size_t)r] == w_add(wt_[(size_t)j], shift), Err::INTERNAL,
                  "operator is not weight-homogeneous");
        }
    }
  }
  // [E_i, F_j] = delta_ij (Ktilde_i - Ktilde_i^{-1}) / (q_i - q_i^{-1}),
  // and the right side acts on a weight vector as [<alpha_i^vee, wt>]_{q_i}.
  for (int i = 0; i < n; ++i) {
    if (epow_[(size_t)i].size() < 2) continue;
    for (int j = 0; j < n; ++j) {
      if (fpow_[(size_t)j].size() < 2) continue;
      SpMat comm = epow_[(size_t)i][1] * fpow_[(size_t)j][1] -
                   fpow_[(size_t)j][1] * epow_[(size_t)i][1];
      SpMat expect(dim(), dim());
      if (i == j)
        for (int k = 0; k < dim(); ++k) {
          long h = rd_->pair_coroot(i, wt_[(size_t)k]);
          LaurentInt v = qint(h, rd_->eps(i));
          if (!v.is_zero()) expect.set(k, k, RatFunc(v));
        }
      require(comm == expect, Err::INTERNAL,
              "commutation relation [E_i, F_j] fails");
    }
  }
}

Vec act_word(const WeightModule& m, const std::vector<GenPower>& word, Vec v) {
  for (const auto& g : word) {
    switch (g.kind) {
      case GenPower::E:
        v = m.e_pow(g.i, g.n).apply(v);
        break;
      case GenPower::F:
        v = m.f_pow(g.i, g.n).apply(v);
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

int highest_weight_index(const BasedModule& m, const Weight& la) {
  int found = -1;
  for (int k = 0; k < m.dim(); ++k)
    if (m.mod.weight(k) == la) {
      require(found < 0, Err::INTERNAL, "highest weight space not a line");
      found = k;
    }
  require(found >= 0, Err::INTERNAL, "highest weight vector not found");
  return found;
}

}  // namespace qsym
