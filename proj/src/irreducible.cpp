#include <mutex>
#include <sstream>

#include "qsym/cells.hpp"
#include "qsym/laurent.hpp"
#include "qsym/module.hpp"
#include "qsym/tensor.hpp"

namespace qsym {

namespace {

BasedModule finish(WeightModule w, std::string provenance) {
  w.finalize();
  BasedModule out;
  out.psi_mat = SpMat::identity(w.dim());
  out.mod = std::move(w);
  out.provenance = std::move(provenance);
  return out;
}

BasedModule trivial_module(const RootDatum& rd, const Weight& la) {
  WeightModule w(rd, {la}, {"v0"});
  for (int i = 0; i < rd.rank(); ++i) {
    w.set_e(i, SpMat(1, 1));
    w.set_f(i, SpMat(1, 1));
  }
  return finish(std::move(w), "V" + w_str(la));
}

// Product of commuting rank-one constructions: valid whenever the Cartan
// matrix is diagonal.  Basis digits k_i run over 0..m_i with k_0 major.
BasedModule product_sl2(const RootDatum& rd, const Weight& la) {
  const int n = rd.rank();
  std::vector<long> m((size_t)n);
  long total = 1;
  for (int i = 0; i < n; ++i) {
    m[(size_t)i] = rd.pair_coroot(i, la);
    total *= m[(size_t)i] + 1;
  }
  require(total <= 2'000'000, Err::INTERNAL, "module dimension too large");

  std::vector<long> stride((size_t)n, 1);
  for (int i = n - 2; i >= 0; --i)
    stride[(size_t)i] = stride[(size_t)i + 1] * (m[(size_t)i + 1] + 1);

  std::vector<Weight> wts;
  std::vector<std::string> labels;
  for (long t = 0; t < total; ++t) {
    Weight wt = la;
    std::ostringstream lab;
    lab << (n == 1 ? "v" : "v(");
    for (int i = 0; i < n; ++i) {
      long ki = (t / stride[(size_t)i]) % (m[(size_t)i] + 1);
      wt = w_sub(wt, w_scaled(rd.alpha(i), ki));
      lab << ki;
      if (n > 1) lab << (i + 1 < n ? "," : ")");
    }
    wts.push_back(wt);
    labels.push_back(lab.str());
  }

  WeightModule w(rd, std::move(wts), std::move(labels));
  for (int i = 0; i < n; ++i) {
    SpMat e((int)total, (int)total), f((int)total, (int)total);
    for (long t = 0; t < total; ++t) {
      long ki = (t / stride[(size_t)i]) % (m[(size_t)i] + 1);
      if (ki > 0)
        e.set((int)(t - stride[(size_t)i]), (int)t,
              RatFunc(qint(m[(size_t)i] - ki + 1, rd.eps(i))));
      if (ki < m[(size_t)i])
        f.set((int)(t + stride[(size_t)i]), (int)t,
              RatFunc(qint(ki + 1, rd.eps(i))));
    }
    w.set_e(i, std::move(e));
    w.set_f(i, std::move(f));
  }
  return finish(std::move(w), "V" + w_str(la));
}

// Fundamental weights in X coordinates (free coordinates set to zero);
// integral solution required.
std::vector<Weight> fundamental_weights(const RootDatum& rd) {
  const int n = rd.rank(), dx = rd.dim_x();
  std::vector<Weight> omega;
  for (int i = 0; i < n; ++i) {
    // Solve <alpha_j^vee, x> = delta_ij by exact Gaussian elimination.
    std::vector<std::vector<mpq_class>> a((size_t)n,
                                          std::vector<mpq_class>((size_t)dx + 1));
    for (int j = 0; j < n; ++j) {
      Weight e((size_t)dx, 0);
      for (int x = 0; x < dx; ++x) {
        e[(size_t)x] = 1;
        a[(size_t)j][(size_t)x] = rd.pair_coroot(j, e);
        e[(size_t)x] = 0;
      }
      a[(size_t)j][(size_t)dx] = (j == i) ? 1 : 0;
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int ccol = 0; ccol < dx && row < n; ++ccol) {
      int p = -1;
      for (int r = row; r < n; ++r)
        if (a[(size_t)r][(size_t)ccol] != 0) {
          p = r;
          break;
        }
      if (p < 0) continue;
      std::swap(a[(size_t)row], a[(size_t)p]);
      mpq_class d = a[(size_t)row][(size_t)ccol];
      for (int x = ccol; x <= dx; ++x) a[(size_t)row][(size_t)x] /= d;
      for (int r = 0; r < n; ++r) {
        if (r == row || a[(size_t)r][(size_t)ccol] == 0) continue;
        mpq_class f = a[(size_t)r][(size_t)ccol];
        for (int x = ccol; x <= dx; ++x)
          a[(size_t)r][(size_t)x] -= f * a[(size_t)row][(size_t)x];
      }
      pivot_col.push_back(ccol);
      ++row;
    }
    for (int r = row; r < n; ++r)
      require(a[(size_t)r][(size_t)dx] == 0, Err::TIER_UNSUPPORTED,
              "no fundamental weights in this character lattice");
    Weight om((size_t)dx, 0);
    for (int r = 0; r < row; ++r) {
      mpq_class v = a[(size_t)r][(size_t)dx];
      require(v.get_den() == 1, Err::TIER_UNSUPPORTED,
              "fundamental weight is not integral in this lattice");
      long lv = mpz_get_si(v.get_num().get_mpz_t());
      om[(size_t)pivot_col[(size_t)r]] = lv;
    }
    omega.push_back(std::move(om));
  }
  return omega;
}

// Minuscule fundamental module for a rank-two simply-laced datum:
// weights om, om - alpha_i, om - alpha_i - alpha_j, all operators 0 or 1.
BasedModule minuscule_fundamental(const RootDatum& rd, const Weight& om, int i) {
  const int j = 1 - i;
  std::vector<Weight> wts = {om, w_sub(om, rd.alpha(i)),
                             w_sub(w_sub(om, rd.alpha(i)), rd.alpha(j))};
  WeightModule w(rd, std::move(wts), {"u0", "u1", "u2"});
  const RatFunc one(LaurentInt(1));
  SpMat ei(3, 3), fi(3, 3), ej(3, 3), fj(3, 3);
  ei.set(0, 1, one);
  fi.set(1, 0, one);
  ej.set(1, 2, one);
  fj.set(2, 1, one);
  w.set_e(i, std::move(ei));
  w.set_f(i, std::move(fi));
  w.set_e(j, std::move(ej));
  w.set_f(j, std::move(fj));
  return finish(std::move(w), "V" + w_str(om));
}

// Shift every weight by a character kappa orthogonal to all coroots.
BasedModule character_shift(const BasedModule& m, const Weight& kappa,
                            std::string provenance) {
  std::vector<Weight> wts;
  for (int k = 0; k < m.dim(); ++k)
    wts.push_back(w_add(m.mod.weight(k), kappa));
  WeightModule w(m.mod.datum(), std::move(wts), m.mod.labels());
  for (int i = 0; i < m.mod.datum().rank(); ++i) {
    w.set_e(i, m.mod.e_pow(i, 1));
    w.set_f(i, m.mod.f_pow(i, 1));
  }
  w.finalize();
  BasedModule out;
  out.mod = std::move(w);
  out.psi_mat = m.psi_mat;
  out.provenance = std::move(provenance);
  return out;
}

BasedModule build_irreducible_uncached(const RootDatum& rd, const Weight& la) {
  require((int)la.size() == rd.dim_x(), Err::CONFIG_INVALID,
          "weight has the wrong number of coordinates");
  require(rd.dominant(la), Err::NOT_DOMINANT,
          "irreducible modules need a dominant highest weight");

  bool diagonal = true;
  for (int i = 0; i < rd.rank(); ++i)
    for (int j = 0; j < rd.rank(); ++j)
      if (i != j && rd.cartan()[(size_t)i][(size_t)j] != 0) diagonal = false;

  BasedModule out;
  if (rd.rank() == 1 || diagonal) {
    out = product_sl2(rd, la);
  } else if (rd.rank() == 2 && rd.cartan()[0][1] == -1 &&
             rd.cartan()[1][0] == -1) {
    auto omega = fundamental_weights(rd);
    std::vector<long> c = {rd.pair_coroot(0, la), rd.pair_coroot(1, la)};
    Weight la_prime((size_t)rd.dim_x(), 0);
    for (int i = 0; i < 2; ++i)
      la_prime = w_add(la_prime, w_scaled(omega[(size_t)i], c[(size_t)i]));
    Weight kappa = w_sub(la, la_prime);

    if (c[0] == 0 && c[1] == 0) {
      out = trivial_module(rd, la_prime);
    } else {
      std::optional<BasedModule> acc;
      for (int i = 0; i < 2; ++i)
        for (long rep = 0; rep < c[(size_t)i]; ++rep) {
          BasedModule f = minuscule_fundamental(rd, omega[(size_t)i], i);
          acc = acc ? top_cell(tensor_based(*acc, f)) : std::move(f);
        }
      out = std::move(*acc);
    }
    if (!w_is_zero(kappa))
      out = character_shift(out, kappa, "V" + w_str(la));
  } else {
    fail(Err::TIER_UNSUPPORTED,
         "irreducible construction covers rank-one products and rank-two "
         "simply-laced data only");
  }

  // Independent checks: dimension and full weight multiset.
  require(out.dim() == rd.weyl_dim(la), Err::INTERNAL,
          "constructed module has the wrong dimension");
  std::map<Weight, mpz_class> mult;
  for (int k = 0; k < out.dim(); ++k) mult[out.mod.weight(k)] += 1;
  require(mult == rd.weight_multiplicities(la), Err::INTERNAL,
          "constructed module has the wrong character");
  return out;
}

std::mutex irr_cache_mutex;
std::map<std::string, BasedModule>& irr_cache() {
  static std::map<std::string, BasedModule> c;
  return c;
}

}  // namespace

BasedModule build_irreducible(const RootDatum& rd, const Weight& la) {
  const std::string key = rd.fingerprint() + "|" + w_str(la);
  {
    std::lock_guard lock(irr_cache_mutex);
    auto it = irr_cache().find(key);
    if (it != irr_cache().end()) return it->second;
  }
  BasedModule m = build_irreducible_uncached(rd, la);
  std::lock_guard lock(irr_cache_mutex);
  return irr_cache().emplace(key, std::move(m)).first->second;
}

}  // namespace qsym
