#include "qsym/iqsp.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "qsym/braid.hpp"
#include "qsym/klsolve.hpp"
#include "qsym/laurent.hpp"

namespace qsym {

RatFunc IParams::sigma(int i) const {
  return RatFunc(LaurentInt::monomial(sign[(size_t)i], expo[(size_t)i]));
}

RatFunc IParams::sigma_bar(int i) const {
  return RatFunc(LaurentInt::monomial(sign[(size_t)i], -expo[(size_t)i]));
}

std::string IParams::fingerprint() const {
  std::string s = "p:";
  for (size_t i = 0; i < sign.size(); ++i)
    s += std::to_string(sign[i]) + "^" + std::to_string(expo[i]) + ";";
  return s;
}

void validate_iparams(const IRootDatum& id, const IParams& p) {
  const int n = id.base().rank();
  require((int)p.sign.size() == n && (int)p.expo.size() == n,
          Err::CONFIG_INVALID, "parameter vectors must have one entry per node");
  for (int i : id.icirc())
    require(p.sign[(size_t)i] == 1 || p.sign[(size_t)i] == -1,
            Err::CONFIG_INVALID, "parameter sign must be +1 or -1");
}

IParams default_iparams(const IRootDatum& id) {
  const int n = id.base().rank();
  IParams p;
  p.sign.assign((size_t)n, 1);
  p.expo.assign((size_t)n, 0);
  for (int i : id.icirc())
    if (id.tau(i) == i) p.expo[(size_t)i] = -1;
  return p;
}

SpMat k_mu_matrix(const WeightModule& m, const Coweight& mu) {
  SpMat k(m.dim(), m.dim());
  for (int j = 0; j < m.dim(); ++j) k.set(j, j, m.k_coeff(mu, j));
  return k;
}

namespace {

// T_{w_bullet}(E_{tau i}) as a matrix: the braid operators realize the
// automorphism, so the element acts by conjugated composition.
SpMat embedded_e(int i, const WeightModule& m, const IRootDatum& id) {
  const SpMat& e = m.e_pow(id.tau(i), 1);
  const std::vector<int>& word = id.w_bullet().word;
  if (word.empty()) return e;
  SpMat tw = braid_word_matrix(m, word);
  return tw * e * inverse(tw);
}

Vec vectorize(const SpMat& m) {
  Vec v;
  for (int j = 0; j < m.cols(); ++j)
    for (const auto& [i, c] : m.col(j)) v[j * m.rows() + i] = c;
  return v;
}

std::vector<SpMat> span_basis(const std::vector<SpMat>& cand) {
  Span s;
  std::vector<SpMat> basis;
  for (const auto& m : cand)
    if (!m.is_zero() && s.insert(vectorize(m))) basis.push_back(m);
  return basis;
}

std::string module_key(const BasedModule& m) {
  std::ostringstream os;
  os << m.provenance << "#" << m.dim() << "#";
  for (int k = 0; k < m.dim(); ++k) os << w_str(m.mod.weight(k));
  return os.str();
}

std::shared_mutex upsilon_cache_mutex;
std::map<std::string, std::shared_ptr<const UpsilonTrunc>>& upsilon_cache() {
  static std::map<std::string, std::shared_ptr<const UpsilonTrunc>> c;
  return c;
}

}  // namespace

SpMat bi_action(int i, const WeightModule& m, const IRootDatum& id,
                const IParams& p) {
  require(i >= 0 && i < id.base().rank(), Err::UNKNOWN_INDEX,
          "generator index out of range");
  validate_iparams(id, p);
  require(m.datum().fingerprint() == id.base().fingerprint(),
          Err::CONFIG_INVALID, "module is not over the given root datum");
  if (id.is_black(i)) return m.f_pow(i, 1);
  SpMat tail = embedded_e(i, m, id) * m.ktilde_mat(i, -1);
  return m.f_pow(i, 1) + tail.scaled(p.sigma(i));
}

std::map<std::string, RatFunc> counit_on_igenerators(const IRootDatum& id) {
  std::map<std::string, RatFunc> eps;
  eps["1"] = RatFunc(LaurentInt(1));
  for (int i = 0; i < id.base().rank(); ++i) {
    eps["B" + std::to_string(i)] = RatFunc();
    if (id.is_black(i)) eps["E" + std::to_string(i)] = RatFunc();
  }
  for (const auto& mu : id.y_fixed_basis())
    eps["K" + w_str(mu)] = RatFunc(LaurentInt(1));
  return eps;
}

std::shared_ptr<const UpsilonTrunc> compute_upsilon(const BasedModule& m,
                                                    const IRootDatum& id,
                                                    const IParams& p,
                                                    int bound) {
  const RootDatum& rd = id.base();
  validate_iparams(id, p);
  require(m.mod.datum().fingerprint() == rd.fingerprint(), Err::CONFIG_INVALID,
          "module is not over the given root datum");
  const int nI = rd.rank();
  const int d = m.dim();

  // Heights of graded components are bounded by the weight spread of m.
  mpq_class lo = rd.height(m.mod.weight(0)), hi = lo;
  for (int k = 1; k < d; ++k) {
    mpq_class h = rd.height(m.mod.weight(k));
    lo = std::min(lo, h);
    hi = std::max(hi, h);
  }
  mpq_class spread = hi - lo;
  mpz_class spread_f;
  mpz_fdiv_q(spread_f.get_mpz_t(), spread.get_num().get_mpz_t(),
             spread.get_den().get_mpz_t());
  const int needed = (int)spread_f.get_si();
  if (bound < 0)
    bound = needed;
  else
    require(bound >= needed, Err::BOUND_TOO_SMALL,
            "truncation bound below the weight spread of the module");

  const std::string key = id.fingerprint() + p.fingerprint() + module_key(m) +
                          ":" + std::to_string(bound);
  {
    std::shared_lock lock(upsilon_cache_mutex);
    auto it = upsilon_cache().find(key);
    if (it != upsilon_cache().end()) return it->second;
  }

  std::vector<SpMat> emb_e, ktp, ktm;
  for (int i = 0; i < nI; ++i) {
    ktp.push_back(m.mod.ktilde_mat(i, +1));
    ktm.push_back(m.mod.ktilde_mat(i, -1));
    emb_e.push_back(id.is_black(i) ? SpMat(d, d) : embedded_e(i, m.mod, id));
  }
  const auto& yfix = id.y_fixed_basis();
  auto admissible = [&](const std::vector<int>& nu) {
    for (const auto& mu : yfix) {
      long s = 0;
      for (int i = 0; i < nI; ++i) s += nu[(size_t)i] * rd.pair(mu, rd.alpha(i));
      if (s != 0) return false;
    }
    return true;
  };

  auto th = std::make_shared<UpsilonTrunc>();
  th->bound = bound;
  const std::vector<int> zero((size_t)nI, 0);
  th->comp[zero] = SpMat::identity(d);

  auto component = [&](const std::vector<int>& nu) {
    auto it = th->comp.find(nu);
    return it == th->comp.end() ? SpMat(d, d) : it->second;
  };
  // Right-hand side of the degree-nu equation for generator i.
  auto rhs_mat = [&](const std::vector<int>& nu, int i) {
    if (id.is_black(i)) return SpMat(d, d);
    std::vector<int> nu2 = nu;
    --nu2[(size_t)i];
    --nu2[(size_t)id.tau(i)];
    if (nu2[(size_t)i] < 0 || nu2[(size_t)id.tau(i)] < 0) return SpMat(d, d);
    SpMat upsilon = component(nu2);
    if (upsilon.is_zero()) return SpMat(d, d);
    SpMat lower = upsilon * (emb_e[(size_t)i] * ktp[(size_t)i]);
    SpMat raise = (emb_e[(size_t)i] * ktm[(size_t)i]) * upsilon;
    return lower.scaled(p.sigma_bar(i)) - raise.scaled(p.sigma(i));
  };

  std::map<std::vector<int>, std::vector<SpMat>> prev_spans;
  prev_spans[zero] = {SpMat::identity(d)};
  for (int h = 1; h <= bound; ++h) {
    std::map<std::vector<int>, std::vector<SpMat>> cand;
    for (const auto& [nu, basis] : prev_spans)
      for (int i = 0; i < nI; ++i) {
        std::vector<int> nu2 = nu;
        ++nu2[(size_t)i];
        for (const auto& a : basis) cand[nu2].push_back(m.mod.e_pow(i, 1) * a);
      }
    std::map<std::vector<int>, std::vector<SpMat>> spans;
    for (auto& [nu, c] : cand) {
      auto b = span_basis(c);
      if (!b.empty()) spans[nu] = std::move(b);
    }
    if (spans.empty()) break;

    for (const auto& [nu, basis] : spans) {
      std::vector<SpMat> rhs((size_t)nI);
      bool rhs_zero = true;
      for (int i = 0; i < nI; ++i) {
        rhs[(size_t)i] = rhs_mat(nu, i);
        rhs_zero = rhs_zero && rhs[(size_t)i].is_zero();
      }
      if (!admissible(nu)) {
        require(rhs_zero, Err::SINGULAR_SYSTEM,
                "parameters admit no intertwiner: a degree excluded by the "
                "fixed lattice has a nonzero source");
        continue;
      }
      // Unknown X = sum x_b R_b over the action-span basis; equations
      // [F_i, X] = rhs_i for every i, plus [E_i, X] = 0 at painted nodes.
      const int rows_per = d * d;
      const int neq = nI + (int)id.ibullet().size();
      SpMat sys(neq * rows_per, (int)basis.size());
      Vec target;
      for (size_t b = 0; b < basis.size(); ++b) {
        int block = 0;
        for (int i = 0; i < nI; ++i, ++block) {
          SpMat com = m.mod.f_pow(i, 1) * basis[b] - basis[b] * m.mod.f_pow(i, 1);
          for (const auto& [r, c] : vectorize(com))
            sys.add_to(block * rows_per + (int)r, (int)b, c);
        }
        for (int i : id.ibullet()) {
          SpMat com = m.mod.e_pow(i, 1) * basis[b] - basis[b] * m.mod.e_pow(i, 1);
          for (const auto& [r, c] : vectorize(com))
            sys.add_to(block * rows_per + (int)r, (int)b, c);
          ++block;
        }
      }
      for (int i = 0; i < nI; ++i)
        for (const auto& [r, c] : vectorize(rhs[(size_t)i]))
          target[i * rows_per + (int)r] = c;
      auto sol = solve(sys, target);
      require(sol.has_value(), Err::SINGULAR_SYSTEM,
              "parameters admit no intertwiner: the graded equations are "
              "inconsistent at height " + std::to_string(h));
      SpMat x(d, d);
      for (const auto& [b, c] : *sol)
        x = x + basis[(size_t)b].scaled(c);
      if (!x.is_zero()) th->comp[nu] = std::move(x);
    }
    prev_spans = std::move(spans);
  }

  th->total = SpMat(d, d);
  for (const auto& [nu, x] : th->comp) th->total = th->total + x;

  // Verification: the defining identity on every generator, commutation
  // with the fixed torus, and involutivity of the twisted bar map.
  for (int i = 0; i < nI; ++i) {
    if (id.is_black(i)) {
      require(m.mod.f_pow(i, 1) * th->total == th->total * m.mod.f_pow(i, 1) &&
                  m.mod.e_pow(i, 1) * th->total == th->total * m.mod.e_pow(i, 1),
              Err::SINGULAR_SYSTEM,
              "intertwiner fails to commute with a painted-node generator");
      continue;
    }
    SpMat b = m.mod.f_pow(i, 1) +
              (emb_e[(size_t)i] * ktm[(size_t)i]).scaled(p.sigma(i));
    SpMat b_bar = m.mod.f_pow(i, 1) +
                  (emb_e[(size_t)i] * ktp[(size_t)i]).scaled(p.sigma_bar(i));
    require(b * th->total == th->total * b_bar, Err::SINGULAR_SYSTEM,
            "intertwiner fails its defining identity at node " +
                std::to_string(i));
  }
  for (const auto& mu : yfix) {
    SpMat k = k_mu_matrix(m.mod, mu);
    require(k * th->total == th->total * k, Err::SINGULAR_SYSTEM,
            "intertwiner fails to commute with the fixed torus");
  }
  SpMat psi_i = th->total * m.psi_mat;
  require(psi_i * psi_i.bar_entrywise() == SpMat::identity(d),
          Err::SINGULAR_SYSTEM, "twisted bar map is not an involution");

  std::unique_lock lock(upsilon_cache_mutex);
  auto [it, inserted] = upsilon_cache().emplace(key, th);
  return inserted ? th : it->second;
}

SpMat psi_i_matrix(const BasedModule& m, const IRootDatum& id,
                   const IParams& p) {
  return compute_upsilon(m, id, p)->total * m.psi_mat;
}

IBasisData icanonical_basis(const BasedModule& m, const IRootDatum& id,
                            const IParams& p) {
  const RootDatum& rd = id.base();
  const int d = m.dim();
  SpMat psi = psi_i_matrix(m, id, p);

  std::vector<mpq_class> key((size_t)d);
  for (int k = 0; k < d; ++k) key[(size_t)k] = -rd.height(m.mod.weight(k));
  SpMat t = bar_triangular_solve(psi, key);

  // The fixed basis is unique, so re-running under the reversed coordinate
  // order must reproduce it.
  SpMat perm(d, d);
  const RatFunc one(LaurentInt(1));
  for (int k = 0; k < d; ++k) perm.set(d - 1 - k, k, one);
  std::vector<mpq_class> rkey((size_t)d);
  for (int k = 0; k < d; ++k) rkey[(size_t)(d - 1 - k)] = key[(size_t)k];
  SpMat t2 = bar_triangular_solve(perm * psi * perm.transpose(), rkey);
  require(perm.transpose() * t2 * perm == t, Err::INTERNAL,
          "triangular solve depends on the processing order");

  require(psi * t.bar_entrywise() == t, Err::INTERNAL,
          "solved basis is not fixed by the twisted bar map");
  for (int j = 0; j < d; ++j)
    for (const auto& [r, c] : t.col(j)) {
      if (r == j) {
        require(c == one, Err::INTERNAL, "transition matrix is not unitriangular");
        continue;
      }
      require(c.lattice_member(LatticeId::Q_NEG), Err::LATTICE_VIOLATION,
              "correction outside q^{-1}Z[q^{-1}]: " + c.str());
      require(rd.height(m.mod.weight(r)) > rd.height(m.mod.weight(j)),
              Err::INTERNAL, "correction at a weight that is not higher");
    }
  SpMat tinv = inverse(t);
  for (int j = 0; j < d; ++j)
    for (const auto& [r, c] : tinv.col(j)) {
      (void)r;
      require(c.lattice_member(LatticeId::INT_LAURENT) &&
                  c.lattice_member(LatticeId::A_INFINITY),
              Err::LATTICE_VIOLATION,
              "inverse transition leaves the integral lattices");
    }

  IBasisData out;
  out.host = m;
  out.params = p;
  out.t = std::move(t);
  out.tinv = std::move(tinv);
  out.psi = std::move(psi);
  return out;
}

Span augmentation_span(const BasedModule& m, const IRootDatum& id,
                       const IParams& p) {
  const int d = m.dim();
  std::vector<SpMat> aug, gen;
  for (int i : id.icirc()) {
    aug.push_back(bi_action(i, m.mod, id, p));
    gen.push_back(aug.back());
  }
  for (int i : id.ibullet()) {
    aug.push_back(m.mod.e_pow(i, 1));
    aug.push_back(m.mod.f_pow(i, 1));
    gen.push_back(m.mod.e_pow(i, 1));
    gen.push_back(m.mod.f_pow(i, 1));
  }
  for (const auto& mu : id.y_fixed_basis()) {
    SpMat k = k_mu_matrix(m.mod, mu);
    aug.push_back(k - SpMat::identity(d));
    gen.push_back(k);
  }

  Span s;
  std::deque<Vec> queue;
  const RatFunc one(LaurentInt(1));
  for (int k = 0; k < d; ++k) {
    Vec e;
    e[k] = one;
    for (const auto& a : aug) {
      Vec v = a.apply(e);
      if (!vec_is_zero(v) && s.insert(v)) queue.push_back(std::move(v));
    }
  }
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gen) {
      Vec u = g.apply(v);
      if (!vec_is_zero(u) && s.insert(u)) queue.push_back(std::move(u));
    }
  }
  return s;
}

int hom_to_trivial_dim(const Weight& la, const IRootDatum& id,
                       const IParams& p) {
  BasedModule v = build_irreducible(id.base(), la);
  return v.dim() - augmentation_span(v, id, p).dim();
}

bool check_based_imorphism(const SpMat& f, const IBasisData& src,
                           const IBasisData& dst, const IRootDatum& id) {
  require(f.rows() == dst.host.dim() && f.cols() == src.host.dim(),
          Err::CONFIG_INVALID, "map shape does not match the modules");
  require(src.params.fingerprint() == dst.params.fingerprint(),
          Err::CONFIG_INVALID, "source and target use different parameters");
  const IParams& p = src.params;

  for (int i = 0; i < id.base().rank(); ++i) {
    if (id.is_black(i)) {
      require(f * src.host.mod.e_pow(i, 1) == dst.host.mod.e_pow(i, 1) * f &&
                  f * src.host.mod.f_pow(i, 1) == dst.host.mod.f_pow(i, 1) * f,
              Err::NOT_EQUIVARIANT,
              "map fails to commute with a painted-node generator");
      continue;
    }
    require(f * bi_action(i, src.host.mod, id, p) ==
                bi_action(i, dst.host.mod, id, p) * f,
            Err::NOT_EQUIVARIANT,
            "map fails to commute with an embedded generator");
  }
  for (const auto& mu : id.y_fixed_basis())
    require(f * k_mu_matrix(src.host.mod, mu) ==
                k_mu_matrix(dst.host.mod, mu) * f,
            Err::NOT_EQUIVARIANT, "map fails to commute with the fixed torus");

  SpMat g = dst.tinv * (f * src.t);
  for (int j = 0; j < g.cols(); ++j) {
    int units = 0;
    for (const auto& [r, c] : g.col(j)) {
      (void)r;
      if (!c.lattice_member(LatticeId::A_INFINITY)) return false;
      mpq_class v = c.value_at_infinity();
      if (v == 0) continue;
      if (v != 1 || ++units > 1) return false;
    }
  }
  return true;
}

SpMat trivial_functional(const BasedModule& v, const Weight& la,
                         const IRootDatum& id, const IParams& p) {
  Span w = augmentation_span(v, id, p);
  const int codim = v.dim() - w.dim();
  require(codim <= 1, Err::INTERNAL,
          "augmentation span violates the Hom dichotomy");
  if (codim == 0)
    fail(Err::NO_MORPHISM, "the augmentation span is the whole module");

  SpMat wm(v.dim(), w.dim());
  {
    int j = 0;
    for (const auto& g : w.basis()) wm.col_mut(j++) = g;
  }
  auto ker = kernel(wm.transpose());
  require((int)ker.size() == 1, Err::INTERNAL,
          "coinvariant functional is not one-dimensional");
  Vec phi = ker[0];
  const int hw = highest_weight_index(v, la);
  RatFunc c = vec_get(phi, hw);
  if (c == RatFunc())
    fail(Err::NO_MORPHISM,
         "no morphism normalizes the highest weight vector");
  RatFunc cinv(c.den(), c.num());
  SpMat f(1, v.dim());
  for (const auto& [k, x] : phi) f.set(0, (int)k, x * cinv);
  return f;
}

bool validate_parameters(const Weight& la, const IRootDatum& id,
                         const IParams& p) {
  const RootDatum& rd = id.base();
  validate_iparams(id, p);
  require(rd.dominant(la), Err::NOT_DOMINANT,
          "spherical weights are dominant");
  require(id.is_spherical(la), Err::NOT_SPHERICAL,
          "weight is not spherical for this datum");

  BasedModule v = build_irreducible(rd, la);
  BasedModule v0 = build_irreducible(rd, Weight((size_t)rd.dim_x(), 0));
  SpMat f = trivial_functional(v, la, id, p);

  try {
    IBasisData src = icanonical_basis(v, id, p);
    IBasisData dst = icanonical_basis(v0, id, p);
    return check_based_imorphism(f, src, dst, id);
  } catch (const Error& e) {
    if (e.code() == Err::SINGULAR_SYSTEM ||
        e.code() == Err::TRIANGULARITY_FAILURE ||
        e.code() == Err::LATTICE_VIOLATION)
      return false;
    throw;
  }
}

IParams sweep_parameters(const IRootDatum& id,
                         const std::vector<Weight>& test_weights) {
  const int n = id.base().rank();
  const auto& circ = id.icirc();
  std::vector<std::pair<int, int>> cand;  // (sign, exponent), preferred first
  for (int e : {0, -1, 1, -2, 2, -3, 3})
    for (int s : {1, -1}) cand.emplace_back(s, e);

  std::vector<size_t> pick(circ.size(), 0);
  for (;;) {
    IParams p;
    p.sign.assign((size_t)n, 1);
    p.expo.assign((size_t)n, 0);
    for (size_t j = 0; j < circ.size(); ++j) {
      p.sign[(size_t)circ[j]] = cand[pick[j]].first;
      p.expo[(size_t)circ[j]] = cand[pick[j]].second;
    }
    bool ok = true;
    for (const auto& la : test_weights) {
      try {
        ok = validate_parameters(la, id, p);
      } catch (const Error& e) {
        if (e.code() != Err::NO_MORPHISM) throw;
        ok = false;
      }
      if (!ok) break;
    }
    if (ok) return p;

    size_t j = pick.size();
    while (j > 0 && ++pick[j - 1] == cand.size()) pick[--j] = 0;
    if (j == 0) break;
  }
  fail(Err::NOT_BASED, "parameter sweep found no based choice");
}

}  // namespace qsym
