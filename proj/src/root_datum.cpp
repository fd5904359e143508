#include "qsym/root_datum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qsym {

// --- small vector/matrix helpers --------------------------------------------

Weight w_add(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Weight w_sub(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Weight w_neg(const Weight& a) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Weight w_scaled(const Weight& a, long k) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

bool w_is_zero(const Weight& a) {
  for (long x : a)
    if (x != 0) return false;
  return true;
}

std::string w_str(const Weight& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) os << a[i] << (i + 1 < a.size() ? "," : "");
  os << ")";
  return os.str();
}

IMat imat_identity(int n) {
  IMat m((size_t)n, std::vector<long>((size_t)n, 0));
  for (int i = 0; i < n; ++i) m[(size_t)i][(size_t)i] = 1;
  return m;
}

IMat imat_mul(const IMat& a, const IMat& b) {
  size_t r = a.size(), k = b.size(), c = b[0].size();
  IMat m(r, std::vector<long>(c, 0));
  for (size_t i = 0; i < r; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < c; ++j) m[i][j] += a[i][t] * b[t][j];
    }
  return m;
}

Weight imat_apply(const IMat& m, const Weight& v) {
  Weight r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[(size_t)j];
  return r;
}

IMat imat_neg(const IMat& m) {
  IMat r = m;
  for (auto& row : r)
    for (auto& x : row) x = -x;
  return r;
}

// Dense rational solve: columns * x = b.  Returns any solution.
static std::optional<std::vector<mpq_class>> solve_rational(
    const std::vector<std::vector<mpq_class>>& cols, const std::vector<mpq_class>& b) {
  size_t nr = b.size(), nc = cols.size();
  // augmented row-major matrix
  std::vector<std::vector<mpq_class>> m(nr, std::vector<mpq_class>(nc + 1));
  for (size_t j = 0; j < nc; ++j)
    for (size_t i = 0; i < nr; ++i) m[i][j] = cols[j][i];
  for (size_t i = 0; i < nr; ++i) m[i][nc] = b[i];
  std::vector<int> pivot_col(nr, -1);
  size_t row = 0;
  for (size_t col = 0; col < nc && row < nr; ++col) {
    size_t sel = row;
    while (sel < nr && m[sel][col] == 0) ++sel;
    if (sel == nr) continue;
    std::swap(m[sel], m[row]);
    mpq_class inv = 1 / m[row][col];
    for (size_t j = col; j <= nc; ++j) m[row][j] *= inv;
    for (size_t i = 0; i < nr; ++i) {
      if (i == row || m[i][col] == 0) continue;
      mpq_class f = m[i][col];
      for (size_t j = col; j <= nc; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col[row] = (int)col;
    ++row;
  }
  for (size_t i = row; i < nr; ++i)
    if (m[i][nc] != 0) return std::nullopt;  // inconsistent
  std::vector<mpq_class> x(nc, mpq_class(0));
  for (size_t i = 0; i < row; ++i) {
    // free variables (non-pivot columns) are left at zero
    mpq_class v = m[i][nc];
    for (size_t j = (size_t)pivot_col[i] + 1; j < nc; ++j) v -= m[i][j] * x[j];
    x[(size_t)pivot_col[i]] = v;
  }
  return x;
}

// --- integer column HNF with transformation ---------------------------------

namespace {

struct HnfResult {
  std::vector<std::vector<mpz_class>> h;  // columns, echelon by pivot row
  std::vector<std::vector<mpz_class>> u;  // columns of the unimodular transform
};

HnfResult column_hnf(std::vector<std::vector<mpz_class>> cols, size_t nrows) {
  size_t nc = cols.size();
  std::vector<std::vector<mpz_class>> u(nc, std::vector<mpz_class>(nc, 0));
  for (size_t j = 0; j < nc; ++j) u[j][j] = 1;
  size_t k = 0;
  for (size_t row = 0; row < nrows && k < nc; ++row) {
    // eliminate across columns k.. using gcd steps in this row
    while (true) {
      size_t best = nc;
      for (size_t j = k; j < nc; ++j) {
        if (cols[j][row] == 0) continue;
        if (best == nc || cmp(abs(cols[j][row]), abs(cols[best][row])) < 0) best = j;
      }
      if (best == nc) break;  // row all zero from k on
      std::swap(cols[k], cols[best]);
      std::swap(u[k], u[best]);
      bool done = true;
      for (size_t j = k + 1; j < nc; ++j) {
        if (cols[j][row] == 0) continue;
        mpz_class q = cols[j][row] / cols[k][row];  // truncated division is fine
        if (q != 0) {
          for (size_t i = 0; i < nrows; ++i) cols[j][i] -= q * cols[k][i];
          for (size_t i = 0; i < nc; ++i) u[j][i] -= q * u[k][i];
        }
        if (cols[j][row] != 0) done = false;
      }
      if (done) break;
    }
    if (k < nc && cols[k][row] != 0) {
      if (cols[k][row] < 0) {
        for (auto& x : cols[k]) x = -x;
        for (auto& x : u[k]) x = -x;
      }
      // reduce earlier pivot columns modulo this one
      for (size_t j = 0; j < k; ++j) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), cols[j][row].get_mpz_t(), cols[k][row].get_mpz_t());
        if (q != 0)
          for (size_t i = 0; i < nrows; ++i) cols[j][i] -= q * cols[k][i];
        if (q != 0)
          for (size_t i = 0; i < nc; ++i) u[j][i] -= q * u[k][i];
      }
      ++k;
    }
  }
  return {std::move(cols), std::move(u)};
}

long to_long(const mpz_class& z) {
  require(z.fits_slong_p(), Err::INTERNAL, "integer overflow converting lattice data");
  return mpz_get_si(z.get_mpz_t());
}

}  // namespace

// --- RootDatum ---------------------------------------------------------------

long RootDatum::pair(const Coweight& mu, const Weight& la) const {
  long s = 0;
  for (size_t a = 0; a < mu.size(); ++a) {
    if (mu[a] == 0) continue;
    for (size_t b = 0; b < la.size(); ++b) s += mu[a] * pairing_[a][b] * la[b];
  }
  return s;
}

long RootDatum::pair_coroot(int i, const Weight& la) const {
  return pair(alpha_vee_[(size_t)i], la);
}

Weight RootDatum::reflect(int i, const Weight& la) const {
  return w_sub(la, w_scaled(alpha_[(size_t)i], pair_coroot(i, la)));
}

Coweight RootDatum::reflect_co(int i, const Coweight& mu) const {
  // s_i on Y: mu - <mu, alpha_i> alpha_i^vee
  long c = pair(mu, alpha_[(size_t)i]);
  return w_sub(mu, w_scaled(alpha_vee_[(size_t)i], c));
}

bool RootDatum::dominant(const Weight& la) const {
  for (int i = 0; i < n_; ++i)
    if (pair_coroot(i, la) < 0) return false;
  return true;
}

std::optional<std::vector<mpq_class>> RootDatum::root_coords(const Weight& v) const {
  std::vector<std::vector<mpq_class>> cols((size_t)n_, std::vector<mpq_class>((size_t)dx_));
  for (int i = 0; i < n_; ++i)
    for (int b = 0; b < dx_; ++b) cols[(size_t)i][(size_t)b] = alpha_[(size_t)i][(size_t)b];
  std::vector<mpq_class> rhs((size_t)dx_);
  for (int b = 0; b < dx_; ++b) rhs[(size_t)b] = v[(size_t)b];
  return solve_rational(cols, rhs);
}

bool RootDatum::dominance_leq(const Weight& la, const Weight& mu) const {
  auto c = root_coords(w_sub(mu, la));
  if (!c) return false;
  for (auto& x : *c) {
    if (x < 0) return false;
    if (x.get_den() != 1) return false;
  }
  return true;
}

mpq_class RootDatum::height(const Weight& v) const {
  auto c = root_coords(v);
  require(c.has_value(), Err::INTERNAL, "height of a weight outside the root span");
  mpq_class h(0);
  for (auto& x : *c) h += x;
  return h;
}

bool RootDatum::total_less(const Weight& a, const Weight& b) const {
  mpq_class ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  return a > b;  // ties: lexicographically larger first
}

Weight RootDatum::minus_w0(const Weight& la) const {
  return w_neg(imat_apply(w0().on_x, la));
}

void RootDatum::build_weyl() {
  std::vector<IMat> sx((size_t)n_), sy((size_t)n_);
  for (int i = 0; i < n_; ++i) {
    IMat mx = imat_identity(dx_);
    for (int b = 0; b < dx_; ++b) {
      Weight e((size_t)dx_, 0);
      e[(size_t)b] = 1;
      long c = pair_coroot(i, e);
      for (int a = 0; a < dx_; ++a) mx[(size_t)a][(size_t)b] -= c * alpha_[(size_t)i][(size_t)a];
    }
    IMat my = imat_identity(dy_);
    for (int b = 0; b < dy_; ++b) {
      Coweight e((size_t)dy_, 0);
      e[(size_t)b] = 1;
      long c = pair(e, alpha_[(size_t)i]);
      for (int a = 0; a < dy_; ++a) my[(size_t)a][(size_t)b] -= c * alpha_vee_[(size_t)i][(size_t)a];
    }
    sx[(size_t)i] = std::move(mx);
    sy[(size_t)i] = std::move(my);
  }
  std::map<IMat, int> seen;
  weyl_.clear();
  weyl_.push_back(WeylElt{imat_identity(dx_), imat_identity(dy_), 0, {}});
  seen[weyl_[0].on_x] = 0;
  for (size_t head = 0; head < weyl_.size(); ++head) {
    require(weyl_.size() <= 100000, Err::NON_FINITE_TYPE, "Weyl group too large; datum rejected");
    WeylElt w = weyl_[head];  // copy: push_back may reallocate
    for (int i = 0; i < n_; ++i) {
      IMat nx = imat_mul(sx[(size_t)i], w.on_x);
      if (seen.count(nx)) continue;
      WeylElt nw;
      nw.on_x = nx;
      nw.on_y = imat_mul(sy[(size_t)i], w.on_y);
      nw.length = w.length + 1;
      nw.word = w.word;
      nw.word.insert(nw.word.begin(), i);  // s_i * w
      seen[nw.on_x] = (int)weyl_.size();
      weyl_.push_back(std::move(nw));
    }
  }
  w0_index_ = 0;
  for (size_t k = 0; k < weyl_.size(); ++k)
    if (weyl_[k].length > weyl_[(size_t)w0_index_].length) w0_index_ = (int)k;
}

void RootDatum::build_positive_roots() {
  std::vector<Weight> all;
  for (auto& w : weyl_)
    for (int i = 0; i < n_; ++i) {
      Weight r = imat_apply(w.on_x, alpha_[(size_t)i]);
      if (std::find(all.begin(), all.end(), r) == all.end()) all.push_back(r);
    }
  pos_roots_.clear();
  for (auto& r : all) {
    auto c = root_coords(r);
    if (!c) continue;
    bool nonneg = true;
    for (auto& x : *c)
      if (x < 0) nonneg = false;
    if (nonneg) pos_roots_.push_back(r);
  }
  std::sort(pos_roots_.begin(), pos_roots_.end(),
            [this](const Weight& a, const Weight& b) { return total_less(a, b); });
}

WeylElt RootDatum::longest_parabolic(const std::vector<int>& subset) const {
  // BFS over the subgroup generated by the listed reflections
  std::vector<IMat> sx, sy;
  for (int i : subset) {
    require(i >= 0 && i < n_, Err::UNKNOWN_INDEX, "parabolic subset index out of range");
  }
  std::map<IMat, int> seen;
  std::vector<WeylElt> elts;
  elts.push_back(WeylElt{imat_identity(dx_), imat_identity(dy_), 0, {}});
  seen[elts[0].on_x] = 0;
  for (size_t head = 0; head < elts.size(); ++head) {
    WeylElt w = elts[head];
    for (int i : subset) {
      // reflection matrices recomputed via the full-group generators:
      // s_i = the Weyl element of length 1 with word {i}
      IMat nx, ny;
      {
        // build s_i afresh (cheap at this scale)
        IMat mx = imat_identity(dx_);
        for (int b = 0; b < dx_; ++b) {
          Weight e((size_t)dx_, 0);
          e[(size_t)b] = 1;
          long c = pair_coroot(i, e);
          for (int a = 0; a < dx_; ++a)
            mx[(size_t)a][(size_t)b] -= c * alpha_[(size_t)i][(size_t)a];
        }
        IMat my = imat_identity(dy_);
        for (int b = 0; b < dy_; ++b) {
          Coweight e((size_t)dy_, 0);
          e[(size_t)b] = 1;
          long c = pair(e, alpha_[(size_t)i]);
          for (int a = 0; a < dy_; ++a)
            my[(size_t)a][(size_t)b] -= c * alpha_vee_[(size_t)i][(size_t)a];
        }
        nx = imat_mul(mx, w.on_x);
        ny = imat_mul(my, w.on_y);
      }
      if (seen.count(nx)) continue;
      WeylElt nw;
      nw.on_x = nx;
      nw.on_y = ny;
      nw.length = w.length + 1;
      nw.word = w.word;
      nw.word.insert(nw.word.begin(), i);
      seen[nw.on_x] = (int)elts.size();
      elts.push_back(std::move(nw));
    }
  }
  size_t best = 0;
  for (size_t k = 0; k < elts.size(); ++k)
    if (elts[k].length > elts[best].length) best = k;
  return elts[best];
}

Weight RootDatum::dominant_rep(const Weight& v) const {
  for (auto& w : weyl_) {
    Weight u = imat_apply(w.on_x, v);
    if (dominant(u)) return u;
  }
  fail(Err::INTERNAL, "no dominant representative found in the Weyl orbit");
}

mpq_class RootDatum::form_with_root(const Weight& x, const Weight& root) const {
  auto c = root_coords(root);
  require(c.has_value(), Err::INTERNAL, "root outside root span");
  mpq_class s(0);
  for (int i = 0; i < n_; ++i) s += (*c)[(size_t)i] * eps_[(size_t)i] * pair_coroot(i, x);
  return s;
}

std::map<Weight, mpz_class> RootDatum::weight_multiplicities(const Weight& la) const {
  require(dominant(la), Err::NOT_DOMINANT, "weight multiplicities need a dominant weight");
  // Box bounds: la - w0(la) = sum h_i alpha_i with h_i >= 0 integral.
  Weight lowest = imat_apply(w0().on_x, la);
  auto hq = root_coords(w_sub(la, lowest));
  require(hq.has_value(), Err::INTERNAL, "la - w0(la) outside root span");
  std::vector<long> h((size_t)n_);
  for (int i = 0; i < n_; ++i) {
    require((*hq)[(size_t)i].get_den() == 1, Err::INTERNAL, "non-integral root coordinates");
    h[(size_t)i] = to_long((*hq)[(size_t)i].get_num());
  }
  // Enumerate the coefficient box, grouped by height.
  std::vector<std::vector<long>> box;
  std::vector<long> c((size_t)n_, 0);
  while (true) {
    box.push_back(c);
    int k = 0;
    while (k < n_ && c[(size_t)k] == h[(size_t)k]) {
      c[(size_t)k] = 0;
      ++k;
    }
    if (k == n_) break;
    ++c[(size_t)k];
  }
  std::sort(box.begin(), box.end(), [](const std::vector<long>& a, const std::vector<long>& b) {
    long sa = std::accumulate(a.begin(), a.end(), 0L);
    long sb = std::accumulate(b.begin(), b.end(), 0L);
    if (sa != sb) return sa < sb;
    return a < b;
  });
  auto weight_of = [&](const std::vector<long>& cc) {
    Weight mu = la;
    for (int i = 0; i < n_; ++i) mu = w_sub(mu, w_scaled(alpha_[(size_t)i], cc[(size_t)i]));
    return mu;
  };
  // Integer root coordinates of the positive roots.
  std::vector<std::vector<long>> pr_coords;
  for (auto& r : pos_roots_) {
    auto rc = root_coords(r);
    std::vector<long> v((size_t)n_);
    for (int i = 0; i < n_; ++i) v[(size_t)i] = to_long((*rc)[(size_t)i].get_num());
    pr_coords.push_back(std::move(v));
  }
  std::map<Weight, mpz_class> dom_mult;  // dominant weights only
  for (auto& cc : box) {
    Weight mu = weight_of(cc);
    if (!dominant(mu)) continue;
    if (w_is_zero(Weight(w_sub(mu, la)))) {
      dom_mult[mu] = 1;
      continue;
    }
    // Freudenthal: m_mu * ((la+rho,la+rho)-(mu+rho,mu+rho))
    //            = 2 sum_{alpha>0} sum_{k>=1} m_{mu+k alpha} (mu+k alpha, alpha)
    mpq_class total(0);
    for (size_t r = 0; r < pos_roots_.size(); ++r) {
      for (long k = 1;; ++k) {
        std::vector<long> cc2 = cc;
        bool inside = true;
        for (int i = 0; i < n_; ++i) {
          cc2[(size_t)i] -= k * pr_coords[r][(size_t)i];
          if (cc2[(size_t)i] < 0) inside = false;
        }
        if (!inside) break;
        Weight nu = weight_of(cc2);
        Weight nud = dominant_rep(nu);
        auto it = dom_mult.find(nud);
        if (it == dom_mult.end()) continue;  // multiplicity zero
        Weight shifted = w_add(mu, w_scaled(pos_roots_[r], k));
        total += mpq_class(it->second) * form_with_root(shifted, pos_roots_[r]);
      }
    }
    // denominator (la+mu+2rho, la-mu), with (rho, alpha_i) = eps_i
    auto diff = root_coords(w_sub(la, mu));
    mpq_class den(0);
    for (int i = 0; i < n_; ++i) {
      mpq_class term = eps_[(size_t)i] * (pair_coroot(i, la) + pair_coroot(i, mu) + 2);
      den += (*diff)[(size_t)i] * term;
    }
    require(den > 0, Err::INTERNAL, "Freudenthal denominator not positive");
    mpq_class m = 2 * total / den;
    if (m == 0) continue;
    require(m.get_den() == 1 && m > 0, Err::INTERNAL, "non-integral weight multiplicity");
    dom_mult[mu] = m.get_num();
  }
  // Unfold over the Weyl orbits.
  std::map<Weight, mpz_class> out;
  for (auto& cc : box) {
    Weight mu = weight_of(cc);
    auto it = dom_mult.find(dominant_rep(mu));
    if (it != dom_mult.end() && it->second > 0) out[mu] = it->second;
  }
  return out;
}

mpz_class RootDatum::weyl_dim(const Weight& la) const {
  require(dominant(la), Err::NOT_DOMINANT, "Weyl dimension needs a dominant weight");
  mpq_class dim(1);
  for (auto& r : pos_roots_) {
    auto rc = root_coords(r);
    mpq_class rho_r(0);
    for (int i = 0; i < n_; ++i) rho_r += (*rc)[(size_t)i] * eps_[(size_t)i];
    dim *= (form_with_root(la, r) + rho_r) / rho_r;
  }
  require(dim.get_den() == 1, Err::INTERNAL, "Weyl dimension not integral");
  return dim.get_num();
}

std::string RootDatum::fingerprint() const {
  std::string s = "rd:" + std::to_string(n_) + ";";
  auto put = [&s](const IMat& m) {
    for (const auto& row : m) {
      for (long v : row) s += std::to_string(v) + ",";
      s += ";";
    }
    s += "|";
  };
  put(cartan_);
  put(pairing_);
  IMat a(alpha_.begin(), alpha_.end());
  IMat av(alpha_vee_.begin(), alpha_vee_.end());
  put(a);
  put(av);
  return s;
}

RootDatum RootDatum::validate(const RootDatumDesc& d) {
  RootDatum rd;
  rd.n_ = d.rank;
  require(rd.n_ >= 1, Err::NON_FINITE_TYPE, "empty index set");
  require((int)d.cartan.size() == rd.n_, Err::NON_FINITE_TYPE, "Cartan matrix has wrong size");
  for (auto& row : d.cartan)
    require((int)row.size() == rd.n_, Err::NON_FINITE_TYPE, "Cartan matrix not square");
  require(!d.pairing.empty(), Err::PAIRING_MISMATCH, "missing pairing matrix");
  rd.dy_ = (int)d.pairing.size();
  rd.dx_ = (int)d.pairing[0].size();
  for (auto& row : d.pairing)
    require((int)row.size() == rd.dx_, Err::PAIRING_MISMATCH, "ragged pairing matrix");
  require((int)d.alpha.size() == rd.n_ && (int)d.alpha_vee.size() == rd.n_,
          Err::NON_FINITE_TYPE, "need one simple root and coroot per index");
  for (auto& a : d.alpha)
    require((int)a.size() == rd.dx_, Err::NON_FINITE_TYPE, "simple root has wrong dimension");
  for (auto& a : d.alpha_vee)
    require((int)a.size() == rd.dy_, Err::NON_FINITE_TYPE, "simple coroot has wrong dimension");
  rd.cartan_ = d.cartan;
  rd.pairing_ = d.pairing;
  rd.alpha_ = d.alpha;
  rd.alpha_vee_ = d.alpha_vee;

  // Generalized Cartan matrix conditions.
  for (int i = 0; i < rd.n_; ++i) {
    require(rd.cartan_[(size_t)i][(size_t)i] == 2, Err::NON_FINITE_TYPE,
            "Cartan diagonal entry must be 2");
    for (int j = 0; j < rd.n_; ++j) {
      if (i == j) continue;
      require(rd.cartan_[(size_t)i][(size_t)j] <= 0, Err::NON_FINITE_TYPE,
              "off-diagonal Cartan entries must be nonpositive");
      require((rd.cartan_[(size_t)i][(size_t)j] == 0) == (rd.cartan_[(size_t)j][(size_t)i] == 0),
              Err::NON_FINITE_TYPE, "Cartan zero pattern must be symmetric");
    }
  }

  // Derive the symmetrizers: positive, collectively coprime, eps_i a_ij = eps_j a_ji.
  {
    std::vector<mpq_class> r((size_t)rd.n_, mpq_class(0));
    for (int start = 0; start < rd.n_; ++start) {
      if (r[(size_t)start] != 0) continue;
      r[(size_t)start] = 1;
      std::vector<int> stack{start};
      while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < rd.n_; ++j) {
          if (i == j || rd.cartan_[(size_t)i][(size_t)j] == 0) continue;
          mpq_class want = r[(size_t)i] * rd.cartan_[(size_t)i][(size_t)j] /
                           rd.cartan_[(size_t)j][(size_t)i];
          if (r[(size_t)j] == 0) {
            r[(size_t)j] = want;
            stack.push_back(j);
          } else {
            require(r[(size_t)j] == want, Err::NON_FINITE_TYPE,
                    "Cartan matrix is not symmetrizable");
          }
        }
      }
    }
    mpz_class l(1);
    for (auto& x : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<mpz_class> e((size_t)rd.n_);
    mpz_class g(0);
    for (int i = 0; i < rd.n_; ++i) {
      e[(size_t)i] = r[(size_t)i].get_num() * (l / r[(size_t)i].get_den());
      require(e[(size_t)i] > 0, Err::NON_FINITE_TYPE, "symmetrizers must be positive");
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e[(size_t)i].get_mpz_t());
    }
    rd.eps_.resize((size_t)rd.n_);
    for (int i = 0; i < rd.n_; ++i) rd.eps_[(size_t)i] = to_long(e[(size_t)i] / g);
  }

  // DA symmetric positive definite <=> finite type.
  {
    std::vector<std::vector<mpq_class>> b((size_t)rd.n_, std::vector<mpq_class>((size_t)rd.n_));
    for (int i = 0; i < rd.n_; ++i)
      for (int j = 0; j < rd.n_; ++j)
        b[(size_t)i][(size_t)j] = mpq_class(rd.eps_[(size_t)i] * rd.cartan_[(size_t)i][(size_t)j]);
    for (int i = 0; i < rd.n_; ++i)
      for (int j = 0; j < rd.n_; ++j)
        require(b[(size_t)i][(size_t)j] == b[(size_t)j][(size_t)i], Err::NON_FINITE_TYPE,
                "DA is not symmetric");
    // leading principal minors via fraction-free elimination
    for (int k = 1; k <= rd.n_; ++k) {
      std::vector<std::vector<mpq_class>> m((size_t)k, std::vector<mpq_class>((size_t)k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[(size_t)i][(size_t)j] = b[(size_t)i][(size_t)j];
      mpq_class det(1);
      for (int col = 0; col < k; ++col) {
        int sel = col;
        while (sel < k && m[(size_t)sel][(size_t)col] == 0) ++sel;
        if (sel == k) {
          det = 0;
          break;
        }
        if (sel != col) {
          std::swap(m[(size_t)sel], m[(size_t)col]);
          det = -det;
        }
        det *= m[(size_t)col][(size_t)col];
        for (int i = col + 1; i < k; ++i) {
          mpq_class f = m[(size_t)i][(size_t)col] / m[(size_t)col][(size_t)col];
          for (int j = col; j < k; ++j) m[(size_t)i][(size_t)j] -= f * m[(size_t)col][(size_t)j];
        }
      }
      require(det > 0, Err::NON_FINITE_TYPE,
              "DA is not positive definite (not a finite-type Cartan matrix)");
    }
  }

  // Pairing consistency: <alpha_i^vee, alpha_j> = a_ij.
  for (int i = 0; i < rd.n_; ++i)
    for (int j = 0; j < rd.n_; ++j)
      require(rd.pair_coroot(i, rd.alpha_[(size_t)j]) == rd.cartan_[(size_t)i][(size_t)j],
              Err::PAIRING_MISMATCH,
              "pairing of simple coroots with simple roots disagrees with the Cartan matrix");

  // Simple roots must be linearly independent for the dominance solve.
  {
    std::vector<std::vector<mpq_class>> cols((size_t)rd.n_,
                                             std::vector<mpq_class>((size_t)rd.dx_));
    for (int i = 0; i < rd.n_; ++i)
      for (int b2 = 0; b2 < rd.dx_; ++b2)
        cols[(size_t)i][(size_t)b2] = rd.alpha_[(size_t)i][(size_t)b2];
    // rank check: eliminate
    int rk = 0;
    std::vector<std::vector<mpq_class>> rows((size_t)rd.dx_,
                                             std::vector<mpq_class>((size_t)rd.n_));
    for (int i = 0; i < rd.n_; ++i)
      for (int b2 = 0; b2 < rd.dx_; ++b2) rows[(size_t)b2][(size_t)i] = cols[(size_t)i][(size_t)b2];
    std::vector<bool> used((size_t)rd.dx_, false);
    for (int col = 0; col < rd.n_; ++col) {
      int sel = -1;
      for (int rr = 0; rr < rd.dx_; ++rr)
        if (!used[(size_t)rr] && rows[(size_t)rr][(size_t)col] != 0) {
          sel = rr;
          break;
        }
      if (sel < 0) continue;
      used[(size_t)sel] = true;
      ++rk;
      for (int rr = 0; rr < rd.dx_; ++rr) {
        if (rr == sel || rows[(size_t)rr][(size_t)col] == 0) continue;
        mpq_class f = rows[(size_t)rr][(size_t)col] / rows[(size_t)sel][(size_t)col];
        for (int cc = 0; cc < rd.n_; ++cc)
          rows[(size_t)rr][(size_t)cc] -= f * rows[(size_t)sel][(size_t)cc];
      }
    }
    require(rk == rd.n_, Err::NON_FINITE_TYPE, "simple roots are linearly dependent");
  }

  rd.build_weyl();
  rd.build_positive_roots();
  return rd;
}

// --- IRootDatum ---------------------------------------------------------------

bool IRootDatum::is_black(int i) const {
  return std::find(ibullet_.begin(), ibullet_.end(), i) != ibullet_.end();
}

IRootDatum IRootDatum::validate(RootDatum base, std::vector<int> ibullet,
                                std::vector<int> tau, std::optional<IMat> tau_on_x,
                                std::optional<IMat> tau_on_y) {
  IRootDatum d;
  int n = base.rank();
  require((int)tau.size() == n, Err::TAU_NOT_DIAGRAM_AUTOMORPHISM,
          "tau must be a permutation of the index set");
  {
    std::vector<bool> hit((size_t)n, false);
    for (int i = 0; i < n; ++i) {
      require(tau[(size_t)i] >= 0 && tau[(size_t)i] < n, Err::TAU_NOT_DIAGRAM_AUTOMORPHISM,
              "tau image out of range");
      hit[(size_t)tau[(size_t)i]] = true;
    }
    for (int i = 0; i < n; ++i)
      require(hit[(size_t)i], Err::TAU_NOT_DIAGRAM_AUTOMORPHISM, "tau is not a bijection");
    for (int i = 0; i < n; ++i)
      require(tau[(size_t)tau[(size_t)i]] == i, Err::TAU_NOT_DIAGRAM_AUTOMORPHISM,
              "tau is not an involution");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        require(base.cartan()[(size_t)tau[(size_t)i]][(size_t)tau[(size_t)j]] ==
                    base.cartan()[(size_t)i][(size_t)j],
                Err::TAU_NOT_DIAGRAM_AUTOMORPHISM, "tau does not preserve the Cartan matrix");
  }
  std::sort(ibullet.begin(), ibullet.end());
  for (size_t k = 0; k + 1 < ibullet.size(); ++k)
    require(ibullet[k] != ibullet[k + 1], Err::UNKNOWN_INDEX, "duplicate index in I_bullet");
  for (int i : ibullet) {
    require(i >= 0 && i < n, Err::UNKNOWN_INDEX, "I_bullet index out of range");
    require(std::find(ibullet.begin(), ibullet.end(), tau[(size_t)i]) != ibullet.end(),
            Err::TAU_NOT_DIAGRAM_AUTOMORPHISM, "tau does not stabilize I_bullet");
  }

  // tau's action on the lattices
  auto perm_matrix = [&](int dim) {
    require(dim == n, Err::TAU_NOT_DIAGRAM_AUTOMORPHISM,
            "tau action on a lattice of different rank must be supplied explicitly");
    IMat t((size_t)dim, std::vector<long>((size_t)dim, 0));
    for (int b = 0; b < dim; ++b) t[(size_t)tau[(size_t)b]][(size_t)b] = 1;
    return t;
  };
  IMat tx = tau_on_x ? *tau_on_x : perm_matrix(base.dim_x());
  IMat ty = tau_on_y ? *tau_on_y : perm_matrix(base.dim_y());
  // involutive and compatible with roots, coroots, and the pairing
  require(imat_mul(tx, tx) == imat_identity(base.dim_x()), Err::TAU_NOT_DIAGRAM_AUTOMORPHISM,
          "tau action on X is not an involution");
  require(imat_mul(ty, ty) == imat_identity(base.dim_y()), Err::TAU_NOT_DIAGRAM_AUTOMORPHISM,
          "tau action on Y is not an involution");
  for (int i = 0; i < n; ++i) {
    require(imat_apply(tx, base.alpha(i)) == base.alpha(tau[(size_t)i]),
            Err::TAU_NOT_DIAGRAM_AUTOMORPHISM, "tau action does not permute the simple roots");
    require(imat_apply(ty, base.alpha_vee(i)) == base.alpha_vee(tau[(size_t)i]),
            Err::TAU_NOT_DIAGRAM_AUTOMORPHISM,
            "tau action does not permute the simple coroots");
  }
  for (int a = 0; a < base.dim_y(); ++a)
    for (int b = 0; b < base.dim_x(); ++b) {
      Coweight ea((size_t)base.dim_y(), 0);
      ea[(size_t)a] = 1;
      Weight eb((size_t)base.dim_x(), 0);
      eb[(size_t)b] = 1;
      require(base.pair(imat_apply(ty, ea), imat_apply(tx, eb)) == base.pair(ea, eb),
              Err::TAU_NOT_DIAGRAM_AUTOMORPHISM, "tau action does not preserve the pairing");
    }

  d.w_bullet_ = base.longest_parabolic(ibullet);
  d.theta_x_ = imat_neg(imat_mul(d.w_bullet_.on_x, tx));
  d.theta_y_ = imat_neg(imat_mul(d.w_bullet_.on_y, ty));
  require(imat_mul(d.theta_x_, d.theta_x_) == imat_identity(base.dim_x()),
          Err::THETA_NOT_INVOLUTION, "theta is not an involution on X");
  require(imat_mul(d.theta_y_, d.theta_y_) == imat_identity(base.dim_y()),
          Err::THETA_NOT_INVOLUTION, "theta is not an involution on Y");

  // (1 - theta)X in column Hermite form
  {
    int dx = base.dim_x();
    std::vector<std::vector<mpz_class>> cols;
    for (int b = 0; b < dx; ++b) {
      Weight e((size_t)dx, 0);
      e[(size_t)b] = 1;
      Weight v = w_sub(e, imat_apply(d.theta_x_, e));
      std::vector<mpz_class> col((size_t)dx);
      for (int a = 0; a < dx; ++a) col[(size_t)a] = v[(size_t)a];
      cols.push_back(std::move(col));
    }
    auto hr = column_hnf(std::move(cols), (size_t)dx);
    for (auto& col : hr.h) {
      bool zero = true;
      for (auto& x : col)
        if (x != 0) zero = false;
      if (zero) continue;
      Weight w((size_t)dx);
      for (int a = 0; a < dx; ++a) w[(size_t)a] = to_long(col[(size_t)a]);
      d.hnf_basis_.push_back(std::move(w));
    }
  }

  // Y^i = ker(theta_Y - 1), an integer lattice basis via the HNF transform
  {
    int dy = base.dim_y();
    std::vector<std::vector<mpz_class>> cols;
    for (int b = 0; b < dy; ++b) {
      Coweight e((size_t)dy, 0);
      e[(size_t)b] = 1;
      Coweight v = w_sub(imat_apply(d.theta_y_, e), e);
      std::vector<mpz_class> col((size_t)dy);
      for (int a = 0; a < dy; ++a) col[(size_t)a] = v[(size_t)a];
      cols.push_back(std::move(col));
    }
    auto hr = column_hnf(std::move(cols), (size_t)dy);
    // the map sends e_b to column b; kernel vectors are the U-columns over
    // zero H-columns
    for (size_t j = 0; j < hr.h.size(); ++j) {
      bool zero = true;
      for (auto& x : hr.h[j])
        if (x != 0) zero = false;
      if (!zero) continue;
      Coweight w((size_t)dy);
      for (int a = 0; a < dy; ++a) w[(size_t)a] = to_long(hr.u[j][(size_t)a]);
      if (!w_is_zero(w)) d.y_fixed_.push_back(std::move(w));
    }
  }

  d.base_ = std::move(base);
  d.ibullet_ = std::move(ibullet);
  d.tau_ = std::move(tau);
  d.tau_x_ = std::move(tx);
  d.tau_y_ = std::move(ty);
  for (int i = 0; i < n; ++i)
    if (!d.is_black(i)) d.icirc_.push_back(i);
  return d;
}

bool IRootDatum::image_is_zero_in_xi(const Weight& la) const {
  std::vector<mpz_class> v(la.size());
  for (size_t a = 0; a < la.size(); ++a) v[a] = la[a];
  for (auto& b : hnf_basis_) {
    // pivot = first nonzero entry of b
    size_t p = 0;
    while (p < b.size() && b[p] == 0) ++p;
    if (p == b.size()) continue;
    mpz_class t, r;
    mpz_fdiv_qr(t.get_mpz_t(), r.get_mpz_t(), v[p].get_mpz_t(), mpz_class(b[p]).get_mpz_t());
    if (r != 0) return false;
    for (size_t a = 0; a < v.size(); ++a) v[a] -= t * b[a];
  }
  for (auto& x : v)
    if (x != 0) return false;
  return true;
}

bool IRootDatum::is_spherical(const Weight& la) const {
  require(base_.dominant(la), Err::NOT_DOMINANT, "sphericity test needs a dominant weight");
  return image_is_zero_in_xi(la);
}

std::vector<Weight> IRootDatum::spherical_enumerate(long bound) const {
  require(bound >= 0, Err::CONFIG_INVALID, "spherical enumeration bound must be >= 0");
  int n = base_.rank();
  require(base_.dim_x() == n, Err::TIER_UNSUPPORTED,
          "spherical enumeration needs rank(X) = |I|");
  std::vector<Weight> out;
  std::vector<long> c((size_t)n, 0);
  while (true) {
    // find la with <alpha_i^vee, la> = c_i
    std::vector<std::vector<mpq_class>> cols((size_t)n, std::vector<mpq_class>((size_t)n));
    std::vector<mpq_class> rhs((size_t)n);
    for (int i = 0; i < n; ++i) {
      rhs[(size_t)i] = c[(size_t)i];
      for (int b = 0; b < n; ++b) {
        Weight e((size_t)n, 0);
        e[(size_t)b] = 1;
        cols[(size_t)b][(size_t)i] = base_.pair_coroot(i, e);
      }
    }
    auto sol = solve_rational(cols, rhs);
    if (sol) {
      bool integral = true;
      Weight la((size_t)n);
      for (int b = 0; b < n; ++b) {
        if ((*sol)[(size_t)b].get_den() != 1) integral = false;
        else la[(size_t)b] = to_long((*sol)[(size_t)b].get_num());
      }
      if (integral && base_.dominant(la) && image_is_zero_in_xi(la)) out.push_back(la);
    }
    int k = 0;
    while (k < n && c[(size_t)k] == bound) {
      c[(size_t)k] = 0;
      ++k;
    }
    if (k == n) break;
    ++c[(size_t)k];
  }
  std::sort(out.begin(), out.end(),
            [this](const Weight& a, const Weight& b) { return base_.total_less(a, b); });
  return out;
}

std::string IRootDatum::fingerprint() const {
  std::string s = "id:" + base_.fingerprint() + "b:";
  for (int i : ibullet_) s += std::to_string(i) + ",";
  s += "t:";
  for (int i : tau_) s += std::to_string(i) + ",";
  return s;
}

}  // namespace qsym
