#include "qsym/linalg.hpp"

#include <sstream>

namespace qsym {

void vec_add_scaled(Vec& a, const Vec& b, const RatFunc& c) {
  if (c.is_zero()) return;
  for (auto& [i, x] : b) {
    auto [it, fresh] = a.try_emplace(i, x * c);
    if (!fresh) {
      it->second += x * c;
      if (it->second.is_zero()) a.erase(it);
    }
  }
}

Vec vec_scaled(const Vec& b, const RatFunc& c) {
  Vec r;
  vec_add_scaled(r, b, c);
  return r;
}

Vec vec_bar(const Vec& v) {
  Vec r;
  for (auto& [i, x] : v) r[i] = x.bar();
  return r;
}

bool vec_is_zero(const Vec& v) { return v.empty(); }

RatFunc vec_get(const Vec& v, int i) {
  auto it = v.find(i);
  return it == v.end() ? RatFunc() : it->second;
}

void vec_set(Vec& v, int i, const RatFunc& x) {
  if (x.is_zero())
    v.erase(i);
  else
    v[i] = x;
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto& [i, x] : v) {
    if (!first) os << ", ";
    first = false;
    os << i << ": " << x.str();
  }
  os << "}";
  return os.str();
}

SpMat SpMat::identity(int n) {
  SpMat m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, RatFunc(1));
  return m;
}

void SpMat::add_to(int i, int j, const RatFunc& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = col_[j].try_emplace(i, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) col_[j].erase(it);
  }
}

Vec SpMat::apply(const Vec& v) const {
  Vec r;
  for (auto& [j, x] : v) vec_add_scaled(r, col_[j], x);
  return r;
}

SpMat SpMat::operator*(const SpMat& o) const {
  require(c_ == o.r_, Err::INTERNAL, "matrix product shape mismatch");
  SpMat m(r_, o.c_);
  for (int j = 0; j < o.c_; ++j) m.col_[j] = apply(o.col_[j]);
  return m;
}

SpMat SpMat::operator+(const SpMat& o) const {
  require(r_ == o.r_ && c_ == o.c_, Err::INTERNAL, "matrix sum shape mismatch");
  SpMat m = *this;
  for (int j = 0; j < c_; ++j) vec_add_scaled(m.col_[j], o.col_[j], RatFunc(1));
  return m;
}

SpMat SpMat::operator-(const SpMat& o) const {
  require(r_ == o.r_ && c_ == o.c_, Err::INTERNAL, "matrix difference shape mismatch");
  SpMat m = *this;
  for (int j = 0; j < c_; ++j) vec_add_scaled(m.col_[j], o.col_[j], RatFunc(-1));
  return m;
}

SpMat SpMat::scaled(const RatFunc& c) const {
  SpMat m(r_, c_);
  for (int j = 0; j < c_; ++j) m.col_[j] = vec_scaled(col_[j], c);
  return m;
}

SpMat SpMat::bar_entrywise() const {
  SpMat m(r_, c_);
  for (int j = 0; j < c_; ++j) m.col_[j] = vec_bar(col_[j]);
  return m;
}

SpMat SpMat::transpose() const {
  SpMat m(c_, r_);
  for (int j = 0; j < c_; ++j)
    for (auto& [i, x] : col_[j]) m.col_[i][j] = x;
  return m;
}

SpMat SpMat::pow(unsigned n) const {
  require(r_ == c_, Err::INTERNAL, "power of non-square matrix");
  SpMat r = identity(r_), b = *this;
  while (n) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

bool SpMat::is_zero() const {
  for (auto& c : col_)
    if (!c.empty()) return false;
  return true;
}

bool SpMat::operator==(const SpMat& o) const {
  return r_ == o.r_ && c_ == o.c_ && col_ == o.col_;
}

size_t SpMat::nnz() const {
  size_t n = 0;
  for (auto& c : col_) n += c.size();
  return n;
}

std::string SpMat::str() const {
  std::ostringstream os;
  for (int i = 0; i < r_; ++i) {
    os << "[ ";
    for (int j = 0; j < c_; ++j) os << at(i, j).str() << (j + 1 < c_ ? ", " : " ");
    os << "]\n";
  }
  return os.str();
}

// --- Span ------------------------------------------------------------------

bool Span::insert(const Vec& v) {
  int g = ngen_++;
  Vec cur = v, expr;
  expr[g] = RatFunc(1);
  for (auto& [p, row] : rows_) {
    auto it = cur.find(p);
    if (it == cur.end()) continue;
    RatFunc c = it->second;
    vec_add_scaled(cur, row.v, -c);
    vec_add_scaled(expr, row.expr, -c);
  }
  if (cur.empty()) return false;
  int pivot = cur.begin()->first;
  RatFunc inv = cur.begin()->second.inverse();
  rows_[pivot] = Row{vec_scaled(cur, inv), vec_scaled(expr, inv)};
  return true;
}

Vec Span::reduce(const Vec& v) const {
  Vec cur = v;
  for (auto& [p, row] : rows_) {
    auto it = cur.find(p);
    if (it == cur.end()) continue;
    RatFunc c = it->second;
    vec_add_scaled(cur, row.v, -c);
  }
  return cur;
}

bool Span::contains(const Vec& v) const { return reduce(v).empty(); }

std::optional<std::vector<RatFunc>> Span::coords(const Vec& v) const {
  Vec cur = v, expr;
  for (auto& [p, row] : rows_) {
    auto it = cur.find(p);
    if (it == cur.end()) continue;
    RatFunc c = it->second;
    vec_add_scaled(cur, row.v, -c);
    vec_add_scaled(expr, row.expr, c);
  }
  if (!cur.empty()) return std::nullopt;
  std::vector<RatFunc> out((size_t)ngen_);
  for (auto& [g, c] : expr) out[(size_t)g] = c;
  return out;
}

bool Span::same_space(const Span& o) const {
  if (dim() != o.dim()) return false;
  for (auto& [p, row] : rows_)
    if (!o.contains(row.v)) return false;
  return true;
}

std::vector<Vec> Span::basis() const {
  std::vector<Vec> out;
  for (auto& [p, row] : rows_) out.push_back(row.v);
  return out;
}

// --- derived solvers ---------------------------------------------------------

int rank(const SpMat& m) {
  Span s;
  for (int j = 0; j < m.cols(); ++j) s.insert(m.col(j));
  return s.dim();
}

std::vector<Vec> kernel(const SpMat& m) {
  Span s;
  std::vector<Vec> out;
  for (int j = 0; j < m.cols(); ++j) {
    if (s.insert(m.col(j))) continue;
    // dependent column: express it in the previously inserted ones
    auto c = s.coords(m.col(j));
    require(c.has_value(), Err::INTERNAL, "dependent column failed to reduce");
    Vec k;
    for (int g = 0; g < j; ++g) vec_set(k, g, (*c)[(size_t)g]);
    vec_set(k, j, RatFunc(-1));
    out.push_back(std::move(k));
  }
  return out;
}

std::optional<Vec> solve(const SpMat& m, const Vec& b) {
  Span s;
  for (int j = 0; j < m.cols(); ++j) s.insert(m.col(j));
  auto c = s.coords(b);
  if (!c) return std::nullopt;
  Vec x;
  for (int j = 0; j < m.cols(); ++j) vec_set(x, j, (*c)[(size_t)j]);
  return x;
}

SpMat inverse(const SpMat& m) {
  require(m.rows() == m.cols(), Err::SINGULAR_SYSTEM, "inverse of non-square matrix");
  Span s;
  for (int j = 0; j < m.cols(); ++j) s.insert(m.col(j));
  require(s.dim() == m.rows(), Err::SINGULAR_SYSTEM, "inverse of singular matrix");
  SpMat inv(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    Vec e;
    e[i] = RatFunc(1);
    auto c = s.coords(e);
    require(c.has_value(), Err::INTERNAL, "full-rank span failed to express unit vector");
    for (int j = 0; j < m.cols(); ++j) inv.set(j, i, (*c)[(size_t)j]);
  }
  return inv;
}

}  // namespace qsym
