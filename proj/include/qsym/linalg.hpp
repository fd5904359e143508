#pragma once

// Sparse exact linear algebra over Q(q).  Vectors are index->coefficient
// maps with no stored zeros; matrices are column-major lists of such
// vectors.  The Span class is the workhorse: an incremental row-echelon
// basis that can answer membership queries and express a vector as a
// combination of the originally inserted generators.

#include <map>
#include <optional>
#include <vector>

#include "qsym/ratfunc.hpp"

namespace qsym {

using Vec = std::map<int, RatFunc>;

void vec_add_scaled(Vec& a, const Vec& b, const RatFunc& c);  // a += c*b
Vec vec_scaled(const Vec& b, const RatFunc& c);
Vec vec_bar(const Vec& v);  // entrywise bar
bool vec_is_zero(const Vec& v);
RatFunc vec_get(const Vec& v, int i);
void vec_set(Vec& v, int i, const RatFunc& x);
std::string vec_str(const Vec& v);

class SpMat {
 public:
  SpMat() = default;
  SpMat(int rows, int cols) : r_(rows), c_(cols), col_(cols) {}
  static SpMat identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  const Vec& col(int j) const { return col_[j]; }
  Vec& col_mut(int j) { return col_[j]; }
  RatFunc at(int i, int j) const { return vec_get(col_[j], i); }
  void set(int i, int j, const RatFunc& v) { vec_set(col_[j], i, v); }
  void add_to(int i, int j, const RatFunc& v);

  Vec apply(const Vec& v) const;  // matrix * vector
  SpMat operator*(const SpMat& o) const;
  SpMat operator+(const SpMat& o) const;
  SpMat operator-(const SpMat& o) const;
  SpMat scaled(const RatFunc& c) const;
  SpMat bar_entrywise() const;
  SpMat transpose() const;
  SpMat pow(unsigned n) const;  // square matrices

  bool is_zero() const;
  bool operator==(const SpMat& o) const;
  bool operator!=(const SpMat& o) const { return !(*this == o); }

  size_t nnz() const;
  std::string str() const;  // dense-ish rendering for small matrices

 private:
  int r_ = 0, c_ = 0;
  std::vector<Vec> col_;
};

// Incremental echelon basis with generator bookkeeping.
class Span {
 public:
  // Returns true when v enlarged the span.
  bool insert(const Vec& v);
  bool contains(const Vec& v) const;
  Vec reduce(const Vec& v) const;  // residual of v modulo the span
  // Express v as a linear combination of the inserted generators
  // (coefficient vector indexed by insertion order); nullopt if outside.
  std::optional<std::vector<RatFunc>> coords(const Vec& v) const;
  int dim() const { return (int)rows_.size(); }
  int generators() const { return ngen_; }
  // The reduced vectors themselves (one per pivot, ascending pivot index).
  std::vector<Vec> basis() const;

  // Two spans coincide iff they reduce each other to zero.
  bool same_space(const Span& o) const;

 private:
  struct Row {
    Vec v;         // reduced vector, pivot coefficient 1
    Vec expr;      // v = sum expr[g] * generator_g
  };
  std::map<int, Row> rows_;  // pivot index -> row
  int ngen_ = 0;
};

int rank(const SpMat& m);
// Basis of the right null space {x : Mx = 0}.
std::vector<Vec> kernel(const SpMat& m);
// Solve M x = b; nullopt when inconsistent (any one solution returned).
std::optional<Vec> solve(const SpMat& m, const Vec& b);
// Inverse of a square invertible matrix; SINGULAR_SYSTEM otherwise.
SpMat inverse(const SpMat& m);

}  // namespace qsym
