#pragma once

// Integer Laurent polynomials in one variable q, with the bar involution
// q -> q^{-1}, exact division, gcd, and the quantum integers/binomials.
// Coefficients are arbitrary-precision (GMP): quantum factorials blow past
// 64 bits already in modest examples.

#include <gmpxx.h>

#include <map>
#include <string>

#include "qsym/error.hpp"

namespace qsym {

class LaurentInt {
 public:
  LaurentInt() = default;  // zero
  LaurentInt(long c) { if (c != 0) t_[0] = c; }
  LaurentInt(const mpz_class& c) { if (c != 0) t_[0] = c; }

  static LaurentInt monomial(const mpz_class& c, int e) {
    LaurentInt p;
    if (c != 0) p.t_[e] = c;
    return p;
  }
  static LaurentInt q_power(int e) { return monomial(1, e); }

  bool is_zero() const { return t_.empty(); }
  bool is_one() const { return t_.size() == 1 && t_.begin()->first == 0 && t_.begin()->second == 1; }

  // Require nonzero.
  int min_exp() const { return t_.begin()->first; }
  int max_exp() const { return t_.rbegin()->first; }
  const mpz_class& leading_coeff() const { return t_.rbegin()->second; }
  const mpz_class& trailing_coeff() const { return t_.begin()->second; }

  mpz_class coeff(int e) const {
    auto it = t_.find(e);
    return it == t_.end() ? mpz_class(0) : it->second;
  }
  const std::map<int, mpz_class>& terms() const { return t_; }
  size_t term_count() const { return t_.size(); }

  LaurentInt operator-() const;
  LaurentInt& operator+=(const LaurentInt& o);
  LaurentInt& operator-=(const LaurentInt& o);
  LaurentInt& operator*=(const LaurentInt& o);
  LaurentInt& mul_mpz(const mpz_class& c);

  LaurentInt bar() const;            // q -> q^{-1}
  LaurentInt shifted(int e) const;   // multiply by q^e
  LaurentInt pow(unsigned n) const;

  mpz_class specialize_q1() const;   // sum of coefficients
  mpq_class evaluate(const mpq_class& q0) const;  // q0 must be nonzero

  // gcd of all coefficients, nonnegative; 0 for the zero polynomial.
  mpz_class content() const;

  bool operator==(const LaurentInt& o) const { return t_ == o.t_; }
  bool operator!=(const LaurentInt& o) const { return t_ != o.t_; }
  // Arbitrary total order so LaurentInt can key a map.
  bool operator<(const LaurentInt& o) const { return t_ < o.t_; }

  std::string str() const;  // for diagnostics

 private:
  std::map<int, mpz_class> t_;
  void add_term(int e, const mpz_class& c);
  friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b);
};

LaurentInt operator+(LaurentInt a, const LaurentInt& b);
LaurentInt operator-(LaurentInt a, const LaurentInt& b);
LaurentInt operator*(const LaurentInt& a, const LaurentInt& b);

// Exact division; `ok` reports success, quotient valid only when true.
LaurentInt try_divexact(const LaurentInt& a, const LaurentInt& b, bool& ok);
// Division that must succeed (divisibility guaranteed by the caller).
LaurentInt divexact(const LaurentInt& a, const LaurentInt& b);

// gcd in Z[q,q^{-1}], canonicalized: nonzero constant term (as a polynomial
// in q), positive leading coefficient.  gcd(0,0) = 0.
LaurentInt gcd(const LaurentInt& a, const LaurentInt& b);

// Quantum integers for q_i = q^{eps}:
//   [n]_i = (q_i^n - q_i^{-n})/(q_i - q_i^{-1}).
LaurentInt qint(long n, int eps = 1);
LaurentInt qfact(long n, int eps = 1);
LaurentInt qbinom(long m, long n, int eps = 1);

}  // namespace qsym
