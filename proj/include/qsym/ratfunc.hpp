#pragma once

// The fraction field Q(q) realized as quotients of integer Laurent
// polynomials in canonical form, plus the three coefficient lattices the
// basis theorems quantify over:
//   INT_LAURENT  Z[q,q^{-1}]
//   Q_NEG        q^{-1} Z[q^{-1}]
//   A_INFINITY   rational functions regular at q = infinity.
//
// Canonical form: denominator is a polynomial in q with nonzero constant
// term and positive leading coefficient, and gcd(num, den) = 1 including
// integer content.  Equal values therefore have identical representations.

#include "qsym/laurent.hpp"

namespace qsym {

enum class LatticeId { INT_LAURENT, Q_NEG, A_INFINITY };

class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}
  RatFunc(const mpz_class& c) : num_(c), den_(1) {}
  RatFunc(const LaurentInt& p) : num_(p), den_(1) {}
  RatFunc(const LaurentInt& n, const LaurentInt& d) { normalize(n, d); }

  static RatFunc q_power(int e) { return RatFunc(LaurentInt::q_power(e)); }

  const LaurentInt& num() const { return num_; }
  const LaurentInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc inverse() const;

  RatFunc bar() const;  // q -> q^{-1}

  bool lattice_member(LatticeId L) const;
  // Value at q = infinity; requires membership in A_INFINITY.
  mpq_class value_at_infinity() const;
  mpq_class evaluate(const mpq_class& q0) const;
  // Requires a trivial denominator.
  mpz_class specialize_q1() const;
  const LaurentInt& to_laurent() const;  // requires trivial denominator

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  bool operator<(const RatFunc& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
  }

  std::string str() const;

 private:
  LaurentInt num_, den_;
  void normalize(LaurentInt n, LaurentInt d);
};

RatFunc operator+(RatFunc a, const RatFunc& b);
RatFunc operator-(RatFunc a, const RatFunc& b);
RatFunc operator*(RatFunc a, const RatFunc& b);
RatFunc operator/(RatFunc a, const RatFunc& b);

}  // namespace qsym
