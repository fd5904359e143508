#include "qsym/ratfunc.hpp"

namespace qsym {

void RatFunc::normalize(LaurentInt n, LaurentInt d) {
  require(!d.is_zero(), Err::SINGULAR_SYSTEM, "rational function with zero denominator");
  if (n.is_zero()) {
    num_ = LaurentInt();
    den_ = LaurentInt(1);
    return;
  }
  // Make the denominator an honest polynomial with nonzero constant term.
  int s = d.min_exp();
  if (s != 0) {
    d = d.shifted(-s);
    n = n.shifted(-s);
  }
  LaurentInt g = gcd(n, d);
  if (!g.is_one()) {
    n = divexact(n, g);
    d = divexact(d, g);
  }
  if (d.leading_coeff() < 0) {
    n = -n;
    d = -d;
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    normalize(num_ + o.num_, den_);
  } else {
    normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  if (den_ == o.den_) {
    normalize(num_ - o.num_, den_);
  } else {
    normalize(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  normalize(num_ * o.num_, den_ * o.den_);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  require(!o.is_zero(), Err::SINGULAR_SYSTEM, "division by zero rational function");
  normalize(num_ * o.den_, den_ * o.num_);
  return *this;
}

RatFunc RatFunc::inverse() const {
  require(!is_zero(), Err::SINGULAR_SYSTEM, "inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::bar() const { return RatFunc(num_.bar(), den_.bar()); }

bool RatFunc::lattice_member(LatticeId L) const {
  switch (L) {
    case LatticeId::INT_LAURENT:
      return den_.is_one();
    case LatticeId::Q_NEG:
      return den_.is_one() && (num_.is_zero() || num_.max_exp() <= -1);
    case LatticeId::A_INFINITY:
      // den has min_exp 0, so deg(den) = max_exp; regular at q=infinity
      // iff the numerator degree does not exceed it.
      return num_.is_zero() || num_.max_exp() <= den_.max_exp();
  }
  return false;
}

mpq_class RatFunc::value_at_infinity() const {
  require(lattice_member(LatticeId::A_INFINITY), Err::LATTICE_VIOLATION,
          "value at q=infinity of a function with a pole there: " + str());
  if (num_.is_zero() || num_.max_exp() < den_.max_exp()) return mpq_class(0);
  mpq_class v(num_.leading_coeff(), den_.leading_coeff());
  v.canonicalize();
  return v;
}

mpq_class RatFunc::evaluate(const mpq_class& q0) const {
  mpq_class d = den_.evaluate(q0);
  require(d != 0, Err::SINGULAR_SYSTEM, "evaluation at a pole");
  return num_.evaluate(q0) / d;
}

mpz_class RatFunc::specialize_q1() const {
  require(den_.is_one(), Err::LATTICE_VIOLATION,
          "specialization at q=1 requires an integral Laurent polynomial, got " + str());
  return num_.specialize_q1();
}

const LaurentInt& RatFunc::to_laurent() const {
  require(den_.is_one(), Err::LATTICE_VIOLATION,
          "not an integral Laurent polynomial: " + str());
  return num_;
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc operator+(RatFunc a, const RatFunc& b) { a += b; return a; }
RatFunc operator-(RatFunc a, const RatFunc& b) { a -= b; return a; }
RatFunc operator*(RatFunc a, const RatFunc& b) { a *= b; return a; }
RatFunc operator/(RatFunc a, const RatFunc& b) { a /= b; return a; }

}  // namespace qsym
