#include "qsym/laurent.hpp"

#include <sstream>

namespace qsym {

void LaurentInt::add_term(int e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

LaurentInt LaurentInt::operator-() const {
  LaurentInt r;
  for (auto& [e, c] : t_) r.t_[e] = -c;
  return r;
}

LaurentInt& LaurentInt::operator+=(const LaurentInt& o) {
  for (auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

LaurentInt& LaurentInt::operator-=(const LaurentInt& o) {
  for (auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

LaurentInt& LaurentInt::operator*=(const LaurentInt& o) {
  *this = *this * o;
  return *this;
}

LaurentInt& LaurentInt::mul_mpz(const mpz_class& c) {
  if (c == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [e, v] : t_) v *= c;
  return *this;
}

LaurentInt operator+(LaurentInt a, const LaurentInt& b) { a += b; return a; }
LaurentInt operator-(LaurentInt a, const LaurentInt& b) { a -= b; return a; }

LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
  LaurentInt r;
  for (auto& [ea, ca] : a.t_)
    for (auto& [eb, cb] : b.t_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentInt LaurentInt::bar() const {
  LaurentInt r;
  for (auto& [e, c] : t_) r.t_[-e] = c;
  return r;
}

LaurentInt LaurentInt::shifted(int e) const {
  LaurentInt r;
  for (auto& [e0, c] : t_) r.t_[e0 + e] = c;
  return r;
}

LaurentInt LaurentInt::pow(unsigned n) const {
  LaurentInt r(1);
  LaurentInt base = *this;
  while (n) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

mpz_class LaurentInt::specialize_q1() const {
  mpz_class s = 0;
  for (auto& [e, c] : t_) s += c;
  return s;
}

static mpq_class mpq_pow(const mpq_class& x, int e) {
  if (e == 0) return mpq_class(1);
  mpq_class b = x;
  if (e < 0) {
    b = mpq_class(1) / x;
    e = -e;
  }
  mpq_class r(1);
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

mpq_class LaurentInt::evaluate(const mpq_class& q0) const {
  require(q0 != 0, Err::SINGULAR_SYSTEM, "Laurent polynomial evaluated at q=0");
  mpq_class s(0);
  for (auto& [e, c] : t_) s += mpq_class(c) * mpq_pow(q0, e);
  return s;
}

mpz_class LaurentInt::content() const {
  mpz_class g = 0;
  for (auto& [e, c] : t_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::string LaurentInt::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print from high exponent down, as humans write polynomials
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    mpz_class a = abs(c);
    if (a != 1 || e == 0) os << a.get_str();
    if (e != 0) {
      if (a != 1) os << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentInt try_divexact(const LaurentInt& a, const LaurentInt& b, bool& ok) {
  ok = true;
  if (b.is_zero()) { ok = false; return LaurentInt(); }
  if (a.is_zero()) return LaurentInt();
  // If b | a, the quotient's exponents live in a window we can bound upfront.
  long hi = (long)a.max_exp() - b.max_exp();
  long lo = (long)a.min_exp() - b.min_exp();
  if (lo > hi) { ok = false; return LaurentInt(); }
  long budget = hi - lo + 1;
  LaurentInt rem = a, quot;
  while (!rem.is_zero()) {
    if (budget-- == 0) { ok = false; return LaurentInt(); }
    mpz_class qc, r;
    mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(),
                rem.leading_coeff().get_mpz_t(), b.leading_coeff().get_mpz_t());
    if (r != 0) { ok = false; return LaurentInt(); }
    int qe = rem.max_exp() - b.max_exp();
    LaurentInt t = LaurentInt::monomial(qc, qe);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

LaurentInt divexact(const LaurentInt& a, const LaurentInt& b) {
  bool ok = false;
  LaurentInt q = try_divexact(a, b, ok);
  require(ok, Err::INTERNAL, "inexact Laurent division: (" + a.str() + ") / (" + b.str() + ")");
  return q;
}

// --- gcd via primitive pseudo-remainder sequence -------------------------

// View p as an honest polynomial in q (shift away min_exp) and strip
// integer content; content and shift are irrelevant to the canonical gcd.
static LaurentInt primitive_poly(const LaurentInt& p) {
  if (p.is_zero()) return p;
  LaurentInt r = p.shifted(-p.min_exp());
  mpz_class c = r.content();
  if (r.leading_coeff() < 0) c = -c;
  if (c != 1) {
    LaurentInt q;
    bool ok = false;
    q = try_divexact(r, LaurentInt(c), ok);
    return q;
  }
  return r;
}

// Pseudo-remainder of polynomials (min_exp >= 0), deg a >= deg b >= 0.
static LaurentInt pseudo_rem(LaurentInt a, const LaurentInt& b) {
  int db = b.max_exp();
  while (!a.is_zero() && a.max_exp() >= db) {
    int sh = a.max_exp() - db;
    mpz_class ca = a.leading_coeff();
    a.mul_mpz(b.leading_coeff());
    a -= LaurentInt::monomial(ca, sh) * b;
  }
  return a;
}

LaurentInt gcd(const LaurentInt& a, const LaurentInt& b) {
  if (a.is_zero() && b.is_zero()) return LaurentInt();
  if (a.is_zero() || b.is_zero()) {
    const LaurentInt& p = a.is_zero() ? b : a;
    LaurentInt r = p.shifted(-p.min_exp());
    if (r.leading_coeff() < 0) return -r;
    return r;
  }
  mpz_class cg;
  mpz_class ca = a.content(), cb = b.content();
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  LaurentInt A = primitive_poly(a), B = primitive_poly(b);
  if (A.max_exp() < B.max_exp()) std::swap(A, B);
  while (!B.is_zero()) {
    LaurentInt R = pseudo_rem(A, B);
    A = B;
    B = primitive_poly(R);
  }
  A.mul_mpz(cg);
  return A;
}

LaurentInt qint(long n, int eps) {
  // [n]_i = q_i^{n-1} + q_i^{n-3} + ... + q_i^{1-n};  [-n] = -[n]
  if (n < 0) return -qint(-n, eps);
  LaurentInt r;
  for (long k = 0; k < n; ++k) r += LaurentInt::q_power((int)(eps * (n - 1 - 2 * k)));
  return r;
}

LaurentInt qfact(long n, int eps) {
  require(n >= 0, Err::INTERNAL, "quantum factorial of negative integer");
  LaurentInt r(1);
  for (long k = 2; k <= n; ++k) r *= qint(k, eps);
  return r;
}

LaurentInt qbinom(long m, long n, int eps) {
  if (n < 0 || (m >= 0 && n > m)) return LaurentInt();
  // [m choose n] = [m]! / ([n]! [m-n]!), an honest Laurent polynomial
  LaurentInt num(1);
  for (long k = 0; k < n; ++k) num *= qint(m - k, eps);
  return divexact(num, qfact(n, eps));
}

}  // namespace qsym
