#include "doctest.h"

#include <random>

#include "qsym/laurent.hpp"

using namespace qsym;

namespace {

LaurentInt qp(int e) { return LaurentInt::q_power(e); }

LaurentInt random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 5), expd(-5, 5), coeffd(-9, 9);
  LaurentInt p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) p += LaurentInt::monomial(coeffd(rng), expd(rng));
  return p;
}

}  // namespace

TEST_CASE("laurent basic arithmetic and trimming") {
  LaurentInt one(1);
  CHECK(one.is_one());
  CHECK((qp(1) + one - qp(1)) == one);
  LaurentInt p = qp(2) + LaurentInt(3) - qp(-1);
  CHECK((p - p).is_zero());
  CHECK((p - p).term_count() == 0);
  CHECK(p.coeff(2) == 1);
  CHECK(p.coeff(-1) == -1);
  CHECK(p.coeff(5) == 0);
  CHECK(p.min_exp() == -1);
  CHECK(p.max_exp() == 2);
  CHECK((-p + p).is_zero());
}

TEST_CASE("laurent ring axioms on random inputs") {
  std::mt19937 rng(20260818);
  for (int trial = 0; trial < 50; ++trial) {
    LaurentInt a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK((a + b) == (b + a));
    CHECK((a * b) == (b * a));
    CHECK(((a + b) + c) == (a + (b + c)));
    CHECK(((a * b) * c) == (a * (b * c)));
    CHECK((a * (b + c)) == (a * b + a * c));
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(7);
  mpq_class pts[] = {mpq_class(2), mpq_class(3, 2), mpq_class(-5, 3)};
  for (int trial = 0; trial < 20; ++trial) {
    LaurentInt a = random_laurent(rng), b = random_laurent(rng);
    for (auto& x : pts) {
      CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
      CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
    }
  }
}

TEST_CASE("bar involution on Laurent polynomials") {
  LaurentInt p = qp(2) + LaurentInt(1);
  CHECK(p.bar() == qp(-2) + LaurentInt(1));
  CHECK(LaurentInt().bar().is_zero());
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    LaurentInt a = random_laurent(rng), b = random_laurent(rng);
    CHECK(a.bar().bar() == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK((a + b).bar() == a.bar() + b.bar());
    // oracle: bar(p)(x) = p(1/x)
    mpq_class x(5, 2);
    CHECK(a.bar().evaluate(x) == a.evaluate(mpq_class(1) / x));
  }
}

TEST_CASE("specialization at q=1") {
  CHECK((qp(1) + LaurentInt(1) + qp(-1)).specialize_q1() == 3);
  CHECK(LaurentInt().specialize_q1() == 0);
  CHECK((qp(2) - qp(-2)).specialize_q1() == 0);
}

TEST_CASE("exact division") {
  // (q^2 - q^-2) = (q - q^-1)(q + q^-1)
  LaurentInt a = qp(2) - qp(-2);
  LaurentInt b = qp(1) - qp(-1);
  CHECK(divexact(a, b) == qp(1) + qp(-1));
  CHECK(divexact(qp(2) + LaurentInt(2) * qp(1) + LaurentInt(1), qp(1) + LaurentInt(1)) ==
        qp(1) + LaurentInt(1));
  bool ok = true;
  try_divexact(LaurentInt(1), qp(1) - LaurentInt(1), ok);
  CHECK(!ok);
  try_divexact(qp(3) + LaurentInt(1), qp(1) + LaurentInt(2), ok);
  CHECK(!ok);
  // division by units is always exact
  CHECK(divexact(a, qp(-3)) == a.shifted(3));
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    LaurentInt p = random_laurent(rng), r = random_laurent(rng);
    if (r.is_zero()) continue;
    CHECK(divexact(p * r, r) == p);
  }
}

TEST_CASE("gcd canonical form") {
  LaurentInt g1 = gcd(qp(2) - LaurentInt(1), qp(3) - LaurentInt(1));
  CHECK(g1 == qp(1) - LaurentInt(1));
  // content is shared: gcd(2q+2, 4q^2-4) = 2(q+1)
  LaurentInt g2 = gcd(LaurentInt(2) * qp(1) + LaurentInt(2),
                      LaurentInt(4) * qp(2) - LaurentInt(4));
  CHECK(g2 == LaurentInt(2) * qp(1) + LaurentInt(2));
  // units and signs are normalized away
  LaurentInt g3 = gcd(LaurentInt(), -qp(3) + qp(1));
  CHECK(g3 == qp(2) - LaurentInt(1));
  CHECK(gcd(LaurentInt(), LaurentInt()).is_zero());
  // coprime case
  CHECK(gcd(qp(1), qp(1) + LaurentInt(1)) == LaurentInt(1));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    LaurentInt a = random_laurent(rng), b = random_laurent(rng), m = random_laurent(rng);
    LaurentInt g = gcd(a * m, b * m);
    if (m.is_zero() || (a.is_zero() && b.is_zero())) continue;
    // common factor m must divide the gcd
    bool ok = false;
    try_divexact(g, m, ok);
    CHECK(ok);
    // and the gcd divides both inputs
    try_divexact(a * m, g, ok);
    CHECK(ok);
    try_divexact(b * m, g, ok);
    CHECK(ok);
  }
}

TEST_CASE("quantum integers, factorials, binomials") {
  CHECK(qint(0).is_zero());
  CHECK(qint(1).is_one());
  CHECK(qint(2) == qp(1) + qp(-1));
  CHECK(qint(3) == qp(2) + LaurentInt(1) + qp(-2));
  CHECK(qint(-3) == -qint(3));
  // q_i = q^2
  CHECK(qint(2, 2) == qp(2) + qp(-2));
  CHECK(qfact(3) == qint(3) * qint(2));
  CHECK(qbinom(4, 2).specialize_q1() == 6);
  CHECK(qbinom(4, 2) == qbinom(4, 2).bar());  // bar-symmetric
  CHECK(qbinom(5, 0).is_one());
  CHECK(qbinom(3, 4).is_zero());
  for (long m = 0; m <= 6; ++m)
    for (long n = 0; n <= m; ++n)
      CHECK(qbinom(m, n) * qfact(n) * qfact(m - n) == qfact(m));
  // Pascal identity [m choose n] = q^n [m-1 choose n] + q^{n-m} [m-1 choose n-1]
  for (long m = 1; m <= 6; ++m)
    for (long n = 1; n <= m; ++n)
      CHECK(qbinom(m, n) ==
            qp((int)n) * qbinom(m - 1, n) + qp((int)(n - m)) * qbinom(m - 1, n - 1));
  // negative top argument: [ -1 choose n ] = (-1)^n q^{-n(... )}; just pin one value
  CHECK(qbinom(-1, 1) == -LaurentInt(1));
  CHECK(qbinom(-1, 2) == divexact(qint(-1) * qint(-2), qfact(2)));
}

TEST_CASE("content and powers") {
  CHECK((LaurentInt(6) * qp(2) - LaurentInt(4)).content() == 2);
  CHECK(LaurentInt().content() == 0);
  LaurentInt p = qp(1) + LaurentInt(1);
  CHECK(p.pow(2) == qp(2) + LaurentInt(2) * qp(1) + LaurentInt(1));
  CHECK(p.pow(0).is_one());
}

TEST_CASE("printing") {
  CHECK(LaurentInt().str() == "0");
  CHECK((qp(2) - LaurentInt(3) + qp(-1)).str() == "q^2 - 3 + q^-1");
  CHECK((LaurentInt(2) * qp(1)).str() == "2*q");
}
