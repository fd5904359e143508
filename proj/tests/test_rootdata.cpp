#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "qsym/presets.hpp"
#include "qsym/root_datum.hpp"

using namespace qsym;

namespace {

RootDatum a1() { return RootDatum::validate(preset_desc("A1-AI")); }
RootDatum a2() { return RootDatum::validate(preset_desc("A2-AI")); }
RootDatum a1a1() { return RootDatum::validate(preset_desc("A1xA1-diag")); }

Weight rand_weight(std::mt19937& rng, int d, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  Weight w((size_t)d);
  for (auto& x : w) x = dist(rng);
  return w;
}

}  // namespace

TEST_CASE("preset root data validate") {
  RootDatum r1 = a1();
  CHECK(r1.weyl().size() == 2);
  CHECK(r1.w0().length == 1);
  CHECK(r1.eps(0) == 1);
  CHECK(r1.positive_roots().size() == 1);

  RootDatum r2 = a2();
  CHECK(r2.weyl().size() == 6);
  CHECK(r2.w0().length == 3);
  CHECK(r2.positive_roots().size() == 3);
  CHECK(r2.eps(0) == 1);
  CHECK(r2.eps(1) == 1);

  RootDatum rd = a1a1();
  CHECK(rd.weyl().size() == 4);
  CHECK(rd.w0().length == 2);
  CHECK(rd.positive_roots().size() == 2);
}

TEST_CASE("affine Cartan matrix rejected") {
  RootDatumDesc d;
  d.rank = 2;
  d.cartan = {{2, -2}, {-2, 2}};
  d.pairing = {{1, 0}, {0, 1}};
  d.alpha = {{2, -2}, {-2, 2}};
  d.alpha_vee = {{1, 0}, {0, 1}};
  try {
    RootDatum::validate(d);
    FAIL("affine matrix accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Err::NON_FINITE_TYPE);
  }
}

TEST_CASE("pairing mismatch rejected") {
  RootDatumDesc d = preset_desc("A2-AI");
  d.alpha_vee = {{1, 0}, {1, 1}};  // wrong second coroot
  try {
    RootDatum::validate(d);
    FAIL("bad pairing accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Err::PAIRING_MISMATCH);
  }
}

TEST_CASE("B2 symmetrizers are derived") {
  RootDatumDesc d;
  d.rank = 2;
  d.cartan = {{2, -1}, {-2, 2}};
  d.pairing = {{1, 0}, {0, 1}};
  d.alpha = {{2, -2}, {-1, 2}};  // columns of the Cartan matrix
  d.alpha_vee = {{1, 0}, {0, 1}};
  RootDatum b2 = RootDatum::validate(d);
  // eps_1 a_12 = eps_2 a_21: (2)(-1) = (1)(-2)
  CHECK(b2.eps(0) == 2);
  CHECK(b2.eps(1) == 1);
  CHECK(b2.weyl().size() == 8);
  CHECK(b2.positive_roots().size() == 4);
}

TEST_CASE("dominance order") {
  RootDatum r1 = a1();
  CHECK(r1.dominance_leq({0}, {2}));
  CHECK(!r1.dominance_leq({0}, {1}));
  CHECK(r1.dominance_leq({-2}, {0}));

  RootDatum r2 = a2();
  // 3w1 - (w1+w2) = 2w1 - w2 = alpha_1, so (1,1) <= (3,0)
  CHECK(r2.dominance_leq({1, 1}, {3, 0}));
  CHECK(!r2.dominance_leq({3, 0}, {1, 1}));
  // oracle: enumerate nonnegative coefficient pairs up to 3
  auto bruteforce_leq = [&](Weight la, Weight mu) {
    for (long c1 = 0; c1 <= 3; ++c1)
      for (long c2 = 0; c2 <= 3; ++c2) {
        Weight t = w_add(la, w_add(w_scaled(r2.alpha(0), c1), w_scaled(r2.alpha(1), c2)));
        if (t == mu) return true;
      }
    return false;
  };
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= 3; ++b) {
      Weight mu = {3, 3};
      Weight la = {a, b};
      CHECK(r2.dominance_leq(la, mu) == bruteforce_leq(la, mu));
      CHECK(r2.dominance_leq({0, 0}, la) == bruteforce_leq({0, 0}, la));
    }
  CHECK(!r2.dominance_leq({1, 0}, {0, 1}));
  CHECK(!r2.dominance_leq({0, 1}, {1, 0}));
}

TEST_CASE("dominance is a partial order") {
  RootDatum r2 = a2();
  std::mt19937 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    Weight a = rand_weight(rng, 2, -4, 4), b = rand_weight(rng, 2, -4, 4),
           c = rand_weight(rng, 2, -4, 4);
    CHECK(r2.dominance_leq(a, a));
    if (r2.dominance_leq(a, b) && r2.dominance_leq(b, a)) CHECK(a == b);
    if (r2.dominance_leq(a, b) && r2.dominance_leq(b, c)) CHECK(r2.dominance_leq(a, c));
  }
}

TEST_CASE("minus_w0") {
  CHECK(a1().minus_w0({3}) == Weight{3});
  CHECK(a2().minus_w0({1, 0}) == Weight{0, 1});
  CHECK(a2().minus_w0({2, 1}) == Weight{1, 2});
  CHECK(a1a1().minus_w0({2, 5}) == Weight{2, 5});
  RootDatum r2 = a2();
  std::mt19937 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    Weight a = rand_weight(rng, 2, -5, 5);
    CHECK(r2.minus_w0(r2.minus_w0(a)) == a);
    if (r2.dominant(a)) CHECK(r2.dominant(r2.minus_w0(a)));
  }
}

TEST_CASE("weight multiplicities rank 1") {
  RootDatum r1 = a1();
  auto m = r1.weight_multiplicities({3});
  CHECK(m.size() == 4);
  for (long w : {3L, 1L, -1L, -3L}) CHECK(m.at({w}) == 1);
  CHECK(r1.weyl_dim({3}) == 4);
  for (long n = 0; n <= 12; ++n) {
    auto mm = r1.weight_multiplicities({n});
    CHECK((long)mm.size() == n + 1);
    CHECK(r1.weyl_dim({n}) == n + 1);
  }
}

TEST_CASE("weight multiplicities A2") {
  RootDatum r2 = a2();
  // adjoint representation: dim 8, zero weight twice
  auto m = r2.weight_multiplicities({1, 1});
  mpz_class dim = 0;
  for (auto& [w, c] : m) dim += c;
  CHECK(dim == 8);
  CHECK(m.at({0, 0}) == 2);
  CHECK(m.at({1, 1}) == 1);
  CHECK(m.at({-1, -1}) == 1);
  CHECK(r2.weyl_dim({1, 1}) == 8);
  // dim V(a,b) = (a+1)(b+1)(a+b+2)/2
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= 3; ++b) {
      mpz_class expect = (a + 1) * (b + 1) * (a + b + 2) / 2;
      CHECK(r2.weyl_dim({a, b}) == expect);
      auto mm = r2.weight_multiplicities({a, b});
      mpz_class total = 0;
      for (auto& [w, c] : mm) total += c;
      CHECK(total == expect);
      // Weyl-invariance of the multiplicities
      for (auto& [w, c] : mm) CHECK(mm.at(r2.dominant_rep(w)) == c);
    }
  CHECK(r2.weyl_dim({2, 2}) == 27);
}

TEST_CASE("weight multiplicities A1xA1") {
  RootDatum rd = a1a1();
  auto m = rd.weight_multiplicities({1, 1});
  CHECK(m.size() == 4);
  CHECK(rd.weyl_dim({1, 1}) == 4);
  CHECK(rd.weyl_dim({2, 3}) == 12);
}

TEST_CASE("preset i-root data") {
  IRootDatum d1 = preset_idatum("A1-AI");
  CHECK(d1.theta_x() == IMat{{-1}});
  CHECK(d1.one_minus_theta_basis() == std::vector<Weight>{{2}});
  CHECK(d1.y_fixed_basis().empty());
  CHECK(d1.w_bullet().length == 0);

  IRootDatum dd = preset_idatum("A1xA1-diag");
  CHECK(dd.theta({3, 1}) == Weight{-1, -3});
  CHECK(dd.one_minus_theta_basis().size() == 1);
  CHECK(dd.one_minus_theta_basis()[0] == Weight{1, 1});
  REQUIRE(dd.y_fixed_basis().size() == 1);
  Coweight yf = dd.y_fixed_basis()[0];
  CHECK((yf == Coweight{1, -1} || yf == Coweight{-1, 1}));

  IRootDatum d2 = preset_idatum("A2-AI");
  CHECK(d2.theta_x() == IMat{{-1, 0}, {0, -1}});
  CHECK(d2.one_minus_theta_basis().size() == 2);
  CHECK(d2.y_fixed_basis().empty());
}

TEST_CASE("theta is an involution on the presets") {
  for (auto& name : preset_names()) {
    IRootDatum d = preset_idatum(name);
    int dx = d.base().dim_x();
    CHECK(imat_mul(d.theta_x(), d.theta_x()) == imat_identity(dx));
    CHECK(imat_mul(d.theta_y(), d.theta_y()) == imat_identity(d.base().dim_y()));
  }
}

TEST_CASE("tau validation rejects a non-automorphism") {
  // B2 has no nontrivial diagram automorphism
  RootDatumDesc d;
  d.rank = 2;
  d.cartan = {{2, -1}, {-2, 2}};
  d.pairing = {{1, 0}, {0, 1}};
  d.alpha = {{2, -2}, {-1, 2}};
  d.alpha_vee = {{1, 0}, {0, 1}};
  RootDatum b2 = RootDatum::validate(d);
  try {
    IRootDatum::validate(std::move(b2), {}, {1, 0});
    FAIL("swap accepted on B2");
  } catch (const Error& e) {
    CHECK(e.code() == Err::TAU_NOT_DIAGRAM_AUTOMORPHISM);
  }
  try {
    IRootDatum::validate(RootDatum::validate(d), {}, {0, 0});
    FAIL("non-bijection accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Err::TAU_NOT_DIAGRAM_AUTOMORPHISM);
  }
}

TEST_CASE("sphericity") {
  IRootDatum d1 = preset_idatum("A1-AI");
  CHECK(d1.is_spherical({2}));
  CHECK(d1.is_spherical({0}));
  CHECK(!d1.is_spherical({1}));
  CHECK_THROWS_AS(d1.is_spherical({-1}), Error);

  IRootDatum dd = preset_idatum("A1xA1-diag");
  CHECK(dd.is_spherical({3, 3}));
  CHECK(!dd.is_spherical({2, 1}));

  IRootDatum d2 = preset_idatum("A2-AI");
  CHECK(d2.is_spherical({2, 2}));
  CHECK(!d2.is_spherical({1, 1}));
  CHECK(d2.is_spherical({2, 0}));
}

TEST_CASE("sphericity against the Smith-form oracle") {
  for (auto& name : preset_names()) {
    IRootDatum d = preset_idatum(name);
    int dx = d.base().dim_x();
    oracles::ZMat m((size_t)dx, std::vector<mpz_class>((size_t)dx));
    for (int b = 0; b < dx; ++b) {
      Weight e((size_t)dx, 0);
      e[(size_t)b] = 1;
      Weight v = w_sub(e, d.theta(e));
      for (int a = 0; a < dx; ++a) m[(size_t)a][(size_t)b] = v[(size_t)a];
    }
    // every dominant weight in a box
    std::vector<Weight> doms;
    if (dx == 1) {
      for (long a = 0; a <= 8; ++a) doms.push_back({a});
    } else {
      for (long a = 0; a <= 4; ++a)
        for (long b = 0; b <= 4; ++b)
          if (d.base().dominant({a, b})) doms.push_back({a, b});
    }
    for (auto& la : doms) {
      std::vector<mpz_class> v(la.size());
      for (size_t i = 0; i < la.size(); ++i) v[i] = la[(size_t)i];
      CHECK(d.is_spherical(la) == oracles::snf_column_lattice_member(m, v));
    }
  }
}

TEST_CASE("smith form invariant factors of the presets") {
  // A1: (1-theta) = (2); A2: diag(2,2); diagonal: rank one
  auto mat_of = [](const IRootDatum& d) {
    int dx = d.base().dim_x();
    oracles::ZMat m((size_t)dx, std::vector<mpz_class>((size_t)dx));
    for (int b = 0; b < dx; ++b) {
      Weight e((size_t)dx, 0);
      e[(size_t)b] = 1;
      Weight v = w_sub(e, d.theta(e));
      for (int a = 0; a < dx; ++a) m[(size_t)a][(size_t)b] = v[(size_t)a];
    }
    return m;
  };
  auto s1 = oracles::smith(mat_of(preset_idatum("A1-AI")));
  REQUIRE(s1.diag.size() == 1);
  CHECK(s1.diag[0] == 2);
  auto s2 = oracles::smith(mat_of(preset_idatum("A2-AI")));
  REQUIRE(s2.diag.size() == 2);
  CHECK(s2.diag[0] == 2);
  CHECK(s2.diag[1] == 2);
  auto sd = oracles::smith(mat_of(preset_idatum("A1xA1-diag")));
  REQUIRE(sd.diag.size() == 1);
  CHECK(sd.diag[0] == 1);
}

TEST_CASE("spherical enumeration") {
  IRootDatum d1 = preset_idatum("A1-AI");
  auto s1 = d1.spherical_enumerate(6);
  CHECK(s1 == std::vector<Weight>{{0}, {2}, {4}, {6}});

  IRootDatum dd = preset_idatum("A1xA1-diag");
  auto sd = dd.spherical_enumerate(2);
  CHECK(sd == std::vector<Weight>{{0, 0}, {1, 1}, {2, 2}});

  IRootDatum d2 = preset_idatum("A2-AI");
  auto s2 = d2.spherical_enumerate(2);
  CHECK(s2 == std::vector<Weight>{{0, 0}, {2, 0}, {0, 2}, {2, 2}});
}

TEST_CASE("sphericity commutes with minus_w0") {
  for (auto& name : preset_names()) {
    IRootDatum d = preset_idatum(name);
    for (auto& la : d.spherical_enumerate(4)) {
      CHECK(d.is_spherical(d.base().minus_w0(la)));
    }
    // and over all dominant weights in the box
    int dx = d.base().dim_x();
    if (dx == 2) {
      for (long a = 0; a <= 4; ++a)
        for (long b = 0; b <= 4; ++b) {
          Weight la{a, b};
          if (!d.base().dominant(la)) continue;
          CHECK(d.is_spherical(la) == d.is_spherical(d.base().minus_w0(la)));
        }
    }
  }
}

TEST_CASE("deterministic total order") {
  RootDatum r2 = a2();
  CHECK(r2.total_less({0, 0}, {2, 0}));
  CHECK(r2.total_less({2, 0}, {0, 2}));  // same height, lex-larger first
  CHECK(r2.total_less({0, 2}, {2, 2}));
  CHECK(!r2.total_less({0, 0}, {0, 0}));
}

TEST_CASE("dominant representatives") {
  RootDatum r2 = a2();
  std::mt19937 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    Weight v = rand_weight(rng, 2, -5, 5);
    Weight d = r2.dominant_rep(v);
    CHECK(r2.dominant(d));
    bool in_orbit = false;
    for (auto& w : r2.weyl())
      if (imat_apply(w.on_x, v) == d) in_orbit = true;
    CHECK(in_orbit);
  }
}
