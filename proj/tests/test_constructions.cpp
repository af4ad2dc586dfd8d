#include <gtest/gtest.h>

#include "knotcord/constructions.hpp"
#include "knotcord/lattice.hpp"
#include "knotcord/random.hpp"

using namespace knotcord;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::ParseError;
}

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Brute force over every (a, b) and every s in [-nC, nC].
bool thm12_brute(long sa, long sb, long n, long g, long c) {
  for (long a = 0; a <= n; ++a)
    for (long b = 0; b <= n; ++b) {
      if (a == 0 && b == 0) continue;
      for (long s = -n * c; s <= n * c; ++s)
        if (std::abs(s + 2 * a * sa + 2 * b * sb) <= 4 * g) return false;
    }
  return true;
}

}  // namespace

TEST(Lattice, BezoutVector) {
  const IntVector u = iv({6, 10, 15});
  const IntVector y = bezout_vector(u);
  EXPECT_EQ(dot(u, y), 1);
  EXPECT_EQ(dot(iv({0, -1}), bezout_vector(iv({0, -1}))), 1);
}

TEST(Lattice, BasisSpansSameLattice) {
  const auto b = lattice_basis({iv({2, 0}), iv({0, 2}), iv({1, 1})});
  ASSERT_EQ(b.size(), 2u);
  IntMatrix m(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m(i, j) = b[i][j];
  EXPECT_EQ(abs(determinant(m)), 2);
}

TEST(Surgery, TrefoilMinusReverse) {
  const SeifertMatrix t = torus2(3);
  const SeifertMatrix w = connected_sum(t, inverse(reverse(t)));
  const SeifertMatrix r = surgery_reduce(w, iv({1, 0, 1, 0}));
  EXPECT_EQ(r.dimension(), 2u);
  EXPECT_EQ(lt_signature(r, RationalAngle(1, 2)), 0);
}

TEST(Surgery, Errors) {
  const SeifertMatrix t = torus2(3);
  const SeifertMatrix w = connected_sum(t, inverse(reverse(t)));
  try {
    surgery_reduce(w, iv({1, 0, 0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonzeroFraming);
    EXPECT_NE(std::string(e.what()).find("-1"), std::string::npos) << e.what();
  }
  EXPECT_EQ(kind_of([&] { surgery_reduce(w, iv({2, 0, 2, 0})); }), ErrorKind::ImprimitiveClass);
  EXPECT_EQ(kind_of([&] { surgery_reduce(w, iv({1, 0, 1})); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([&] { surgery_reduce(w, iv({0, 0, 0, 0})); }), ErrorKind::ImprimitiveClass);
}

TEST(Surgery, PreservesSignatureAtRegularAngles) {
  Rng rng(61);
  const auto grid = default_angle_grid(14);
  int compared = 0;
  for (int i = 0; i < 60; ++i) {
    const KnotExpr k = random_knot_expr(rng, 3);
    const int g = g3_upper(k);
    const Theorem1Certificate cert = theorem1_certificate(k, random_primitive(rng, 2 * static_cast<std::size_t>(g)));
    EXPECT_EQ(cert.reduced.dimension(), 4u * static_cast<std::size_t>(g) - 2);
    EXPECT_EQ(cert.d_upper, 2 * g - 1);
    EXPECT_EQ(cert.surgery_class.framing, 0);
    const SignatureFunction fw(cert.sum_matrix), fr(cert.reduced);
    for (const auto& x : sample_angles(rng, 8, grid)) {
      if (fw.is_jump(x) || fr.is_jump(x)) continue;
      EXPECT_EQ(fw.at(x), fr.at(x)) << to_string(k) << " at " << x.to_string();
      ++compared;
    }
  }
  EXPECT_GT(compared, 200);
}

TEST(Theorem1, Examples) {
  const Theorem1Certificate c = theorem1_certificate(KnotExpr::pretzel({3, 5, 7, 9, 11}), iv({1, 0, 0, 0}));
  EXPECT_EQ(c.genus, 2);
  EXPECT_EQ(c.reduced.dimension(), 6u);
  EXPECT_EQ(c.d_upper, 3);
  EXPECT_EQ(kind_of([] { theorem1_certificate(KnotExpr::unknot(), {}); }), ErrorKind::UnknotInput);
  EXPECT_EQ(kind_of([] { theorem1_certificate(KnotExpr::torus2(3), iv({2, 0})); }), ErrorKind::ImprimitiveClass);
}

TEST(Thm12, Example) {
  const Thm12Result r = thm12_obstruction(-4, -8, 2, 1, CgTermBound{20});
  EXPECT_FALSE(r.forces);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->a, 1);
  EXPECT_EQ(r.witness->b, 0);
  EXPECT_EQ(r.witness->s, 8);
  EXPECT_TRUE(thm12_obstruction(-10, -40, 1, 0, CgTermBound{0}).forces);
}

TEST(Thm12, AgreesWithBruteForce) {
  for (long n = 1; n <= 3; ++n)
    for (long c = 0; c <= 6; c += 3)
      for (long g = 0; g < n; ++g)
        for (long sa = -12; sa <= 12; sa += 2)
          for (long sb = -12; sb <= 12; sb += 2) {
            const Thm12Result r = thm12_obstruction(sa, sb, n, g, CgTermBound{c});
            ASSERT_EQ(r.forces, thm12_brute(sa, sb, n, g, c)) << sa << " " << sb << " n=" << n << " g=" << g;
            if (!r.forces) {
              const auto& w = *r.witness;
              EXPECT_LE(std::abs(w.s), n * c);
              EXPECT_LE(std::abs(w.s + 2 * w.a * sa + 2 * w.b * sb), 4 * g);
            }
          }
}

TEST(Thm12, ParameterChecks) {
  EXPECT_EQ(kind_of([] { thm12_obstruction(0, 0, 1, 1, CgTermBound{0}); }), ErrorKind::BadParameter);
  EXPECT_EQ(kind_of([] { thm12_obstruction(0, 0, 0, 0, CgTermBound{0}); }), ErrorKind::BadParameter);
  EXPECT_EQ(kind_of([] { thm12_obstruction(0, 0, 1, 0, CgTermBound{-1}); }), ErrorKind::BadParameter);
  EXPECT_EQ(kind_of([] { thm_general_obstruction(0, 0, 2, -1); }), ErrorKind::BadParameter);
}

TEST(ThmGeneral, AgreesWithDefinition) {
  for (long n = 1; n <= 3; ++n)
    for (long g = 0; g < n; ++g)
      for (long sa = -30; sa <= 30; sa += 3)
        for (long sb = -60; sb <= 60; sb += 7) {
          bool expected = true;
          for (long a = 0; a <= n; ++a)
            for (long b = 0; b <= n; ++b)
              if ((a || b) && std::abs(a * sa - b * sb) <= 6 * g) expected = false;
          const GeneralResult r = thm_general_obstruction(sa, sb, n, g);
          ASSERT_EQ(r.forces, expected);
          if (!r.forces) {
            EXPECT_LE(std::abs(r.witness->first * sa - r.witness->second * sb), 6 * g);
          }
        }
}

TEST(SigmaRow, TorusKnots) {
  EXPECT_EQ(sigma_row(SignatureFunction(torus2(7))), (SigmaRow{-4, -2, -4, -6}));
  EXPECT_EQ(sigma_row(SignatureFunction(torus2(7))).sum7(), -12);
}

TEST(SelectAB, SmallCases) {
  for (long n = 1; n <= 3; ++n)
    for (long c : {0L, 50L}) {
      const SelectionCertificate cert = select_AB(n, CgTermBound{c}, default_basis());
      const Verdict v = verify_selection(cert);
      EXPECT_TRUE(v.valid) << "n=" << n << " C=" << c << ": " << v.reason;
      EXPECT_EQ(cert.checks.size(), static_cast<std::size_t>(n * ((n + 1) * (n + 1) - 1)));
      EXPECT_GT(std::abs(cert.sigma_A.sum7()), 6 * n);
      EXPECT_EQ(cert.base_reduced_dimension, 2u);
    }
  const SelectionCertificate one = select_AB(1, CgTermBound{0}, default_basis());
  EXPECT_EQ(one.A, KnotExpr::torus2(7));
  EXPECT_EQ(one.sigma_A.sum7(), -12);
  EXPECT_EQ(one.sigma_B.sum7(), -24);
}

TEST(SelectAB, ExhaustedBasis) {
  EXPECT_EQ(kind_of([] { select_AB(1, CgTermBound{0}, {KnotExpr::unknot()}); }), ErrorKind::SearchExhausted);
  SelectOptions opts;
  opts.max_multiplicity = 1;
  EXPECT_EQ(kind_of([&] { select_AB(3, CgTermBound{50}, default_basis(), opts); }), ErrorKind::SearchExhausted);
}

TEST(SelectAB, VerifierCatchesTampering) {
  const SelectionCertificate good = select_AB(2, CgTermBound{10}, default_basis());
  ASSERT_TRUE(verify_selection(good).valid);

  SelectionCertificate c = good;
  c.sigma_A.s13 += 2;
  EXPECT_FALSE(verify_selection(c).valid);

  c = good;
  c.checks.pop_back();
  EXPECT_FALSE(verify_selection(c).valid);

  c = good;
  c.checks.push_back(c.checks.front());
  EXPECT_FALSE(verify_selection(c).valid);

  c = good;
  c.checks.front().general_value += 1;
  EXPECT_FALSE(verify_selection(c).valid);

  c = good;
  c.C = 1000;
  EXPECT_FALSE(verify_selection(c).valid);

  c = good;
  c.B = KnotExpr::torus2(3);
  EXPECT_FALSE(verify_selection(c).valid);

  c = good;
  c.base = IntMatrix::from_rows({{1, 0}, {0, 1}});
  EXPECT_FALSE(verify_selection(c).valid);
}
