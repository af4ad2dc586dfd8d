#include <gtest/gtest.h>

#include "knotcord/obstructions.hpp"
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

LaurentPoly lp(std::initializer_list<std::pair<int, long>> terms) {
  std::map<int, Integer> m;
  for (auto [e, c] : terms) m[e] = c;
  return LaurentPoly(m);
}

// f(t) f(t^-1) up to a unit, as a Laurent polynomial.
LaurentPoly times_reciprocal(const IntPoly& f) {
  return (LaurentPoly::from_dense(f) * LaurentPoly::from_dense(poly::reciprocal(f), -poly::degree(f))).normalized();
}

}  // namespace

TEST(FoxMilnor, SixOne) {
  const LaurentPoly d = alexander(twist(2));
  EXPECT_EQ(d, lp({{-1, 2}, {0, -5}, {1, 2}}));
  const FoxMilnorResult r = fox_milnor(d);
  EXPECT_TRUE(r.pass);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(LaurentPoly::from_dense(*r.witness).to_string(), "2t - 1");
}

TEST(FoxMilnor, Controls) {
  EXPECT_TRUE(fox_milnor(LaurentPoly::one()).pass);
  EXPECT_FALSE(fox_milnor(alexander(torus2(3))).pass);
  EXPECT_FALSE(fox_milnor(lp({{-1, -1}, {0, 3}, {1, -1}})).pass);
  EXPECT_FALSE(fox_milnor(alexander(torus2(5))).pass);
  const FoxMilnorResult two = fox_milnor(lp({{-1, 2}, {0, -2}, {1, 2}}));
  EXPECT_FALSE(two.pass);
  EXPECT_NE(two.reason.find("square"), std::string::npos);
}

TEST(FoxMilnor, ProductsWithReciprocalPass) {
  Rng rng(51);
  for (int i = 0; i < 80; ++i) {
    IntPoly f;
    const long deg = rng.uniform(0, 5);
    for (long j = 0; j <= deg; ++j) f.emplace_back(rng.uniform(-4, 4));
    if (f.back() == 0) f.back() = 1;
    if (f.front() == 0) f.front() = -1;
    const LaurentPoly d = times_reciprocal(f);
    const FoxMilnorResult r = fox_milnor(d);
    ASSERT_TRUE(r.pass) << d.to_string() << ": " << r.reason;
    EXPECT_EQ(times_reciprocal(*r.witness), d) << d.to_string();
  }
}

TEST(FoxMilnor, SliceSumsPass) {
  Rng rng(52);
  for (int i = 0; i < 30; ++i) {
    const SeifertMatrix v = random_seifert(rng, static_cast<int>(rng.uniform(1, 3)));
    const SeifertMatrix s = connected_sum(v, mirror(v));
    EXPECT_TRUE(fox_milnor(alexander(s)).pass);
    EXPECT_TRUE(det_square_test(s));
  }
}

TEST(FoxMilnor, DegreeCap) {
  std::vector<SeifertMatrix> parts(7, torus2(5));
  EXPECT_EQ(kind_of([&] { fox_milnor(alexander(connected_sum(parts))); }), ErrorKind::DegreeTooLarge);
  EXPECT_TRUE(fox_milnor(alexander(connected_sum(parts)), 40).pass == false);
}

TEST(DetSquare, Examples) {
  EXPECT_TRUE(det_square_test(twist(2)));
  EXPECT_FALSE(det_square_test(torus2(3)));
  EXPECT_TRUE(det_square_test(unknot()));
}

TEST(G4Lower, Examples) {
  const LowerBound t7 = g4_lower(torus2(7));
  EXPECT_EQ(t7.value, 3);
  ASSERT_TRUE(t7.witness);
  EXPECT_EQ(std::abs(lt_signature(torus2(7), *t7.witness)), 6);
  EXPECT_EQ(g4_lower(pretzel({3, 5, 7})).value, 1);
  EXPECT_EQ(g4_lower(unknot()).value, 0);
  EXPECT_FALSE(g4_lower(unknot()).witness);
  EXPECT_EQ(g4_lower(twist(2)).value, 0);
}

TEST(G4Lower, NeverExceedsGenus) {
  Rng rng(53);
  for (int i = 0; i < 40; ++i) {
    const SeifertMatrix v = random_seifert(rng, static_cast<int>(rng.uniform(1, 4)));
    EXPECT_LE(g4_lower(v, default_angle_grid(12)).value, v.genus());
  }
}

TEST(CobordismLower, Examples) {
  EXPECT_EQ(cobordism_lower(torus2(3), unknot()).value, 1);
  EXPECT_EQ(cobordism_lower(torus2(7), torus2(3)).value, 2);
  EXPECT_EQ(cobordism_lower(torus2(3), inverse(torus2(3))).value, 2);
  EXPECT_EQ(cobordism_lower(pretzel({3, 5, 7}), reverse(pretzel({3, 5, 7}))).value, 0);
}

TEST(DUpper, Flavors) {
  const KnotExpr t7 = KnotExpr::torus2(7);
  EXPECT_EQ(d_upper(t7, DFlavor::Triangle).value, 6);
  EXPECT_EQ(d_upper(t7, DFlavor::Theorem1).value, 5);
  EXPECT_EQ(d_upper(t7, DFlavor::CorollaryMain).value, 5);
  DUpperOptions opts;
  opts.k = 2;
  const UpperBound ck = d_upper(t7, DFlavor::CorollaryK, opts);
  EXPECT_EQ(ck.value, 4);
  EXPECT_EQ(ck.assumptions.size(), 1u);
  const KnotExpr p = KnotExpr::pretzel({3, 5, 7, 9, 11});
  EXPECT_EQ(d_upper(p, DFlavor::CorollaryK, opts).value, 2);
}

TEST(DUpper, Preconditions) {
  EXPECT_EQ(kind_of([] { d_upper(KnotExpr::unknot(), DFlavor::Theorem1); }), ErrorKind::UnknotInput);
  EXPECT_EQ(d_upper(KnotExpr::unknot(), DFlavor::Triangle).value, 0);
  EXPECT_EQ(kind_of([] { d_upper(KnotExpr::twist(2), DFlavor::CorollaryMain); }), ErrorKind::HypothesisUnverified);
  DUpperOptions opts;
  opts.k = 4;
  EXPECT_EQ(kind_of([&] { d_upper(KnotExpr::torus2(7), DFlavor::CorollaryK, opts); }), ErrorKind::BadParameter);
  opts.k = 0;
  EXPECT_EQ(kind_of([&] { d_upper(KnotExpr::torus2(7), DFlavor::CorollaryK, opts); }), ErrorKind::BadParameter);
  // Trivial Alexander polynomial: a genus-one Seifert form of an Alexander-polynomial-one knot.
  const KnotExpr trivial = KnotExpr::literal(IntMatrix::from_rows({{0, 1}, {0, 0}}));
  EXPECT_EQ(kind_of([&] { d_upper(trivial, DFlavor::Theorem1); }), ErrorKind::UnknotInput);
  DUpperOptions forced;
  forced.assume_nontrivial = true;
  const UpperBound u = d_upper(trivial, DFlavor::Theorem1, forced);
  EXPECT_EQ(u.value, 1);
  EXPECT_FALSE(u.assumptions.empty());
}

TEST(Reconcile, Examples) {
  const auto p = reconcile(KnotExpr::pretzel({3, 5, 7}));
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0].quantity, Quantity::G4);
  EXPECT_EQ(p[0].lower, 1);
  EXPECT_EQ(p[0].upper, 1);
  EXPECT_TRUE(p[0].tight);
  EXPECT_EQ(p[1].quantity, Quantity::CobordismDistance);
  EXPECT_EQ(p[1].lower, 0);
  EXPECT_EQ(p[1].upper, 1);
  const auto t = reconcile(KnotExpr::torus2(7));
  EXPECT_EQ(t[0].lower, 3);
  EXPECT_TRUE(t[0].tight);
  EXPECT_EQ(t[1].upper, 5);
  const auto u = reconcile(KnotExpr::unknot());
  EXPECT_TRUE(u[0].tight);
  EXPECT_EQ(u[1].upper, 0);
}

TEST(Reconcile, LowerNeverExceedsUpper) {
  Rng rng(54);
  const auto grid = default_angle_grid(12);
  for (int i = 0; i < 40; ++i) {
    const KnotExpr k = random_knot_expr(rng, 4);
    for (const auto& r : reconcile(k, grid)) {
      EXPECT_LE(r.lower, r.upper) << to_string(k);
      EXPECT_EQ(r.tight, r.lower == r.upper);
    }
  }
}

TEST(Distance, Examples) {
  const BoundReport r = distance_report(KnotExpr::torus2(7), KnotExpr::torus2(3));
  EXPECT_EQ(r.lower, 2);
  EXPECT_EQ(r.upper, 4);
  const BoundReport s = distance_report(KnotExpr::torus2(3), KnotExpr::torus2(3));
  EXPECT_EQ(s.lower, 0);
  EXPECT_EQ(s.upper, 2);
}
