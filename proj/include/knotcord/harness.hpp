#pragma once

// Mechanical re-check of the computable claims: pretzel signatures and
// genera, surgery certificates for K # -K^r, reversal invisibility of
// signatures, Fox-Milnor audits of knots asserted slice, the (A, B)
// selection, and bound consistency. Deterministic for fixed options.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "knotcord/constructions.hpp"
#include "knotcord/obstructions.hpp"
#include "knotcord/random.hpp"

namespace knotcord {

struct Claim {
  Claim(std::string id_, std::string statement_) : id(std::move(id_)), statement(std::move(statement_)) {}

  std::string id;
  std::string statement;
  bool passed = true;
  /// Number of instances checked.
  long checked = 0;
  /// First failing instance, if any.
  std::string detail;

  void fail(std::string why) {
    if (passed) detail = std::move(why);
    passed = false;
  }
};

struct HarnessReport {
  std::vector<Claim> claims;

  bool all_passed() const {
    for (const auto& c : claims)
      if (!c.passed) return false;
    return true;
  }

  const Claim* first_failure() const {
    for (const auto& c : claims)
      if (!c.passed) return &c;
    return nullptr;
  }
};

struct HarnessOptions {
  /// Builds the pretzel form; replaceable to check that the harness notices
  /// a wrong convention.
  std::function<IntMatrix(std::span<const long>)> pretzel_builder = [](std::span<const long> p) {
    return pretzel_entries(p);
  };
  std::optional<std::vector<KnotExpr>> basis;
  std::uint64_t seed = 20240611;
  int theorem1_samples = 60;
  int reversal_samples = 100;
  int fox_milnor_samples = 50;
  std::vector<int> pretzel_strands = {3, 5, 7};
};

namespace detail {

inline std::string params_text(std::span<const long> p) { return "pretzel(" + join_params(p) + ")"; }

// Odd-positive pretzels P(p_1..p_n), p_i in {1,3,5,7,9}, in lexicographic order.
template <class Visit>
void for_each_positive_pretzel(int strands, Visit&& visit) {
  std::vector<long> p(static_cast<std::size_t>(strands), 1);
  for (;;) {
    visit(std::span<const long>(p));
    std::size_t i = p.size();
    while (i > 0 && p[i - 1] == 9) p[--i] = 1;
    if (i == 0) return;
    p[i - 1] += 2;
  }
}

inline void pretzel_section(const HarnessOptions& opts, HarnessReport& report) {
  Claim sig{"pretzel.signature", "sigma_1/2 of an odd-positive pretzel with 2k+1 strands is 2k"};
  Claim genus{"pretzel.genus", "g4 lower bound of an odd-positive pretzel with 2k+1 strands is k = surface genus"};
  Claim det{"pretzel.determinant", "3-strand pretzel determinant is p1 p2 + p2 p3 + p3 p1"};
  Claim dom{"pretzel.diagonal_dominance",
            "V + V^T of an odd-positive pretzel is irreducibly diagonally dominant with positive diagonal"};
  const std::vector<RationalAngle> grid = default_angle_grid();
  for (int strands : opts.pretzel_strands) {
    const int k = strands / 2;
    for_each_positive_pretzel(strands, [&](std::span<const long> p) {
      const std::string name = params_text(p);
      const IntMatrix e = opts.pretzel_builder(p);
      const IntMatrix sym = e + e.transpose();
      if (strands == 3) {
        ++det.checked;
        const Integer expected = p[0] * p[1] + p[1] * p[2] + p[2] * p[0];
        const Integer got = abs(determinant(sym));
        if (got != expected) det.fail(name + ": determinant " + got.get_str() + ", expected " + expected.get_str());
      }
      // Interior rows of P(1,...,1) are only weakly dominant; tridiagonal with
      // nonzero off-diagonal and one strict row is enough for definiteness.
      ++dom.checked;
      bool strict = false;
      for (std::size_t i = 0; i < sym.rows(); ++i) {
        Integer off = 0;
        for (std::size_t j = 0; j < sym.cols(); ++j)
          if (j != i) off += abs(sym(i, j));
        if (sym(i, i) <= 0 || sym(i, i) < off || (i + 1 < sym.rows() && sym(i, i + 1) == 0)) {
          dom.fail(name + ": row " + std::to_string(i) + " not dominant");
          break;
        }
        strict = strict || sym(i, i) > off;
      }
      if (!strict) dom.fail(name + ": no strictly dominant row");
      ++sig.checked;
      ++genus.checked;
      try {
        const SignatureFunction f(validate(e, name));
        const int s = f.at(RationalAngle(1, 2));
        if (s != 2 * k) sig.fail(name + ": sigma_1/2 = " + std::to_string(s) + ", expected " + std::to_string(2 * k));
        const int lower = g4_lower(f, grid).value;
        if (lower != k || f.genus() != k)
          genus.fail(name + ": g4 lower " + std::to_string(lower) + ", genus " + std::to_string(f.genus()) +
                     ", expected " + std::to_string(k));
      } catch (const Error& err) {
        sig.fail(name + ": " + err.what());
        genus.fail(name + ": " + err.what());
      }
    });
  }
  report.claims.push_back(std::move(sig));
  report.claims.push_back(std::move(genus));
  report.claims.push_back(std::move(det));
  report.claims.push_back(std::move(dom));
}

// Up to `count` grid angles at which neither form jumps.
inline std::vector<RationalAngle> common_regular_angles(Rng& rng, const SignatureFunction& a, const SignatureFunction& b,
                                                        std::size_t count) {
  const std::vector<RationalAngle> grid = default_angle_grid();
  std::vector<RationalAngle> out;
  std::vector<bool> used(grid.size(), false);
  std::size_t attempts = 0;
  while (out.size() < count && attempts < 20 * grid.size()) {
    ++attempts;
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(grid.size()) - 1));
    if (used[i]) continue;
    used[i] = true;
    if (!a.is_jump(grid[i]) && !b.is_jump(grid[i])) out.push_back(grid[i]);
  }
  return out;
}

inline void theorem1_section(const HarnessOptions& opts, HarnessReport& report) {
  Claim cert{"theorem1.certificates",
             "for random K of genus g <= 4 and primitive alpha, (alpha, alpha) has framing 0 on V + (-V^T) and "
             "surgery leaves a valid form of dimension 4g - 2 whose signatures differ by at most 2"};
  Rng rng(opts.seed ^ 0x7468316dULL);
  for (int i = 0; i < opts.theorem1_samples; ++i) {
    const KnotExpr k = random_knot_expr(rng, 4);
    const int g = g3_upper(k);
    const IntVector alpha = random_primitive(rng, 2 * static_cast<std::size_t>(g));
    const std::string name = to_string(k);
    ++cert.checked;
    try {
      const Theorem1Certificate c = theorem1_certificate(k, alpha);
      if (c.surgery_class.framing != 0) cert.fail(name + ": nonzero framing");
      if (c.reduced.dimension() != static_cast<std::size_t>(4 * g - 2))
        cert.fail(name + ": reduced dimension " + std::to_string(c.reduced.dimension()));
      if (c.d_upper != 2 * g - 1) cert.fail(name + ": wrong conclusion");
      const SignatureFunction fw(c.sum_matrix), fr(c.reduced);
      const auto angles = common_regular_angles(rng, fw, fr, 20);
      if (angles.size() < 20) cert.fail(name + ": fewer than 20 regular angles");
      for (const auto& x : angles)
        if (std::abs(fw.at(x) - fr.at(x)) > 2) {
          cert.fail(name + ": signature moved by more than 2 at " + x.to_string());
          break;
        }
    } catch (const Error& err) {
      cert.fail(name + ": " + err.what());
    }
  }
  report.claims.push_back(std::move(cert));
}

inline void reversal_section(const HarnessOptions& opts, HarnessReport& report) {
  Claim sig{"reversal.signature", "sigma_x(V) = sigma_x(V^T) at 20 regular angles for random V of dimension <= 10"};
  Claim cob{"reversal.cobordism_lower", "signature lower bound for d(K, K^r) is 0"};
  Rng rng(opts.seed ^ 0x72657673ULL);
  for (int i = 0; i < opts.reversal_samples; ++i) {
    const SeifertMatrix v = random_seifert(rng, static_cast<int>(rng.uniform(1, 5)));
    const SeifertMatrix vr = reverse(v);
    const SignatureFunction f(v), fr(vr);
    ++sig.checked;
    for (const auto& x : common_regular_angles(rng, f, fr, 20))
      if (f.at(x) != fr.at(x)) {
        sig.fail("sample " + std::to_string(i) + " at " + x.to_string());
        break;
      }
    ++cob.checked;
    const LowerBound lb = cobordism_lower(v, vr);
    if (lb.value != 0) cob.fail("sample " + std::to_string(i) + ": lower bound " + std::to_string(lb.value));
  }
  report.claims.push_back(std::move(sig));
  report.claims.push_back(std::move(cob));
}

inline void fox_milnor_section(const HarnessOptions& opts, HarnessReport& report) {
  Claim metabolic{"fox_milnor.slice_sums",
                  "K # -K, K # -K^r and (K # J) # -(K # J) pass Fox-Milnor and the determinant test"};
  Claim controls{"fox_milnor.controls",
                 "trefoil and pretzel(3,5,7) fail; 2t - 5 + 2t^-1 passes with f = 2t - 1; unknot passes"};
  Claim consistent{"fox_milnor.det_square_consistency", "Fox-Milnor pass implies a square determinant"};
  Rng rng(opts.seed ^ 0x666d696cULL);

  auto audit = [&](const SeifertMatrix& v, bool expect_slice, const std::string& name) {
    const FoxMilnorResult fm = fox_milnor(alexander(v));
    const bool square = det_square_test(v);
    ++consistent.checked;
    if (fm.pass && !square) consistent.fail(name + ": passes Fox-Milnor with non-square determinant");
    if (expect_slice) {
      ++metabolic.checked;
      if (!fm.pass || !square) metabolic.fail(name + ": " + (fm.pass ? "non-square determinant" : fm.reason));
    }
  };

  for (int i = 0; i < opts.fox_milnor_samples; ++i) {
    const SeifertMatrix v = random_seifert(rng, static_cast<int>(rng.uniform(1, 3)));
    const std::string name = "sample " + std::to_string(i);
    audit(v, false, name + " alone");
    audit(connected_sum(v, inverse(v)), true, name + " # -K");
    audit(connected_sum(v, inverse(reverse(v))), true, name + " # -K^r");
    const KnotExpr k = random_knot_expr(rng, 2), j = random_knot_expr(rng, 2);
    const SeifertMatrix kj = eval_expr(KnotExpr::sum(k, j));
    audit(connected_sum(kj, inverse(kj)), true, "(" + to_string(k) + " # " + to_string(j) + ") # -(...)");
  }

  auto check_control = [&](const SeifertMatrix& v, bool expect_pass, const std::string& name) {
    ++controls.checked;
    audit(v, false, name);
    if (fox_milnor(alexander(v)).pass != expect_pass) controls.fail(name + ": unexpected verdict");
  };
  check_control(torus2(3), false, "trefoil");
  check_control(pretzel({3, 5, 7}), false, "pretzel(3,5,7)");
  check_control(unknot(), true, "unknot");
  ++controls.checked;
  const FoxMilnorResult six = fox_milnor(LaurentPoly({{-1, Integer(2)}, {0, Integer(-5)}, {1, Integer(2)}}));
  if (!six.pass || !six.witness || *six.witness != IntPoly{Integer(-1), Integer(2)})
    controls.fail("2t - 5 + 2t^-1: expected pass with f = 2t - 1");

  report.claims.push_back(std::move(metabolic));
  report.claims.push_back(std::move(controls));
  report.claims.push_back(std::move(consistent));
}

inline void selection_section(const HarnessOptions& opts, HarnessReport& report) {
  const std::vector<KnotExpr> basis = opts.basis ? *opts.basis : default_basis();
  for (long n : {1L, 2L, 3L})
    for (long c : {0L, 50L}) {
      Claim claim{"select_ab.n" + std::to_string(n) + "_c" + std::to_string(c),
                  "A and B exist making both signature inequalities fail for every g < " + std::to_string(n) +
                      " with CG bound " + std::to_string(c) + ", and the certificate re-verifies"};
      claim.checked = 1;
      try {
        const SelectionCertificate cert = select_AB(n, CgTermBound{c}, basis);
        const Verdict v = verify_selection(cert);
        if (!v.valid) claim.fail("verification failed: " + v.reason);
        if (n == 1 && c == 0 && !opts.basis &&
            (cert.sigma_A.sum7() != -12 || cert.sigma_B.sum7() != -24 || !(cert.A == KnotExpr::torus2(7))))
          claim.fail("expected A = torus(2,7) with sums -12 and -24");
      } catch (const Error& err) {
        claim.fail(err.what());
      }
      report.claims.push_back(std::move(claim));
    }
}

inline void bounds_section(const HarnessOptions& opts, HarnessReport& report) {
  Claim pretz{"bounds.pretzel", "pretzel reports: g4 tight at k and d(K, K^r) <= 2k - 1"};
  Claim cons{"bounds.consistency", "reconciled lower bounds never exceed upper bounds"};
  auto run = [&](const KnotExpr& k) {
    ++cons.checked;
    try {
      return std::optional(reconcile(k));
    } catch (const Error& err) {
      cons.fail(to_string(k) + ": " + err.what());
      return std::optional<std::vector<BoundReport>>();
    }
  };
  for_each_positive_pretzel(3, [&](std::span<const long> p) {
    const KnotExpr k = KnotExpr::pretzel(std::vector<long>(p.begin(), p.end()));
    ++pretz.checked;
    const auto r = run(k);
    if (!r) return;
    if (!(*r)[0].tight || (*r)[0].lower != 1 || (*r)[1].upper != 1) pretz.fail(to_string(k) + ": not tight at 1");
  });
  for (const auto& k : {KnotExpr::pretzel({3, 5, 7, 9, 11}), KnotExpr::pretzel({1, 1, 1, 1, 1, 1, 1})}) {
    ++pretz.checked;
    const int g = g3_upper(k);
    const auto r = run(k);
    if (r && (!(*r)[0].tight || (*r)[0].lower != g || (*r)[1].upper != 2 * g - 1))
      pretz.fail(to_string(k) + ": expected tight g4 and d upper " + std::to_string(2 * g - 1));
  }
  Rng rng(opts.seed ^ 0x626e6473ULL);
  for (int i = 0; i < 40; ++i) run(random_knot_expr(rng, 4));
  for (long q : {3L, 5L, 7L, 9L}) run(KnotExpr::torus2(q));
  run(KnotExpr::unknot());
  report.claims.push_back(std::move(pretz));
  report.claims.push_back(std::move(cons));
}

}  // namespace detail

inline HarnessReport verify_paper(const HarnessOptions& opts = {}) {
  HarnessReport report;
  detail::pretzel_section(opts, report);
  detail::theorem1_section(opts, report);
  detail::reversal_section(opts, report);
  detail::fox_milnor_section(opts, report);
  detail::selection_section(opts, report);
  detail::bounds_section(opts, report);
  return report;
}

}  // namespace knotcord
