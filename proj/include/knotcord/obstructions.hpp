#pragma once

// Four-genus and cobordism-distance bounds from signatures and genus
// bookkeeping, plus the Fox-Milnor and determinant slice obstructions.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "knotcord/angle.hpp"
#include "knotcord/error.hpp"
#include "knotcord/expr.hpp"
#include "knotcord/factor.hpp"
#include "knotcord/invariants.hpp"

namespace knotcord {

inline constexpr int kFactorDegreeCap = 24;

struct FoxMilnorResult {
  bool pass = false;
  /// When passing: f with poly = +-t^k f(t) f(1/t).
  std::optional<IntPoly> witness;
  /// Irreducible factor that breaks the symmetry, or the content, on failure.
  std::string reason;
};

/// Decides whether poly = +-t^k f(t) f(t^-1) for an integer polynomial f.
/// Self-reciprocal irreducible factors need even multiplicity; the others
/// must pair up with their reciprocals.
inline FoxMilnorResult fox_milnor(const LaurentPoly& poly, int degree_cap = kFactorDegreeCap) {
  if (poly.is_zero()) throw Error(ErrorKind::BadParameter, "zero polynomial");
  if (poly.span() > degree_cap)
    throw Error(ErrorKind::DegreeTooLarge,
                "degree " + std::to_string(poly.span()) + " exceeds the factorization cap " + std::to_string(degree_cap));
  FoxMilnorResult result;
  const Factorization fac = factor(poly.dense());
  const Integer c = abs(fac.unit_content);
  if (!mpz_perfect_square_p(c.get_mpz_t())) {
    result.reason = "content " + c.get_str() + " is not a square";
    return result;
  }
  Integer root;
  mpz_sqrt(root.get_mpz_t(), c.get_mpz_t());
  IntPoly f{root};

  auto multiplicity = [&fac](const IntPoly& h) {
    for (const auto& [g, m] : fac.factors)
      if (g == h) return m;
    return 0;
  };
  for (const auto& [h, m] : fac.factors) {
    const IntPoly star = poly::primitive_part(poly::reciprocal(h));
    const auto text = [](const IntPoly& p) { return LaurentPoly::from_dense(p).to_string(); };
    if (star == h) {
      if (m % 2 != 0) {
        result.reason = "self-reciprocal factor " + text(h) + " has odd multiplicity " + std::to_string(m);
        return result;
      }
      f = poly::mul(f, poly::pow(h, static_cast<unsigned>(m / 2)));
      continue;
    }
    if (multiplicity(star) != m) {
      result.reason = "factor " + text(h) + " is not matched by its reciprocal " + text(star);
      return result;
    }
    // Of each pair keep the member with the larger leading coefficient, so
    // 2t^2 - 5t + 2 gives 2t - 1.
    const Integer lh = abs(h.back()), ls = abs(star.back());
    if (lh > ls || (lh == ls && h < star)) f = poly::mul(f, poly::pow(h, static_cast<unsigned>(m)));
  }
  result.pass = true;
  result.witness = std::move(f);
  return result;
}

/// Necessary condition for sliceness: the knot determinant is a square.
inline bool det_square_test(const SeifertMatrix& v) {
  const Integer d = determinant(v);
  return mpz_perfect_square_p(d.get_mpz_t()) != 0;
}

struct LowerBound {
  int value = 0;
  /// First grid angle attaining the value; absent when the value is 0.
  std::optional<RationalAngle> witness;
  std::vector<RationalAngle> skipped_jumps;
};

/// max |sigma_x| / 2 over the non-jump grid angles. Stops early once the
/// bound reaches the surface genus, which it can never exceed.
inline LowerBound g4_lower(const SignatureFunction& f, const std::vector<RationalAngle>& grid) {
  LowerBound result;
  for (const auto& x : grid) {
    const auto s = f.try_at(x);
    if (!s) {
      result.skipped_jumps.push_back(x);
      continue;
    }
    const int v = std::abs(*s) / 2;
    if (v > result.value) {
      result.value = v;
      result.witness = x;
      if (v >= f.genus()) break;
    }
  }
  return result;
}

inline LowerBound g4_lower(const SeifertMatrix& v, const std::vector<RationalAngle>& grid = default_angle_grid()) {
  return g4_lower(SignatureFunction(v), grid);
}

/// Lower bound on d(K, J) = g4(K # -J).
inline LowerBound cobordism_lower(const SeifertMatrix& k, const SeifertMatrix& j,
                                  const std::vector<RationalAngle>& grid = default_angle_grid()) {
  return g4_lower(connected_sum(k, inverse(j)), grid);
}

enum class DFlavor { Triangle, Theorem1, CorollaryMain, CorollaryK };

inline std::string_view to_string(DFlavor f) {
  switch (f) {
    case DFlavor::Triangle: return "triangle";
    case DFlavor::Theorem1: return "theorem1";
    case DFlavor::CorollaryMain: return "corollary_main";
    case DFlavor::CorollaryK: return "corollary_k";
  }
  return "unknown";
}

struct UpperBound {
  int value = 0;
  std::string provenance;
  std::vector<std::string> assumptions;
};

struct DUpperOptions {
  /// Number of disjoint curves forming a split link (corollary_k only).
  int k = 0;
  /// Treat the knot as nontrivial without the Alexander polynomial check.
  bool assume_nontrivial = false;
  std::vector<RationalAngle> grid = default_angle_grid();
};

namespace detail {

// g3 = g4 = g is certified when the signature bound meets the surface genus.
inline int certified_equal_genus(const KnotExpr& k, const SignatureFunction& f, const std::vector<RationalAngle>& grid,
                                 std::string_view flavor) {
  const int g3 = g3_upper(k);
  const int lower = g4_lower(f, grid).value;
  if (g3 == 0 || lower != g3)
    throw Error(ErrorKind::HypothesisUnverified,
                std::string(flavor) + " needs g3 = g4 != 0; signatures only show " + std::to_string(lower) +
                    " <= g4 <= g3 <= " + std::to_string(g3));
  return g3;
}

}  // namespace detail

/// Upper bound on d(K, K^r). Strict inequalities come back as "<= bound - 1".
inline UpperBound d_upper(const KnotExpr& k, DFlavor flavor, const DUpperOptions& opts = {}) {
  const int g3 = g3_upper(k);
  UpperBound out;
  switch (flavor) {
    case DFlavor::Triangle:
      out.value = 2 * g3;
      out.provenance = "triangle: d(K,K^r) <= g4(K) + g4(K^r) <= 2 g3";
      return out;
    case DFlavor::Theorem1: {
      bool nontrivial = opts.assume_nontrivial;
      if (!nontrivial && g3 > 0) nontrivial = alexander(eval_expr(k)) != LaurentPoly::one();
      if (g3 == 0 || !nontrivial)
        throw Error(ErrorKind::UnknotInput, "theorem1 needs a nontrivial knot (positive genus, Alexander polynomial != 1)");
      out.value = 2 * g3 - 1;
      out.provenance = "theorem1: d(K,K^r) < 2 g3";
      if (opts.assume_nontrivial) out.assumptions.push_back("knot asserted nontrivial by caller");
      return out;
    }
    case DFlavor::CorollaryMain: {
      const int g = detail::certified_equal_genus(k, SignatureFunction(eval_expr(k)), opts.grid, "corollary_main");
      out.value = 2 * g - 1;
      out.provenance = "corollary_main: g3 = g4 != 0 gives d(K,K^r) < 2 g4";
      return out;
    }
    case DFlavor::CorollaryK: {
      const int g = detail::certified_equal_genus(k, SignatureFunction(eval_expr(k)), opts.grid, "corollary_k");
      if (opts.k < 1 || opts.k > g)
        throw Error(ErrorKind::BadParameter, "corollary_k needs 1 <= k <= g4 = " + std::to_string(g));
      out.value = 2 * g - opts.k;
      out.provenance = "corollary_k: d(K,K^r) <= 2 g4 - k";
      out.assumptions.push_back(std::to_string(opts.k) +
                                " disjoint curves on the surface form a split link (asserted by caller)");
      return out;
    }
  }
  return out;
}

enum class Quantity { G4, CobordismDistance };

inline std::string_view to_string(Quantity q) { return q == Quantity::G4 ? "g4" : "cobordism_distance"; }

struct BoundReport {
  std::string subject;
  Quantity quantity = Quantity::G4;
  int lower = 0;
  std::optional<RationalAngle> lower_witness;
  std::string lower_provenance;
  int upper = 0;
  std::string upper_provenance;
  std::vector<std::string> assumptions;
  bool tight = false;
};

namespace detail {

inline void check_consistent(BoundReport& r) {
  if (r.lower > r.upper)
    throw Error(ErrorKind::InconsistentBounds, std::string(to_string(r.quantity)) + " of " + r.subject + ": lower " +
                                                   std::to_string(r.lower) + " > upper " + std::to_string(r.upper));
  r.tight = r.lower == r.upper;
}

}  // namespace detail

/// Bounds for g4(K) and d(K, K^r).
inline std::vector<BoundReport> reconcile(const KnotExpr& k, const std::vector<RationalAngle>& grid = default_angle_grid()) {
  const SeifertMatrix v = eval_expr(k);
  const SignatureFunction f(v);
  const std::string subject = to_string(k);
  const int g3 = g3_upper(k);

  BoundReport g4;
  g4.subject = subject;
  g4.quantity = Quantity::G4;
  const LowerBound lower = g4_lower(f, grid);
  g4.lower = lower.value;
  g4.lower_witness = lower.witness;
  g4.lower_provenance = lower.witness ? "|sigma_" + lower.witness->to_string() + "| / 2" : "trivial";
  g4.upper = g3;
  g4.upper_provenance = "genus of constructed Seifert surface";
  detail::check_consistent(g4);

  BoundReport d;
  d.subject = subject;
  d.quantity = Quantity::CobordismDistance;
  const LowerBound dl = cobordism_lower(v, reverse(v), grid);
  d.lower = dl.value;
  d.lower_witness = dl.witness;
  d.lower_provenance = dl.witness ? "|sigma_" + dl.witness->to_string() + "(K # -K^r)| / 2"
                                  : "signatures of K and K^r agree";
  UpperBound best = d_upper(k, DFlavor::Triangle);
  DUpperOptions opts;
  opts.grid = grid;
  for (DFlavor flavor : {DFlavor::Theorem1, DFlavor::CorollaryMain}) {
    try {
      UpperBound u = d_upper(k, flavor, opts);
      if (u.value < best.value) best = std::move(u);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnknotInput && e.kind() != ErrorKind::HypothesisUnverified) throw;
    }
  }
  d.upper = best.value;
  d.upper_provenance = best.provenance;
  d.assumptions = best.assumptions;
  detail::check_consistent(d);
  return {g4, d};
}

/// Bounds for d(K, J).
inline BoundReport distance_report(const KnotExpr& k, const KnotExpr& j,
                                   const std::vector<RationalAngle>& grid = default_angle_grid()) {
  BoundReport r;
  r.subject = "sum(" + to_string(k) + ", inv(" + to_string(j) + "))";
  r.quantity = Quantity::CobordismDistance;
  const LowerBound lower = cobordism_lower(eval_expr(k), eval_expr(j), grid);
  r.lower = lower.value;
  r.lower_witness = lower.witness;
  r.lower_provenance = lower.witness ? "|sigma_" + lower.witness->to_string() + "(K) - sigma(J)| / 2" : "trivial";
  r.upper = g3_upper(k) + g3_upper(j);
  r.upper_provenance = "triangle: d(K,J) <= g4(K) + g4(J) <= g3(K) + g3(J)";
  detail::check_consistent(r);
  return r;
}

}  // namespace knotcord
