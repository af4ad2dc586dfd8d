#pragma once

// Algebraic surgery on Seifert forms, the K # -K^r surgery certificate, and
// the signature inequalities used to pick the knots A and B tied into the
// bands of K(A, B).

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotcord/angle.hpp"
#include "knotcord/error.hpp"
#include "knotcord/expr.hpp"
#include "knotcord/invariants.hpp"
#include "knotcord/lattice.hpp"
#include "knotcord/seifert.hpp"

namespace knotcord {

struct SurgeryClass {
  IntVector vector;
  /// vector^T W vector
  Integer framing;
};

/// Checks shape and primitivity and computes the framing.
inline SurgeryClass make_surgery_class(const SeifertMatrix& w, IntVector z) {
  if (z.size() != w.dimension())
    throw Error(ErrorKind::DimensionMismatch, "class has length " + std::to_string(z.size()) + ", form has dimension " +
                                                  std::to_string(w.dimension()));
  const Integer c = content(z);
  if (c != 1) throw Error(ErrorKind::ImprimitiveClass, "class has content " + c.get_str() + ", expected 1");
  const Integer framing = bilinear(w.entries(), z, z);
  return {std::move(z), framing};
}

/// Surgery along a zero-framed primitive class z. Let Omega = W - W^T and pick
/// y with z.Omega.y = 1; the Omega-orthogonal complement of span(z, y) is a
/// unimodular lattice of rank dim - 2 and the result is W restricted to it.
inline SeifertMatrix surgery_reduce(const SeifertMatrix& w, const SurgeryClass& cls) {
  const SurgeryClass z = make_surgery_class(w, cls.vector);
  if (z.framing != 0) throw Error(ErrorKind::NonzeroFraming, "framing is " + z.framing.get_str() + ", expected 0");
  const std::size_t n = w.dimension();
  const IntMatrix omega = w.intersection_form();

  // u = z^T Omega is primitive because Omega is unimodular.
  const IntVector u = multiply(omega.transpose(), z.vector);
  const IntVector y = bezout_vector(u);
  assert(dot(u, y) == 1);

  std::vector<IntVector> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // P(e_i) = e_i - (z.Omega.e_i) y + (y.Omega.e_i) z
    const Integer zi = u[i];
    Integer yi = 0;
    for (std::size_t k = 0; k < n; ++k) yi += y[k] * omega(k, i);
    IntVector v(n, Integer(0));
    v[i] = 1;
    for (std::size_t k = 0; k < n; ++k) v[k] += yi * z.vector[k] - zi * y[k];
    images.push_back(std::move(v));
  }
  const std::vector<IntVector> basis = lattice_basis(std::move(images));
  assert(basis.size() + 2 == n);

  IntMatrix r(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) r(i, j) = bilinear(w.entries(), basis[i], basis[j]);
  return validate(std::move(r), "surgery(" + w.provenance() + ")");
}

inline SeifertMatrix surgery_reduce(const SeifertMatrix& w, IntVector z) {
  return surgery_reduce(w, make_surgery_class(w, std::move(z)));
}

struct Theorem1Certificate {
  KnotExpr input;
  int genus = 0;
  /// V + (-V^T), the form of F # F* bounded by K # -K^r.
  SeifertMatrix sum_matrix;
  /// (alpha, alpha)
  SurgeryClass surgery_class;
  SeifertMatrix reduced;
  /// d(K, K^r) <= 2g - 1
  int d_upper = 0;
};

/// Surgery of F # F* along the band sum of alpha and its copy alpha* on F*.
inline Theorem1Certificate theorem1_certificate(const KnotExpr& k, const IntVector& alpha) {
  const SeifertMatrix v = eval_expr(k);
  const int g = v.genus();
  if (g == 0) throw Error(ErrorKind::UnknotInput, "the surgery bound needs a surface of positive genus");
  if (alpha.size() != v.dimension())
    throw Error(ErrorKind::DimensionMismatch,
                "alpha has length " + std::to_string(alpha.size()) + ", expected " + std::to_string(v.dimension()));
  if (content(alpha) != 1) throw Error(ErrorKind::ImprimitiveClass, "alpha is not primitive");

  Theorem1Certificate cert;
  cert.input = k;
  cert.genus = g;
  cert.sum_matrix = connected_sum(v, inverse(reverse(v)));
  IntVector z(alpha);
  z.insert(z.end(), alpha.begin(), alpha.end());
  cert.surgery_class = make_surgery_class(cert.sum_matrix, std::move(z));
  // alpha^T V alpha - alpha^T V^T alpha vanishes identically.
  if (cert.surgery_class.framing != 0)
    throw Error(ErrorKind::NonzeroFraming, "framing of (alpha, alpha) is " + cert.surgery_class.framing.get_str());
  cert.reduced = surgery_reduce(cert.sum_matrix, cert.surgery_class);
  cert.d_upper = 2 * g - 1;
  return cert;
}

/// Every Casson-Gordon sum over the n characters is assumed to lie in [-nC, nC].
struct CgTermBound {
  long C = 0;
};

struct Thm12Witness {
  long a = 0;
  long b = 0;
  long s = 0;
};

struct Thm12Result {
  bool forces = false;
  /// An (a, b, s) satisfying the inequality, when it does not force.
  std::optional<Thm12Witness> witness;
};

namespace detail {

inline void check_obstruction_args(long n, long g) {
  if (n < 1 || g < 0 || g >= n)
    throw Error(ErrorKind::BadParameter,
                "need 0 <= g < n, got n = " + std::to_string(n) + ", g = " + std::to_string(g));
}

// |s + L| > 4g for every s in [-m, m] iff the interval [L - m, L + m] misses [-4g, 4g].
inline bool thm12_row_forces(long center, long m, long g) { return center - m > 4 * g || center + m < -4 * g; }

}  // namespace detail

/// Whether |s + 2a sigA + 2b sigB| > 4g for all admissible (a, b) and all
/// s in [-nC, nC], which rules out g4(nK(A,B)) = g.
inline Thm12Result thm12_obstruction(long sig_a13, long sig_b13, long n, long g, CgTermBound cg) {
  detail::check_obstruction_args(n, g);
  if (cg.C < 0) throw Error(ErrorKind::BadParameter, "CG bound must be nonnegative");
  const long m = n * cg.C;
  for (long b = 0; b <= n; ++b)
    for (long a = 0; a <= n; ++a) {
      if (a == 0 && b == 0) continue;
      const long center = 2 * a * sig_a13 + 2 * b * sig_b13;
      if (!detail::thm12_row_forces(center, m, g))
        return {false, Thm12Witness{a, b, std::clamp(-center, -m, m)}};
    }
  return {true, std::nullopt};
}

struct GeneralResult {
  bool forces = false;
  std::optional<std::pair<long, long>> witness;
};

/// Whether |a sumA - b sumB| > 6g for all admissible (a, b), which rules out
/// g4(n(K(A,B) # -K(A,B)^r)) = g.
inline GeneralResult thm_general_obstruction(long sum_a, long sum_b, long n, long g) {
  detail::check_obstruction_args(n, g);
  for (long b = 0; b <= n; ++b)
    for (long a = 0; a <= n; ++a) {
      if (a == 0 && b == 0) continue;
      if (std::abs(a * sum_a - b * sum_b) <= 6 * g) return {false, std::pair{a, b}};
    }
  return {true, std::nullopt};
}

/// sigma at 1/3, 1/7, 2/7, 3/7.
struct SigmaRow {
  long s13 = 0;
  long s17 = 0;
  long s27 = 0;
  long s37 = 0;
  long sum7() const { return s17 + s27 + s37; }
  friend bool operator==(const SigmaRow&, const SigmaRow&) = default;
};

inline SigmaRow sigma_row(const SignatureFunction& f) {
  return {f.at(RationalAngle(1, 3)), f.at(RationalAngle(1, 7)), f.at(RationalAngle(2, 7)), f.at(RationalAngle(3, 7))};
}

struct CheckRow {
  long g = 0;
  long a = 0;
  long b = 0;
  /// 2a sigma_1/3(A) + 2b sigma_1/3(B)
  long thm12_center = 0;
  bool thm12_forces = false;
  /// a sum(A) - b sum(B)
  long general_value = 0;
  bool general_forces = false;
};

inline IntMatrix default_base_matrix() { return IntMatrix::from_rows({{-1, 1}, {0, 1}}); }

struct SelectionCertificate {
  long n = 1;
  long C = 0;
  KnotExpr A;
  KnotExpr B;
  SigmaRow sigma_A;
  SigmaRow sigma_B;
  /// One row per g < n and admissible (a, b), g outermost, then b, then a.
  std::vector<CheckRow> checks;
  /// Seifert matrix of the genus-one knot K carrying A and B in its bands.
  IntMatrix base = default_base_matrix();
  /// Dimension of the surgered form of K # -K^r (the bound g4 <= n for the
  /// reversed sum comes from it).
  std::size_t base_reduced_dimension = 0;
  std::vector<std::string> notes;
};

namespace detail {

inline std::vector<std::string> selection_notes(long n, long c) {
  return {
      "conditional: every Casson-Gordon sum is assumed to lie in [-" + std::to_string(n * c) + ", " +
          std::to_string(n * c) + "]",
      "B threshold read as |sum7(B)| > n * (|sum7(A)| + 6n)",
      "both inequalities must fail for ALL admissible (a, b) to exclude g4 = g < n",
      "upper bounds: g3(K(A,B)) = 1 and the surgery certificate of the base form give g4 <= n for both knots",
  };
}

}  // namespace detail

/// Builds the certificate for given A and B, computing every signature and
/// check row exactly. The rows are recorded whether or not they force.
inline SelectionCertificate certify_pair(long n, CgTermBound cg, const KnotExpr& a_expr, const KnotExpr& b_expr,
                                         const IntMatrix& base = default_base_matrix()) {
  if (n < 1) throw Error(ErrorKind::BadParameter, "n must be positive");
  if (cg.C < 0) throw Error(ErrorKind::BadParameter, "CG bound must be nonnegative");
  SelectionCertificate cert;
  cert.n = n;
  cert.C = cg.C;
  cert.A = a_expr;
  cert.B = b_expr;
  cert.sigma_A = sigma_row(SignatureFunction(eval_expr(a_expr)));
  cert.sigma_B = sigma_row(SignatureFunction(eval_expr(b_expr)));
  for (long g = 0; g < n; ++g)
    for (long b = 0; b <= n; ++b)
      for (long a = 0; a <= n; ++a) {
        if (a == 0 && b == 0) continue;
        CheckRow row{g, a, b};
        row.thm12_center = 2 * a * cert.sigma_A.s13 + 2 * b * cert.sigma_B.s13;
        row.thm12_forces = detail::thm12_row_forces(row.thm12_center, n * cg.C, g);
        row.general_value = a * cert.sigma_A.sum7() - b * cert.sigma_B.sum7();
        row.general_forces = std::abs(row.general_value) > 6 * g;
        cert.checks.push_back(row);
      }
  cert.base = base;
  const IntVector alpha{Integer(1), Integer(0)};
  cert.base_reduced_dimension = theorem1_certificate(KnotExpr::literal(base), alpha).reduced.dimension();
  cert.notes = detail::selection_notes(n, cg.C);
  return cert;
}

inline std::vector<KnotExpr> default_basis() {
  return {KnotExpr::torus2(7), KnotExpr::torus2(5), KnotExpr::torus2(3), KnotExpr::twist(-2)};
}

struct SelectOptions {
  /// Largest total multiplicity tried for A and for B.
  int max_multiplicity = 160;
  IntMatrix base = default_base_matrix();
};

namespace detail {

// Multiplicity vectors of total m, earlier basis entries taking larger
// multiplicities first.
template <class Visit>
bool for_each_composition(std::size_t parts, int m, Visit&& visit) {
  std::vector<int> c(parts, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> bool {
    if (i + 1 == parts) {
      c[i] = left;
      return visit(c);
    }
    for (int x = left; x >= 0; --x) {
      c[i] = x;
      if (self(self, i + 1, left - x)) return true;
    }
    return false;
  };
  return parts > 0 && rec(rec, 0, m);
}

inline KnotExpr combination_expr(const std::vector<KnotExpr>& basis, const std::vector<int>& mult) {
  std::vector<KnotExpr> parts;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (int j = 0; j < mult[i]; ++j) parts.push_back(basis[i]);
  return sum_of(parts);
}

inline SigmaRow combine(const std::vector<SigmaRow>& rows, const std::vector<int>& mult) {
  SigmaRow r;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    r.s13 += mult[i] * rows[i].s13;
    r.s17 += mult[i] * rows[i].s17;
    r.s27 += mult[i] * rows[i].s27;
    r.s37 += mult[i] * rows[i].s37;
  }
  return r;
}

}  // namespace detail

/// Searches connected sums of basis knots, by increasing total multiplicity,
/// for A and then B making both signature inequalities fail for every g < n.
/// Signatures of candidates come from the basis profiles by additivity; the
/// returned certificate is recomputed from scratch by certify_pair.
inline SelectionCertificate select_AB(long n, CgTermBound cg, const std::vector<KnotExpr>& basis,
                                      const SelectOptions& opts = {}) {
  if (n < 1) throw Error(ErrorKind::BadParameter, "n must be positive");
  if (cg.C < 0) throw Error(ErrorKind::BadParameter, "CG bound must be nonnegative");
  std::vector<SigmaRow> rows;
  long max13 = 0, max7 = 0;
  for (const auto& k : basis) {
    rows.push_back(sigma_row(SignatureFunction(eval_expr(k))));
    max13 = std::max(max13, std::abs(rows.back().s13));
    max7 = std::max(max7, std::abs(rows.back().sum7()));
  }
  const long m = n * cg.C;

  auto a_ok = [&](const SigmaRow& s) {
    if (std::abs(s.sum7()) <= 6 * n) return false;
    for (long g = 0; g < n; ++g)
      for (long a = 1; a <= n; ++a)
        if (!detail::thm12_row_forces(2 * a * s.s13, m, g)) return false;
    return true;
  };

  std::optional<std::vector<int>> a_mult;
  SigmaRow sa;
  for (int level = 1; level <= opts.max_multiplicity && !a_mult; ++level) {
    if (level * max7 <= 6 * n || 2 * level * max13 <= m + 4 * (n - 1)) continue;
    detail::for_each_composition(basis.size(), level, [&](const std::vector<int>& c) {
      const SigmaRow s = detail::combine(rows, c);
      if (!a_ok(s)) return false;
      a_mult = c;
      sa = s;
      return true;
    });
  }
  if (!a_mult)
    throw Error(ErrorKind::SearchExhausted, "no A found with total multiplicity <= " +
                                                std::to_string(opts.max_multiplicity) + " (enlarge the basis or the cap)");

  const long threshold = n * (std::abs(sa.sum7()) + 6 * n);
  std::optional<std::vector<int>> b_mult;
  for (int level = 1; level <= opts.max_multiplicity && !b_mult; ++level) {
    if (level * max7 <= threshold) continue;
    detail::for_each_composition(basis.size(), level, [&](const std::vector<int>& c) {
      const SigmaRow sb = detail::combine(rows, c);
      if (std::abs(sb.sum7()) <= threshold) return false;
      for (long g = 0; g < n; ++g) {
        if (!thm12_obstruction(sa.s13, sb.s13, n, g, cg).forces) return false;
        if (!thm_general_obstruction(sa.sum7(), sb.sum7(), n, g).forces) return false;
      }
      b_mult = c;
      return true;
    });
  }
  if (!b_mult)
    throw Error(ErrorKind::SearchExhausted, "no B found with total multiplicity <= " +
                                                std::to_string(opts.max_multiplicity) + " (enlarge the basis or the cap)");

  return certify_pair(n, cg, detail::combination_expr(basis, *a_mult), detail::combination_expr(basis, *b_mult),
                      opts.base);
}

struct Verdict {
  bool valid = false;
  std::string reason;
};

/// Independent re-check: recomputes the signatures of A and B, checks the
/// thresholds, that the table has exactly the admissible rows, and every
/// row by brute force over the integer CG sums s in [-nC, nC].
inline Verdict verify_selection(const SelectionCertificate& cert) {
  auto fail = [](std::string why) { return Verdict{false, std::move(why)}; };
  const long n = cert.n;
  if (n < 1 || cert.C < 0) return fail("bad parameters");

  SigmaRow sa, sb;
  try {
    const SeifertMatrix va = eval_expr(cert.A), vb = eval_expr(cert.B);
    const std::array<RationalAngle, 4> xs{RationalAngle(1, 3), RationalAngle(1, 7), RationalAngle(2, 7),
                                          RationalAngle(3, 7)};
    std::array<long, 4> ra{}, rb{};
    for (std::size_t i = 0; i < xs.size(); ++i) {
      ra[i] = lt_signature(va, xs[i]);
      rb[i] = lt_signature(vb, xs[i]);
    }
    sa = {ra[0], ra[1], ra[2], ra[3]};
    sb = {rb[0], rb[1], rb[2], rb[3]};
  } catch (const Error& e) {
    return fail(std::string("cannot recompute signatures: ") + e.what());
  }
  if (!(sa == cert.sigma_A)) return fail("sigma table of A does not match recomputation");
  if (!(sb == cert.sigma_B)) return fail("sigma table of B does not match recomputation");
  if (std::abs(sa.sum7()) <= 6 * n) return fail("|sum7(A)| <= 6n");
  if (std::abs(sb.sum7()) <= n * (std::abs(sa.sum7()) + 6 * n)) return fail("|sum7(B)| below the B threshold");

  const long m = n * cert.C;
  std::vector<std::array<long, 3>> seen;
  for (const auto& row : cert.checks) {
    const std::string where =
        "row g=" + std::to_string(row.g) + " a=" + std::to_string(row.a) + " b=" + std::to_string(row.b);
    if (row.g < 0 || row.g >= n || row.a < 0 || row.a > n || row.b < 0 || row.b > n || (row.a == 0 && row.b == 0))
      return fail(where + " is not admissible");
    seen.push_back({row.g, row.a, row.b});
    const long center = 2 * row.a * sa.s13 + 2 * row.b * sb.s13;
    if (center != row.thm12_center) return fail(where + ": wrong 1/3 combination");
    for (long s = -m; s <= m; ++s)
      if (std::abs(s + center) <= 4 * row.g) return fail(where + ": 1/3 inequality holds at s=" + std::to_string(s));
    const long value = row.a * sa.sum7() - row.b * sb.sum7();
    if (value != row.general_value) return fail(where + ": wrong 7th-root combination");
    if (std::abs(value) <= 6 * row.g) return fail(where + ": 7th-root inequality holds");
    if (!row.thm12_forces || !row.general_forces) return fail(where + ": recorded as not forcing");
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return fail("duplicate rows");
  const auto expected = static_cast<std::size_t>(n * ((n + 1) * (n + 1) - 1));
  if (seen.size() != expected)
    return fail("table has " + std::to_string(seen.size()) + " rows, expected " + std::to_string(expected));

  try {
    const SeifertMatrix base = validate(cert.base, "base");
    if (base.genus() != 1) return fail("base knot must have genus one");
    const IntVector alpha{Integer(1), Integer(0)};
    if (theorem1_certificate(KnotExpr::literal(cert.base), alpha).reduced.dimension() != cert.base_reduced_dimension)
      return fail("base surgery dimension mismatch");
  } catch (const Error& e) {
    return fail(std::string("base form: ") + e.what());
  }
  return {true, {}};
}

}  // namespace knotcord
