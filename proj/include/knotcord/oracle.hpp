#pragma once

// Floating-point cross-check for the exact signature engine. Not used by the
// library itself; requires Eigen.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>

#include "knotcord/angle.hpp"
#include "knotcord/error.hpp"
#include "knotcord/seifert.hpp"

namespace knotcord {

/// Signature of (1 - w) V + (1 - conj w) V^T, w = exp(2 pi i x), from double
/// precision eigenvalues. Throws MarginTooSmall when some eigenvalue is
/// within `relative_margin * max(1, ||M||)` of zero: the answer would not be
/// trustworthy, which is an inconclusive result rather than a mismatch.
inline int hermitian_signature_oracle(const SeifertMatrix& v, const RationalAngle& x,
                                      double relative_margin = 1e-9) {
  const std::size_t n = v.dimension();
  if (n == 0) return 0;
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(x.p()) / static_cast<double>(x.q());
  const std::complex<double> w(std::cos(theta), std::sin(theta));
  Eigen::MatrixXcd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double vij = v.entries()(i, j).get_d();
      const double vji = v.entries()(j, i).get_d();
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (1.0 - w) * vij + (1.0 - std::conj(w)) * vji;
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  int sig = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i)) <= relative_margin * scale)
      throw Error(ErrorKind::MarginTooSmall, "eigenvalue " + std::to_string(ev(i)) + " too close to zero at " + x.to_string());
    sig += ev(i) > 0 ? 1 : -1;
  }
  return sig;
}

}  // namespace knotcord
