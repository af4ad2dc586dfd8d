#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "knotcord/error.hpp"
#include "knotcord/matrix.hpp"

namespace knotcord {

class SeifertMatrix;
SeifertMatrix validate(IntMatrix entries, std::string provenance = {});

namespace detail {
struct Trusted;
}

/// A Seifert form of a genus-g surface with one boundary component: a 2g x 2g
/// integer matrix V with det(V - V^T) = 1. Immutable once constructed.
class SeifertMatrix {
 public:
  /// The 0x0 form of the disk (unknot).
  SeifertMatrix() = default;

  const IntMatrix& entries() const noexcept { return entries_; }
  std::size_t dimension() const noexcept { return entries_.rows(); }
  int genus() const noexcept { return static_cast<int>(entries_.rows() / 2); }
  const std::string& provenance() const noexcept { return provenance_; }

  /// V + V^T
  IntMatrix symmetrized() const { return entries_ + entries_.transpose(); }
  /// V - V^T, the intersection form.
  IntMatrix intersection_form() const { return entries_ - entries_.transpose(); }

  friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) {
    return a.entries_ == b.entries_;
  }

 private:
  friend SeifertMatrix validate(IntMatrix, std::string);
  friend struct detail::Trusted;

  SeifertMatrix(IntMatrix entries, std::string provenance)
      : entries_(std::move(entries)), provenance_(std::move(provenance)) {}

  IntMatrix entries_;
  std::string provenance_;
};

namespace detail {
// Builds a SeifertMatrix from entries already known to satisfy the invariant
// (block sums and sign/transpose images of valid forms).
struct Trusted {
  static SeifertMatrix make(IntMatrix entries, std::string provenance) {
    return SeifertMatrix(std::move(entries), std::move(provenance));
  }
};
}  // namespace detail

/// det(V - V^T), computed blockwise over the finest diagonal decomposition.
inline Integer intersection_determinant(const IntMatrix& v) {
  const IntMatrix skew = v - v.transpose();
  Integer det = 1;
  for (const auto& block : diagonal_blocks(v)) det *= determinant(principal_submatrix(skew, block));
  return det;
}

inline SeifertMatrix validate(IntMatrix entries, std::string provenance) {
  if (!entries.square())
    throw Error(ErrorKind::DimensionMismatch, "Seifert matrix must be square, got " +
                                                  std::to_string(entries.rows()) + "x" +
                                                  std::to_string(entries.cols()));
  if (entries.rows() % 2 != 0)
    throw Error(ErrorKind::OddDimension,
                "Seifert matrix has odd dimension " + std::to_string(entries.rows()));
  const Integer det = intersection_determinant(entries);
  if (det != 1)
    throw Error(ErrorKind::NonUnimodularIntersectionForm, "det(V - V^T) = " + det.get_str());
  return SeifertMatrix(std::move(entries), std::move(provenance));
}

inline SeifertMatrix unknot() { return detail::Trusted::make(IntMatrix(), "unknot"); }

/// Banded Seifert matrix of the standard surface of P(p_1, ..., p_n), without
/// any parameter checks. Diagonal (p_i + p_{i+1})/2, superdiagonal
/// (p_{i+1} + 1)/2, subdiagonal (p_{i+1} - 1)/2.
inline IntMatrix pretzel_entries(std::span<const long> p) {
  const std::size_t dim = p.empty() ? 0 : p.size() - 1;
  IntMatrix v(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    v(i, i) = (Integer(p[i]) + p[i + 1]) / 2;
    if (i + 1 < dim) {
      v(i, i + 1) = (Integer(p[i + 1]) + 1) / 2;
      v(i + 1, i) = (Integer(p[i + 1]) - 1) / 2;
    }
  }
  return v;
}

inline std::string join_params(std::span<const long> p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s;
}

inline void check_pretzel_params(std::span<const long> p) {
  if (p.size() % 2 == 0)
    throw Error(ErrorKind::EvenParameterCount,
                "pretzel knot needs an odd number of parameters, got " + std::to_string(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] % 2 == 0)
      throw Error(ErrorKind::EvenEntry, "pretzel parameter " + std::to_string(i + 1) + " is even (" +
                                            std::to_string(p[i]) + ")");
}

inline SeifertMatrix pretzel(std::span<const long> p) {
  check_pretzel_params(p);
  return validate(pretzel_entries(p), "pretzel(" + join_params(p) + ")");
}

inline SeifertMatrix pretzel(std::initializer_list<long> p) {
  return pretzel(std::span<const long>(p.begin(), p.size()));
}

inline void check_torus2_param(long q) {
  if (q < 3 || q % 2 == 0)
    throw Error(ErrorKind::BadParameter, "torus(2,q) needs odd q >= 3, got " + std::to_string(q));
}

/// T(2,q): (q-1)x(q-1) bidiagonal, -1 on the diagonal and 1 above it.
inline SeifertMatrix torus2(long q) {
  check_torus2_param(q);
  const auto dim = static_cast<std::size_t>(q - 1);
  IntMatrix v(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    v(i, i) = -1;
    if (i + 1 < dim) v(i, i + 1) = 1;
  }
  return validate(std::move(v), "torus(2," + std::to_string(q) + ")");
}

inline void check_twist_param(long m) {
  if (m == 0) throw Error(ErrorKind::BadParameter, "twist(m) needs m != 0");
}

/// Genus-one form [[-1, 1], [0, m]].
inline SeifertMatrix twist(long m) {
  check_twist_param(m);
  return validate(IntMatrix::from_rows({{-1, 1}, {0, m}}), "twist(" + std::to_string(m) + ")");
}

inline SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
  return detail::Trusted::make(block_sum(a.entries(), b.entries()),
                               "sum(" + a.provenance() + ", " + b.provenance() + ")");
}

inline SeifertMatrix connected_sum(std::span<const SeifertMatrix> summands) {
  std::vector<IntMatrix> blocks;
  blocks.reserve(summands.size());
  std::string prov;
  for (const auto& s : summands) {
    blocks.push_back(s.entries());
    prov += prov.empty() ? s.provenance() : " # " + s.provenance();
  }
  return detail::Trusted::make(block_sum(blocks), prov);
}

/// K^r: reversing string orientation transposes the form.
inline SeifertMatrix reverse(const SeifertMatrix& v) {
  return detail::Trusted::make(v.entries().transpose(), "rev(" + v.provenance() + ")");
}

/// -K, the concordance inverse: -V.
inline SeifertMatrix inverse(const SeifertMatrix& v) {
  return detail::Trusted::make(-v.entries(), "inv(" + v.provenance() + ")");
}

/// Mirror image: -V^T.
inline SeifertMatrix mirror(const SeifertMatrix& v) {
  return detail::Trusted::make(-v.entries().transpose(), "mirror(" + v.provenance() + ")");
}

/// Constructor-tracked genus bounds. Invariant: g4_lower <= g4_upper <= g3_upper.
struct GenusData {
  int g3_upper = 0;
  int g4_lower = 0;
  int g4_upper = 0;

  bool consistent() const { return 0 <= g4_lower && g4_lower <= g4_upper && g4_upper <= g3_upper; }
};

}  // namespace knotcord
