#pragma once

#include <memory>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "knotcord/seifert.hpp"

namespace knotcord {

struct ExprNode;

/// Immutable expression tree over knot constructors and operators. Leaves
/// are validated on construction, so evaluation always yields a valid form.
class KnotExpr {
 public:
  /// Defaults to the unknot.
  KnotExpr();

  static KnotExpr unknot();
  static KnotExpr pretzel(std::vector<long> params);
  static KnotExpr torus2(long q);
  static KnotExpr twist(long m);
  static KnotExpr literal(IntMatrix entries);
  static KnotExpr sum(KnotExpr lhs, KnotExpr rhs);
  static KnotExpr reverse(KnotExpr arg);
  static KnotExpr inverse(KnotExpr arg);
  static KnotExpr mirror(KnotExpr arg);

  const ExprNode& node() const { return *node_; }

 private:
  explicit KnotExpr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const ExprNode> node_;
};

namespace expr {
struct Unknot {};
struct Pretzel {
  std::vector<long> params;
};
struct Torus2 {
  long q;
};
struct Twist {
  long m;
};
struct Literal {
  IntMatrix entries;
};
struct Sum {
  KnotExpr lhs, rhs;
};
struct Reverse {
  KnotExpr arg;
};
struct Inverse {
  KnotExpr arg;
};
struct Mirror {
  KnotExpr arg;
};
}  // namespace expr

struct ExprNode {
  std::variant<expr::Unknot, expr::Pretzel, expr::Torus2, expr::Twist, expr::Literal, expr::Sum,
               expr::Reverse, expr::Inverse, expr::Mirror>
      value;
};

inline KnotExpr::KnotExpr() : node_(std::make_shared<const ExprNode>(ExprNode{expr::Unknot{}})) {}

inline KnotExpr KnotExpr::unknot() { return KnotExpr(); }

inline KnotExpr KnotExpr::pretzel(std::vector<long> params) {
  check_pretzel_params(params);
  return KnotExpr(std::make_shared<const ExprNode>(ExprNode{expr::Pretzel{std::move(params)}}));
}

inline KnotExpr KnotExpr::torus2(long q) {
  check_torus2_param(q);
  return KnotExpr(std::make_shared<const ExprNode>(ExprNode{expr::Torus2{q}}));
}

inline KnotExpr KnotExpr::twist(long m) {
  check_twist_param(m);
  return KnotExpr(std::make_shared<const ExprNode>(ExprNode{expr::Twist{m}}));
}

inline KnotExpr KnotExpr::literal(IntMatrix entries) {
  (void)validate(entries);
  return KnotExpr(std::make_shared<const ExprNode>(ExprNode{expr::Literal{std::move(entries)}}));
}

inline KnotExpr KnotExpr::sum(KnotExpr lhs, KnotExpr rhs) {
  return KnotExpr(std::make_shared<const ExprNode>(ExprNode{expr::Sum{std::move(lhs), std::move(rhs)}}));
}

inline KnotExpr KnotExpr::reverse(KnotExpr arg) {
  return KnotExpr(std::make_shared<const ExprNode>(ExprNode{expr::Reverse{std::move(arg)}}));
}

inline KnotExpr KnotExpr::inverse(KnotExpr arg) {
  return KnotExpr(std::make_shared<const ExprNode>(ExprNode{expr::Inverse{std::move(arg)}}));
}

inline KnotExpr KnotExpr::mirror(KnotExpr arg) {
  return KnotExpr(std::make_shared<const ExprNode>(ExprNode{expr::Mirror{std::move(arg)}}));
}

/// Left-nested sum of the given knots; the unknot for an empty list.
inline KnotExpr sum_of(const std::vector<KnotExpr>& knots) {
  if (knots.empty()) return KnotExpr::unknot();
  KnotExpr acc = knots.front();
  for (std::size_t i = 1; i < knots.size(); ++i) acc = KnotExpr::sum(acc, knots[i]);
  return acc;
}

inline bool operator==(const KnotExpr& a, const KnotExpr& b) {
  if (&a.node() == &b.node()) return true;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto* y = std::get_if<T>(&b.node().value);
        if (y == nullptr) return false;
        if constexpr (std::is_same_v<T, expr::Unknot>) return true;
        else if constexpr (std::is_same_v<T, expr::Pretzel>) return x.params == y->params;
        else if constexpr (std::is_same_v<T, expr::Torus2>) return x.q == y->q;
        else if constexpr (std::is_same_v<T, expr::Twist>) return x.m == y->m;
        else if constexpr (std::is_same_v<T, expr::Literal>) return x.entries == y->entries;
        else if constexpr (std::is_same_v<T, expr::Sum>) return x.lhs == y->lhs && x.rhs == y->rhs;
        else return x.arg == y->arg;
      },
      a.node().value);
}

inline std::string matrix_literal_text(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ",";
    s += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += m(i, j).get_str();
    }
    s += "]";
  }
  return s + "]";
}

/// Canonical text in the expression grammar; parse_expr inverts it.
inline std::string to_string(const KnotExpr& e) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, expr::Unknot>) return "unknot";
        else if constexpr (std::is_same_v<T, expr::Pretzel>) return "pretzel(" + join_params(x.params) + ")";
        else if constexpr (std::is_same_v<T, expr::Torus2>) return "torus(2," + std::to_string(x.q) + ")";
        else if constexpr (std::is_same_v<T, expr::Twist>) return "twist(" + std::to_string(x.m) + ")";
        else if constexpr (std::is_same_v<T, expr::Literal>) return "matrix(" + matrix_literal_text(x.entries) + ")";
        else if constexpr (std::is_same_v<T, expr::Sum>) return "sum(" + to_string(x.lhs) + ", " + to_string(x.rhs) + ")";
        else if constexpr (std::is_same_v<T, expr::Reverse>) return "rev(" + to_string(x.arg) + ")";
        else if constexpr (std::is_same_v<T, expr::Inverse>) return "inv(" + to_string(x.arg) + ")";
        else return "mirror(" + to_string(x.arg) + ")";
      },
      e.node().value);
}

namespace detail {
// Nested sums are flattened so a sum of many summands is assembled once.
inline void collect_summands(const KnotExpr& e, std::vector<const KnotExpr*>& out) {
  if (const auto* s = std::get_if<expr::Sum>(&e.node().value)) {
    collect_summands(s->lhs, out);
    collect_summands(s->rhs, out);
  } else {
    out.push_back(&e);
  }
}
}  // namespace detail

inline SeifertMatrix eval_expr(const KnotExpr& e) {
  return std::visit(
      [&e](const auto& x) -> SeifertMatrix {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, expr::Unknot>) return unknot();
        else if constexpr (std::is_same_v<T, expr::Pretzel>) return pretzel(x.params);
        else if constexpr (std::is_same_v<T, expr::Torus2>) return torus2(x.q);
        else if constexpr (std::is_same_v<T, expr::Twist>) return twist(x.m);
        else if constexpr (std::is_same_v<T, expr::Literal>) return validate(x.entries, "matrix");
        else if constexpr (std::is_same_v<T, expr::Sum>) {
          std::vector<const KnotExpr*> leaves;
          detail::collect_summands(e, leaves);
          std::vector<SeifertMatrix> parts;
          parts.reserve(leaves.size());
          for (const auto* leaf : leaves) parts.push_back(eval_expr(*leaf));
          return connected_sum(parts);
        } else if constexpr (std::is_same_v<T, expr::Reverse>) return reverse(eval_expr(x.arg));
        else if constexpr (std::is_same_v<T, expr::Inverse>) return inverse(eval_expr(x.arg));
        else return mirror(eval_expr(x.arg));
      },
      e.node().value);
}

/// Genus of the Seifert surface the constructors build; an upper bound on g3.
/// Equal to eval_expr(e).genus(), read off the tree without building matrices.
inline int g3_upper(const KnotExpr& e) {
  return std::visit(
      [](const auto& x) -> int {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, expr::Unknot>) return 0;
        else if constexpr (std::is_same_v<T, expr::Pretzel>) return static_cast<int>(x.params.size() / 2);
        else if constexpr (std::is_same_v<T, expr::Torus2>) return static_cast<int>((x.q - 1) / 2);
        else if constexpr (std::is_same_v<T, expr::Twist>) return 1;
        else if constexpr (std::is_same_v<T, expr::Literal>) return static_cast<int>(x.entries.rows() / 2);
        else if constexpr (std::is_same_v<T, expr::Sum>) return g3_upper(x.lhs) + g3_upper(x.rhs);
        else return g3_upper(x.arg);
      },
      e.node().value);
}

}  // namespace knotcord
