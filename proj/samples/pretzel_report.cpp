// Prints g4 and d(K, K^r) bounds for the positive pretzel knots with
// parameters given on the command line, or P(3,5,7) by default.

#include <cstdlib>
#include <iostream>
#include <vector>

#include "knotcord/knotcord.hpp"

int main(int argc, char** argv) {
  using namespace knotcord;
  std::vector<long> params;
  for (int i = 1; i < argc; ++i) params.push_back(std::strtol(argv[i], nullptr, 10));
  if (params.empty()) params = {3, 5, 7};
  try {
    const KnotExpr k = KnotExpr::pretzel(params);
    const SeifertMatrix v = eval_expr(k);
    std::cout << to_string(k) << "\n";
    std::cout << "  alexander    " << alexander(v).to_string() << "\n";
    std::cout << "  determinant  " << determinant(v) << "\n";
    std::cout << "  sigma(1/2)   " << lt_signature(v, RationalAngle(1, 2)) << "\n";
    for (const auto& r : reconcile(k))
      std::cout << "  " << to_string(r.quantity) << "  " << r.lower << " .. " << r.upper << (r.tight ? "  tight" : "")
                << "\n";
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
