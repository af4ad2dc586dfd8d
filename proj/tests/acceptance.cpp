// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "knotcord/knotcord.hpp"
#include "knotcord/oracle.hpp"

using namespace knotcord;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

using Clock = std::chrono::steady_clock;

bool run(int number, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.fail(std::string("unexpected exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds)
    out.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
  std::ostringstream line;
  line << (out.ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << title;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << " (" << secs << " s)";
  if (!out.ok) line << " -- " << out.detail;
  std::cout << line.str() << std::endl;
  return out.ok;
}

void for_each_grid_pretzel(int strands, const std::function<void(const std::vector<long>&)>& f) {
  std::vector<long> p(static_cast<std::size_t>(strands), 1);
  for (;;) {
    f(p);
    std::size_t i = 0;
    while (i < p.size() && p[i] == 9) p[i++] = 1;
    if (i == p.size()) return;
    p[i] += 2;
  }
}

std::string join(const std::vector<long>& p) { return join_params(p); }

Outcome pretzel_signature() {
  Outcome out;
  const auto grid = default_angle_grid();
  long count = 0;
  for (int strands : {3, 5, 7}) {
    const int k = strands / 2;
    for_each_grid_pretzel(strands, [&](const std::vector<long>& p) {
      ++count;
      const SeifertMatrix v = pretzel(p);
      const SignatureFunction f(v);
      if (f.at(RationalAngle(1, 2)) != 2 * k) out.fail("sigma of pretzel(" + join(p) + ") is not " + std::to_string(2 * k));
      if (v.genus() != k) out.fail("genus of pretzel(" + join(p) + ")");
      if (g4_lower(f, grid).value != k) out.fail("g4 lower bound of pretzel(" + join(p) + ")");
    });
  }
  if (count != 125 + 3125 + 78125) out.fail("grid has " + std::to_string(count) + " knots");
  return out;
}

Outcome theorem1() {
  Outcome out;
  Rng rng(101);
  const auto grid = default_angle_grid();
  for (int i = 0; i < 60; ++i) {
    const KnotExpr k = random_knot_expr(rng, 4);
    const int g = g3_upper(k);
    const Theorem1Certificate c = theorem1_certificate(k, random_primitive(rng, 2 * static_cast<std::size_t>(g)));
    const std::string name = to_string(k);
    if (c.surgery_class.framing != 0) out.fail(name + ": framing");
    if (c.reduced.dimension() != static_cast<std::size_t>(4 * g - 2)) out.fail(name + ": reduced dimension");
    validate(c.reduced.entries(), "reduced");
    const SignatureFunction fw(c.sum_matrix), fr(c.reduced);
    int sampled = 0;
    for (int tries = 0; sampled < 20 && tries < 2000; ++tries) {
      const RationalAngle x = grid[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(grid.size()) - 1))];
      if (fw.is_jump(x) || fr.is_jump(x)) continue;
      ++sampled;
      if (std::abs(fw.at(x) - fr.at(x)) > 2) out.fail(name + ": signature change at " + x.to_string());
    }
    if (sampled < 20) out.fail(name + ": too few regular angles");
  }
  return out;
}

Outcome reversal() {
  Outcome out;
  Rng rng(102);
  const auto grid = default_angle_grid();
  for (int i = 0; i < 120; ++i) {
    const SeifertMatrix v = random_seifert(rng, static_cast<int>(rng.uniform(1, 5)));
    const SignatureFunction f(v), fr(reverse(v));
    int sampled = 0;
    for (int tries = 0; sampled < 20 && tries < 2000; ++tries) {
      const RationalAngle x = grid[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(grid.size()) - 1))];
      if (f.is_jump(x)) continue;
      ++sampled;
      if (f.at(x) != fr.at(x)) out.fail("sample " + std::to_string(i) + " at " + x.to_string());
    }
    if (sampled < 20) out.fail("sample " + std::to_string(i) + ": too few regular angles");
    if (cobordism_lower(v, reverse(v)).value != 0) out.fail("sample " + std::to_string(i) + ": cobordism lower bound");
  }
  return out;
}

Outcome oracle_agreement() {
  Outcome out;
  Rng rng(103);
  const auto grid = default_angle_grid();
  int compared = 0;
  for (int i = 0; compared < 600 && i < 5000; ++i) {
    const SeifertMatrix v = random_seifert(rng, static_cast<int>(rng.uniform(1, 5)), 3);
    const RationalAngle x = grid[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(grid.size()) - 1))];
    const SignatureFunction f(v);
    if (f.is_jump(x)) continue;
    int expected = 0;
    try {
      expected = hermitian_signature_oracle(v, x);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::MarginTooSmall) continue;
      throw;
    }
    ++compared;
    if (f.at(x) != expected) out.fail("mismatch on " + matrix_literal_text(v.entries()) + " at " + x.to_string());
  }
  if (compared < 500) out.fail("only " + std::to_string(compared) + " comparisons");
  return out;
}

Outcome selection() {
  Outcome out;
  for (long n : {1L, 2L, 3L})
    for (long c : {0L, 50L}) {
      const auto start = Clock::now();
      const SelectionCertificate cert = select_AB(n, CgTermBound{c}, default_basis());
      const Verdict v = verify_selection(cert);
      const double secs = std::chrono::duration<double>(Clock::now() - start).count();
      const std::string tag = "n=" + std::to_string(n) + " C=" + std::to_string(c);
      if (!v.valid) out.fail(tag + ": " + v.reason);
      if (secs > 60) out.fail(tag + ": over 60 s");
      if (n == 1 && c == 0 &&
          (!(cert.A == KnotExpr::torus2(7)) || cert.sigma_A.sum7() != -12 || cert.sigma_B.sum7() != -24))
        out.fail(tag + ": expected A = torus(2,7), sums -12 and -24");
    }
  return out;
}

Outcome slice_audits() {
  Outcome out;
  Rng rng(104);
  auto consistent = [&](const SeifertMatrix& v, const std::string& name) {
    if (fox_milnor(alexander(v)).pass && !det_square_test(v)) out.fail(name + ": Fox-Milnor pass, determinant not square");
  };
  for (int i = 0; i < 50; ++i) {
    const SeifertMatrix v = random_seifert(rng, static_cast<int>(rng.uniform(1, 3)));
    const SeifertMatrix s = connected_sum(v, validate(-v.entries(), "-V"));
    const std::string name = "sample " + std::to_string(i);
    if (!fox_milnor(alexander(s)).pass) out.fail(name + ": V + (-V) fails Fox-Milnor");
    if (!det_square_test(s)) out.fail(name + ": V + (-V) determinant not square");
    consistent(s, name);
    consistent(v, name + " alone");
  }
  for (const auto& [v, name] : {std::pair{torus2(3), "trefoil"}, std::pair{pretzel({3, 5, 7}), "pretzel(3,5,7)"}}) {
    if (fox_milnor(alexander(v)).pass) out.fail(std::string(name) + " passes Fox-Milnor");
    consistent(v, name);
  }
  return out;
}

Outcome bound_consistency() {
  Outcome out;
  Rng rng(105);
  std::vector<KnotExpr> corpus;
  for (int i = 0; i < 80; ++i) corpus.push_back(random_knot_expr(rng, 4));
  for (long q : {3L, 5L, 7L, 9L, 11L}) corpus.push_back(KnotExpr::torus2(q));
  corpus.push_back(KnotExpr::unknot());
  for (const auto& k : corpus)
    for (const auto& r : reconcile(k))
      if (r.lower > r.upper) out.fail(to_string(k) + ": lower exceeds upper");
  for (const auto& p : std::vector<std::vector<long>>{{3, 5, 7}, {1, 1, 1}, {9, 9, 9}, {3, 5, 7, 9, 11}, {1, 3, 5, 7, 9, 1, 3}}) {
    const KnotExpr k = KnotExpr::pretzel(p);
    const auto r = reconcile(k);
    const int g4 = r[0].lower;
    if (!r[0].tight || g4 != static_cast<int>(p.size() / 2)) out.fail(to_string(k) + ": g4 not tight");
    if (r[1].upper != 2 * g4 - 1) out.fail(to_string(k) + ": d upper is not 2 g4 - 1");
  }
  return out;
}

std::pair<int, std::string> capture(const std::string& command) {
  std::string text;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, text};
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) text.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text};
}

Outcome cli_determinism() {
  Outcome out;
  const std::string cmd = std::string("\"") + KNOTCORD_CLI + "\" verify-paper --json";
  const auto [code1, first] = capture(cmd);
  const auto [code2, second] = capture(cmd);
  if (code1 != 0 || code2 != 0) out.fail("exit codes " + std::to_string(code1) + ", " + std::to_string(code2));
  if (first.empty()) out.fail("empty report");
  if (first != second) out.fail("reports differ between runs");
  if (!Json::parse(first)["results"]["all_passed"].get<bool>()) out.fail("report lists a failing claim");
  return out;
}

}  // namespace

int main() {
  bool all = true;
  all &= run(1, "pretzel grid: sigma_1/2 = 2k and g4 lower bound = k = genus", 10, pretzel_signature);
  all &= run(2, "surgery certificates: framing 0, dimension 4g - 2, signatures within 2", 30, theorem1);
  all &= run(3, "reversal leaves signatures and the cobordism lower bound unchanged", 0, reversal);
  all &= run(4, "exact signatures agree with the eigenvalue oracle", 0, oracle_agreement);
  all &= run(5, "A, B selection for n in {1,2,3}, C in {0,50} re-verifies", 0, selection);
  all &= run(6, "Fox-Milnor and determinant audits of slice sums and controls", 0, slice_audits);
  all &= run(7, "reconciled bounds are consistent; pretzel g4 tight and d upper = 2 g4 - 1", 0, bound_consistency);
  all &= run(8, "verify-paper exits 0 with byte-identical reports on two runs", 0, cli_determinism);
  return all ? 0 : 1;
}
