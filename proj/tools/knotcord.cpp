// knotcord: command-line front end.
//
// Exit codes: 0 success, 1 usage or parse error, 2 mathematical failure
// (search exhausted, verification failed, hypothesis not met).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "knotcord/knotcord.hpp"

namespace {

using namespace knotcord;

struct Options {
  std::string expr;
  std::string expr2;
  std::string angles;
  std::string alpha;
  std::string basis;
  long n = 1;
  long cg_bound = 0;
  int k = 0;
  int max_multiplicity = SelectOptions{}.max_multiplicity;
  bool json = false;
  bool table = false;
  std::string out;
};

// Splits on commas outside parentheses and brackets.
std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !parts.empty()) parts.push_back(cur);
  return parts;
}

IntVector parse_vector(const std::string& text) {
  IntVector v;
  for (const auto& piece : split_top_level(text)) {
    Integer x;
    std::string trimmed;
    for (char c : piece)
      if (c != ' ') trimmed += c;
    if (trimmed.empty() || x.set_str(trimmed, 10) != 0)
      throw Error(ErrorKind::BadParameter, "cannot parse integer '" + piece + "' in --alpha");
    v.push_back(x);
  }
  return v;
}

std::vector<RationalAngle> angles_or(const std::string& text, std::vector<RationalAngle> fallback) {
  return text.empty() ? fallback : parse_angles(text);
}

std::string bound_line(const BoundReport& r) {
  std::ostringstream os;
  os << to_string(r.quantity) << ": " << r.lower << " <= . <= " << r.upper << (r.tight ? "  (tight)" : "") << "\n"
     << "  lower: " << r.lower_provenance << "\n"
     << "  upper: " << r.upper_provenance << "\n";
  for (const auto& a : r.assumptions) os << "  assumes: " << a << "\n";
  return os.str();
}

std::string invariants_table(const KnotExpr& k, const std::vector<RationalAngle>& angles) {
  const SeifertMatrix v = eval_expr(k);
  const SignatureFunction f(v);
  std::ostringstream os;
  os << "knot:        " << to_string(k) << "\n"
     << "genus:       " << g3_upper(k) << "\n"
     << "matrix:      " << matrix_literal_text(v.entries()) << "\n"
     << "alexander:   " << f.alexander().to_string() << "\n"
     << "determinant: " << f.determinant().get_str() << "\n"
     << "angle   sigma\n";
  for (const auto& x : angles) {
    os << x.to_string() << std::string(x.to_string().size() < 8 ? 8 - x.to_string().size() : 1, ' ');
    if (const auto s = f.try_at(x))
      os << *s << "\n";
    else
      os << "jump\n";
  }
  return os.str();
}

std::string selection_table(const SelectionCertificate& cert, const Verdict& verdict) {
  std::ostringstream os;
  auto row = [&os](const char* name, const SigmaRow& s) {
    os << name << ": sigma_1/3 = " << s.s13 << ", sigma_1/7 + sigma_2/7 + sigma_3/7 = " << s.s17 << " + " << s.s27
       << " + " << s.s37 << " = " << s.sum7() << "\n";
  };
  os << "n = " << cert.n << ", CG bound C = " << cert.C << "\n"
     << "A = " << to_string(cert.A) << "\n"
     << "B = " << to_string(cert.B) << "\n";
  row("A", cert.sigma_A);
  row("B", cert.sigma_B);
  long forcing = 0;
  for (const auto& r : cert.checks) forcing += r.thm12_forces && r.general_forces;
  os << "check rows: " << cert.checks.size() << ", forcing: " << forcing << "\n"
     << "verified: " << (verdict.valid ? "yes" : "no (" + verdict.reason + ")") << "\n";
  for (const auto& note : cert.notes) os << "note: " << note << "\n";
  return os.str();
}

std::string harness_table(const HarnessReport& report) {
  std::ostringstream os;
  for (const auto& c : report.claims) {
    os << (c.passed ? "PASS " : "FAIL ") << c.id << " (" << c.checked << " checked)\n";
    if (!c.passed) os << "     " << c.detail << "\n";
  }
  os << (report.all_passed() ? "all claims verified\n" : "verification failed\n");
  return os.str();
}

void emit(const Options& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opts.out, std::ios::binary);
  if (!file) throw Error(ErrorKind::BadParameter, "cannot open output file " + opts.out);
  file << text;
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::BadParameter:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::OddDimension:
    case ErrorKind::NonUnimodularIntersectionForm:
    case ErrorKind::EvenParameterCount:
    case ErrorKind::EvenEntry:
    case ErrorKind::ImprimitiveClass:
      return true;
    default:
      return false;
  }
}

int run(const std::string& command, const Options& opts) {
  auto need_expr = [](const std::string& text, const char* flag) {
    if (text.empty()) throw Error(ErrorKind::BadParameter, std::string(flag) + " is required");
    return parse_expr(text);
  };

  if (command == "invariants") {
    const KnotExpr k = need_expr(opts.expr, "--expr");
    const auto angles = angles_or(opts.angles, distinguished_angles());
    emit(opts, opts.json ? serialize(invariants_report(k, angles)) : invariants_table(k, angles));
    return 0;
  }
  if (command == "bounds") {
    const KnotExpr k = need_expr(opts.expr, "--expr");
    const auto grid = angles_or(opts.angles, default_angle_grid());
    Json doc = bounds_report(k, grid);
    std::string text;
    for (const auto& r : reconcile(k, grid)) text += bound_line(r);
    if (opts.k > 0) {
      DUpperOptions d;
      d.k = opts.k;
      d.grid = grid;
      const UpperBound u = d_upper(k, DFlavor::CorollaryK, d);
      doc["results"]["corollary_k"] = {{"k", opts.k}, {"upper", u.value}, {"provenance", u.provenance}};
      for (const auto& a : u.assumptions) doc["assumptions"].push_back(a);
      text += "corollary_k: d(K,K^r) <= " + std::to_string(u.value) + "\n  assumes: " + u.assumptions.front() + "\n";
    }
    emit(opts, opts.json ? serialize(doc) : "knot: " + to_string(k) + "\n" + text);
    return 0;
  }
  if (command == "distance") {
    const KnotExpr k = need_expr(opts.expr, "--expr");
    const KnotExpr j = need_expr(opts.expr2, "--expr2");
    const auto grid = angles_or(opts.angles, default_angle_grid());
    emit(opts, opts.json ? serialize(distance_report_document(k, j, grid)) : bound_line(distance_report(k, j, grid)));
    return 0;
  }
  if (command == "surgery") {
    const KnotExpr k = need_expr(opts.expr, "--expr");
    IntVector alpha;
    if (opts.alpha.empty()) {
      alpha.assign(2 * static_cast<std::size_t>(g3_upper(k)), Integer(0));
      if (!alpha.empty()) alpha[0] = 1;
    } else {
      alpha = parse_vector(opts.alpha);
    }
    if (opts.json) {
      emit(opts, serialize(surgery_report(k, alpha)));
    } else {
      const Theorem1Certificate c = theorem1_certificate(k, alpha);
      std::string cls;
      for (std::size_t i = 0; i < c.surgery_class.vector.size(); ++i)
        cls += (i ? "," : "") + c.surgery_class.vector[i].get_str();
      std::ostringstream os;
      os << "knot:      " << to_string(k) << " (genus " << c.genus << ")\n"
         << "class:     (" << cls << "), framing " << c.surgery_class.framing.get_str() << "\n"
         << "reduced:   " << matrix_literal_text(c.reduced.entries()) << " (dimension " << c.reduced.dimension()
         << ")\n"
         << "conclusion: d(K,K^r) <= " << c.d_upper << "\n";
      emit(opts, os.str());
    }
    return 0;
  }
  if (command == "select-ab") {
    if (opts.n < 1) throw Error(ErrorKind::BadParameter, "--n must be positive");
    if (opts.cg_bound < 0) throw Error(ErrorKind::BadParameter, "--cg-bound must be nonnegative");
    std::vector<KnotExpr> basis;
    if (opts.basis.empty()) {
      basis = default_basis();
    } else {
      for (const auto& piece : split_top_level(opts.basis)) basis.push_back(parse_expr(piece));
    }
    SelectOptions so;
    so.max_multiplicity = opts.max_multiplicity;
    const SelectionCertificate cert = select_AB(opts.n, CgTermBound{opts.cg_bound}, basis, so);
    const Verdict verdict = verify_selection(cert);
    emit(opts, opts.json ? serialize(selection_report(cert, verdict)) : selection_table(cert, verdict));
    return verdict.valid ? 0 : 2;
  }
  if (command == "verify-paper") {
    const HarnessReport report = verify_paper();
    emit(opts, opts.json ? serialize(harness_report(report)) : harness_table(report));
    if (const Claim* first = report.first_failure()) {
      std::cerr << "first failing claim: " << first->id << ": " << first->detail << "\n";
      return 2;
    }
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot concordance invariants from Seifert matrices"};
  app.require_subcommand(1);
  Options opts;

  auto add_output = [&opts](CLI::App* sub) {
    auto* json = sub->add_flag("--json", opts.json, "Write the canonical JSON report");
    auto* table = sub->add_flag("--table", opts.table, "Write a plain-text table (default)");
    json->excludes(table);
    sub->add_option("--out", opts.out, "Write to FILE instead of standard output");
  };
  auto add_expr = [&opts](CLI::App* sub) {
    sub->add_option("--expr", opts.expr, "Knot expression, e.g. 'sum(pretzel(3,5,7), inv(rev(torus(2,3))))'");
  };
  auto add_angles = [&opts](CLI::App* sub, const char* what) {
    sub->add_option("--angles", opts.angles, std::string("Comma-separated p/q angles (") + what + ")");
  };

  auto* invariants = app.add_subcommand("invariants", "Genus, Alexander polynomial, determinant, signatures");
  add_expr(invariants);
  add_angles(invariants, "default 1/2,1/3,1/7,2/7,3/7");
  add_output(invariants);

  auto* bounds = app.add_subcommand("bounds", "Bounds on g4(K) and d(K, K^r)");
  add_expr(bounds);
  add_angles(bounds, "default: all p/q with q <= 24");
  bounds->add_option("--k", opts.k, "Also apply the split-curve bound with this many curves (asserted)");
  add_output(bounds);

  auto* distance = app.add_subcommand("distance", "Bounds on the cobordism distance d(K, J)");
  add_expr(distance);
  distance->add_option("--expr2", opts.expr2, "Second knot expression");
  add_angles(distance, "default: all p/q with q <= 24");
  add_output(distance);

  auto* surgery = app.add_subcommand("surgery", "Surgery certificate for K # -K^r");
  add_expr(surgery);
  surgery->add_option("--alpha", opts.alpha, "Primitive class on the surface, comma-separated (default e1)");
  add_output(surgery);

  auto* select = app.add_subcommand("select-ab", "Search for knots A, B realizing g4 = n = d");
  select->add_option("--n", opts.n, "Multiple n (>= 1)");
  select->add_option("--cg-bound", opts.cg_bound, "Bound C on each Casson-Gordon term (>= 0)");
  select->add_option("--basis", opts.basis, "Comma-separated basis expressions");
  select->add_option("--max-multiplicity", opts.max_multiplicity, "Search cap on total multiplicity");
  add_output(select);

  auto* verify = app.add_subcommand("verify-paper", "Re-check every built-in claim");
  add_output(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), opts);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (const auto* pe = dynamic_cast<const ParseError*>(&e))
      std::cerr << "  at line " << pe->line() << ", column " << pe->column() << "\n";
    return is_input_error(e.kind()) ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
