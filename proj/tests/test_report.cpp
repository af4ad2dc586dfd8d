#include <gtest/gtest.h>

#include "knotcord/parse.hpp"
#include "knotcord/report.hpp"

using namespace knotcord;

namespace {

bool has_float(const Json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& child : j)
      if (has_float(child)) return true;
  return false;
}

bool keys_sorted(const std::string& text) {
  const Json j = Json::parse(text);
  return j.dump(2) + "\n" == text;
}

HarnessOptions light() {
  HarnessOptions opts;
  opts.theorem1_samples = 5;
  opts.reversal_samples = 5;
  opts.fox_milnor_samples = 5;
  opts.pretzel_strands = {3};
  return opts;
}

const Claim* find_claim(const HarnessReport& r, const std::string& id) {
  for (const auto& c : r.claims)
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace

TEST(Report, InvariantsDocument) {
  const Json doc = invariants_report(parse_expr("torus(2,7)"), parse_angles("1/7,2/7,3/7"));
  EXPECT_EQ(doc["schema_version"], "1");
  EXPECT_EQ(doc["command"], "invariants");
  EXPECT_EQ(doc["subject"], "torus(2,7)");
  const Json& r = doc["results"];
  EXPECT_EQ(r["determinant"], "7");
  EXPECT_EQ(r["genus"], 3);
  const Json& samples = r["signature_profile"]["samples"];
  ASSERT_EQ(samples.size(), 3u);
  EXPECT_EQ(samples[0]["angle"], "1/7");
  EXPECT_EQ(samples[0]["sigma"], -2);
  EXPECT_EQ(samples[1]["sigma"], -4);
  EXPECT_EQ(samples[2]["sigma"], -6);
  EXPECT_FALSE(has_float(doc));
}

TEST(Report, UnknotIsTrivial) {
  const Json doc = invariants_report(KnotExpr::unknot(), default_angle_grid(6));
  const Json& r = doc["results"];
  EXPECT_EQ(r["alexander"]["text"], "1");
  EXPECT_EQ(r["determinant"], "1");
  EXPECT_TRUE(r["signature_profile"]["jump_angles"].empty());
  for (const auto& s : r["signature_profile"]["samples"]) EXPECT_EQ(s["sigma"], 0);
}

TEST(Report, JumpAnglesAreListed) {
  const Json doc = invariants_report(KnotExpr::torus2(3), parse_angles("1/6,1/3"));
  EXPECT_EQ(doc["results"]["signature_profile"]["jump_angles"], Json::array({"1/6"}));
}

TEST(Report, BoundsAndDistance) {
  const Json b = bounds_report(parse_expr("pretzel(3,5,7)"), default_angle_grid());
  const Json& g4 = b["results"]["bounds"][0];
  EXPECT_EQ(g4["quantity"], "g4");
  EXPECT_EQ(g4["lower"], 1);
  EXPECT_EQ(g4["tight"], true);
  EXPECT_EQ(b["results"]["bounds"][1]["upper"], 1);
  const Json d = distance_report_document(parse_expr("torus(2,7)"), parse_expr("torus(2,3)"), default_angle_grid());
  EXPECT_EQ(d["results"]["distance"]["lower"], 2);
  const Json e = distance_report_document(KnotExpr::unknot(), KnotExpr::unknot(), default_angle_grid());
  EXPECT_EQ(e["results"]["distance"]["lower"], 0);
}

TEST(Report, SelectionDocumentRecordsAssumptions) {
  const SelectionCertificate cert = select_AB(1, CgTermBound{0}, default_basis());
  const Json doc = selection_report(cert, verify_selection(cert));
  EXPECT_EQ(doc["results"]["verified"], true);
  EXPECT_EQ(doc["results"]["certificate"]["sigma_A"]["sum_sevenths"], -12);
  EXPECT_EQ(doc["results"]["certificate"]["sigma_B"]["sum_sevenths"], -24);
  EXPECT_FALSE(doc["assumptions"].empty());
  EXPECT_FALSE(doc["results"]["certificate"]["notes"].empty());
  EXPECT_FALSE(has_float(doc));
}

TEST(Report, SerializationIsCanonical) {
  const std::vector<Json> docs{
      invariants_report(parse_expr("sum(pretzel(3,5,7), mirror(twist(-3)))"), default_angle_grid(10)),
      bounds_report(parse_expr("torus(2,9)"), default_angle_grid(10)),
      surgery_report(parse_expr("pretzel(3,5,7,9,11)"), {Integer(1), Integer(0), Integer(0), Integer(0)}),
  };
  for (const auto& d : docs) {
    const std::string text = serialize(d);
    EXPECT_TRUE(keys_sorted(text));
    EXPECT_EQ(serialize(Json::parse(text)), text);
    EXPECT_EQ(text.back(), '\n');
    EXPECT_FALSE(has_float(d));
  }
  const std::string a = serialize(invariants_report(parse_expr("torus(2,5)"), default_angle_grid()));
  const std::string b = serialize(invariants_report(parse_expr("torus(2,5)"), default_angle_grid()));
  EXPECT_EQ(a, b);
}

TEST(Report, LargeIntegersAreStrings) {
  std::vector<SeifertMatrix> parts(30, torus2(9));
  const KnotExpr k = KnotExpr::literal(connected_sum(parts).entries());
  const Json doc = invariants_report(k, parse_angles("1/2"));
  EXPECT_TRUE(doc["results"]["determinant"].is_string());
  EXPECT_EQ(doc["results"]["determinant"].get<std::string>().size(), 29u);
}

TEST(Harness, MutatedPretzelConventionIsCaught) {
  HarnessOptions opts = light();
  opts.pretzel_builder = [](std::span<const long> p) {
    IntMatrix m = pretzel_entries(p);
    for (std::size_t i = 0; i + 1 < m.rows(); ++i) m(i, i + 1) = -m(i, i + 1);
    return m;
  };
  const HarnessReport r = verify_paper(opts);
  EXPECT_FALSE(r.all_passed());
  const Claim* det = find_claim(r, "pretzel.determinant");
  ASSERT_NE(det, nullptr);
  EXPECT_FALSE(det->passed);
  const Json doc = harness_report(r);
  EXPECT_EQ(doc["results"]["all_passed"], false);
  EXPECT_TRUE(doc["results"].contains("first_failure"));
}

TEST(Harness, MissingBasisReportsSearchExhausted) {
  HarnessOptions opts = light();
  opts.basis = std::vector<KnotExpr>{};
  const HarnessReport r = verify_paper(opts);
  for (const char* id : {"select_ab.n1_c0", "select_ab.n3_c50"}) {
    const Claim* c = find_claim(r, id);
    ASSERT_NE(c, nullptr) << id;
    EXPECT_FALSE(c->passed);
    EXPECT_NE(c->detail.find("SearchExhausted"), std::string::npos) << c->detail;
  }
  EXPECT_TRUE(find_claim(r, "pretzel.signature")->passed);
}
