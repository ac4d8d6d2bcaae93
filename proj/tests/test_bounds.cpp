#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"
#include "knotgap/bounds.hpp"
#include "support/pdgen.hpp"

using namespace knotgap;

namespace {

const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

Mat M(std::vector<std::vector<long long>> rows) { return Mat(rows); }

GenusReport run(const std::string& pd, AnalyzeOptions opt = {}) {
  return analyze(parse_pd(pd), opt);
}

}  // namespace

TEST_CASE("figure-eight end to end") {
  GenusReport r = run("fig8: " + pdgen::twist_knot_pd(1));
  CHECK(r.homogeneous);
  CHECK(r.has_positive);
  CHECK(r.has_negative);
  CHECK(r.reduced);
  CHECK(r.prime_diagram);
  CHECK(r.genus == 1);
  CHECK(r.signature_value == 0);
  CHECK(lp_to_string(r.alexander) == "t^-1 - 3 + t");
  CHECK(r.determinant == 5);
  CHECK(r.gt_lower == Rat(0));
  CHECK(r.gt_upper == Rat(1));
  CHECK(r.theorem1.applicable);
  CHECK(r.theorem1.value == Rat(2, 3));
  REQUIRE(r.theorem1_witness.has_value());
  CHECK(r.theorem1_witness->pattern == M({{0, 1}, {0, -1}}));
  CHECK(r.prop1.applicable);
  CHECK(r.prop1.value == Rat(2, 3));
  CHECK(r.prop2.applicable);
  CHECK(r.prop2.value == Rat(1, 2));
  CHECK(r.smooth.applicable);
  CHECK(r.smooth.value == Rat(1, 2));
  CHECK(r.stable_t_upper == Rat(1, 2));
  CHECK(r.stable_t_rule == "prop2");
  CHECK(r.taylor.kind == TaylorKind::Fails);
  CHECK(r.taylor.subject == "fig8 # fig8");
  CHECK_FALSE(r.taylor.witness.empty());
}

TEST_CASE("twist knot family bounds") {
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    GenusReport r = run("k: " + pdgen::twist_knot_pd(n));
    CHECK(r.genus == 1);
    CHECK(r.signature_value == 0);
    CHECK(r.determinant == 4 * n + 1);
    CHECK(r.theorem1.applicable);
    CHECK(r.theorem1.value == Rat(2, 3));
    REQUIRE(r.theorem1_witness.has_value());
    CHECK(r.theorem1_witness->sol.p == 1);
    CHECK(r.theorem1_witness->sol.n == n);
    CHECK(r.theorem1_witness->pattern == M({{0, 1}, {0, -n}}));
    CHECK(r.smooth.applicable);
    CHECK(r.smooth.value == Rat(n, n + 1));  // 1 - 1/(n+1)
    CHECK(r.stable_t_upper == Rat(2, 3));
    CHECK(r.stable_t_rule == "theorem1");
  }
}

TEST_CASE("k5 doubled form is obstructed") {
  GenusReport r = run("k5: " + pdgen::twist_knot_pd(5));
  CHECK(r.taylor.kind == TaylorKind::ObstructionHolds);
  CHECK(r.taylor.detail.find("21") != std::string::npos);
  CHECK(r.taylor.detail.find("no framing-0 class") != std::string::npos);
  CHECK(r.taylor.consequence.find("g_s = g = 2") != std::string::npos);
}

TEST_CASE("positive trefoil calibration") {
  GenusReport r = run(std::string("tref: ") + kTrefoil);
  CHECK(r.signature_value == 2);
  CHECK(r.genus == 1);
  CHECK(r.gt_lower == Rat(1));
  CHECK(r.gt_upper == Rat(1));
  CHECK(r.stable_t_lower == Rat(1));
  CHECK(r.stable_t_upper == Rat(1));
  CHECK_FALSE(r.theorem1.applicable);
  CHECK(r.theorem1.reason.find("both signs") != std::string::npos);
  CHECK_FALSE(r.smooth.applicable);
  CHECK(r.taylor.kind == TaylorKind::ObstructionHolds);
}

TEST_CASE("mirror coherence") {
  GenusReport r = run(std::string("t: ") + kTrefoil);
  GenusReport m = analyze(mirror(parse_pd(std::string("t: ") + kTrefoil)));
  CHECK(m.signature_value == -r.signature_value);
  CHECK(m.genus == r.genus);
  CHECK(m.determinant == r.determinant);
  CHECK(lp_to_string(m.alexander) == lp_to_string(r.alexander));
  CHECK(m.gt_lower == r.gt_lower);
  CHECK(m.gt_upper == r.gt_upper);

  std::string fig8 = "f: " + pdgen::twist_knot_pd(1);
  GenusReport f = run(fig8);
  GenusReport fm = analyze(mirror(parse_pd(fig8)));
  CHECK(fm.signature_value == -f.signature_value);
  CHECK(fm.theorem1.applicable == f.theorem1.applicable);
  CHECK(fm.stable_t_upper == f.stable_t_upper);
  CHECK(fm.gt_lower == f.gt_lower);
  CHECK(fm.gt_upper == f.gt_upper);
}

TEST_CASE("unknot") {
  GenusReport r = run("unknot:");
  CHECK(r.genus == 0);
  CHECK(r.signature_value == 0);
  CHECK(r.determinant == 1);
  CHECK(r.gt_upper == Rat(0));
  CHECK(r.stable_t_upper == Rat(0));
  CHECK_FALSE(r.theorem1.applicable);
  CHECK_FALSE(r.prop1.applicable);
  CHECK_FALSE(r.prop2.applicable);
}

TEST_CASE("composites are gated out of the clasp route") {
  GenusReport granny =
      run("granny: " + pdgen::connected_sum_pd(kTrefoil, kTrefoil));
  CHECK(granny.genus == 2);
  CHECK(granny.signature_value == 4);
  CHECK(granny.homogeneous);
  CHECK_FALSE(granny.prime_diagram);
  CHECK_FALSE(granny.theorem1.applicable);
  CHECK(granny.theorem1.reason.find("prime") != std::string::npos);
  CHECK(granny.gt_lower == Rat(2));
  CHECK(granny.gt_upper == Rat(2));

  GenusReport square = run(
      "square: " + pdgen::connected_sum_pd(kTrefoil, pdgen::mirror_pd(kTrefoil)));
  CHECK(square.genus == 2);
  CHECK(square.signature_value == 0);
  CHECK(square.determinant == 9);
  CHECK_FALSE(square.prime_diagram);
  CHECK_FALSE(square.theorem1.applicable);
}

TEST_CASE("non-homogeneous diagrams are reported conditionally") {
  std::string nonhom =
      "nonhom: X(9,12,10,1) X(8,2,9,1) X(2,8,3,7) X(6,4,7,3) X(4,11,5,12) "
      "X(10,5,11,6)";
  GenusReport r = run(nonhom);
  CHECK_FALSE(r.homogeneous);
  CHECK_FALSE(r.theorem1.applicable);
  CHECK(r.conditionality.find("not homogeneous") != std::string::npos);
  CHECK(r.taylor.kind == TaylorKind::Unknown);

  AnalyzeOptions opt;
  opt.assume_genus_minimal = true;
  GenusReport ra = run(nonhom, opt);
  CHECK(ra.conditionality.find("assumed") != std::string::npos);
  CHECK(ra.taylor.kind != TaylorKind::Unknown);
}

TEST_CASE("reducible diagrams are refused") {
  std::string kinked = pdgen::add_kink(kTrefoil, 2, 1);
  CHECK_THROWS_AS(run(kinked), NotReduced);
  try {
    run(kinked);
  } catch (const NotReduced& e) {
    CHECK(std::string(e.what()).find("crossing") != std::string::npos);
  }
}

TEST_CASE("matrix input") {
  GenusReport r = analyze_matrix(M({{1, 1}, {0, -5}}));
  CHECK(r.from_matrix);
  CHECK_FALSE(r.flags_available);
  CHECK(r.genus == 1);
  CHECK(r.signature_value == 0);
  CHECK(r.determinant == 21);
  CHECK(r.theorem1.applicable);
  CHECK(r.theorem1.value == Rat(2, 3));
  CHECK(r.prop1.applicable);
  CHECK_FALSE(r.prop2.applicable);
  CHECK_FALSE(r.smooth.applicable);
  CHECK(r.stable_t_upper == Rat(2, 3));
  CHECK(r.taylor.kind == TaylorKind::ObstructionHolds);
  CHECK(r.conditionality.find("matrix input") != std::string::npos);

  // genus 2 matrix with a mixed clasp-patterned pair
  Mat big = direct_sum(M({{2, 1}, {0, -3}}), M({{1, 1}, {0, 1}}));
  GenusReport r2 = analyze_matrix(big);
  CHECK(r2.genus == 2);
  CHECK(r2.theorem1.applicable);
  CHECK(r2.theorem1.value == Rat(5, 3));
  REQUIRE(r2.theorem1_witness.has_value());
  CHECK(r2.theorem1_witness->sol.p == 2);
  CHECK(r2.theorem1_witness->sol.n == 3);

  CHECK_THROWS_AS(analyze_matrix(M({{1, 0}, {0, 1}})), ValidationError);
  CHECK_THROWS_AS(analyze_matrix(Mat(3, 3)), ValidationError);
  CHECK_THROWS_AS(analyze_matrix(Mat(2, 3)), ValidationError);
}

TEST_CASE("doubled-sum taylor verdicts") {
  TaylorVerdict a = double_sum_taylor(1, 5);
  CHECK(a.kind == TaylorKind::ObstructionHolds);
  CHECK(a.detail.find("odd power") != std::string::npos);

  TaylorVerdict b = double_sum_taylor(1, 1);
  CHECK(b.kind == TaylorKind::Fails);
  CHECK(b.witness == std::vector<Int>{1, 0, 0, 1});

  TaylorVerdict c = double_sum_taylor(1, 2);
  CHECK(c.kind == TaylorKind::Fails);
  CHECK(c.witness == std::vector<Int>{1, 1, 0, 0});

  CHECK_THROWS_AS(double_sum_taylor(0, 1), ValidationError);

  // every verdict of this family is either a verified witness or a
  // fermat-certified absence
  for (long long p = 1; p <= 6; ++p)
    for (long long n = 1; n <= 6; ++n) {
      TaylorVerdict t = double_sum_taylor(p, n);
      CAPTURE(p);
      CAPTURE(n);
      CHECK(t.kind != TaylorKind::Unknown);
      if (t.kind == TaylorKind::Fails) {
        Mat block = M({{p, 1}, {0, -n}});
        Mat dbl = direct_sum(block, block);
        CHECK(framing(dbl, t.witness) == 0);
      }
    }
}

TEST_CASE("json reports are sound and deterministic") {
  std::string pd = "fig8: " + pdgen::twist_knot_pd(1);
  GenusReport r = run(pd);
  auto j = nlohmann::json::parse(report_json(r));
  CHECK(j["identity"]["name"] == "fig8");
  CHECK(j["identity"]["crossings"] == 4);
  CHECK(j["flags"]["homogeneous"] == true);
  CHECK(j["invariants"]["determinant"] == 5);
  CHECK(j["invariants"]["alexander"] == "t^-1 - 3 + t");
  CHECK(j["bounds"]["gt_upper"]["num"] == 1);
  CHECK(j["bounds"]["gt_upper"]["den"] == 1);
  CHECK(j["bounds"]["stable_t_upper"]["value"]["num"] == 1);
  CHECK(j["bounds"]["stable_t_upper"]["value"]["den"] == 2);
  CHECK(j["bounds"]["stable_t_upper"]["rule"] == "prop2");
  CHECK(j["bounds"]["theorem1"]["applicable"] == true);
  CHECK(j["bounds"]["prop2"]["value"]["num"] == 1);
  CHECK(j["taylor"]["verdict"] == "fails");
  CHECK(j["taylor"]["witness"].is_array());
  auto j2 = nlohmann::json::parse(report_json(run(pd)));
  CHECK(j == j2);

  std::string text = report_text(r);
  CHECK(text.find("stable g_t in [0, 1/2]") != std::string::npos);
  CHECK(text.find("theorem1") != std::string::npos);
}

TEST_CASE("height bound reaches the report") {
  AnalyzeOptions opt;
  opt.height_bound = 3;
  GenusReport r = analyze_matrix(M({{1, 1}, {0, -2}}), false, 3);
  CHECK_FALSE(r.lemma3.applicable);
  CHECK(r.lemma3.reason.find("3") != std::string::npos);
  (void)opt;
}

TEST_CASE("outer face override keeps conclusions stable") {
  Diagram d = parse_pd("k2: " + pdgen::twist_knot_pd(2));
  GenusReport base = analyze(d);
  Faces f = faces(d);
  for (int of = 0; of < f.count(); ++of) {
    CAPTURE(of);
    AnalyzeOptions opt;
    opt.outer_face = of;
    GenusReport r = analyze(d, opt);
    CHECK(r.genus == base.genus);
    CHECK(r.signature_value == base.signature_value);
    CHECK(r.determinant == base.determinant);
    CHECK(r.theorem1.applicable == base.theorem1.applicable);
  }
}
