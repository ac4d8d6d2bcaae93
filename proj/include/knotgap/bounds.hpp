#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotgap/algebra.hpp"
#include "knotgap/common.hpp"
#include "knotgap/diagram.hpp"
#include "knotgap/forms.hpp"
#include "knotgap/surface.hpp"

namespace knotgap {

// One bound rule: whether its hypotheses hold, the value it certifies, and
// the evidence.  Inapplicable rules keep the reason instead.
struct BoundRule {
  std::string rule;
  bool applicable = false;
  Rat value;
  std::string reason;
  std::string witness;
};

enum class TaylorKind { ObstructionHolds, Fails, Unknown };

struct TaylorVerdict {
  TaylorKind kind = TaylorKind::Unknown;
  std::string subject;       // which form the verdict is about
  std::string detail;        // certificate or search-bound description
  std::vector<Int> witness;  // isotropic class when kind == Fails
  std::string consequence;
};

struct GenusReport {
  // identity
  std::string name;
  bool from_matrix = false;
  int crossings = 0;
  int seifert_circle_count = 0;
  int writhe_value = 0;

  // diagram-level flags; from_matrix reports leave them unavailable
  bool flags_available = false;
  bool reduced = false;
  bool prime_diagram = false;
  bool homogeneous = false;
  bool has_positive = false;
  bool has_negative = false;
  bool positive_or_negative = false;
  std::string homogeneity_note;

  // invariants
  int genus = 0;
  int signature_value = 0;
  LaurentPoly alexander;
  int maxdeg = 0;
  Int determinant;
  Mat seifert;

  // topological bounds
  Rat gt_lower;   // |sigma| / 2
  Rat gt_upper;   // min(genus, maxdeg)
  BoundRule lemma3;  // genus - 1 via a null pair on the form
  std::optional<NullPairWitness> lemma3_witness;

  // stable topological bounds
  Rat stable_t_lower;
  Rat stable_t_upper;
  std::string stable_t_rule;
  BoundRule theorem1, prop1, prop2;
  std::optional<StableWitness> theorem1_witness;

  // stable smooth bound
  BoundRule smooth;
  std::optional<Rat> stable_s_upper;

  TaylorVerdict taylor;
  std::string conditionality;
};

struct AnalyzeOptions {
  int outer_face = -1;
  int height_bound = 64;
  bool assume_genus_minimal = false;
};

// Full diagram pipeline: predicates, surface, Seifert matrix, invariants and
// every bound rule gated by its exact hypotheses.
GenusReport analyze(const Diagram& d, const AnalyzeOptions& opt = {});

// Matrix-only entry point; diagram-level branches are marked unavailable and
// the report notes that genus minimality of the source surface is assumed.
GenusReport analyze_matrix(const Mat& v, bool assume_genus_minimal = false,
                           int height_bound = 64);

// Obstruction check for the doubled block [[p,1],[0,-n]] (+) itself: reduce
// to x1^2 + x2^2 = (1+4np)(y1^2 + y2^2) and certify or refute isotropy, with
// back-substituted witnesses.
TaylorVerdict double_sum_taylor(long long p, long long n);

std::string report_text(const GenusReport& r);
std::string report_json(const GenusReport& r);

}  // namespace knotgap
