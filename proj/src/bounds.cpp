#include "knotgap/bounds.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "knotgap/dagger.hpp"
#include "knotgap/kernels.hpp"

namespace knotgap {
namespace {

using json = nlohmann::ordered_json;

std::string vec_str(const std::vector<Int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

std::string mat2_str(const Mat& m) {
  check_internal(m.r == 2 && m.c == 2, "2x2 expected");
  return "[[" + m.at(0, 0).str() + "," + m.at(0, 1).str() + "],[" +
         m.at(1, 0).str() + "," + m.at(1, 1).str() + "]]";
}

std::string rat_str(const Rat& r) {
  Int num = numerator(r), den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool fits_ll(const Int& v) {
  return v >= std::numeric_limits<long long>::min() &&
         v <= std::numeric_limits<long long>::max();
}

json int_json(const Int& v) {
  if (fits_ll(v)) return (long long)v;
  return v.str();
}

json rat_json(const Rat& r) {
  return json{{"num", int_json(numerator(r))},
              {"den", int_json(denominator(r))}};
}

json rule_json(const BoundRule& b) {
  json j;
  j["rule"] = b.rule;
  j["applicable"] = b.applicable;
  j["value"] = b.applicable ? rat_json(b.value) : json();
  j["reason"] = b.reason;
  j["witness"] = b.witness;
  return j;
}

std::vector<Int> unit_vec(int n, int i, int sign = 1) {
  std::vector<Int> e(n, 0);
  e[i] = sign;
  return e;
}

// (p, n) when v is the direct double of a block [[p,1],[0,-n]], p, n >= 1.
std::optional<std::pair<Int, Int>> doubled_block(const Mat& v) {
  if (v.r != 4 || v.c != 4) return std::nullopt;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (v.at(i, j) != v.at(i + 2, j + 2)) return std::nullopt;
      if (v.at(i, j + 2) != 0 || v.at(i + 2, j) != 0) return std::nullopt;
    }
  if (v.at(0, 1) != 1 || v.at(1, 0) != 0) return std::nullopt;
  Int p = v.at(0, 0), n = -v.at(1, 1);
  if (p < 1 || n < 1) return std::nullopt;
  return std::pair<Int, Int>{p, n};
}

struct IsoStatus {
  TaylorKind kind = TaylorKind::Unknown;
  std::string detail;
  std::vector<Int> witness;
};

// Existence of a primitive class of framing zero, with the same absence
// certificates as the null-pair search.
IsoStatus isotropy_status(const Mat& v, int height_bound) {
  if (v.r == 0)
    return {TaylorKind::ObstructionHolds,
            "the empty form has no nonzero class", {}};
  Mat s = mat_add(v, v.transposed());
  if (bareiss_det(s) != 0 && std::abs(signature(s)) == v.r)
    return {TaylorKind::ObstructionHolds,
            "the symmetrized form is definite, so no nonzero class has "
            "framing 0",
            {}};
  if (v.r == 2) {
    Int b = v.at(0, 1) + v.at(1, 0);
    Int disc = b * b - 4 * v.at(0, 0) * v.at(1, 1);
    Int rt = disc < 0 ? Int(0) : sqrt(disc);
    if (disc < 0 || rt * rt != disc)
      return {TaylorKind::ObstructionHolds,
              "the framing form has discriminant " + disc.str() +
                  ", not a perfect square, so no nonzero class has framing 0",
              {}};
  }
  if (auto pn = doubled_block(v)) {
    Int m = 1 + 4 * pn->first * pn->second;
    try {
      IsotropyCertificate cert = certify_isotropy(m);
      if (!cert.isotropic)
        return {TaylorKind::ObstructionHolds,
                "the doubled block reduces to x1^2 + x2^2 = " + m.str() +
                    " (y1^2 + y2^2); the prime " + cert.q.str() +
                    " = 3 (mod 4) divides " + m.str() +
                    " to an odd power (exponent " + std::to_string(cert.e) +
                    "), so there is no framing-0 class",
                {}};
    } catch (const FactorizationTooLarge&) {
    }
  }
  for (int h = 1; h <= height_bound; ++h) {
    auto shell = kernels::isotropic_shell_omp(s, h);
    if (!shell.empty()) {
      std::vector<Int> w(shell[0].begin(), shell[0].end());
      check_internal(framing(v, w) == 0, "isotropic witness failed");
      return {TaylorKind::Fails,
              "the class " + vec_str(w) + " has framing 0", w};
    }
  }
  return {TaylorKind::Unknown,
          "no framing-0 class with max-norm at most " +
              std::to_string(height_bound) + ", and no absence certificate",
          {}};
}

void fill_invariants(GenusReport& r, const Mat& v) {
  r.seifert = v;
  r.genus = v.r / 2;
  if (v.r > 0) {
    Mat s = mat_add(v, v.transposed());
    r.signature_value = signature(s);
  }
  r.alexander = alexander_from_seifert(v);
  r.maxdeg = r.alexander.is_zero() ? 0 : r.alexander.max_exp();
  r.determinant = abs(r.alexander.at_minus_one());
  r.gt_lower = Rat(std::abs(r.signature_value), 2);
  r.gt_upper = Rat(std::min(r.genus, r.maxdeg));
  r.stable_t_lower = r.gt_lower;
  check_internal(r.gt_lower <= r.gt_upper,
                 "signature lower bound exceeds the upper bound");
}

void run_lemma3(GenusReport& r, const Mat& v, int height_bound) {
  r.lemma3.rule = "lemma3";
  if (r.genus == 0) {
    r.lemma3.reason = "genus 0, nothing to reduce";
    return;
  }
  NullPairResult res = find_null_pair(v, height_bound);
  if (auto* w = std::get_if<NullPairWitness>(&res)) {
    check_internal(framing(v, w->v) == 0 &&
                       seifert_pairing(v, w->v, w->w) == 1 &&
                       seifert_pairing(v, w->w, w->v) == 0 &&
                       framing(v, w->w) == w->x,
                   "null pair witness failed re-verification");
    r.lemma3.applicable = true;
    r.lemma3.value = Rat(r.genus - 1);
    r.lemma3.reason = "null pair found";
    r.lemma3.witness = "v = " + vec_str(w->v) + ", w = " + vec_str(w->w) +
                       ", restricted matrix " + mat2_str(w->pattern);
    r.lemma3_witness = *w;
  } else if (auto* a = std::get_if<NullPairAbsent>(&res)) {
    r.lemma3.reason = a->reason;
  } else {
    r.lemma3.reason = std::get<NullPairNotFound>(res).note;
  }
}

// Clasp-patterned pair of basis classes of a bare matrix: framings p and -n
// with pairing values (1, 0), the same normal form the diagram's clasp pair
// produces.
struct MatrixClasp {
  Int p, n;
  int i = -1, j = -1, sign = 1;
};

std::optional<MatrixClasp> find_matrix_clasp(const Mat& v) {
  for (int i = 0; i < v.r; ++i) {
    if (v.at(i, i) < 1) continue;
    for (int j = 0; j < v.r; ++j) {
      if (j == i || v.at(j, j) > -1) continue;
      for (int sign : {1, -1}) {
        if (v.at(i, j) * sign == 1 && v.at(j, i) * sign == 0)
          return MatrixClasp{v.at(i, i), -v.at(j, j), i, j, sign};
      }
    }
  }
  return std::nullopt;
}

void finish_theorem1(GenusReport& r, const Int& p, const Int& n,
                     const std::string& origin) {
  if (!fits_ll(p) || !fits_ll(n)) {
    r.theorem1.reason = "clasp framings too large for the identity solver";
    return;
  }
  long long pl = (long long)p, nl = (long long)n;
  try {
    DaggerSolution sol = solve_dagger(pl, nl);
    StableWitness w = build_stable_witness(pl, nl, sol);
    check_internal(verify_dagger(w.sol), "identity solution failed recheck");
    r.theorem1.applicable = true;
    r.theorem1.value = Rat(3 * r.genus - 1, 3);
    r.theorem1.reason = origin;
    r.theorem1.witness =
        "block [[" + p.str() + ",1],[0,-" + n.str() + "]]; identity solution" +
        " (x1,y1,x2,y2) = (" + sol.x1.str() + "," + sol.y1.str() + "," +
        sol.x2.str() + "," + sol.y2.str() + "); on the triple sum v = " +
        vec_str(w.v) + ", w = " + vec_str(w.w) + " give " +
        mat2_str(w.pattern);
    r.theorem1_witness = w;
  } catch (const SearchExhausted& e) {
    r.theorem1.reason = e.what();
  }
}

void run_prop1(GenusReport& r, const Mat& v) {
  r.prop1.rule = "prop1";
  if (r.genus != 1) {
    r.prop1.reason = "needs genus one, got " + std::to_string(r.genus);
    return;
  }
  if (r.signature_value != 0) {
    r.prop1.reason =
        "needs vanishing signature, got " + std::to_string(r.signature_value);
    return;
  }
  Prop1Result p1 = prop1_reduce(v);
  if (!p1.applicable) {
    r.prop1.reason = p1.reason;
    return;
  }
  check_internal(p1.n >= 0, "vanishing signature forces n >= 0");
  r.prop1.applicable = true;
  r.prop1.value = Rat(2, 3);
  r.prop1.reason = "genus one, signature 0, framing +1 class";
  r.prop1.witness = "v = " + vec_str(p1.v) +
                    " has framing +1; base change gives [[1,1],[0,-" +
                    p1.n.str() + "]]";
}

void run_prop2(GenusReport& r, const Mat& v,
               const std::vector<std::string>& labels) {
  r.prop2.rule = "prop2";
  int dim = v.r;
  int pi = -1, mi = -1, zi = -1;
  for (int i = 0; i < dim && pi < 0; ++i) {
    if (v.at(i, i) != 1) continue;
    for (int k = 0; k < dim && pi < 0; ++k) {
      if (k == i) continue;
      Int inter = v.at(i, k) - v.at(k, i);
      if (inter != 1 && inter != -1) continue;
      for (int j = 0; j < dim && pi < 0; ++j) {
        if (v.at(j, j) != -1) continue;
        pi = i;
        zi = k;
        mi = j;
      }
    }
  }
  if (pi < 0) {
    r.prop2.reason =
        "needs basis classes of framings +1 and -1 with a transverse dual "
        "class; none found";
    return;
  }
  NullPairWitness w = prop2_construct(v, unit_vec(dim, pi), unit_vec(dim, zi),
                                      unit_vec(dim, mi));
  Mat dbl = direct_sum(v, v);
  check_internal(framing(dbl, w.v) == 0 &&
                     seifert_pairing(dbl, w.v, w.w) == 1 &&
                     seifert_pairing(dbl, w.w, w.v) == 0,
                 "doubled pair failed re-verification");
  r.prop2.applicable = true;
  r.prop2.value = Rat(2 * r.genus - 1, 2);
  auto label = [&](int i) {
    return labels.empty() ? "basis class " + std::to_string(i) : labels[i];
  };
  r.prop2.reason = label(pi) + " has framing +1, " + label(mi) +
                   " has framing -1";
  r.prop2.witness = "on the double, v = " + vec_str(w.v) + " and w = " +
                    vec_str(w.w) + " give " + mat2_str(w.pattern);
}

void aggregate_stable(GenusReport& r) {
  Rat top = r.gt_upper;
  std::string top_rule = "g_t upper bound";
  if (r.lemma3.applicable && r.lemma3.value < top) {
    top = r.lemma3.value;
    top_rule = "lemma3";
  }
  r.stable_t_upper = top;
  r.stable_t_rule = top_rule;
  for (const BoundRule* b : {&r.theorem1, &r.prop1, &r.prop2}) {
    if (b->applicable && b->value < r.stable_t_upper) {
      r.stable_t_upper = b->value;
      r.stable_t_rule = b->rule;
    }
  }
  check_internal(r.stable_t_upper <= r.gt_upper,
                 "stable upper bound exceeds the topological one");
  check_internal(r.stable_t_lower <= r.stable_t_upper,
                 "stable lower bound exceeds the stable upper bound");
}

void run_taylor(GenusReport& r, const Mat& v, int height_bound,
                bool genus_minimal, const std::string& why_not) {
  if (!genus_minimal) {
    r.taylor.kind = TaylorKind::Unknown;
    r.taylor.subject = r.name;
    r.taylor.detail = why_not;
    r.taylor.consequence =
        "Taylor's theorem needs a genus-minimal surface; no conclusion";
    return;
  }
  if (r.genus == 1 && r.theorem1_witness) {
    TaylorVerdict t = double_sum_taylor((long long)r.theorem1_witness->sol.p,
                                        (long long)r.theorem1_witness->sol.n);
    t.subject = r.name + " # " + r.name;
    if (t.kind == TaylorKind::ObstructionHolds)
      t.consequence =
          "conditional on Taylor's theorem (conjectural in the topological "
          "category): the doubled knot has g_s = g = 2";
    r.taylor = t;
    return;
  }
  IsoStatus st = isotropy_status(v, height_bound);
  r.taylor.kind = st.kind;
  r.taylor.subject = r.name;
  r.taylor.detail = st.detail;
  r.taylor.witness = st.witness;
  switch (st.kind) {
    case TaylorKind::ObstructionHolds:
      r.taylor.consequence =
          "conditional on Taylor's theorem (conjectural in the topological "
          "category): g_s = g = " +
          std::to_string(r.genus);
      break;
    case TaylorKind::Fails:
      r.taylor.consequence =
          "a framing-0 class exists, the obstruction does not apply";
      break;
    case TaylorKind::Unknown:
      r.taylor.consequence = "inconclusive";
      break;
  }
}

}  // namespace

TaylorVerdict double_sum_taylor(long long p, long long n) {
  if (p < 1 || n < 1) throw ValidationError("p and n must be positive");
  TaylorVerdict out;
  Int m = 1 + 4 * Int(n) * Int(p);
  out.subject = "[[" + std::to_string(p) + ",1],[0,-" + std::to_string(n) +
                "]] doubled";
  IsotropyCertificate cert;
  try {
    cert = certify_isotropy(m);
  } catch (const FactorizationTooLarge& e) {
    out.kind = TaylorKind::Unknown;
    out.detail = e.what();
    out.consequence = "inconclusive";
    return out;
  }
  if (!cert.isotropic) {
    out.kind = TaylorKind::ObstructionHolds;
    out.detail =
        "multiplying the framing form by 4p and substituting X_i = 2p x_i + "
        "y_i yields X1^2 + X2^2 = " +
        m.str() + " (y1^2 + y2^2); the prime " + cert.q.str() +
        " = 3 (mod 4) divides " + m.str() + " to an odd power (exponent " +
        std::to_string(cert.e) + "), so there is no framing-0 class";
    out.consequence =
        "conditional on Taylor's theorem (conjectural in the topological "
        "category): the double has g_s = g = 2";
    return out;
  }

  // Translate (X1, X2, y1, y2) back through x_i = (X_i - y_i) / (2p); signs
  // and coordinate swaps give every congruence-compatible arrangement.
  Mat block(std::vector<std::vector<long long>>{{p, 1}, {0, -n}});
  Mat dbl = direct_sum(block, block);
  Int twop = 2 * Int(p);
  std::vector<std::pair<Int, Int>> xs = {{cert.w1, cert.w2},
                                         {cert.w2, cert.w1}};
  std::vector<std::pair<Int, Int>> ys = {{cert.w3, cert.w4},
                                         {cert.w4, cert.w3}};
  for (auto [xa, xb] : xs)
    for (int sx1 : {1, -1})
      for (int sx2 : {1, -1})
        for (auto [ya, yb] : ys)
          for (int sy1 : {1, -1})
            for (int sy2 : {1, -1}) {
              Int x1t = sx1 * xa, x2t = sx2 * xb;
              Int y1 = sy1 * ya, y2 = sy2 * yb;
              if ((x1t - y1) % twop != 0 || (x2t - y2) % twop != 0) continue;
              std::vector<Int> w{(x1t - y1) / twop, y1, (x2t - y2) / twop,
                                 y2};
              bool zero = w[0] == 0 && w[1] == 0 && w[2] == 0 && w[3] == 0;
              if (zero || framing(dbl, w) != 0) continue;
              out.kind = TaylorKind::Fails;
              out.detail = "the isotropic witness (" + cert.w1.str() + "," +
                           cert.w2.str() + "," + cert.w3.str() + "," +
                           cert.w4.str() + ") of X1^2 + X2^2 = " + m.str() +
                           " (y1^2 + y2^2) back-substitutes to " + vec_str(w);
              out.witness = w;
              out.consequence =
                  "a framing-0 class exists on the double, the obstruction "
                  "does not apply";
              return out;
            }

  // Congruence-incompatible witness: fall back to a direct search on the
  // doubled form.
  Mat s = mat_add(dbl, dbl.transposed());
  for (int h = 1; h <= 64; ++h) {
    auto shell = kernels::isotropic_shell_omp(s, h);
    if (shell.empty()) continue;
    std::vector<Int> w(shell[0].begin(), shell[0].end());
    check_internal(framing(dbl, w) == 0, "isotropic witness failed");
    out.kind = TaylorKind::Fails;
    out.detail = "direct search found the framing-0 class " + vec_str(w);
    out.witness = w;
    out.consequence =
        "a framing-0 class exists on the double, the obstruction does not "
        "apply";
    return out;
  }
  out.kind = TaylorKind::Unknown;
  out.detail = "isotropic over the rationals (witness " + cert.w1.str() +
               "," + cert.w2.str() + "," + cert.w3.str() + "," +
               cert.w4.str() + ") but no integer class found below max-norm "
               "64";
  out.consequence = "inconclusive";
  return out;
}

GenusReport analyze(const Diagram& d, const AnalyzeOptions& opt) {
  GenusReport r;
  r.name = d.name.empty() ? "(unnamed)" : d.name;
  r.crossings = d.n();
  r.writhe_value = writhe(d);
  r.seifert_circle_count = (int)seifert_circles(d).size();
  r.flags_available = true;

  Faces f = faces(d);
  r.reduced = is_reduced(d, f);
  if (!r.reduced) {
    int k = find_nugatory(d, f);
    throw NotReduced("crossing " + std::to_string(k) +
                     " is nugatory; untwist it first");
  }
  r.prime_diagram = is_prime_diagram(d);

  Surface s = build_surface(d, opt.outer_face);
  Homogeneity h = homogeneity(s);
  r.homogeneous = h.homogeneous;
  r.has_positive = h.has_positive;
  r.has_negative = h.has_negative;
  r.positive_or_negative = h.has_positive != h.has_negative;
  r.homogeneity_note = h.witness;

  fill_invariants(r, s.V);
  run_lemma3(r, s.V, opt.height_bound);

  r.theorem1.rule = "theorem1";
  std::vector<std::string> missing;
  if (!r.reduced) missing.push_back("reduced");
  if (!r.prime_diagram) missing.push_back("prime diagram");
  if (!r.homogeneous) missing.push_back("homogeneous");
  if (!(r.has_positive && r.has_negative))
    missing.push_back("crossings of both signs");
  if (!missing.empty()) {
    std::string why = "needs";
    for (size_t i = 0; i < missing.size(); ++i)
      why += (i ? ", " : " ") + missing[i];
    r.theorem1.reason = why;
  } else {
    try {
      ClaspPair cp = find_clasp_pair(s);
      finish_theorem1(r, cp.p, cp.n,
                      "diagram-certified: reduced, prime, homogeneous, both "
                      "signs; clasp faces " +
                          std::to_string(cp.plus_face) + " and " +
                          std::to_string(cp.minus_face));
    } catch (const KnotgapError& e) {
      r.theorem1.reason = e.what();
    }
  }

  r.smooth.rule = "smooth";
  if (!(r.homogeneous && r.has_positive && r.has_negative)) {
    r.smooth.reason = "needs a homogeneous diagram with both signs";
  } else {
    try {
      SignedCurves sc = find_signed_curves(s);
      Int p = sc.plus_framing, n = -sc.minus_framing;
      check_internal(p >= 1 && n >= 1, "signed curves failed re-verification");
      Rat value = Rat(r.genus) - Rat(1, p + n);
      r.smooth.applicable = true;
      r.smooth.value = value;
      r.smooth.reason = "homogeneous with both signs";
      r.smooth.witness = "face curves of faces " +
                         std::to_string(sc.plus_face) + " (framing " +
                         p.str() + ") and " + std::to_string(sc.minus_face) +
                         " (framing -" + n.str() + ") bound g - 1/(n+p)";
      r.stable_s_upper = value;
    } catch (const KnotgapError& e) {
      r.smooth.reason = e.what();
    }
  }

  run_prop1(r, s.V);
  {
    std::vector<std::string> labels;
    for (int fid : s.basis)
      labels.push_back("face-curve " + std::to_string(fid));
    run_prop2(r, s.V, labels);
  }
  aggregate_stable(r);

  bool gm = r.homogeneous || opt.assume_genus_minimal;
  std::string why_not =
      "the diagram is not homogeneous and genus minimality is not assumed";
  run_taylor(r, s.V, opt.height_bound, gm, why_not);

  if (r.homogeneous) {
    r.conditionality =
        "genus realized by this homogeneous diagram (Cromwell); bounds are "
        "diagram-certified";
  } else if (opt.assume_genus_minimal) {
    r.conditionality =
        "assumed genus-minimal: the diagram is not homogeneous, g is taken "
        "as the knot genus by assumption";
  } else {
    r.conditionality =
        "g is the genus of this diagram's surface; the knot genus may be "
        "smaller (diagram not homogeneous)";
  }
  return r;
}

GenusReport analyze_matrix(const Mat& v, bool assume_genus_minimal,
                           int height_bound) {
  if (v.r != v.c) throw ValidationError("Seifert matrix must be square");
  if (v.r % 2 != 0)
    throw ValidationError("a knot Seifert matrix has even rank");
  if (v.r > 0) {
    Mat skew = mat_sub(v, v.transposed());
    Int d = bareiss_det(skew);
    if (d != 1 && d != -1)
      throw ValidationError(
          "not a knot Seifert matrix: det(V - V^T) = " + d.str() +
          ", expected +-1");
  }

  GenusReport r;
  r.name = "(matrix)";
  r.from_matrix = true;
  r.flags_available = false;

  fill_invariants(r, v);
  run_lemma3(r, v, height_bound);

  r.theorem1.rule = "theorem1";
  if (auto cl = find_matrix_clasp(v)) {
    finish_theorem1(r, cl->p, cl->n,
                    "clasp-patterned basis pair (" + std::to_string(cl->i) +
                        ", " + std::to_string(cl->j) + ")");
  } else {
    r.theorem1.reason = "no clasp-patterned pair of basis classes";
  }

  r.smooth.rule = "smooth";
  r.smooth.reason = "needs a diagram (face curves unavailable)";

  run_prop1(r, v);
  run_prop2(r, v, {});
  aggregate_stable(r);
  run_taylor(r, v, height_bound, true, "");

  r.conditionality =
      "matrix input: every bound assumes the matrix is the Seifert form of "
      "a genus-minimal surface";
  (void)assume_genus_minimal;
  return r;
}

std::string report_text(const GenusReport& r) {
  std::ostringstream o;
  o << "knot " << r.name;
  if (r.flags_available) {
    o << ": " << r.crossings << " crossings, " << r.seifert_circle_count
      << " Seifert circles, writhe " << r.writhe_value << "\n";
    o << "  flags: " << (r.reduced ? "reduced" : "not reduced") << ", "
      << (r.prime_diagram ? "prime diagram" : "composite diagram") << ", "
      << (r.homogeneous ? "homogeneous" : "not homogeneous") << ", signs ";
    if (r.has_positive && r.has_negative)
      o << "{+,-}";
    else if (r.has_positive)
      o << "{+}";
    else if (r.has_negative)
      o << "{-}";
    else
      o << "{}";
    o << "\n";
  } else {
    o << " (matrix input)\n";
  }
  o << "  invariants: g " << r.genus << ", sigma " << r.signature_value
    << ", Delta " << lp_to_string(r.alexander) << " (maxdeg " << r.maxdeg
    << "), det " << r.determinant.str() << "\n";
  o << "  g_t in [" << rat_str(r.gt_lower) << ", " << rat_str(r.gt_upper)
    << "]";
  if (r.lemma3.applicable)
    o << "; lemma3: g_t <= " << rat_str(r.lemma3.value) << " ("
      << r.lemma3.witness << ")";
  else
    o << "; lemma3: " << r.lemma3.reason;
  o << "\n";
  o << "  stable g_t in [" << rat_str(r.stable_t_lower) << ", "
    << rat_str(r.stable_t_upper) << "] via " << r.stable_t_rule << "\n";
  for (const BoundRule* b : {&r.theorem1, &r.prop1, &r.prop2, &r.smooth}) {
    o << "    " << b->rule << ": ";
    if (b->applicable) {
      o << "<= " << rat_str(b->value) << " (" << b->reason << "; "
        << b->witness << ")";
    } else {
      o << "inapplicable: " << b->reason;
    }
    o << "\n";
  }
  if (r.stable_s_upper)
    o << "  stable g_s <= " << rat_str(*r.stable_s_upper) << "\n";
  o << "  taylor [" << r.taylor.subject << "]: ";
  switch (r.taylor.kind) {
    case TaylorKind::ObstructionHolds:
      o << "obstruction holds";
      break;
    case TaylorKind::Fails:
      o << "obstruction fails";
      break;
    case TaylorKind::Unknown:
      o << "unknown";
      break;
  }
  o << " -- " << r.taylor.detail << "; " << r.taylor.consequence << "\n";
  o << "  note: " << r.conditionality << "\n";
  return o.str();
}

std::string report_json(const GenusReport& r) {
  json j;
  j["identity"] = {{"name", r.name},
                   {"crossings", r.crossings},
                   {"seifert_circles", r.seifert_circle_count},
                   {"writhe", r.writhe_value}};
  j["flags"] = {{"available", r.flags_available},
                {"reduced", r.reduced},
                {"prime_diagram", r.prime_diagram},
                {"homogeneous", r.homogeneous},
                {"has_positive", r.has_positive},
                {"has_negative", r.has_negative},
                {"positive_or_negative", r.positive_or_negative},
                {"note", r.homogeneity_note}};
  j["invariants"] = {{"genus", r.genus},
                     {"signature", r.signature_value},
                     {"alexander", lp_to_string(r.alexander)},
                     {"maxdeg", r.maxdeg},
                     {"determinant", int_json(r.determinant)}};
  json b;
  b["gt_lower"] = rat_json(r.gt_lower);
  b["gt_upper"] = rat_json(r.gt_upper);
  b["lemma3"] = rule_json(r.lemma3);
  b["stable_t_lower"] = rat_json(r.stable_t_lower);
  b["stable_t_upper"] = {{"value", rat_json(r.stable_t_upper)},
                         {"rule", r.stable_t_rule}};
  b["theorem1"] = rule_json(r.theorem1);
  b["prop1"] = rule_json(r.prop1);
  b["prop2"] = rule_json(r.prop2);
  b["smooth"] = rule_json(r.smooth);
  b["stable_s_upper"] = r.stable_s_upper ? rat_json(*r.stable_s_upper)
                                         : json();
  j["bounds"] = b;
  json t;
  switch (r.taylor.kind) {
    case TaylorKind::ObstructionHolds:
      t["verdict"] = "obstruction_holds";
      break;
    case TaylorKind::Fails:
      t["verdict"] = "fails";
      break;
    case TaylorKind::Unknown:
      t["verdict"] = "unknown";
      break;
  }
  t["subject"] = r.taylor.subject;
  t["detail"] = r.taylor.detail;
  if (r.taylor.witness.empty()) {
    t["witness"] = json();
  } else {
    json w = json::array();
    for (const Int& x : r.taylor.witness) w.push_back(int_json(x));
    t["witness"] = w;
  }
  t["consequence"] = r.taylor.consequence;
  j["taylor"] = t;
  j["conditionality"] = r.conditionality;
  return j.dump();
}

}  // namespace knotgap
