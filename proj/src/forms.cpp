#include "knotgap/forms.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "knotgap/kernels.hpp"

namespace knotgap {
namespace {

std::vector<Int> to_int_vec(const std::vector<long long>& v) {
  return {v.begin(), v.end()};
}

std::vector<Int> scaled(const std::vector<Int>& v, const Int& c) {
  std::vector<Int> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

std::vector<Int> vec_sub(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

std::vector<Int> concat(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Mat pattern_of(const Mat& v, const std::vector<Int>& x,
               const std::vector<Int>& y) {
  Mat p(2, 2);
  p.at(0, 0) = seifert_pairing(v, x, x);
  p.at(0, 1) = seifert_pairing(v, x, y);
  p.at(1, 0) = seifert_pairing(v, y, x);
  p.at(1, 1) = seifert_pairing(v, y, y);
  return p;
}

bool is_square(const Int& d) {
  if (d < 0) return false;
  Int r = sqrt(d);
  return r * r == d;
}

// Nearest integer to num/den with den > 0, halves rounded down.
Int nearest_div(const Int& num, const Int& den) {
  Int q = num / den;
  Int r = num - q * den;
  if (r < 0) {
    q -= 1;
    r += den;
  }
  if (2 * r > den) q += 1;
  return q;
}

// Basis of the integer null lattice of m, read off the Smith normal form.
std::vector<std::vector<Int>> null_lattice(const Mat& m) {
  Smith s = smith_normal_form(m);
  std::vector<std::vector<Int>> out;
  for (int j = 0; j < m.c; ++j) {
    bool in_null = j >= std::min(m.r, m.c) || s.d.at(j, j) == 0;
    if (!in_null) continue;
    std::vector<Int> col(m.c);
    for (int i = 0; i < m.c; ++i) col[i] = s.w.at(i, j);
    out.push_back(std::move(col));
  }
  return out;
}

// Greedy size reduction of w against the lattice basis, for a deterministic
// small representative of the solution coset.
std::vector<Int> size_reduce(std::vector<Int> w,
                             const std::vector<std::vector<Int>>& lattice) {
  for (int pass = 0; pass < 4; ++pass) {
    bool changed = false;
    for (const auto& u : lattice) {
      Int dot = 0, norm = 0;
      for (size_t i = 0; i < w.size(); ++i) {
        dot += w[i] * u[i];
        norm += u[i] * u[i];
      }
      if (norm == 0) continue;
      Int t = nearest_div(dot, norm);
      if (t == 0) continue;
      for (size_t i = 0; i < w.size(); ++i) w[i] -= t * u[i];
      changed = true;
    }
    if (!changed) break;
  }
  return w;
}

// (p, n) when v is the direct double of a block [[p,1],[0,-n]] with p, n >= 1.
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

std::string vec_str(const std::vector<Int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace

Int seifert_pairing(const Mat& v, const std::vector<Int>& x,
                    const std::vector<Int>& y) {
  check_internal(v.r == v.c, "pairing needs a square matrix");
  check_internal((int)x.size() == v.r && (int)y.size() == v.r,
                 "pairing vector size mismatch");
  Int out = 0;
  for (int i = 0; i < v.r; ++i)
    for (int j = 0; j < v.c; ++j) out += x[i] * v.at(i, j) * y[j];
  return out;
}

Int framing(const Mat& v, const std::vector<Int>& x) {
  return seifert_pairing(v, x, x);
}

NullPairResult find_null_pair(const Mat& v, int height_bound) {
  check_internal(v.r == v.c, "null-pair search needs a square matrix");
  check_internal(height_bound >= 1, "height bound must be positive");
  int n = v.r;
  if (n == 0) return NullPairAbsent{"the empty form has no rank-two subgroup"};

  Mat s = mat_add(v, v.transposed());
  Int ds = bareiss_det(s);
  if (ds != 0 && std::abs(signature(s)) == n)
    return NullPairAbsent{
        "the symmetrized form is definite, so no nonzero class is isotropic"};

  if (n == 2) {
    Int b = v.at(0, 1) + v.at(1, 0);
    Int disc = b * b - 4 * v.at(0, 0) * v.at(1, 1);
    if (!is_square(disc))
      return NullPairAbsent{"the framing form has discriminant " + disc.str() +
                            ", not a perfect square, so no nonzero class is "
                            "isotropic"};
  }

  if (auto pn = doubled_block(v)) {
    Int m = 1 + 4 * pn->first * pn->second;
    try {
      IsotropyCertificate cert = certify_isotropy(m);
      if (!cert.isotropic)
        return NullPairAbsent{
            "the doubled block reduces to x1^2 + x2^2 = " + m.str() +
            " (y1^2 + y2^2); the prime " + cert.q.str() +
            " = 3 (mod 4) divides " + m.str() +
            " to an odd power, so only the zero class is isotropic"};
    } catch (const FactorizationTooLarge&) {
      // fall through to the search
    }
  }

  for (int h = 1; h <= height_bound; ++h) {
    for (const auto& vll : kernels::isotropic_shell_omp(s, h)) {
      std::vector<Int> iso = to_int_vec(vll);
      Mat rows(2, n);
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
          rows.at(0, j) += iso[i] * v.at(i, j);  // V(iso, w) coefficients
          rows.at(1, j) += v.at(j, i) * iso[i];  // V(w, iso) coefficients
        }
      }
      auto lattice = null_lattice(rows);
      const std::pair<int, int> targets[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      for (auto [t1, t2] : targets) {
        auto sol = solve_integer(rows, {Int(t1), Int(t2)});
        if (!sol) continue;
        std::vector<Int> w = size_reduce(*sol, lattice);

        NullPairWitness out;
        if (t2 == 0) {
          out.v = iso;
          out.w = t1 == 1 ? w : scaled(w, -1);
          out.x = seifert_pairing(v, out.w, out.w);
        } else {
          std::vector<Int> w1 = t2 == 1 ? w : scaled(w, -1);
          Int c = seifert_pairing(v, w1, w1);
          out.v = vec_sub(w1, scaled(iso, c));
          out.w = iso;
          out.x = 0;
        }
        out.pattern = pattern_of(v, out.v, out.w);
        Mat want(2, 2);
        want.at(0, 1) = 1;
        want.at(1, 1) = out.x;
        check_internal(out.pattern == want, "null pair failed verification");
        return out;
      }
    }
  }

  std::string note = "no unimodular null pair with max-norm at most " +
                     std::to_string(height_bound);
  if (n == 2) {
    // Rank two with square discriminant: the isotropic lines exist but none
    // of them pairs unimodularly; name one for the report.
    for (int h = 1; h <= height_bound; ++h) {
      auto shell = kernels::isotropic_shell_omp(s, h);
      if (!shell.empty()) {
        note += "; the isotropic class v = " + vec_str(to_int_vec(shell[0])) +
                " exists but no dual vector achieves pairing values (1,0), "
                "(0,1), (-1,0) or (0,-1)";
        break;
      }
    }
  }
  return NullPairNotFound{height_bound, note};
}

StableWitness build_stable_witness(long long p, long long n,
                                   const DaggerSolution& sol) {
  if (p < 1 || n < 1) throw ValidationError("p and n must be positive");
  Int pp = p, nn = n;
  Int lhs = pp * sol.x1 * sol.x1 + sol.x1 * sol.y1 - nn * sol.y1 * sol.y1 +
            pp * sol.x2 * sol.x2 + sol.x2 * sol.y2 - nn * sol.y2 * sol.y2;
  if (lhs != -pp)
    throw VerificationFailed(
        "the quadratic identity fails: value " + lhs.str() + ", expected " +
        Int(-pp).str() + " for (p, n) = (" + std::to_string(p) + ", " +
        std::to_string(n) + ")");

  Mat block(std::vector<std::vector<long long>>{{p, 1}, {0, -n}});
  Mat big = direct_sum(direct_sum(block, block), block);

  StableWitness out;
  out.sol = sol;
  out.sol.p = p;
  out.sol.n = n;
  out.sol.verified = true;
  out.v = {1, 0, sol.x1, sol.y1, sol.x2, sol.y2};
  out.w = {0, 1, 0, 0, 0, 0};
  out.pattern = pattern_of(big, out.v, out.w);
  Mat want(std::vector<std::vector<long long>>{{0, 1}, {0, -n}});
  check_internal(out.pattern == want, "stable witness pattern mismatch");
  return out;
}

Prop1Result prop1_reduce(const Mat& v) {
  check_internal(v.r == 2 && v.c == 2, "genus-one matrix required");
  Int a = v.at(0, 0), c = v.at(1, 1);
  Int b = v.at(0, 1) + v.at(1, 0);
  Int skew = v.at(0, 1) - v.at(1, 0);
  Int disc = b * b - 4 * a * c;

  if (disc < 0 && a < 0)
    return {false, 0, {},
            "the framing form is negative definite, no class has framing +1"};
  if (skew != 1 && skew != -1)
    return {false, 0, {},
            "the intersection pairing is not unimodular on this matrix"};

  long long bound = 64;
  bool complete = false;
  if (disc < 0) {
    // Positive definite: 4a q = (2ax+by)^2 - disc y^2 bounds both
    // coordinates, so the search below is exhaustive.
    Int bx = sqrt(Int(4) * c / -disc) + 1;
    Int by = sqrt(Int(4) * a / -disc) + 1;
    bound = (long long)std::max(bx, by);
    complete = true;
  }

  for (long long h = 1; h <= bound; ++h) {
    for (long long x = 0; x <= h; ++x) {
      for (long long y = -h; y <= h; ++y) {
        if (std::max(x, std::abs(y)) != h) continue;
        if (x == 0 && y < 0) continue;
        if (std::gcd(x, std::abs(y)) != 1) continue;
        std::vector<Int> cand{x, y};
        if (framing(v, cand) != 1) continue;

        // Complete (x, y) to a basis: u*x + v*y = +-1 gives a second column
        // with determinant one.
        long long r0 = x, r1 = y, u0 = 1, u1 = 0, q0 = 0, q1 = 1;
        while (r1 != 0) {
          long long q = r0 / r1;
          long long r2 = r0 - q * r1, u2 = u0 - q * u1, q2 = q0 - q * q1;
          r0 = r1;
          r1 = r2;
          u0 = u1;
          u1 = u2;
          q0 = q1;
          q1 = q2;
        }
        check_internal(r0 == 1 || r0 == -1, "framing vector is not primitive");
        std::vector<Int> w{-q0 * r0, u0 * r0};  // x*(u0 g) - y*(-q0 g) = g^2
        Int beta = seifert_pairing(v, cand, w);
        Int gamma = seifert_pairing(v, w, cand);
        if (beta - gamma != 1) {
          w = scaled(w, -1);
          beta = -beta;
          gamma = -gamma;
        }
        check_internal(beta - gamma == 1, "basis change lost unimodularity");
        std::vector<Int> w2 = vec_sub(w, scaled(cand, gamma));
        Int delta = seifert_pairing(v, w2, w2);
        Mat got = pattern_of(v, cand, w2);
        Mat want(std::vector<std::vector<long long>>{{1, 1}, {0, 0}});
        want.at(1, 1) = delta;
        check_internal(got == want, "reduced matrix is not [[1,1],[0,-n]]");
        return {true, -delta, cand, ""};
      }
    }
  }
  if (complete)
    return {false, 0, {},
            "framing +1 is not represented (definite form, exhaustive search)"};
  return {false, 0, {},
          "no class of framing +1 with max-norm at most " +
              std::to_string(bound)};
}

NullPairWitness prop2_construct(const Mat& v, const std::vector<Int>& v_plus,
                                const std::vector<Int>& zeta,
                                const std::vector<Int>& v_minus) {
  check_internal(v.r == v.c, "square matrix required");
  int n = v.r;
  check_internal((int)v_plus.size() == n && (int)zeta.size() == n &&
                     (int)v_minus.size() == n,
                 "vector size mismatch");
  if (framing(v, v_plus) != 1)
    throw HypothesisViolated("v_plus must have framing +1, got " +
                             framing(v, v_plus).str());
  if (framing(v, v_minus) != -1)
    throw HypothesisViolated("v_minus must have framing -1, got " +
                             framing(v, v_minus).str());

  Int bgz = seifert_pairing(v, v_plus, zeta);
  Int bzg = seifert_pairing(v, zeta, v_plus);
  Int inter = bgz - bzg;
  if (inter != 1 && inter != -1)
    throw HypothesisViolated(
        "zeta must intersect v_plus exactly once, intersection number " +
        inter.str());

  std::vector<Int> z = zeta;
  if (inter == -1) z = scaled(z, -1);
  Int y = seifert_pairing(v, z, v_plus);

  Mat big = direct_sum(v, v);
  NullPairWitness out;
  out.v = concat(v_plus, v_minus);
  out.w = concat(vec_sub(z, scaled(v_plus, y)), std::vector<Int>(n, 0));
  out.pattern = pattern_of(big, out.v, out.w);
  out.x = out.pattern.at(1, 1);
  Mat want(2, 2);
  want.at(0, 1) = 1;
  want.at(1, 1) = out.x;
  check_internal(out.pattern == want, "doubled null pair failed verification");
  return out;
}

}  // namespace knotgap
