#include "knotgap/dagger.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "knotgap/kernels.hpp"

namespace knotgap {
namespace {

Int imod(Int a, const Int& m) {
  a %= m;
  if (a < 0) a += m;
  return a;
}

Int egcd(const Int& a, const Int& b, Int& x, Int& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  Int x1, y1;
  Int g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

Int invmod(const Int& a, const Int& m) {
  Int x, y;
  Int g = egcd(imod(a, m), m, x, y);
  check_internal(g == 1, "modular inverse of a non-unit");
  return imod(x, m);
}

// Factoring with a per-call work budget; overruns surface as
// FactorizationTooLarge rather than a silent stall.
struct Budget {
  long long left;
  void spend(long long c, const Int& n) {
    left -= c;
    if (left < 0)
      throw FactorizationTooLarge("factoring budget exhausted near " +
                                  n.str());
  }
};

bool miller_rabin(const Int& n, Budget& b) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (n % p == 0) return n == p;
  Int d = n - 1;
  int r = 0;
  while (d % 2 == 0) d /= 2, ++r;
  // Deterministic for n below 3.3e24 with these twelve bases.
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    b.spend((long long)msb(n) + 1, n);
    Int x = powm(Int(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Int pollard_rho(const Int& n, Budget& b) {
  if (n % 2 == 0) return 2;
  for (Int c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    while (d == 1) {
      b.spend(1, n);
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_rec(Int n, Budget& b, std::map<Int, int>& out) {
  while (n > 1) {
    if (miller_rabin(n, b)) {
      ++out[n];
      return;
    }
    Int d = pollard_rho(n, b);
    factor_rec(d, b, out);
    n /= d;
  }
}

std::vector<std::pair<Int, int>> factorize(Int n) {
  check_internal(n >= 1, "factorization of a nonpositive number");
  Budget b{6'000'000};
  std::map<Int, int> m;
  for (int p : {2, 3, 5, 7, 11, 13}) {
    while (n % p == 0) {
      ++m[p];
      n /= p;
    }
  }
  if (n > 1) factor_rec(n, b, m);
  return {m.begin(), m.end()};
}

// Square root of a quadratic residue mod an odd prime, the smaller of the
// two roots (Tonelli-Shanks).
Int sqrt_mod(const Int& c0, const Int& q) {
  Int c = imod(c0, q);
  check_internal(c != 0, "square root of zero residue");
  check_internal(powm(c, (q - 1) / 2, q) == 1, "not a quadratic residue");
  Int r;
  if (q % 4 == 3) {
    r = powm(c, (q + 1) / 4, q);
  } else {
    Int s = q - 1;
    int e = 0;
    while (s % 2 == 0) s /= 2, ++e;
    Int z = 2;
    while (powm(z, (q - 1) / 2, q) != q - 1) ++z;
    Int om = powm(z, s, q);
    r = powm(c, (s + 1) / 2, q);
    Int t = powm(c, s, q);
    int mexp = e;
    while (t != 1) {
      Int tt = t;
      int i = 0;
      while (tt != 1) {
        tt = tt * tt % q;
        ++i;
      }
      Int bb = om;
      for (int j = 0; j < mexp - i - 1; ++j) bb = bb * bb % q;
      om = bb * bb % q;
      r = r * bb % q;
      t = t * om % q;
      mexp = i;
    }
  }
  return std::min(r, Int(q - r));
}

// Two-square representation of a prime p = 1 (mod 4) by the Hermite-Serret
// descent on a root of -1.
std::pair<Int, Int> prime_two_squares(const Int& p) {
  Int r = sqrt_mod(p - 1, p);
  Int x = p, y = r;
  while (y * y > p) {
    Int t = x % y;
    x = y;
    y = t;
  }
  Int u = y, v = x % y;
  check_internal(u * u + v * v == p, "two-square descent failed");
  return {std::max(u, v), std::min(u, v)};
}

Int eval_ddagger(const Int& m, const Int& xb1, const Int& xb2, const Int& yb1,
                 const Int& yb2) {
  return xb1 * xb1 + xb2 * xb2 - m * (yb1 * yb1 + yb2 * yb2);
}

long long search_ceiling() {
  const char* env = std::getenv("KNOTGAP_SEARCH_CEILING");
  if (!env) return 1'000'000;
  char* end = nullptr;
  long long v = std::strtoll(env, &end, 10);
  if (!end || *end != '\0' || v < 1 || v > 1'000'000'000'000ll)
    throw ValidationError(
        "KNOTGAP_SEARCH_CEILING must be a positive integer below 10^12");
  return v;
}

}  // namespace

std::optional<std::pair<Int, Int>> sum_two_squares(const Int& t) {
  check_internal(t >= 0, "two-square representation of a negative number");
  if (t == 0) return std::pair<Int, Int>{0, 0};
  auto fs = factorize(t);
  for (auto& [q, e] : fs)
    if (q % 4 == 3 && e % 2 == 1) return std::nullopt;
  Int a = 1, b = 0;
  for (auto& [q, e] : fs) {
    if (q == 2) {
      for (int i = 0; i < e; ++i) {
        Int na = a - b, nb = a + b;
        a = na;
        b = nb;
      }
    } else if (q % 4 == 3) {
      Int scale = 1;
      for (int i = 0; i < e / 2; ++i) scale *= q;
      a *= scale;
      b *= scale;
    } else {
      auto [c, d] = prime_two_squares(q);
      for (int i = 0; i < e; ++i) {
        Int na = a * c - b * d, nb = a * d + b * c;
        a = na;
        b = nb;
      }
    }
  }
  a = abs(a);
  b = abs(b);
  std::pair<Int, Int> out{std::max(a, b), std::min(a, b)};
  check_internal(out.first * out.first + out.second * out.second == t,
                 "two-square composition failed");
  return out;
}

DDaggerSolution solve_ddagger(long long p, long long n) {
  if (p < 1 || n < 1) throw ValidationError("p and n must be positive");
  Int m = 1 + 4 * Int(n) * Int(p);
  long long ceiling = search_ceiling();

  long long s_hit = -1;
  Int fit_cap = std::numeric_limits<long long>::max() / (ceiling + 1);
  if (m <= fit_cap) {
    long long mll = (long long)m;
    long long lo = 1, chunk = 64;  // grows; nearly every m is settled early
    while (lo <= ceiling && s_hit < 0) {
      long long hi = std::min(lo + chunk, ceiling + 1);
      auto hits = kernels::dagger_shell_omp(mll, lo, hi);
      if (!hits.empty()) s_hit = hits.front();
      lo = hi;
      chunk = std::min(chunk * 2, 4096ll);
    }
  } else {
    for (long long s = 1; s <= ceiling && s_hit < 0; ++s)
      if (sum_two_squares(Int(s)) && sum_two_squares(m * s - 1)) s_hit = s;
  }
  if (s_hit < 0)
    throw SearchExhausted("no (++) solution with s <= " +
                          std::to_string(ceiling) + " for m = " + m.str());

  auto ys = *sum_two_squares(Int(s_hit));
  auto xs = *sum_two_squares(m * s_hit - 1);
  DDaggerSolution out{m, xs.first, xs.second, ys.first, ys.second};
  check_internal(
      eval_ddagger(m, out.xb1, out.xb2, out.yb1, out.yb2) == -1,
      "(++) witness failed verification");
  return out;
}

bool verify_dagger(const DaggerSolution& s) {
  Int p = s.p, n = s.n;
  Int lhs = p * s.x1 * s.x1 + s.x1 * s.y1 - n * s.y1 * s.y1 + p * s.x2 * s.x2 +
            s.x2 * s.y2 - n * s.y2 * s.y2;
  return lhs == -p;
}

DaggerSolution solve_dagger(long long p, long long n) {
  DDaggerSolution d = solve_ddagger(p, n);
  DaggerSolution out;
  out.p = p;
  out.n = n;
  out.x1 = d.xb1 - d.yb1;
  out.y1 = 2 * Int(p) * d.yb1;
  out.x2 = d.xb2 - d.yb2;
  out.y2 = 2 * Int(p) * d.yb2;
  check_internal(verify_dagger(out), "(+) back-substitution failed");
  out.verified = true;
  return out;
}

LocalSolution hensel_lift_odd(const Int& q, int k, const LocalSolution& base,
                              const Int& m) {
  check_internal(q >= 3 && q % 2 == 1, "odd lift needs an odd prime");
  check_internal(k >= 2, "odd lift starts at k = 2");
  Int qk1 = 1;
  for (int i = 0; i + 1 < k; ++i) qk1 *= q;
  if (base.modulus != qk1)
    throw HypothesisViolated("base modulus is not q^(k-1)");
  Int f = eval_ddagger(m, base.xb1, base.xb2, base.yb1, base.yb2) + 1;
  if (imod(f, qk1) != 0)
    throw HypothesisViolated("base does not solve (++) mod q^(k-1)");

  Int qk = qk1 * q;
  LocalSolution out{qk, imod(base.xb1, qk), imod(base.xb2, qk),
                    imod(base.yb1, qk), imod(base.yb2, qk)};
  if (imod(f, qk) != 0) {
    if (imod(base.xb2, q) == 0)
      throw NoUnitCoordinate("xb2 = 0 (mod q), cannot divide by 2*xb2");
    Int alpha = imod(f / qk1, q);
    Int beta = imod(-alpha * invmod(2 * base.xb2, q), q);
    out.xb2 = imod(out.xb2 + qk1 * beta, qk);
  }
  check_internal(
      imod(eval_ddagger(m, out.xb1, out.xb2, out.yb1, out.yb2) + 1, qk) == 0,
      "odd Hensel lift failed verification");
  return out;
}

LocalSolution hensel_lift_two(int k, const LocalSolution& base, const Int& m) {
  check_internal(k >= 4, "2-adic lift starts at k = 4");
  if (m % 4 != 1) throw HypothesisViolated("2-adic lift needs m = 1 (mod 4)");
  if (base.xb1 % 2 == 0) throw HypothesisViolated("2-adic lift needs odd xb1");
  Int prev = Int(1) << (k - 1);
  Int full = prev * 2;
  if (base.modulus != prev)
    throw HypothesisViolated("base modulus is not 2^(k-1)");
  Int f = eval_ddagger(m, base.xb1, base.xb2, base.yb1, base.yb2) + 1;
  if (imod(f, prev) != 0)
    throw HypothesisViolated("base does not solve (++) mod 2^(k-1)");

  LocalSolution out{full, imod(base.xb1, full), imod(base.xb2, full),
                    imod(base.yb1, full), imod(base.yb2, full)};
  if (imod(f, full) != 0) {
    check_internal(imod(f, full) == prev, "2-adic residue is not 2^(k-1)");
    out.xb1 = imod(out.xb1 + (Int(1) << (k - 2)), full);
  }
  check_internal(
      imod(eval_ddagger(m, out.xb1, out.xb2, out.yb1, out.yb2) + 1, full) == 0,
      "2-adic Hensel lift failed verification");
  check_internal(out.xb1 % 2 == 1, "2-adic lift lost the odd coordinate");
  return out;
}

LocalSolution local_solvable(const Int& m, const Int& modulus) {
  check_internal(m >= 1, "local solvability needs positive m");
  check_internal(modulus >= 2, "modulus must be at least 2");
  if (m % 4 != 1)
    throw HypothesisViolated("local solvability implemented for m = 1 (mod 4)");

  LocalSolution acc{1, 0, 0, 0, 0};
  for (auto& [q, e] : factorize(modulus)) {
    LocalSolution part;
    if (q == 2) {
      // (1,0,1,1) solves (++) mod 8 for every m = 1 (mod 4).
      Int mod8 = Int(1) << std::min(e, 3);
      part = LocalSolution{mod8, imod(1, mod8), 0, imod(1, mod8),
                           imod(1, mod8)};
      for (int k = 4; k <= e; ++k) part = hensel_lift_two(k, part, m);
    } else {
      // Smallest xb1 with -1 - xb1^2 a nonzero square mod q; xb2 is then a
      // unit, as the odd lift requires.
      Int xb1 = 0, xb2 = -1;
      for (;; ++xb1) {
        Int c = imod(-1 - xb1 * xb1, q);
        if (c == 0) continue;
        if (powm(c, (q - 1) / 2, q) == 1) {
          xb2 = sqrt_mod(c, q);
          break;
        }
      }
      part = LocalSolution{q, xb1, xb2, 0, 0};
      for (int k = 2; k <= e; ++k) part = hensel_lift_odd(q, k, part, m);
    }

    if (acc.modulus == 1) {
      acc = part;
      continue;
    }
    Int m1 = acc.modulus, m2 = part.modulus;
    Int inv = invmod(m1 % m2, m2);
    auto glue = [&](const Int& r1, const Int& r2) {
      return imod(r1 + m1 * imod((r2 - r1) * inv, m2), m1 * m2);
    };
    acc = LocalSolution{m1 * m2, glue(acc.xb1, part.xb1),
                        glue(acc.xb2, part.xb2), glue(acc.yb1, part.yb1),
                        glue(acc.yb2, part.yb2)};
  }
  check_internal(acc.modulus == modulus, "prime powers do not rebuild modulus");
  check_internal(
      imod(eval_ddagger(m, acc.xb1, acc.xb2, acc.yb1, acc.yb2) + 1, modulus) ==
          0,
      "local solution failed verification");
  return acc;
}

IsotropyCertificate certify_isotropy(const Int& m) {
  check_internal(m >= 1, "isotropy certificate needs positive m");
  IsotropyCertificate out;
  out.m = m;
  for (auto& [q, e] : factorize(m)) {
    if (q % 4 == 3 && e % 2 == 1) {
      out.isotropic = false;
      out.q = q;
      out.e = e;
      return out;
    }
  }
  auto rep = sum_two_squares(m);
  check_internal(rep.has_value(), "Fermat criterion and factorization differ");
  out.isotropic = true;
  out.w1 = rep->first;
  out.w2 = rep->second;
  out.w3 = 1;
  out.w4 = 0;
  check_internal(out.w1 * out.w1 + out.w2 * out.w2 ==
                     m * (out.w3 * out.w3 + out.w4 * out.w4),
                 "isotropic witness failed verification");
  return out;
}

}  // namespace knotgap
