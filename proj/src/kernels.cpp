#include "knotgap/kernels.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "knotgap/common.hpp"

namespace knotgap::kernels {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  for (; e; e >>= 1, a = mulmod(a, a, m))
    if (e & 1) r = mulmod(r, a, m);
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = 0;
  while (d % 2 == 0) d /= 2, ++r;
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (mulmod(x, x, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

// Appends the prime factors of n (with multiplicity, unordered).
void factorize(u64 n, std::vector<u64>& out) {
  while (n > 1) {
    if (is_prime(n)) {
      out.push_back(n);
      return;
    }
    u64 d = pollard_rho(n);
    factorize(d, out);
    n /= d;
  }
}

bool int64_path_ok(const Mat& s, int h, std::vector<long long>& sll) {
  sll.assign(size_t(s.r) * s.c, 0);
  long long cap = (1ll << 62) / (4ll * s.r * s.r * h * h);
  for (int i = 0; i < s.r; ++i)
    for (int j = 0; j < s.c; ++j) {
      const Int& e = s.at(i, j);
      if (e > cap || e < -cap) return false;
      sll[size_t(i) * s.c + j] = (long long)e;
    }
  return true;
}

long long eval_ll(const std::vector<long long>& sll, int d,
                  const std::vector<long long>& v) {
  long long q = 0;
  for (int i = 0; i < d; ++i) {
    long long row = 0;
    for (int j = 0; j < d; ++j) row += sll[size_t(i) * d + j] * v[j];
    q += row * v[i];
  }
  return q;
}

bool admissible(const std::vector<long long>& v, int h) {
  long long mx = 0, g = 0;
  int lead = 0;
  for (long long x : v) {
    if (x != 0 && lead == 0) lead = x > 0 ? 1 : -1;
    mx = std::max(mx, x < 0 ? -x : x);
    g = std::gcd(g, x < 0 ? -x : x);
  }
  return mx == h && g == 1 && lead > 0;
}

// Vectors with the given first coordinate, in lexicographic order.
void scan_tail(const Mat& s, const std::vector<long long>* sll, int h,
               long long first, std::vector<std::vector<long long>>& out) {
  int d = s.r;
  std::vector<long long> v(d, -h);
  v[0] = first;
  if (d == 1) {
    if (admissible(v, h) && s.at(0, 0) == 0) out.push_back(v);
    return;
  }
  for (;;) {
    if (admissible(v, h)) {
      bool zero;
      if (sll) {
        zero = eval_ll(*sll, d, v) == 0;
      } else {
        Int q = 0;
        for (int i = 0; i < d; ++i) {
          Int row = 0;
          for (int j = 0; j < d; ++j) row += s.at(i, j) * v[j];
          q += row * v[i];
        }
        zero = q == 0;
      }
      if (zero) out.push_back(v);
    }
    int i = d - 1;
    while (i >= 1 && v[i] == h) v[i--] = -h;
    if (i == 0) break;
    ++v[i];
  }
}

}  // namespace

std::vector<std::vector<long long>> isotropic_shell_serial(const Mat& s,
                                                           int h) {
  check_internal(s.r == s.c && s.r >= 1, "shell scan needs a square matrix");
  check_internal(h >= 1, "shell scan needs a positive height");
  std::vector<long long> sll;
  bool fast = int64_path_ok(s, h, sll);
  std::vector<std::vector<long long>> out;
  // A negative first coordinate can never lead a sign-normalized vector.
  for (long long first = 0; first <= h; ++first)
    scan_tail(s, fast ? &sll : nullptr, h, first, out);
  return out;
}

std::vector<std::vector<long long>> isotropic_shell_omp(const Mat& s, int h) {
  check_internal(s.r == s.c && s.r >= 1, "shell scan needs a square matrix");
  check_internal(h >= 1, "shell scan needs a positive height");
  std::vector<long long> sll;
  bool fast = int64_path_ok(s, h, sll);
  int lanes = h + 1;
  std::vector<std::vector<std::vector<long long>>> bucket(lanes);
#pragma omp parallel for schedule(dynamic)
  for (int lane = 0; lane < lanes; ++lane)
    scan_tail(s, fast ? &sll : nullptr, h, lane, bucket[lane]);
  std::vector<std::vector<long long>> out;
  for (auto& b : bucket)
    out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool is_sum_two_squares(unsigned long long t) {
  if (t == 0) return true;
  while (t % 2 == 0) t /= 2;
  std::vector<u64> ps;
  factorize(t, ps);
  std::sort(ps.begin(), ps.end());
  for (size_t i = 0; i < ps.size();) {
    size_t j = i;
    while (j < ps.size() && ps[j] == ps[i]) ++j;
    if (ps[i] % 4 == 3 && (j - i) % 2 == 1) return false;
    i = j;
  }
  return true;
}

std::vector<long long> dagger_shell_serial(long long m, long long lo,
                                           long long hi) {
  check_internal(m >= 1 && hi >= lo, "bad dagger shell range");
  lo = std::max(lo, 1ll);
  if (hi <= lo) return {};
  check_internal(hi <= ((1ll << 62) - 1 + (1ll << 62)) / m,
                 "dagger shell range overflows");
  std::vector<long long> out;
  for (long long s = lo; s < hi; ++s)
    if (is_sum_two_squares(u64(s)) && is_sum_two_squares(u64(m) * s - 1))
      out.push_back(s);
  return out;
}

std::vector<long long> dagger_shell_omp(long long m, long long lo,
                                        long long hi) {
  check_internal(m >= 1 && hi >= lo, "bad dagger shell range");
  lo = std::max(lo, 1ll);
  if (hi <= lo) return {};
  check_internal(hi <= ((1ll << 62) - 1 + (1ll << 62)) / m,
                 "dagger shell range overflows");
  std::vector<char> hit(size_t(hi - lo), 0);
#pragma omp parallel for schedule(dynamic, 64)
  for (long long s = lo; s < hi; ++s)
    hit[size_t(s - lo)] =
        is_sum_two_squares(u64(s)) && is_sum_two_squares(u64(m) * s - 1);
  std::vector<long long> out;
  for (long long s = lo; s < hi; ++s)
    if (hit[size_t(s - lo)]) out.push_back(s);
  return out;
}

}  // namespace knotgap::kernels
