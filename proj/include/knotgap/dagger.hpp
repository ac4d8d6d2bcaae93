#pragma once

#include <optional>
#include <utility>

#include "knotgap/common.hpp"

namespace knotgap {

// A solution of (+): sum_i p*x_i^2 + x_i*y_i - n*y_i^2 = -p.
struct DaggerSolution {
  long long p = 0, n = 0;
  Int x1, y1, x2, y2;
  bool verified = false;
};

// A solution of (++): xb1^2 + xb2^2 - m*(yb1^2 + yb2^2) = -1 with
// m = 1 + 4np; the transform of (+) under x_i = xb_i - yb_i, y_i = 2p*yb_i.
struct DDaggerSolution {
  Int m;
  Int xb1, xb2, yb1, yb2;
};

// A solution of (++) modulo `modulus` (coordinates reduced to [0, modulus)).
struct LocalSolution {
  Int modulus;
  Int xb1, xb2, yb1, yb2;
};

struct IsotropyCertificate {
  Int m;
  bool isotropic = false;
  Int w1, w2, w3, w4;  // isotropic: w1^2 + w2^2 = m*(w3^2 + w4^2), nontrivial
  Int q;               // anisotropic: prime q = 3 (mod 4) ...
  int e = 0;           // ... dividing m to the odd exponent e
};

// Smallest s = yb1^2 + yb2^2 admitting a solution, then the canonical
// two-square representations of s and m*s - 1.  The search ceiling on s
// defaults to 10^6 and can be overridden via KNOTGAP_SEARCH_CEILING;
// reaching it raises SearchExhausted.
DDaggerSolution solve_ddagger(long long p, long long n);

// Back-substituted and exactly re-verified solution of (+).
DaggerSolution solve_dagger(long long p, long long n);

// True after exact re-evaluation of (+); solve_dagger output always passes.
bool verify_dagger(const DaggerSolution& s);

// A solution of (++) mod the given modulus, assembled prime power by prime
// power (Hensel lifts) and glued by the Chinese remainder theorem.
// Requires m = 1 (mod 4).
LocalSolution local_solvable(const Int& m, const Int& modulus);

// One lifting step mod an odd prime power: base is valid mod q^(k-1), the
// result mod q^k, adjusting xb2 by beta = -alpha/(2*xb2).  Throws
// NoUnitCoordinate when xb2 = 0 (mod q).
LocalSolution hensel_lift_odd(const Int& q, int k, const LocalSolution& base,
                              const Int& m);

// The 2-adic step for k >= 4: keeps xb1 odd, correcting by 2^(k-2) when the
// base is not already valid mod 2^k.  Requires m = 1 (mod 4).
LocalSolution hensel_lift_two(int k, const LocalSolution& base, const Int& m);

// Fermat's two-square criterion on the factorization of m: either an
// isotropic witness for X1^2 + X2^2 = m*(Y1^2 + Y2^2) or the obstructing
// prime.  Throws FactorizationTooLarge when m defeats the factoring budget.
IsotropyCertificate certify_isotropy(const Int& m);

// Canonical representation t = a^2 + b^2 (a >= b >= 0), or nullopt if none
// exists; built by composing representations of the prime factors.
std::optional<std::pair<Int, Int>> sum_two_squares(const Int& t);

}  // namespace knotgap
