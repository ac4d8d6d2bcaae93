#pragma once

#include <vector>

#include "knotgap/algebra.hpp"

namespace knotgap::kernels {

// All primitive integer vectors v with max-norm exactly h, first nonzero
// entry positive, and v^T s v = 0 for symmetric s, in lexicographic order.
// The _omp variant splits the scan across threads but returns the
// identical list; both fall back to exact arithmetic when the int64 fast
// path could overflow.
std::vector<std::vector<long long>> isotropic_shell_serial(const Mat& s,
                                                           int h);
std::vector<std::vector<long long>> isotropic_shell_omp(const Mat& s, int h);

// Ascending s in [lo, hi) such that s and m*s - 1 are both sums of two
// squares; the candidate values for the quadratic search ceiling.
std::vector<long long> dagger_shell_serial(long long m, long long lo,
                                           long long hi);
std::vector<long long> dagger_shell_omp(long long m, long long lo,
                                        long long hi);

// Fermat's criterion on the factorization; exact for all of uint64.
bool is_sum_two_squares(unsigned long long t);

}  // namespace knotgap::kernels
