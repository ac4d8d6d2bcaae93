#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knotgap/common.hpp"

namespace knotgap {

struct Mat {
  int r = 0, c = 0;
  std::vector<Int> a;

  Mat() = default;
  Mat(int rows, int cols) : r(rows), c(cols), a(size_t(rows) * cols, 0) {}
  explicit Mat(const std::vector<std::vector<long long>>& rows);

  Int& at(int i, int j) { return a[size_t(i) * c + j]; }
  const Int& at(int i, int j) const { return a[size_t(i) * c + j]; }

  static Mat identity(int n);
  Mat transposed() const;
  bool operator==(const Mat&) const = default;
};

Mat mat_add(const Mat& x, const Mat& y);
Mat mat_sub(const Mat& x, const Mat& y);
Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_neg(const Mat& x);
Mat direct_sum(const Mat& x, const Mat& y);
std::string mat_to_string(const Mat& m);

// Fraction-free determinant.
Int bareiss_det(Mat m);

// Signature of a symmetric integer matrix via congruence diagonalization
// over the rationals.
int signature(const Mat& s);

bool is_symmetric(const Mat& m);
bool is_skew_symmetric(const Mat& m);

// Smith normal form: u * input * w = d with u, w unimodular and the
// diagonal of d in divisibility order.
struct Smith {
  Mat d, u, w;
};
Smith smith_normal_form(const Mat& m);

// One solution of m x = b over the integers, if any.
std::optional<std::vector<Int>> solve_integer(const Mat& m,
                                              const std::vector<Int>& b);

struct LaurentPoly {
  std::map<int, Int> coeff;  // exponent -> coefficient, zeros stripped

  static LaurentPoly zero() { return {}; }
  static LaurentPoly term(const Int& c, int exp);
  bool is_zero() const { return coeff.empty(); }
  Int coefficient(int exp) const;
  int min_exp() const;
  int max_exp() const;
  Int at_one() const;
  Int at_minus_one() const;
  bool operator==(const LaurentPoly&) const = default;
};

LaurentPoly lp_add(const LaurentPoly& x, const LaurentPoly& y);
LaurentPoly lp_sub(const LaurentPoly& x, const LaurentPoly& y);
LaurentPoly lp_mul(const LaurentPoly& x, const LaurentPoly& y);
LaurentPoly lp_shift(const LaurentPoly& x, int exp);
std::string lp_to_string(const LaurentPoly& x);

// Multiply by +-t^k so the exponents are symmetric about zero and the leading
// coefficient is positive.  Fails on polynomials that cannot be centered this
// way or whose value at t=1 is not a unit.
LaurentPoly normalize_alexander(LaurentPoly p);

// det(v - t v^T), normalized.  The empty matrix gives the constant 1.
LaurentPoly alexander_from_seifert(const Mat& v);

// Exact interpolation: values[i] = p(points[i]) for a polynomial of degree
// < points.size() with integer coefficients.
LaurentPoly interpolate_integer_poly(const std::vector<Int>& points,
                                     const std::vector<Int>& values);

}  // namespace knotgap
