#include "knotgap/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace knotgap {

Mat::Mat(const std::vector<std::vector<long long>>& rows) {
  r = static_cast<int>(rows.size());
  c = r ? static_cast<int>(rows[0].size()) : 0;
  a.resize(size_t(r) * c);
  for (int i = 0; i < r; ++i) {
    check_internal(static_cast<int>(rows[i].size()) == c, "ragged matrix");
    for (int j = 0; j < c; ++j) at(i, j) = rows[i][j];
  }
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::transposed() const {
  Mat t(c, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat mat_add(const Mat& x, const Mat& y) {
  check_internal(x.r == y.r && x.c == y.c, "shape mismatch in mat_add");
  Mat z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  return z;
}

Mat mat_sub(const Mat& x, const Mat& y) {
  check_internal(x.r == y.r && x.c == y.c, "shape mismatch in mat_sub");
  Mat z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
  return z;
}

Mat mat_neg(const Mat& x) {
  Mat z = x;
  for (auto& v : z.a) v = -v;
  return z;
}

Mat mat_mul(const Mat& x, const Mat& y) {
  check_internal(x.c == y.r, "shape mismatch in mat_mul");
  Mat z(x.r, y.c);
  for (int i = 0; i < x.r; ++i)
    for (int k = 0; k < x.c; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.c; ++j) z.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return z;
}

Mat direct_sum(const Mat& x, const Mat& y) {
  Mat z(x.r + y.r, x.c + y.c);
  for (int i = 0; i < x.r; ++i)
    for (int j = 0; j < x.c; ++j) z.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.r; ++i)
    for (int j = 0; j < y.c; ++j) z.at(x.r + i, x.c + j) = y.at(i, j);
  return z;
}

std::string mat_to_string(const Mat& m) {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < m.r; ++i) {
    if (i) out << "; ";
    for (int j = 0; j < m.c; ++j) {
      if (j) out << ' ';
      out << m.at(i, j);
    }
  }
  out << ']';
  return out.str();
}

Int bareiss_det(Mat m) {
  check_internal(m.r == m.c, "determinant of non-square matrix");
  int n = m.r;
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p == -1) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        check_internal(num % prev == 0, "bareiss division not exact");
        m.at(i, j) = num / prev;
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

bool is_symmetric(const Mat& m) {
  if (m.r != m.c) return false;
  for (int i = 0; i < m.r; ++i)
    for (int j = i + 1; j < m.c; ++j)
      if (m.at(i, j) != m.at(j, i)) return false;
  return true;
}

bool is_skew_symmetric(const Mat& m) {
  if (m.r != m.c) return false;
  for (int i = 0; i < m.r; ++i)
    for (int j = i; j < m.c; ++j)
      if (m.at(i, j) != -m.at(j, i)) return false;
  return true;
}

int signature(const Mat& sym) {
  check_internal(is_symmetric(sym), "signature of non-symmetric matrix");
  int n = sym.r;
  std::vector<std::vector<Rat>> s(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s[i][j] = Rat(sym.at(i, j));

  int sig = 0;
  for (int i = 0; i < n; ++i) {
    if (s[i][i] == 0) {
      int jd = -1, jo = -1;
      for (int j = i + 1; j < n; ++j) {
        if (jd == -1 && s[j][j] != 0) jd = j;
        if (jo == -1 && s[i][j] != 0) jo = j;
      }
      if (jd != -1) {
        std::swap(s[i], s[jd]);
        for (int k = 0; k < n; ++k) std::swap(s[k][i], s[k][jd]);
      } else if (jo != -1) {
        for (int k = 0; k < n; ++k) s[i][k] += s[jo][k];
        for (int k = 0; k < n; ++k) s[k][i] += s[k][jo];
      } else {
        continue;  // null direction
      }
    }
    check_internal(s[i][i] != 0, "lost pivot in diagonalization");
    for (int j = i + 1; j < n; ++j) {
      if (s[i][j] == 0) continue;
      Rat f = s[i][j] / s[i][i];
      for (int k = 0; k < n; ++k) s[j][k] -= f * s[i][k];
      for (int k = 0; k < n; ++k) s[k][j] -= f * s[k][i];
    }
    sig += sgn(s[i][i]);
  }
  return sig;
}

namespace {

// Floor division rounding toward -inf, so remainders shrink monotonically.
Int fdiv(const Int& x, const Int& y) {
  Int q = x / y, r = x % y;
  if (r != 0 && ((r < 0) != (y < 0))) --q;
  return q;
}

void row_op(Mat& m, int dst, int src, const Int& f) {
  for (int j = 0; j < m.c; ++j) m.at(dst, j) -= f * m.at(src, j);
}

void col_op(Mat& m, int dst, int src, const Int& f) {
  for (int i = 0; i < m.r; ++i) m.at(i, dst) -= f * m.at(i, src);
}

}  // namespace

Smith smith_normal_form(const Mat& input) {
  Smith s{input, Mat::identity(input.r), Mat::identity(input.c)};
  Mat& d = s.d;
  int steps = std::min(d.r, d.c);

  for (int t = 0; t < steps; ++t) {
    // Pivot: smallest nonzero magnitude in the remaining block.
    int pi = -1, pj = -1;
    for (int i = t; i < d.r; ++i)
      for (int j = t; j < d.c; ++j) {
        if (d.at(i, j) == 0) continue;
        if (pi == -1 || abs(d.at(i, j)) < abs(d.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi == -1) break;
    if (pi != t) {
      for (int j = 0; j < d.c; ++j) std::swap(d.at(t, j), d.at(pi, j));
      for (int j = 0; j < s.u.c; ++j) std::swap(s.u.at(t, j), s.u.at(pi, j));
    }
    if (pj != t) {
      for (int i = 0; i < d.r; ++i) std::swap(d.at(i, t), d.at(i, pj));
      for (int i = 0; i < s.w.r; ++i) std::swap(s.w.at(i, t), s.w.at(i, pj));
    }

    for (bool clean = false; !clean;) {
      clean = true;
      for (int i = t + 1; i < d.r; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = fdiv(d.at(i, t), d.at(t, t));
        row_op(d, i, t, q);
        row_op(s.u, i, t, q);
        if (d.at(i, t) != 0) {
          for (int j = 0; j < d.c; ++j) std::swap(d.at(t, j), d.at(i, j));
          for (int j = 0; j < s.u.c; ++j)
            std::swap(s.u.at(t, j), s.u.at(i, j));
          clean = false;
        }
      }
      for (int j = t + 1; j < d.c; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = fdiv(d.at(t, j), d.at(t, t));
        col_op(d, j, t, q);
        col_op(s.w, j, t, q);
        if (d.at(t, j) != 0) {
          for (int i = 0; i < d.r; ++i) std::swap(d.at(i, t), d.at(i, j));
          for (int i = 0; i < s.w.r; ++i)
            std::swap(s.w.at(i, t), s.w.at(i, j));
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility fix-up.
      for (int i = t + 1; i < d.r && clean; ++i)
        for (int j = t + 1; j < d.c && clean; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            row_op(d, t, i, Int(-1));
            row_op(s.u, t, i, Int(-1));
            clean = false;
          }
    }
    if (d.at(t, t) < 0) {
      for (int j = 0; j < d.c; ++j) d.at(t, j) = -d.at(t, j);
      for (int j = 0; j < s.u.c; ++j) s.u.at(t, j) = -s.u.at(t, j);
    }
  }
  return s;
}

std::optional<std::vector<Int>> solve_integer(const Mat& m,
                                              const std::vector<Int>& b) {
  check_internal(static_cast<int>(b.size()) == m.r, "rhs size mismatch");
  Smith s = smith_normal_form(m);
  std::vector<Int> ub(m.r, 0);
  for (int i = 0; i < m.r; ++i)
    for (int j = 0; j < m.r; ++j) ub[i] += s.u.at(i, j) * b[j];
  std::vector<Int> y(m.c, 0);
  int steps = std::min(m.r, m.c);
  for (int i = 0; i < m.r; ++i) {
    Int di = i < steps ? s.d.at(i, i) : Int(0);
    if (di == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % di != 0) return std::nullopt;
      y[i] = ub[i] / di;
    }
  }
  std::vector<Int> x(m.c, 0);
  for (int i = 0; i < m.c; ++i)
    for (int j = 0; j < m.c; ++j) x[i] += s.w.at(i, j) * y[j];
  return x;
}

LaurentPoly LaurentPoly::term(const Int& c, int exp) {
  LaurentPoly p;
  if (c != 0) p.coeff[exp] = c;
  return p;
}

Int LaurentPoly::coefficient(int exp) const {
  auto it = coeff.find(exp);
  return it == coeff.end() ? Int(0) : it->second;
}

int LaurentPoly::min_exp() const {
  check_internal(!coeff.empty(), "min_exp of zero polynomial");
  return coeff.begin()->first;
}

int LaurentPoly::max_exp() const {
  check_internal(!coeff.empty(), "max_exp of zero polynomial");
  return coeff.rbegin()->first;
}

Int LaurentPoly::at_one() const {
  Int s = 0;
  for (auto& [e, c] : coeff) s += c;
  return s;
}

Int LaurentPoly::at_minus_one() const {
  Int s = 0;
  for (auto& [e, c] : coeff) s += (e % 2 == 0) ? c : -c;
  return s;
}

LaurentPoly lp_add(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly z = x;
  for (auto& [e, c] : y.coeff) {
    Int v = z.coefficient(e) + c;
    if (v == 0)
      z.coeff.erase(e);
    else
      z.coeff[e] = v;
  }
  return z;
}

LaurentPoly lp_sub(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly ny;
  for (auto& [e, c] : y.coeff) ny.coeff[e] = -c;
  return lp_add(x, ny);
}

LaurentPoly lp_mul(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly z;
  for (auto& [ex, cx] : x.coeff)
    for (auto& [ey, cy] : y.coeff) z.coeff[ex + ey] += cx * cy;
  for (auto it = z.coeff.begin(); it != z.coeff.end();)
    it = it->second == 0 ? z.coeff.erase(it) : std::next(it);
  return z;
}

LaurentPoly lp_shift(const LaurentPoly& x, int exp) {
  LaurentPoly z;
  for (auto& [e, c] : x.coeff) z.coeff[e + exp] = c;
  return z;
}

std::string lp_to_string(const LaurentPoly& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& [e, c] : x.coeff) {
    Int v = c;
    if (first) {
      if (v < 0) {
        out << "-";
        v = -v;
      }
    } else {
      out << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    if (e == 0) {
      out << v;
    } else {
      if (v != 1) out << v << "*";
      out << "t";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

LaurentPoly normalize_alexander(LaurentPoly p) {
  check_internal(!p.is_zero(), "zero polynomial cannot be normalized");
  int lo = p.min_exp(), hi = p.max_exp();
  check_internal((lo + hi) % 2 == 0, "polynomial span cannot be centered");
  p = lp_shift(p, -(lo + hi) / 2);
  if (p.coefficient(p.max_exp()) < 0)
    for (auto& [e, c] : p.coeff) c = -c;
  Int one = p.at_one();
  check_internal(one == 1 || one == -1, "polynomial value at 1 is not a unit");
  for (auto& [e, c] : p.coeff)
    check_internal(c == p.coefficient(-e), "polynomial is not symmetric");
  return p;
}

LaurentPoly interpolate_integer_poly(const std::vector<Int>& points,
                                     const std::vector<Int>& values) {
  check_internal(points.size() == values.size(), "interpolation size mismatch");
  int n = static_cast<int>(points.size());
  // Newton form with exact rational divided differences.
  std::vector<Rat> dd(n);
  for (int i = 0; i < n; ++i) dd[i] = Rat(values[i]);
  for (int level = 1; level < n; ++level)
    for (int i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rat(points[i] - points[i - level]);

  // Expand the Newton basis.
  std::vector<Rat> poly{dd[n - 1]};
  for (int i = n - 2; i >= 0; --i) {
    std::vector<Rat> next(poly.size() + 1, Rat(0));
    for (size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * Rat(points[i]);
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  LaurentPoly out;
  for (size_t j = 0; j < poly.size(); ++j) {
    check_internal(denominator(poly[j]) == 1,
                   "interpolated coefficient is not an integer");
    Int c = numerator(poly[j]);
    if (c != 0) out.coeff[static_cast<int>(j)] = c;
  }
  return out;
}

LaurentPoly alexander_from_seifert(const Mat& v) {
  check_internal(v.r == v.c, "seifert matrix must be square");
  int n = v.r;
  if (n == 0) return LaurentPoly::term(Int(1), 0);
  Mat vt = v.transposed();
  std::vector<Int> points, values;
  for (int k = -(n / 2 + 1); static_cast<int>(points.size()) < n + 1; ++k) {
    points.push_back(k);
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = v.at(i, j) - k * vt.at(i, j);
    values.push_back(bareiss_det(m));
  }
  return normalize_alexander(interpolate_integer_poly(points, values));
}

}  // namespace knotgap
