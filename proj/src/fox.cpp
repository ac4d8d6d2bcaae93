#include "knotgap/fox.hpp"

namespace knotgap {

LaurentPoly alexander_fox(const Diagram& d) {
  int n = d.n();
  int m = d.edges();
  if (n == 0) return LaurentPoly::term(1, 0);

  // Arcs of the knot: a new arc starts after each under-passage.
  std::vector<char> breaks(m + 1, 0);
  for (auto& x : d.xs) breaks[x.a()] = 1;
  std::vector<int> arc_of(m + 1, 0);
  for (int e = 1, cnt = 0; e <= m; ++e) {
    arc_of[e] = cnt % n;
    if (breaks[e]) ++cnt;
  }
  // Wrap: edges past the last break join the arc of edge 1.
  {
    int total = 0;
    for (int e = 1; e <= m; ++e) total += breaks[e];
    check_internal(total == n, "expected one arc break per crossing");
  }

  if (n == 1) return LaurentPoly::term(Int(1), 0);

  // Wirtinger relation rows, with negative-crossing rows cleared by t.
  std::vector<std::vector<LaurentPoly>> rows(
      n, std::vector<LaurentPoly>(n, LaurentPoly::zero()));
  for (int k = 0; k < n; ++k) {
    auto& x = d.xs[k];
    int o = arc_of[x.over_in()];
    check_internal(o == arc_of[x.over_out()],
                   "over-strand changes arc at crossing");
    int u1 = arc_of[x.a()];
    int u2 = arc_of[x.c()];
    auto& row = rows[k];
    auto add = [&](int col, const LaurentPoly& p) {
      row[col] = lp_add(row[col], p);
    };
    if (x.sign > 0) {
      add(o, lp_add(LaurentPoly::term(Int(1), 0),
                    LaurentPoly::term(Int(-1), 1)));
      add(u1, LaurentPoly::term(Int(1), 1));
      add(u2, LaurentPoly::term(Int(-1), 0));
    } else {
      add(o, lp_add(LaurentPoly::term(Int(1), 1),
                    LaurentPoly::term(Int(-1), 0)));
      add(u1, LaurentPoly::term(Int(1), 0));
      add(u2, LaurentPoly::term(Int(-1), 1));
    }
  }

  // Delete the last row and column, evaluate, interpolate.
  int sz = n - 1;
  std::vector<Int> points, values;
  for (int k = -(n / 2 + 1); static_cast<int>(points.size()) < n + 1; ++k) {
    points.push_back(k);
    Mat mm(sz, sz);
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j) {
        Int v = 0;
        for (auto& [e, c] : rows[i][j].coeff) {
          check_internal(e >= 0, "unexpected negative exponent");
          Int p = 1;
          for (int q = 0; q < e; ++q) p *= k;
          v += c * p;
        }
        mm.at(i, j) = v;
      }
    values.push_back(bareiss_det(mm));
  }
  return normalize_alexander(interpolate_integer_poly(points, values));
}

}  // namespace knotgap
