#include "support/pdgen.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "knotgap/diagram.hpp"

namespace pdgen {
namespace {

using knotgap::check_internal;
using knotgap::Crossing;
using knotgap::Diagram;

// Crossings with ports 0..3 in counterclockwise order (0 = SW, 1 = SE,
// 2 = NE, 3 = NW in the intended drawing); one strand runs through ports
// {0,2}, the other through {1,3}.  over02 marks the {0,2} strand as the
// overstrand.  Tracing the knot through the wiring assigns edge labels,
// and each crossing is emitted with the under-in edge first, then
// counterclockwise.
struct Wiring {
  int n = 0;
  std::vector<std::array<std::pair<int, int>, 4>> link;
  std::vector<char> over02;

  explicit Wiring(int crossings) : n(crossings) {
    link.assign(n, {std::pair{-1, -1}, {-1, -1}, {-1, -1}, {-1, -1}});
    over02.assign(n, 0);
  }

  void join(int k1, int p1, int k2, int p2) {
    check_internal(link[k1][p1].first < 0 && link[k2][p2].first < 0,
                   "port wired twice");
    link[k1][p1] = {k2, p2};
    link[k2][p2] = {k1, p1};
  }

  std::string trace(int start_k, int start_p) const {
    std::vector<std::array<int, 4>> edge_at(n, {0, 0, 0, 0});
    std::vector<std::array<char, 4>> entered(n, {0, 0, 0, 0});
    int k = start_k, p = start_p, label = 0;
    do {
      ++label;
      edge_at[k][p] = label;
      auto [k2, p2] = link[k][p];
      check_internal(k2 >= 0, "unwired port reached");
      edge_at[k2][p2] = label;
      entered[k2][p2] = 1;
      k = k2;
      p = (p2 + 2) % 4;
    } while (k != start_k || p != start_p);
    check_internal(label == 2 * n, "wiring does not trace a knot");

    std::string out;
    for (int i = 0; i < n; ++i) {
      int a = over02[i] ? (entered[i][1] ? 1 : 3) : (entered[i][0] ? 0 : 2);
      check_internal(entered[i][a] != 0, "under strand entry missing");
      out += out.empty() ? "X(" : " X(";
      for (int s = 0; s < 4; ++s) {
        out += std::to_string(edge_at[i][(a + s) % 4]);
        out += s == 3 ? ')' : ',';
      }
    }
    return out;
  }
};

// Slot classification: the understrand enters at slot 0 and leaves at
// slot 2; the overstrand enters at slot 1 for positive crossings and at
// slot 3 for negative ones.
bool outgoing_slot(const Crossing& x, int slot) {
  return slot == 2 || slot == (x.sign > 0 ? 3 : 1);
}

// Accepts "" as the 0-crossing unknot alongside regular codes.
Diagram parse_loose(const std::string& pd) {
  if (pd.find_first_not_of(" \t\n") == std::string::npos)
    return knotgap::parse_pd("unknot:");
  return knotgap::parse_pd(pd);
}

}  // namespace

std::string twist_knot_pd(int n) {
  check_internal(n >= 1, "twist knot needs at least one full twist");

  // Plat closure of the four-strand braid word sigma2^(2n) sigma1 sigma2:
  // a tower of 2n twist crossings t0..t_{2n-1} between the middle strands,
  // clasped off by crossings u and v.  Handedness is fixed so that the
  // clasp band has framing +1 and the twist band framing -n.
  int t = 2 * n;
  Wiring w(t + 2);
  int u = t, v = t + 1;
  for (int i = 0; i + 1 < t; ++i) {
    w.join(i, 3, i + 1, 0);
    w.join(i, 2, i + 1, 1);
  }
  w.join(u, 1, t - 1, 3);
  w.join(v, 0, u, 2);
  w.join(v, 1, t - 1, 2);
  w.join(u, 0, 0, 0);  // bottom cap of strands 1,2
  w.join(0, 1, v, 2);  // right-hand arc through the uncrossed strand 4
  w.join(u, 3, v, 3);  // top cap of strands 1,2
  w.over02[u] = 1;
  return w.trace(0, 2);
}

std::string connected_sum_pd(const std::string& a, const std::string& b) {
  Diagram da = parse_loose(a);
  Diagram db = parse_loose(b);
  if (da.n() == 0) return b;
  if (db.n() == 0) return a;
  int twok = db.edges();

  // Cut edge 1 of each diagram and cross-join the four half-edges.  The
  // sum's traversal runs: tail half of a's edge 1, all of b, head half of
  // a's edge 1, rest of a.
  Diagram sum;
  for (const Crossing& x : da.xs) {
    Crossing y = x;
    for (int s = 0; s < 4; ++s) {
      if (x.s[s] == 1)
        y.s[s] = outgoing_slot(x, s) ? 1 : twok + 1;
      else
        y.s[s] = x.s[s] + twok;
    }
    sum.xs.push_back(y);
  }
  for (const Crossing& x : db.xs) {
    Crossing y = x;
    for (int s = 0; s < 4; ++s)
      if (x.s[s] == 1) y.s[s] = outgoing_slot(x, s) ? twok + 1 : 1;
    sum.xs.push_back(y);
  }
  return to_pd(sum);
}

std::string add_kink(const std::string& pd, int e, int sign) {
  check_internal(sign == 1 || sign == -1, "kink sign must be +-1");
  Diagram d = parse_loose(pd);
  if (d.n() == 0)
    return sign > 0 ? "X(2,1,1,2)" : "X(1,1,2,2)";
  check_internal(e >= 1 && e <= d.edges(), "kink edge out of range");

  // Edge e splits into e (tail half), e + 1 (the loop), e + 2 (head half).
  Diagram out;
  for (const Crossing& x : d.xs) {
    Crossing y = x;
    for (int s = 0; s < 4; ++s) {
      if (x.s[s] > e)
        y.s[s] = x.s[s] + 2;
      else if (x.s[s] == e && !outgoing_slot(x, s))
        y.s[s] = e + 2;
    }
    out.xs.push_back(y);
  }
  Crossing k;
  if (sign > 0)
    k.s = {e + 1, e, e + 2, e + 1};
  else
    k.s = {e, e + 2, e + 1, e + 1};
  out.xs.push_back(k);
  return to_pd(out);
}

std::string mirror_pd(const std::string& pd) {
  Diagram d = parse_loose(pd);
  d.name.clear();
  return to_pd(knotgap::mirror(d));
}

}  // namespace pdgen
