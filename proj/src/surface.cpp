#include "knotgap/surface.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace knotgap {

namespace detail {
void fill_pairings(Surface& s);  // pairing.cpp
}

namespace {

void check_connected(const Diagram& d, const Faces& f) {
  int n = d.n();
  if (n == 0) return;
  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int v) {
    while (uf[v] != v) v = uf[v] = uf[uf[v]];
    return v;
  };
  for (int e = 1; e <= d.edges(); ++e)
    uf[find(f.tail_dart[e] / 4)] = find(f.head_dart[e] / 4);
  for (int k = 1; k < n; ++k)
    if (find(k) != find(0))
      throw Disconnected("diagram universe is not connected");
}

Surface build_trivial(const Diagram& d, int outer_face) {
  Surface s;
  s.d = d;
  s.f = faces(d);
  s.outer_face = outer_face >= 0 ? outer_face : 0;
  check_internal(s.outer_face < 2, "outer face out of range");
  s.circles = {{}};
  s.inside.assign(2, std::vector<char>(1, 0));
  s.encloses.assign(1, std::vector<char>(1, 0));
  s.parent = {-1};
  s.depth = {0};
  s.sigma = {1};
  s.junction_crossing = {{}};
  s.steps.assign(2, {});
  int inner = 1 - s.outer_face;
  s.steps[inner] = {Surface::Step{Surface::Step::Ring, -1, false, 0, -1, -1, -1}};
  s.cls.assign(2, {});
  s.crossing_set.assign(2, {});
  s.twist_sum.assign(2, 0);
  s.framing.assign(2, Int(0));
  s.V = Mat(0, 0);
  return s;
}

}  // namespace

Surface build_surface(const Diagram& d, int outer_face) {
  if (d.n() == 0) return build_trivial(d, outer_face);

  Surface s;
  s.d = d;
  s.f = faces(d);
  int n = d.n();
  int nf = s.f.count();

  if (outer_face >= nf)
    throw ValidationError("outer face id out of range");
  int nug = find_nugatory(d, s.f);
  if (nug != -1)
    throw NotReduced("crossing " + std::to_string(nug) +
                     " is nugatory (two opposite quadrants share a face)");
  check_connected(d, s.f);
  s.outer_face = outer_face >= 0 ? outer_face : s.f.left_face(1);

  // Circles and positions.
  s.circles = seifert_circles(d);
  int ns = s.n_circles();
  s.circle_of.assign(d.edges() + 1, -1);
  s.idx_on_circle.assign(d.edges() + 1, -1);
  for (int i = 0; i < ns; ++i)
    for (size_t q = 0; q < s.circles[i].size(); ++q) {
      s.circle_of[s.circles[i][q]] = i;
      s.idx_on_circle[s.circles[i][q]] = static_cast<int>(q);
    }

  // Band sites.  Junction q of a circle joins its edges q and q+1.
  s.sites.resize(n);
  s.junction_crossing.assign(ns, {});
  for (int i = 0; i < ns; ++i)
    s.junction_crossing[i].assign(s.circles[i].size(), -1);
  for (int k = 0; k < n; ++k) {
    auto& x = d.xs[k];
    auto& site = s.sites[k];
    if (x.sign > 0) {
      site.west = s.circle_of[x.a()];
      site.wjunc = s.idx_on_circle[x.a()];
      site.east = s.circle_of[x.b()];
      site.ejunc = s.idx_on_circle[x.b()];
      site.south = s.f.at_quadrant(k, 0);
      site.east_face = s.f.at_quadrant(k, 1);
      site.north = s.f.at_quadrant(k, 2);
      site.west_face = s.f.at_quadrant(k, 3);
    } else {
      site.west = s.circle_of[x.d()];
      site.wjunc = s.idx_on_circle[x.d()];
      site.east = s.circle_of[x.a()];
      site.ejunc = s.idx_on_circle[x.a()];
      site.east_face = s.f.at_quadrant(k, 0);
      site.north = s.f.at_quadrant(k, 1);
      site.west_face = s.f.at_quadrant(k, 2);
      site.south = s.f.at_quadrant(k, 3);
    }
    check_internal(site.west != site.east, "band attaches a circle to itself");
    check_internal(site.north != site.south, "band faces coincide");
    s.junction_crossing[site.west][site.wjunc] = k;
    s.junction_crossing[site.east][site.ejunc] = k;
  }
  for (int i = 0; i < ns; ++i)
    for (int c : s.junction_crossing[i])
      check_internal(c != -1, "junction without a crossing");

  // Side parities: crossing an edge of circle c toggles the c-bit.
  s.inside.assign(nf, std::vector<char>(ns, 0));
  {
    std::vector<char> seen(nf, 0);
    std::queue<int> bfs;
    seen[s.outer_face] = 1;
    bfs.push(s.outer_face);
    while (!bfs.empty()) {
      int fid = bfs.front();
      bfs.pop();
      for (int e = 1; e <= d.edges(); ++e) {
        int lf = s.f.left_face(e), rf = s.f.right_face(e);
        int other = lf == fid ? rf : (rf == fid ? lf : -1);
        if (other == -1) continue;
        std::vector<char> par = s.inside[fid];
        par[s.circle_of[e]] ^= 1;
        if (!seen[other]) {
          seen[other] = 1;
          s.inside[other] = par;
          bfs.push(other);
        } else {
          check_internal(s.inside[other] == par, "side parity inconsistent");
        }
      }
    }
    for (char v : seen) check_internal(v, "face graph not connected");
  }

  // Circle nesting from the parities of adjacent faces.
  s.encloses.assign(ns, std::vector<char>(ns, 0));
  for (int t = 0; t < ns; ++t) {
    int e0 = s.circles[t][0];
    int fid = s.f.left_face(e0);
    for (int p = 0; p < ns; ++p)
      if (p != t && s.inside[fid][p]) s.encloses[p][t] = 1;
  }
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < ns; ++b)
      check_internal(!(s.encloses[a][b] && s.encloses[b][a]),
                     "circle containment is not antisymmetric");
  s.depth.assign(ns, 0);
  s.parent.assign(ns, -1);
  for (int t = 0; t < ns; ++t)
    for (int p = 0; p < ns; ++p)
      if (s.encloses[p][t]) ++s.depth[t];
  for (int t = 0; t < ns; ++t) {
    for (int p = 0; p < ns; ++p)
      if (s.encloses[p][t] && s.depth[p] == s.depth[t] - 1) {
        check_internal(s.parent[t] == -1, "ambiguous nesting parent");
        s.parent[t] = p;
      }
    check_internal((s.depth[t] == 0) == (s.parent[t] == -1),
                   "nesting parent missing");
  }

  // Plane orientation: +1 when the interior lies left of the travel
  // direction.
  s.sigma.assign(ns, 0);
  for (int i = 0; i < ns; ++i) {
    for (int e : s.circles[i]) {
      int v = s.inside[s.f.left_face(e)][i] ? 1 : -1;
      check_internal(!s.inside[s.f.left_face(e)][i] ||
                         !s.inside[s.f.right_face(e)][i],
                     "edge with both sides inside its own circle");
      check_internal(s.inside[s.f.left_face(e)][i] ||
                         s.inside[s.f.right_face(e)][i],
                     "edge with neither side inside its own circle");
      if (s.sigma[i] == 0)
        s.sigma[i] = v;
      else
        check_internal(s.sigma[i] == v, "circle orientation inconsistent");
    }
  }

  // Band type.
  for (int k = 0; k < n; ++k) {
    auto& site = s.sites[k];
    if (s.encloses[site.west][site.east]) {
      site.climb = true;
      site.parent_west = true;
      check_internal(s.parent[site.east] == site.west,
                     "band skips a nesting level");
      check_internal(s.sigma[site.west] == s.sigma[site.east],
                     "nested band circles with opposite orientation");
    } else if (s.encloses[site.east][site.west]) {
      site.climb = true;
      site.parent_west = false;
      check_internal(s.parent[site.west] == site.east,
                     "band skips a nesting level");
      check_internal(s.sigma[site.west] == s.sigma[site.east],
                     "nested band circles with opposite orientation");
    } else {
      site.climb = false;
      check_internal(s.parent[site.west] == s.parent[site.east],
                     "side-by-side band circles with different parents");
      check_internal(s.sigma[site.west] == -s.sigma[site.east],
                     "side-by-side band circles with equal orientation");
    }
  }

  // Face walks: passages in orbit order, then steps.
  s.steps.assign(nf, {});
  s.cls.assign(nf, std::vector<Int>(n, 0));
  s.crossing_set.assign(nf, {});
  s.twist_sum.assign(nf, 0);
  for (int fid = 0; fid < nf; ++fid) {
    struct Passage {
      bool band;
      int crossing;
      bool west_to_east;  // band
      int circle, junction, dir;  // arc
      int depart_edge, depart_dart;
    };
    std::vector<Passage> ps;
    for (int dart : s.f.orbit[fid]) {
      int k = dart / 4, slot = dart % 4;
      int sprev = (slot + 3) % 4;
      auto& x = d.xs[k];
      auto& site = s.sites[k];
      bool band_quadrant =
          x.sign > 0 ? (sprev == 0 || sprev == 2) : (sprev == 1 || sprev == 3);
      Passage p{};
      p.crossing = k;
      p.depart_edge = x.s[slot];
      p.depart_dart = dart;
      int arrive = x.s[sprev];
      if (band_quadrant) {
        p.band = true;
        int ac = s.circle_of[arrive];
        check_internal(ac == site.west || ac == site.east,
                       "band arrival circle mismatch");
        p.west_to_east = ac == site.west;
      } else {
        p.band = false;
        p.circle = s.circle_of[arrive];
        check_internal(p.circle == s.circle_of[p.depart_edge],
                       "arc passage changes circle");
        bool west_side = p.circle == site.west;
        check_internal(west_side || p.circle == site.east,
                       "arc passage circle not at this crossing");
        p.junction = west_side ? site.wjunc : site.ejunc;
        p.dir = s.f.head_dart[arrive] == 4 * k + sprev ? 1 : -1;
      }
      ps.push_back(p);
    }

    int first_band = -1;
    for (size_t i = 0; i < ps.size(); ++i)
      if (ps[i].band) {
        first_band = static_cast<int>(i);
        break;
      }

    if (first_band == -1) {
      // Ring face: entire boundary is one crossingless circle rim.
      int circle = ps[0].circle, dir = ps[0].dir;
      for (auto& p : ps) {
        check_internal(p.circle == circle && p.dir == dir,
                       "ring face touches several circles");
      }
      check_internal(ps.size() == s.circles[circle].size(),
                     "ring face misses junctions");
      s.steps[fid] = {Surface::Step{Surface::Step::Ring, -1, false, circle,
                                    -1, -1, dir}};
      continue;
    }

    std::rotate(ps.begin(), ps.begin() + first_band, ps.end());
    check_internal(ps[0].band, "rotation lost the band passage");
    std::vector<Surface::Step> walk;
    size_t i = 0;
    while (i < ps.size()) {
      check_internal(ps[i].band, "expected band passage");
      auto& site = s.sites[ps[i].crossing];
      Surface::Step bs;
      bs.kind = Surface::Step::Band;
      bs.crossing = ps[i].crossing;
      bs.west_to_east = ps[i].west_to_east;
      walk.push_back(bs);
      s.cls[fid][ps[i].crossing] += ps[i].west_to_east ? 1 : -1;
      s.crossing_set[fid].push_back(ps[i].crossing);
      s.twist_sum[fid] += d.xs[ps[i].crossing].sign;

      int exit_circle = ps[i].west_to_east ? site.east : site.west;
      int exit_junc = ps[i].west_to_east ? site.ejunc : site.wjunc;
      int dir = s.f.tail_dart[ps[i].depart_edge] == ps[i].depart_dart ? 1 : -1;
      size_t j = i + 1;
      while (j < ps.size() && !ps[j].band) {
        check_internal(ps[j].circle == exit_circle && ps[j].dir == dir,
                       "arc run leaves its circle");
        ++j;
      }
      auto& next_p = ps[j % ps.size()];
      check_internal(next_p.band, "walk must alternate bands and arcs");
      auto& nsite = s.sites[next_p.crossing];
      int entry_circle = next_p.west_to_east ? nsite.west : nsite.east;
      int entry_junc = next_p.west_to_east ? nsite.wjunc : nsite.ejunc;
      check_internal(entry_circle == exit_circle,
                     "band endpoints not joined by one circle");

      Surface::Step as;
      as.kind = Surface::Step::Arc;
      as.circle = exit_circle;
      as.from_junc = exit_junc;
      as.to_junc = entry_junc;
      as.dir = dir;
      walk.push_back(as);

      // The run passes exactly the junctions strictly between.
      int m = static_cast<int>(s.circles[exit_circle].size());
      int between = dir > 0 ? (entry_junc - exit_junc + m) % m
                            : (exit_junc - entry_junc + m) % m;
      check_internal(between >= 1, "arc run of zero length");
      check_internal(static_cast<int>(j - i - 1) == between - 1,
                     "arc run junction count mismatch");
      i = j;
    }
    s.steps[fid] = walk;
    std::sort(s.crossing_set[fid].begin(), s.crossing_set[fid].end());
    for (size_t q = 1; q < s.crossing_set[fid].size(); ++q)
      check_internal(s.crossing_set[fid][q] != s.crossing_set[fid][q - 1],
                     "face passes one band twice");
  }

  // Homology basis among non-outer faces: greedy with primitivity checks.
  int rank = n - ns + 1;
  check_internal(rank >= 0 && rank % 2 == 0, "betti number must be even");
  auto primitive = [&](const std::vector<int>& rows) {
    Mat m(static_cast<int>(rows.size()), n);
    for (size_t i = 0; i < rows.size(); ++i)
      for (int j = 0; j < n; ++j) m.at(static_cast<int>(i), j) = s.cls[rows[i]][j];
    Smith sm = smith_normal_form(m);
    int r = 0;
    for (int i = 0; i < std::min(m.r, m.c); ++i)
      if (sm.d.at(i, i) != 0) ++r;
    if (r != m.r) return false;
    for (int i = 0; i < m.r; ++i)
      if (sm.d.at(i, i) != 1) return false;
    return true;
  };
  for (int fid = 0; fid < nf && static_cast<int>(s.basis.size()) < rank;
       ++fid) {
    if (fid == s.outer_face) continue;
    std::vector<int> trial = s.basis;
    trial.push_back(fid);
    if (primitive(trial)) s.basis = trial;
  }
  check_internal(static_cast<int>(s.basis.size()) == rank,
                 "face classes do not span a unimodular sublattice");
  {
    // Completeness: every face class must be an integer combination.
    Mat bt(n, rank);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < n; ++j) bt.at(j, i) = s.cls[s.basis[i]][j];
    for (int fid = 0; fid < nf; ++fid) {
      if (!solve_integer(bt, s.cls[fid]))
        throw InternalError("face class outside basis lattice");
    }
  }

  detail::fill_pairings(s);

  // Sanity on the finished matrix.
  check_internal(s.V.r == rank && s.V.c == rank, "seifert matrix size");
  Mat j = mat_sub(s.V, s.V.transposed());
  check_internal(is_skew_symmetric(j), "intersection form not skew");
  if (rank > 0) {
    Int dj = bareiss_det(j);
    check_internal(dj == 1 || dj == -1, "intersection form not unimodular");
  }
  for (int i = 0; i < rank; ++i)
    check_internal(s.V.at(i, i) == s.framing[s.basis[i]],
                   "diagonal framing mismatch");
  for (int fid = 0; fid < nf; ++fid) {
    if (s.crossing_set[fid].empty()) continue;
    int common = d.xs[s.crossing_set[fid][0]].sign;
    bool mono = true;
    for (int k : s.crossing_set[fid])
      if (d.xs[k].sign != common) mono = false;
    if (mono)
      check_internal(sgn(s.framing[fid]) == common,
                     "monochromatic face framing has wrong sign");
  }
  return s;
}

Homogeneity homogeneity(const Surface& s) {
  Homogeneity h;
  for (auto& x : s.d.xs) {
    if (x.sign > 0) h.has_positive = true;
    if (x.sign < 0) h.has_negative = true;
  }
  for (int i = 0; i < s.n_circles() && h.homogeneous; ++i) {
    int first[2] = {-1, -1};  // per side: first crossing seen
    for (size_t q = 0; q < s.junction_crossing[i].size(); ++q) {
      int k = s.junction_crossing[i][q];
      auto& site = s.sites[k];
      int other = site.west == i ? site.east : site.west;
      int side = s.encloses[i][other] ? 1 : 0;
      if (first[side] == -1) {
        first[side] = k;
      } else if (s.d.xs[first[side]].sign != s.d.xs[k].sign) {
        h.homogeneous = false;
        h.circle = i;
        h.side = side;
        h.crossing_a = first[side];
        h.crossing_b = k;
        std::ostringstream w;
        w << "circle " << i << " has crossings " << h.crossing_a << " ("
          << (s.d.xs[h.crossing_a].sign > 0 ? '+' : '-') << ") and " << k
          << " (" << (s.d.xs[k].sign > 0 ? '+' : '-') << ") "
          << (side ? "inside" : "outside");
        h.witness = w.str();
        break;
      }
    }
  }
  return h;
}

SignedCurves find_signed_curves(const Surface& s) {
  Homogeneity h = homogeneity(s);
  if (!h.has_positive || !h.has_negative)
    throw MissingSign("diagram has only one crossing sign");
  if (!h.homogeneous)
    throw NotHomogeneous(h.witness);
  SignedCurves out;
  int nf = s.f.count();
  auto scan = [&](bool outer) {
    for (int fid = 0; fid < nf; ++fid) {
      if ((fid == s.outer_face) != outer) continue;
      if (out.plus_face == -1 && s.framing[fid] > 0) {
        out.plus_face = fid;
        out.plus_framing = s.framing[fid];
      }
      if (out.minus_face == -1 && s.framing[fid] < 0) {
        out.minus_face = fid;
        out.minus_framing = s.framing[fid];
      }
    }
  };
  scan(false);
  if (out.plus_face == -1 || out.minus_face == -1) scan(true);
  check_internal(out.plus_face != -1 && out.minus_face != -1,
                 "homogeneous diagram with both signs lacks signed curves");
  return out;
}

ClaspPair find_clasp_pair(const Surface& s) {
  Homogeneity h = homogeneity(s);
  if (!h.has_positive || !h.has_negative)
    throw MissingSign("diagram has only one crossing sign");
  if (!h.homogeneous)
    throw NotHomogeneous(h.witness);

  ClaspPair out;
  for (int i = 0; i < s.n_circles() && out.circle == -1; ++i) {
    bool pos = false, neg = false;
    for (int k : s.junction_crossing[i]) {
      pos |= s.d.xs[k].sign > 0;
      neg |= s.d.xs[k].sign < 0;
    }
    if (pos && neg) out.circle = i;
  }
  if (out.circle == -1)
    throw NoMixedCircle("no Seifert circle with both signs adjacent");

  const auto& ring = s.junction_crossing[out.circle];
  int m = static_cast<int>(ring.size());
  auto sign_at = [&](int q) { return s.d.xs[ring[(q % m + m) % m]].sign; };

  int q1 = -1;
  for (int q = 0; q < m; ++q)
    if (sign_at(q) > 0 && sign_at(q + 1) < 0) {
      q1 = q;
      break;
    }
  check_internal(q1 != -1, "mixed circle without sign change");
  out.c1 = ring[q1];

  int q2 = -1;
  for (int q = q1 + 1; q <= q1 + m; ++q)
    if (sign_at(q + 1) > 0) {
      q2 = q;
      break;
    }
  check_internal(q2 != -1, "no return to positive sign");
  check_internal(sign_at(q2) < 0, "clasp scan found positive c2");
  out.c2 = ring[q2 % m];
  out.c3 = ring[(q2 + 1) % m];

  int q4 = -1;
  for (int q = q2 + 2; q <= q2 + 1 + m; ++q)
    if (sign_at(q) < 0) {
      q4 = q;
      break;
    }
  check_internal(q4 != -1, "no negative crossing after c3");
  out.c4 = ring[q4 % m];

  auto vis_a_vis = [&](int k) {
    auto& site = s.sites[k];
    check_internal(site.west == out.circle || site.east == out.circle,
                   "clasp crossing not on the mixed circle");
    return site.west == out.circle ? site.west_face : site.east_face;
  };
  out.plus_face = vis_a_vis(out.c2);
  out.minus_face = vis_a_vis(out.c3);
  check_internal(out.plus_face != out.minus_face,
                 "clasp faces coincide");

  out.raw = Mat(2, 2);
  out.raw.at(0, 0) = seifert_pairing(s, out.plus_face, out.plus_face);
  out.raw.at(0, 1) = seifert_pairing(s, out.plus_face, out.minus_face);
  out.raw.at(1, 0) = seifert_pairing(s, out.minus_face, out.plus_face);
  out.raw.at(1, 1) = seifert_pairing(s, out.minus_face, out.minus_face);
  check_internal(out.raw.at(0, 0) == s.framing[out.plus_face] &&
                     out.raw.at(1, 1) == s.framing[out.minus_face],
                 "clasp diagonal framing mismatch");

  for (int tr = 0; tr < 2 && out.p == 0; ++tr)
    for (int s1 = 1; s1 >= -1 && out.p == 0; s1 -= 2)
      for (int s2 = 1; s2 >= -1 && out.p == 0; s2 -= 2) {
        Mat mtx = tr ? out.raw.transposed() : out.raw;
        mtx.at(0, 1) *= s1 * s2;
        mtx.at(1, 0) *= s1 * s2;
        if (mtx.at(0, 1) == 1 && mtx.at(1, 0) == 0 && mtx.at(0, 0) > 0 &&
            mtx.at(1, 1) < 0) {
          out.normalized = mtx;
          out.p = mtx.at(0, 0);
          out.n = -mtx.at(1, 1);
        }
      }
  if (out.p == 0)
    throw PatternMismatch("clasp matrix " + mat_to_string(out.raw) +
                          " does not normalize to [[p,1],[0,-n]]");
  return out;
}

std::string surface_dump(const Surface& s) {
  std::ostringstream out;
  out << "circles " << s.n_circles() << " crossings " << s.d.n() << " faces "
      << s.f.count() << " outer " << s.outer_face << " genus " << s.genus()
      << "\n";
  for (int i = 0; i < s.n_circles(); ++i) {
    out << "circle " << i << ": edges";
    for (int e : s.circles[i]) out << ' ' << e;
    out << " | parent " << s.parent[i] << " depth " << s.depth[i]
        << " orient " << (s.sigma[i] > 0 ? "ccw" : "cw") << "\n";
  }
  for (int k = 0; k < s.d.n(); ++k) {
    auto& site = s.sites[k];
    out << "band " << k << ": sign " << (s.d.xs[k].sign > 0 ? '+' : '-')
        << " west " << site.west << "@" << site.wjunc << " east " << site.east
        << "@" << site.ejunc << " faces n" << site.north << " s" << site.south
        << " w" << site.west_face << " e" << site.east_face
        << (site.climb ? " nested" : " side-by-side") << "\n";
  }
  for (int fid = 0; fid < s.f.count(); ++fid) {
    out << "face " << fid << (fid == s.outer_face ? " (outer)" : "") << ": C={";
    for (size_t i = 0; i < s.crossing_set[fid].size(); ++i) {
      if (i) out << ',';
      out << s.crossing_set[fid][i];
    }
    out << "} twist " << s.twist_sum[fid] << " framing " << s.framing[fid]
        << " class [";
    for (int j = 0; j < s.d.n(); ++j) {
      if (j) out << ' ';
      out << s.cls[fid][j];
    }
    out << "]\n";
  }
  out << "basis";
  for (int b : s.basis) out << ' ' << b;
  out << "\nV = " << mat_to_string(s.V) << "\n";
  return out.str();
}

}  // namespace knotgap
