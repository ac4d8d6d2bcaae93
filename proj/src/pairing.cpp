#include <array>
#include <vector>

#include "knotgap/surface.hpp"

// Linking numbers of face curves on the canonical surface, computed from an
// explicit piecewise-linear drawing.  Each disc contributes a collar scene
// (x = position along the rim, y = distance inward, rim at y = 0); each band
// a corridor scene (w = 0 at the west rim, 16 at the east rim).  Scenes
// project to disjoint regions of the plane, so crossings are counted per
// scene with exact rational coordinates.  Heights break ties; where both
// strands lie on the surface itself the pushoff side is decided by the sign
// of the vertical component of the surface normal.

namespace knotgap {

namespace detail {
void fill_pairings(Surface& s);

namespace {
PairingKnobs g_knobs;
}

PairingKnobs get_pairing_knobs() { return g_knobs; }
void set_pairing_knobs(const PairingKnobs& k) { g_knobs = k; }
}  // namespace detail

namespace {

using R = Rat;

struct Seg {
  int scene;
  R x1, y1, x2, y2;  // plan chart, traversal order
  R z1, z2;          // height at the endpoints
  R cv1, cv2;        // cross-section attitude at the endpoints
  int nu;            // normal z-sign factor; normal points up iff nu*cv > 0
};

// Band profiles sampled at w = 0, 1, ..., 16.  cv rotates the cross-section
// from face-up to face-down (the half twist); its sign change at w = 46/5
// is isolated from every transverse-swap root: with the lane offsets below,
// swap roots 16*dw/(dw+de) all lie in [7.2, 8.95], so no strand pair has two
// crossings inside one linear segment.  cz lifts strands apart where the
// band turns edge-on; cb shears the nested band lengthwise there.  Both
// vanish through [0, 9] so that the transverse-swap crossing is an exact
// on-surface meet.
const int kCv[17] = {16, 15, 14, 13, 12, 10, 8,   4,   2,
                     1,  -4, -7, -10, -12, -13, -14, -16};
const int kCzb[17] = {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 8, 12, 16, 12, 8, 4, 0};

struct Builder {
  const Surface& s;
  bool perturb;
  std::vector<int> cnt;  // staple/ring counter per circle scene

  Builder(const Surface& surf, bool alt)
      : s(surf), perturb(alt), cnt(surf.n_circles(), 0) {}

  // Lane offsets 2, 2+1/16, 3, 3+1/16: the two copies of a face sit one
  // apart, the within-copy spread stays small, and every ratio of lane
  // differences keeps clear of 9/7 (which would push a swap root to w = 9).
  R mu(int lane) const {
    R v = R(2) + (lane >> 1) + R(lane & 1, 16);
    if (perturb) v += R(lane, 64);
    return v;
  }
  R drift(int slot) const {
    if (perturb) return slot == 0 ? R(9, 64) : R(9, 128);
    return slot == 0 ? R(1, 8) : R(1, 16);
  }
  R next_depth(int circle) {
    R dep = 1 + (perturb ? R(9, 128) : R(1, 16)) * cnt[circle]++;
    check_internal(dep < 15, "collar depth overflow");
    return dep;
  }

  // Rim attachment of one strand end at a junction.
  R end_x(int fid, int slot, int junc, int k, bool exit_end) const {
    const Surface::Site& site = s.sites[k];
    bool north = site.north == fid;
    if (!north)
      check_internal(site.south == fid, "face curve not at this band");
    int lane = 2 * slot + (north ? 1 : 0);
    R off = mu(lane) + (exit_end ? drift(slot) : R(0));
    return R(4 * junc + 2) + (north ? off : -off) / 4;
  }

  bool climbs_over(int k, int circle) const {
    const Surface::Site& site = s.sites[k];
    if (!site.climb) return false;
    return site.parent_west ? site.west == circle : site.east == circle;
  }

  void corridor(std::vector<Seg>& out, int fid, int slot, int k, bool w2e) {
    const Surface::Site& site = s.sites[k];
    bool north = site.north == fid;
    if (!north)
      check_internal(site.south == fid, "face curve not at this band");
    int side = north ? 1 : -1;
    int lane = 2 * slot + (north ? 1 : 0);
    R mw = mu(lane) + (w2e ? R(0) : drift(slot));
    R me = mu(lane) + (w2e ? drift(slot) : R(0));
    R o0 = side * mw, o1 = -side * me;
    const detail::PairingKnobs kn = detail::get_pairing_knobs();
    int tw = (site.climb ? kn.twist_nested : kn.twist_side) * s.d.xs[k].sign;

    R zw, ze;
    if (site.climb) {
      int pc = site.parent_west ? site.west : site.east;
      int cc = site.parent_west ? site.east : site.west;
      check_internal(s.depth[cc] == s.depth[pc] + 1,
                     "nested band must climb one level");
      R zp = R(s.depth[pc]) + R(1, 4);
      R zc(s.depth[cc]);
      zw = site.parent_west ? zp : zc;
      ze = site.parent_west ? zc : zp;
    } else {
      check_internal(s.depth[site.west] == s.depth[site.east],
                     "side-by-side band circles at different depths");
      zw = ze = R(s.depth[site.west]);
    }

    int nu = s.sigma[site.west];  // climb: equals east; sibling: west end
    std::array<std::array<R, 4>, 17> pt;  // x, y, z, cv
    for (int i = 0; i < 17; ++i) {
      R w(i);
      R o = o0 + (o1 - o0) * w / 16;
      R cv(kCv[i], 16), czb(kCzb[i], 16);
      if (site.climb) {
        // The ramp slope flips with the parent side; the shear sign must
        // flip with it so the half twist resolves the same way either way.
        int ps = site.parent_west ? -1 : 1;
        pt[i] = {w + o * tw * ps * czb / 64, o * cv,
                 zw + (ze - zw) * w / 16, cv};
      } else {
        pt[i] = {w, o * cv, zw + o * czb * tw / 16, cv};
      }
    }
    int scene = s.n_circles() + k;
    for (int i = 0; i < 16; ++i) {
      int a = w2e ? i : 16 - i;
      int b = w2e ? i + 1 : 15 - i;
      out.push_back(Seg{scene, pt[a][0], pt[a][1], pt[b][0], pt[b][1],
                        pt[a][2], pt[b][2], pt[a][3], pt[b][3], nu});
    }
  }

  void staple(std::vector<Seg>& out, int fid, int slot,
              const Surface::Step& st, const Surface::Step& prev_band,
              const Surface::Step& next_band) {
    int circle = st.circle;
    int m = static_cast<int>(s.circles[circle].size());
    R M(4 * m);
    R zh(s.depth[circle]);
    int sig = s.sigma[circle];
    R xa = end_x(fid, slot, st.from_junc, prev_band.crossing, true);
    R xb = end_x(fid, slot, st.to_junc, next_band.crossing, false);
    R dep = next_depth(circle);

    R one(1);
    if (climbs_over(prev_band.crossing, circle))
      out.push_back(
          Seg{circle, xa, R(16), xa, R(0), zh + R(1, 4), zh, one, one, sig});
    out.push_back(Seg{circle, xa, R(0), xa, dep, zh, zh, one, one, sig});
    if (st.dir > 0) {
      if (xb > xa) {
        out.push_back(Seg{circle, xa, dep, xb, dep, zh, zh, one, one, sig});
      } else {
        out.push_back(Seg{circle, xa, dep, M, dep, zh, zh, one, one, sig});
        out.push_back(Seg{circle, R(0), dep, xb, dep, zh, zh, one, one, sig});
      }
    } else {
      if (xb < xa) {
        out.push_back(Seg{circle, xa, dep, xb, dep, zh, zh, one, one, sig});
      } else {
        out.push_back(Seg{circle, xa, dep, R(0), dep, zh, zh, one, one, sig});
        out.push_back(Seg{circle, M, dep, xb, dep, zh, zh, one, one, sig});
      }
    }
    out.push_back(Seg{circle, xb, dep, xb, R(0), zh, zh, one, one, sig});
    if (climbs_over(next_band.crossing, circle))
      out.push_back(
          Seg{circle, xb, R(0), xb, R(16), zh, zh + R(1, 4), one, one, sig});
  }

  void ring(std::vector<Seg>& out, const Surface::Step& st) {
    int circle = st.circle;
    R M(4 * static_cast<int>(s.circles[circle].size()));
    R zh(s.depth[circle]);
    R dep = next_depth(circle);
    R one(1);
    if (st.dir > 0)
      out.push_back(
          Seg{circle, R(0), dep, M, dep, zh, zh, one, one, s.sigma[circle]});
    else
      out.push_back(
          Seg{circle, M, dep, R(0), dep, zh, zh, one, one, s.sigma[circle]});
  }

  std::vector<Seg> build_copy(int fid, int slot) {
    std::vector<Seg> out;
    const auto& walk = s.steps[fid];
    check_internal(!walk.empty(), "face curve without steps");
    if (walk[0].kind == Surface::Step::Ring) {
      check_internal(walk.size() == 1, "ring walk with extra steps");
      ring(out, walk[0]);
      return out;
    }
    check_internal(walk.size() % 2 == 0, "band walk must alternate");
    for (size_t i = 0; i < walk.size(); ++i) {
      if (walk[i].kind == Surface::Step::Band) {
        corridor(out, fid, slot, walk[i].crossing, walk[i].west_to_east);
      } else {
        staple(out, fid, slot, walk[i], walk[i - 1],
               walk[(i + 1) % walk.size()]);
      }
    }
    return out;
  }
};

// Orientation of the scene chart relative to the drawing plane.  A collar
// chart (rim position, inward) is positive exactly when the interior lies
// left of travel.  A corridor chart (west to east, north positive) is always
// positive: the quadrant cycle south, east, north, west matches the plane's
// counterclockwise order for either crossing sign.
int scene_coeff(const Surface& s, int scene) {
  if (scene < s.n_circles()) return s.sigma[scene];
  return 1;
}

Int count_link(const Surface& s, const std::vector<Seg>& as,
               const std::vector<Seg>& bs) {
  const detail::PairingKnobs kn = detail::get_pairing_knobs();
  Int over_sum = 0, total = 0;
  for (const Seg& a : as) {
    for (const Seg& b : bs) {
      if (a.scene != b.scene) continue;
      R rx = a.x2 - a.x1, ry = a.y2 - a.y1;
      R sx = b.x2 - b.x1, sy = b.y2 - b.y1;
      R qx = b.x1 - a.x1, qy = b.y1 - a.y1;
      R denom = rx * sy - ry * sx;
      if (denom == 0) {
        if (qx * ry - qy * rx == 0) {
          // Collinear: any shared point is a degenerate projection.
          R rr = rx * rx + ry * ry;
          check_internal(rr != 0, "zero-length segment");
          R t0 = (qx * rx + qy * ry) / rr;
          R t1 = ((b.x2 - a.x1) * rx + (b.y2 - a.y1) * ry) / rr;
          R lo = t0 < t1 ? t0 : t1, hi = t0 < t1 ? t1 : t0;
          if (hi >= 0 && lo <= 1)
            throw DegenerateProjection("collinear strand overlap");
        }
        continue;
      }
      R t = (qx * sy - qy * sx) / denom;
      R u = (qx * ry - qy * rx) / denom;
      if (t < 0 || t > 1 || u < 0 || u > 1) continue;
      if (t == 0 || t == 1 || u == 0 || u == 1)
        throw DegenerateProjection("strand crossing at a segment endpoint");
      R za = a.z1 + (a.z2 - a.z1) * t;
      R zb = b.z1 + (b.z2 - b.z1) * u;
      bool a_over;
      if (za != zb) {
        a_over = za > zb;
      } else {
        int nva = a.nu * sgn(a.cv1 + (a.cv2 - a.cv1) * t);
        int nvb = b.nu * sgn(b.cv1 + (b.cv2 - b.cv1) * u);
        if (nva == 0 || nvb == 0)
          throw DegenerateProjection("meet where the surface is edge-on");
        check_internal(nva == nvb, "meeting strands disagree on the normal");
        a_over = nva > 0;
      }
      R cross = a_over ? denom : -denom;
      int ev = kn.chart * scene_coeff(s, a.scene) * sgn(cross);
      total += ev;
      if (a_over) over_sum += ev;
    }
  }
  check_internal(2 * over_sum == total, "crossing signs do not pair up");
  return over_sum;
}

}  // namespace

Int seifert_pairing(const Surface& s, int face_u, int face_w) {
  if (s.d.n() == 0) return 0;
  check_internal(face_u >= 0 && face_u < s.f.count() && face_w >= 0 &&
                     face_w < s.f.count(),
                 "face id out of range");
  for (int attempt = 0;; ++attempt) {
    try {
      Builder b(s, attempt == 1);
      std::vector<Seg> a = b.build_copy(face_u, 0);
      std::vector<Seg> bb = b.build_copy(face_w, 1);
      return count_link(s, a, bb);
    } catch (const DegenerateProjection&) {
      if (attempt == 1) throw;
    }
  }
}

namespace detail {

void fill_pairings(Surface& s) {
  int nf = s.f.count();
  s.framing.assign(nf, Int(0));
  for (int fid = 0; fid < nf; ++fid)
    s.framing[fid] = seifert_pairing(s, fid, fid);
  int rank = static_cast<int>(s.basis.size());
  s.V = Mat(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      s.V.at(i, j) = i == j ? s.framing[s.basis[i]]
                            : seifert_pairing(s, s.basis[i], s.basis[j]);
}

}  // namespace detail

}  // namespace knotgap
