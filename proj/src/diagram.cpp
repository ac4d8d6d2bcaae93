#include "knotgap/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace knotgap {

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  int line = 1;

  bool done() const { return i >= s.size(); }
  char peek() const { return s[i]; }
  void advance() {
    if (s[i] == '\n') ++line;
    ++i;
  }
  void skip_ws() {
    while (!done()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else if (peek() == '#') {
        while (!done() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg + " (line " + std::to_string(line) + ")");
  }
};

int parse_int(Cursor& cur) {
  cur.skip_ws();
  size_t start = cur.i;
  while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek())))
    cur.advance();
  if (cur.i == start) cur.fail("expected integer");
  long v = std::stol(cur.s.substr(start, cur.i - start));
  if (v > 1'000'000) cur.fail("edge label out of range");
  return static_cast<int>(v);
}

void expect(Cursor& cur, char c) {
  cur.skip_ws();
  if (cur.done() || cur.peek() != c)
    cur.fail(std::string("expected '") + c + "'");
  cur.advance();
}

bool looks_like_name(const std::string& s, size_t i) {
  // An identifier followed by ':' before any 'X('.
  size_t j = i;
  while (j < s.size() &&
         (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' ||
          s[j] == '-' || s[j] == '.')) {
    ++j;
  }
  return j > i && j < s.size() && s[j] == ':';
}

// Assign crossing signs from the over-strand successor relation, then check
// that every edge occurs exactly once as an incoming end and once as an
// outgoing end.
bool assign_roles(Diagram& d, std::string* why) {
  int m = d.edges();
  std::vector<int> in_count(m + 1, 0), out_count(m + 1, 0);
  for (auto& x : d.xs) {
    in_count[x.a()]++;
    out_count[x.c()]++;
    in_count[x.over_in()]++;
    out_count[x.over_out()]++;
  }
  for (int e = 1; e <= m; ++e) {
    if (in_count[e] != 1) {
      if (why)
        *why = "edge " + std::to_string(e) + " has " +
               std::to_string(in_count[e]) +
               " incoming ends (diagram is not a knot)";
      return false;
    }
    if (out_count[e] != 1) {
      if (why)
        *why = "edge " + std::to_string(e) + " has " +
               std::to_string(out_count[e]) +
               " outgoing ends (diagram is not a knot)";
      return false;
    }
  }
  return true;
}

void validate(Diagram& d) {
  int n = d.n();
  int m = d.edges();

  std::vector<int> uses(m + 1, 0);
  for (auto& x : d.xs)
    for (int v : x.s) {
      if (v < 1 || v > m)
        throw ValidationError("edge label " + std::to_string(v) +
                              " outside 1.." + std::to_string(m));
      uses[v]++;
    }
  for (int e = 1; e <= m; ++e)
    if (uses[e] != 2)
      throw ValidationError("edge " + std::to_string(e) + " appears " +
                            std::to_string(uses[e]) + " times, expected 2");

  auto nxt = [m](int e) { return e % m + 1; };
  for (int k = 0; k < n; ++k) {
    auto& x = d.xs[k];
    if (x.c() != nxt(x.a()))
      throw ValidationError("crossing " + std::to_string(k) +
                            ": under-strand labels not consecutive");
    bool plus = x.d() == nxt(x.b());
    bool minus = x.b() == nxt(x.d());
    if (!plus && !minus)
      throw MissingSign("crossing " + std::to_string(k) +
                        ": over-strand labels not consecutive, sign "
                        "undetermined");
    // Both can hold only when m == 2; resolved below.
    x.sign = plus ? 1 : -1;
  }

  std::string why;
  if (!assign_roles(d, &why)) {
    if (m == 2) {
      // One-crossing diagram: the successor relation alone cannot pick the
      // over direction, so try the other kink chirality.
      d.xs[0].sign = -d.xs[0].sign;
      if (!assign_roles(d, &why))
        throw ValidationError(why);
    } else {
      throw ValidationError(why);
    }
  }

  // Knot traversal: with consecutive labels the successor of edge e is e+1,
  // so the walk closes into one component exactly when roles are consistent.
  for (int k = 0; k < n; ++k) {
    check_internal(d.xs[k].c() == d.next_edge(d.xs[k].a()) &&
                       d.xs[k].over_out() == d.next_edge(d.xs[k].over_in()),
                   "traversal successor mismatch");
  }
}

}  // namespace

Diagram parse_pd(const std::string& text) {
  Diagram d;
  Cursor cur{text};
  cur.skip_ws();
  if (cur.done()) throw SyntaxError("empty planar diagram code");

  if (looks_like_name(text, cur.i)) {
    size_t start = cur.i;
    while (cur.peek() != ':') cur.advance();
    d.name = text.substr(start, cur.i - start);
    cur.advance();
  }

  cur.skip_ws();
  while (!cur.done()) {
    if (cur.peek() != 'X') cur.fail("expected crossing 'X(a,b,c,d)'");
    cur.advance();
    expect(cur, '(');
    Crossing x;
    for (int s = 0; s < 4; ++s) {
      x.s[s] = parse_int(cur);
      expect(cur, s < 3 ? ',' : ')');
    }
    d.xs.push_back(x);
    cur.skip_ws();
  }
  // A bare name with no crossings is the 0-crossing unknot.
  if (d.xs.empty()) {
    if (d.name.empty())
      throw SyntaxError("no crossings in planar diagram code");
    return d;
  }

  // Normalize sparse labels to 1..2n, preserving order.
  std::vector<int> labels;
  for (auto& x : d.xs)
    for (int v : x.s) labels.push_back(v);
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  bool contiguous = static_cast<int>(sorted.size()) == d.edges() &&
                    sorted.front() == 1 && sorted.back() == d.edges();
  if (!contiguous) {
    if (static_cast<int>(sorted.size()) != d.edges())
      throw ValidationError("expected " + std::to_string(d.edges()) +
                            " distinct edge labels, found " +
                            std::to_string(sorted.size()));
    std::map<int, int> rank;
    for (size_t i = 0; i < sorted.size(); ++i)
      rank[sorted[i]] = static_cast<int>(i) + 1;
    for (auto& x : d.xs)
      for (int& v : x.s) v = rank[v];
    d.warnings.push_back("edge labels were not 1..2n; renumbered by rank");
  }

  validate(d);

  // Planarity: a realizable knot diagram has exactly n+2 faces.
  Faces f = faces(d);
  if (f.count() != d.n() + 2)
    throw ValidationError("diagram code is not planar (" +
                          std::to_string(f.count()) + " faces, expected " +
                          std::to_string(d.n() + 2) + ")");
  return d;
}

std::string to_pd(const Diagram& d) {
  std::ostringstream out;
  if (!d.name.empty()) out << d.name << ':';
  for (int k = 0; k < d.n(); ++k) {
    if (k || !d.name.empty()) out << ' ';
    auto& x = d.xs[k];
    out << "X(" << x.s[0] << ',' << x.s[1] << ',' << x.s[2] << ',' << x.s[3]
        << ')';
  }
  return out.str();
}

int writhe(const Diagram& d) {
  int w = 0;
  for (auto& x : d.xs) w += x.sign;
  return w;
}

std::vector<std::vector<int>> seifert_circles(const Diagram& d) {
  if (d.n() == 0) return {{}};
  int m = d.edges();
  std::vector<int> succ(m + 1, 0);
  for (auto& x : d.xs) {
    if (x.sign > 0) {
      succ[x.a()] = x.d();
      succ[x.b()] = x.c();
    } else {
      succ[x.a()] = x.b();
      succ[x.d()] = x.c();
    }
  }
  std::vector<std::vector<int>> circles;
  std::vector<char> seen(m + 1, 0);
  for (int e = 1; e <= m; ++e) {
    if (seen[e]) continue;
    std::vector<int> orbit;
    int cur = e;
    do {
      check_internal(!seen[cur], "smoothing successor is not a permutation");
      seen[cur] = 1;
      orbit.push_back(cur);
      cur = succ[cur];
    } while (cur != e);
    circles.push_back(std::move(orbit));
  }
  return circles;
}

Faces faces(const Diagram& d) {
  int n = d.n();
  int m = d.edges();
  if (n == 0) {
    // The 0-crossing unknot bounds two faces and has no darts.
    Faces f0;
    f0.orbit = {{}, {}};
    return f0;
  }
  Faces f;
  f.head_dart.assign(m + 1, -1);
  f.tail_dart.assign(m + 1, -1);
  for (int k = 0; k < n; ++k) {
    auto& x = d.xs[k];
    auto set_role = [&](int slot, bool incoming) {
      int e = x.s[slot];
      int dart = 4 * k + slot;
      if (incoming) {
        check_internal(f.head_dart[e] == -1, "duplicate head dart");
        f.head_dart[e] = dart;
      } else {
        check_internal(f.tail_dart[e] == -1, "duplicate tail dart");
        f.tail_dart[e] = dart;
      }
    };
    set_role(0, true);
    set_role(2, false);
    set_role(x.sign > 0 ? 1 : 3, true);
    set_role(x.sign > 0 ? 3 : 1, false);
  }

  auto twin = [&](int dart) {
    int k = dart / 4, s = dart % 4;
    int e = d.xs[k].s[s];
    return f.head_dart[e] == dart ? f.tail_dart[e] : f.head_dart[e];
  };

  f.face_of_dart.assign(4 * n, -1);
  for (int start = 0; start < 4 * n; ++start) {
    if (f.face_of_dart[start] != -1) continue;
    int id = f.count();
    std::vector<int> orbit;
    int cur = start;
    do {
      f.face_of_dart[cur] = id;
      orbit.push_back(cur);
      int t = twin(cur);
      cur = (t / 4) * 4 + (t % 4 + 1) % 4;
    } while (cur != start);
    f.orbit.push_back(std::move(orbit));
  }
  return f;
}

int find_nugatory(const Diagram& d, const Faces& f) {
  for (int k = 0; k < d.n(); ++k) {
    if (f.at_quadrant(k, 0) == f.at_quadrant(k, 2) ||
        f.at_quadrant(k, 1) == f.at_quadrant(k, 3))
      return k;
  }
  return -1;
}

bool is_reduced(const Diagram& d, const Faces& f) {
  return find_nugatory(d, f) == -1;
}

bool is_prime_diagram(const Diagram& d) {
  int n = d.n();
  if (n < 2) return true;
  Faces f = faces(d);
  int m = d.edges();
  // Endpoint crossings of each edge.
  std::vector<std::pair<int, int>> ends(m + 1);
  for (int e = 1; e <= m; ++e)
    ends[e] = {f.tail_dart[e] / 4, f.head_dart[e] / 4};

  std::vector<int> uf(n);
  auto find = [&](int v) {
    while (uf[v] != v) v = uf[v] = uf[uf[v]];
    return v;
  };
  for (int e1 = 1; e1 <= m; ++e1) {
    for (int e2 = e1 + 1; e2 <= m; ++e2) {
      std::iota(uf.begin(), uf.end(), 0);
      for (int e = 1; e <= m; ++e) {
        if (e == e1 || e == e2) continue;
        uf[find(ends[e].first)] = find(ends[e].second);
      }
      int root0 = find(0);
      for (int k = 1; k < n; ++k)
        if (find(k) != root0) return false;
    }
  }
  return true;
}

Diagram mirror(const Diagram& d) {
  Diagram r = d;
  r.warnings.clear();
  for (auto& x : r.xs) {
    if (x.sign > 0)
      x.s = {x.s[1], x.s[2], x.s[3], x.s[0]};
    else
      x.s = {x.s[3], x.s[0], x.s[1], x.s[2]};
    x.sign = -x.sign;
  }
  return r;
}

}  // namespace knotgap
