#pragma once

#include <array>
#include <string>
#include <vector>

#include "knotgap/common.hpp"

namespace knotgap {

// One crossing X(a,b,c,d): slots listed counterclockwise, the understrand
// enters at a and leaves at c.  sign is +1 when the overstrand runs b->d.
struct Crossing {
  std::array<int, 4> s{};
  int sign = 0;
  int a() const { return s[0]; }
  int b() const { return s[1]; }
  int c() const { return s[2]; }
  int d() const { return s[3]; }
  int over_in() const { return sign > 0 ? s[1] : s[3]; }
  int over_out() const { return sign > 0 ? s[3] : s[1]; }
};

struct Diagram {
  std::string name;
  std::vector<Crossing> xs;
  std::vector<std::string> warnings;

  int n() const { return static_cast<int>(xs.size()); }
  int edges() const { return 2 * n(); }
  int next_edge(int e) const { return e % edges() + 1; }
  int prev_edge(int e) const { return (e + edges() - 2) % edges() + 1; }
};

Diagram parse_pd(const std::string& text);
std::string to_pd(const Diagram& d);

int writhe(const Diagram& d);

// Seifert circles as cyclic edge lists, ordered by smallest edge label.
std::vector<std::vector<int>> seifert_circles(const Diagram& d);

// Faces of the diagram as orbits of darts.  Dart 4*k+s is the incidence of
// edge xs[k].s[s] at crossing k.  The face containing the head dart of an
// edge lies to the left of that edge.
struct Faces {
  std::vector<int> face_of_dart;
  std::vector<std::vector<int>> orbit;
  std::vector<int> head_dart;  // per edge label (1-based), dart where it ends
  std::vector<int> tail_dart;  // per edge label, dart where it starts

  int count() const { return static_cast<int>(orbit.size()); }
  int left_face(int e) const { return face_of_dart[head_dart[e]]; }
  int right_face(int e) const { return face_of_dart[tail_dart[e]]; }
  // Face touching the quadrant between slots s and s+1 of crossing k.
  int at_quadrant(int k, int s) const {
    return face_of_dart[4 * k + (s + 1) % 4];
  }
};

Faces faces(const Diagram& d);

// A diagram is reduced when no crossing has the same face at two opposite
// quadrants.
bool is_reduced(const Diagram& d, const Faces& f);
int find_nugatory(const Diagram& d, const Faces& f);  // -1 if reduced

// Connected-sum detection on the diagram: a pair of edges that splits the
// code into two nontrivial tangles.
bool is_prime_diagram(const Diagram& d);

Diagram mirror(const Diagram& d);

}  // namespace knotgap
