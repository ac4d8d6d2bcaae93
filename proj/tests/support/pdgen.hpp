#pragma once

#include <string>

namespace pdgen {

// Twist knot: a clasp plus n full twists, 2n + 2 crossings.  n = 1 is the
// figure-eight knot, n = 2 is 6_1; determinant 4n + 1.
std::string twist_knot_pd(int n);

// Connected sum: cuts edge 1 of each diagram and splices the traversals.
std::string connected_sum_pd(const std::string& a, const std::string& b);

// Reidemeister I kink of the given sign on edge e (1-based).  An empty
// diagram is treated as the unknot and yields the one-crossing kink.
std::string add_kink(const std::string& pd, int e, int sign);

std::string mirror_pd(const std::string& pd);

}  // namespace pdgen
