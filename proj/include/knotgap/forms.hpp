#pragma once

#include <string>
#include <variant>
#include <vector>

#include "knotgap/algebra.hpp"
#include "knotgap/common.hpp"
#include "knotgap/dagger.hpp"

namespace knotgap {

// The Seifert pairing v^T V w and the induced framing v^T V v.
Int seifert_pairing(const Mat& v, const std::vector<Int>& x,
                    const std::vector<Int>& y);
Int framing(const Mat& v, const std::vector<Int>& x);

// A rank-two subgroup on which the Seifert form is [[0,1],[0,x]]: the basis
// (v, w) satisfies V(v,v) = 0, V(v,w) = 1, V(w,v) = 0, V(w,w) = x.
struct NullPairWitness {
  std::vector<Int> v, w;
  Mat pattern;  // always [[0,1],[0,x]], re-verified before return
  Int x;
};

// The search ran out of height budget without deciding either way.
struct NullPairNotFound {
  int height_bound = 0;
  std::string note;
};

// No such subgroup exists, with the reason that proves it.
struct NullPairAbsent {
  std::string reason;
};

using NullPairResult =
    std::variant<NullPairWitness, NullPairNotFound, NullPairAbsent>;

// Searches primitive isotropic vectors by increasing max-norm and pairs each
// with a dual vector through the two-row integer linear system.  Absence is
// certified when the symmetrized form is definite, when a rank-two form has
// non-square discriminant, or when a doubled block [[p,1],[0,-n]] is killed
// by the two-squares criterion.
NullPairResult find_null_pair(const Mat& v, int height_bound = 64);

// The null pair on the triple connected sum of a [[p,1],[0,-n]] block,
// assembled from a quadratic-identity solution: v = (1,0,x1,y1,x2,y2),
// w = (0,1,0,0,0,0), restricted matrix exactly [[0,1],[0,-n]].
struct StableWitness {
  int blocks = 3;
  DaggerSolution sol;
  std::vector<Int> v, w;
  Mat pattern;
};

StableWitness build_stable_witness(long long p, long long n,
                                   const DaggerSolution& sol);

// Base change of a genus-one Seifert matrix to [[1,1],[0,-n]], pivoting on a
// primitive class of framing +1 if one exists.
struct Prop1Result {
  bool applicable = false;
  Int n;
  std::vector<Int> v;
  std::string reason;
};

Prop1Result prop1_reduce(const Mat& v);

// The null pair on the double V (+) V spanned by (v_plus + v_minus) and a
// correction of zeta, given framings +1 and -1 and intersection number +-1
// between v_plus and zeta.  All three inputs are coordinates in a single
// copy; the output lives in the direct sum.
NullPairWitness prop2_construct(const Mat& v, const std::vector<Int>& v_plus,
                                const std::vector<Int>& zeta,
                                const std::vector<Int>& v_minus);

}  // namespace knotgap
