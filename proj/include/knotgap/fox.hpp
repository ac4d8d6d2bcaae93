#pragma once

#include "knotgap/algebra.hpp"
#include "knotgap/diagram.hpp"

namespace knotgap {

// Alexander polynomial from the Wirtinger presentation via Fox calculus,
// normalized like alexander_from_seifert.
LaurentPoly alexander_fox(const Diagram& d);

}  // namespace knotgap
