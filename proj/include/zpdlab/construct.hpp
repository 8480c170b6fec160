#pragma once

#include <string>
#include <string_view>

#include "zpdlab/algebra.hpp"

namespace zpdlab {

// Builds an algebra from a constructor expression:
//   jordan:n  triangular:n  strict:n  matrix:n  diagonal:n
//   companion:c0,c1,...,ck        Q[t]/(f), coefficients lowest degree first
//   mat_over:n;c0,c1,...,ck       M_n(Q[t]/(f))
//   digraph:n;i-j,i-j,...         1-based reflexive transitive relation
//   uhf:p1,p2,...                 top level of the refinement tower
//   tensor:(A,B)  sum:(A,B)  unitization:(A)
//   char_product:(A)              a o b = a_11 b, a_11 the top-left ambient entry
// Throws ParseError on malformed expressions; construction errors propagate.
Algebra construct(std::string_view spec);

}  // namespace zpdlab
