#pragma once

#include <utility>

#include "spinrsk/tableau.hpp"

namespace spinrsk {

// Graded column insertion of x into a straight semistandard tableau.
SkewTableau column_insert(Letter x, const SkewTableau& t, const GradedAlphabet& a);

// Same, reporting the (row, column) of the new cell.
SkewTableau column_insert(Letter x, const SkewTableau& t, const GradedAlphabet& a, int& new_row, int& new_col);

struct RskPair {
  SkewTableau p;  // over a
  SkewTableau q;  // recording tableau over [r], of shape sh(p)'
  friend bool operator==(const RskPair&, const RskPair&) = default;
};

// kappa_A: P = (U_r -> (... -> U_1)), each column inserted top to bottom.
RskPair rsk(const ColumnTuple& u, const GradedAlphabet& a);

// Inverse of rsk for tuples of length r.  Throws std::invalid_argument when
// the shapes are not conjugate or q is not a valid recording tableau.
ColumnTuple rsk_inverse(const SkewTableau& p, const SkewTableau& q, const GradedAlphabet& a, int r);

// H_nu over [n-bar]: row i filled with (n-i+1)-bar.
SkewTableau highest_barred_tableau(const Partition& nu, int n);

}  // namespace spinrsk
