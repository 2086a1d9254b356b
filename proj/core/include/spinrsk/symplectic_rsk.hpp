#pragma once

#include <optional>
#include <vector>

#include "spinrsk/oscillating.hpp"
#include "spinrsk/sliding.hpp"

namespace spinrsk {

// F^max on each pair (U_{2i}, U_{2i-1}) and the number of steps taken.
struct FmaxPhi {
  SpinorTableau blocks;
  std::vector<int> phi;  // phi[i-1] belongs to block i
};

// The tuple must have an even number of semistandard columns.
FmaxPhi fmax_phi(const ColumnTuple& t, const GradedAlphabet& a);
// E^{phi_i} on each pair; std::invalid_argument when phi_i exceeds a_i.
ColumnTuple fmax_phi_inverse(const SpinorTableau& blocks, const std::vector<int>& phi, const GradedAlphabet& a);

struct SymplecticPair {
  SpinorTableau p;
  KingTableau q;
  friend bool operator==(const SymplecticPair&, const SymplecticPair&) = default;
};

// Every intermediate of the forward map.
struct SymplecticTrace {
  FmaxPhi fmax;
  SkewSpinorTableau skew;  // F^max T placed at its least skew shape
  int n = 0;               // rank used for the recording tableau
  OscClass q_adm;          // Q_o(F^max T)
  OscClass q;              // after F^{phi} on the segments
  SymplecticPair result;
};

SymplecticTrace symplectic_rsk_trace(const ColumnTuple& t, const GradedAlphabet& a);
SymplecticPair symplectic_rsk(const ColumnTuple& t, const GradedAlphabet& a);

// std::invalid_argument when the block widths of p differ from the shape of
// q or p is not a spinor tableau.
ColumnTuple symplectic_rsk_inverse(const SpinorTableau& p, const KingTableau& q, const GradedAlphabet& a);

}  // namespace spinrsk
