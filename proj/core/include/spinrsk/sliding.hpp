#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "spinrsk/kn.hpp"

namespace spinrsk {

// Def. of admissibility for a tuple of blocks placed at the inner shape mu:
// block i has width lambda_i - mu_i, the heights interlace and both
// arrangements between neighbouring blocks are semistandard.  Only the
// differences mu_i - mu_{i+1} matter.
bool is_admissible_skew(const SpinorTableau& t, const Partition& mu, const GradedAlphabet& a);

class SkewSpinorTableau {
 public:
  SkewSpinorTableau() = default;
  // Throws std::invalid_argument unless t is a-admissible at mu.
  SkewSpinorTableau(SpinorTableau t, Partition mu, GradedAlphabet a);
  // A straight tableau, inner shape empty.
  SkewSpinorTableau(SpinorTableau t, GradedAlphabet a);

  const SpinorTableau& tableau() const noexcept { return t_; }
  const Partition& inner() const noexcept { return mu_; }
  Partition outer() const;
  const GradedAlphabet& alphabet() const noexcept { return a_; }
  int ell() const noexcept { return t_.ell(); }

  // Indices i (1-based) with mu_i > mu_{i+1}, increasing; i < ell.
  std::vector<int> inner_corners() const;
  bool is_straight() const { return inner_corners().empty(); }

  friend bool operator==(const SkewSpinorTableau& x, const SkewSpinorTableau& y) {
    return x.t_ == y.t_ && x.mu_ == y.mu_ && x.a_ == y.a_;
  }

 private:
  SpinorTableau t_;
  Partition mu_;
  GradedAlphabet a_;
};

// Smallest shift placing the tuple at an admissible skew shape:
// mu_l = 0 and mu_i - mu_{i+1} = d(T_i, T_{i+1}).
SkewSpinorTableau as_skew(const SpinorTableau& t, const GradedAlphabet& a);

// Total number of cells plus ell.
int default_rank(const SpinorTableau& t);

// d(T1, T2): least d >= 0 with floor(T2, T1) at offsets (0, d) admissible.
int skew_distance(const SpinorBlock& t1, const SpinorBlock& t2, const GradedAlphabet& a);
// Same over [n-bar], read from the least top of T2^ad above T1^ad that gives
// an admissible KN tableau.
int skew_distance_kn(const SpinorBlock& t1, const SpinorBlock& t2, int n);

// The tuple over [n-bar] with kappa image (H_nu, Q(t)).  Throws
// std::invalid_argument when n < l(nu).
SpinorTableau n_conjugate(const SpinorTableau& t, const GradedAlphabet& a, int n);

struct PairSlide {
  SpinorBlock t2;
  SpinorBlock t1;
  int kind = 0;     // 1 or 2
  int epsilon = 0;  // epsilon_3 after E_2 E_3^{a_2}, Case 1 only
};

// One slide of (T2, T1) by the crystal operators on its four columns.
// Throws std::invalid_argument when T2 < T1 already.
PairSlide jdt_spin_pair(const SpinorBlock& t2, const SpinorBlock& t1, const GradedAlphabet& a);

// Slide into the inner corner of row i, replayed on the KN image of the
// n-conjugate (n defaults to default_rank).  The leftmost offset is kept.
SkewSpinorTableau jdt_spin(const SkewSpinorTableau& t, int i, std::optional<int> n = std::nullopt);

// Chooses one of the offered inner corners.
using CornerChooser = std::function<int(const std::vector<int>&)>;

// Repeated jdt_spin until straight, rightmost corner first unless a chooser
// is given.
SpinorTableau p_tableau(const SkewSpinorTableau& t, const CornerChooser& choose = {});
// Same result in one pass: insert the reading word of the KN image of the
// n-conjugate, then pull the recording tableau back to the alphabet.
SpinorTableau p_tableau_by_kn(const SkewSpinorTableau& t, std::optional<int> n = std::nullopt);

// The insertion shapes of w(T-bar^ad) = w^(1) ... w^(l), split by block:
// segment i holds the n - a_i shapes after each letter of w^(i).
std::vector<std::vector<Partition>> recording_shapes(const SpinorTableau& t, const GradedAlphabet& a, int n);

}  // namespace spinrsk
