#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spinrsk/kn.hpp"

namespace spinrsk {

// A sequence (Q^(1) : ... : Q^(l)) of vertical oscillating tableaux at rank n.
// Segment i lists its partitions; the step into it starts from the last
// partition of segment i-1 (the empty partition for i = 1).
struct OscillatingTableau {
  std::vector<std::vector<Partition>> segments;
  int n = 0;

  int ell() const noexcept { return static_cast<int>(segments.size()); }
  // Last partition of the last segment (empty when there is none).
  Partition end() const;

  friend bool operator==(const OscillatingTableau&, const OscillatingTableau&) = default;
};

// Segment i as a column over I_n: a for a box added in row a, a-bar for a box
// removed in row a, including the step into the segment.
std::vector<Column> segment_columns(const OscillatingTableau& q);
// Inverse; std::invalid_argument when a step leaves the partitions.
OscillatingTableau from_columns(const std::vector<Column>& cols, int n);

// The lambda with rho_n(lambda, l) = q.end(), or nullopt when q.end() does
// not fit in the (l x n) box.
std::optional<Partition> osc_shape(const OscillatingTableau& q);

// Conditions (1)-(4) for O(lambda, l; n).  A segment is vertical when its
// step letters form a strictly increasing column over I_n.
bool osc_validate(const OscillatingTableau& q, const Partition& lambda, int ell, int n);
inline bool osc_validate(const OscillatingTableau& q, const Partition& lambda, int ell) {
  return osc_validate(q, lambda, ell, q.n);
}

// Stabilization to rank n + 1; std::invalid_argument for an invalid q.
OscillatingTableau sigma(const OscillatingTableau& q);
// The preimage at rank n - 1, or nullopt when q is not in the image or n = 1
// (rank 0 carries no crystal on I_n).
std::optional<OscillatingTableau> sigma_inverse(const OscillatingTableau& q);

// a_i = n - |Q^(i)| + 2 epsilon(Q^(i)).
std::vector<int> osc_weight(const OscillatingTableau& q);
std::vector<int> osc_epsilon(const OscillatingTableau& q);

// [Q, n] stored at its least rank (at least 1).
class OscClass {
 public:
  OscClass() = default;
  // Throws std::invalid_argument unless q is a valid oscillating tableau.
  explicit OscClass(const OscillatingTableau& q);

  const OscillatingTableau& representative() const noexcept { return rep_; }
  int n() const noexcept { return rep_.n; }
  int ell() const noexcept { return rep_.ell(); }
  const Partition& shape() const noexcept { return lambda_; }
  std::vector<int> weight() const { return osc_weight(rep_); }
  // The representative lifted by sigma to rank m >= n().
  OscillatingTableau at_rank(int m) const;

  friend bool operator==(const OscClass& x, const OscClass& y) { return x.rep_ == y.rep_; }

 private:
  OscillatingTableau rep_;
  Partition lambda_;
};

// (Q_o, epsilon(Q)) with Q_o = (E^max Q^(1) : ... : E^max Q^(l)).
std::pair<OscClass, std::vector<int>> osc_split(const OscClass& q);
// F^{epsilon_i} on each segment of an admissible class.  std::invalid_argument
// when q is not admissible or some epsilon_i lies outside [0, a_i].
OscClass osc_unsplit(const OscClass& q, const std::vector<int>& epsilon);

bool is_admissible_osc(const OscClass& q);

// A King tableau: semistandard over J_l, row i holding letters >= i.  Letter
// i is num(i), i-bar is bar(i).
class KingTableau {
 public:
  KingTableau() = default;
  // Throws std::invalid_argument unless t is a King tableau for l.
  KingTableau(SkewTableau t, int ell);

  const SkewTableau& tableau() const noexcept { return t_; }
  int ell() const noexcept { return ell_; }
  Partition shape() const { return t_.shape(); }

  friend bool operator==(const KingTableau&, const KingTableau&) = default;

 private:
  SkewTableau t_;
  int ell_ = 0;
};

bool is_king(const SkewTableau& k, const Partition& lambda, int ell);

// K(lambda, l) in a fixed order.
std::vector<KingTableau> enumerate_king(const Partition& lambda, int ell);

// Lee's bijection K(lambda, l; n) -> O(lambda, l; n), columns of K numbered
// n, ..., 1 from the left.  std::invalid_argument when lambda_1 > n.
OscillatingTableau king_to_osc(const KingTableau& k, int n);
// Inverse; std::invalid_argument unless q is valid.
KingTableau osc_to_king(const OscillatingTableau& q);

// The recording tableau Q(T; n) of a spinor tableau, an admissible
// oscillating tableau of weight a = block widths.
OscillatingTableau recording(const SpinorTableau& t, const GradedAlphabet& a, int n);

}  // namespace spinrsk
