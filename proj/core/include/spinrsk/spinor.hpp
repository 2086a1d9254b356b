#pragma once

#include <vector>

#include "spinrsk/crystal.hpp"
#include "spinrsk/rsk.hpp"

namespace spinrsk {

// An element of T_A(a): two top-aligned columns of shape lambda(a,0,c).
class SpinorBlock {
 public:
  SpinorBlock() = default;
  // Throws std::invalid_argument unless (left, right) has shape lambda(a,0,c).
  SpinorBlock(Column left, Column right, const GradedAlphabet& a);

  const Column& left() const noexcept { return left_; }    // T^L
  const Column& right() const noexcept { return right_; }  // T^R
  // Columns of E^a T.
  const Column& left_form() const noexcept { return lform_; }   // ^L T
  const Column& right_form() const noexcept { return rform_; }  // ^R T
  int width() const noexcept { return left_.height() - right_.height(); }  // a
  int depth() const noexcept { return right_.height(); }                   // c
  int size() const noexcept { return left_.height() + right_.height(); }

  friend bool operator==(const SpinorBlock& x, const SpinorBlock& y) {
    return x.left_ == y.left_ && x.right_ == y.right_;
  }
  friend auto operator<=>(const SpinorBlock& x, const SpinorBlock& y) {
    if (auto c = x.left_ <=> y.left_; c != 0) return c;
    return x.right_ <=> y.right_;
  }

 private:
  Column left_, right_, lform_, rform_;
};

// (^L T, ^R T)
ColumnPair left_right_forms(const SpinorBlock& t);

// Blocks (T_l, ..., T_1) listed left to right; block(i) is T_i.
struct SpinorTableau {
  std::vector<SpinorBlock> blocks;

  SpinorTableau() = default;
  explicit SpinorTableau(std::vector<SpinorBlock> left_to_right) : blocks(std::move(left_to_right)) {}

  int ell() const noexcept { return static_cast<int>(blocks.size()); }
  const SpinorBlock& block(int i) const { return blocks.at(blocks.size() - static_cast<std::size_t>(i)); }
  SpinorBlock& block(int i) { return blocks.at(blocks.size() - static_cast<std::size_t>(i)); }
  // (a_1, ..., a_l)
  std::vector<int> widths() const;
  int size() const noexcept;
  // (T_l^L, T_l^R, ..., T_1^L, T_1^R)
  ColumnTuple columns() const;

  friend bool operator==(const SpinorTableau&, const SpinorTableau&) = default;
  friend auto operator<=>(const SpinorTableau&, const SpinorTableau&) = default;
};

// Pairs up (U_{2l}, U_{2l-1}, ..., U_2, U_1) into blocks.
SpinorTableau blocks_from_columns(const ColumnTuple& u, const GradedAlphabet& a);

// T2 < T1: a2 <= a1 and both interlacing arrangements are semistandard.
bool precedes(const SpinorBlock& t2, const SpinorBlock& t1, const GradedAlphabet& a);

bool is_spinor_tableau(const SpinorTableau& t, const Partition& lambda, int ell, const GradedAlphabet& a);

// kappa_A of the 2l columns.
RskPair phi_embedding(const SpinorTableau& t, const GradedAlphabet& a);

// Membership of a recording tableau over [2l] in K_{mu(lambda,l)}.
bool k_weight_predicate(const SkewTableau& q, const Partition& lambda, int ell);

// Every semistandard column over a with height <= cap (cap < 0: no cap,
// allowed only without degree-1 letters), in a fixed order.
std::vector<Column> enumerate_columns(const GradedAlphabet& a, int cap);

// Every block of width w with all column heights <= cap.
std::vector<SpinorBlock> enumerate_blocks(int width, const GradedAlphabet& a, int cap);

// T_A(lambda, l) with every column height <= cap.
std::vector<SpinorTableau> enumerate_spinor(const Partition& lambda, int ell, const GradedAlphabet& a, int cap);

}  // namespace spinrsk
