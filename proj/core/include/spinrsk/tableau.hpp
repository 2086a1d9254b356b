#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "spinrsk/alphabet.hpp"
#include "spinrsk/partition.hpp"

namespace spinrsk {

// A single column, entries listed top to bottom.
struct Column {
  std::vector<Letter> entries;

  Column() = default;
  Column(std::initializer_list<Letter> xs) : entries(xs) {}
  explicit Column(std::vector<Letter> xs) : entries(std::move(xs)) {}

  int height() const noexcept { return static_cast<int>(entries.size()); }
  bool empty() const noexcept { return entries.empty(); }
  Letter operator[](int i) const { return entries[static_cast<std::size_t>(i)]; }
  Letter front() const { return entries.front(); }
  Letter back() const { return entries.back(); }
  auto begin() const noexcept { return entries.begin(); }
  auto end() const noexcept { return entries.end(); }

  friend bool operator==(const Column&, const Column&) = default;
  friend auto operator<=>(const Column&, const Column&) = default;
};

bool is_column(const Column& c, const GradedAlphabet& a);
std::string to_string(const Column& c);
Column parse_column(std::string_view text);

// Tuple of columns (U_r, ..., U_1) listed left to right; u(i) is U_i.
struct ColumnTuple {
  std::vector<Column> cols;

  ColumnTuple() = default;
  explicit ColumnTuple(std::vector<Column> left_to_right) : cols(std::move(left_to_right)) {}

  int size() const noexcept { return static_cast<int>(cols.size()); }
  Column& u(int i) { return cols.at(cols.size() - static_cast<std::size_t>(i)); }
  const Column& u(int i) const { return cols.at(cols.size() - static_cast<std::size_t>(i)); }

  friend bool operator==(const ColumnTuple&, const ColumnTuple&) = default;
  friend auto operator<=>(const ColumnTuple&, const ColumnTuple&) = default;
};

// Columns placed left to right; column j occupies rows top(j) .. top(j)+h-1,
// rows counted downward.  The baseline L of a bottom-aligned figure lies
// between rows -1 and 0.
class SkewTableau {
 public:
  SkewTableau() = default;
  SkewTableau(std::vector<Column> columns, std::vector<int> tops);

  // Bottoms on L, column j slid up by offsets[j].
  static SkewTableau bottom_aligned(std::vector<Column> columns, std::vector<int> offsets = {});
  // Tops on L, column j slid down by offsets[j].
  static SkewTableau top_aligned(std::vector<Column> columns, std::vector<int> offsets = {});
  // Straight shape from its rows (English convention).
  static SkewTableau from_rows(const std::vector<std::vector<Letter>>& rows);

  int width() const noexcept { return static_cast<int>(columns_.size()); }
  int size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  const std::vector<Column>& columns() const noexcept { return columns_; }
  const Column& column(int j) const { return columns_.at(static_cast<std::size_t>(j)); }
  const std::vector<int>& tops() const noexcept { return tops_; }
  int top(int j) const { return tops_.at(static_cast<std::size_t>(j)); }
  int bottom(int j) const { return top(j) + column(j).height(); }  // one past the last row

  // Entry at (row, col), or nullptr.
  const Letter* at(int row, int col) const;

  // Tops all zero and heights weakly decreasing.
  bool is_straight() const noexcept;
  // Row lengths of a straight tableau.
  Partition shape() const;
  std::vector<std::vector<Letter>> rows() const;

  // Same figure translated so the highest non-empty cell is in row 0.
  SkewTableau normalized() const;

  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;

 private:
  std::vector<Column> columns_;
  std::vector<int> tops_;
};

// The cells form a skew diagram, rows weakly increase with degree-1 letters
// strict and columns weakly increase with degree-0 letters strict.  Throws std::invalid_argument for a letter
// outside the alphabet.
bool is_semistandard(const SkewTableau& t, const GradedAlphabet& a);

// SST_a(mu), filled row by row, in lexicographic order of the row reading.
std::vector<SkewTableau> enumerate_sst(const Partition& mu, const GradedAlphabet& a);

// Columns right to left, each top to bottom.
Word reading_word(const SkewTableau& t);
Word reading_word(const ColumnTuple& t);

std::string to_string(const SkewTableau& t);

}  // namespace spinrsk
