#include "spinrsk/tableau.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace spinrsk {

bool is_column(const Column& c, const GradedAlphabet& a) {
  for (int i = 0; i < c.height(); ++i) {
    (void)a.rank(c[i]);
    if (i > 0 && !a.col_lt(c[i - 1], c[i])) return false;
  }
  return true;
}

std::string to_string(const Column& c) { return "[" + to_string(c.entries) + "]"; }

Column parse_column(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw std::invalid_argument("unterminated column: " + std::string(text));
    text = text.substr(1, text.size() - 2);
  }
  return Column(parse_word(text));
}

SkewTableau::SkewTableau(std::vector<Column> columns, std::vector<int> tops)
    : columns_(std::move(columns)), tops_(std::move(tops)) {
  if (tops_.size() != columns_.size()) throw std::invalid_argument("one top row per column is required");
}

SkewTableau SkewTableau::bottom_aligned(std::vector<Column> columns, std::vector<int> offsets) {
  if (offsets.empty()) offsets.assign(columns.size(), 0);
  if (offsets.size() != columns.size()) throw std::invalid_argument("one offset per column is required");
  std::vector<int> tops(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) tops[j] = -offsets[j] - columns[j].height();
  return {std::move(columns), std::move(tops)};
}

SkewTableau SkewTableau::top_aligned(std::vector<Column> columns, std::vector<int> offsets) {
  if (offsets.empty()) offsets.assign(columns.size(), 0);
  if (offsets.size() != columns.size()) throw std::invalid_argument("one offset per column is required");
  return {std::move(columns), std::move(offsets)};
}

SkewTableau SkewTableau::from_rows(const std::vector<std::vector<Letter>>& rows) {
  std::size_t width = rows.empty() ? 0 : rows.front().size();
  std::vector<Column> cols(width);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() > width || (i > 0 && rows[i].size() > rows[i - 1].size()))
      throw std::invalid_argument("rows do not form a partition shape");
    for (std::size_t j = 0; j < rows[i].size(); ++j) cols[j].entries.push_back(rows[i][j]);
  }
  return {std::move(cols), std::vector<int>(width, 0)};
}

int SkewTableau::size() const noexcept {
  int s = 0;
  for (const auto& c : columns_) s += c.height();
  return s;
}

const Letter* SkewTableau::at(int row, int col) const {
  if (col < 0 || col >= width()) return nullptr;
  int r = row - top(col);
  if (r < 0 || r >= column(col).height()) return nullptr;
  return &columns_[static_cast<std::size_t>(col)].entries[static_cast<std::size_t>(r)];
}

bool SkewTableau::is_straight() const noexcept {
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (tops_[j] != 0) return false;
    if (j > 0 && columns_[j].height() > columns_[j - 1].height()) return false;
  }
  return true;
}

Partition SkewTableau::shape() const {
  if (!is_straight()) throw std::invalid_argument("shape() needs a straight tableau");
  std::vector<int> heights;
  for (const auto& c : columns_) heights.push_back(c.height());
  return Partition(heights).conjugate();
}

std::vector<std::vector<Letter>> SkewTableau::rows() const {
  Partition sh = shape();
  std::vector<std::vector<Letter>> out(static_cast<std::size_t>(sh.length()));
  for (int i = 0; i < sh.length(); ++i)
    for (int j = 0; j < sh.part(i); ++j) out[static_cast<std::size_t>(i)].push_back(column(j)[i]);
  return out;
}

SkewTableau SkewTableau::normalized() const {
  int lo = std::numeric_limits<int>::max();
  for (int j = 0; j < width(); ++j)
    if (!column(j).empty()) lo = std::min(lo, top(j));
  if (lo == std::numeric_limits<int>::max()) return {columns_, std::vector<int>(columns_.size(), 0)};
  std::vector<int> tops = tops_;
  for (int& t : tops) t -= lo;
  return {columns_, std::move(tops)};
}

bool is_semistandard(const SkewTableau& t, const GradedAlphabet& a) {
  for (int j = 0; j < t.width(); ++j)
    if (!is_column(t.column(j), a)) return false;
  for (int j = 0; j + 1 < t.width(); ++j) {
    // the cells must form a skew diagram
    if (t.top(j + 1) > t.top(j) || t.bottom(j + 1) > t.bottom(j)) return false;
    const Column& l = t.column(j);
    int lo = std::max(t.top(j), t.top(j + 1));
    int hi = std::min(t.bottom(j), t.bottom(j + 1));
    for (int r = lo; r < hi; ++r)
      if (!a.row_le(l[r - t.top(j)], t.column(j + 1)[r - t.top(j + 1)])) return false;
  }
  return true;
}

Word reading_word(const SkewTableau& t) {
  Word w;
  for (int j = t.width() - 1; j >= 0; --j) w.insert(w.end(), t.column(j).begin(), t.column(j).end());
  return w;
}

Word reading_word(const ColumnTuple& t) {
  Word w;
  for (auto it = t.cols.rbegin(); it != t.cols.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

std::string to_string(const SkewTableau& t) {
  std::string out;
  for (int j = 0; j < t.width(); ++j) {
    if (j) out += ' ';
    out += to_string(t.column(j));
  }
  out += " (";
  for (int j = 0; j < t.width(); ++j) {
    if (j) out += ',';
    out += std::to_string(t.top(j));
  }
  return out + ")";
}

namespace {

void fill_rec(const Partition& mu, const GradedAlphabet& a, std::vector<std::vector<Letter>>& rows, int r, int c,
              std::vector<SkewTableau>& out) {
  if (r == mu.length()) {
    out.push_back(SkewTableau::from_rows(rows));
    return;
  }
  if (c == mu.part(r)) {
    fill_rec(mu, a, rows, r + 1, 0, out);
    return;
  }
  auto& row = rows[static_cast<std::size_t>(r)];
  for (Letter x : a.letters()) {
    if (c > 0 && !a.row_le(row.back(), x)) continue;
    if (r > 0 && !a.col_lt(rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)], x)) continue;
    row.push_back(x);
    fill_rec(mu, a, rows, r, c + 1, out);
    row.pop_back();
  }
}

}  // namespace

std::vector<SkewTableau> enumerate_sst(const Partition& mu, const GradedAlphabet& a) {
  std::vector<std::vector<Letter>> rows(static_cast<std::size_t>(mu.length()));
  std::vector<SkewTableau> out;
  fill_rec(mu, a, rows, 0, 0, out);
  return out;
}

}  // namespace spinrsk
