#include <stdexcept>

#include "spinrsk/kn.hpp"

namespace spinrsk {

namespace {

// A column with the puncture at index k of its cells (0 = top).  The entries
// exclude the puncture; the puncture sits in the same row of lC and rC.
struct Punctured {
  int col = 0;
  int top = 0;
  Column cells;
  int k = 0;

  int row() const { return top + k; }
};

Column insert_at(const Column& c, int k, Letter x) {
  Column out = c;
  out.entries.insert(out.entries.begin() + k, x);
  return out;
}

Column erase_at(const Column& c, int k) {
  Column out = c;
  out.entries.erase(out.entries.begin() + k);
  return out;
}

}  // namespace

SkewTableau jdt_kn(const SkewTableau& t, int col, int n, ColumnRepair repair, RepairTop place) {
  if (col < 0 || col >= t.width()) throw std::invalid_argument("jdt_kn: column out of range");
  const int w = t.width();
  if (t.top(col) < 1 || (col + 1 < w && t.top(col + 1) >= t.top(col)))
    throw std::invalid_argument("jdt_kn: no inner corner above column " + std::to_string(col));
  if (!is_admissible_tableau(t, n)) throw std::invalid_argument("jdt_kn: tableau is not admissible");
  const auto alpha = GradedAlphabet::symplectic(n);

  std::vector<Column> cols = t.columns();
  std::vector<int> tops = t.tops();
  Punctured p{col, t.top(col) - 1, cols[static_cast<std::size_t>(col)], 0};

  for (;;) {
    const int right = p.col + 1;
    std::optional<Letter> b;
    int bidx = -1;
    if (right < w) {
      const Column& c1 = cols[static_cast<std::size_t>(right)];
      bidx = p.row() - tops[static_cast<std::size_t>(right)];
      if (bidx >= 0 && bidx < c1.height()) b = split_column(c1, n).first[bidx];
    }
    const bool has_a = p.k < p.cells.height();
    if (!has_a && !b) break;
    bool slide_down = !b;
    if (has_a && b) slide_down = !alpha.less(*b, split_column(p.cells, n).second[p.k]);
    if (slide_down) {  // (1)
      ++p.k;
      continue;
    }
    Column& c1 = cols[static_cast<std::size_t>(right)];
    Column left;
    Column next;
    if (b->band == Band::plain) {  // (2-a)
      left = insert_at(p.cells, p.k, *b);
      Column star = coadmissible_of(c1, n);
      if (star[bidx] != *b) throw std::logic_error("jdt_kn: coadmissible form lost the sliding letter");
      next = to_admissible(from_coadmissible(erase_at(star, bidx), n), n);
    } else {  // (2-b)
      if (c1[bidx] != *b) throw std::logic_error("jdt_kn: column lost the sliding letter");
      next = erase_at(c1, bidx);
      left = to_admissible(from_coadmissible(insert_at(coadmissible_of(p.cells, n), p.k, *b), n), n);
    }
    cols[static_cast<std::size_t>(p.col)] = std::move(left);
    tops[static_cast<std::size_t>(p.col)] = p.top;
    p = Punctured{right, tops[static_cast<std::size_t>(right)], std::move(next), bidx};
  }
  cols[static_cast<std::size_t>(p.col)] = p.cells;
  tops[static_cast<std::size_t>(p.col)] = p.top;

  for (int j = 0; j < w; ++j)
    if (j != col && !is_admissible(cols[static_cast<std::size_t>(j)], n))
      throw std::logic_error("jdt_kn: a column other than the starting one became non-admissible");
  Column& start = cols[static_cast<std::size_t>(col)];
  if (!is_admissible(start, n)) {
    Column reduced = repair == ColumnRepair::plactic ? reduce_column(start, n) : column_epsilon(start, n).first;
    if (reduced.height() != start.height() - 2) throw std::logic_error("jdt_kn: reduction removed more than one pair");
    start = std::move(reduced);
    tops[static_cast<std::size_t>(col)] = t.top(col);
    if (place == RepairTop::raise) {
      std::vector<int> raised = tops;
      --raised[static_cast<std::size_t>(col)];
      SkewTableau up(cols, std::move(raised));
      if (is_admissible_tableau(up, n)) return up;
    }
  }
  SkewTableau out(std::move(cols), std::move(tops));
  if (!is_admissible_tableau(out, n)) throw std::logic_error("jdt_kn: result is not admissible");
  return out;
}

SkewTableau rectify_kn(const SkewTableau& t, int n) {
  SkewTableau cur = t;
  for (;;) {
    int corner = -1;
    for (int j = cur.width() - 1; j >= 0 && corner < 0; --j)
      if (cur.top(j) > 0 && (j + 1 == cur.width() || cur.top(j + 1) < cur.top(j))) corner = j;
    if (corner < 0) break;
    cur = jdt_kn(cur, corner, n);
  }
  std::vector<Column> cols;
  for (const Column& c : cur.columns())
    if (!c.empty()) cols.push_back(c);
  return SkewTableau(cols, std::vector<int>(cols.size(), 0));
}

}  // namespace spinrsk
