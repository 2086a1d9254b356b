#include "spinrsk/rsk.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinrsk {

namespace {

using Grid = std::vector<std::vector<Letter>>;  // columns, top to bottom

Grid columns_of(const SkewTableau& t) {
  if (!t.is_straight()) throw std::invalid_argument("expected a straight-shape tableau");
  Grid g;
  for (const auto& c : t.columns()) g.push_back(c.entries);
  return g;
}

SkewTableau from_grid(Grid g) {
  std::vector<Column> cols;
  for (auto& c : g) cols.emplace_back(std::move(c));
  std::vector<int> tops(cols.size(), 0);
  return {std::move(cols), std::move(tops)};
}

// x enters column c; returns the landing cell.
std::pair<int, int> insert_into(Grid& g, Letter x, const GradedAlphabet& a) {
  for (std::size_t c = 0;; ++c) {
    if (c == g.size()) g.emplace_back();
    auto& col = g[c];
    // first y that may not sit above x
    auto it = std::find_if(col.begin(), col.end(), [&](Letter y) { return !a.col_lt(y, x); });
    if (it == col.end()) {
      col.push_back(x);
      return {static_cast<int>(col.size()) - 1, static_cast<int>(c)};
    }
    std::swap(*it, x);
  }
}

}  // namespace

SkewTableau column_insert(Letter x, const SkewTableau& t, const GradedAlphabet& a, int& new_row, int& new_col) {
  (void)a.rank(x);
  Grid g = columns_of(t);
  auto [r, c] = insert_into(g, x, a);
  new_row = r;
  new_col = c;
  return from_grid(std::move(g));
}

SkewTableau column_insert(Letter x, const SkewTableau& t, const GradedAlphabet& a) {
  int r = 0, c = 0;
  return column_insert(x, t, a, r, c);
}

RskPair rsk(const ColumnTuple& u, const GradedAlphabet& a) {
  Grid p;
  // q[row of P][col of P] holds the step; Q is its transpose.
  std::vector<std::vector<int>> rec;
  for (int i = 1; i <= u.size(); ++i) {
    const Column& ui = u.u(i);
    if (!is_column(ui, a)) throw std::invalid_argument("rsk: U_" + std::to_string(i) + " is not a column");
    for (Letter x : ui) {
      auto [r, c] = insert_into(p, x, a);
      if (static_cast<std::size_t>(c) >= rec.size()) rec.resize(static_cast<std::size_t>(c) + 1);
      auto& qrow = rec[static_cast<std::size_t>(c)];
      if (static_cast<std::size_t>(r) != qrow.size()) throw std::logic_error("rsk: cell added out of order");
      qrow.push_back(i);
    }
  }
  std::vector<std::vector<Letter>> qrows;
  for (const auto& row : rec) {
    std::vector<Letter> lr;
    for (int v : row) lr.push_back(num(v));
    qrows.push_back(std::move(lr));
  }
  return {from_grid(std::move(p)), SkewTableau::from_rows(qrows)};
}

ColumnTuple rsk_inverse(const SkewTableau& p, const SkewTableau& q, const GradedAlphabet& a, int r) {
  if (r < 0) throw std::invalid_argument("rsk_inverse: negative length");
  Grid g = columns_of(p);
  if (!is_semistandard(p, a)) throw std::invalid_argument("rsk_inverse: P is not semistandard");
  if (!q.is_straight()) throw std::invalid_argument("rsk_inverse: Q must have straight shape");
  if (q.shape() != p.shape().conjugate()) throw std::invalid_argument("rsk_inverse: incompatible shapes");
  auto qa = GradedAlphabet::plain(std::max(r, 1));
  if (r == 0 && q.size() > 0) throw std::invalid_argument("rsk_inverse: Q is not a valid recording tableau");
  if (r > 0 && !is_semistandard(q, qa)) throw std::invalid_argument("rsk_inverse: Q is not a valid recording tableau");
  auto qrows = q.rows();

  std::vector<Column> out(static_cast<std::size_t>(r));
  for (int i = r; i >= 1; --i) {
    // P-cells labelled i: Q row c, position k  <->  P column c, row k
    std::vector<std::pair<int, int>> cells;  // (row, col) in P
    for (std::size_t c = 0; c < qrows.size(); ++c)
      for (std::size_t k = 0; k < qrows[c].size(); ++k)
        if (qrows[c][k] == num(i)) cells.emplace_back(static_cast<int>(k), static_cast<int>(c));
    std::sort(cells.begin(), cells.end(), [](auto x, auto y) { return x.first > y.first; });
    std::vector<Letter> ejected;
    for (auto [row, col] : cells) {
      auto& column = g[static_cast<std::size_t>(col)];
      if (static_cast<int>(column.size()) != row + 1)
        throw std::invalid_argument("rsk_inverse: Q is not a valid recording tableau");
      if (col + 1 < static_cast<int>(g.size()) && static_cast<int>(g[static_cast<std::size_t>(col) + 1].size()) > row)
        throw std::invalid_argument("rsk_inverse: Q is not a valid recording tableau");
      Letter y = column.back();
      column.pop_back();
      for (int c = col - 1; c >= 0; --c) {
        auto& left = g[static_cast<std::size_t>(c)];
        // largest position whose entry may sit left of y
        int pos = -1;
        for (int k = 0; k < static_cast<int>(left.size()); ++k)
          if (a.row_le(left[static_cast<std::size_t>(k)], y)) pos = k;
        if (pos < 0) throw std::invalid_argument("rsk_inverse: reverse bumping failed");
        std::swap(left[static_cast<std::size_t>(pos)], y);
      }
      ejected.push_back(y);
    }
    std::reverse(ejected.begin(), ejected.end());
    Column ui(std::move(ejected));
    if (!is_column(ui, a)) throw std::invalid_argument("rsk_inverse: Q is not a valid recording tableau");
    out[static_cast<std::size_t>(r - i)] = std::move(ui);
  }
  while (!g.empty() && g.back().empty()) g.pop_back();
  if (!g.empty()) throw std::invalid_argument("rsk_inverse: Q does not exhaust P");
  return ColumnTuple(std::move(out));
}

SkewTableau highest_barred_tableau(const Partition& nu, int n) {
  if (nu.length() > n) throw std::invalid_argument("highest_barred_tableau: too many rows");
  std::vector<std::vector<Letter>> rows;
  for (int i = 0; i < nu.length(); ++i) rows.emplace_back(static_cast<std::size_t>(nu.part(i)), bar(n - i));
  return SkewTableau::from_rows(rows);
}

}  // namespace spinrsk
