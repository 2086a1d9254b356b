#include <stdexcept>

#include "spinrsk/kn.hpp"

namespace spinrsk {

namespace {

struct Inserter {
  int n;
  GradedAlphabet alpha;

  // w(C)x = x' w(C') in Pl(C_n), read off P(w(C)x) = [C', x'].
  std::pair<Letter, Column> bump(const Column& c, Letter x) const {
    Word w = c.entries;
    w.push_back(x);
    SkewTableau p = kn_P_by_crystal(w, n);
    if (p.width() != 2 || p.column(0).height() != c.height() || p.column(1).height() != 1)
      throw std::logic_error("kn_insert: " + to_string(w) + " does not bump a single letter");
    return {p.column(1)[0], p.column(0)};
  }

  // Inserts x into the columns cols[from..] (leftmost first).
  void insert(Letter x, std::vector<Column>& cols, std::size_t from, bool inner) const {
    if (from == cols.size()) {
      cols.push_back(Column{x});
      return;
    }
    Column& c = cols[from];
    if (alpha.less(c.back(), x)) {
      Column w = c;
      w.entries.push_back(x);
      if (is_admissible(w, n)) {
        c = std::move(w);  // Case 1
        return;
      }
      if (inner) throw std::logic_error("kn_insert: Case 3 arose inside a recursive insertion");
      Word ys = plactic_reduce_column(w.entries, n);  // Case 3
      std::vector<Column> rest(cols.begin() + static_cast<std::ptrdiff_t>(from + 1), cols.end());
      for (Letter y : ys) insert(y, rest, 0, true);
      cols.resize(from);
      cols.insert(cols.end(), rest.begin(), rest.end());
      return;
    }
    auto [xp, cp] = bump(c, x);  // Case 2
    c = std::move(cp);
    insert(xp, cols, from + 1, true);
  }
};

void require_straight_kn(const SkewTableau& t, int n) {
  if (!t.is_straight() || !is_kn_by_columns(t, n)) throw std::invalid_argument("kn_insert expects a straight KN tableau");
}

SkewTableau from_columns(std::vector<Column> cols) {
  std::vector<int> tops(cols.size(), 0);
  return {std::move(cols), std::move(tops)};
}

}  // namespace

SkewTableau kn_insert(Letter x, const SkewTableau& t, int n) {
  if (n < 1) throw std::invalid_argument("rank n must be positive");
  Inserter ins{n, GradedAlphabet::symplectic(n)};
  if (!ins.alpha.contains(x)) throw std::invalid_argument("letter " + to_string(x) + " is not in I_" + std::to_string(n));
  require_straight_kn(t, n);
  std::vector<Column> cols = t.columns();
  ins.insert(x, cols, 0, false);
  return from_columns(std::move(cols));
}

SkewTableau kn_P(const Word& w, int n) {
  if (n < 1) throw std::invalid_argument("rank n must be positive");
  Inserter ins{n, GradedAlphabet::symplectic(n)};
  std::vector<Column> cols;
  for (Letter x : w) {
    if (!ins.alpha.contains(x)) throw std::invalid_argument("letter " + to_string(x) + " is not in I_" + std::to_string(n));
    ins.insert(x, cols, 0, false);
  }
  return from_columns(std::move(cols));
}

std::vector<Partition> kn_Q(const Word& w, int n) {
  if (n < 1) throw std::invalid_argument("rank n must be positive");
  Inserter ins{n, GradedAlphabet::symplectic(n)};
  std::vector<Column> cols;
  std::vector<Partition> out;
  for (Letter x : w) {
    if (!ins.alpha.contains(x)) throw std::invalid_argument("letter " + to_string(x) + " is not in I_" + std::to_string(n));
    ins.insert(x, cols, 0, false);
    out.push_back(from_columns(cols).shape());
  }
  return out;
}

}  // namespace spinrsk
