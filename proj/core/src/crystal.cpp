#include "spinrsk/crystal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace spinrsk {

SkewTableau TwoColumnConfig::tableau() const { return SkewTableau({left, right}, {b, 0}); }

namespace {

bool overlap_ok(const Column& u, const Column& v, int k, const GradedAlphabet& a) {
  const int vh = v.height();
  for (int i = 0; i < k; ++i)
    if (!a.row_le(u[i], v[vh - k + i])) return false;
  return true;
}

TwoColumnConfig make_config(const Column& u, const Column& v, int k) {
  return {u, v, u.height() - k, v.height() - k, k};
}

void require_columns(const Column& u, const Column& v, const GradedAlphabet& a) {
  if (!is_column(u, a) || !is_column(v, a)) throw std::invalid_argument("pair_normalize: not a pair of columns");
}

// Cells of the two columns keyed by row.
struct Board {
  std::map<int, Letter> col[2];

  explicit Board(const TwoColumnConfig& t) {
    for (int i = 0; i < t.left.height(); ++i) col[0][t.b + i] = t.left[i];
    for (int i = 0; i < t.right.height(); ++i) col[1][i] = t.right[i];
  }
  const Letter* get(int side, int row) const {
    auto it = col[side].find(row);
    return it == col[side].end() ? nullptr : &it->second;
  }
  ColumnPair columns() const {
    ColumnPair out;
    for (auto& [r, x] : col[0]) out.first.entries.push_back(x);
    for (auto& [r, x] : col[1]) out.second.entries.push_back(x);
    return out;
  }
};

// On equal letters a degree-0 letter slides vertically, a degree-1 letter
// horizontally; otherwise the order decides.
bool prefer_vertical(Letter vert, Letter horiz, bool larger_wins, const GradedAlphabet& a) {
  int rv = a.rank(vert), rh = a.rank(horiz);
  if (rv == rh) return vert.degree() == 0;
  return larger_wins ? rv > rh : rv < rh;
}

}  // namespace

TwoColumnConfig pair_normalize(const Column& u, const Column& v, const GradedAlphabet& a) {
  require_columns(u, v, a);
  // admissible overlaps are closed downward, so grow while possible
  const int kmax = std::min(u.height(), v.height());
  int k = 0;
  while (k < kmax && overlap_ok(u, v, k + 1, a)) ++k;
  return make_config(u, v, k);
}

TwoColumnConfig pair_normalize_scan(const Column& u, const Column& v, const GradedAlphabet& a) {
  require_columns(u, v, a);
  int best = 0;
  for (int k = 0; k <= std::min(u.height(), v.height()); ++k)
    if (overlap_ok(u, v, k, a)) best = k;
  return make_config(u, v, best);
}

std::optional<ColumnPair> crystal_E(const Column& u, const Column& v, const GradedAlphabet& a) {
  const TwoColumnConfig t = pair_normalize(u, v, a);
  if (t.a == 0) return std::nullopt;
  Board board(t);
  int side = 1, row = t.b + t.c;  // hole just below the right column
  for (;;) {
    const Letter* above = board.get(side, row - 1);
    const Letter* left = side == 1 ? board.get(0, row) : nullptr;
    if (!above && !left) break;
    bool vertical = above && (!left || prefer_vertical(*above, *left, /*larger_wins=*/true, a));
    if (vertical) {
      board.col[side][row] = *above;
      board.col[side].erase(row - 1);
      --row;
    } else {
      board.col[1][row] = *left;
      board.col[0].erase(row);
      side = 0;
    }
  }
  ColumnPair out = board.columns();
  auto check = pair_normalize(out.first, out.second, a);
  if (check.a != t.a - 1 || check.b != t.b + 1) throw std::logic_error("crystal_E: slide left an unexpected shape");
  return out;
}

std::optional<ColumnPair> crystal_F(const Column& u, const Column& v, const GradedAlphabet& a) {
  const TwoColumnConfig t = pair_normalize(u, v, a);
  if (t.b == 0) return std::nullopt;
  Board board(t);
  int side = 0, row = t.b - 1;  // hole just above the left column
  for (;;) {
    const Letter* below = board.get(side, row + 1);
    const Letter* right = side == 0 ? board.get(1, row) : nullptr;
    if (!below && !right) break;
    bool vertical = below && (!right || prefer_vertical(*below, *right, /*larger_wins=*/false, a));
    if (vertical) {
      board.col[side][row] = *below;
      board.col[side].erase(row + 1);
      ++row;
    } else {
      board.col[0][row] = *right;
      board.col[1].erase(row);
      side = 1;
    }
  }
  ColumnPair out = board.columns();
  auto check = pair_normalize(out.first, out.second, a);
  if (check.a != t.a + 1 || check.b != t.b - 1) throw std::logic_error("crystal_F: slide left an unexpected shape");
  return out;
}

int pair_epsilon(const Column& u, const Column& v, const GradedAlphabet& a) { return pair_normalize(u, v, a).a; }
int pair_phi(const Column& u, const Column& v, const GradedAlphabet& a) { return pair_normalize(u, v, a).b; }

namespace {

void check_index(const ColumnTuple& t, int i) {
  if (i < 1 || i >= t.size()) throw std::out_of_range("crystal operator index " + std::to_string(i) + " out of range");
}

template <class Op>
std::optional<ColumnTuple> apply_pair(const ColumnTuple& t, int i, Op op) {
  check_index(t, i);
  auto r = op(t.u(i + 1), t.u(i));
  if (!r) return std::nullopt;
  ColumnTuple out = t;
  out.u(i + 1) = std::move(r->first);
  out.u(i) = std::move(r->second);
  return out;
}

}  // namespace

std::optional<ColumnTuple> crystal_Ei(const ColumnTuple& t, int i, const GradedAlphabet& a) {
  return apply_pair(t, i, [&](const Column& u, const Column& v) { return crystal_E(u, v, a); });
}

std::optional<ColumnTuple> crystal_Fi(const ColumnTuple& t, int i, const GradedAlphabet& a) {
  return apply_pair(t, i, [&](const Column& u, const Column& v) { return crystal_F(u, v, a); });
}

// --- biword oracle ---------------------------------------------------------
//
// Encode (U_{i+1}, U_i) letter by letter in increasing order.  A degree-0
// letter in U_{i+1} only gives '-', in U_i only gives '+'.  A degree-1 letter
// with multiplicities m_i, m_{i+1} gives +^{m_i} -^{m_{i+1}}.  Pairs "- ... +"
// cancel; E moves the letter of the leftmost free '-' into U_i, F moves the
// letter of the rightmost free '+' into U_{i+1}.

namespace {

struct Sign {
  bool plus;
  Letter letter;
};

struct Bracketed {
  std::vector<Sign> free_minus;  // in order
  std::vector<Sign> free_plus;   // in order
};

Bracketed bracket(const ColumnTuple& t, int i, const GradedAlphabet& a) {
  check_index(t, i);
  const Column& hi = t.u(i + 1);
  const Column& lo = t.u(i);
  std::vector<Sign> word;
  for (Letter x : a.letters()) {
    auto m_hi = std::count(hi.begin(), hi.end(), x);
    auto m_lo = std::count(lo.begin(), lo.end(), x);
    if (x.degree() == 0) {
      if (m_hi && !m_lo) word.push_back({false, x});
      if (m_lo && !m_hi) word.push_back({true, x});
    } else {
      for (long k = 0; k < m_lo; ++k) word.push_back({true, x});
      for (long k = 0; k < m_hi; ++k) word.push_back({false, x});
    }
  }
  Bracketed out;
  std::vector<Sign> open_minus;
  for (const Sign& s : word) {
    if (!s.plus) open_minus.push_back(s);
    else if (!open_minus.empty()) open_minus.pop_back();
    else out.free_plus.push_back(s);
  }
  out.free_minus = std::move(open_minus);
  return out;
}

void move_letter(Column& from, Column& to, Letter x, const GradedAlphabet& a) {
  auto it = std::find(from.entries.begin(), from.entries.end(), x);
  if (it == from.entries.end()) throw std::logic_error("biword: letter missing");
  from.entries.erase(it);
  auto pos = std::upper_bound(to.entries.begin(), to.entries.end(), x,
                              [&](Letter p, Letter q) { return a.less(p, q); });
  to.entries.insert(pos, x);
}

}  // namespace

std::pair<int, int> biword_signature(const ColumnTuple& t, int i, const GradedAlphabet& a) {
  auto b = bracket(t, i, a);
  return {static_cast<int>(b.free_minus.size()), static_cast<int>(b.free_plus.size())};
}

std::optional<ColumnTuple> biword_Ei(const ColumnTuple& t, int i, const GradedAlphabet& a) {
  auto b = bracket(t, i, a);
  if (b.free_minus.empty()) return std::nullopt;
  ColumnTuple out = t;
  move_letter(out.u(i + 1), out.u(i), b.free_minus.front().letter, a);
  return out;
}

std::optional<ColumnTuple> biword_Fi(const ColumnTuple& t, int i, const GradedAlphabet& a) {
  auto b = bracket(t, i, a);
  if (b.free_plus.empty()) return std::nullopt;
  ColumnTuple out = t;
  move_letter(out.u(i), out.u(i + 1), b.free_plus.back().letter, a);
  return out;
}

// --- sl_r crystal on [r]-tableaux --------------------------------------------

namespace {

struct Pos {
  int col;
  int idx;
};

struct Reduced {
  std::vector<Pos> free_minus;  // letters i+1, in reading order
  std::vector<Pos> free_plus;   // letters i, in reading order
};

// Tensor rule: adjacent "+ -" pairs cancel, leaving -^eps +^phi.
Reduced reduce(const SkewTableau& q, int i) {
  if (i < 1) throw std::out_of_range("crystal index must be positive");
  Reduced out;
  std::vector<Pos> plus;
  for (int c = q.width() - 1; c >= 0; --c) {
    const Column& col = q.column(c);
    for (int k = 0; k < col.height(); ++k) {
      Letter x = col[k];
      if (x.band != Band::plain) throw std::invalid_argument("expected a tableau over [r]");
      if (x.index == i) plus.push_back({c, k});
      else if (x.index == i + 1) {
        if (!plus.empty()) plus.pop_back();
        else out.free_minus.push_back({c, k});
      }
    }
  }
  out.free_plus = std::move(plus);
  return out;
}

SkewTableau replace(const SkewTableau& q, Pos p, Letter x) {
  std::vector<Column> cols = q.columns();
  cols[static_cast<std::size_t>(p.col)].entries[static_cast<std::size_t>(p.idx)] = x;
  return {std::move(cols), q.tops()};
}

}  // namespace

std::pair<int, int> signature(const SkewTableau& q, int i) {
  auto r = reduce(q, i);
  return {static_cast<int>(r.free_minus.size()), static_cast<int>(r.free_plus.size())};
}

std::optional<SkewTableau> crystal_e(const SkewTableau& q, int i) {
  auto r = reduce(q, i);
  if (r.free_minus.empty()) return std::nullopt;
  return replace(q, r.free_minus.back(), num(i));
}

std::optional<SkewTableau> crystal_f(const SkewTableau& q, int i) {
  auto r = reduce(q, i);
  if (r.free_plus.empty()) return std::nullopt;
  return replace(q, r.free_plus.front(), num(i + 1));
}

SkewTableau weyl_reflect(const SkewTableau& q, int i) {
  auto [eps, phi] = signature(q, i);
  SkewTableau out = q;
  for (int k = 0; k < phi - eps; ++k) out = *crystal_f(out, i);
  for (int k = 0; k < eps - phi; ++k) out = *crystal_e(out, i);
  return out;
}

}  // namespace spinrsk
