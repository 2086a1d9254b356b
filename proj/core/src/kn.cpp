#include "spinrsk/kn.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinrsk {

namespace {

void require_rank(int n) {
  if (n < 1) throw std::invalid_argument("rank n must be positive");
}

bool contains(const Column& c, Letter x) { return std::find(c.begin(), c.end(), x) != c.end(); }

void require_column(const Column& c, int n) {
  if (!is_column(c, GradedAlphabet::symplectic(n)))
    throw std::invalid_argument("not a column over I_" + std::to_string(n) + ": " + to_string(c));
}

ColumnPair sl2_pair(const Column& c, int n) { return {negative_part(c), bar_complement(positive_part(c), n)}; }

Column from_sl2_pair(const ColumnPair& p, int n) { return join_column(complement(p.second, n), p.first); }

}  // namespace

Column positive_part(const Column& c) {
  Column out;
  std::copy_if(c.begin(), c.end(), std::back_inserter(out.entries), [](Letter x) { return x.band == Band::plain; });
  return out;
}

Column negative_part(const Column& c) {
  Column out;
  std::copy_if(c.begin(), c.end(), std::back_inserter(out.entries), [](Letter x) { return x.band == Band::bar; });
  return out;
}

Column join_column(const Column& plus, const Column& minus) {
  Column out = plus;
  out.entries.insert(out.entries.end(), minus.begin(), minus.end());
  return out;
}

Column complement(const Column& u, int n) {
  require_rank(n);
  for (Letter x : u)
    if (x.band != Band::bar || x.index < 1 || x.index > n)
      throw std::invalid_argument("complement: " + to_string(x) + " is not in [" + std::to_string(n) + "~]");
  Column out;
  for (int k = 1; k <= n; ++k)
    if (!contains(u, bar(k))) out.entries.push_back(num(k));
  return out;
}

Column bar_complement(const Column& u, int n) {
  require_rank(n);
  for (Letter x : u)
    if (x.band != Band::plain || x.index < 1 || x.index > n)
      throw std::invalid_argument("bar_complement: " + to_string(x) + " is not in [" + std::to_string(n) + "]");
  Column out;
  for (int k = n; k >= 1; --k)
    if (!contains(u, num(k))) out.entries.push_back(bar(k));
  return out;
}

Column to_admissible(const SpinorBlock& t, int n) { return join_column(complement(t.right_form(), n), t.left_form()); }

Column to_coadmissible(const SpinorBlock& t, int n) { return join_column(complement(t.left(), n), t.right()); }

SpinorBlock from_admissible(const Column& c, int n) {
  require_rank(n);
  require_column(c, n);
  const auto alpha = GradedAlphabet::barred(n);
  auto [u, v] = sl2_pair(c, n);
  auto cfg = pair_normalize(u, v, alpha);
  if (cfg.a != 0) throw std::invalid_argument("column " + to_string(c) + " is not admissible");
  ColumnPair p{u, v};
  for (int k = 0; k < cfg.b; ++k) p = *crystal_F(p.first, p.second, alpha);
  return SpinorBlock(p.first, p.second, alpha);
}

SpinorBlock from_coadmissible(const Column& c, int n) {
  require_rank(n);
  require_column(c, n);
  try {
    return SpinorBlock(bar_complement(positive_part(c), n), negative_part(c), GradedAlphabet::barred(n));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("column " + to_string(c) + " is not coadmissible");
  }
}

int n_count(const Column& c, int z) {
  return static_cast<int>(std::count_if(c.begin(), c.end(), [z](Letter x) {
    return (x.band == Band::plain && x.index <= z) || (x.band == Band::bar && x.index <= z);
  }));
}

bool is_admissible(const Column& c, int n) {
  require_rank(n);
  require_column(c, n);
  for (Letter x : c)
    if (x.band == Band::plain && contains(c, bar(x.index)) && n_count(c, x.index) > x.index) return false;
  return true;
}

Column coadmissible_of(const Column& c, int n) { return to_coadmissible(from_admissible(c, n), n); }

ColumnPair split_column(const Column& c, int n) {
  SpinorBlock t = from_admissible(c, n);
  return {join_column(complement(t.left(), n), t.left_form()), join_column(complement(t.right_form(), n), t.right())};
}

SkewTableau spl(const SkewTableau& t, int n) {
  std::vector<Column> cols;
  std::vector<int> tops;
  for (int j = 0; j < t.width(); ++j) {
    if (t.column(j).empty()) {
      cols.insert(cols.end(), 2, Column{});
    } else {
      auto [l, r] = split_column(t.column(j), n);
      cols.push_back(std::move(l));
      cols.push_back(std::move(r));
    }
    tops.insert(tops.end(), 2, t.top(j));
  }
  return {std::move(cols), std::move(tops)};
}

bool column_precedes(const Column& c2, const Column& c1, int n) {
  if (c2.height() < c1.height()) return false;
  if (!is_admissible(c2, n) || !is_admissible(c1, n))
    throw std::invalid_argument("column_precedes: non-admissible column");
  if (c1.empty()) return true;
  SkewTableau t({split_column(c2, n).second, split_column(c1, n).first}, {0, 0});
  return is_semistandard(t, GradedAlphabet::symplectic(n));
}

std::optional<Column> column_E(const Column& c, int n) {
  require_column(c, n);
  auto [u, v] = sl2_pair(c, n);
  auto r = crystal_E(u, v, GradedAlphabet::barred(n));
  if (!r) return std::nullopt;
  return from_sl2_pair(*r, n);
}

std::optional<Column> column_F(const Column& c, int n) {
  require_column(c, n);
  auto [u, v] = sl2_pair(c, n);
  auto r = crystal_F(u, v, GradedAlphabet::barred(n));
  if (!r) return std::nullopt;
  return from_sl2_pair(*r, n);
}

std::pair<Column, int> column_epsilon(const Column& c, int n) {
  Column cur = c;
  int eps = 0;
  while (auto next = column_E(cur, n)) {
    cur = std::move(*next);
    ++eps;
  }
  return {cur, eps};
}

int column_phi(const Column& c, int n) {
  require_column(c, n);
  auto [u, v] = sl2_pair(c, n);
  return pair_phi(u, v, GradedAlphabet::barred(n));
}

// --- KN tableaux -----------------------------------------------------------

namespace {

struct Located {
  int row = -1;  // counted from the bottom, 1-based
  bool found = false;
};

Located locate(const Column& c, Letter x, int base) {
  for (int k = 0; k < c.height(); ++k)
    if (c[k] == x) return {base - k, true};
  return {};
}

bool condition_one(const Column& c) {
  const int h = c.height();
  for (int k = 0; k < h; ++k) {
    Letter x = c[k];
    if (x.band != Band::plain) continue;
    auto lo = locate(c, bar(x.index), h);
    if (lo.found && lo.row + (k + 1) > x.index) return false;
  }
  return true;
}

// Column right = j, left = j+1 in the definition's numbering.
bool condition_two(const Column& right, const Column& left, int base_right, int base_left, int n) {
  for (int a = 1; a <= n; ++a) {
    auto p = locate(right, bar(a), base_right);
    if (!p.found) continue;
    for (int b = a; b <= n; ++b) {
      // all but the a-bar in column j
      {
        auto q = locate(right, bar(b), base_right);
        auto r = locate(right, num(b), base_right);
        auto s = locate(left, num(a), base_left);
        if (q.found && r.found && s.found && p.row <= q.row && q.row < r.row && r.row <= s.row &&
            (q.row - p.row) + (s.row - r.row) >= b - a)
          return false;
      }
      // all but the a-bar in column j+1
      {
        auto q = locate(left, bar(b), base_left);
        auto r = locate(left, num(b), base_left);
        auto s = locate(left, num(a), base_left);
        if (q.found && r.found && s.found && p.row <= q.row && q.row < r.row && r.row <= s.row &&
            (q.row - p.row) + (s.row - r.row) >= b - a)
          return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_kn(const SkewTableau& t, int n, KnRows rows) {
  require_rank(n);
  if (!t.is_straight()) throw std::invalid_argument("is_kn expects a straight shape");
  const auto alpha = GradedAlphabet::symplectic(n);
  for (const Column& c : t.columns())
    for (Letter x : c)
      if (!alpha.contains(x)) return false;
  if (!is_semistandard(t, alpha)) return false;
  const int w = t.width();
  const int total = w ? t.column(0).height() : 0;
  auto base = [&](int col) { return rows == KnRows::global ? total : t.column(col).height(); };
  for (int c = 0; c < w; ++c)
    if (!condition_one(t.column(c))) return false;
  for (int c = 1; c < w; ++c)
    if (!condition_two(t.column(c), t.column(c - 1), base(c), base(c - 1), n)) return false;
  return true;
}

bool is_kn_by_columns(const SkewTableau& t, int n) {
  require_rank(n);
  if (!t.is_straight()) throw std::invalid_argument("is_kn_by_columns expects a straight shape");
  const auto alpha = GradedAlphabet::symplectic(n);
  for (const Column& c : t.columns())
    if (!is_column(c, alpha) || !is_admissible(c, n)) return false;
  for (int c = 1; c < t.width(); ++c)
    if (!column_precedes(t.column(c - 1), t.column(c), n)) return false;
  return true;
}

bool is_admissible_tableau(const SkewTableau& t, int n) {
  require_rank(n);
  const auto alpha = GradedAlphabet::symplectic(n);
  for (const Column& c : t.columns())
    for (Letter x : c)
      if (!alpha.contains(x)) return false;
  if (!is_semistandard(t, alpha)) return false;
  for (const Column& c : t.columns())
    if (!is_admissible(c, n)) return false;
  return is_semistandard(spl(t, n), alpha);
}

// --- plactic relations -----------------------------------------------------

namespace {

// Smallest z with the pair (z, z-bar) in c and N(z) > z, or 0.
int violating_pair(const Column& c) {
  for (Letter x : c)
    if (x.band == Band::plain && contains(c, bar(x.index)) && n_count(c, x.index) > x.index) return x.index;
  return 0;
}

Column without_pair(const Column& c, int z) {
  Column out;
  std::copy_if(c.begin(), c.end(), std::back_inserter(out.entries),
               [z](Letter x) { return x != num(z) && x != bar(z); });
  return out;
}

// Proper factors of a column word are sub-columns, and admissibility passes
// to sub-columns, so the two maximal factors decide minimality.
bool reducible_column_word(const Word& w, int n) {
  Column c(w);
  if (!is_column(c, GradedAlphabet::symplectic(n)) || is_admissible(c, n)) return false;
  Column drop_first(Word(w.begin() + 1, w.end()));
  Column drop_last(Word(w.begin(), w.end() - 1));
  return is_admissible(drop_first, n) && is_admissible(drop_last, n);
}

}  // namespace

Word plactic_reduce_column(const Word& w, int n) {
  require_rank(n);
  if (!reducible_column_word(w, n))
    throw std::invalid_argument("plactic_reduce_column: " + to_string(w) +
                                " is not a minimal non-admissible column word");
  Column c(w);
  return without_pair(c, violating_pair(c)).entries;
}

Column reduce_column(const Column& c, int n) {
  require_column(c, n);
  Column cur = c;
  while (int z = violating_pair(cur)) cur = without_pair(cur, z);
  return cur;
}

std::vector<PlacticMove> plactic_moves(const Word& w, int n) {
  require_rank(n);
  const auto alpha = GradedAlphabet::symplectic(n);
  auto rk = [&](Letter x) { return alpha.rank(x); };
  auto is_bar_of = [](Letter z, Letter x) { return x.band == Band::plain && z == bar(x.index); };
  std::vector<PlacticMove> out;
  auto emit = [&](int relation, std::size_t i, std::initializer_list<Letter> repl) {
    Word v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    v.insert(v.end(), repl);
    v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 3), w.end());
    out.push_back({relation, std::move(v)});
  };
  for (std::size_t i = 0; i + 3 <= w.size(); ++i) {
    Letter p = w[i], q = w[i + 1], r = w[i + 2];
    // (1) y z x = y x z,  x <= y < z,  z != x-bar
    if (rk(r) <= rk(p) && rk(p) < rk(q) && !is_bar_of(q, r)) emit(1, i, {p, r, q});
    if (rk(q) <= rk(p) && rk(p) < rk(r) && !is_bar_of(r, q)) emit(1, i, {p, r, q});
    // (2) x z y = z x y,  x < y <= z,  z != x-bar
    if (rk(p) < rk(r) && rk(r) <= rk(q) && !is_bar_of(q, p)) emit(2, i, {q, p, r});
    if (rk(q) < rk(r) && rk(r) <= rk(p) && !is_bar_of(p, q)) emit(2, i, {q, p, r});
    // (3) y (x-1)-bar (x-1) = y x x-bar,  1 < x <= n,  x <= y <= x-bar
    auto mid_ok = [&](Letter y, int x) { return rk(num(x)) <= rk(y) && rk(y) <= rk(bar(x)); };
    if (q.band == Band::bar && r == num(q.index) && q.index + 1 <= n && mid_ok(p, q.index + 1))
      emit(3, i, {p, num(q.index + 1), bar(q.index + 1)});
    if (q.band == Band::plain && r == bar(q.index) && q.index > 1 && mid_ok(p, q.index))
      emit(3, i, {p, bar(q.index - 1), num(q.index - 1)});
    // (4) x x-bar y = (x-1)-bar (x-1) y
    if (p.band == Band::plain && q == bar(p.index) && p.index > 1 && mid_ok(r, p.index))
      emit(4, i, {bar(p.index - 1), num(p.index - 1), r});
    if (p.band == Band::bar && q == num(p.index) && p.index + 1 <= n && mid_ok(r, p.index + 1))
      emit(4, i, {num(p.index + 1), bar(p.index + 1), r});
  }
  // (5) on every factor
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 2; j <= w.size(); ++j) {
      Word f(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(j));
      if (!reducible_column_word(f, n)) continue;
      Word v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      Word red = plactic_reduce_column(f, n);
      v.insert(v.end(), red.begin(), red.end());
      v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(j), w.end());
      out.push_back({5, std::move(v)});
    }
  return out;
}

std::vector<Word> plactic_neighbors(const Word& w, int n) {
  std::vector<Word> out;
  for (PlacticMove& m : plactic_moves(w, n)) out.push_back(std::move(m.word));
  return out;
}

// --- sp_2n crystal on words --------------------------------------------------

namespace {

// +1, -1 or 0 for the i-signature of x.
int sign_of(Letter x, int i, int n) {
  if (i < n) {
    if (x == num(i) || x == bar(i + 1)) return 1;
    if (x == num(i + 1) || x == bar(i)) return -1;
    return 0;
  }
  if (x == num(n)) return 1;
  if (x == bar(n)) return -1;
  return 0;
}

struct Free {
  std::vector<std::size_t> minus, plus;
};

Free free_letters(const Word& w, int i, int n) {
  if (i < 1 || i > n) throw std::out_of_range("sp_2n crystal index out of range");
  Free out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    int s = sign_of(w[k], i, n);
    if (s > 0) out.plus.push_back(k);
    else if (s < 0) {
      if (!out.plus.empty()) out.plus.pop_back();
      else out.minus.push_back(k);
    }
  }
  return out;
}

Letter raise(Letter x, int i, int n) {  // e_i on a single letter
  if (i == n) return num(n);
  return x == num(i + 1) ? num(i) : bar(i + 1);
}

Letter lower(Letter x, int i, int n) {  // f_i on a single letter
  if (i == n) return bar(n);
  return x == num(i) ? num(i + 1) : bar(i);
}

}  // namespace

std::pair<int, int> sp_signature(const Word& w, int i, int n) {
  auto f = free_letters(w, i, n);
  return {static_cast<int>(f.minus.size()), static_cast<int>(f.plus.size())};
}

std::optional<Word> sp_e(const Word& w, int i, int n) {
  auto f = free_letters(w, i, n);
  if (f.minus.empty()) return std::nullopt;
  Word out = w;
  out[f.minus.back()] = raise(out[f.minus.back()], i, n);
  return out;
}

std::optional<Word> sp_f(const Word& w, int i, int n) {
  auto f = free_letters(w, i, n);
  if (f.plus.empty()) return std::nullopt;
  Word out = w;
  out[f.plus.front()] = lower(out[f.plus.front()], i, n);
  return out;
}

bool is_highest_weight(const Word& w, int n) {
  for (int i = 1; i <= n; ++i)
    if (sp_signature(w, i, n).first) return false;
  return true;
}

std::vector<int> sp_weight(const Word& w, int n) {
  require_rank(n);
  std::vector<int> wt(static_cast<std::size_t>(n), 0);
  for (Letter x : w) {
    if (x.index < 1 || x.index > n || x.band == Band::prime)
      throw std::invalid_argument("letter " + to_string(x) + " is not in I_" + std::to_string(n));
    wt[static_cast<std::size_t>(x.index - 1)] += x.band == Band::plain ? 1 : -1;
  }
  return wt;
}

SkewTableau highest_weight_kn(const Partition& mu) {
  std::vector<Column> cols;
  const Partition heights = mu.conjugate();
  for (int h : heights.parts()) {
    Column c;
    for (int k = 1; k <= h; ++k) c.entries.push_back(num(k));
    cols.push_back(std::move(c));
  }
  std::vector<int> tops(cols.size(), 0);
  return SkewTableau(std::move(cols), std::move(tops));
}

SkewTableau tableau_from_reading(const Word& w, const std::vector<int>& heights) {
  std::size_t total = 0;
  for (int h : heights) total += static_cast<std::size_t>(h);
  if (total != w.size()) throw std::invalid_argument("tableau_from_reading: word length does not match the shape");
  std::vector<Column> cols(heights.size());
  std::size_t pos = 0;
  for (std::size_t j = heights.size(); j-- > 0;) {
    auto h = static_cast<std::size_t>(heights[j]);
    cols[j].entries.assign(w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(pos + h));
    pos += h;
  }
  std::vector<int> tops(heights.size(), 0);
  return SkewTableau(std::move(cols), std::move(tops));
}

SkewTableau kn_P_by_crystal(const Word& w, int n) {
  require_rank(n);
  Word u = w;
  std::vector<int> path;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 1; i <= n; ++i)
      if (auto up = sp_e(u, i, n)) {
        u = std::move(*up);
        path.push_back(i);
        moved = true;
        break;
      }
  }
  auto wt = sp_weight(u, n);
  for (std::size_t i = 0; i + 1 < wt.size(); ++i)
    if (wt[i] < wt[i + 1]) throw std::logic_error("kn_P_by_crystal: highest weight is not dominant");
  if (!wt.empty() && wt.back() < 0) throw std::logic_error("kn_P_by_crystal: highest weight is not dominant");
  const Partition mu(wt);
  SkewTableau h = highest_weight_kn(mu);
  Word v = reading_word(h);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    auto down = sp_f(v, *it, n);
    if (!down) throw std::logic_error("kn_P_by_crystal: lowering path breaks");
    v = std::move(*down);
  }
  return tableau_from_reading(v, mu.conjugate().parts());
}

SkewTableau spinor_to_kn(const SpinorTableau& t, const Partition& mu, int n) {
  require_rank(n);
  const int ell = t.ell();
  if (mu.length() > ell) throw std::invalid_argument("spinor_to_kn: inner shape longer than the tableau");
  std::vector<Column> cols;
  std::vector<int> tops;
  for (int i = ell; i >= 1; --i) {
    cols.push_back(to_admissible(t.block(i), n));
    tops.push_back(mu.part(0) - mu.part(i - 1));
  }
  return {std::move(cols), std::move(tops)};
}

SpinorTableau kn_to_spinor(const SkewTableau& t, int n) {
  std::vector<SpinorBlock> blocks;
  for (const Column& c : t.columns()) blocks.push_back(from_admissible(c, n));
  return SpinorTableau(std::move(blocks));
}

}  // namespace spinrsk
