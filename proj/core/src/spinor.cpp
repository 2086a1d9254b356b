#include "spinrsk/spinor.hpp"

#include <stdexcept>

namespace spinrsk {

SpinorBlock::SpinorBlock(Column left, Column right, const GradedAlphabet& a)
    : left_(std::move(left)), right_(std::move(right)) {
  if (left_.height() < right_.height())
    throw std::invalid_argument("spinor block: left column shorter than right");
  if (pair_normalize(left_, right_, a).b != 0)
    throw std::invalid_argument("spinor block: " + to_string(left_) + to_string(right_) + " is not of shape lambda(a,0,c)");
  ColumnPair cur{left_, right_};
  for (int k = 0; k < width(); ++k) cur = *crystal_E(cur.first, cur.second, a);
  lform_ = std::move(cur.first);
  rform_ = std::move(cur.second);
}

ColumnPair left_right_forms(const SpinorBlock& t) { return {t.left_form(), t.right_form()}; }

std::vector<int> SpinorTableau::widths() const {
  std::vector<int> out;
  for (int i = 1; i <= ell(); ++i) out.push_back(block(i).width());
  return out;
}

int SpinorTableau::size() const noexcept {
  int s = 0;
  for (const auto& b : blocks) s += b.size();
  return s;
}

ColumnTuple SpinorTableau::columns() const {
  ColumnTuple out;
  for (const auto& b : blocks) {
    out.cols.push_back(b.left());
    out.cols.push_back(b.right());
  }
  return out;
}

SpinorTableau blocks_from_columns(const ColumnTuple& u, const GradedAlphabet& a) {
  if (u.size() % 2 != 0) throw std::invalid_argument("an even number of columns is required");
  SpinorTableau t;
  for (int j = 0; j < u.size(); j += 2)
    t.blocks.emplace_back(u.cols[static_cast<std::size_t>(j)], u.cols[static_cast<std::size_t>(j) + 1], a);
  return t;
}

bool precedes(const SpinorBlock& t2, const SpinorBlock& t1, const GradedAlphabet& a) {
  if (t2.width() > t1.width()) return false;
  auto first = SkewTableau::bottom_aligned({t2.right_form(), t1.left()});
  auto second = SkewTableau::bottom_aligned({t2.right(), t1.left_form()}, {t2.width(), t1.width()});
  return is_semistandard(first, a) && is_semistandard(second, a);
}

bool is_spinor_tableau(const SpinorTableau& t, const Partition& lambda, int ell, const GradedAlphabet& a) {
  if (t.ell() != ell || lambda.length() > ell) return false;
  for (int i = 1; i <= ell; ++i)
    if (t.block(i).width() != lambda.part(i - 1)) return false;
  for (int i = 1; i < ell; ++i)
    if (!precedes(t.block(i + 1), t.block(i), a)) return false;
  return true;
}

RskPair phi_embedding(const SpinorTableau& t, const GradedAlphabet& a) { return rsk(t.columns(), a); }

bool k_weight_predicate(const SkewTableau& q, const Partition& lambda, int ell) {
  const int r = 2 * ell;
  if (lambda.length() > ell) return false;
  if (r == 0) return q.size() == 0;
  if (!q.is_straight() || !is_semistandard(q, GradedAlphabet::plain(r))) return false;
  std::vector<int> m(static_cast<std::size_t>(r) + 3, 0);  // m[1..r], zero beyond
  for (const auto& col : q.columns())
    for (Letter x : col) ++m[static_cast<std::size_t>(x.index)];
  auto lam = [&](int k) { return lambda.part(k - 1); };
  auto M = [&](int k) { return m[static_cast<std::size_t>(k)]; };
  for (int k = 1; k <= ell; ++k) {
    if (M(2 * k) - M(2 * k - 1) != lam(k)) return false;
    if (signature(q, 2 * k - 1) != std::pair{lam(k), 0}) return false;
  }
  for (int k = 1; k < ell; ++k) {
    const int gap = M(2 * k) - M(2 * k + 2);
    if (gap < 0) return false;
    if (signature(weyl_reflect(q, 2 * k + 1), 2 * k) != std::pair{0, gap}) return false;
    const int dl = lam(k) - lam(k + 1);
    auto sig = signature(weyl_reflect(q, 2 * k - 1), 2 * k);
    bool found = false;
    for (int p = 0; p <= std::min(dl, gap) && !found; ++p) found = sig == std::pair{dl - p, gap - p};
    if (!found) return false;
  }
  return true;
}

namespace {

void column_rec(const std::vector<Letter>& letters, const GradedAlphabet& a, int cap, std::size_t from,
                Column& cur, std::vector<Column>& out) {
  out.push_back(cur);
  if (cap >= 0 && cur.height() >= cap) return;
  for (std::size_t k = from; k < letters.size(); ++k) {
    Letter x = letters[k];
    cur.entries.push_back(x);
    // degree-1 letters may repeat down a column
    column_rec(letters, a, cap, x.degree() == 1 ? k : k + 1, cur, out);
    cur.entries.pop_back();
  }
}

}  // namespace

std::vector<Column> enumerate_columns(const GradedAlphabet& a, int cap) {
  if (cap < 0 && a.has_degree_one())
    throw std::invalid_argument("infinite-without-cap: degree-1 letters need a column height cap");
  std::vector<Column> out;
  Column cur;
  column_rec(a.letters(), a, cap, 0, cur, out);
  return out;
}

std::vector<SpinorBlock> enumerate_blocks(int width, const GradedAlphabet& a, int cap) {
  std::vector<SpinorBlock> out;
  auto cols = enumerate_columns(a, cap);
  for (const auto& l : cols) {
    if (l.height() < width) continue;
    for (const auto& r : cols) {
      if (r.height() != l.height() - width) continue;
      if (pair_normalize(l, r, a).b != 0) continue;
      out.emplace_back(l, r, a);
    }
  }
  return out;
}

std::vector<SpinorTableau> enumerate_spinor(const Partition& lambda, int ell, const GradedAlphabet& a, int cap) {
  if (lambda.length() > ell) return {};
  std::vector<std::vector<SpinorBlock>> pools;
  for (int i = 1; i <= ell; ++i) pools.push_back(enumerate_blocks(lambda.part(i - 1), a, cap));
  std::vector<SpinorTableau> out;
  // choose T_1, then T_2 < T_1, and so on
  std::vector<SpinorBlock> chosen;
  auto rec = [&](auto&& self, int i) -> void {
    if (i > ell) {
      std::vector<SpinorBlock> left_to_right(chosen.rbegin(), chosen.rend());
      out.emplace_back(std::move(left_to_right));
      return;
    }
    for (const auto& b : pools[static_cast<std::size_t>(i) - 1]) {
      if (i > 1 && !precedes(b, chosen.back(), a)) continue;
      chosen.push_back(b);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace spinrsk
