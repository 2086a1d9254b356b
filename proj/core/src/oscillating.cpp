#include "spinrsk/oscillating.hpp"

#include <algorithm>
#include <stdexcept>

#include "spinrsk/sliding.hpp"

namespace spinrsk {

namespace {

// The letter of the step p -> q, or nullopt when they do not differ by one box.
std::optional<Letter> step_letter(const Partition& p, const Partition& q) {
  const int len = std::max(p.length(), q.length());
  int row = -1, diff = 0;
  for (int r = 0; r < len; ++r) {
    const int d = q.part(r) - p.part(r);
    if (d == 0) continue;
    if (row >= 0 || (d != 1 && d != -1)) return std::nullopt;
    row = r;
    diff = d;
  }
  if (row < 0) return std::nullopt;
  return diff > 0 ? num(row + 1) : bar(row + 1);
}

Partition prepend(int i, const Partition& p) {
  std::vector<int> parts{i};
  parts.insert(parts.end(), p.parts().begin(), p.parts().end());
  return Partition(std::move(parts));
}

Partition strip(const Partition& p) {
  if (p.empty()) return p;
  return Partition(std::vector<int>(p.parts().begin() + 1, p.parts().end()));
}

bool strictly_increasing(const Column& c, const GradedAlphabet& alpha) {
  for (int k = 0; k < c.height(); ++k) {
    if (!alpha.contains(c[k])) return false;
    if (k > 0 && !alpha.less(c[k - 1], c[k])) return false;
  }
  return true;
}

Partition require_shape(const OscillatingTableau& q, const char* who) {
  auto lambda = osc_shape(q);
  if (!lambda || !osc_validate(q, *lambda, q.ell(), q.n))
    throw std::invalid_argument(std::string(who) + ": not a valid oscillating tableau");
  return *lambda;
}

}  // namespace

Partition OscillatingTableau::end() const {
  for (auto it = segments.rbegin(); it != segments.rend(); ++it)
    if (!it->empty()) return it->back();
  return {};
}

std::vector<Column> segment_columns(const OscillatingTableau& q) {
  std::vector<Column> out;
  Partition prev;
  for (const auto& seg : q.segments) {
    Column c;
    for (const Partition& p : seg) {
      auto x = step_letter(prev, p);
      if (!x) throw std::invalid_argument("oscillating tableau: " + prev.to_string() + " -> " + p.to_string() +
                                          " is not a one-box step");
      c.entries.push_back(*x);
      prev = p;
    }
    out.push_back(std::move(c));
  }
  return out;
}

OscillatingTableau from_columns(const std::vector<Column>& cols, int n) {
  OscillatingTableau q{{}, n};
  Partition cur;
  for (const Column& c : cols) {
    std::vector<Partition> seg;
    for (Letter x : c) {
      if (x.band == Band::prime || x.index < 1) throw std::invalid_argument("from_columns: letter outside I_n");
      if (x.band == Band::plain) {
        cur = cur.add_box(x.index - 1);
      } else {
        if (cur.part(x.index - 1) == 0) throw std::invalid_argument("from_columns: removal from an empty row");
        cur = cur.remove_box(x.index - 1);
      }
      seg.push_back(cur);
    }
    q.segments.push_back(std::move(seg));
  }
  return q;
}

std::optional<Partition> osc_shape(const OscillatingTableau& q) {
  const int ell = q.ell(), n = q.n;
  const Partition e = q.end().conjugate();
  if (e.length() > ell || e.part(0) > n) return std::nullopt;
  std::vector<int> lam;
  for (int i = 1; i <= ell; ++i) lam.push_back(n - e.part(ell - i));
  return Partition(std::move(lam));
}

bool osc_validate(const OscillatingTableau& q, const Partition& lambda, int ell, int n) {
  if (q.n != n || q.ell() != ell || ell < 1) return false;
  if (lambda.length() > ell || lambda.part(0) > n) return false;
  std::vector<Column> cols;
  try {
    cols = segment_columns(q);
  } catch (const std::invalid_argument&) {
    return false;
  }
  const auto alpha = GradedAlphabet::symplectic(n);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (!strictly_increasing(cols[i], alpha)) return false;
    for (const Partition& p : q.segments[i])
      if (p.length() > n) return false;
  }
  // the first step out of the empty partition always adds row 1
  return q.end() == rho_complement(lambda, ell, n);
}

OscillatingTableau sigma(const OscillatingTableau& q) {
  require_shape(q, "sigma");
  OscillatingTableau out{{}, q.n + 1};
  Partition prev;
  for (int i = 1; i <= q.ell(); ++i) {
    const auto& seg = q.segments[static_cast<std::size_t>(i - 1)];
    std::vector<Partition> hat{prepend(i, prev)};
    for (const Partition& p : seg) hat.push_back(prepend(i, p));
    if (!seg.empty()) prev = seg.back();
    out.segments.push_back(std::move(hat));
  }
  return out;
}

std::optional<OscillatingTableau> sigma_inverse(const OscillatingTableau& q) {
  auto lambda = osc_shape(q);
  if (!lambda || q.n < 2 || !osc_validate(q, *lambda, q.ell(), q.n)) return std::nullopt;
  OscillatingTableau out{{}, q.n - 1};
  Partition prev;
  for (int i = 1; i <= q.ell(); ++i) {
    const auto& seg = q.segments[static_cast<std::size_t>(i - 1)];
    if (seg.empty()) return std::nullopt;
    for (const Partition& p : seg)
      if (p.part(0) != i) return std::nullopt;
    if (strip(seg.front()) != prev) return std::nullopt;
    std::vector<Partition> s;
    for (auto it = seg.begin() + 1; it != seg.end(); ++it) s.push_back(strip(*it));
    prev = strip(seg.back());
    out.segments.push_back(std::move(s));
  }
  if (!osc_validate(out, *lambda, out.ell(), out.n)) return std::nullopt;
  return out;
}

std::vector<int> osc_epsilon(const OscillatingTableau& q) {
  std::vector<int> out;
  for (const Column& c : segment_columns(q)) out.push_back(column_epsilon(c, q.n).second);
  return out;
}

std::vector<int> osc_weight(const OscillatingTableau& q) {
  std::vector<int> out;
  for (const Column& c : segment_columns(q)) out.push_back(q.n - c.height() + 2 * column_epsilon(c, q.n).second);
  return out;
}

OscClass::OscClass(const OscillatingTableau& q) : rep_(q), lambda_(require_shape(q, "OscClass")) {
  while (auto down = sigma_inverse(rep_)) rep_ = std::move(*down);
}

OscillatingTableau OscClass::at_rank(int m) const {
  if (m < rep_.n) throw std::invalid_argument("OscClass::at_rank: rank below the least representative");
  OscillatingTableau out = rep_;
  while (out.n < m) out = sigma(out);
  return out;
}

bool is_admissible_osc(const OscClass& q) {
  const auto eps = osc_epsilon(q.representative());
  return std::all_of(eps.begin(), eps.end(), [](int e) { return e == 0; });
}

std::pair<OscClass, std::vector<int>> osc_split(const OscClass& q) {
  const OscillatingTableau& rep = q.representative();
  std::vector<Column> cols;
  std::vector<int> eps;
  for (const Column& c : segment_columns(rep)) {
    auto [top, e] = column_epsilon(c, rep.n);
    cols.push_back(std::move(top));
    eps.push_back(e);
  }
  return {OscClass(from_columns(cols, rep.n)), std::move(eps)};
}

OscClass osc_unsplit(const OscClass& q, const std::vector<int>& epsilon) {
  if (static_cast<int>(epsilon.size()) != q.ell()) throw std::invalid_argument("osc_unsplit: wrong number of entries");
  if (!is_admissible_osc(q)) throw std::invalid_argument("osc_unsplit: class is not admissible");
  const OscillatingTableau& rep = q.representative();
  const auto a = osc_weight(rep);
  std::vector<Column> cols = segment_columns(rep);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (epsilon[i] < 0 || epsilon[i] > a[i])
      throw std::invalid_argument("osc_unsplit: epsilon_" + std::to_string(i + 1) + " outside [0, " +
                                  std::to_string(a[i]) + "]");
    for (int k = 0; k < epsilon[i]; ++k) {
      auto next = column_F(cols[i], rep.n);
      if (!next) throw std::logic_error("osc_unsplit: F returned zero below phi");
      cols[i] = std::move(*next);
    }
  }
  return OscClass(from_columns(cols, rep.n));
}

bool is_king(const SkewTableau& k, const Partition& lambda, int ell) {
  if (ell < 1 || lambda.length() > ell || !k.is_straight() || k.shape() != lambda) return false;
  const auto alpha = GradedAlphabet::king(ell);
  for (const Column& c : k.columns())
    for (Letter x : c)
      if (!alpha.contains(x)) return false;
  if (!is_semistandard(k, alpha)) return false;
  const auto rows = k.rows();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (Letter x : rows[r])
      if (x.index < static_cast<int>(r) + 1) return false;
  return true;
}

KingTableau::KingTableau(SkewTableau t, int ell) : t_(std::move(t)), ell_(ell) {
  if (!t_.is_straight() || !is_king(t_, t_.shape(), ell_))
    throw std::invalid_argument("not a King tableau for l = " + std::to_string(ell));
}

std::vector<KingTableau> enumerate_king(const Partition& lambda, int ell) {
  std::vector<KingTableau> out;
  if (ell < 1 || lambda.length() > ell) return out;
  for (SkewTableau& t : enumerate_sst(lambda, GradedAlphabet::king(ell)))
    if (is_king(t, lambda, ell)) out.emplace_back(std::move(t), ell);
  return out;
}

OscillatingTableau king_to_osc(const KingTableau& k, int n) {
  const Partition lambda = k.shape();
  if (lambda.part(0) > n) throw std::invalid_argument("king_to_osc: shape " + lambda.to_string() + " exceeds n");
  const SkewTableau& t = k.tableau();
  auto has = [&](int j, Letter x) {
    const int c = n - j;  // column numbered j
    if (c >= t.width()) return false;
    const Column& col = t.column(c);
    return std::find(col.begin(), col.end(), x) != col.end();
  };
  std::vector<Column> cols;
  for (int i = 1; i <= k.ell(); ++i) {
    Column u;
    for (int j = 1; j <= n; ++j)
      if (!has(j, num(i))) u.entries.push_back(num(j));
    for (int j = n; j >= 1; --j)
      if (has(j, bar(i))) u.entries.push_back(bar(j));
    cols.push_back(std::move(u));
  }
  OscillatingTableau q = from_columns(cols, n);
  if (!osc_validate(q, lambda, k.ell(), n)) throw std::logic_error("king_to_osc: image is not an oscillating tableau");
  return q;
}

KingTableau osc_to_king(const OscillatingTableau& q) {
  const int n = q.n;
  require_shape(q, "osc_to_king");
  std::vector<Column> u = segment_columns(q);
  std::vector<Column> cols;
  for (int j = n; j >= 1; --j) {
    Column c;
    for (int i = 1; i <= q.ell(); ++i) {
      const Column& ui = u[static_cast<std::size_t>(i - 1)];
      if (std::find(ui.begin(), ui.end(), num(j)) == ui.end()) c.entries.push_back(num(i));
      if (std::find(ui.begin(), ui.end(), bar(j)) != ui.end()) c.entries.push_back(bar(i));
    }
    cols.push_back(std::move(c));
  }
  while (!cols.empty() && cols.back().empty()) cols.pop_back();
  const std::size_t w = cols.size();
  try {
    return KingTableau(SkewTableau(std::move(cols), std::vector<int>(w, 0)), q.ell());
  } catch (const std::invalid_argument& e) {
    throw std::logic_error(std::string("osc_to_king: ") + e.what());
  }
}

OscillatingTableau recording(const SpinorTableau& t, const GradedAlphabet& a, int n) {
  return OscillatingTableau{recording_shapes(t, a, n), n};
}

}  // namespace spinrsk
