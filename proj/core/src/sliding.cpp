#include "spinrsk/sliding.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinrsk {

namespace {

bool pair_admissible(const SpinorBlock& t2, const SpinorBlock& t1, int mu2, int mu1, const GradedAlphabet& a) {
  const int lam2 = mu2 + t2.width(), lam1 = mu1 + t1.width();
  auto first = SkewTableau::bottom_aligned({t2.right_form(), t1.left()}, {mu2, mu1});
  auto second = SkewTableau::bottom_aligned({t2.right(), t1.left_form()}, {lam2, lam1});
  return is_semistandard(first, a) && is_semistandard(second, a);
}

ColumnTuple apply(ColumnTuple u, bool raise, int i, int times, const GradedAlphabet& a) {
  for (int k = 0; k < times; ++k) {
    auto next = raise ? crystal_Ei(u, i, a) : crystal_Fi(u, i, a);
    if (!next) throw std::logic_error("jdt_spin_pair: a crystal operator returned zero");
    u = std::move(*next);
  }
  return u;
}

SkewTableau rsk_p(const SpinorTableau& t, const GradedAlphabet& a) { return rsk(t.columns(), a).p; }

SpinorTableau pad_blocks(const SkewTableau& kn, int ell, int n) {
  if (kn.width() > ell) throw std::logic_error("p_tableau_by_kn: KN tableau has more than l columns");
  std::vector<SpinorBlock> blocks;
  for (const Column& c : kn.columns()) blocks.push_back(from_admissible(c, n));
  while (static_cast<int>(blocks.size()) < ell) blocks.push_back(from_admissible(Column{}, n));
  return SpinorTableau(std::move(blocks));
}

// Pulls a tuple over [n-bar] back to a: same recording tableau, P of the
// original.
SpinorTableau pull_back(const SpinorTableau& conj, const SkewTableau& p, const GradedAlphabet& a, int n) {
  const auto bars = GradedAlphabet::barred(n);
  RskPair k = rsk(conj.columns(), bars);
  if (k.p != highest_barred_tableau(p.shape(), n))
    throw std::logic_error("conjugate tuple left its highest weight component");
  return blocks_from_columns(rsk_inverse(p, k.q, a, 2 * conj.ell()), a);
}

}  // namespace

bool is_admissible_skew(const SpinorTableau& t, const Partition& mu, const GradedAlphabet& a) {
  const int ell = t.ell();
  if (mu.length() > ell) return false;
  for (int i = 1; i < ell; ++i)
    if (!pair_admissible(t.block(i + 1), t.block(i), mu.part(i), mu.part(i - 1), a)) return false;
  return true;
}

SkewSpinorTableau::SkewSpinorTableau(SpinorTableau t, Partition mu, GradedAlphabet a)
    : t_(std::move(t)), mu_(std::move(mu)), a_(std::move(a)) {
  if (!is_admissible_skew(t_, mu_, a_))
    throw std::invalid_argument("tuple is not admissible at inner shape " + mu_.to_string());
}

SkewSpinorTableau::SkewSpinorTableau(SpinorTableau t, GradedAlphabet a)
    : SkewSpinorTableau(std::move(t), Partition{}, std::move(a)) {}

Partition SkewSpinorTableau::outer() const {
  std::vector<int> lam;
  for (int i = 1; i <= ell(); ++i) lam.push_back(mu_.part(i - 1) + t_.block(i).width());
  return Partition(std::move(lam));
}

std::vector<int> SkewSpinorTableau::inner_corners() const {
  std::vector<int> out;
  for (int i = 1; i < ell(); ++i)
    if (mu_.part(i - 1) > mu_.part(i)) out.push_back(i);
  return out;
}

int skew_distance(const SpinorBlock& t1, const SpinorBlock& t2, const GradedAlphabet& a) {
  // past this offset the two arrangements no longer share a row
  const int bound = t2.size() + t1.size() + t2.width() + 1;
  for (int d = 0; d <= bound; ++d)
    if (pair_admissible(t2, t1, 0, d, a)) return d;
  throw std::logic_error("skew_distance: no admissible offset");
}

int skew_distance_kn(const SpinorBlock& t1, const SpinorBlock& t2, int n) {
  const Column c2 = to_admissible(t2, n), c1 = to_admissible(t1, n);
  const int bound = c1.height() + c2.height() + 1;
  for (int top = 0; top <= bound; ++top)
    if (is_admissible_tableau(SkewTableau({c2, c1}, {top, 0}), n)) return top;
  throw std::logic_error("skew_distance_kn: no admissible offset");
}

SkewSpinorTableau as_skew(const SpinorTableau& t, const GradedAlphabet& a) {
  const int ell = t.ell();
  std::vector<int> mu(static_cast<std::size_t>(ell), 0);
  for (int i = ell - 1; i >= 1; --i)
    mu[static_cast<std::size_t>(i - 1)] = mu[static_cast<std::size_t>(i)] + skew_distance(t.block(i), t.block(i + 1), a);
  return SkewSpinorTableau(t, Partition(std::move(mu)), a);
}

int default_rank(const SpinorTableau& t) { return t.size() + t.ell(); }

SpinorTableau n_conjugate(const SpinorTableau& t, const GradedAlphabet& a, int n) {
  RskPair k = rsk(t.columns(), a);
  const Partition nu = k.p.shape();
  if (n < 1 || n < nu.length())
    throw std::invalid_argument("n-conjugate needs n >= " + std::to_string(std::max(1, nu.length())));
  const auto bars = GradedAlphabet::barred(n);
  return blocks_from_columns(rsk_inverse(highest_barred_tableau(nu, n), k.q, bars, 2 * t.ell()), bars);
}

PairSlide jdt_spin_pair(const SpinorBlock& t2, const SpinorBlock& t1, const GradedAlphabet& a) {
  const int d = skew_distance(t1, t2, a);
  if (d == 0) throw std::invalid_argument("jdt_spin_pair: the blocks are already in position");
  const int a2 = t2.width(), a1 = t1.width();
  const ColumnTuple u({t2.left(), t2.right(), t1.left(), t1.right()});
  const bool first_ok = is_semistandard(SkewTableau::bottom_aligned({t2.right_form(), t1.left()}, {0, d - 1}), a);

  PairSlide out;
  ColumnTuple v;
  if (!first_ok) {
    out.kind = 1;
    v = apply(apply(u, true, 3, a2, a), true, 2, 1, a);
    out.epsilon = pair_epsilon(v.u(4), v.u(3), a);
    if (out.epsilon > 1 || (out.epsilon == 0 && a2 == 0))
      throw std::logic_error("jdt_spin_pair: unexpected epsilon_3 in Case 1");
    v = apply(v, false, 3, a2 - 1 + out.epsilon, a);
  } else {
    out.kind = 2;
    v = apply(apply(apply(u, true, 1, a1, a), false, 2, 1, a), false, 1, a1 + 1, a);
  }
  SpinorTableau r = blocks_from_columns(v, a);
  out.t2 = r.block(2);
  out.t1 = r.block(1);
  if (skew_distance(out.t1, out.t2, a) > d - 1) throw std::logic_error("jdt_spin_pair: distance did not drop");
  return out;
}

SkewSpinorTableau jdt_spin(const SkewSpinorTableau& t, int i, std::optional<int> n) {
  const auto corners = t.inner_corners();
  if (std::find(corners.begin(), corners.end(), i) == corners.end())
    throw std::invalid_argument("jdt_spin: no inner corner in row " + std::to_string(i));
  const int ell = t.ell();
  const int rank = n.value_or(default_rank(t.tableau()));
  const GradedAlphabet& a = t.alphabet();

  SpinorTableau conj = n_conjugate(t.tableau(), a, rank);
  SkewTableau kn = jdt_kn(spinor_to_kn(conj, t.inner(), rank), ell - i - 1, rank, ColumnRepair::plactic, RepairTop::raise);

  std::vector<SpinorBlock> blocks;
  for (const Column& c : kn.columns()) blocks.push_back(from_admissible(c, rank));
  SpinorTableau moved = pull_back(SpinorTableau(std::move(blocks)), rsk_p(t.tableau(), a), a, rank);

  // tops are mu_1 - mu_i; keep mu_l
  std::vector<int> mu;
  const int base = t.inner().part(ell - 1) + kn.top(0);
  for (int k = 1; k <= ell; ++k) mu.push_back(base - kn.top(ell - k));
  try {
    return SkewSpinorTableau(std::move(moved), Partition(std::move(mu)), a);
  } catch (const std::invalid_argument& e) {
    throw std::logic_error(std::string("jdt_spin: slide left an inadmissible tuple: ") + e.what());
  }
}

SpinorTableau p_tableau(const SkewSpinorTableau& t, const CornerChooser& choose) {
  // every slide lowers a KN top or removes two KN cells
  const int rank = default_rank(t.tableau());
  long budget = 1 + static_cast<long>(t.ell()) * rank / 2;
  for (int i = 1; i <= t.ell(); ++i) budget += t.inner().part(0) - t.inner().part(i - 1);
  SkewSpinorTableau cur = t;
  for (long step = 0;; ++step) {
    const auto corners = cur.inner_corners();
    if (corners.empty()) return cur.tableau();
    if (step == budget) throw std::logic_error("p_tableau: step budget exhausted");
    const int i = choose ? choose(corners) : corners.front();
    cur = jdt_spin(cur, i, rank);
  }
}

SpinorTableau p_tableau_by_kn(const SkewSpinorTableau& t, std::optional<int> n) {
  const int rank = n.value_or(default_rank(t.tableau()));
  const GradedAlphabet& a = t.alphabet();
  SpinorTableau conj = n_conjugate(t.tableau(), a, rank);
  SkewTableau p = kn_P(reading_word(spinor_to_kn(conj, t.inner(), rank)), rank);
  return pull_back(pad_blocks(p, t.ell(), rank), rsk_p(t.tableau(), a), a, rank);
}

std::vector<std::vector<Partition>> recording_shapes(const SpinorTableau& t, const GradedAlphabet& a, int n) {
  SpinorTableau conj = n_conjugate(t, a, n);
  Word w;
  std::vector<int> lengths;
  for (int i = 1; i <= t.ell(); ++i) {
    Column c = to_admissible(conj.block(i), n);
    w.insert(w.end(), c.begin(), c.end());
    lengths.push_back(c.height());
  }
  std::vector<Partition> shapes = kn_Q(w, n);
  std::vector<std::vector<Partition>> out;
  auto it = shapes.begin();
  for (int len : lengths) {
    out.emplace_back(it, it + len);
    it += len;
  }
  return out;
}

}  // namespace spinrsk
