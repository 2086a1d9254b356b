#include "spinrsk/symplectic_rsk.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinrsk {

namespace {

void require_pairs(const ColumnTuple& t, const GradedAlphabet& a) {
  if (t.size() == 0 || t.size() % 2 != 0) throw std::invalid_argument("expected a non-empty even number of columns");
  for (const Column& c : t.cols)
    if (!is_column(c, a)) throw std::invalid_argument("column " + to_string(c) + " is not semistandard over " + a.name());
}

// Rank large enough for every step of both directions.
int working_rank(int cells, int ell, int at_least) { return std::max(cells + ell, at_least); }

}  // namespace

FmaxPhi fmax_phi(const ColumnTuple& t, const GradedAlphabet& a) {
  require_pairs(t, a);
  const int ell = t.size() / 2;
  ColumnTuple out = t;
  FmaxPhi r;
  for (int i = 1; i <= ell; ++i) {
    ColumnPair cur{out.u(2 * i), out.u(2 * i - 1)};
    int phi = 0;
    while (auto next = crystal_F(cur.first, cur.second, a)) {
      cur = std::move(*next);
      ++phi;
    }
    out.u(2 * i) = std::move(cur.first);
    out.u(2 * i - 1) = std::move(cur.second);
    r.phi.push_back(phi);
  }
  r.blocks = blocks_from_columns(out, a);
  return r;
}

ColumnTuple fmax_phi_inverse(const SpinorTableau& blocks, const std::vector<int>& phi, const GradedAlphabet& a) {
  if (static_cast<int>(phi.size()) != blocks.ell()) throw std::invalid_argument("fmax_phi_inverse: wrong number of entries");
  ColumnTuple out = blocks.columns();
  for (int i = 1; i <= blocks.ell(); ++i) {
    const int k = phi[static_cast<std::size_t>(i - 1)];
    if (k < 0 || k > blocks.block(i).width())
      throw std::invalid_argument("fmax_phi_inverse: phi_" + std::to_string(i) + " outside [0, a_" + std::to_string(i) + "]");
    ColumnPair cur{out.u(2 * i), out.u(2 * i - 1)};
    for (int s = 0; s < k; ++s) cur = *crystal_E(cur.first, cur.second, a);
    out.u(2 * i) = std::move(cur.first);
    out.u(2 * i - 1) = std::move(cur.second);
  }
  return out;
}

SymplecticTrace symplectic_rsk_trace(const ColumnTuple& t, const GradedAlphabet& a) {
  SymplecticTrace tr;
  tr.fmax = fmax_phi(t, a);
  const SpinorTableau& blocks = tr.fmax.blocks;
  tr.skew = as_skew(blocks, a);
  const SpinorTableau p = p_tableau(tr.skew);

  const auto widths = blocks.widths();
  tr.n = working_rank(blocks.size(), blocks.ell(), *std::max_element(widths.begin(), widths.end()) + 1);
  const OscillatingTableau rec = recording(blocks, a, tr.n);
  const auto lambda = Partition(p.widths());
  if (!osc_validate(rec, lambda, blocks.ell(), tr.n))
    throw std::logic_error("symplectic_rsk: recording tableau does not have the shape of P");
  tr.q_adm = OscClass(rec);
  tr.q = osc_unsplit(tr.q_adm, tr.fmax.phi);
  tr.result = {p, osc_to_king(tr.q.representative())};
  return tr;
}

SymplecticPair symplectic_rsk(const ColumnTuple& t, const GradedAlphabet& a) { return symplectic_rsk_trace(t, a).result; }

ColumnTuple symplectic_rsk_inverse(const SpinorTableau& p, const KingTableau& q, const GradedAlphabet& a) {
  const int ell = p.ell();
  if (ell < 1) throw std::invalid_argument("symplectic_rsk_inverse: P has no blocks");
  const Partition lambda(p.widths());
  if (!is_spinor_tableau(p, lambda, ell, a)) throw std::invalid_argument("symplectic_rsk_inverse: P is not a spinor tableau");
  if (q.ell() != ell || q.shape() != lambda)
    throw std::invalid_argument("symplectic_rsk_inverse: shape of Q is not " + lambda.to_string());

  auto [adm, eps] = osc_split(OscClass(king_to_osc(q, std::max(1, lambda.part(0)))));
  const auto a_w = osc_weight(adm.representative());
  const int amax = *std::max_element(a_w.begin(), a_w.end());
  const RskPair kp = rsk(p.columns(), a);
  const int n = working_rank(p.size(), ell, std::max({amax + 1, adm.n(), kp.p.shape().length()}));
  const OscillatingTableau rec = adm.at_rank(n);

  // the highest weight word with recording rec spells its steps
  const std::vector<Column> steps = segment_columns(rec);
  Word w;
  for (const Column& c : steps) w.insert(w.end(), c.begin(), c.end());

  // walk P(V) up to its highest weight and replay the path downward on w
  Word pv = reading_word(spinor_to_kn(n_conjugate(p, a, n), Partition{}, n));
  std::vector<int> path;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 1; i <= n && !moved; ++i)
      if (auto up = sp_e(pv, i, n)) {
        pv = std::move(*up);
        path.push_back(i);
        moved = true;
      }
  }
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    auto down = sp_f(w, *it, n);
    if (!down) throw std::logic_error("symplectic_rsk_inverse: lowering path breaks on the recording word");
    w = std::move(*down);
  }

  std::vector<SpinorBlock> conj(static_cast<std::size_t>(ell));
  auto it = w.begin();
  for (int i = 1; i <= ell; ++i) {
    const auto h = static_cast<std::ptrdiff_t>(steps[static_cast<std::size_t>(i - 1)].height());
    conj[static_cast<std::size_t>(ell - i)] = from_admissible(Column(Word(it, it + h)), n);
    it += h;
  }
  const SpinorTableau conj_t(std::move(conj));
  const auto bars = GradedAlphabet::barred(n);
  const RskPair kc = rsk(conj_t.columns(), bars);
  if (kc.p != highest_barred_tableau(kp.p.shape(), n))
    throw std::invalid_argument("symplectic_rsk_inverse: Q does not match the recording data of P");
  const SpinorTableau blocks = blocks_from_columns(rsk_inverse(kp.p, kc.q, a, 2 * ell), a);
  return fmax_phi_inverse(blocks, eps, a);
}

}  // namespace spinrsk
