#include "spinrsk/characters.hpp"

#include <algorithm>
#include <stdexcept>

#include "spinrsk/oscillating.hpp"

namespace spinrsk {

namespace {

IdentityReport compare(std::string identity, std::vector<std::pair<std::string, std::string>> params,
                       const LaurentPoly& lhs, const LaurentPoly& rhs) {
  IdentityReport r;
  r.identity = std::move(identity);
  r.parameters = std::move(params);
  r.terms = lhs.terms().size();
  r.first_mismatch = first_difference(lhs, rhs);
  r.pass = !r.first_mismatch;
  if (r.first_mismatch) {
    r.lhs_coefficient = lhs.coefficient(*r.first_mismatch);
    r.rhs_coefficient = rhs.coefficient(*r.first_mismatch);
  }
  return r;
}

LaurentPoly capped(LaurentPoly p, int cap) { return cap >= 0 ? p.truncated(cap) : p; }
LaurentPoly zero(int cap) { return capped(LaurentPoly{}, cap); }
LaurentPoly one(int cap) { return capped(LaurentPoly::constant(1), cap); }

// Partitions with at most max_len parts and size at most d.
std::vector<Partition> partitions_up_to(int d, int max_len) {
  std::vector<Partition> out;
  for (int k = 0; k <= d; ++k)
    for (Partition& p : partitions_of(k, max_len)) out.push_back(std::move(p));
  return out;
}

}  // namespace

std::string x_var(Letter x) { return "x" + to_string(x); }
std::string z_var(int j) { return "z" + std::to_string(j); }

Monomial x_monomial(const ColumnTuple& t) {
  Monomial m;
  for (const Column& c : t.cols)
    for (Letter x : c) m = m * Monomial::var(x_var(x));
  return m;
}

LaurentPoly sp_character(const Partition& lambda, int ell, const std::string& prefix) {
  LaurentPoly out;
  for (const KingTableau& k : enumerate_king(lambda, ell)) {
    Monomial m;
    for (const Column& c : k.tableau().columns())
      for (Letter x : c) m = m * Monomial::var(prefix + std::to_string(x.index), x.band == Band::bar ? -1 : 1);
    out += LaurentPoly::monomial(m);
  }
  return out;
}

LaurentPoly spinor_character(const Partition& lambda, int ell, const GradedAlphabet& a, int cap) {
  LaurentPoly out = zero(cap);
  for (const SpinorTableau& t : enumerate_spinor(lambda, ell, a, cap)) out += LaurentPoly::monomial(x_monomial(t.columns()));
  return out * LaurentPoly::var(t_var, ell);
}

LaurentPoly schur(const Partition& mu, const GradedAlphabet& a, int cap) {
  LaurentPoly out = zero(cap);
  if (cap >= 0 && mu.size() > cap) return out;
  for (const SkewTableau& t : enumerate_sst(mu, a)) out += LaurentPoly::monomial(x_monomial(ColumnTuple(t.columns())));
  return out;
}

IdentityReport verify_cauchy(const GradedAlphabet& a, int ell, int cap) {
  if (ell < 1) throw std::invalid_argument("verify_cauchy: l must be positive");
  if (cap < 0 && a.has_degree_one())
    throw std::invalid_argument("verify_cauchy: cap too small to decide; degree-1 letters give an infinite series");
  LaurentPoly lhs = one(cap) * LaurentPoly::var(t_var, ell);
  for (int j = 1; j <= ell; ++j)
    for (Letter x : a.letters()) {
      const Monomial up = Monomial::var(x_var(x)) * Monomial::var(z_var(j));
      const Monomial down = Monomial::var(x_var(x)) * Monomial::var(z_var(j), -1);
      if (x.degree() == 0) {
        lhs *= (LaurentPoly::constant(1) + LaurentPoly::monomial(up)) * (LaurentPoly::constant(1) + LaurentPoly::monomial(down));
      } else {
        lhs *= LaurentPoly::geometric(up, cap) * LaurentPoly::geometric(down, cap);
      }
    }

  // every block of width a_i holds at least a_i letters
  const int bound = cap >= 0 ? cap : 2 * ell * a.size();
  LaurentPoly rhs = zero(cap);
  for (const Partition& lambda : partitions_up_to(bound, ell)) {
    LaurentPoly s = spinor_character(lambda, ell, a, cap);
    if (s.is_zero()) continue;
    rhs += s * sp_character(lambda, ell);
  }
  return compare("cauchy", {{"alphabet", a.name()}, {"ell", std::to_string(ell)}, {"cap", std::to_string(cap)}}, lhs, rhs);
}

IdentityReport verify_dual_spinor(int n, int ell) {
  if (n < 1 || ell < 1) throw std::invalid_argument("verify_dual_spinor: n and l must be positive");
  LaurentPoly lhs = LaurentPoly::constant(1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= ell; ++j) {
      const std::string xi = x_var(num(i)), zj = z_var(j);
      lhs *= LaurentPoly::var(xi) + LaurentPoly::var(xi, -1) + LaurentPoly::var(zj) + LaurentPoly::var(zj, -1);
    }
  LaurentPoly rhs;
  for (const Partition& lambda : partitions_in_box(ell, n))
    rhs += sp_character(rho_complement(lambda, ell, n), n, "x") * sp_character(lambda, ell);
  return compare("dual-spinor", {{"n", std::to_string(n)}, {"ell", std::to_string(ell)}}, lhs, rhs);
}

IdentityReport verify_littlewood(int n, int ell, int cap) {
  if (n < 1) throw std::invalid_argument("verify_littlewood: n must be positive");
  if (ell < n) throw std::invalid_argument("verify_littlewood: ell-less-than-n (the identity needs l >= n)");
  if (cap < 0) throw std::invalid_argument("verify_littlewood: a cap is required");
  LaurentPoly lhs = one(cap);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= ell; ++j) {
      const Monomial xi = Monomial::var(x_var(num(i)));
      lhs *= LaurentPoly::geometric(xi * Monomial::var(z_var(j)), cap) * LaurentPoly::geometric(xi * Monomial::var(z_var(j), -1), cap);
    }

  const auto xs = GradedAlphabet::plain(n);
  LaurentPoly rhs = zero(cap);
  for (const Partition& lambda : partitions_up_to(cap, n)) {
    LaurentPoly evens = zero(cap);
    for (const Partition& beta : partitions_up_to(cap - lambda.size(), n)) {
      const Partition cols = beta.conjugate();
      if (std::all_of(cols.parts().begin(), cols.parts().end(), [](int c) { return c % 2 == 0; })) evens += schur(beta, xs, cap);
    }
    rhs += sp_character(lambda, ell) * schur(lambda, xs, cap) * evens;
  }
  return compare("littlewood", {{"n", std::to_string(n)}, {"ell", std::to_string(ell)}, {"cap", std::to_string(cap)}}, lhs,
                 rhs);
}

}  // namespace spinrsk
