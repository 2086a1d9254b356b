#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinrsk/laurent.hpp"
#include "spinrsk/spinor.hpp"

namespace spinrsk {

// Variable names: "x" + letter ("x1", "x-2", "x1'"), "z" + j and "t".
std::string x_var(Letter x);
std::string z_var(int j);
inline const std::string t_var = "t";

// x^T for every letter of every column.
Monomial x_monomial(const ColumnTuple& t);

// sum over K(lambda, l) of prod_i v_i^{m_i - m_i-bar}, v = prefix + i.
LaurentPoly sp_character(const Partition& lambda, int ell, const std::string& prefix = "z");

// t^l sum over T_A(lambda, l) with column heights <= cap of x^T.  With
// degree-1 letters this is the series truncated to x-degree cap.
LaurentPoly spinor_character(const Partition& lambda, int ell, const GradedAlphabet& a, int cap = -1);

// s_mu(x_A) from SST_A(mu); zero when |mu| > cap >= 0.
LaurentPoly schur(const Partition& mu, const GradedAlphabet& a, int cap = -1);

struct IdentityReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> parameters;
  bool pass = false;
  std::optional<Monomial> first_mismatch;
  Integer lhs_coefficient = 0;  // at first_mismatch
  Integer rhs_coefficient = 0;
  std::size_t terms = 0;  // of the left side
};

// t^l prod_j prod_{a in A_0}(1 + x_a z_j)(1 + x_a/z_j) / prod_{a in A_1}(1 - x_a z_j)(1 - x_a/z_j)
// against sum_lambda S_(lambda,l)(x_A) sp_lambda(z).  cap < 0 means exact,
// allowed only without degree-1 letters.
IdentityReport verify_cauchy(const GradedAlphabet& a, int ell, int cap = -1);

// prod_i prod_j (x_i + 1/x_i + z_j + 1/z_j) = sum_{lambda in (n^l)} sp_{rho_n(lambda,l)}(x) sp_lambda(z).
IdentityReport verify_dual_spinor(int n, int ell);

// prod_i prod_j 1/((1 - x_i z_j)(1 - x_i/z_j)) against
// sum_{l(lambda) <= n} sp_lambda(z) s_lambda(x) sum_{beta' even} s_beta(x), to
// x-degree cap.  std::invalid_argument when ell < n.
IdentityReport verify_littlewood(int n, int ell, int cap);

}  // namespace spinrsk
