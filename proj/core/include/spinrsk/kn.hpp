#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spinrsk/spinor.hpp"

namespace spinrsk {

// Kashiwara-Nakashima tableaux of type C_n live over I_n.  Columns are
// straight lists top to bottom; a tableau is a SkewTableau whose columns sit
// at arbitrary tops (inner shape above them).

// Unbarred and barred parts of a column over I_n.
Column positive_part(const Column& c);
Column negative_part(const Column& c);
// Stack plus (over [n]) above minus (over [n-bar]).
Column join_column(const Column& plus, const Column& minus);

// u over [n-bar] -> the column over [n] holding k exactly when k-bar is absent.
Column complement(const Column& u, int n);
// u over [n] -> the column over [n-bar] holding k-bar exactly when k is absent.
Column bar_complement(const Column& u, int n);

// T^ad = (^R T)^c over ^L T, and T^ad* = (T^L)^c over T^R.
Column to_admissible(const SpinorBlock& t, int n);
Column to_coadmissible(const SpinorBlock& t, int n);
// Inverses; std::invalid_argument when c is not (co)admissible.
SpinorBlock from_admissible(const Column& c, int n);
SpinorBlock from_coadmissible(const Column& c, int n);

// N(z): letters x of c with x <= z or x >= z-bar.
int n_count(const Column& c, int z);
// Every pair (z, z-bar) of c has N(z) <= z.
bool is_admissible(const Column& c, int n);
// C^* for an admissible column.
Column coadmissible_of(const Column& c, int n);

// (lC, rC); std::invalid_argument for a non-admissible column.
ColumnPair split_column(const Column& c, int n);
// Each column replaced by its split pair, tops kept.
SkewTableau spl(const SkewTableau& t, int n);

// C2 < C1 when [rC2, lC1] (tops aligned) is semistandard.
bool column_precedes(const Column& c2, const Column& c1, int n);

// The sl_2 crystal on F_n through (C_-, (C_+)^c).
std::optional<Column> column_E(const Column& c, int n);
std::optional<Column> column_F(const Column& c, int n);
// (E^max C, epsilon(C)).
std::pair<Column, int> column_epsilon(const Column& c, int n);
int column_phi(const Column& c, int n);

// Row indexing used by the two-column condition of the definition.  Entries
// are counted from the bottom of their own column or of the whole diagram.
enum class KnRows { per_column, global };

// Straight shape, semistandard over I_n, both conditions of the definition.
bool is_kn(const SkewTableau& t, int n, KnRows rows = KnRows::global);
// Admissible columns with C_{i+1} < C_i.
bool is_kn_by_columns(const SkewTableau& t, int n);
// Skew case: semistandard, admissible columns and semistandard spl(t).
bool is_admissible_tableau(const SkewTableau& t, int n);

// Relation (5): removes the pair (z, z-bar) for the smallest z with N(z) > z.
// Throws std::invalid_argument unless w is a non-admissible column word whose
// proper factors are admissible.
Word plactic_reduce_column(const Word& w, int n);
// Applies the same removal until the column is admissible.
Column reduce_column(const Column& c, int n);

// Single applications of relations (1)-(5) to w, both directions of (1)-(4)
// and the forward direction of (5).
std::vector<Word> plactic_neighbors(const Word& w, int n);

struct PlacticMove {
  int relation;  // 1..5
  Word word;
};
// Same words, tagged with the relation that produced them.
std::vector<PlacticMove> plactic_moves(const Word& w, int n);

// sp_2n crystal on words, Kashiwara tensor order: epsilon is the count of
// free '-' letters, phi of free '+' letters.
std::pair<int, int> sp_signature(const Word& w, int i, int n);
std::optional<Word> sp_e(const Word& w, int i, int n);
std::optional<Word> sp_f(const Word& w, int i, int n);
bool is_highest_weight(const Word& w, int n);
// (m_1 - m_1bar, ..., m_n - m_nbar)
std::vector<int> sp_weight(const Word& w, int n);

// H_mu: column j is [1, ..., mu'_j].
SkewTableau highest_weight_kn(const Partition& mu);

// Straight tableau with the given column heights from its reading word.
SkewTableau tableau_from_reading(const Word& w, const std::vector<int>& heights);

SkewTableau kn_insert(Letter x, const SkewTableau& t, int n);
SkewTableau kn_P(const Word& w, int n);
// Shapes of P(x_1 ... x_i).
std::vector<Partition> kn_Q(const Word& w, int n);
// P(w) by walking to a highest weight word and back.
SkewTableau kn_P_by_crystal(const Word& w, int n);

// How the starting column is repaired when the slide leaves it
// non-admissible: removing pairs by relation (5), or E^max on F_n.
enum class ColumnRepair { plactic, crystal };

// Where the repaired starting column is placed: at its old top, or one row
// higher (the row where the slide began) whenever that is still admissible.
enum class RepairTop { keep, raise };

// One symplectic jeu de taquin into the inner corner above column col
// (0-based from the left).  std::invalid_argument when there is no such corner.
SkewTableau jdt_kn(const SkewTableau& t, int col, int n, ColumnRepair repair = ColumnRepair::plactic,
                   RepairTop place = RepairTop::keep);
// Slides into inner corners until the shape is straight.
SkewTableau rectify_kn(const SkewTableau& t, int n);

// T^ad = [T_l^ad, ..., T_1^ad] placed at the tops rho_{mu_1}(mu, l) (an
// empty mu gives a straight tableau).
SkewTableau spinor_to_kn(const SpinorTableau& t, const Partition& mu, int n);
// Inverse for straight shapes whose columns all have height >= 0.
SpinorTableau kn_to_spinor(const SkewTableau& t, int n);

}  // namespace spinrsk
