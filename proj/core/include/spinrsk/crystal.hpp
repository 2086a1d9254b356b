#pragma once

#include <optional>
#include <utility>

#include "spinrsk/tableau.hpp"

namespace spinrsk {

// Shape lambda(a,b,c) = (2^{b+c}, 1^a) / (1^b): the left column occupies rows
// b .. b+a+c-1 and the right column rows 0 .. b+c-1.
struct TwoColumnConfig {
  Column left;
  Column right;
  int a = 0;
  int b = 0;
  int c = 0;

  SkewTableau tableau() const;
  friend bool operator==(const TwoColumnConfig&, const TwoColumnConfig&) = default;
};

// The placement of (u, v) with the largest semistandard overlap.
TwoColumnConfig pair_normalize(const Column& u, const Column& v, const GradedAlphabet& a);

// Same, found by trying every overlap; used to cross-check pair_normalize.
TwoColumnConfig pair_normalize_scan(const Column& u, const Column& v, const GradedAlphabet& a);

using ColumnPair = std::pair<Column, Column>;

// One jeu de taquin slide moving a cell from the left column to the right (E)
// or back (F).  nullopt is the crystal zero.
std::optional<ColumnPair> crystal_E(const Column& u, const Column& v, const GradedAlphabet& a);
std::optional<ColumnPair> crystal_F(const Column& u, const Column& v, const GradedAlphabet& a);

// epsilon = a and phi = b of the normalized configuration.
int pair_epsilon(const Column& u, const Column& v, const GradedAlphabet& a);
int pair_phi(const Column& u, const Column& v, const GradedAlphabet& a);

// E_i, F_i act on (U_{i+1}, U_i).  1 <= i < r, else std::out_of_range.
std::optional<ColumnTuple> crystal_Ei(const ColumnTuple& t, int i, const GradedAlphabet& a);
std::optional<ColumnTuple> crystal_Fi(const ColumnTuple& t, int i, const GradedAlphabet& a);

// Same operators through the bracketing rule on the biword encoding.
std::optional<ColumnTuple> biword_Ei(const ColumnTuple& t, int i, const GradedAlphabet& a);
std::optional<ColumnTuple> biword_Fi(const ColumnTuple& t, int i, const GradedAlphabet& a);
std::pair<int, int> biword_signature(const ColumnTuple& t, int i, const GradedAlphabet& a);

// The sl_r crystal on [r]-semistandard tableaux, read with reading_word.
std::pair<int, int> signature(const SkewTableau& q, int i);
std::optional<SkewTableau> crystal_e(const SkewTableau& q, int i);
std::optional<SkewTableau> crystal_f(const SkewTableau& q, int i);
SkewTableau weyl_reflect(const SkewTableau& q, int i);

}  // namespace spinrsk
