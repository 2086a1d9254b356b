#pragma once

#include <nlohmann/json.hpp>

#include "spinrsk/characters.hpp"
#include "spinrsk/symplectic_rsk.hpp"

namespace spinrsk {

using Json = nlohmann::json;

// Canonical JSON.  Plain and barred letters are integers (k, -k), primed
// letters the string "k'".  Columns are arrays top to bottom; tuples and
// spinor tableaux list their columns and blocks left to right.
Json serialize(Letter x);
Json serialize(const Column& c);
Json serialize(const ColumnTuple& t);
Json serialize(const Partition& p);
Json serialize(const SkewTableau& t);  // {"columns", "tops"}
Json serialize(const SpinorBlock& b);  // {"left", "right"}
Json serialize(const SpinorTableau& t);
Json serialize(const SkewSpinorTableau& t);  // {"blocks", "inner"}
Json serialize(const OscillatingTableau& q);  // {"n", "segments"}
Json serialize(const OscClass& q);
Json serialize(const KingTableau& k);  // {"ell", "rows"}
Json serialize(const SymplecticPair& r);  // {"P", "Q"}
// Oscillating classes are shown at rank max(rank, least rank).
Json serialize(const SymplecticTrace& tr, int rank = 0);
Json serialize(const IdentityReport& r);  // {identity, parameters, status, first_mismatch?}

// Inverses; std::invalid_argument on malformed input.
Letter letter_from_json(const Json& j);
Column column_from_json(const Json& j);
ColumnTuple tuple_from_json(const Json& j);
Partition partition_from_json(const Json& j);
SkewTableau skew_tableau_from_json(const Json& j);
SpinorBlock block_from_json(const Json& j, const GradedAlphabet& a);
SpinorTableau spinor_from_json(const Json& j, const GradedAlphabet& a);
OscillatingTableau oscillating_from_json(const Json& j);
KingTableau king_from_json(const Json& j);

}  // namespace spinrsk
