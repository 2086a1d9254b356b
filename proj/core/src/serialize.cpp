#include "spinrsk/serialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinrsk {

namespace {

template <class T, class F>
Json array_of(const std::vector<T>& xs, F f) {
  Json out = Json::array();
  for (const T& x : xs) out.push_back(f(x));
  return out;
}

const Json& require_array(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected a JSON array");
  return j;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<int> ints(const Json& j, const char* what) {
  std::vector<int> out;
  for (const Json& x : require_array(j, what)) {
    if (!x.is_number_integer()) throw std::invalid_argument(std::string(what) + ": expected integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

Json serialize(Letter x) {
  switch (x.band) {
    case Band::plain: return x.index;
    case Band::bar: return -x.index;
    case Band::prime: return std::to_string(x.index) + "'";
  }
  throw std::logic_error("serialize: unknown band");
}

Json serialize(const Column& c) { return array_of(c.entries, [](Letter x) { return serialize(x); }); }

Json serialize(const ColumnTuple& t) { return array_of(t.cols, [](const Column& c) { return serialize(c); }); }

Json serialize(const Partition& p) { return p.parts(); }

Json serialize(const SkewTableau& t) { return {{"columns", array_of(t.columns(), [](const Column& c) { return serialize(c); })}, {"tops", t.tops()}}; }

Json serialize(const SpinorBlock& b) { return {{"left", serialize(b.left())}, {"right", serialize(b.right())}}; }

Json serialize(const SpinorTableau& t) {
  return array_of(t.blocks, [](const SpinorBlock& b) { return serialize(b); });
}

Json serialize(const SkewSpinorTableau& t) { return {{"blocks", serialize(t.tableau())}, {"inner", serialize(t.inner())}}; }

Json serialize(const OscillatingTableau& q) {
  Json segs = Json::array();
  for (const auto& s : q.segments) segs.push_back(array_of(s, [](const Partition& p) { return serialize(p); }));
  return {{"n", q.n}, {"segments", segs}};
}

Json serialize(const OscClass& q) { return serialize(q.representative()); }

Json serialize(const KingTableau& k) {
  Json rows = Json::array();
  for (const auto& r : k.tableau().rows()) rows.push_back(array_of(r, [](Letter x) { return serialize(x); }));
  return {{"ell", k.ell()}, {"rows", rows}};
}

Json serialize(const SymplecticPair& r) { return {{"P", serialize(r.p)}, {"Q", serialize(r.q)}}; }

Json serialize(const SymplecticTrace& tr, int rank) {
  const auto split = osc_split(tr.q);
  const auto shown = [rank](const OscClass& c) { return serialize(c.at_rank(std::max(rank, c.n()))); };
  return {{"fmax", serialize(tr.fmax.blocks)},
          {"phi", tr.fmax.phi},
          {"skew", serialize(tr.skew)},
          {"P", serialize(tr.result.p)},
          {"Q_adm", shown(tr.q_adm)},
          {"epsilon", split.second},
          {"oscillating", shown(tr.q)},
          {"Q", serialize(tr.result.q)}};
}

Json serialize(const IdentityReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  Json out = {{"identity", r.identity}, {"parameters", params}, {"status", r.pass ? "pass" : "fail"}, {"terms", r.terms}};
  if (r.first_mismatch)
    out["first_mismatch"] = {{"monomial", r.first_mismatch->to_string()},
                             {"lhs", r.lhs_coefficient.str()},
                             {"rhs", r.rhs_coefficient.str()}};
  return out;
}

Letter letter_from_json(const Json& j) {
  if (j.is_number_integer()) {
    const int k = j.get<int>();
    if (k == 0) throw std::invalid_argument("letter 0 does not exist");
    return k > 0 ? num(k) : bar(-k);
  }
  if (j.is_string()) return parse_letter(j.get<std::string>());
  throw std::invalid_argument("letter: expected an integer or a string");
}

Column column_from_json(const Json& j) {
  Column c;
  for (const Json& x : require_array(j, "column")) c.entries.push_back(letter_from_json(x));
  return c;
}

ColumnTuple tuple_from_json(const Json& j) {
  ColumnTuple t;
  for (const Json& c : require_array(j, "tuple")) t.cols.push_back(column_from_json(c));
  return t;
}

Partition partition_from_json(const Json& j) { return Partition(ints(j, "partition")); }

SkewTableau skew_tableau_from_json(const Json& j) {
  std::vector<Column> cols;
  for (const Json& c : require_array(field(j, "columns"), "columns")) cols.push_back(column_from_json(c));
  return SkewTableau(std::move(cols), ints(field(j, "tops"), "tops"));
}

SpinorBlock block_from_json(const Json& j, const GradedAlphabet& a) {
  return SpinorBlock(column_from_json(field(j, "left")), column_from_json(field(j, "right")), a);
}

SpinorTableau spinor_from_json(const Json& j, const GradedAlphabet& a) {
  std::vector<SpinorBlock> blocks;
  for (const Json& b : require_array(j, "spinor tableau")) blocks.push_back(block_from_json(b, a));
  return SpinorTableau(std::move(blocks));
}

OscillatingTableau oscillating_from_json(const Json& j) {
  OscillatingTableau q;
  q.n = field(j, "n").get<int>();
  for (const Json& s : require_array(field(j, "segments"), "segments")) {
    std::vector<Partition> seg;
    for (const Json& p : require_array(s, "segment")) seg.push_back(partition_from_json(p));
    q.segments.push_back(std::move(seg));
  }
  return q;
}

KingTableau king_from_json(const Json& j) {
  std::vector<std::vector<Letter>> rows;
  for (const Json& r : require_array(field(j, "rows"), "rows")) {
    std::vector<Letter> row;
    for (const Json& x : require_array(r, "row")) row.push_back(letter_from_json(x));
    rows.push_back(std::move(row));
  }
  return KingTableau(SkewTableau::from_rows(rows), field(j, "ell").get<int>());
}

}  // namespace spinrsk
