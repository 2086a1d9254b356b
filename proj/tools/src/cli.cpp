#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "spinrsk/serialize.hpp"

namespace spinrsk::cli {

namespace {

struct Options {
  std::string alphabet;
  std::string format = "json";
  std::string input = "-";
  int cap = -1;
  bool trace = false;
};

// Thrown for bad input data, reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_input(const Options& o, std::istream& in) {
  try {
    if (o.input == "-") return Json::parse(in);
    std::ifstream f(o.input);
    if (!f) throw UsageError("cannot open " + o.input);
    return Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("parse error: ") + e.what());
  }
}

GradedAlphabet alphabet_of(const Options& o, const char* fallback = nullptr) {
  if (o.alphabet.empty()) {
    if (!fallback) throw UsageError("--alphabet is required");
    return GradedAlphabet::parse(fallback);
  }
  return GradedAlphabet::parse(o.alphabet);
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  try {
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) out.push_back(std::stoi(item));
  } catch (const std::logic_error&) {
    throw UsageError("expected comma separated integers: " + text);
  }
  return out;
}

Partition parse_partition(const std::string& text) { return Partition(parse_ints(text)); }

std::string text_of(const SpinorTableau& t) {
  std::string out;
  for (const SpinorBlock& b : t.blocks) out += (out.empty() ? "(" : " (") + to_string(b.left()) + to_string(b.right()) + ")";
  return out.empty() ? "()" : out;
}

std::string text_of(const KingTableau& k) {
  std::string out;
  for (const auto& r : k.tableau().rows()) out += "(" + to_string(Word(r.begin(), r.end())) + ")";
  return out.empty() ? "()" : out;
}

void emit(std::ostream& out, const Options& o, const Json& j, const std::function<std::string()>& text = {}) {
  if (o.format == "text" && text)
    out << text() << '\n';
  else
    out << j.dump(2) << '\n';
}

SkewSpinorTableau skew_from_json(const Json& j, const GradedAlphabet& a) {
  if (j.is_array()) return as_skew(spinor_from_json(j, a), a);
  SpinorTableau t = spinor_from_json(j.at("blocks"), a);
  if (!j.contains("inner")) return as_skew(t, a);
  return SkewSpinorTableau(std::move(t), partition_from_json(j.at("inner")), a);
}

int cmd_rsk(const Options& o, bool inverse, int rank, std::istream& in, std::ostream& out) {
  const GradedAlphabet a = alphabet_of(o);
  const Json j = read_input(o, in);
  if (inverse) {
    const SpinorTableau p = spinor_from_json(j.at("P"), a);
    const Json& qj = j.at("Q");
    if (p.ell() == 0 && qj.at("ell").get<int>() == 0) {
      emit(out, o, Json::array());
      return ok;
    }
    const ColumnTuple t = symplectic_rsk_inverse(p, king_from_json(qj), a);
    emit(out, o, serialize(t), [&] {
      std::string s;
      for (const Column& c : t.cols) s += to_string(c);
      return s;
    });
    return ok;
  }
  const ColumnTuple t = tuple_from_json(j);
  if (t.size() == 0) {
    emit(out, o, Json{{"P", Json::array()}, {"Q", {{"ell", 0}, {"rows", Json::array()}}}}, [] { return "P = ()\nQ = ()"; });
    return ok;
  }
  const SymplecticTrace tr = symplectic_rsk_trace(t, a);
  const Json body = o.trace ? serialize(tr, rank) : serialize(tr.result);
  emit(out, o, body, [&] {
    std::string s;
    if (o.trace) {
      s += "F^max = " + text_of(tr.fmax.blocks) + "\nphi = " + Json(tr.fmax.phi).dump() + "\n";
      s += "inner = " + tr.skew.inner().to_string() + "\n";
      s += "Q_o = " + serialize(tr.q_adm.at_rank(std::max(rank, tr.q_adm.n()))).dump() + "\n";
    }
    return s + "P = " + text_of(tr.result.p) + "\nQ = " + text_of(tr.result.q);
  });
  return ok;
}

int cmd_jdt(const Options& o, int corner, std::optional<int> rank, bool kn, const std::string& repair, std::istream& in,
            std::ostream& out) {
  const Json j = read_input(o, in);
  if (kn) {
    if (!rank) throw UsageError("jdt --kn needs -n");
    const ColumnRepair r = repair == "crystal" ? ColumnRepair::crystal : ColumnRepair::plactic;
    const SkewTableau t = jdt_kn(skew_tableau_from_json(j), corner, *rank, r);
    emit(out, o, serialize(t), [&] { return to_string(t); });
    return ok;
  }
  const GradedAlphabet a = alphabet_of(o);
  const SkewSpinorTableau t = jdt_spin(skew_from_json(j, a), corner, rank);
  emit(out, o, serialize(t), [&] { return text_of(t.tableau()) + " at " + t.inner().to_string(); });
  return ok;
}

int cmd_p_tableau(const Options& o, bool by_kn, const std::vector<int>& corners, std::istream& in, std::ostream& out) {
  const GradedAlphabet a = alphabet_of(o);
  const SkewSpinorTableau t = skew_from_json(read_input(o, in), a);
  if (o.trace) {
    Json chain = Json::array({serialize(t)});
    SkewSpinorTableau cur = t;
    const int rank = default_rank(t.tableau());
    for (std::size_t k = 0; !cur.is_straight(); ++k) {
      const std::vector<int> avail = cur.inner_corners();
      const int c = k < corners.size() ? corners[k] : avail.front();
      if (std::find(avail.begin(), avail.end(), c) == avail.end())
        throw UsageError("corner " + std::to_string(c) + " is not an inner corner");
      cur = jdt_spin(cur, c, rank);
      Json step = serialize(cur);
      step["corner"] = c;
      chain.push_back(step);
    }
    emit(out, o, chain);
    return ok;
  }
  const SpinorTableau p = by_kn ? p_tableau_by_kn(t) : p_tableau(t);
  emit(out, o, serialize(p), [&] { return text_of(p); });
  return ok;
}

int cmd_conjugate(const Options& o, int n, std::istream& in, std::ostream& out) {
  const GradedAlphabet a = alphabet_of(o);
  const SpinorTableau c = n_conjugate(spinor_from_json(read_input(o, in), a), a, n);
  emit(out, o, serialize(c), [&] { return text_of(c); });
  return ok;
}

int cmd_kn_insert(const Options& o, int n, std::istream& in, std::ostream& out) {
  Word w;
  for (const Json& x : read_input(o, in)) w.push_back(letter_from_json(x));
  const SkewTableau p = kn_P(w, n);
  Json shapes = Json::array();
  for (const Partition& s : kn_Q(w, n)) shapes.push_back(serialize(s));
  emit(out, o, {{"P", serialize(p)}, {"Q", shapes}}, [&] { return to_string(p); });
  return ok;
}

int cmd_kappa(const Options& o, std::istream& in, std::ostream& out) {
  const GradedAlphabet a = alphabet_of(o);
  const RskPair r = rsk(tuple_from_json(read_input(o, in)), a);
  emit(out, o, {{"P", serialize(r.p)}, {"Q", serialize(r.q)}}, [&] { return to_string(r.p) + "\n" + to_string(r.q); });
  return ok;
}

int cmd_crystal(const Options& o, bool raise, int times, std::istream& in, std::ostream& out) {
  const GradedAlphabet a = alphabet_of(o);
  const Json j = read_input(o, in);
  ColumnPair cur{column_from_json(j.at(0)), column_from_json(j.at(1))};
  Json steps = Json::array({Json::array({serialize(cur.first), serialize(cur.second)})});
  for (int k = 0; k < times; ++k) {
    const auto next = raise ? crystal_E(cur.first, cur.second, a) : crystal_F(cur.first, cur.second, a);
    if (!next) {
      steps.push_back(nullptr);
      break;
    }
    cur = *next;
    steps.push_back(Json::array({serialize(cur.first), serialize(cur.second)}));
  }
  emit(out, o, {{"epsilon", pair_epsilon(cur.first, cur.second, a)}, {"phi", pair_phi(cur.first, cur.second, a)}, {"steps", steps}});
  return ok;
}

int cmd_embed(const Options& o, std::istream& in, std::ostream& out) {
  const GradedAlphabet a = alphabet_of(o);
  const RskPair r = phi_embedding(spinor_from_json(read_input(o, in), a), a);
  emit(out, o, {{"P", serialize(r.p)}, {"Q", serialize(r.q)}}, [&] { return to_string(r.p) + "\n" + to_string(r.q); });
  return ok;
}

int cmd_precedes(const Options& o, std::istream& in, std::ostream& out) {
  const GradedAlphabet a = alphabet_of(o);
  const SpinorTableau t = spinor_from_json(read_input(o, in), a);
  if (t.ell() != 2) throw UsageError("precedes takes two blocks [S, T]");
  Json forms = Json::array();
  for (const SpinorBlock& b : t.blocks) {
    const auto [l, r] = left_right_forms(b);
    forms.push_back({serialize(l), serialize(r)});
  }
  emit(out, o, {{"precedes", precedes(t.blocks[0], t.blocks[1], a)}, {"forms", forms}});
  return ok;
}

// A single block gives its admissible and coadmissible columns; a skew spinor
// tableau gives the KN tableau of its admissible columns.
int cmd_admissible(const Options& o, int n, std::istream& in, std::ostream& out) {
  const GradedAlphabet a = GradedAlphabet::barred(n);
  const Json j = read_input(o, in);
  if (j.is_object() && j.contains("left")) {
    const SpinorBlock b = block_from_json(j, a);
    const Column ad = to_admissible(b, n);
    const auto [l, r] = split_column(ad, n);
    emit(out, o, {{"ad", serialize(ad)}, {"coad", serialize(to_coadmissible(b, n))}, {"spl", {serialize(l), serialize(r)}}});
    return ok;
  }
  const SkewSpinorTableau t = skew_from_json(j, a);
  const SkewTableau kn = spinor_to_kn(t.tableau(), t.inner(), n);
  emit(out, o, serialize(kn), [&] { return to_string(kn); });
  return ok;
}

int cmd_column_epsilon(const Options& o, int n, std::istream& in, std::ostream& out) {
  const auto [t, eps] = column_epsilon(column_from_json(read_input(o, in)), n);
  emit(out, o, {{"column", serialize(t)}, {"epsilon", eps}});
  return ok;
}

int cmd_oscillating(const Options& o, std::istream& in, std::ostream& out) {
  const OscillatingTableau q = oscillating_from_json(read_input(o, in));
  const auto lambda = osc_shape(q);
  if (!lambda || !osc_validate(q, *lambda, q.ell())) {
    emit(out, o, {{"valid", false}});
    return verify_failed;
  }
  const OscClass cls(q);
  const auto [adm, eps] = osc_split(cls);
  emit(out, o,
       {{"valid", true},
        {"shape", serialize(*lambda)},
        {"weight", osc_weight(q)},
        {"epsilon", eps},
        {"least_rank", cls.n()},
        {"admissible", serialize(adm.at_rank(q.n))},
        {"sigma", serialize(sigma(q))},
        {"king", serialize(osc_to_king(q))}});
  return ok;
}

int cmd_king(const Options& o, int n, std::istream& in, std::ostream& out) {
  const OscillatingTableau q = king_to_osc(king_from_json(read_input(o, in)), n);
  emit(out, o, serialize(q));
  return ok;
}

int cmd_verify(const Options& o, const std::string& identity, int n, int ell, std::ostream& out) {
  IdentityReport r;
  if (identity == "cauchy") {
    r = verify_cauchy(alphabet_of(o), ell, o.cap);
  } else if (identity == "dual-spinor") {
    r = verify_dual_spinor(n, ell);
  } else if (identity == "littlewood") {
    r = verify_littlewood(n, ell, o.cap);
  } else {
    throw UsageError("unknown identity " + identity);
  }
  emit(out, o, serialize(r), [&] { return r.identity + (r.pass ? " pass" : " fail"); });
  return r.pass ? ok : verify_failed;
}

int cmd_enumerate(const Options& o, const std::string& set, const std::string& lambda_text, int ell, int n,
                  std::ostream& out) {
  const Partition lambda = parse_partition(lambda_text);
  std::vector<Json> items;
  std::vector<std::string> texts;
  if (set == "spinor") {
    const GradedAlphabet a = alphabet_of(o);
    if (o.cap < 0 && a.has_degree_one()) throw UsageError("infinite-without-cap: degree-1 letters need --cap");
    for (const SpinorTableau& t : enumerate_spinor(lambda, ell, a, o.cap)) {
      items.push_back(serialize(t));
      texts.push_back(text_of(t));
    }
  } else if (set == "kn") {
    if (n < 1) throw UsageError("enumerate kn needs -n");
    for (const SkewTableau& t : enumerate_sst(lambda, GradedAlphabet::symplectic(n)))
      if (is_kn(t, n)) {
        items.push_back(serialize(t));
        texts.push_back(to_string(t));
      }
  } else if (set == "king" || set == "osc") {
    if (set == "osc" && n < std::max(1, lambda.part(0))) throw UsageError("enumerate osc needs -n >= lambda_1");
    for (const KingTableau& k : enumerate_king(lambda, ell)) {
      if (set == "king") {
        items.push_back(serialize(k));
        texts.push_back(text_of(k));
      } else {
        const OscillatingTableau q = king_to_osc(k, n);
        items.push_back(serialize(q));
        texts.push_back(serialize(q).dump());
      }
    }
  } else {
    throw UsageError("unknown set " + set);
  }
  for (std::size_t i = 0; i < items.size(); ++i) out << (o.format == "text" ? texts[i] : items[i].dump()) << '\n';
  if (o.format == "text")
    out << "count " << items.size() << '\n';
  else
    out << Json{{"count", items.size()}}.dump() << '\n';
  return ok;
}

int cmd_examples(const std::string& dir, bool replay, std::ostream& out, std::ostream& err) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  int failures = 0;
  for (const auto& path : files) {
    std::ifstream f(path);
    const Json fx = Json::parse(f);
    const std::string name = fx.at("name").get<std::string>();
    if (!replay) {
      out << name << '\n';
      continue;
    }
    std::vector<std::string> args = fx.at("args").get<std::vector<std::string>>();
    std::istringstream input(fx.contains("input") ? fx.at("input").dump() : "null");
    std::ostringstream got, got_err;
    const int code = run(args, input, got, got_err);
    bool pass = code == fx.value("exit", 0);
    if (pass && fx.contains("expected") && !fx.at("expected").is_null()) {
      try {
        // enumerate prints one document per line; compare them all
        Json docs = Json::array();
        std::istringstream lines(got.str());
        if (fx.value("lines", false)) {
          for (std::string line; std::getline(lines, line);)
            if (!line.empty()) docs.push_back(Json::parse(line));
        } else {
          docs = Json::parse(got.str());
        }
        pass = docs.dump() == fx.at("expected").dump();
      } catch (const Json::parse_error&) {
        pass = false;
      }
    }
    out << (pass ? "PASS " : "FAIL ") << name << '\n';
    if (!pass) {
      ++failures;
      err << name << ": exit " << code << "\n" << got.str() << got_err.str();
    }
  }
  if (replay) out << files.size() - static_cast<std::size_t>(failures) << "/" << files.size() << " examples reproduced\n";
  return failures ? verify_failed : ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symplectic RSK for the spinor model", "spinrsk"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c, bool takes_input) {
    c->add_option("--alphabet,-a", o.alphabet, "[n], [n~], I_n, [n]', I_{m|n}, J_l or {a,b,...}");
    c->add_option("--cap", o.cap, "column height / x-degree cap");
    c->add_flag("--trace", o.trace, "print intermediate objects");
    c->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
    if (takes_input) c->add_option("input", o.input, "JSON input file, - for stdin");
  };

  bool inverse = false, kn = false, by_kn = false, replay = false;
  int corner = -1, n = 0, ell = 1;
  std::optional<int> rank;
  std::string repair = "plactic", identity, set, lambda, dir = SPINRSK_GOLDEN_DIR;

  auto* rsk_cmd = app.add_subcommand("rsk", "(P(T), Q(T)) of a 2l-tuple of columns");
  common(rsk_cmd, true);
  rsk_cmd->add_flag("--inverse", inverse, "read {P, Q} and print the tuple");
  rsk_cmd->add_option("-n,--rank", n, "rank for oscillating tableaux in --trace");

  auto* jdt_cmd = app.add_subcommand("jdt", "one slide into an inner corner");
  common(jdt_cmd, true);
  jdt_cmd->add_option("--corner,-c", corner, "row i of the corner (spinor) or column (KN)")->required();
  jdt_cmd->add_option("-n,--rank", rank, "rank of the KN replay");
  jdt_cmd->add_flag("--kn", kn, "slide a KN skew tableau instead");
  jdt_cmd->add_option("--repair", repair)->check(CLI::IsMember({"plactic", "crystal"}));

  auto* p_cmd = app.add_subcommand("p-tableau", "rectify a skew spinor tableau");
  common(p_cmd, true);
  p_cmd->add_flag("--by-kn", by_kn, "insert the KN reading word instead of sliding");

  auto* conj_cmd = app.add_subcommand("conjugate", "n-conjugate of a spinor tableau");
  common(conj_cmd, true);
  conj_cmd->add_option("-n,--rank", n)->required();

  auto* ins_cmd = app.add_subcommand("kn-insert", "symplectic insertion of a word over I_n");
  common(ins_cmd, true);
  ins_cmd->add_option("-n,--rank", n)->required();

  auto* kappa_cmd = app.add_subcommand("kappa", "RSK of a tuple of columns");
  common(kappa_cmd, true);

  bool raise = false;
  int times = 1;
  std::string corners;
  p_cmd->add_option("--corners", corners, "comma separated slide order for --trace");

  auto* cr_cmd = app.add_subcommand("crystal", "E or F on a pair of columns");
  common(cr_cmd, true);
  cr_cmd->add_flag("--raise,-E", raise, "apply E (default F)");
  cr_cmd->add_option("--times,-k", times);

  auto* emb_cmd = app.add_subcommand("embed", "Phi_A of a spinor tableau");
  common(emb_cmd, true);

  auto* pr_cmd = app.add_subcommand("precedes", "S < T for two blocks, with their shifted forms");
  common(pr_cmd, true);

  auto* ad_cmd = app.add_subcommand("admissible", "admissible columns of blocks over [n~]");
  common(ad_cmd, true);
  ad_cmd->add_option("-n,--rank", n)->required();

  auto* ce_cmd = app.add_subcommand("column-epsilon", "(T, epsilon) of a column over I_n");
  common(ce_cmd, true);
  ce_cmd->add_option("-n,--rank", n)->required();

  auto* osc_cmd = app.add_subcommand("oscillating", "validate and decompose an oscillating tableau");
  common(osc_cmd, true);

  auto* king_cmd = app.add_subcommand("king", "oscillating tableau Q(K; n) of a King tableau");
  common(king_cmd, true);
  king_cmd->add_option("-n,--rank", n)->required();

  auto* ver_cmd = app.add_subcommand("verify", "check a character identity");
  common(ver_cmd, false);
  ver_cmd->add_option("identity", identity)->required()->check(CLI::IsMember({"cauchy", "dual-spinor", "littlewood"}));
  ver_cmd->add_option("-n,--rank", n);
  ver_cmd->add_option("--ell,-l", ell);

  auto* en_cmd = app.add_subcommand("enumerate", "list a finite set");
  common(en_cmd, false);
  en_cmd->add_option("set", set)->required()->check(CLI::IsMember({"spinor", "kn", "king", "osc"}));
  en_cmd->add_option("--lambda", lambda, "comma separated parts");
  en_cmd->add_option("-n,--rank", n);
  en_cmd->add_option("--ell,-l", ell);

  auto* ex_cmd = app.add_subcommand("examples", "list or replay the golden fixtures");
  ex_cmd->add_flag("--replay", replay);
  ex_cmd->add_option("--dir", dir);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return usage_error;
  }

  try {
    if (rsk_cmd->parsed()) return cmd_rsk(o, inverse, n, in, out);
    if (jdt_cmd->parsed()) return cmd_jdt(o, corner, rank, kn, repair, in, out);
    if (p_cmd->parsed()) return cmd_p_tableau(o, by_kn, parse_ints(corners), in, out);
    if (cr_cmd->parsed()) return cmd_crystal(o, raise, times, in, out);
    if (emb_cmd->parsed()) return cmd_embed(o, in, out);
    if (osc_cmd->parsed()) return cmd_oscillating(o, in, out);
    if (king_cmd->parsed()) return cmd_king(o, n, in, out);
    if (pr_cmd->parsed()) return cmd_precedes(o, in, out);
    if (ad_cmd->parsed()) return cmd_admissible(o, n, in, out);
    if (ce_cmd->parsed()) return cmd_column_epsilon(o, n, in, out);
    if (conj_cmd->parsed()) return cmd_conjugate(o, n, in, out);
    if (ins_cmd->parsed()) return cmd_kn_insert(o, n, in, out);
    if (kappa_cmd->parsed()) return cmd_kappa(o, in, out);
    if (ver_cmd->parsed()) return cmd_verify(o, identity, n, ell, out);
    if (en_cmd->parsed()) return cmd_enumerate(o, set, lambda, ell, n, out);
    if (ex_cmd->parsed()) return cmd_examples(dir, replay, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return usage_error;
  }
  return usage_error;
}

}  // namespace spinrsk::cli
