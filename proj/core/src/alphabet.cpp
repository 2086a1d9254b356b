#include "spinrsk/alphabet.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

namespace spinrsk {

namespace {

int parse_int(std::string_view s, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("cannot parse integer in '" + std::string(context) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

void require_positive(int n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative size");
}

}  // namespace

std::string to_string(Letter x) {
  switch (x.band) {
    case Band::plain: return std::to_string(x.index);
    case Band::bar: return "-" + std::to_string(x.index);
    case Band::prime: return std::to_string(x.index) + "'";
  }
  return {};
}

Letter parse_letter(std::string_view text) {
  auto s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty letter");
  if (s.front() == '-') {
    int k = parse_int(s.substr(1), text);
    if (k <= 0) throw std::invalid_argument("letter index must be positive: " + std::string(text));
    return bar(k);
  }
  if (s.back() == '\'') {
    int k = parse_int(s.substr(0, s.size() - 1), text);
    if (k <= 0) throw std::invalid_argument("letter index must be positive: " + std::string(text));
    return primed(k);
  }
  int k = parse_int(s, text);
  if (k <= 0) throw std::invalid_argument("letter index must be positive: " + std::string(text));
  return num(k);
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) w.push_back(parse_letter(token));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\n') flush();
    else token += ch;
  }
  flush();
  return w;
}

GradedAlphabet GradedAlphabet::plain(int n) {
  require_positive(n, "[n]");
  std::vector<Letter> v;
  for (int k = 1; k <= n; ++k) v.push_back(num(k));
  return {Kind::plain, 0, n, std::move(v)};
}

GradedAlphabet GradedAlphabet::barred(int n) {
  require_positive(n, "[n~]");
  std::vector<Letter> v;
  for (int k = n; k >= 1; --k) v.push_back(bar(k));
  return {Kind::barred, 0, n, std::move(v)};
}

GradedAlphabet GradedAlphabet::symplectic(int n) {
  require_positive(n, "I_n");
  std::vector<Letter> v;
  for (int k = 1; k <= n; ++k) v.push_back(num(k));
  for (int k = n; k >= 1; --k) v.push_back(bar(k));
  return {Kind::symplectic, 0, n, std::move(v)};
}

GradedAlphabet GradedAlphabet::primed(int n) {
  require_positive(n, "[n]'");
  std::vector<Letter> v;
  for (int k = 1; k <= n; ++k) v.push_back(spinrsk::primed(k));
  return {Kind::primed, 0, n, std::move(v)};
}

GradedAlphabet GradedAlphabet::super(int m, int n) {
  require_positive(m, "I_{m|n}");
  require_positive(n, "I_{m|n}");
  std::vector<Letter> v;
  for (int k = 1; k <= m; ++k) v.push_back(num(k));
  for (int k = 1; k <= n; ++k) v.push_back(spinrsk::primed(k));
  return {Kind::super, m, n, std::move(v)};
}

GradedAlphabet GradedAlphabet::king(int l) {
  require_positive(l, "J_l");
  std::vector<Letter> v;
  for (int k = 1; k <= l; ++k) {
    v.push_back(num(k));
    v.push_back(bar(k));
  }
  return {Kind::king, 0, l, std::move(v)};
}

GradedAlphabet GradedAlphabet::from_letters(std::vector<Letter> ordered) {
  std::set<Letter> seen(ordered.begin(), ordered.end());
  if (seen.size() != ordered.size()) throw std::invalid_argument("alphabet has repeated letters");
  return {Kind::explicit_list, 0, static_cast<int>(ordered.size()), std::move(ordered)};
}

GradedAlphabet GradedAlphabet::parse(std::string_view spec) {
  auto s = trim(spec);
  auto fail = [&]() -> GradedAlphabet {
    throw std::invalid_argument("unrecognised alphabet '" + std::string(spec) + "'");
  };
  if (s.empty()) return fail();
  if (s.front() == '{') {
    if (s.back() != '}') return fail();
    return from_letters(parse_word(s.substr(1, s.size() - 2)));
  }
  if (s.front() == '[') {
    if (s.size() >= 4 && s.substr(s.size() - 2) == "]'")
      return primed(parse_int(s.substr(1, s.size() - 3), spec));
    if (s.back() != ']') return fail();
    auto body = s.substr(1, s.size() - 2);
    if (!body.empty() && body.back() == '~') return barred(parse_int(body.substr(0, body.size() - 1), spec));
    if (!body.empty() && body.front() == '-') return barred(parse_int(body.substr(1), spec));
    return plain(parse_int(body, spec));
  }
  if (s.rfind("I_{", 0) == 0 && s.back() == '}') {
    auto body = s.substr(3, s.size() - 4);
    auto bar_pos = body.find('|');
    if (bar_pos == std::string_view::npos) return fail();
    return super(parse_int(body.substr(0, bar_pos), spec), parse_int(body.substr(bar_pos + 1), spec));
  }
  if (s.rfind("I_", 0) == 0) return symplectic(parse_int(s.substr(2), spec));
  if (s.rfind("J_", 0) == 0) return king(parse_int(s.substr(2), spec));
  return fail();
}

int GradedAlphabet::fast_rank(Letter x) const noexcept {
  const int k = x.index;
  auto in = [&](int lo, int hi) { return k >= lo && k <= hi; };
  switch (kind_) {
    case Kind::plain:
      return x.band == Band::plain && in(1, n_) ? k - 1 : -1;
    case Kind::barred:
      return x.band == Band::bar && in(1, n_) ? n_ - k : -1;
    case Kind::symplectic:
      if (!in(1, n_)) return -1;
      if (x.band == Band::plain) return k - 1;
      if (x.band == Band::bar) return 2 * n_ - k;
      return -1;
    case Kind::primed:
      return x.band == Band::prime && in(1, n_) ? k - 1 : -1;
    case Kind::super:
      if (x.band == Band::plain) return in(1, m_) ? k - 1 : -1;
      if (x.band == Band::prime) return in(1, n_) ? m_ + k - 1 : -1;
      return -1;
    case Kind::king:
      if (!in(1, n_)) return -1;
      if (x.band == Band::plain) return 2 * k - 2;
      if (x.band == Band::bar) return 2 * k - 1;
      return -1;
    case Kind::explicit_list: {
      auto it = std::find(letters_.begin(), letters_.end(), x);
      return it == letters_.end() ? -1 : static_cast<int>(it - letters_.begin());
    }
  }
  return -1;
}

bool GradedAlphabet::contains(Letter x) const noexcept { return fast_rank(x) >= 0; }

int GradedAlphabet::rank(Letter x) const {
  int r = fast_rank(x);
  if (r < 0) throw std::invalid_argument("letter " + to_string(x) + " is not in alphabet " + name());
  return r;
}

bool GradedAlphabet::row_le(Letter x, Letter y) const {
  int rx = rank(x), ry = rank(y);
  return rx < ry || (rx == ry && x.degree() == 0);
}

bool GradedAlphabet::col_lt(Letter x, Letter y) const {
  int rx = rank(x), ry = rank(y);
  return rx < ry || (rx == ry && x.degree() == 1);
}

bool GradedAlphabet::has_degree_one() const noexcept {
  return std::any_of(letters_.begin(), letters_.end(), [](Letter x) { return x.degree() == 1; });
}

std::vector<Letter> GradedAlphabet::degree_zero() const {
  std::vector<Letter> out;
  std::copy_if(letters_.begin(), letters_.end(), std::back_inserter(out), [](Letter x) { return x.degree() == 0; });
  return out;
}

std::vector<Letter> GradedAlphabet::degree_one() const {
  std::vector<Letter> out;
  std::copy_if(letters_.begin(), letters_.end(), std::back_inserter(out), [](Letter x) { return x.degree() == 1; });
  return out;
}

std::string GradedAlphabet::name() const {
  switch (kind_) {
    case Kind::plain: return "[" + std::to_string(n_) + "]";
    case Kind::barred: return "[" + std::to_string(n_) + "~]";
    case Kind::symplectic: return "I_" + std::to_string(n_);
    case Kind::primed: return "[" + std::to_string(n_) + "]'";
    case Kind::super: return "I_{" + std::to_string(m_) + "|" + std::to_string(n_) + "}";
    case Kind::king: return "J_" + std::to_string(n_);
    case Kind::explicit_list: return "{" + to_string(letters_) + "}";
  }
  return {};
}

}  // namespace spinrsk
