#include "spinrsk/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinrsk {

Monomial Monomial::var(const std::string& name, int exp) {
  if (name.empty()) throw std::invalid_argument("Monomial: empty variable name");
  Monomial m;
  if (exp != 0) m.e_[name] = exp;
  return m;
}

int Monomial::exponent(const std::string& name) const {
  auto it = e_.find(name);
  return it == e_.end() ? 0 : it->second;
}

int Monomial::x_degree() const {
  int d = 0;
  for (const auto& [name, e] : e_)
    if (name.front() == 'x') d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out = *this;
  for (const auto& [name, e] : o.e_) {
    int& slot = out.e_[name];
    slot += e;
    if (slot == 0) out.e_.erase(name);
  }
  return out;
}

Monomial Monomial::inverse() const {
  Monomial out = *this;
  for (auto& [name, e] : out.e_) e = -e;
  return out;
}

std::string Monomial::to_string() const {
  if (e_.empty()) return "1";
  std::string out;
  for (const auto& [name, e] : e_) {
    if (!out.empty()) out += '*';
    out += name;
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

LaurentPoly LaurentPoly::constant(Integer c) { return monomial(Monomial{}, std::move(c)); }

LaurentPoly LaurentPoly::monomial(const Monomial& m, Integer c) {
  LaurentPoly p;
  p.add_term(m, c);
  return p;
}

Integer LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  if (cap_ && m.x_degree() > *cap_) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::apply_cap() {
  if (!cap_) return;
  std::erase_if(terms_, [&](const auto& kv) { return kv.first.x_degree() > *cap_; });
}

LaurentPoly LaurentPoly::truncated(int cap) const {
  LaurentPoly out = *this;
  out.cap_ = out.cap_ ? std::min(*out.cap_, cap) : cap;
  out.apply_cap();
  return out;
}

namespace {

std::optional<int> merged_cap(std::optional<int> x, std::optional<int> y) {
  if (x && y) return std::min(*x, *y);
  return x ? x : y;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  cap_ = merged_cap(cap_, o.cap_);
  apply_cap();
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  cap_ = merged_cap(cap_, o.cap_);
  apply_cap();
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly out;
  out.cap_ = merged_cap(cap_, o.cap_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) out.add_term(m1 * m2, c1 * c2);
  *this = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::geometric(const Monomial& m, int cap) {
  if (m.x_degree() <= 0) throw std::invalid_argument("geometric: ratio " + m.to_string() + " has no positive x-degree");
  if (cap < 0) throw std::invalid_argument("geometric: a cap is required");
  LaurentPoly out;
  out.cap_ = cap;
  Monomial power;
  for (int k = 0; k * m.x_degree() <= cap; ++k) {
    out.add_term(power, 1);
    power = power * m;
  }
  return out;
}

LaurentPoly LaurentPoly::substitute(const std::map<std::string, Monomial>& sub) const {
  LaurentPoly out;
  out.cap_ = cap_;
  for (const auto& [m, c] : terms_) {
    Monomial image;
    for (const auto& [name, e] : m.exponents()) {
      auto it = sub.find(name);
      if (it == sub.end()) {
        image = image * Monomial::var(name, e);
      } else {
        for (int k = 0; k < std::abs(e); ++k) image = image * (e > 0 ? it->second : it->second.inverse());
      }
    }
    out.add_term(image, c);
  }
  return out;
}

Integer LaurentPoly::at_one() const {
  Integer s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty())
      out += c < 0 ? " - " : " + ";
    else if (c < 0)
      out += '-';
    const Integer a = c < 0 ? Integer(-c) : c;
    if (m.exponents().empty()) {
      out += a.str();
    } else {
      if (a != 1) out += a.str() + '*';
      out += m.to_string();
    }
  }
  return out;
}

std::optional<Monomial> first_difference(const LaurentPoly& x, const LaurentPoly& y) {
  auto i = x.terms().begin(), j = y.terms().begin();
  while (i != x.terms().end() || j != y.terms().end()) {
    if (j == y.terms().end() || (i != x.terms().end() && i->first < j->first)) return i->first;
    if (i == x.terms().end() || j->first < i->first) return j->first;
    if (i->second != j->second) return i->first;
    ++i;
    ++j;
  }
  return std::nullopt;
}

}  // namespace spinrsk
