#pragma once

#include <map>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace spinrsk {

using Integer = boost::multiprecision::cpp_int;

// Sparse exponent vector keyed by variable name; zero exponents are never
// stored.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(const std::string& name, int exp = 1);

  const std::map<std::string, int>& exponents() const noexcept { return e_; }
  int exponent(const std::string& name) const;
  // Sum of the exponents of variables named x...; the truncation degree.
  int x_degree() const;

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::map<std::string, int> e_;
};

// Exact Laurent polynomial with integer coefficients.  An optional cap drops
// every term of x-degree above it; products of capped values stay capped.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly constant(Integer c);
  static LaurentPoly monomial(const Monomial& m, Integer c = 1);
  static LaurentPoly var(const std::string& name, int exp = 1) { return monomial(Monomial::var(name, exp)); }

  const std::map<Monomial, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(const Monomial& m) const;
  std::optional<int> cap() const noexcept { return cap_; }

  // The same polynomial with terms of x-degree > cap removed.
  LaurentPoly truncated(int cap) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(LaurentPoly x, const LaurentPoly& y) { return x *= y; }

  // 1 / (1 - m) as a geometric series up to x-degree cap; m must have
  // positive x-degree.
  static LaurentPoly geometric(const Monomial& m, int cap);

  // Each named variable replaced by a monomial (other variables kept).
  LaurentPoly substitute(const std::map<std::string, Monomial>& sub) const;
  // Sum of the coefficients: the value at all variables equal to 1.
  Integer at_one() const;

  std::string to_string() const;

  // Compares terms only; caps are ignored.
  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) { return x.terms_ == y.terms_; }

 private:
  void add_term(const Monomial& m, const Integer& c);
  void apply_cap();

  std::map<Monomial, Integer> terms_;
  std::optional<int> cap_;
};

// The least monomial where x and y differ, if any.
std::optional<Monomial> first_difference(const LaurentPoly& x, const LaurentPoly& y);

}  // namespace spinrsk
