#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace spinrsk {

// Letters come in three families: k, k-bar and k-prime. Only primed letters
// have degree 1.
enum class Band : std::uint8_t { plain, bar, prime };

struct Letter {
  Band band = Band::plain;
  int index = 0;

  constexpr int degree() const noexcept { return band == Band::prime ? 1 : 0; }

  // Structural ordering, for use as a map key only.  Alphabet order is
  // GradedAlphabet::less.
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

constexpr Letter num(int k) noexcept { return {Band::plain, k}; }
constexpr Letter bar(int k) noexcept { return {Band::bar, k}; }
constexpr Letter primed(int k) noexcept { return {Band::prime, k}; }

// "k", "-k", "k'"
std::string to_string(Letter x);
Letter parse_letter(std::string_view text);

using Word = std::vector<Letter>;

std::string to_string(const Word& w);
Word parse_word(std::string_view text);

class GradedAlphabet {
 public:
  enum class Kind { plain, barred, symplectic, primed, super, king, explicit_list };

  GradedAlphabet() = default;

  static GradedAlphabet plain(int n);           // [n]
  static GradedAlphabet barred(int n);          // n-bar < ... < 1-bar
  static GradedAlphabet symplectic(int n);      // I_n = 1 < .. < n < n-bar < .. < 1-bar
  static GradedAlphabet primed(int n);          // [n]'
  static GradedAlphabet super(int m, int n);    // I_{m|n} = 1 < .. < m < 1' < .. < n'
  static GradedAlphabet king(int l);            // J_l = 1 < 1-bar < .. < l < l-bar
  static GradedAlphabet from_letters(std::vector<Letter> ordered);

  // "[n]", "[n~]", "I_n", "[n]'", "I_{m|n}", "J_l" or "{a,b,...}"
  static GradedAlphabet parse(std::string_view spec);

  Kind kind() const noexcept { return kind_; }
  int size() const noexcept { return static_cast<int>(letters_.size()); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  Letter at(int rank) const { return letters_.at(static_cast<std::size_t>(rank)); }
  // Parameter of the family constructor (n for [n], I_n, ...; l for J_l).
  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }

  bool contains(Letter x) const noexcept;
  // Position in the linear order; throws std::invalid_argument if absent.
  int rank(Letter x) const;

  bool less(Letter x, Letter y) const { return rank(x) < rank(y); }
  // x may sit immediately left of y in a row.
  bool row_le(Letter x, Letter y) const;
  // x may sit immediately above y in a column.
  bool col_lt(Letter x, Letter y) const;

  bool has_degree_one() const noexcept;
  std::vector<Letter> degree_zero() const;
  std::vector<Letter> degree_one() const;

  std::string name() const;

  friend bool operator==(const GradedAlphabet& a, const GradedAlphabet& b) {
    return a.letters_ == b.letters_;
  }

 private:
  GradedAlphabet(Kind kind, int m, int n, std::vector<Letter> letters)
      : kind_(kind), m_(m), n_(n), letters_(std::move(letters)) {}

  int fast_rank(Letter x) const noexcept;  // -1 when absent

  Kind kind_ = Kind::explicit_list;
  int m_ = 0;
  int n_ = 0;
  std::vector<Letter> letters_;
};

}  // namespace spinrsk
