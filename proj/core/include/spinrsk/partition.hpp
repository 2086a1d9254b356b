#pragma once

#include <string>
#include <vector>

namespace spinrsk {

class Partition {
 public:
  Partition() = default;
  // Trailing zeros are dropped; throws std::invalid_argument unless the
  // parts are non-negative and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  // 0-based; zero past the end.
  int part(int i) const noexcept;

  Partition conjugate() const;
  bool contains(const Partition& mu) const noexcept;

  // Shape with a box added to (resp. removed from) 0-based row i.
  Partition add_box(int row) const;
  Partition remove_box(int row) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape() = default;
  SkewShape(Partition out, Partition in);
  int size() const noexcept { return outer.size() - inner.size(); }
  friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

// (n - lambda_l, ..., n - lambda_1)'
Partition rho_complement(const Partition& lambda, int ell, int n);

// Every partition fitting inside the rows x cols box, in lexicographic order.
std::vector<Partition> partitions_in_box(int rows, int cols);
// Every partition of size exactly n with at most max_len parts.
std::vector<Partition> partitions_of(int n, int max_len);

}  // namespace spinrsk
