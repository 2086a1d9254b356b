#include "spinrsk/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spinrsk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must weakly decrease: " + to_string());
  }
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const noexcept {
  return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> out(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

bool Partition::contains(const Partition& mu) const noexcept {
  if (mu.length() > length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu.part(i) > part(i)) return false;
  return true;
}

Partition Partition::add_box(int row) const {
  std::vector<int> p = parts_;
  if (row < 0) throw std::invalid_argument("add_box: negative row");
  if (static_cast<std::size_t>(row) >= p.size()) p.resize(static_cast<std::size_t>(row) + 1, 0);
  ++p[static_cast<std::size_t>(row)];
  return Partition(std::move(p));
}

Partition Partition::remove_box(int row) const {
  if (row < 0 || row >= length()) throw std::invalid_argument("remove_box: row has no box");
  std::vector<int> p = parts_;
  --p[static_cast<std::size_t>(row)];
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

SkewShape::SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
  if (!outer.contains(inner)) throw std::invalid_argument("inner shape not contained in outer shape");
}

Partition rho_complement(const Partition& lambda, int ell, int n) {
  if (ell < 0 || n < 0) throw std::invalid_argument("rho_complement: negative box");
  if (lambda.length() > ell || lambda.part(0) > n)
    throw std::invalid_argument("rho_complement: " + lambda.to_string() + " exceeds the box");
  std::vector<int> rows;
  for (int i = ell - 1; i >= 0; --i) rows.push_back(n - lambda.part(i));
  return Partition(std::move(rows)).conjugate();
}

namespace {

void box_rec(int rows, int cap, std::vector<int>& cur, std::vector<Partition>& out) {
  out.emplace_back(cur);
  if (static_cast<int>(cur.size()) == rows) return;
  for (int p = 1; p <= cap; ++p) {
    cur.push_back(p);
    box_rec(rows, p, cur, out);
    cur.pop_back();
  }
}

void sum_rec(int left, int cap, int max_len, std::vector<int>& cur, std::vector<Partition>& out) {
  if (left == 0) {
    out.emplace_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == max_len) return;
  for (int p = std::min(left, cap); p >= 1; --p) {
    cur.push_back(p);
    sum_rec(left - p, p, max_len, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  box_rec(rows, cols, cur, out);
  return out;
}

std::vector<Partition> partitions_of(int n, int max_len) {
  std::vector<Partition> out;
  std::vector<int> cur;
  sum_rec(n, n, max_len, cur, out);
  return out;
}

}  // namespace spinrsk
