#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gbdq {

// Subset of {1,...,31} as a bitmask; descent positions of a length-n word
// live in {1,...,n-1}.
class DescentSet {
 public:
  DescentSet() = default;
  explicit DescentSet(const std::vector<int>& elems) {
    for (int e : elems) add(e);
  }

  void add(int j) { bits_ |= mask(j); }
  void remove(int j) { bits_ &= ~mask(j); }
  bool contains(int j) const { return j >= 1 && j <= 31 && (bits_ & mask(j)); }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcount(bits_); }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int j = 1; j <= 31; ++j)
      if (bits_ & mask(j)) out.push_back(j);
    return out;
  }

  // complement within {1..n-1}
  DescentSet complement(int n) const {
    DescentSet d;
    for (int j = 1; j < n; ++j)
      if (!contains(j)) d.add(j);
    return d;
  }

  // {n-j : j in D}; an involution on subsets of {1..n-1}
  DescentSet reverse(int n) const {
    DescentSet d;
    for (int j = 1; j < n; ++j)
      if (contains(j)) d.add(n - j);
    return d;
  }

  // "{2,4}" or "{}"
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int j : elements()) {
      if (!first) s += ',';
      first = false;
      s += std::to_string(j);
    }
    return s + "}";
  }

  uint32_t bits() const { return bits_; }

  friend auto operator<=>(const DescentSet&, const DescentSet&) = default;

 private:
  static uint32_t mask(int j) { return 1u << j; }
  uint32_t bits_ = 0;
};

}  // namespace gbdq
