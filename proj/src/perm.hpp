#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gbdq {

// Thrown on malformed input (parse errors, invalid constructions).
struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A bijection of the positive integers moving finitely many points.
// Stored as the sorted table of moved points; identity outside the table.
class Permutation {
 public:
  Permutation() = default;

  // table of (point, image) pairs; fixed points may be included and are dropped
  static Permutation from_pairs(std::vector<std::pair<int, int>> pairs);

  // cycles such as {{1,4,5,3,2,6}} meaning 1->4->5->3->2->6->1
  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles);

  // one-line notation w(1), w(2), ...; trailing fixed points allowed
  static Permutation from_one_line(const std::vector<int>& values);

  static Permutation transposition(int a, int b);

  int apply(int x) const;
  int operator()(int x) const { return apply(x); }

  Permutation inverse() const;
  bool is_identity() const { return table_.empty(); }

  // moved points in increasing order with their images
  const std::vector<std::pair<int, int>>& moved() const { return table_; }
  std::vector<int> support() const;
  int max_point() const { return table_.empty() ? 0 : table_.back().first; }

  // values w(1)..w(m); m defaults to max_point()
  std::vector<int> one_line(int m = 0) const;

  std::string cycle_string() const;     // "(1,4,5,3,2,6)" or "e"
  std::string one_line_string() const;  // "145326" or "1,10,2,..." when wide

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.table_ <=> b.table_;
  }

 private:
  std::vector<std::pair<int, int>> table_;
};

// p after q: x -> p(q(x))
Permutation compose(const Permutation& p, const Permutation& q);

// number of inversions of the one-line word
long inversion_length(const Permutation& p);

// up(z) = {a : a < z(a)}, dw(z) = {b : b > z(b)}; the two partition the support
std::pair<std::vector<int>, std::vector<int>> up_down_sets(const Permutation& z);

// the Grassmannian-Bruhat order
bool gb_leq(const Permutation& eta, const Permutation& zeta);

// if zeta covers eta in the GB order, the cover's label (the larger entry of
// the transposition zeta * eta^{-1}); nullopt otherwise
std::optional<int> gb_cover(const Permutation& eta, const Permutation& zeta);

// if w covers u in the k-Bruhat order, the label max(u(i), u(j)); nullopt
// otherwise.  Cover means w = u t_{ij}, i <= k < j, and lengths differ by one.
std::optional<int> k_bruhat_cover(const Permutation& u, const Permutation& w,
                                  int k);

// iota_I: move the action of p from {1..m} onto the increasing point set I
Permutation relabel(const Permutation& p, const std::vector<int>& points);

// Accepts cycle notation "(1,4,5,3,2,6)(7,8)" or one-line notation
// "145326" / "1,10,3,...".  Throws InvalidArgument on malformed input.
Permutation parse_permutation(const std::string& text);

}  // namespace gbdq
