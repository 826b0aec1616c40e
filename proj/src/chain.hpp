#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "descent.hpp"
#include "perm.hpp"

namespace gbdq {

struct Transposition {
  int a, b;
  Transposition(int a_, int b_) : a(a_), b(b_) {
    if (a >= b || a <= 0) throw InvalidArgument("transposition needs 0 < a < b");
  }
  int label() const { return b; }
  Permutation perm() const { return Permutation::transposition(a, b); }
  friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

bool transpositions_disjoint(const Transposition& s, const Transposition& t);

// Raised when a transposition sequence fails saturation at some step.
struct NotAChain : std::runtime_error {
  size_t failed_step;
  NotAChain(size_t step, const std::string& what)
      : std::runtime_error(what), failed_step(step) {}
};

struct PatternMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A saturated chain from the identity in the GB order, as the sequence of
// cover transpositions applied on the left:
//   eta_m = t_m * ... * t_2 * t_1,  each step a cover.
class Chain {
 public:
  // validates every step; throws NotAChain
  static Chain validate(std::vector<Transposition> ts);

  // the caller guarantees validity (used by the enumerators)
  static Chain trusted(std::vector<Transposition> ts);

  const std::vector<Transposition>& transpositions() const { return ts_; }
  const Transposition& at(size_t i) const { return ts_[i]; }
  size_t length() const { return ts_.size(); }

  Permutation endpoint() const;
  std::vector<int> labels() const;
  DescentSet descents() const;

  // "(2,3)(3,5)(5,6)(4,5)(1,4)"
  std::string text() const;
  static Chain parse(const std::string& s);  // validates

  friend auto operator<=>(const Chain&, const Chain&) = default;

 private:
  std::vector<Transposition> ts_;
};

// spec order for listings: label word first, transposition list as tiebreak
bool chain_listing_less(const Chain& x, const Chain& y);

Chain reverse_chain(const Chain& c);

enum class SubstitutionKind : uint8_t { R1, R2, Commute };

// Applies the substitution rule at window position pos (0-based), in
// whichever orientation matches; throws PatternMismatch otherwise.
// R1 and R2 rewrite three transpositions, Commute swaps two disjoint ones.
Chain apply_substitution(const Chain& c, SubstitutionKind kind, size_t pos);

// true iff the 2- or 3-element window matches a pattern that can never
// occur contiguously in a valid chain
bool prohibited(const std::vector<Transposition>& window);

// All saturated chains from e to zeta, sorted by chain_listing_less.
std::vector<Chain> enumerate_interval_chains(const Permutation& zeta);

// Chains of length n whose transpositions cover an initial segment {1..m};
// exactly one representative per relabeling class.  Callback order is
// deterministic and independent of the worker count.
void for_each_canonical_chain(int n, const std::function<void(const Chain&)>& fn,
                              int jobs = 1);
uint64_t count_canonical_chains(int n, int jobs = 1);
std::vector<Chain> enumerate_canonical_chains(int n, int jobs = 1);

bool is_disjoint_chain(const Chain& c);

// Closure of {c} under all substitutions; equals the chain set of its
// interval.  edges (when non-null) receives (from, to, kind) with indices
// into the returned listing-sorted vector.
std::vector<Chain> substitution_orbit(
    const Chain& c,
    std::vector<std::tuple<size_t, size_t, SubstitutionKind>>* edges = nullptr);

// Independent validity oracle: a sequence is a chain iff no sequence of
// substitutions reaches a word with a prohibited contiguous window.
bool substitution_closure_clean(const std::vector<Transposition>& ts);

}  // namespace gbdq
