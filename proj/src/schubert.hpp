#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "descent.hpp"
#include "perm.hpp"
#include "tableaux.hpp"

namespace gbdq {

struct TooManyParts : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};

// The requested computation left S_m; retry with a larger ambient size.
struct AmbientTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonIntegral : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integer polynomial in z_1, z_2, ...; exponent vectors are canonical with
// trailing zeros trimmed.  All arithmetic is overflow-checked.
class SparsePolynomial {
 public:
  SparsePolynomial() = default;
  static SparsePolynomial constant(int64_t c);
  static SparsePolynomial monomial(std::vector<int> exps, int64_t c = 1);

  const std::map<std::vector<int>, int64_t>& terms() const { return terms_; }
  void add_term(std::vector<int> exps, int64_t c);
  int64_t coefficient(std::vector<int> exps) const;
  bool zero() const { return terms_.empty(); }
  int variables() const;  // largest index used

  SparsePolynomial operator+(const SparsePolynomial& other) const;
  SparsePolynomial operator-(const SparsePolynomial& other) const;
  SparsePolynomial operator*(const SparsePolynomial& other) const;
  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) =
      default;

  std::string text() const;  // "z1^2*z3 - 2*z2 + 3"

 private:
  std::map<std::vector<int>, int64_t> terms_;
};

// true when a is reverse-lexicographically smaller than b (compare from the
// last variable down, larger entry wins)
bool revlex_less(const std::vector<int>& a, const std::vector<int>& b);

// partial_i: (f - s_i f) / (z_i - z_{i+1}), computed term by term
SparsePolynomial divided_difference(int i, const SparsePolynomial& f);

// c_i = #{j > i : w(j) < w(i)}, trailing zeros trimmed
std::vector<int> lehmer_code(const Permutation& w);
Permutation perm_from_code(const std::vector<int>& code);

// by divided differences down from the staircase monomial; requires w in S_m
SparsePolynomial schubert_poly(const Permutation& w, int m);

// v(lambda,k): unique descent at k, values i + lambda_{k+1-i}
Permutation grassmannian_perm(const Partition& lam, int k);

// s_lambda(z_1..z_k) from the quasisymmetric expansion (combinatorial route,
// independent of the divided-difference construction)
SparsePolynomial schur_poly(const Partition& lam, int k);

// h_m(z_1..z_k), all monomials of degree m
SparsePolynomial complete_homogeneous(int m, int k);

// unique expansion sum a_w S_w by subtracting at the revlex-largest monomial,
// whose exponent is the Lehmer code of w
std::map<Permutation, int64_t> expand_in_schubert(SparsePolynomial p);

// all c^w_{u,v(lambda,k)} from S_u * s_lambda(z_1..z_k); the strict form
// throws AmbientTooSmall when some w lands outside S_m, the auto form grows
// m until two consecutive sizes agree
std::map<Permutation, int64_t> coeff_oracle(const Permutation& u,
                                            const Partition& lam, int k,
                                            int m);
std::map<Permutation, int64_t> coeff_oracle(const Permutation& u,
                                            const Partition& lam, int k);

struct KBruhatChain {
  std::vector<Permutation> points;  // u = p_0, ..., p_m = w
  std::vector<int> labels;          // cover labels max(p(i), p(j))
  DescentSet descents() const;
};

// all saturated k-Bruhat chains from u to w, found through the labeled-poset
// isomorphism with the interval [e, w u^{-1}]; empty when u is not below w
std::vector<KBruhatChain> enumerate_k_bruhat_interval(const Permutation& u,
                                                      const Permutation& w,
                                                      int k);

// S_u * (z_1+...+z_k) matches the cover sum
bool monk_check(const Permutation& u, int k);

// S_u * h_m(z_1..z_k) matches the increasing-label chain sum
bool pieri_check(const Permutation& u, int k, int m);

}  // namespace gbdq
