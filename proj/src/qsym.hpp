#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "descent.hpp"
#include "tableaux.hpp"

namespace gbdq {

// Integer combination of fundamentals Q_D of a fixed degree n.
// Zero coefficients are never stored.
class QSymFunction {
 public:
  explicit QSymFunction(int degree) : n_(degree) {}

  int degree() const { return n_; }
  const std::map<DescentSet, int64_t>& coefficients() const { return coef_; }
  int64_t coefficient(const DescentSet& d) const;
  void add(const DescentSet& d, int64_t c);
  bool is_zero() const { return coef_.empty(); }

  QSymFunction& operator+=(const QSymFunction& other);
  QSymFunction operator-(const QSymFunction& other) const;
  friend bool operator==(const QSymFunction&, const QSymFunction&) = default;

  // "Q{3,4} + 2*Q{2,4} + ..." with keys in increasing bitmask order
  std::string text() const;

 private:
  int n_;
  std::map<DescentSet, int64_t> coef_;
};

// Integer combination of Schur functions of degree n.
class SchurExpansion {
 public:
  explicit SchurExpansion(int degree) : n_(degree) {}

  int degree() const { return n_; }
  const std::map<Partition, int64_t>& coefficients() const { return coef_; }
  int64_t coefficient(const Partition& lam) const;
  void add(const Partition& lam, int64_t c);
  bool is_zero() const { return coef_.empty(); }
  bool nonnegative() const;

  friend bool operator==(const SchurExpansion&, const SchurExpansion&) =
      default;

  // "s[3,2] + s[3,1,1]"
  std::string text() const;

 private:
  int n_;
  std::map<Partition, int64_t> coef_;
};

// f is not in the span of the Schur functions; carries f minus the projection
// onto the part of the span that could be matched.
struct NotSymmetric {
  QSymFunction residual;
  friend bool operator==(const NotSymmetric&, const NotSymmetric&) = default;
};

using SchurResult = std::variant<SchurExpansion, NotSymmetric>;

// K of a chain set: sum of Q_{Des(c)} over the given descent sets
QSymFunction k_of(const std::vector<DescentSet>& descents, int degree);

// Gessel: sum of Q_{Des(T)} over standard tableaux of shape lambda
QSymFunction schur_in_q(const Partition& lam);

// exact solve of f = sum a_lam schur_in_q(lam); NotSymmetric is a value
SchurResult expand_in_schur(const QSymFunction& f);

QSymFunction omega_q(const QSymFunction& f);  // keys complemented
QSymFunction rho_q(const QSymFunction& f);    // keys reversed

// truncated expansion in m variables: exponent vector -> coefficient
std::map<std::vector<int>, int64_t> expand_monomials(const QSymFunction& f,
                                                     int m);

}  // namespace gbdq
