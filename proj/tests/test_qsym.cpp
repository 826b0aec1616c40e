#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <variant>
#include <vector>

#include "chain.hpp"
#include "qsym.hpp"

using namespace gbdq;

namespace {

QSymFunction eleven_chain_k() {
  auto chains = enumerate_interval_chains(parse_permutation("(1,4,5,3,2,6)"));
  std::vector<DescentSet> des;
  for (const auto& c : chains) des.push_back(c.descents());
  return k_of(des, 5);
}

}  // namespace

TEST_CASE("coefficient bookkeeping") {
  QSymFunction f(3);
  CHECK(f.is_zero());
  f.add(DescentSet({1}), 2);
  f.add(DescentSet({1}), -2);
  CHECK(f.is_zero());
  f.add(DescentSet({2}), 1);
  CHECK(f.coefficient(DescentSet({2})) == 1);
  CHECK(f.coefficient(DescentSet({1})) == 0);
  CHECK_THROWS_AS(f.add(DescentSet({3}), 1), InvalidArgument);

  QSymFunction g(2);
  CHECK_THROWS_AS(f += g, InvalidArgument);
}

TEST_CASE("text renders keys in increasing bitmask order") {
  QSymFunction f(4);
  f.add(DescentSet({3}), 1);
  f.add(DescentSet({1}), 2);
  f.add(DescentSet({1, 2}), -1);
  CHECK(f.text() == "2*Q{1} + Q{3} - Q{1,2}");
  CHECK(QSymFunction(2).text() == "0");
}

TEST_CASE("the eleven-chain generating function") {
  QSymFunction k = eleven_chain_k();
  CHECK(k.coefficients().size() == 8);
  CHECK(k.coefficient(DescentSet({3, 4})) == 1);
  CHECK(k.coefficient(DescentSet({2, 4})) == 2);
  CHECK(k.coefficient(DescentSet({2, 3})) == 1);
  CHECK(k.coefficient(DescentSet({1, 4})) == 2);
  CHECK(k.coefficient(DescentSet({3})) == 1);
  CHECK(k.coefficient(DescentSet({1, 3})) == 2);
  CHECK(k.coefficient(DescentSet({1, 2})) == 1);
  CHECK(k.coefficient(DescentSet({2})) == 1);
}

TEST_CASE("schur_in_q on small shapes") {
  QSymFunction s21 = schur_in_q({2, 1});
  CHECK(s21.degree() == 3);
  CHECK(s21.coefficient(DescentSet({1})) == 1);
  CHECK(s21.coefficient(DescentSet({2})) == 1);
  CHECK(s21.coefficients().size() == 2);

  QSymFunction row = schur_in_q({4});
  CHECK(row.coefficients().size() == 1);
  CHECK(row.coefficient(DescentSet()) == 1);

  QSymFunction col = schur_in_q({1, 1, 1});
  CHECK(col.coefficient(DescentSet({1, 2})) == 1);
  CHECK(col.coefficients().size() == 1);
}

TEST_CASE("schur expansion round trips every shape") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lam : partitions_of(n)) {
      auto res = expand_in_schur(schur_in_q(lam));
      auto* exp = std::get_if<SchurExpansion>(&res);
      REQUIRE(exp != nullptr);
      CHECK(exp->coefficients() ==
            std::map<Partition, int64_t>{{lam, 1}});
    }
  }
}

TEST_CASE("the eleven-chain function is s32 plus s311") {
  auto res = expand_in_schur(eleven_chain_k());
  auto* exp = std::get_if<SchurExpansion>(&res);
  REQUIRE(exp != nullptr);
  CHECK(exp->coefficients() ==
        std::map<Partition, int64_t>{{{3, 1, 1}, 1}, {{3, 2}, 1}});
  CHECK(exp->nonnegative());
  CHECK(exp->text() == "s[3,1,1] + s[3,2]");
}

TEST_CASE("a lone fundamental is not symmetric") {
  QSymFunction f(2);
  f.add(DescentSet({1}), 1);
  auto res = expand_in_schur(f);
  auto* ns = std::get_if<NotSymmetric>(&res);
  REQUIRE(ns != nullptr);
  CHECK_FALSE(ns->residual.is_zero());
}

TEST_CASE("omega complements and rho reverses") {
  QSymFunction k = eleven_chain_k();
  CHECK(omega_q(omega_q(k)) == k);
  CHECK(rho_q(rho_q(k)) == k);

  // omega sends s_lambda to the conjugate shape
  for (const auto& lam : partitions_of(4)) {
    auto res = expand_in_schur(omega_q(schur_in_q(lam)));
    auto* exp = std::get_if<SchurExpansion>(&res);
    REQUIRE(exp != nullptr);
    CHECK(exp->coefficients() ==
          std::map<Partition, int64_t>{{conjugate(lam), 1}});
  }

  // rho fixes every Schur function
  for (const auto& lam : partitions_of(5)) {
    CHECK(rho_q(schur_in_q(lam)) == schur_in_q(lam));
  }
}

TEST_CASE("monomial expansion") {
  auto mono = expand_monomials(schur_in_q({1, 1}), 2);
  CHECK(mono == std::map<std::vector<int>, int64_t>{{{1, 1}, 1}});

  // s_2(z1,z2) = z1^2 + z1 z2 + z2^2
  auto s2 = expand_monomials(schur_in_q({2}), 2);
  CHECK(s2 == std::map<std::vector<int>, int64_t>{
                  {{0, 2}, 1}, {{1, 1}, 1}, {{2, 0}, 1}});

  // dropping below the part count kills the column shape
  CHECK(expand_monomials(schur_in_q({1, 1, 1}), 2).empty());
  CHECK_THROWS_AS(expand_monomials(schur_in_q({2}), 0), InvalidArgument);
}

TEST_CASE("subtraction and equality") {
  QSymFunction a(3), b(3);
  a.add(DescentSet({1}), 1);
  b.add(DescentSet({1}), 1);
  CHECK(a == b);
  CHECK((a - b).is_zero());
  b.add(DescentSet({2}), 1);
  CHECK((b - a).coefficient(DescentSet({2})) == 1);
}
