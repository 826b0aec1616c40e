#include "dual_equiv.hpp"

#include <array>
#include <optional>

namespace gbdq {

const char* phi_rule_name(PhiRule r) {
  switch (r) {
    case PhiRule::Fixed: return "Fixed";
    case PhiRule::A: return "A";
    case PhiRule::B: return "B";
    case PhiRule::C: return "C";
    case PhiRule::Untagged: return "-";
  }
  return "?";
}

namespace {

using Triple = std::array<Transposition, 3>;

// no shared point; adjacent transpositions of a valid chain never cross,
// so this is the commuting condition there
bool share_free(const Transposition& u, const Transposition& v) {
  return u.a != v.a && u.a != v.b && u.b != v.a && u.b != v.b;
}

std::optional<std::pair<Triple, PhiRule>> phi_triple(const Transposition& t1,
                                                     const Transposition& t2,
                                                     const Transposition& t3) {
  // rule A, a<b<c<d
  // (t_bc, t_ab, t_bd) -> (t_ac, t_cd, t_bc)
  if (t1.a == t2.b && t3.a == t2.b && t1.b < t3.b) {
    int a = t2.a, b = t2.b, c = t1.b, d = t3.b;
    return std::pair{Triple{Transposition(a, c), Transposition(c, d),
                            Transposition(b, c)},
                     PhiRule::A};
  }
  // (t_ac, t_cd, t_bc) -> (t_bc, t_ab, t_bd)
  if (t1.b == t2.a && t3.b == t2.a && t1.a < t3.a) {
    int a = t1.a, c = t1.b, d = t2.b, b = t3.a;
    return std::pair{Triple{Transposition(b, c), Transposition(a, b),
                            Transposition(b, d)},
                     PhiRule::A};
  }
  // (t_bd, t_ab, t_bc) -> (t_bc, t_cd, t_ac)
  if (t1.a == t2.b && t3.a == t2.b && t3.b < t1.b) {
    int a = t2.a, b = t2.b, c = t3.b, d = t1.b;
    return std::pair{Triple{Transposition(b, c), Transposition(c, d),
                            Transposition(a, c)},
                     PhiRule::A};
  }
  // (t_bc, t_cd, t_ac) -> (t_bd, t_ab, t_bc)
  if (t1.b == t2.a && t3.b == t2.a && t3.a < t1.a) {
    int b = t1.a, c = t1.b, d = t2.b, a = t3.a;
    return std::pair{Triple{Transposition(b, d), Transposition(a, b),
                            Transposition(b, c)},
                     PhiRule::A};
  }
  // rule C, a<b<p<q<c with t_pq disjoint from the pair it passes over
  // (t_pq, t_ab, t_bc) -> (t_ab, t_bc, t_pq)
  if (t2.b == t3.a && t2.b < t1.a && t1.b < t3.b)
    return std::pair{Triple{t2, t3, t1}, PhiRule::C};
  // (t_ab, t_bc, t_pq) -> (t_pq, t_ab, t_bc)
  if (t1.b == t2.a && t1.b < t3.a && t3.b < t2.b)
    return std::pair{Triple{t3, t1, t2}, PhiRule::C};
  // (t_bc, t_ab, t_pq) -> (t_pq, t_bc, t_ab)
  if (t1.a == t2.b && t2.b < t3.a && t3.b < t1.b)
    return std::pair{Triple{t3, t1, t2}, PhiRule::C};
  // (t_pq, t_bc, t_ab) -> (t_bc, t_ab, t_pq)
  if (t2.a == t3.b && t3.b < t1.a && t1.b < t2.b)
    return std::pair{Triple{t2, t3, t1}, PhiRule::C};
  return std::nullopt;
}

}  // namespace

PhiResult phi(const Chain& c, int i) {
  const int n = static_cast<int>(c.length());
  if (i < 2 || i > n - 1) throw InvalidArgument("phi index out of range");
  DescentSet d = c.descents();
  if (d.contains(i - 1) == d.contains(i)) return {c, PhiRule::Fixed};
  auto ts = c.transpositions();
  const Transposition t1 = ts[i - 2], t2 = ts[i - 1], t3 = ts[i];
  if (auto r = phi_triple(t1, t2, t3)) {
    ts[i - 2] = r->first[0];
    ts[i - 1] = r->first[1];
    ts[i] = r->first[2];
    return {Chain::trusted(std::move(ts)), r->second};
  }
  // rule B: a Knuth move on the label word via a commuting swap
  const int l1 = t1.label(), l3 = t3.label();
  bool swap23;
  if (d.contains(i - 1)) {
    if (l1 < l3 && share_free(t2, t3)) swap23 = true;
    else if (l1 > l3 && share_free(t1, t2)) swap23 = false;
    else throw NoRuleApplies("no involution rule applies at " + c.text());
  } else {
    if (l3 < l1 && share_free(t2, t3)) swap23 = true;
    else if (l1 < l3 && share_free(t1, t2)) swap23 = false;
    else throw NoRuleApplies("no involution rule applies at " + c.text());
  }
  if (swap23) std::swap(ts[i - 1], ts[i]);
  else std::swap(ts[i - 2], ts[i - 1]);
  return {Chain::trusted(std::move(ts)), PhiRule::B};
}

bool phi_reversal_check(const Chain& c, int i) {
  const int n = static_cast<int>(c.length());
  Chain lhs = reverse_chain(phi(c, i).chain);
  Chain rhs = phi(reverse_chain(c), n + 1 - i).chain;
  return lhs == rhs;
}

PhiProvider corrupted_phi() {
  return [](const Chain& c, int i) {
    const int n = static_cast<int>(c.length());
    if (n <= 3) return PhiResult{c, PhiRule::Fixed};
    const int j = (i + 1 <= n - 1) ? i + 1 : i - 1;
    PhiResult r = phi(c, j);
    return PhiResult{r.chain, r.rule};
  };
}

}  // namespace gbdq
