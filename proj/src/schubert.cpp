#include "schubert.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>

#include "chain.hpp"
#include "qsym.hpp"

namespace gbdq {

namespace {

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw InvalidArgument("integer overflow in polynomial arithmetic");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw InvalidArgument("integer overflow in polynomial arithmetic");
  return r;
}

std::vector<int> trim_exps(std::vector<int> e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
  return e;
}

std::vector<int> trim_one_line(std::vector<int> w) {
  while (w.size() > 1 && w.back() == static_cast<int>(w.size())) w.pop_back();
  if (w.empty()) w = {1};
  return w;
}

}  // namespace

SparsePolynomial SparsePolynomial::constant(int64_t c) {
  SparsePolynomial p;
  p.add_term({}, c);
  return p;
}

SparsePolynomial SparsePolynomial::monomial(std::vector<int> exps, int64_t c) {
  SparsePolynomial p;
  p.add_term(std::move(exps), c);
  return p;
}

void SparsePolynomial::add_term(std::vector<int> exps, int64_t c) {
  if (c == 0) return;
  exps = trim_exps(std::move(exps));
  for (int e : exps)
    if (e < 0) throw InvalidArgument("negative exponent");
  auto [it, fresh] = terms_.try_emplace(std::move(exps), c);
  if (!fresh) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

int64_t SparsePolynomial::coefficient(std::vector<int> exps) const {
  auto it = terms_.find(trim_exps(std::move(exps)));
  return it == terms_.end() ? 0 : it->second;
}

int SparsePolynomial::variables() const {
  size_t m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, e.size());
  return static_cast<int>(m);
}

SparsePolynomial SparsePolynomial::operator+(
    const SparsePolynomial& other) const {
  SparsePolynomial out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

SparsePolynomial SparsePolynomial::operator-(
    const SparsePolynomial& other) const {
  SparsePolynomial out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, -c);
  return out;
}

SparsePolynomial SparsePolynomial::operator*(
    const SparsePolynomial& other) const {
  SparsePolynomial out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) {
      std::vector<int> e(std::max(e1.size(), e2.size()), 0);
      for (size_t i = 0; i < e1.size(); ++i) e[i] += e1[i];
      for (size_t i = 0; i < e2.size(); ++i) e[i] += e2[i];
      out.add_term(std::move(e), checked_mul(c1, c2));
    }
  }
  return out;
}

std::string SparsePolynomial::text() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int64_t v = c;
    if (first) {
      if (v < 0) {
        out << "-";
        v = -v;
      }
    } else {
      out << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "z" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out << v;
    } else {
      if (v != 1) out << v << "*";
      out << mono;
    }
  }
  return out.str();
}

bool revlex_less(const std::vector<int>& a, const std::vector<int>& b) {
  size_t len = std::max(a.size(), b.size());
  for (size_t k = len; k-- > 0;) {
    int av = k < a.size() ? a[k] : 0;
    int bv = k < b.size() ? b[k] : 0;
    if (av != bv) return av < bv;
  }
  return false;
}

SparsePolynomial divided_difference(int i, const SparsePolynomial& f) {
  if (i < 1) throw InvalidArgument("divided difference index must be >= 1");
  SparsePolynomial out;
  for (const auto& [e, c] : f.terms()) {
    int a = i - 1 < static_cast<int>(e.size()) ? e[i - 1] : 0;
    int b = i < static_cast<int>(e.size()) ? e[i] : 0;
    if (a == b) continue;
    int64_t sgn = a > b ? 1 : -1;
    int lo = std::min(a, b), hi = std::max(a, b);
    for (int k = lo; k < hi; ++k) {
      std::vector<int> e2 = e;
      if (e2.size() < static_cast<size_t>(i + 1)) e2.resize(i + 1, 0);
      e2[i - 1] = k;
      e2[i] = lo + hi - 1 - k;
      out.add_term(std::move(e2), sgn * c);
    }
  }
  return out;
}

std::vector<int> lehmer_code(const Permutation& w) {
  std::vector<int> ol = w.one_line();
  std::vector<int> code(ol.size(), 0);
  for (size_t i = 0; i < ol.size(); ++i)
    for (size_t j = i + 1; j < ol.size(); ++j)
      if (ol[j] < ol[i]) ++code[i];
  return trim_exps(std::move(code));
}

Permutation perm_from_code(const std::vector<int>& code) {
  std::vector<int> c = trim_exps(code);
  if (c.empty()) return Permutation();
  size_t size = c.size();
  while (true) {
    std::vector<int> avail(size);
    std::iota(avail.begin(), avail.end(), 1);
    std::vector<int> w;
    bool ok = true;
    for (size_t i = 0; i < size; ++i) {
      size_t ci = i < c.size() ? static_cast<size_t>(c[i]) : 0;
      if (ci >= avail.size()) {
        ok = false;
        break;
      }
      w.push_back(avail[ci]);
      avail.erase(avail.begin() + static_cast<long>(ci));
    }
    if (ok) return Permutation::from_one_line(w);
    ++size;
  }
}

namespace {

std::recursive_mutex sch_mutex;
std::map<std::vector<int>, SparsePolynomial>& sch_memo() {
  static std::map<std::vector<int>, SparsePolynomial> memo;
  return memo;
}

const SparsePolynomial& schubert_trimmed(const std::vector<int>& w) {
  auto& memo = sch_memo();
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;

  size_t n = w.size();
  bool staircase = true;
  for (size_t i = 0; i < n; ++i)
    if (w[i] != static_cast<int>(n - i)) staircase = false;
  SparsePolynomial result;
  if (staircase) {
    std::vector<int> e(n);
    for (size_t i = 0; i < n; ++i) e[i] = static_cast<int>(n - 1 - i);
    result.add_term(std::move(e), 1);
  } else {
    size_t i = 0;
    while (i + 1 < n && w[i] > w[i + 1]) ++i;
    std::vector<int> v = w;
    std::swap(v[i], v[i + 1]);
    result = divided_difference(static_cast<int>(i + 1),
                                schubert_trimmed(trim_one_line(std::move(v))));
  }
  return memo.emplace(w, std::move(result)).first->second;
}

}  // namespace

SparsePolynomial schubert_poly(const Permutation& w, int m) {
  if (w.max_point() > m)
    throw InvalidArgument("permutation outside S_" + std::to_string(m));
  std::lock_guard<std::recursive_mutex> lock(sch_mutex);
  return schubert_trimmed(trim_one_line(w.one_line()));
}

Permutation grassmannian_perm(const Partition& lam, int k) {
  if (!is_partition(lam)) throw InvalidArgument("not a partition");
  int parts = 0;
  for (int p : lam)
    if (p > 0) ++parts;
  if (parts > k)
    throw TooManyParts("shape has " + std::to_string(parts) +
                       " parts, more than k=" + std::to_string(k));
  if (k < 1) return Permutation();
  std::vector<int> padded(lam.begin(), lam.end());
  padded.resize(k, 0);
  std::vector<int> vals(k);
  for (int i = 1; i <= k; ++i) vals[i - 1] = i + padded[k - i];
  int top = vals.back();
  for (int v : vals) top = std::max(top, v);
  std::vector<bool> used(top + 1, false);
  for (int v : vals) used[v] = true;
  std::vector<int> ol = vals;
  for (int v = 1; v <= top; ++v)
    if (!used[v]) ol.push_back(v);
  return Permutation::from_one_line(ol);
}

SparsePolynomial schur_poly(const Partition& lam, int k) {
  if (!is_partition(lam)) throw InvalidArgument("not a partition");
  if (partition_size(lam) == 0) return SparsePolynomial::constant(1);
  if (k < 1) return SparsePolynomial();
  SparsePolynomial out;
  for (const auto& [exps, c] : expand_monomials(schur_in_q(lam), k))
    out.add_term(exps, c);
  return out;
}

SparsePolynomial complete_homogeneous(int m, int k) {
  if (m == 0) return SparsePolynomial::constant(1);
  if (k < 1) return SparsePolynomial();
  SparsePolynomial out;
  std::vector<int> exps(k, 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (left == 0) {
      out.add_term(exps, 1);
      return;
    }
    if (var >= k) return;
    for (int take = left; take >= 0; --take) {
      exps[var] = take;
      rec(var + 1, left - take);
      exps[var] = 0;
    }
  };
  rec(0, m);
  return out;
}

std::map<Permutation, int64_t> expand_in_schubert(SparsePolynomial p) {
  std::lock_guard<std::recursive_mutex> lock(sch_mutex);
  std::map<Permutation, int64_t> out;
  std::vector<int> prev_lead;
  bool have_prev = false;
  while (!p.zero()) {
    auto lead = p.terms().begin();
    for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
      if (revlex_less(lead->first, it->first)) lead = it;
    std::vector<int> code = lead->first;
    int64_t c = lead->second;
    if (have_prev && !revlex_less(code, prev_lead))
      throw NonIntegral("expansion failed to reduce the leading monomial");
    prev_lead = code;
    have_prev = true;

    Permutation w = perm_from_code(code);
    if (lehmer_code(w) != code)
      throw NonIntegral("leading exponent is not a Lehmer code");
    out[w] = checked_add(out.count(w) ? out[w] : 0, c);
    if (out[w] == 0) out.erase(w);
    for (const auto& [e, x] : schubert_trimmed(trim_one_line(w.one_line())).terms())
      p.add_term(e, checked_mul(-c, x));
  }
  return out;
}

std::map<Permutation, int64_t> coeff_oracle(const Permutation& u,
                                            const Partition& lam, int k,
                                            int m) {
  if (k < 1) throw InvalidArgument("k must be positive");
  if (u.max_point() > m)
    throw AmbientTooSmall("u outside S_" + std::to_string(m));
  SparsePolynomial product = schubert_poly(u, m) * schur_poly(lam, k);
  std::map<Permutation, int64_t> out = expand_in_schubert(std::move(product));
  for (const auto& [w, c] : out)
    if (w.max_point() > m)
      throw AmbientTooSmall("expansion leaves S_" + std::to_string(m));
  return out;
}

std::map<Permutation, int64_t> coeff_oracle(const Permutation& u,
                                            const Partition& lam, int k) {
  int m = std::max(u.max_point(), k) + partition_size(lam) + 1;
  for (int rounds = 0; rounds < 16; ++rounds) {
    try {
      auto a = coeff_oracle(u, lam, k, m);
      auto b = coeff_oracle(u, lam, k, m + 1);
      if (a == b) return a;
      ++m;
    } catch (const AmbientTooSmall&) {
      m *= 2;
    }
  }
  throw AmbientTooSmall("no stable ambient size found");
}

DescentSet KBruhatChain::descents() const {
  DescentSet d;
  for (size_t i = 1; i < labels.size(); ++i)
    if (labels[i - 1] > labels[i]) d.add(static_cast<int>(i));
  return d;
}

std::vector<KBruhatChain> enumerate_k_bruhat_interval(const Permutation& u,
                                                      const Permutation& w,
                                                      int k) {
  Permutation zeta = compose(w, u.inverse());
  std::vector<KBruhatChain> out;
  size_t failures = 0;
  for (const Chain& c : enumerate_interval_chains(zeta)) {
    KBruhatChain kc;
    kc.points.push_back(u);
    Permutation p = u;
    bool ok = true;
    for (const Transposition& t : c.transpositions()) {
      Permutation q = compose(Permutation::transposition(t.a, t.b), p);
      auto label = k_bruhat_cover(p, q, k);
      if (!label) {
        ok = false;
        break;
      }
      if (*label != t.label())
        throw InvalidArgument("k-Bruhat cover label disagrees with the "
                              "interval isomorphism");
      kc.points.push_back(q);
      kc.labels.push_back(*label);
      p = q;
    }
    if (ok && p == w) {
      out.push_back(std::move(kc));
    } else if (ok) {
      throw InvalidArgument("chain endpoint mismatch in k-Bruhat interval");
    } else {
      ++failures;
    }
  }
  if (!out.empty() && failures > 0)
    throw InvalidArgument("k-Bruhat interval mapping is inconsistent");
  return out;
}

bool monk_check(const Permutation& u, int k) {
  if (k < 1) return false;
  int m = std::max(u.max_point(), k) + 1;
  SparsePolynomial zsum;
  for (int i = 1; i <= k; ++i) {
    std::vector<int> e(i, 0);
    e[i - 1] = 1;
    zsum.add_term(std::move(e), 1);
  }
  auto lhs = expand_in_schubert(schubert_poly(u, m) * zsum);

  std::map<Permutation, int64_t> rhs;
  long base = inversion_length(u);
  for (int i = 1; i <= k; ++i)
    for (int j = k + 1; j <= m; ++j) {
      Permutation q = compose(u, Permutation::transposition(i, j));
      if (inversion_length(q) == base + 1) rhs[q] = 1;
    }
  return lhs == rhs;
}

bool pieri_check(const Permutation& u, int k, int m) {
  if (k < 1 || m < 0) return false;
  int ambient = std::max(u.max_point(), k) + m + 1;
  auto lhs = expand_in_schubert(schubert_poly(u, ambient) *
                                complete_homogeneous(m, k));

  std::map<Permutation, int64_t> rhs;
  std::function<void(const Permutation&, int, int)> rec =
      [&](const Permutation& p, int depth, int last) {
        if (depth == m) {
          rhs[p] = checked_add(rhs.count(p) ? rhs[p] : 0, 1);
          return;
        }
        int top = std::max(p.max_point(), k) + 1;
        for (int i = 1; i <= k; ++i)
          for (int j = k + 1; j <= top; ++j) {
            Permutation q = compose(p, Permutation::transposition(i, j));
            auto label = k_bruhat_cover(p, q, k);
            if (label && *label > last) rec(q, depth + 1, *label);
          }
      };
  rec(u, 0, 0);
  return lhs == rhs;
}

}  // namespace gbdq
