#include "chain.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cassert>
#include <cctype>
#include <map>
#include <set>
#include <thread>
#include <tuple>

namespace gbdq {

bool transpositions_disjoint(const Transposition& s, const Transposition& t) {
  if (s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b) return false;
  // crossing pairs are not disjoint: they are the prohibited pattern
  if (s.a < t.a && t.a < s.b && s.b < t.b) return false;
  if (t.a < s.a && s.a < t.b && t.b < s.b) return false;
  return true;
}

Chain Chain::validate(std::vector<Transposition> ts) {
  Permutation eta;
  for (size_t i = 0; i < ts.size(); ++i) {
    Permutation next = compose(ts[i].perm(), eta);
    if (!gb_leq(eta, next))
      throw NotAChain(i, "step " + std::to_string(i + 1) + " (" +
                             std::to_string(ts[i].a) + "," +
                             std::to_string(ts[i].b) + ") is not a cover");
    eta = std::move(next);
  }
  Chain c;
  c.ts_ = std::move(ts);
  return c;
}

Chain Chain::trusted(std::vector<Transposition> ts) {
  Chain c;
  c.ts_ = std::move(ts);
  return c;
}

Permutation Chain::endpoint() const {
  Permutation eta;
  for (const auto& t : ts_) eta = compose(t.perm(), eta);
  return eta;
}

std::vector<int> Chain::labels() const {
  std::vector<int> out;
  out.reserve(ts_.size());
  for (const auto& t : ts_) out.push_back(t.label());
  return out;
}

DescentSet Chain::descents() const {
  DescentSet d;
  for (size_t i = 1; i < ts_.size(); ++i)
    if (ts_[i - 1].label() > ts_[i].label()) d.add(static_cast<int>(i));
  return d;
}

std::string Chain::text() const {
  std::string s;
  for (const auto& t : ts_) {
    s += '(';
    s += std::to_string(t.a);
    s += ',';
    s += std::to_string(t.b);
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Chain Chain::parse(const std::string& s) {
  std::vector<Transposition> ts;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (s.substr(i) == "()") return Chain{};
  while (i < s.size()) {
    skip_ws();
    if (i >= s.size()) break;
    if (s[i] != '(') throw InvalidArgument("expected '(' in chain text");
    size_t close = s.find(')', i);
    size_t comma = s.find(',', i);
    if (close == std::string::npos || comma == std::string::npos || comma > close)
      throw InvalidArgument("malformed transposition in chain text");
    int a = std::stoi(s.substr(i + 1, comma - i - 1));
    int b = std::stoi(s.substr(comma + 1, close - comma - 1));
    ts.emplace_back(a, b);
    i = close + 1;
  }
  return validate(std::move(ts));
}

bool chain_listing_less(const Chain& x, const Chain& y) {
  auto lx = x.labels(), ly = y.labels();
  if (lx != ly) return lx < ly;
  return x.transpositions() < y.transpositions();
}

Chain reverse_chain(const Chain& c) {
  std::vector<Transposition> ts(c.transpositions().rbegin(),
                                c.transpositions().rend());
  return Chain::trusted(std::move(ts));
}

namespace {

// The three substitution rules, as window rewrites.  Products are preserved;
// validity of the result is re-checked by the caller as a tripwire.
std::optional<std::array<Transposition, 3>> rewrite3(SubstitutionKind kind,
                                                     const Transposition& t1,
                                                     const Transposition& t2,
                                                     const Transposition& t3) {
  if (kind == SubstitutionKind::R1) {
    // (t_bc, t_cd, t_ac) <-> (t_bd, t_ab, t_bc), a<b<c<d
    if (t1.b == t2.a && t2.a == t3.b && t3.a < t1.a) {
      int a = t3.a, b = t1.a, c = t1.b, d = t2.b;
      return std::array<Transposition, 3>{Transposition(b, d),
                                          Transposition(a, b),
                                          Transposition(b, c)};
    }
    if (t1.a == t2.b && t1.a == t3.a && t3.b < t1.b) {
      int a = t2.a, b = t1.a, c = t3.b, d = t1.b;
      return std::array<Transposition, 3>{Transposition(b, c),
                                          Transposition(c, d),
                                          Transposition(a, c)};
    }
  } else if (kind == SubstitutionKind::R2) {
    // (t_ac, t_cd, t_bc) <-> (t_bc, t_ab, t_bd), a<b<c<d
    if (t1.b == t2.a && t2.a == t3.b && t1.a < t3.a) {
      int a = t1.a, b = t3.a, c = t1.b, d = t2.b;
      return std::array<Transposition, 3>{Transposition(b, c),
                                          Transposition(a, b),
                                          Transposition(b, d)};
    }
    if (t1.a == t2.b && t1.a == t3.a && t1.b < t3.b) {
      int a = t2.a, b = t1.a, c = t1.b, d = t3.b;
      return std::array<Transposition, 3>{Transposition(a, c),
                                          Transposition(c, d),
                                          Transposition(b, c)};
    }
  }
  return std::nullopt;
}

}  // namespace

Chain apply_substitution(const Chain& c, SubstitutionKind kind, size_t pos) {
  auto ts = c.transpositions();
  if (kind == SubstitutionKind::Commute) {
    if (pos + 2 > ts.size()) throw PatternMismatch("window out of range");
    if (!transpositions_disjoint(ts[pos], ts[pos + 1]))
      throw PatternMismatch("pair is not disjoint");
    std::swap(ts[pos], ts[pos + 1]);
  } else {
    if (pos + 3 > ts.size()) throw PatternMismatch("window out of range");
    auto r = rewrite3(kind, ts[pos], ts[pos + 1], ts[pos + 2]);
    if (!r) throw PatternMismatch("window does not match the rule");
    ts[pos] = (*r)[0];
    ts[pos + 1] = (*r)[1];
    ts[pos + 2] = (*r)[2];
  }
  return Chain::validate(std::move(ts));
}

bool prohibited(const std::vector<Transposition>& w) {
  if (w.size() == 2) {
    // t_ag then t_bd or t_bd then t_ag with a <= b < g <= d
    const auto& s = w[0];
    const auto& t = w[1];
    return (s.a <= t.a && t.a < s.b && s.b <= t.b) ||
           (t.a <= s.a && s.a < t.b && t.b <= s.b);
  }
  if (w.size() == 3) {
    // (t_bg, t_ab, t_bg) or (t_ab, t_bg, t_ab), a<b<g
    return w[0] == w[2] && (w[1].b == w[0].a || w[1].a == w[0].b);
  }
  throw InvalidArgument("prohibited() takes a window of 2 or 3");
}

std::vector<Chain> enumerate_interval_chains(const Permutation& zeta) {
  std::vector<int> pts = zeta.support();
  std::vector<Chain> out;
  std::vector<Transposition> acc;

  auto rec = [&](auto&& self, const Permutation& eta) -> void {
    if (eta == zeta) {
      out.push_back(Chain::trusted(acc));
      return;
    }
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j) {
        Permutation z2 =
            compose(Permutation::transposition(pts[i], pts[j]), eta);
        if (gb_leq(eta, z2) && gb_leq(z2, zeta)) {
          acc.emplace_back(pts[i], pts[j]);
          self(self, z2);
          acc.pop_back();
        }
      }
  };
  rec(rec, Permutation{});
  std::sort(out.begin(), out.end(), chain_listing_less);
  return out;
}

// ---------------------------------------------------------------------------
// Canonical enumeration.  States are chains over a support that is exactly
// {1..s}; extending may insert one or two fresh points into gaps, relabeling
// the prefix upward.  Every relabeling class is reached exactly once.

namespace {

constexpr int kMaxPt = 16;
using Img = std::array<uint8_t, kMaxPt + 1>;

struct Ext {
  uint8_t a, b, nnew, g1, g2;
};

// candidate extensions over current support {1..s}: transpositions using 0,
// 1, or 2 fresh points, fresh points placed in gaps g (between g and g+1)
const std::vector<Ext>& extensions_for(int s) {
  static std::array<std::vector<Ext>, kMaxPt + 1> cache;
  static std::array<bool, kMaxPt + 1> ready{};
  if (!ready[s]) {
    std::vector<Ext> v;
    for (int a = 1; a <= s; ++a)
      for (int b = a + 1; b <= s; ++b)
        v.push_back({static_cast<uint8_t>(a), static_cast<uint8_t>(b), 0, 0, 0});
    for (int p = 1; p <= s; ++p)
      for (int g = 0; g <= s; ++g) {
        int a = (g < p) ? g + 1 : p;
        int b = (g < p) ? p + 1 : g + 1;
        v.push_back({static_cast<uint8_t>(a), static_cast<uint8_t>(b), 1,
                     static_cast<uint8_t>(g), 0});
      }
    for (int g1 = 0; g1 <= s; ++g1)
      for (int g2 = g1; g2 <= s; ++g2) {
        int a = g1 + 1;
        int b = (g1 == g2) ? g1 + 2 : g2 + 2;
        v.push_back({static_cast<uint8_t>(a), static_cast<uint8_t>(b), 2,
                     static_cast<uint8_t>(g1), static_cast<uint8_t>(g2)});
      }
    std::sort(v.begin(), v.end(), [](const Ext& x, const Ext& y) {
      return std::tie(x.a, x.b, x.nnew, x.g1, x.g2) <
             std::tie(y.a, y.b, y.nnew, y.g1, y.g2);
    });
    cache[s] = std::move(v);
    ready[s] = true;
  }
  return cache[s];
}

inline int bump(int v, const Ext& e) {
  if (e.nnew == 0) return v;
  int r = v + (v > e.g1 ? 1 : 0);
  if (e.nnew == 2) r += (v > e.g2 ? 1 : 0);
  return r;
}

// is eta -> t_ab * eta a GB cover?  dense over points 1..m
bool dense_cover_ok(const Img& eta, int a, int b, int m) {
  Img zeta;
  for (int x = 1; x <= m; ++x) {
    int y = eta[x];
    zeta[x] = static_cast<uint8_t>(y == a ? b : y == b ? a : y);
  }
  int up[kMaxPt], dw[kMaxPt], nu = 0, nd = 0;
  for (int x = 1; x <= m; ++x) {
    if (zeta[x] == x) {
      if (eta[x] != x) return false;  // support must not grow
      continue;
    }
    if (x < zeta[x]) {
      if (eta[x] < x || eta[x] > zeta[x]) return false;
      up[nu++] = x;
    } else {
      if (eta[x] > x || eta[x] < zeta[x]) return false;
      dw[nd++] = x;
    }
  }
  for (int i = 0; i < nu; ++i)
    for (int j = i + 1; j < nu; ++j)
      if (zeta[up[i]] < zeta[up[j]] && eta[up[i]] >= eta[up[j]]) return false;
  for (int i = 0; i < nd; ++i)
    for (int j = i + 1; j < nd; ++j)
      if (zeta[dw[i]] < zeta[dw[j]] && eta[dw[i]] >= eta[dw[j]]) return false;
  return true;
}

struct Node {
  std::vector<std::pair<uint8_t, uint8_t>> prefix;
  Img eta;
  int s;
};

Node root_node() {
  Node r;
  for (int i = 0; i <= kMaxPt; ++i) r.eta[i] = static_cast<uint8_t>(i);
  r.s = 0;
  return r;
}

template <typename Visit>
void expand(const Node& nd, int n, Visit&& visit) {
  const int maxpt = 2 * n;
  for (const Ext& e : extensions_for(nd.s)) {
    int s2 = nd.s + e.nnew;
    if (s2 > maxpt) continue;
    Img eta2;
    for (int i = 0; i <= kMaxPt; ++i) eta2[i] = static_cast<uint8_t>(i);
    for (int x = 1; x <= nd.s; ++x)
      if (nd.eta[x] != x)
        eta2[bump(x, e)] = static_cast<uint8_t>(bump(nd.eta[x], e));
    if (!dense_cover_ok(eta2, e.a, e.b, s2)) continue;
    Node child;
    child.prefix.reserve(nd.prefix.size() + 1);
    for (const auto& [a, b] : nd.prefix)
      child.prefix.emplace_back(static_cast<uint8_t>(bump(a, e)),
                                static_cast<uint8_t>(bump(b, e)));
    child.prefix.emplace_back(e.a, e.b);
    for (int x = 1; x <= s2; ++x) {
      int y = eta2[x];
      child.eta[x] = static_cast<uint8_t>(y == e.a ? e.b : y == e.b ? e.a : y);
    }
    for (int x = s2 + 1; x <= kMaxPt; ++x) child.eta[x] = static_cast<uint8_t>(x);
    child.s = s2;
    visit(std::move(child));
  }
}

Chain node_chain(const Node& nd) {
  std::vector<Transposition> ts;
  ts.reserve(nd.prefix.size());
  for (const auto& [a, b] : nd.prefix) ts.emplace_back(a, b);
  return Chain::trusted(std::move(ts));
}

template <typename Sink>
void dfs(Node nd, int n, int target, Sink&& sink) {
  if (static_cast<int>(nd.prefix.size()) == target) {
    sink(nd);
    return;
  }
  expand(nd, n, [&](Node child) { dfs(std::move(child), n, target, sink); });
}

// frontier at a shallow depth, in deterministic order, for work splitting
std::vector<Node> frontier_nodes(int n, int depth) {
  std::vector<Node> out;
  dfs(root_node(), n, depth, [&](const Node& nd) { out.push_back(nd); });
  return out;
}

}  // namespace

void for_each_canonical_chain(int n,
                              const std::function<void(const Chain&)>& fn,
                              int jobs) {
  if (n < 1 || 2 * n > kMaxPt) throw InvalidArgument("n out of range");
  if (jobs < 1) jobs = 1;
  const int split = std::min(n, 3);
  auto frontier = frontier_nodes(n, split);
  if (split == n) {
    for (const auto& nd : frontier) fn(node_chain(nd));
    return;
  }
  if (jobs == 1) {
    for (const auto& nd : frontier)
      dfs(nd, n, n, [&](const Node& leaf) { fn(node_chain(leaf)); });
    return;
  }
  std::vector<std::vector<Chain>> buckets(frontier.size());
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  for (int w = 0; w < jobs; ++w)
    pool.emplace_back([&] {
      for (size_t i; (i = next.fetch_add(1)) < frontier.size();)
        dfs(frontier[i], n, n,
            [&](const Node& leaf) { buckets[i].push_back(node_chain(leaf)); });
    });
  for (auto& t : pool) t.join();
  for (const auto& bucket : buckets)
    for (const auto& c : bucket) fn(c);
}

uint64_t count_canonical_chains(int n, int jobs) {
  if (n < 1 || 2 * n > kMaxPt) throw InvalidArgument("n out of range");
  if (jobs < 1) jobs = 1;
  const int split = std::min(n, 3);
  auto frontier = frontier_nodes(n, split);
  if (split == n) return frontier.size();
  std::vector<uint64_t> counts(frontier.size(), 0);
  auto work = [&](size_t i) {
    dfs(frontier[i], n, n, [&](const Node&) { ++counts[i]; });
  };
  if (jobs == 1) {
    for (size_t i = 0; i < frontier.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int w = 0; w < jobs; ++w)
      pool.emplace_back([&] {
        for (size_t i; (i = next.fetch_add(1)) < frontier.size();) work(i);
      });
    for (auto& t : pool) t.join();
  }
  uint64_t total = 0;
  for (uint64_t c : counts) total += c;
  return total;
}

std::vector<Chain> enumerate_canonical_chains(int n, int jobs) {
  std::vector<Chain> out;
  for_each_canonical_chain(n, [&](const Chain& c) { out.push_back(c); }, jobs);
  std::sort(out.begin(), out.end(), chain_listing_less);
  return out;
}

bool is_disjoint_chain(const Chain& c) {
  const auto& ts = c.transpositions();
  for (size_t i = 0; i < ts.size(); ++i)
    for (size_t j = i + 1; j < ts.size(); ++j)
      if (!transpositions_disjoint(ts[i], ts[j])) return false;
  return true;
}

std::vector<Chain> substitution_orbit(
    const Chain& c,
    std::vector<std::tuple<size_t, size_t, SubstitutionKind>>* edges) {
  std::set<Chain> seen{c};
  std::vector<Chain> queue{c};
  std::set<std::tuple<Chain, Chain, SubstitutionKind>> raw_edges;
  while (!queue.empty()) {
    Chain cur = std::move(queue.back());
    queue.pop_back();
    size_t len = cur.length();
    for (SubstitutionKind kind : {SubstitutionKind::R1, SubstitutionKind::R2,
                                  SubstitutionKind::Commute}) {
      size_t width = kind == SubstitutionKind::Commute ? 2 : 3;
      if (len < width) continue;
      for (size_t pos = 0; pos + width <= len; ++pos) {
        Chain img;
        try {
          img = apply_substitution(cur, kind, pos);
        } catch (const PatternMismatch&) {
          continue;
        }
        if (edges) {
          auto lo = std::min(cur, img), hi = std::max(cur, img);
          raw_edges.emplace(lo, hi, kind);
        }
        if (seen.insert(img).second) queue.push_back(img);
      }
    }
  }
  std::vector<Chain> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), chain_listing_less);
  if (edges) {
    std::map<Chain, size_t> index;
    for (size_t i = 0; i < out.size(); ++i) index[out[i]] = i;
    for (const auto& [x, y, kind] : raw_edges)
      edges->emplace_back(index[x], index[y], kind);
  }
  return out;
}

bool substitution_closure_clean(const std::vector<Transposition>& ts) {
  auto scan = [](const std::vector<Transposition>& w) {
    for (size_t i = 0; i + 2 <= w.size(); ++i)
      if (prohibited({w[i], w[i + 1]})) return true;
    for (size_t i = 0; i + 3 <= w.size(); ++i)
      if (prohibited({w[i], w[i + 1], w[i + 2]})) return true;
    return false;
  };
  std::set<std::vector<Transposition>> seen{ts};
  std::vector<std::vector<Transposition>> queue{ts};
  while (!queue.empty()) {
    auto cur = std::move(queue.back());
    queue.pop_back();
    if (scan(cur)) return false;
    // formal rewrites, no validity checking: this is the point of the oracle
    for (size_t pos = 0; pos + 2 <= cur.size(); ++pos) {
      if (transpositions_disjoint(cur[pos], cur[pos + 1])) {
        auto next = cur;
        std::swap(next[pos], next[pos + 1]);
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
    for (auto kind : {SubstitutionKind::R1, SubstitutionKind::R2})
      for (size_t pos = 0; pos + 3 <= cur.size(); ++pos) {
        auto r = rewrite3(kind, cur[pos], cur[pos + 1], cur[pos + 2]);
        if (!r) continue;
        auto next = cur;
        next[pos] = (*r)[0];
        next[pos + 1] = (*r)[1];
        next[pos + 2] = (*r)[2];
        if (seen.insert(next).second) queue.push_back(next);
      }
  }
  return true;
}

}  // namespace gbdq
