#include "graph.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <memory>
#include <numeric>
#include <sstream>
#include <tuple>
#include <variant>

#include "tableaux.hpp"

namespace gbdq {

namespace {

template <class Item>
struct FamilyState {
  std::vector<Item> items;
  std::vector<DescentSet> des;
  std::vector<uint32_t> order;  // indices sorted by item value
  std::vector<uint32_t> memo;   // phi images, UINT32_MAX = not yet computed
  std::function<Item(const Item&, int)> step;
  std::function<std::string(const Item&)> label;
  int n = 0;

  size_t lookup(const Item& x) const {
    auto it = std::lower_bound(
        order.begin(), order.end(), x,
        [this](uint32_t idx, const Item& value) { return items[idx] < value; });
    if (it == order.end() || !(items[*it] == x))
      throw InvalidArgument("family is not closed under the involutions");
    return *it;
  }

  size_t phi(size_t v, int i) {
    if (n < 3 || i < 2 || i > n - 1)
      throw InvalidArgument("involution index out of range");
    uint32_t& slot = memo[v * (n - 2) + (i - 2)];
    if (slot == UINT32_MAX)
      slot = static_cast<uint32_t>(lookup(step(items[v], i)));
    return slot;
  }
};

template <class Item>
DualFamily make_family(std::vector<Item> items, int n,
                       std::function<Item(const Item&, int)> step,
                       std::function<DescentSet(const Item&)> des,
                       std::function<std::string(const Item&)> label) {
  if (items.empty()) throw InvalidArgument("empty family");
  auto st = std::make_shared<FamilyState<Item>>();
  st->items = std::move(items);
  st->n = n;
  st->step = std::move(step);
  st->label = std::move(label);
  st->des.reserve(st->items.size());
  for (const Item& x : st->items) st->des.push_back(des(x));
  st->order.resize(st->items.size());
  std::iota(st->order.begin(), st->order.end(), 0u);
  std::sort(st->order.begin(), st->order.end(), [&](uint32_t a, uint32_t b) {
    return st->items[a] < st->items[b];
  });
  for (size_t k = 1; k < st->order.size(); ++k)
    if (st->items[st->order[k - 1]] == st->items[st->order[k]])
      throw InvalidArgument("family contains duplicates");
  st->memo.assign(st->items.size() * std::max(0, n - 2), UINT32_MAX);

  DualFamily fam;
  fam.n = n;
  fam.size = st->items.size();
  fam.des = [st](size_t v) { return st->des[v]; };
  fam.phi = [st](size_t v, int i) { return st->phi(v, i); };
  fam.name = [st](size_t v) { return st->label(st->items[v]); };
  return fam;
}

uint32_t window_mask(int lo, int hi, int n) {
  uint32_t m = 0;
  for (int p = std::max(1, lo); p <= std::min(n - 1, hi); ++p) m |= 1u << p;
  return m;
}

DescentSet restrict_descents(const DescentSet& d, int lo, int hi) {
  // keep [lo-1, hi], shift down by lo-2
  DescentSet out;
  for (int e : d.elements())
    if (e >= lo - 1 && e <= hi) out.add(e - (lo - 2));
  return out;
}

struct UnionFind {
  std::vector<uint32_t> parent;
  explicit UnionFind(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  uint32_t find(uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

using RawEdge = std::tuple<uint32_t, uint32_t, uint8_t>;

void append_u32(std::string& s, uint32_t x) {
  for (int k = 0; k < 4; ++k) s.push_back(static_cast<char>((x >> (8 * k)) & 0xff));
}

GraphCertificate certificate_raw(int n, const std::vector<DescentSet>& des,
                                 const std::vector<RawEdge>& edges) {
  size_t nv = des.size();
  std::vector<std::vector<std::pair<uint32_t, uint8_t>>> adj(nv);
  for (const auto& [u, v, c] : edges) {
    adj[u].push_back({v, c});
    adj[v].push_back({u, c});
  }

  // color refinement from descent sets
  std::vector<uint64_t> col(nv);
  {
    std::vector<uint32_t> vals;
    vals.reserve(nv);
    for (const auto& d : des) vals.push_back(d.bits());
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    for (size_t v = 0; v < nv; ++v)
      col[v] = static_cast<uint64_t>(
          std::lower_bound(vals.begin(), vals.end(), des[v].bits()) -
          vals.begin());
  }
  size_t nclasses = 0;
  {
    std::vector<uint64_t> tmp(col);
    std::sort(tmp.begin(), tmp.end());
    nclasses = std::unique(tmp.begin(), tmp.end()) - tmp.begin();
  }
  while (true) {
    using Sig = std::pair<uint64_t, std::vector<std::pair<uint8_t, uint64_t>>>;
    std::vector<Sig> sig(nv);
    for (size_t v = 0; v < nv; ++v) {
      std::vector<std::pair<uint8_t, uint64_t>> nb;
      nb.reserve(adj[v].size());
      for (const auto& [w, c] : adj[v]) nb.push_back({c, col[w]});
      std::sort(nb.begin(), nb.end());
      sig[v] = {col[v], std::move(nb)};
    }
    std::vector<Sig> vals(sig);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    for (size_t v = 0; v < nv; ++v)
      col[v] = static_cast<uint64_t>(
          std::lower_bound(vals.begin(), vals.end(), sig[v]) - vals.begin());
    if (vals.size() == nclasses) break;
    nclasses = vals.size();
  }

  // canonical labeling: try every ordering within each refinement class
  std::map<uint64_t, std::vector<uint32_t>> classes;
  for (size_t v = 0; v < nv; ++v)
    classes[col[v]].push_back(static_cast<uint32_t>(v));
  uint64_t work = 1;
  for (auto& [key, members] : classes) {
    (void)key;
    for (size_t k = 2; k <= members.size(); ++k) {
      work *= k;
      if (work > 1000000)
        throw InvalidArgument("certificate search space too large");
    }
  }

  using Encoding = std::pair<std::vector<uint32_t>, std::vector<RawEdge>>;
  Encoding best;
  bool have_best = false;
  std::vector<uint32_t> perm;
  perm.reserve(nv);
  std::vector<std::map<uint64_t, std::vector<uint32_t>>::iterator> order;
  for (auto it = classes.begin(); it != classes.end(); ++it) order.push_back(it);

  std::vector<uint32_t> pos(nv);
  auto leaf = [&]() {
    for (size_t k = 0; k < nv; ++k) pos[perm[k]] = static_cast<uint32_t>(k);
    Encoding e;
    e.first.reserve(nv);
    for (uint32_t v : perm) e.first.push_back(des[v].bits());
    e.second.reserve(edges.size());
    for (const auto& [u, v, c] : edges)
      e.second.push_back({std::min(pos[u], pos[v]), std::max(pos[u], pos[v]), c});
    std::sort(e.second.begin(), e.second.end());
    if (!have_best || e < best) {
      best = std::move(e);
      have_best = true;
    }
  };
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == order.size()) {
      leaf();
      return;
    }
    std::vector<uint32_t> members = order[k]->second;
    std::sort(members.begin(), members.end());
    do {
      size_t mark = perm.size();
      perm.insert(perm.end(), members.begin(), members.end());
      rec(k + 1);
      perm.resize(mark);
    } while (std::next_permutation(members.begin(), members.end()));
  };
  rec(0);

  std::string out;
  out.push_back(static_cast<char>(n));
  append_u32(out, static_cast<uint32_t>(nv));
  for (uint32_t bits : best.first) append_u32(out, bits);
  append_u32(out, static_cast<uint32_t>(best.second.size()));
  for (const auto& [u, v, c] : best.second) {
    append_u32(out, u);
    append_u32(out, v);
    out.push_back(static_cast<char>(c));
  }
  return out;
}

std::vector<RawEdge> raw_edges(const ColoredGraph& g) {
  std::vector<RawEdge> out;
  out.reserve(g.edges().size());
  for (const auto& e : g.edges()) out.push_back({e.u, e.v, e.color});
  return out;
}

}  // namespace

DualFamily chain_family(std::vector<Chain> chains, PhiProvider provider) {
  if (chains.empty()) throw InvalidArgument("empty chain set");
  size_t len = chains.front().length();
  for (const Chain& c : chains)
    if (c.length() != len)
      throw MixedLengths("chain set mixes lengths " +
                         std::to_string(len) + " and " +
                         std::to_string(c.length()));
  return make_family<Chain>(
      std::move(chains), static_cast<int>(len),
      [provider = std::move(provider)](const Chain& c, int i) {
        return provider(c, i).chain;
      },
      [](const Chain& c) { return c.descents(); },
      [](const Chain& c) { return c.text(); });
}

DualFamily syt_family(const Partition& shape) {
  return make_family<StandardTableau>(
      enumerate_syt(shape), partition_size(shape),
      [](const StandardTableau& t, int i) { return haiman_phi(t, i); },
      [](const StandardTableau& t) { return syt_descents(t); },
      [](const StandardTableau& t) { return t.text(); });
}

DualFamily reversed_family(const DualFamily& fam) {
  DualFamily out = fam;
  out.des = [inner = fam.des, n = fam.n](size_t v) {
    return inner(v).reverse(n);
  };
  out.phi = [inner = fam.phi, n = fam.n](size_t v, int i) {
    return inner(v, n + 1 - i);
  };
  return out;
}

ColoredGraph ColoredGraph::assemble(int n, std::vector<DescentSet> des,
                                    std::vector<ColoredEdge> edges,
                                    std::vector<Chain> chains,
                                    std::vector<std::string> names) {
  ColoredGraph g;
  g.n_ = n;
  g.des_ = std::move(des);
  g.edges_ = std::move(edges);
  g.chains_ = std::move(chains);
  g.names_ = std::move(names);
  for (const auto& e : g.edges_) {
    if (e.u >= e.v || e.v >= g.des_.size() || e.color < 2 ||
        static_cast<int>(e.color) > n - 1)
      throw InvalidArgument("malformed colored edge");
  }
  if (!g.chains_.empty() && g.chains_.size() != g.des_.size())
    throw InvalidArgument("chain list does not match vertex count");
  if (!g.names_.empty() && g.names_.size() != g.des_.size())
    throw InvalidArgument("name list does not match vertex count");
  std::sort(g.edges_.begin(), g.edges_.end());
  return g;
}

ColoredGraph ColoredGraph::build(std::vector<Chain> chains,
                                 const PhiProvider& provider) {
  if (chains.empty()) throw InvalidArgument("empty chain set");
  size_t len = chains.front().length();
  for (const Chain& c : chains)
    if (c.length() != len)
      throw MixedLengths("chain set mixes lengths " +
                         std::to_string(len) + " and " +
                         std::to_string(c.length()));
  int n = static_cast<int>(len);

  std::vector<uint32_t> order(chains.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
    return chains[a] < chains[b];
  });
  for (size_t k = 1; k < order.size(); ++k)
    if (chains[order[k - 1]] == chains[order[k]])
      throw InvalidArgument("duplicate chains");
  auto lookup = [&](const Chain& c) -> uint32_t {
    auto it = std::lower_bound(order.begin(), order.end(), c,
                               [&](uint32_t idx, const Chain& value) {
                                 return chains[idx] < value;
                               });
    if (it == order.end() || !(chains[*it] == c))
      throw InvalidArgument("chain set is not closed under phi");
    return *it;
  };

  std::vector<DescentSet> des;
  des.reserve(chains.size());
  std::vector<std::string> names;
  names.reserve(chains.size());
  for (const Chain& c : chains) {
    des.push_back(c.descents());
    names.push_back(c.text());
  }

  std::set<std::tuple<uint32_t, uint32_t, uint8_t>> seen;
  std::vector<ColoredEdge> edges;
  for (uint32_t v = 0; v < chains.size(); ++v) {
    for (int i = 2; i <= n - 1; ++i) {
      PhiResult r = provider(chains[v], i);
      if (r.chain == chains[v]) continue;
      uint32_t w = lookup(r.chain);
      uint32_t a = std::min(v, w), b = std::max(v, w);
      if (seen.insert({a, b, static_cast<uint8_t>(i)}).second)
        edges.push_back({a, b, static_cast<uint8_t>(i), r.rule});
    }
  }
  return assemble(n, std::move(des), std::move(edges), std::move(chains),
                  std::move(names));
}

ColoredGraph ColoredGraph::from_family(const DualFamily& fam) {
  std::vector<DescentSet> des;
  des.reserve(fam.size);
  std::vector<std::string> names;
  for (size_t v = 0; v < fam.size; ++v) des.push_back(fam.des(v));
  if (fam.name)
    for (size_t v = 0; v < fam.size; ++v) names.push_back(fam.name(v));
  std::vector<ColoredEdge> edges;
  for (size_t v = 0; v < fam.size; ++v) {
    for (int i = 2; i <= fam.n - 1; ++i) {
      size_t w = fam.phi(v, i);
      if (w > v)
        edges.push_back({static_cast<uint32_t>(v), static_cast<uint32_t>(w),
                         static_cast<uint8_t>(i), PhiRule::Untagged});
    }
  }
  return assemble(fam.n, std::move(des), std::move(edges), {},
                  std::move(names));
}

QSymFunction ColoredGraph::k_function() const { return k_of(des_, n_); }

std::vector<ColoredGraph> connected_components(const ColoredGraph& g) {
  size_t nv = g.vertex_count();
  UnionFind uf(nv);
  for (const auto& e : g.edges()) uf.unite(e.u, e.v);

  std::vector<int64_t> comp_of(nv, -1);
  std::vector<std::vector<uint32_t>> members;
  for (uint32_t v = 0; v < nv; ++v) {
    uint32_t r = uf.find(v);
    if (comp_of[r] < 0) {
      comp_of[r] = static_cast<int64_t>(members.size());
      members.push_back({});
    }
    comp_of[v] = comp_of[r];
    members[static_cast<size_t>(comp_of[v])].push_back(v);
  }

  std::vector<uint32_t> local(nv, 0);
  std::vector<ColoredGraph> out;
  out.reserve(members.size());
  for (const auto& mem : members) {
    for (uint32_t k = 0; k < mem.size(); ++k) local[mem[k]] = k;
    std::vector<DescentSet> des;
    std::vector<Chain> chains;
    std::vector<std::string> names;
    for (uint32_t v : mem) {
      des.push_back(g.descent_sets()[v]);
      if (!g.chains().empty()) chains.push_back(g.chains()[v]);
      if (!g.names().empty()) names.push_back(g.names()[v]);
    }
    std::vector<ColoredEdge> edges;
    for (const auto& e : g.edges())
      if (comp_of[e.u] == comp_of[mem[0]])
        edges.push_back({local[e.u], local[e.v], e.color, e.rule});
    out.push_back(ColoredGraph::assemble(g.degree(), std::move(des),
                                         std::move(edges), std::move(chains),
                                         std::move(names)));
  }
  return out;
}

GraphCertificate certificate(const ColoredGraph& g) {
  return certificate_raw(g.degree(), g.descent_sets(), raw_edges(g));
}

std::string certificate_hex(const GraphCertificate& c) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(c.size() * 2);
  for (unsigned char b : c) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

ColoredGraph omega_graph(const ColoredGraph& g) {
  std::vector<DescentSet> des;
  des.reserve(g.vertex_count());
  for (const auto& d : g.descent_sets()) des.push_back(d.complement(g.degree()));
  return ColoredGraph::assemble(g.degree(), std::move(des), g.edges(), {},
                                g.names());
}

ColoredGraph rho_graph(const ColoredGraph& g) {
  int n = g.degree();
  std::vector<DescentSet> des;
  des.reserve(g.vertex_count());
  for (const auto& d : g.descent_sets()) des.push_back(d.reverse(n));
  std::vector<ColoredEdge> edges;
  edges.reserve(g.edges().size());
  for (const auto& e : g.edges())
    edges.push_back({e.u, e.v, static_cast<uint8_t>(n + 1 - e.color), e.rule});
  return ColoredGraph::assemble(n, std::move(des), std::move(edges), {},
                                g.names());
}

std::set<GraphCertificate> omega_rho_orbit(const ColoredGraph& g) {
  ColoredGraph w = omega_graph(g);
  ColoredGraph r = rho_graph(g);
  ColoredGraph rw = rho_graph(w);
  return {certificate(g), certificate(w), certificate(r), certificate(rw)};
}

AxiomReport::Line& AxiomReport::line(const std::string& axiom) {
  for (auto& l : lines)
    if (l.axiom == axiom) return l;
  lines.push_back({axiom, 0, 0});
  return lines.back();
}

void AxiomReport::count(const std::string& axiom, bool ok) {
  Line& l = line(axiom);
  ++l.checked;
  if (!ok) ++l.violations;
}

void AxiomReport::witness(const std::string& axiom, std::string detail) {
  size_t have = 0;
  for (const auto& w : witnesses)
    if (w.axiom == axiom) ++have;
  if (have < kMaxWitnessesPerAxiom)
    witnesses.push_back({axiom, std::move(detail)});
}

void AxiomReport::merge(const AxiomReport& other) {
  for (const auto& l : other.lines) {
    Line& mine = line(l.axiom);
    mine.checked += l.checked;
    mine.violations += l.violations;
  }
  for (const auto& w : other.witnesses) witness(w.axiom, w.detail);
}

bool AxiomReport::all_passed() const {
  for (const auto& l : lines)
    if (l.violations) return false;
  return true;
}

std::string AxiomReport::text() const {
  std::ostringstream out;
  for (const auto& l : lines)
    out << "(" << l.axiom << ") " << l.checked << " checks, " << l.violations
        << " violations\n";
  for (const auto& w : witnesses)
    out << "  witness (" << w.axiom << "): " << w.detail << "\n";
  return out.str();
}

AxiomReport check_axioms_i_iii(const DualFamily& fam) {
  AxiomReport rep;
  int n = fam.n;
  auto name = [&](size_t v) {
    return fam.name ? fam.name(v) : "#" + std::to_string(v);
  };
  for (const char* id :
       {"i.fixed", "i.involution", "ii.a", "ii.b", "ii.c", "ii.d", "iii"})
    rep.line(id);

  for (size_t v = 0; v < fam.size; ++v) {
    DescentSet d = fam.des(v);
    for (int i = 2; i <= n - 1; ++i) {
      size_t w = fam.phi(v, i);
      bool both_or_neither = d.contains(i - 1) == d.contains(i);
      bool ok = (w == v) == both_or_neither;
      rep.count("i.fixed", ok);
      if (!ok)
        rep.witness("i.fixed", name(v) + " i=" + std::to_string(i) +
                                   " Des=" + d.to_string());
      ok = fam.phi(w, i) == v;
      rep.count("i.involution", ok);
      if (!ok)
        rep.witness("i.involution", name(v) + " i=" + std::to_string(i));
      if (w == v) continue;

      DescentSet dw = fam.des(w);
      uint32_t outside = ~window_mask(i - 2, i + 1, n);
      ok = (d.bits() & outside) == (dw.bits() & outside);
      rep.count("ii.a", ok);
      if (!ok)
        rep.witness("ii.a", name(v) + " -> " + name(w) +
                                " i=" + std::to_string(i) + " Des " +
                                d.to_string() + " vs " + dw.to_string());
      ok = d.contains(i - 1) != dw.contains(i - 1) &&
           d.contains(i) != dw.contains(i);
      rep.count("ii.b", ok);
      if (!ok)
        rep.witness("ii.b", name(v) + " -> " + name(w) +
                                " i=" + std::to_string(i) + " Des " +
                                d.to_string() + " vs " + dw.to_string());
      if (i >= 3 && d.contains(i - 2) != dw.contains(i - 2)) {
        ok = fam.phi(v, i - 1) != v;
        rep.count("ii.c", ok);
        if (!ok)
          rep.witness("ii.c", name(v) + " i=" + std::to_string(i));
      }
      if (i <= n - 2 && d.contains(i + 1) != dw.contains(i + 1)) {
        ok = fam.phi(v, i + 1) != v;
        rep.count("ii.d", ok);
        if (!ok)
          rep.witness("ii.d", name(v) + " i=" + std::to_string(i));
      }
    }
  }

  for (int i = 2; i <= n - 1; ++i) {
    for (int j = i + 3; j <= n - 1; ++j) {
      for (size_t v = 0; v < fam.size; ++v) {
        bool ok = fam.phi(fam.phi(v, i), j) == fam.phi(fam.phi(v, j), i);
        rep.count("iii", ok);
        if (!ok)
          rep.witness("iii", name(v) + " i=" + std::to_string(i) +
                                 " j=" + std::to_string(j));
      }
    }
  }
  return rep;
}

namespace {

std::vector<size_t> window_closure(const DualFamily& fam, size_t start, int lo,
                                   int hi) {
  std::vector<size_t> out{start};
  std::set<size_t> seen{start};
  for (size_t k = 0; k < out.size(); ++k) {
    for (int i = lo; i <= hi; ++i) {
      size_t w = fam.phi(out[k], i);
      if (seen.insert(w).second) out.push_back(w);
    }
  }
  return out;
}

QSymFunction restricted_q(const DualFamily& fam,
                          const std::vector<size_t>& verts, int lo, int hi) {
  QSymFunction f(hi - lo + 3);
  for (size_t v : verts) f.add(restrict_descents(fam.des(v), lo, hi), 1);
  return f;
}

}  // namespace

AxiomReport check_iv_a(const DualFamily& fam) {
  AxiomReport rep;
  rep.line("iv.a");
  int n = fam.n;
  auto name = [&](size_t v) {
    return fam.name ? fam.name(v) : "#" + std::to_string(v);
  };
  // verdict per multiset of restricted descent sets, shared across windows
  std::map<std::vector<std::pair<uint32_t, uint32_t>>,
           std::pair<bool, std::string>>
      cache;
  for (int i = 2; i <= n - 1; ++i) {
    for (int j = i + 1; j <= std::min(i + 2, n - 1); ++j) {
      UnionFind uf(fam.size);
      for (size_t v = 0; v < fam.size; ++v)
        for (int k = i; k <= j; ++k)
          uf.unite(static_cast<uint32_t>(v),
                   static_cast<uint32_t>(fam.phi(v, k)));
      std::vector<int64_t> gid(fam.size, -1);
      std::vector<std::vector<uint32_t>> groups;
      for (uint32_t v = 0; v < fam.size; ++v) {
        uint32_t r = uf.find(v);
        if (gid[r] < 0) {
          gid[r] = static_cast<int64_t>(groups.size());
          groups.push_back({});
        }
        groups[static_cast<size_t>(gid[r])].push_back(v);
      }
      for (const auto& g : groups) {
        std::map<uint32_t, uint32_t> mult;
        for (uint32_t v : g)
          ++mult[restrict_descents(fam.des(v), i, j).bits()];
        std::vector<std::pair<uint32_t, uint32_t>> key(mult.begin(),
                                                       mult.end());
        auto it = cache.find(key);
        if (it == cache.end()) {
          QSymFunction f(j - i + 3);
          for (const auto& [bits, cnt] : mult) {
            DescentSet d;
            for (int p = 1; p <= 31; ++p)
              if (bits & (1u << p)) d.add(p);
            f.add(d, cnt);
          }
          SchurResult r = expand_in_schur(f);
          bool ok = false;
          std::string txt;
          if (auto* s = std::get_if<SchurExpansion>(&r)) {
            ok = s->nonnegative();
            txt = s->text();
          } else {
            txt = "not symmetric: residual " +
                  std::get<NotSymmetric>(r).residual.text();
          }
          it = cache.emplace(std::move(key), std::make_pair(ok, txt)).first;
        }
        rep.count("iv.a", it->second.first);
        if (!it->second.first)
          rep.witness("iv.a", "window (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") class of " +
                                  name(g[0]) + ": " + it->second.second);
      }
    }
  }
  return rep;
}

AxiomReport check_iv_b(const DualFamily& fam) {
  AxiomReport rep;
  rep.line("iv.b");
  int n = fam.n;
  auto name = [&](size_t v) {
    return fam.name ? fam.name(v) : "#" + std::to_string(v);
  };
  auto fixed = [&](size_t v, int k) { return fam.phi(v, k) == v; };
  for (int i = 3; i <= n - 2; ++i) {
    for (size_t v = 0; v < fam.size; ++v) {
      size_t w = fam.phi(v, i);
      if (w <= v) continue;
      if (fixed(v, i - 1) || fixed(v, i + 1) || fixed(w, i - 1) ||
          fixed(w, i + 1))
        continue;
      QSymFunction qa =
          restricted_q(fam, window_closure(fam, v, i - 1, i), i - 1, i);
      QSymFunction qb =
          restricted_q(fam, window_closure(fam, v, i, i + 1), i, i + 1);
      bool ok = qa == qb;
      rep.count("iv.b", ok);
      if (!ok)
        rep.witness("iv.b", name(v) + " i=" + std::to_string(i) + ": " +
                                qa.text() + " vs " + qb.text());
    }
  }
  return rep;
}

namespace {

std::vector<FlatChain> flat_chain_walks(const DualFamily& fam, int i) {
  std::vector<FlatChain> out;
  if (i - 2 < 2 || i > fam.n - 1) return out;
  auto fixed = [&](size_t v, int k) { return fam.phi(v, k) == v; };
  for (size_t c1 = 0; c1 < fam.size; ++c1) {
    if (fixed(c1, i - 2) || fixed(c1, i)) continue;
    size_t c2 = fam.phi(c1, i);
    if (fixed(c2, i - 2) || fixed(c2, i)) continue;
    std::vector<size_t> chain{c1, c2};
    auto in_chain = [&](size_t x) {
      return std::find(chain.begin(), chain.end(), x) != chain.end();
    };
    while (true) {
      // connector: (phi_{i-2} phi_{i-1})^t phi_{i-2} with minimal t
      // landing on a phi_{i-1}-fixed vertex
      size_t x = fam.phi(chain.back(), i - 2);
      bool found = false;
      size_t nxt = 0;
      for (int guard = 0; guard < 1000; ++guard) {
        if (fixed(x, i - 1)) {
          nxt = x;
          found = true;
          break;
        }
        x = fam.phi(fam.phi(x, i - 1), i - 2);
        if (x == chain.back()) break;
      }
      if (!found || fixed(nxt, i - 2) || fixed(nxt, i) || in_chain(nxt)) break;
      size_t m = fam.phi(nxt, i);
      if (fixed(m, i - 2) || fixed(m, i) || in_chain(m)) break;
      chain.push_back(nxt);
      chain.push_back(m);
    }
    out.push_back({i, std::move(chain)});
  }
  return out;
}

bool is_suffix(const std::vector<size_t>& a, const std::vector<size_t>& b) {
  if (a.size() >= b.size()) return false;
  return std::equal(a.begin(), a.end(), b.end() - a.size());
}

}  // namespace

std::vector<FlatChain> enumerate_flat_chains(const DualFamily& fam, int i) {
  std::vector<FlatChain> walks = flat_chain_walks(fam, i);
  std::vector<FlatChain> out;
  for (size_t a = 0; a < walks.size(); ++a) {
    bool drop = false;
    for (size_t b = 0; b < walks.size() && !drop; ++b)
      if (a != b) {
        drop = is_suffix(walks[a].vertices, walks[b].vertices) ||
               (walks[a].vertices == walks[b].vertices && b < a);
      }
    if (!drop) out.push_back(walks[a]);
  }
  return out;
}

std::vector<std::vector<Chain>> enumerate_flat_chains(
    const std::vector<Chain>& chains, int i, const PhiProvider& provider,
    bool via_prefix_lift) {
  std::vector<std::vector<Chain>> out;
  size_t len = chains.empty() ? 0 : chains.front().length();
  if (via_prefix_lift && len >= 4 && i <= static_cast<int>(len) - 2) {
    // the involutions phi_{i-2}..phi_i never touch the final transposition,
    // so flat i-chains can be found among the length n-1 prefixes grouped by
    // that transposition
    std::map<Transposition, std::vector<Chain>> groups;
    for (const Chain& c : chains) {
      std::vector<Transposition> ts = c.transpositions();
      Transposition last = ts.back();
      ts.pop_back();
      groups[last].push_back(Chain::trusted(std::move(ts)));
    }
    for (auto& [last, prefixes] : groups) {
      DualFamily sub = chain_family(prefixes, provider);
      for (const FlatChain& fc : enumerate_flat_chains(sub, i)) {
        std::vector<Chain> lifted;
        for (size_t v : fc.vertices) {
          std::vector<Transposition> ts = prefixes[v].transpositions();
          ts.push_back(last);
          lifted.push_back(Chain::trusted(std::move(ts)));
        }
        out.push_back(std::move(lifted));
      }
    }
  } else {
    std::vector<Chain> copy = chains;
    DualFamily fam = chain_family(copy, provider);
    for (const FlatChain& fc : enumerate_flat_chains(fam, i)) {
      std::vector<Chain> members;
      for (size_t v : fc.vertices) members.push_back(copy[v]);
      out.push_back(std::move(members));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

AxiomReport check_iv_c(const DualFamily& fam) {
  AxiomReport rep;
  rep.line("iv.c");
  rep.line("iv.c.rev");
  auto run = [&rep](const DualFamily& f, const char* id) {
    auto name = [&](size_t v) {
      return f.name ? f.name(v) : "#" + std::to_string(v);
    };
    auto fixed = [&](size_t v, int k) { return f.phi(v, k) == v; };
    for (int i = 4; i <= f.n - 2; ++i) {
      for (const FlatChain& fc : flat_chain_walks(f, i)) {
        size_t r = fc.vertices.size() / 2;
        for (size_t j = 2; j < r; ++j) {
          size_t a = fc.vertices[2 * j - 2], b = fc.vertices[2 * j - 1];
          if (fixed(a, i + 1) || fixed(b, i + 1)) continue;
          bool left = true, right = true;
          for (size_t k = 0; k < 2 * j; ++k)
            if (fixed(fc.vertices[k], i + 1)) left = false;
          for (size_t k = 2 * j - 2; k < fc.vertices.size(); ++k)
            if (fixed(fc.vertices[k], i + 1)) right = false;
          bool ok = left || right;
          rep.count(id, ok);
          if (!ok)
            rep.witness(id, "flat " + std::to_string(i) + "-chain at " +
                                name(fc.vertices[0]) +
                                ", j=" + std::to_string(j));
        }
      }
    }
  };
  run(fam, "iv.c");
  run(reversed_family(fam), "iv.c.rev");
  return rep;
}

AxiomReport check_all_axioms(const DualFamily& fam) {
  AxiomReport rep = check_axioms_i_iii(fam);
  rep.merge(check_iv_a(fam));
  rep.merge(check_iv_b(fam));
  rep.merge(check_iv_c(fam));
  return rep;
}

std::pair<std::vector<DescentSet>, std::vector<DescentSet>>
reconstruct_descents(const ColoredGraph& g, size_t seed) {
  size_t nv = g.vertex_count();
  int n = g.degree();
  if (seed >= nv) throw InvalidArgument("seed out of range");
  std::vector<uint32_t> incident(nv, 0);
  std::vector<std::vector<std::pair<uint32_t, uint8_t>>> adj(nv);
  for (const auto& e : g.edges()) {
    incident[e.u] |= 1u << e.color;
    incident[e.v] |= 1u << e.color;
    adj[e.u].push_back({e.v, e.color});
    adj[e.v].push_back({e.u, e.color});
  }

  // extend a partial assignment across a vertex: position p has an edge iff
  // exactly one of p-1, p is a descent
  auto fill_up = [&](uint32_t bits, uint32_t inc, int from) {
    for (int p = from; p <= n - 1; ++p) {
      bool edge = inc & (1u << p);
      bool prev = bits & (1u << (p - 1));
      if (edge != prev) bits |= 1u << p;  // descent at p iff edge xor prev
    }
    return bits;
  };
  auto fill_down = [&](uint32_t bits, uint32_t inc, int from) {
    for (int p = from; p >= 1; --p) {
      bool edge = inc & (1u << (p + 1));
      bool next = bits & (1u << (p + 1));
      if (edge != next) bits |= 1u << p;
    }
    return bits;
  };

  constexpr uint64_t kUnset = ~0ull;
  std::vector<uint64_t> out(nv, kUnset);
  out[seed] = fill_up(1u << 1, incident[seed], 2);
  std::deque<uint32_t> queue{static_cast<uint32_t>(seed)};
  while (!queue.empty()) {
    uint32_t v = queue.front();
    queue.pop_front();
    uint32_t dv = static_cast<uint32_t>(out[v]);
    for (const auto& [w, i] : adj[v]) {
      uint32_t start = 0;
      if (!(dv & (1u << (i - 1)))) start |= 1u << (i - 1);
      if (!(dv & (1u << i))) start |= 1u << i;
      uint32_t dw = fill_up(start, incident[w], i + 1);
      dw = fill_down(dw, incident[w], i - 2);
      if (out[w] == kUnset) {
        out[w] = dw;
        queue.push_back(w);
      } else if (out[w] != dw) {
        throw InconsistentPropagation(
            "edge color " + std::to_string(int(i)) + " into vertex " +
            std::to_string(w) + " forces conflicting descents");
      }
    }
  }
  for (size_t v = 0; v < nv; ++v)
    if (out[v] == kUnset)
      throw InvalidArgument("graph is not connected: vertex " +
                            std::to_string(v) + " unreached");

  std::vector<DescentSet> a(nv), b(nv);
  for (size_t v = 0; v < nv; ++v) {
    DescentSet d;
    for (int p = 1; p <= n - 1; ++p)
      if (out[v] & (1u << p)) d.add(p);
    a[v] = d;
    b[v] = d.complement(n);
  }
  return {std::move(a), std::move(b)};
}

Census run_census(int n, int jobs) {
  std::vector<Chain> chains = enumerate_canonical_chains(n, jobs);
  Census census;
  census.n = n;
  census.chains = chains.size();
  DualFamily fam = chain_family(std::move(chains));

  UnionFind uf(fam.size);
  for (size_t v = 0; v < fam.size; ++v)
    for (int i = 2; i <= n - 1; ++i)
      uf.unite(static_cast<uint32_t>(v), static_cast<uint32_t>(fam.phi(v, i)));

  std::vector<int64_t> gid(fam.size, -1);
  std::vector<std::vector<uint32_t>> groups;
  for (uint32_t v = 0; v < fam.size; ++v) {
    uint32_t r = uf.find(v);
    if (gid[r] < 0) {
      gid[r] = static_cast<int64_t>(groups.size());
      groups.push_back({});
    }
    groups[static_cast<size_t>(gid[r])].push_back(v);
  }
  census.graphs = groups.size();

  struct ClassInfo {
    int size = 0;
    uint64_t count = 0;
    std::vector<DescentSet> des;
    std::vector<RawEdge> edges;
  };
  std::map<GraphCertificate, ClassInfo> classes;
  std::vector<uint32_t> local(fam.size, 0);
  for (const auto& mem : groups) {
    for (uint32_t k = 0; k < mem.size(); ++k) local[mem[k]] = k;
    std::vector<DescentSet> des;
    des.reserve(mem.size());
    for (uint32_t v : mem) des.push_back(fam.des(v));
    std::set<RawEdge> eset;
    for (uint32_t v : mem)
      for (int i = 2; i <= n - 1; ++i) {
        size_t w = fam.phi(v, i);
        if (w != v)
          eset.insert({std::min(local[v], local[static_cast<uint32_t>(w)]),
                       std::max(local[v], local[static_cast<uint32_t>(w)]),
                       static_cast<uint8_t>(i)});
      }
    std::vector<RawEdge> edges(eset.begin(), eset.end());
    GraphCertificate cert = certificate_raw(n, des, edges);
    ClassInfo& info = classes[cert];
    ++info.count;
    if (info.count == 1) {
      info.size = static_cast<int>(mem.size());
      info.des = std::move(des);
      info.edges = std::move(edges);
    }
  }
  census.iso_classes = classes.size();

  // orbit keys and symmetric functions, one pass per isomorphism class
  std::map<int, std::set<GraphCertificate>> orbit_keys_by_size;
  std::map<int, uint64_t> graphs_by_size, classes_by_size;
  std::map<std::vector<std::pair<uint32_t, uint32_t>>, std::string> fn_cache;
  std::set<GraphCertificate> orbit_keys;
  for (const auto& [cert, info] : classes) {
    graphs_by_size[info.size] += info.count;
    ++classes_by_size[info.size];

    std::vector<DescentSet> wdes, rdes, rwdes;
    for (const auto& d : info.des) {
      wdes.push_back(d.complement(n));
      rdes.push_back(d.reverse(n));
      rwdes.push_back(d.complement(n).reverse(n));
    }
    std::vector<RawEdge> redges;
    for (const auto& [u, v, c] : info.edges)
      redges.push_back({u, v, static_cast<uint8_t>(n + 1 - c)});
    std::sort(redges.begin(), redges.end());
    GraphCertificate key = cert;
    key = std::min(key, certificate_raw(n, wdes, info.edges));
    key = std::min(key, certificate_raw(n, rdes, redges));
    key = std::min(key, certificate_raw(n, rwdes, redges));
    orbit_keys.insert(key);
    orbit_keys_by_size[info.size].insert(key);

    CensusClass row;
    row.vertices = info.size;
    row.graphs = info.count;
    row.certificate = certificate_hex(cert);
    row.orbit_key = certificate_hex(key);
    census.classes.push_back(std::move(row));

    std::map<uint32_t, uint32_t> mult;
    for (const auto& d : info.des) ++mult[d.bits()];
    std::vector<std::pair<uint32_t, uint32_t>> fkey(mult.begin(), mult.end());
    auto it = fn_cache.find(fkey);
    if (it == fn_cache.end()) {
      QSymFunction f(n);
      for (const auto& [bits, cnt] : mult) {
        DescentSet d;
        for (int p = 1; p <= 31; ++p)
          if (bits & (1u << p)) d.add(p);
        f.add(d, cnt);
      }
      SchurResult r = expand_in_schur(f);
      std::string txt = std::holds_alternative<SchurExpansion>(r)
                            ? std::get<SchurExpansion>(r).text()
                            : "not symmetric: residual " +
                                  std::get<NotSymmetric>(r).residual.text();
      it = fn_cache.emplace(std::move(fkey), std::move(txt)).first;
    }
    census.functions[info.size].insert(it->second);
    census.classes.back().function = it->second;
  }
  census.orbits = orbit_keys.size();

  std::stable_sort(census.classes.begin(), census.classes.end(),
                   [](const CensusClass& a, const CensusClass& b) {
                     return std::tie(a.vertices, a.certificate) <
                            std::tie(b.vertices, b.certificate);
                   });

  for (const auto& [size, count] : graphs_by_size) {
    CensusRow row;
    row.vertices = size;
    row.graphs = count;
    row.iso_classes = classes_by_size[size];
    row.orbits = orbit_keys_by_size[size].size();
    row.functions = census.functions[size].size();
    census.by_size.push_back(row);
  }
  return census;
}

}  // namespace gbdq
