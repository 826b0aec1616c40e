#include "perm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace gbdq {

Permutation Permutation::from_pairs(std::vector<std::pair<int, int>> pairs) {
  std::erase_if(pairs, [](const auto& kv) { return kv.first == kv.second; });
  std::sort(pairs.begin(), pairs.end());
  Permutation p;
  std::set<int> images;
  for (const auto& [x, y] : pairs) {
    if (x <= 0 || y <= 0) throw InvalidArgument("points must be positive");
    if (!p.table_.empty() && p.table_.back().first == x)
      throw InvalidArgument("duplicate point in permutation table");
    if (!images.insert(y).second)
      throw InvalidArgument("duplicate image in permutation table");
    p.table_.emplace_back(x, y);
  }
  for (const auto& [x, y] : p.table_)
    if (!images.count(x))
      throw InvalidArgument("permutation table is not a bijection");
  return p;
}

Permutation Permutation::from_cycles(
    const std::vector<std::vector<int>>& cycles) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& cyc : cycles) {
    std::set<int> distinct(cyc.begin(), cyc.end());
    if (distinct.size() != cyc.size())
      throw InvalidArgument("repeated point in a cycle");
    for (size_t i = 0; i < cyc.size(); ++i)
      pairs.emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);
  }
  return from_pairs(std::move(pairs));
}

Permutation Permutation::from_one_line(const std::vector<int>& values) {
  std::vector<std::pair<int, int>> pairs;
  for (size_t i = 0; i < values.size(); ++i)
    pairs.emplace_back(static_cast<int>(i) + 1, values[i]);
  return from_pairs(std::move(pairs));
}

Permutation Permutation::transposition(int a, int b) {
  if (a >= b) throw InvalidArgument("transposition needs a < b");
  return from_pairs({{a, b}, {b, a}});
}

int Permutation::apply(int x) const {
  auto it = std::lower_bound(table_.begin(), table_.end(),
                             std::make_pair(x, 0));
  if (it != table_.end() && it->first == x) return it->second;
  return x;
}

Permutation Permutation::inverse() const {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(table_.size());
  for (const auto& [x, y] : table_) pairs.emplace_back(y, x);
  return from_pairs(std::move(pairs));
}

std::vector<int> Permutation::support() const {
  std::vector<int> s;
  s.reserve(table_.size());
  for (const auto& [x, y] : table_) s.push_back(x);
  return s;
}

std::vector<int> Permutation::one_line(int m) const {
  if (m == 0) m = max_point();
  std::vector<int> w(m);
  for (int i = 1; i <= m; ++i) {
    int y = apply(i);
    if (y > m) throw InvalidArgument("one_line window too small");
    w[i - 1] = y;
  }
  return w;
}

std::string Permutation::cycle_string() const {
  if (is_identity()) return "e";
  auto sup = support();
  std::set<int> left(sup.begin(), sup.end());
  std::string out;
  while (!left.empty()) {
    int start = *left.begin();
    out += '(';
    int x = start;
    do {
      left.erase(x);
      if (x != start) out += ',';
      out += std::to_string(x);
      x = apply(x);
    } while (x != start);
    out += ')';
  }
  return out;
}

std::string Permutation::one_line_string() const {
  auto w = one_line();
  bool wide = max_point() > 9;
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (wide && i) out += ',';
    out += std::to_string(w[i]);
  }
  return out.empty() ? "e" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  std::set<int> pts;
  for (const auto& [x, y] : p.moved()) pts.insert(x);
  for (const auto& [x, y] : q.moved()) pts.insert(x);
  std::vector<std::pair<int, int>> pairs;
  for (int x : pts) pairs.emplace_back(x, p.apply(q.apply(x)));
  return Permutation::from_pairs(std::move(pairs));
}

long inversion_length(const Permutation& p) {
  auto w = p.one_line();
  long inv = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

std::pair<std::vector<int>, std::vector<int>> up_down_sets(
    const Permutation& z) {
  std::vector<int> up, dw;
  for (const auto& [x, y] : z.moved()) (x < y ? up : dw).push_back(x);
  return {up, dw};
}

bool gb_leq(const Permutation& eta, const Permutation& zeta) {
  // Support containment first: points fixed by zeta must be fixed by eta,
  // otherwise the monotonicity conditions below are vacuous off-support and
  // the relation would not be antisymmetric.
  for (const auto& [x, y] : eta.moved())
    if (zeta.apply(x) == x) return false;

  auto [up, dw] = up_down_sets(zeta);
  for (int a : up) {
    int e = eta.apply(a);
    if (e < a || e > zeta.apply(a)) return false;
  }
  for (int b : dw) {
    int e = eta.apply(b);
    if (e > b || e < zeta.apply(b)) return false;
  }
  // relative order within up (resp. dw) is preserved where zeta increases
  for (const auto* side : {&up, &dw}) {
    const auto& v = *side;
    for (size_t i = 0; i < v.size(); ++i)
      for (size_t j = i + 1; j < v.size(); ++j)
        if (zeta.apply(v[i]) < zeta.apply(v[j]) &&
            eta.apply(v[i]) >= eta.apply(v[j]))
          return false;
  }
  return true;
}

std::optional<int> gb_cover(const Permutation& eta, const Permutation& zeta) {
  Permutation d = compose(zeta, eta.inverse());
  const auto& t = d.moved();
  if (t.size() != 2) return std::nullopt;
  if (!gb_leq(eta, zeta)) return std::nullopt;
  return t.back().first;  // the larger of the two swapped points
}

std::optional<int> k_bruhat_cover(const Permutation& u, const Permutation& w,
                                  int k) {
  if (k <= 0) return std::nullopt;
  Permutation d = compose(w, u.inverse());  // left quotient: w = t_{ab} u
  const auto& t = d.moved();
  if (t.size() != 2) return std::nullopt;
  if (inversion_length(w) != inversion_length(u) + 1) return std::nullopt;
  int a = t.front().first, b = t.back().first;
  int i = u.inverse().apply(a), j = u.inverse().apply(b);
  if (std::min(i, j) > k || std::max(i, j) <= k) return std::nullopt;
  return b;
}

Permutation relabel(const Permutation& p, const std::vector<int>& points) {
  for (size_t i = 1; i < points.size(); ++i)
    if (points[i] <= points[i - 1])
      throw InvalidArgument("relabel points must be strictly increasing");
  int m = p.max_point();
  if (m > static_cast<int>(points.size()))
    throw InvalidArgument("relabel needs at least max_point(p) points");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [x, y] : p.moved())
    pairs.emplace_back(points[x - 1], points[y - 1]);
  return Permutation::from_pairs(std::move(pairs));
}

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  size_t i = 0;
  while (i < s.size()) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw InvalidArgument("expected digit in '" + s + "'");
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    out.push_back(std::stoi(s.substr(i, j - i)));
    i = j;
    if (i < s.size()) {
      if (s[i] != ',' && s[i] != ' ')
        throw InvalidArgument("expected separator in '" + s + "'");
      ++i;
    }
  }
  return out;
}

}  // namespace

Permutation parse_permutation(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw InvalidArgument("empty permutation text");
  if (s == "e" || s == "()") return {};

  if (s[0] == '(') {
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    while (i < s.size()) {
      if (s[i] != '(') throw InvalidArgument("expected '(' in cycles");
      size_t close = s.find(')', i);
      if (close == std::string::npos)
        throw InvalidArgument("unbalanced parentheses");
      cycles.push_back(parse_int_list(s.substr(i + 1, close - i - 1)));
      i = close + 1;
    }
    return Permutation::from_cycles(cycles);
  }

  // one-line: compact digits like "145326", or comma separated when any
  // value has two or more digits
  if (s.find(',') == std::string::npos) {
    std::vector<int> vals;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw InvalidArgument("bad character in one-line input");
      vals.push_back(c - '0');
    }
    return Permutation::from_one_line(vals);
  }
  return Permutation::from_one_line(parse_int_list(s));
}

}  // namespace gbdq
