#include "tableaux.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>

namespace gbdq {

bool is_partition(const Partition& lam) {
  for (size_t i = 0; i < lam.size(); ++i) {
    if (lam[i] <= 0) return false;
    if (i > 0 && lam[i] > lam[i - 1]) return false;
  }
  return true;
}

int partition_size(const Partition& lam) {
  return std::accumulate(lam.begin(), lam.end(), 0);
}

Partition conjugate(const Partition& lam) {
  Partition out;
  if (lam.empty()) return out;
  out.resize(lam[0]);
  for (int part : lam)
    for (int c = 0; c < part; ++c) ++out[c];
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::string partition_text(const Partition& lam) {
  std::string s = "[";
  for (size_t i = 0; i < lam.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(lam[i]);
  }
  return s + "]";
}

StandardTableau StandardTableau::from_rows(std::vector<std::vector<int>> rows) {
  int n = 0;
  for (const auto& r : rows) n += static_cast<int>(r.size());
  std::vector<bool> seen(n + 1, false);
  for (const auto& r : rows)
    for (int m : r) {
      if (m < 1 || m > n || seen[m])
        throw InvalidArgument("entries must be exactly 1..n");
      seen[m] = true;
    }
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) throw InvalidArgument("empty row");
    for (size_t c = 0; c + 1 < rows[r].size(); ++c)
      if (rows[r][c] >= rows[r][c + 1])
        throw InvalidArgument("rows must increase");
    if (r > 0) {
      if (rows[r].size() > rows[r - 1].size())
        throw InvalidArgument("row lengths must weakly decrease upward");
      for (size_t c = 0; c < rows[r].size(); ++c)
        if (rows[r][c] <= rows[r - 1][c])
          throw InvalidArgument("columns must increase upward");
    }
  }
  StandardTableau t;
  t.rows_ = std::move(rows);
  return t;
}

StandardTableau StandardTableau::trusted(std::vector<std::vector<int>> rows) {
  StandardTableau t;
  t.rows_ = std::move(rows);
  return t;
}

Partition StandardTableau::shape() const {
  Partition out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(static_cast<int>(r.size()));
  return out;
}

int StandardTableau::size() const {
  int n = 0;
  for (const auto& r : rows_) n += static_cast<int>(r.size());
  return n;
}

std::string StandardTableau::text() const {
  std::string s;
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (r) s += '/';
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) s += ',';
      s += std::to_string(rows_[r][c]);
    }
  }
  return s;
}

StandardTableau StandardTableau::parse(const std::string& s) {
  std::vector<std::vector<int>> rows(1);
  int cur = 0;
  bool have = false;
  for (char ch : s) {
    if (ch >= '0' && ch <= '9') {
      cur = cur * 10 + (ch - '0');
      have = true;
    } else if (ch == ',' || ch == '/') {
      if (!have) throw InvalidArgument("malformed tableau text");
      rows.back().push_back(cur);
      cur = 0;
      have = false;
      if (ch == '/') rows.emplace_back();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      throw InvalidArgument("malformed tableau text");
    }
  }
  if (!have) throw InvalidArgument("malformed tableau text");
  rows.back().push_back(cur);
  return from_rows(std::move(rows));
}

std::vector<StandardTableau> enumerate_syt(const Partition& lam) {
  if (!is_partition(lam)) throw InvalidArgument("not a partition");
  int n = partition_size(lam);
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> rows(lam.size());
  std::vector<int> fill(lam.size(), 0);  // filled cells per row
  auto rec = [&](auto&& self, int next) -> void {
    if (next > n) {
      out.push_back(StandardTableau::trusted(rows));
      return;
    }
    for (size_t r = 0; r < lam.size(); ++r) {
      if (fill[r] >= lam[r]) continue;
      // the cell below must already be filled
      if (r > 0 && fill[r - 1] <= fill[r]) continue;
      rows[r].push_back(next);
      ++fill[r];
      self(self, next + 1);
      --fill[r];
      rows[r].pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

uint64_t num_syt(const Partition& lam) {
  // hook length formula
  if (!is_partition(lam)) throw InvalidArgument("not a partition");
  int n = partition_size(lam);
  Partition conj = conjugate(lam);
  // product of hooks divides n! evenly only at the end, so go through
  // a factored form: multiply n! first (small n here), divide after
  unsigned long long num = 1;
  for (int i = 2; i <= n; ++i) num *= static_cast<unsigned long long>(i);
  unsigned long long den = 1;
  for (size_t r = 0; r < lam.size(); ++r)
    for (int c = 0; c < lam[r]; ++c) {
      int hook = (lam[r] - c - 1) + (conj[c] - static_cast<int>(r) - 1) + 1;
      den *= static_cast<unsigned long long>(hook);
    }
  return num / den;
}

DescentSet syt_descents(const StandardTableau& t) {
  int n = t.size();
  std::vector<int> row_of(n + 2, 0);
  const auto& rows = t.rows();
  for (size_t r = 0; r < rows.size(); ++r)
    for (int m : rows[r]) row_of[m] = static_cast<int>(r);
  DescentSet d;
  for (int i = 1; i < n; ++i)
    if (row_of[i + 1] > row_of[i]) d.add(i);
  return d;
}

std::vector<int> tableau_chain_labels(const StandardTableau& t) {
  int n = t.size();
  std::vector<int> out(n, 0);
  const auto& rows = t.rows();
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c)
      out[rows[r][c] - 1] = static_cast<int>(c) - static_cast<int>(r);
  return out;
}

StandardTableau haiman_phi(const StandardTableau& t, int i) {
  int n = t.size();
  if (i < 2 || i > n - 1) throw InvalidArgument("phi index out of range");
  DescentSet d = syt_descents(t);
  if (d.contains(i - 1) == d.contains(i)) return t;
  auto rows = t.rows();
  std::map<int, std::pair<int, int>> pos;
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c)
      pos[rows[r][c]] = {static_cast<int>(r), static_cast<int>(c)};
  auto dist = [&](int x, int y) {
    auto [rx, cx] = pos[x];
    auto [ry, cy] = pos[y];
    return std::abs(rx - ry) + std::abs(cx - cy);
  };
  int j = dist(i, i - 1) > dist(i, i + 1) ? i - 1 : i + 1;
  auto [ri, ci] = pos[i];
  auto [rj, cj] = pos[j];
  rows[ri][ci] = j;
  rows[rj][cj] = i;
  return StandardTableau::trusted(std::move(rows));
}

}  // namespace gbdq
