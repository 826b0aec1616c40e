#include "qsym.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace gbdq {

int64_t QSymFunction::coefficient(const DescentSet& d) const {
  auto it = coef_.find(d);
  return it == coef_.end() ? 0 : it->second;
}

void QSymFunction::add(const DescentSet& d, int64_t c) {
  if (!d.empty() && *std::max_element(d.elements().begin(),
                                      d.elements().end()) >= n_)
    throw InvalidArgument("descent out of range for degree");
  auto it = coef_.try_emplace(d, 0).first;
  it->second += c;
  if (it->second == 0) coef_.erase(it);
}

QSymFunction& QSymFunction::operator+=(const QSymFunction& other) {
  if (other.n_ != n_) throw InvalidArgument("degree mismatch");
  for (const auto& [d, c] : other.coef_) add(d, c);
  return *this;
}

QSymFunction QSymFunction::operator-(const QSymFunction& other) const {
  if (other.n_ != n_) throw InvalidArgument("degree mismatch");
  QSymFunction out = *this;
  for (const auto& [d, c] : other.coef_) out.add(d, -c);
  return out;
}

std::string QSymFunction::text() const {
  if (coef_.empty()) return "0";
  std::string s;
  for (const auto& [d, c] : coef_) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    int64_t a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a) + "*";
    s += "Q" + d.to_string();
  }
  return s;
}

int64_t SchurExpansion::coefficient(const Partition& lam) const {
  auto it = coef_.find(lam);
  return it == coef_.end() ? 0 : it->second;
}

void SchurExpansion::add(const Partition& lam, int64_t c) {
  if (partition_size(lam) != n_)
    throw InvalidArgument("partition size must equal degree");
  auto it = coef_.try_emplace(lam, 0).first;
  it->second += c;
  if (it->second == 0) coef_.erase(it);
}

bool SchurExpansion::nonnegative() const {
  for (const auto& [lam, c] : coef_)
    if (c < 0) return false;
  return true;
}

std::string SchurExpansion::text() const {
  if (coef_.empty()) return "0";
  std::string s;
  for (const auto& [lam, c] : coef_) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    int64_t a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a) + "*";
    s += "s" + partition_text(lam);
  }
  return s;
}

QSymFunction k_of(const std::vector<DescentSet>& descents, int degree) {
  QSymFunction f(degree);
  for (const auto& d : descents) f.add(d, 1);
  return f;
}

QSymFunction schur_in_q(const Partition& lam) {
  QSymFunction f(partition_size(lam));
  for (const auto& t : enumerate_syt(lam)) f.add(syt_descents(t), 1);
  return f;
}

namespace {

// exact rationals; numbers here stay tiny
struct Frac {
  int64_t num = 0, den = 1;
  static Frac of(int64_t n) { return {n, 1}; }
  void reduce() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  Frac operator-(const Frac& o) const {
    Frac r{num * o.den - o.num * den, den * o.den};
    r.reduce();
    return r;
  }
  Frac operator*(const Frac& o) const {
    Frac r{num * o.num, den * o.den};
    r.reduce();
    return r;
  }
  Frac operator/(const Frac& o) const {
    Frac r{num * o.den, den * o.num};
    r.reduce();
    return r;
  }
  bool zero() const { return num == 0; }
};

}  // namespace

SchurResult expand_in_schur(const QSymFunction& f) {
  const int n = f.degree();
  std::vector<Partition> lams = partitions_of(n);
  std::vector<QSymFunction> basis;
  basis.reserve(lams.size());
  std::vector<DescentSet> keys;
  for (const auto& lam : lams) {
    basis.push_back(schur_in_q(lam));
    for (const auto& [d, c] : basis.back().coefficients()) keys.push_back(d);
  }
  for (const auto& [d, c] : f.coefficients()) keys.push_back(d);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  const size_t rows = keys.size(), cols = lams.size();
  std::vector<std::vector<Frac>> a(rows, std::vector<Frac>(cols));
  std::vector<Frac> y(rows);
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c)
      a[r][c] = Frac::of(basis[c].coefficient(keys[r]));
    y[r] = Frac::of(f.coefficient(keys[r]));
  }

  // gaussian elimination; the system is overdetermined and may be
  // inconsistent, which is exactly the NotSymmetric case
  std::vector<int> pivot_row(cols, -1);
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t p = row;
    while (p < rows && a[p][col].zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    std::swap(y[p], y[row]);
    Frac inv = a[row][col];
    for (size_t c = col; c < cols; ++c) a[row][c] = a[row][c] / inv;
    y[row] = y[row] / inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col].zero()) continue;
      Frac factor = a[r][col];
      for (size_t c = col; c < cols; ++c)
        a[r][c] = a[r][c] - factor * a[row][c];
      y[r] = y[r] - factor * y[row];
    }
    pivot_row[col] = static_cast<int>(row);
    ++row;
  }

  std::vector<int64_t> sol(cols, 0);
  for (size_t col = 0; col < cols; ++col) {
    if (pivot_row[col] < 0) continue;
    Frac v = y[pivot_row[col]];
    // the Schur basis is unitriangular against the fundamentals, so any
    // integer function in its span has an integer expansion
    if (v.den != 1) throw InvalidArgument("non-integral Schur expansion");
    sol[col] = v.num;
  }

  SchurExpansion exp(n);
  for (size_t col = 0; col < cols; ++col)
    if (sol[col] != 0) exp.add(lams[col], sol[col]);

  QSymFunction recon(n);
  for (size_t col = 0; col < cols; ++col)
    if (sol[col] != 0)
      for (const auto& [d, c] : basis[col].coefficients())
        recon.add(d, c * sol[col]);
  QSymFunction residual = f - recon;
  if (!residual.is_zero()) return NotSymmetric{std::move(residual)};
  return exp;
}

QSymFunction omega_q(const QSymFunction& f) {
  QSymFunction out(f.degree());
  for (const auto& [d, c] : f.coefficients())
    out.add(d.complement(f.degree()), c);
  return out;
}

QSymFunction rho_q(const QSymFunction& f) {
  QSymFunction out(f.degree());
  for (const auto& [d, c] : f.coefficients()) out.add(d.reverse(f.degree()), c);
  return out;
}

std::map<std::vector<int>, int64_t> expand_monomials(const QSymFunction& f,
                                                     int m) {
  if (m < 1) throw InvalidArgument("need at least one variable");
  const int n = f.degree();
  std::map<std::vector<int>, int64_t> out;
  std::vector<int> expv(m, 0);
  for (const auto& [d, coeff] : f.coefficients()) {
    int64_t c = coeff;
    auto rec = [&](auto&& self, int pos, int var) -> void {
      if (pos == n) {
        auto it = out.try_emplace(expv, 0).first;
        it->second += c;
        if (it->second == 0) out.erase(it);
        return;
      }
      // indices weakly increase; strictly after a descent position
      int lo = var;
      if (pos > 0 && d.contains(pos)) lo = var + 1;
      for (int v = lo; v <= m; ++v) {
        ++expv[v - 1];
        self(self, pos + 1, v);
        --expv[v - 1];
      }
    };
    if (n == 0) {
      auto it = out.try_emplace(expv, 0).first;
      it->second += c;
      if (it->second == 0) out.erase(it);
    } else {
      rec(rec, 0, 1);
    }
  }
  return out;
}

}  // namespace gbdq
