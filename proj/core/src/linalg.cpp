#include "bbs/linalg.hpp"

#include <algorithm>

#include "bbs/error.hpp"

namespace bbs {

Echelon rref(RatMatrix m) {
  Echelon out;
  if (m.empty()) return out;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    out.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

int rank(RatMatrix m) { return static_cast<int>(rref(std::move(m)).pivots.size()); }

std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error(ErrorCode::DimensionMismatch, "right-hand side has the wrong number of rows");
  const std::size_t m = n == 0 ? 0 : b.front().size();
  const std::size_t w = n + m;

  // Clear denominators row by row, then run Bareiss on the integer matrix.
  std::vector<std::vector<Integer>> aug(n, std::vector<Integer>(w));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n || b[i].size() != m) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
    Integer l = 1;
    for (const auto& q : a[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    for (const auto& q : b[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t k = 0; k < n; ++k) aug[i][k] = a[i][k].get_num() * (l / a[i][k].get_den());
    for (std::size_t k = 0; k < m; ++k) aug[i][n + k] = b[i][k].get_num() * (l / b[i][k].get_den());
  }

  Integer prev = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(aug[p], aug[c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t k = c + 1; k < w; ++k) {
        aug[i][k] = (aug[c][c] * aug[i][k] - aug[i][c] * aug[c][k]) / prev;
      }
      aug[i][c] = 0;
    }
    prev = aug[c][c];
  }

  RatMatrix x(n, RatVector(m));
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t ii = n; ii-- > 0;) {
      Rational s(aug[ii][n + k]);
      for (std::size_t j = ii + 1; j < n; ++j) s -= Rational(aug[ii][j]) * x[j][k];
      x[ii][k] = s / Rational(aug[ii][ii]);
    }
  }
  return x;
}

bool IncrementalEchelon::add(SparseRow row) {
  std::map<int, Rational> v;
  for (auto& [c, q] : row) {
    if (q != 0) v[c] += q;
  }
  while (!v.empty()) {
    auto lead = v.begin();
    if (lead->second == 0) {
      v.erase(lead);
      continue;
    }
    auto it = rows_.find(lead->first);
    if (it == rows_.end()) break;
    Rational f = lead->second;
    for (const auto& [c, q] : it->second) {
      Rational& e = v[c];
      e -= f * q;
      if (e == 0) v.erase(c);
    }
  }
  if (v.empty()) return false;
  Rational inv = 1 / v.begin()->second;
  SparseRow stored;
  stored.reserve(v.size());
  for (auto& [c, q] : v) stored.emplace_back(c, q * inv);
  int pivot = stored.front().first;
  rows_.emplace(pivot, std::move(stored));
  return true;
}

std::optional<RatVector> fourier_motzkin(const std::vector<Inequality>& system, int num_vars) {
  const std::size_t n = static_cast<std::size_t>(num_vars);
  for (const auto& q : system) {
    if (q.a.size() != n) throw Error(ErrorCode::DimensionMismatch, "inequality has the wrong width");
  }
  // levels[k] holds the system in variables 0..k (variables above k eliminated).
  std::vector<std::vector<Inequality>> levels(n);
  std::vector<Inequality> cur = system;
  for (std::size_t k = n; k-- > 0;) {
    levels[k] = cur;
    std::vector<Inequality> pos;
    std::vector<Inequality> neg;
    std::vector<Inequality> next;
    for (auto& q : cur) {
      int s = sgn(q.a[k]);
      if (s > 0) {
        pos.push_back(q);
      } else if (s < 0) {
        neg.push_back(q);
      } else {
        next.push_back(q);
      }
    }
    for (const auto& p : pos) {
      for (const auto& m : neg) {
        // p.a[k] > 0 > m.a[k]: combine to cancel variable k.
        Rational fp = -m.a[k];
        Rational fm = p.a[k];
        Inequality c{RatVector(n), fp * p.b + fm * m.b};
        for (std::size_t i = 0; i < n; ++i) c.a[i] = fp * p.a[i] + fm * m.a[i];
        c.a[k] = 0;
        next.push_back(std::move(c));
      }
    }
    // Normalize and drop duplicates to curb growth.
    for (auto& q : next) {
      Rational scale = 0;
      for (const auto& v : q.a) {
        if (v != 0) {
          scale = abs(v);
          break;
        }
      }
      if (scale != 0) {
        for (auto& v : q.a) v /= scale;
        q.b /= scale;
      }
    }
    std::sort(next.begin(), next.end(), [](const Inequality& x, const Inequality& y) {
      if (x.a != y.a) return x.a < y.a;
      return x.b > y.b;
    });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const Inequality& x, const Inequality& y) { return x.a == y.a; }),
               next.end());
    cur = std::move(next);
  }
  for (const auto& q : cur) {
    if (q.b > 0) return std::nullopt;  // 0 >= b fails
  }

  RatVector w(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    for (const auto& q : levels[k]) {
      Rational rest = q.b;
      for (std::size_t i = 0; i < k; ++i) rest -= q.a[i] * w[i];
      int s = sgn(q.a[k]);
      if (s == 0) continue;
      Rational bound = rest / q.a[k];
      if (s > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi && *lo > *hi) return std::nullopt;
    w[k] = lo ? *lo : (hi ? std::min(*hi, Rational(0)) : Rational(0));
  }
  return w;
}

}  // namespace bbs
