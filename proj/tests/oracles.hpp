#pragma once

// Brute-force reference computations used to freeze and cross-check
// expected values. Everything here works on small machine integers and
// exact rationals and deliberately shares no code with the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include <boost/rational.hpp>

namespace oracle {

using I64 = std::int64_t;
using V = std::vector<I64>;
using Q = boost::rational<I64>;

inline I64 dot(const V& a, const V& b) {
  I64 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline V minus(const V& a, const V& b) {
  V r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

/// Solves sum_i lambda_i cols[i] = v exactly; nullopt if inconsistent.
/// cols must be linearly independent.
inline std::optional<std::vector<Q>> solve(const std::vector<V>& cols,
                                           const V& v) {
  const std::size_t n = v.size(), k = cols.size();
  std::vector<std::vector<Q>> a(n, std::vector<Q>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = cols[j][i];
    a[i][k] = v[i];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivcol;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = row;
    while (p < n && a[p][c] == Q(0)) ++p;
    if (p == n) return std::nullopt;  // dependent columns
    std::swap(a[p], a[row]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || a[i][c] == Q(0)) continue;
      Q f = a[i][c] / a[row][c];
      for (std::size_t j = c; j <= k; ++j) a[i][j] -= f * a[row][j];
    }
    pivcol.push_back(c);
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (a[i][k] != Q(0)) return std::nullopt;
  std::vector<Q> lambda(k);
  for (std::size_t i = 0; i < row; ++i) lambda[pivcol[i]] = a[i][k] / a[i][pivcol[i]];
  return lambda;
}

inline std::size_t rank_of(const std::vector<V>& vs, std::size_t n) {
  std::vector<std::vector<Q>> a;
  for (const V& v : vs) a.emplace_back(v.begin(), v.end());
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == Q(0)) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      Q f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

/// Caratheodory membership: v is in cone(rays) iff it is a nonnegative
/// combination of some linearly independent subset.
inline bool in_cone(const std::vector<V>& rays, const V& v) {
  bool zero = std::all_of(v.begin(), v.end(), [](I64 x) { return x == 0; });
  if (zero) return true;
  const std::size_t m = rays.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<V> sub;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::uint64_t{1} << i)) sub.push_back(rays[i]);
    if (sub.size() > v.size()) continue;
    if (rank_of(sub, v.size()) != sub.size()) continue;
    auto lam = solve(sub, v);
    if (lam && std::all_of(lam->begin(), lam->end(), [](Q q) { return q >= Q(0); }))
      return true;
  }
  return false;
}

/// Minimal generators of cone(rays) cap Z^n: enumerate the bounding box of
/// the zonotope sum [0,1] r_i, keep points in the cone, then discard any
/// point reducible by a strictly lower point (v - w in the cone).
inline std::vector<V> hilbert_basis(const std::vector<V>& rays, std::size_t n) {
  V lo(n, 0), hi(n, 0);
  for (const V& r : rays)
    for (std::size_t j = 0; j < n; ++j) (r[j] < 0 ? lo[j] : hi[j]) += r[j];

  std::vector<V> pts;
  std::set<V> inset;
  V v = lo;
  for (;;) {
    bool zero = std::all_of(v.begin(), v.end(), [](I64 x) { return x == 0; });
    if (!zero && in_cone(rays, v)) {
      pts.push_back(v);
      inset.insert(v);
    }
    std::size_t pos = 0;
    while (pos < n) {
      if (++v[pos] <= hi[pos]) break;
      v[pos] = lo[pos];
      ++pos;
    }
    if (pos == n) break;
  }
  auto in_box = [&](const V& x) {
    for (std::size_t j = 0; j < n; ++j)
      if (x[j] < lo[j] || x[j] > hi[j]) return false;
    return true;
  };
  std::vector<V> basis;
  for (const V& p : pts) {
    bool reducible = false;
    for (const V& w : pts) {
      if (w == p) continue;
      V d = minus(p, w);
      if (std::all_of(d.begin(), d.end(), [](I64 x) { return x == 0; })) continue;
      if (in_box(d) ? inset.count(d) > 0 : in_cone(rays, d)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(p);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

/// Invariant factors via determinantal divisors: d_k = g_k / g_{k-1} with
/// g_k the gcd of all k x k minors.
inline I64 det_small(std::vector<std::vector<I64>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::vector<std::vector<Q>> q(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = a[i][j];
  Q det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && q[p][c] == Q(0)) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(q[p], q[c]);
      det = -det;
    }
    det *= q[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      Q f = q[i][c] / q[c][c];
      for (std::size_t j = c; j < n; ++j) q[i][j] -= f * q[c][j];
    }
  }
  return boost::rational_cast<I64>(det);
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start,
                    std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<I64> invariant_factors(const std::vector<std::vector<I64>>& m) {
  const std::size_t r = m.size(), c = r ? m[0].size() : 0;
  std::vector<I64> out;
  I64 prev = 1;
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(r, k, 0, cur, rs);
    subsets(c, k, 0, cur, cs);
    I64 g = 0;
    for (const auto& ri : rs)
      for (const auto& ci : cs) {
        std::vector<std::vector<I64>> minor(k, std::vector<I64>(k));
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) minor[a][b] = m[ri[a]][ci[b]];
        g = std::gcd(g, det_small(minor));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

/// Random integer in [lo, hi].
inline I64 uniform(std::mt19937_64& rng, I64 lo, I64 hi) {
  return std::uniform_int_distribution<I64>(lo, hi)(rng);
}

/// Random pointed cone: a random nonzero grading g and rays with <g, r> > 0.
inline std::vector<V> random_pointed_rays(std::mt19937_64& rng, std::size_t n,
                                          std::size_t count, I64 max_entry) {
  V g(n, 0);
  while (std::all_of(g.begin(), g.end(), [](I64 x) { return x == 0; }))
    for (auto& x : g) x = uniform(rng, -2, 2);
  std::vector<V> rays;
  while (rays.size() < count) {
    V r(n);
    for (auto& x : r) x = uniform(rng, -max_entry, max_entry);
    if (dot(g, r) > 0) rays.push_back(r);
  }
  return rays;
}

}  // namespace oracle
