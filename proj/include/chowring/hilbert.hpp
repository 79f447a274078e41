#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "chowring/hilbert_series.hpp"
#include "chowring/lattice.hpp"

namespace chowring {

/// Rank of every element, provided all maximal chains from the bottom to
/// each element have the same length.
inline std::vector<std::size_t> rank_function(const Lattice& lat) {
  const std::size_t n = lat.size();
  // Longest and shortest saturated chains, in order of down-set size (a
  // linear extension).
  std::vector<Element> order(n);
  for (Element x = 0; x < n; ++x) order[x] = x;
  std::sort(order.begin(), order.end(), [&](Element a, Element b) {
    return lat.down_set(a).count() < lat.down_set(b).count();
  });
  std::vector<std::size_t> shortest(n, 0), longest(n, 0);
  for (Element x : order) {
    if (x == lat.bottom()) continue;
    bool first = true;
    for (Element y : lat.lower_covers(x)) {
      shortest[x] = first ? shortest[y] + 1 : std::min(shortest[x], shortest[y] + 1);
      longest[x] = first ? longest[y] + 1 : std::max(longest[x], longest[y] + 1);
      first = false;
    }
    if (shortest[x] != longest[x])
      throw Error(ErrorKind::NotGraded, "maximal chains below '" + lat.label(x) + "' differ in length");
  }
  return shortest;
}

/// Number of chains bottom < X_1 < ... < X_k with rank X_i = r_i.
inline Integer flag_count(const Lattice& lat, const std::vector<std::size_t>& ranks) {
  const auto rk = rank_function(lat);
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] == 0 || (i > 0 && ranks[i] <= ranks[i - 1]) || ranks[i] > rk[lat.top()])
      throw Error(ErrorKind::InvalidParameters, "rank sequence must be strictly increasing within 1..rank");
  }
  std::vector<Integer> count(lat.size(), 0);
  count[lat.bottom()] = 1;
  std::size_t previous = 0;
  for (std::size_t r : ranks) {
    std::vector<Integer> next(lat.size(), 0);
    for (Element x = 0; x < lat.size(); ++x) {
      if (rk[x] != r) continue;
      for (Element y = 0; y < lat.size(); ++y)
        if (rk[y] == previous && count[y] != 0 && lat.less(y, x)) next[x] += count[y];
    }
    count = std::move(next);
    previous = r;
  }
  Integer total = 0;
  for (const auto& c : count) total += c;
  return total;
}

namespace detail {

// Sum over all strictly increasing sequences r in 1..top of
// weight(r) * prod_i step(r_i - r_{i-1}).
template <class Weight>
HilbertSeries chain_sum(std::size_t top, Weight&& weight) {
  HilbertSeries total = HilbertSeries::one();
  std::vector<std::size_t> r;
  auto walk = [&](auto&& self, std::size_t from, const HilbertSeries& factor) -> void {
    for (std::size_t next = from + 1; next <= top; ++next) {
      const std::size_t prev = r.empty() ? 0 : r.back();
      HilbertSeries f = factor * HilbertSeries::step(next - prev);
      if (f.is_zero()) continue;  // a rank jump of one kills every extension
      r.push_back(next);
      total += weight(r) * f;
      self(self, next, f);
      r.pop_back();
    }
  };
  walk(walk, 0, HilbertSeries::one());
  return total;
}

}  // namespace detail

/// Whether d(X, Y) = rk Y - rk X for all X <= Y.
inline bool metric_is_rank_difference(const Lattice& lat) {
  const auto rk = rank_function(lat);
  for (Element x = 0; x < lat.size(); ++x)
    for (Element y = 0; y < lat.size(); ++y)
      if (lat.leq(x, y) && atom_distance(lat, x, y) != rk[y] - rk[x]) return false;
  return true;
}

/// Hilbert series of D(L, L \ {0}) from flag counts:
/// 1 + sum_r f_L(r) prod_i (t + ... + t^{r_i - r_{i-1} - 1}).
/// Assumes the atom metric equals the rank difference.
inline HilbertSeries hilbert_maximal_closed(const Lattice& lat) {
  const auto rk = rank_function(lat);
  return detail::chain_sum(rk[lat.top()], [&](const std::vector<std::size_t>& r) { return flag_count(lat, r); });
}

inline Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer out = 1;
  for (std::size_t i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

/// Stirling numbers of the second kind S(n, k).
inline Integer stirling2(std::size_t n, std::size_t k) {
  std::vector<std::vector<Integer>> s(n + 1, std::vector<Integer>(k + 1, 0));
  s[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= std::min(i, k); ++j) s[i][j] = Integer(j) * s[i - 1][j] + s[i - 1][j - 1];
  return s[n][k];
}

/// Generic arrangement of n hyperplanes in rank l: flags counted by
/// prod C(n - r_{i-1}, r_i - r_{i-1}) over steps below the top rank; the
/// unique top contributes a factor of one.
inline HilbertSeries hilbert_generic_closed(std::size_t n, std::size_t l) {
  if (l < 1 || l > n || (l == 1 && n != 1))
    throw Error(ErrorKind::InvalidParameters, "generic arrangement needs 1 <= l <= n, and l = 1 only for n = 1");
  return detail::chain_sum(l, [&](const std::vector<std::size_t>& r) {
    Integer f = 1;
    std::size_t prev = 0;
    for (std::size_t x : r) {
      if (x < l) f *= binomial(n - prev, x - prev);
      prev = x;
    }
    return f;
  });
}

/// Partition lattice: f(r) = prod S(n - r_{i-1}, n - r_i).
inline HilbertSeries hilbert_partition_closed(std::size_t n) {
  if (n < 2 || n > 20) throw Error(ErrorKind::InvalidParameters, "partition closed form needs 2 <= n <= 20");
  return detail::chain_sum(n - 1, [&](const std::vector<std::size_t>& r) {
    Integer f = 1;
    std::size_t prev = 0;
    for (std::size_t x : r) {
      f *= stirling2(n - prev, n - x);
      prev = x;
    }
    return f;
  });
}

}  // namespace chowring
