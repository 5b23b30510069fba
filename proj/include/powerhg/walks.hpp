#pragma once

// Exact counts of parity-closed walks (every edge used an even number of
// times) and covering parity-closed walks, plus the signed spectral-moment
// average that must agree with the former.

#include "powerhg/bigint.hpp"
#include "powerhg/errors.hpp"
#include "powerhg/graph.hpp"
#include "powerhg/spectra.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

namespace powerhg {

inline constexpr std::size_t kParityWalkEdgeCap = 20;
inline constexpr std::size_t kCoveringWalkEdgeCap = 10;
inline constexpr std::size_t kSignedAverageEdgeCap = 12;

struct WalkCount {
  int length = 0;
  BigInt count;
};

namespace detail {

inline void require_positive_length(int d, const char* what) {
  if (d < 1) throw PreconditionError(std::string(what) + ": walk length must be >= 1");
}

// Walks are advanced from every start vertex at once. A walk whose edge
// parities are all even is necessarily closed (each vertex then has even
// degree in the traversed multigraph), so no start vertex has to be stored.
// Key layout: ((touched << m) | parity) * n + vertex.
inline BigInt parity_walk_dp(const Graph& g, int d, bool covering) {
  const std::size_t n = g.order();
  const std::size_t m = g.size();
  if (n == 0) return 0;
  std::unordered_map<std::uint64_t, BigInt> cur, next;
  for (std::size_t v = 0; v < n; ++v) cur[v] = 1;
  for (int step = 0; step < d; ++step) {
    next.clear();
    for (const auto& [key, count] : cur) {
      const std::size_t v = key % n;
      const std::uint64_t masks = key / n;
      const std::uint64_t parity = masks & ((std::uint64_t{1} << m) - 1);
      const std::uint64_t touched = masks >> m;
      for (const Incidence& inc : g.incident(v)) {
        const std::uint64_t bit = std::uint64_t{1} << inc.edge;
        const std::uint64_t np = parity ^ bit;
        const std::uint64_t nt = covering ? (touched | bit) : 0;
        next[((nt << m) | np) * n + inc.neighbor] += count;
      }
    }
    std::swap(cur, next);
  }
  const std::uint64_t full = covering ? ((std::uint64_t{1} << m) - 1) : 0;
  BigInt total = 0;
  for (const auto& [key, count] : cur) {
    const std::uint64_t masks = key / n;
    const std::uint64_t parity = masks & ((std::uint64_t{1} << m) - 1);
    if (parity == 0 && (masks >> m) == full) total += count;
  }
  return total;
}

}  // namespace detail

/// Number of closed walks of length d (summed over all start vertices) that
/// use every edge an even number of times.
inline WalkCount parity_closed_walks(const Graph& g, int d) {
  detail::require_positive_length(d, "parity_closed_walks");
  if (g.size() > kParityWalkEdgeCap) {
    throw PreconditionError("parity_closed_walks: more than " + std::to_string(kParityWalkEdgeCap) + " edges");
  }
  if (d % 2 != 0) return {d, 0};
  return {d, detail::parity_walk_dp(g, d, false)};
}

/// Parity-closed walks of length d that use every edge at least once.
/// Isolated vertices never take part.
inline WalkCount covering_parity_closed_walks(const Graph& g, int d) {
  detail::require_positive_length(d, "covering_parity_closed_walks");
  if (g.size() > kCoveringWalkEdgeCap) {
    throw PreconditionError("covering_parity_closed_walks: more than " + std::to_string(kCoveringWalkEdgeCap) +
                            " edges");
  }
  if (d % 2 != 0 || static_cast<std::size_t>(d) < 2 * g.size()) return {d, 0};
  return {d, detail::parity_walk_dp(g, d, true)};
}

namespace detail {

template <class T>
std::vector<T> matmul(const std::vector<T>& a, const std::vector<T>& b, std::size_t n) {
  std::vector<T> c(n * n, T(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const T& aik = a[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

// sum over signings of trace(A^d) for d = 1..d_max, with entry type T.
template <class T>
std::vector<BigInt> signed_trace_sums(const Graph& g, int d_max) {
  const std::size_t n = g.order();
  std::vector<BigInt> sums(static_cast<std::size_t>(d_max) + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.size()); ++mask) {
    std::vector<T> a(n * n, T(0));
    for (std::size_t i = 0; i < g.size(); ++i) {
      const T s = ((mask >> i) & 1U) ? T(-1) : T(1);
      a[g.edge(i).u * n + g.edge(i).v] = s;
      a[g.edge(i).v * n + g.edge(i).u] = s;
    }
    std::vector<T> p = a;
    for (int d = 1; d <= d_max; ++d) {
      if (d > 1) p = matmul(p, a, n);
      T tr(0);
      for (std::size_t i = 0; i < n; ++i) tr += p[i * n + i];
      sums[static_cast<std::size_t>(d)] += BigInt(tr);
    }
  }
  return sums;
}

}  // namespace detail

/// 2^{-|E|} * sum over all 2^{|E|} signings of trace(A(G_pi)^d), for d = 1..d_max.
/// Entry 0 of the result is unused.
inline std::vector<BigRational> signed_moment_averages(const Graph& g, int d_max) {
  detail::require_positive_length(d_max, "signed_moment_average");
  if (g.size() > kSignedAverageEdgeCap) {
    throw PreconditionError("signed_moment_average: more than " + std::to_string(kSignedAverageEdgeCap) + " edges");
  }
  std::size_t max_degree = 0;
  for (std::size_t v = 0; v < g.order(); ++v) max_degree = std::max(max_degree, g.degree(v));
  // |entries of A^d| <= max_degree^(d-1), so the int64 path is exact whenever this stays small.
  const bool small = static_cast<double>(g.order()) * std::pow(static_cast<double>(std::max<std::size_t>(max_degree, 1)), d_max) <
                     static_cast<double>(std::numeric_limits<std::int64_t>::max() / 4);
  const std::vector<BigInt> sums =
      small ? detail::signed_trace_sums<std::int64_t>(g, d_max) : detail::signed_trace_sums<BigInt>(g, d_max);
  const BigInt denom = ipow(2, static_cast<long long>(g.size()));
  std::vector<BigRational> out(sums.size());
  for (std::size_t d = 1; d < sums.size(); ++d) out[d] = BigRational(sums[d], denom);
  return out;
}

inline BigRational signed_moment_average(const Graph& g, int d) { return signed_moment_averages(g, d).at(static_cast<std::size_t>(d)); }

struct RatioPoint {
  int ell = 0;
  BigInt covering_walks;  // p_{2 ell}(G)
  double ratio = 0.0;     // p_{2 ell}(G) / rho(G)^{2 ell}
};

/// The limit the ratio series approaches: 2^{|V| - |E|}.
inline double walk_ratio_limit(const Graph& g) {
  return std::ldexp(1.0, static_cast<int>(g.order()) - static_cast<int>(g.size()));
}

inline std::vector<RatioPoint> walk_ratio_series(const Graph& g, int ell_max) {
  require_connected(g, "walk_ratio_series");
  if (ell_max < 1) throw PreconditionError("walk_ratio_series: ell_max must be >= 1");
  if (g.size() == 0) throw PreconditionError("walk_ratio_series: graph has no edges (rho = 0)");
  const long double rho = spectral_radius(g);
  std::vector<RatioPoint> out;
  for (int ell = 1; ell <= ell_max; ++ell) {
    RatioPoint p;
    p.ell = ell;
    p.covering_walks = covering_parity_closed_walks(g, 2 * ell).count;
    p.ratio = static_cast<double>(p.covering_walks.convert_to<long double>() / std::pow(rho, 2.0L * ell));
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace powerhg
