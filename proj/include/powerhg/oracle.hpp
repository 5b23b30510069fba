#pragma once

// Independent numeric checks that work on G^(k) directly instead of on G:
// a nonnegative-tensor power iteration for rho(G^(k)), and a brute-force
// phase enumeration of Lambda-eigenvectors at tiny sizes.

#include "powerhg/errors.hpp"
#include "powerhg/power.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace powerhg {

struct IterationTrace {
  std::vector<std::pair<double, double>> estimates;  // (lower, upper) per iteration
  double converged_value = 0.0;
  int iterations = 0;
};

namespace detail {

// (A x^{k-1})_i = sum over hyperedges h containing i of prod_{j in h, j != i} x_j.
inline std::vector<double> tensor_apply(const PowerHypergraph& h, const std::vector<double>& x) {
  std::vector<double> y(h.order(), 0.0);
  for (const auto& edge : h.hyperedges()) {
    for (std::size_t i : edge) {
      double prod = 1.0;
      for (std::size_t j : edge)
        if (j != i) prod *= x[j];
      y[i] += prod;
    }
  }
  return y;
}

}  // namespace detail

/// Power iteration on A + I (the unit shift makes the tensor primitive, so the
/// iterates do not oscillate on bipartite-like structures). The bounds are
/// min/max of (A x^{k-1})_i / x_i^{k-1} for the unshifted tensor; the iterate
/// is normalised by its largest coordinate.
inline IterationTrace power_iteration_radius(const PowerHypergraph& h, double tol, int max_iter) {
  if (!(tol > 0)) throw PreconditionError("power_iteration_radius: tol must be > 0");
  if (max_iter < 1) throw PreconditionError("power_iteration_radius: max_iter must be >= 1");
  require_connected(h.base(), "power_iteration_radius");
  const int k = h.k();
  std::vector<double> x(h.order(), 1.0);
  IterationTrace trace;
  for (int it = 1; it <= max_iter; ++it) {
    const std::vector<double> ax = detail::tensor_apply(h, x);
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double r = ax[i] / std::pow(x[i], k - 1);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    trace.estimates.emplace_back(lo, hi);
    trace.iterations = it;
    if (hi - lo < tol) {
      trace.converged_value = 0.5 * (lo + hi);
      return trace;
    }
    double top = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = std::pow(ax[i] + std::pow(x[i], k - 1), 1.0 / (k - 1));
      top = std::max(top, x[i]);
    }
    for (double& v : x) v /= top;
  }
  throw ConvergenceError("power_iteration_radius: gap still above " + std::to_string(tol) + " after " +
                         std::to_string(max_iter) + " iterations");
}

/// Representative of the projective class of x: the first nonzero coordinate
/// made positive real, then scaled to unit modulus-sum.
inline std::vector<Complex> projective_canonical(const std::vector<Complex>& x) {
  const auto first = std::find_if(x.begin(), x.end(), [](const Complex& c) { return std::abs(c) > 0.0; });
  if (first == x.end()) throw PreconditionError("projective_canonical: zero vector");
  double mass = 0.0;
  for (const Complex& c : x) mass += std::abs(c);
  const Complex scale = std::conj(*first) / (std::abs(*first) * mass);
  std::vector<Complex> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * scale;
  return out;
}

namespace detail {

inline std::vector<long long> projective_key(const std::vector<Complex>& x) {
  std::vector<long long> key;
  key.reserve(2 * x.size());
  for (const Complex& c : projective_canonical(x)) {
    key.push_back(std::llround(c.real() * 1e7));
    key.push_back(std::llround(c.imag() * 1e7));
  }
  return key;
}

}  // namespace detail

inline constexpr std::size_t kBruteForceVertexCap = 12;
inline constexpr double kBruteForcePhaseCap = 1e6;

/// Projectively distinct Lambda-eigenvectors reachable from the lifted ones by
/// multiplying coordinates by k-th roots of unity.
inline std::size_t brute_force_V_lambda(const Graph& g, int k) {
  const std::vector<LiftedEigenpair> lifted = lift_all_eigenvectors(g, k);
  const PowerHypergraph h(g, k);
  if (h.order() > kBruteForceVertexCap) {
    throw PreconditionError("brute_force_V_lambda: G^(k) has " + std::to_string(h.order()) + " vertices, cap is " +
                            std::to_string(kBruteForceVertexCap));
  }
  std::vector<Complex> roots(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) roots[static_cast<std::size_t>(j)] = std::polar(1.0, 2.0 * std::numbers::pi * j / k);

  std::set<std::vector<long long>> found;
  for (const LiftedEigenpair& lp : lifted) {
    std::vector<std::size_t> support;
    for (std::size_t v = 0; v < h.order(); ++v)
      if (lp.pair.vector[v] != Complex(0.0, 0.0)) support.push_back(v);
    // a global k-th root of unity is projectively trivial, so the first phase stays fixed
    const std::size_t free = support.size() - 1;
    if (std::pow(static_cast<double>(k), static_cast<double>(free)) > kBruteForcePhaseCap) {
      throw PreconditionError("brute_force_V_lambda: " + std::to_string(k) + "^" + std::to_string(free) +
                              " phase tuples exceed the cap");
    }
    std::vector<int> phase(free, 0);
    Eigenpair cand{lp.pair.lambda, lp.pair.vector, 0.0};
    while (true) {
      for (std::size_t i = 0; i < free; ++i)
        cand.vector[support[i + 1]] = lp.pair.vector[support[i + 1]] * roots[static_cast<std::size_t>(phase[i])];
      if (verify_eigenpair(h, cand, 1e-8).ok) found.insert(detail::projective_key(cand.vector));
      std::size_t pos = 0;
      while (pos < free && ++phase[pos] == k) phase[pos++] = 0;
      if (pos == free) break;
    }
  }
  return found.size();
}

}  // namespace powerhg
