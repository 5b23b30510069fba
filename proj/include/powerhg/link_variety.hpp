#pragma once

// The affine system f_i = mu * x_i^(k-1) - prod_{j != i} x_j, i in S, that
// governs the zero coordinates of a second-modulus eigenvector. |S| = k-1 when
// the weakest edge is pendant (delta = 0), k-2 otherwise (delta = 1).
//
// Nonzero solutions are listed in closed form: mu * p_i^k equals the common
// value t = prod_i p_i, and t is pinned by mu^(k-1) t = 1 (delta = 0) or
// mu^(k-2) t^2 = 1 (delta = 1). All but one coordinate pick a k-th root
// freely; the last is fixed by the product. The system has no solutions at
// infinity, so the origin carries the remaining Bezout count.

#include "powerhg/bigint.hpp"
#include "powerhg/errors.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

namespace powerhg {

using Complex = std::complex<double>;

inline constexpr int kLinkVarietyMaxK = 8;

struct LinkSystem {
  int k = 4;
  int delta = 1;
  Complex mu{1.0, 0.0};

  int variables() const noexcept { return k - 1 - delta; }
};

struct VarietyReport {
  std::vector<std::vector<Complex>> nonzero_solutions;
  long long nonzero_total = 0;
  long long origin_multiplicity = 0;
  long long bezout = 0;
  double max_residual = 0.0;  // largest scaled |f_i| over listed solutions
};

/// Closed-form count of nonzero solutions: k^(k-2) for delta = 0, 2 k^(k-3) for delta = 1.
inline BigInt link_nonzero_count(int k, int delta) {
  return delta == 0 ? ipow(k, k - 2) : 2 * ipow(k, k - 3);
}

/// (k-1)^(k-1-delta) minus the nonzero count.
inline BigInt link_origin_multiplicity(int k, int delta) {
  return ipow(k - 1, k - 1 - delta) - link_nonzero_count(k, delta);
}

namespace detail {

inline Complex cpow(Complex z, int e) {
  if (e < 0) return Complex(1.0, 0.0) / cpow(z, -e);
  Complex r{1.0, 0.0};
  for (; e > 0; e >>= 1, z *= z)
    if (e & 1) r *= z;
  return r;
}

inline void validate(const LinkSystem& sys, int max_k) {
  if (sys.delta != 0 && sys.delta != 1) throw PreconditionError("link variety: delta must be 0 or 1");
  if (sys.k < 3) throw PreconditionError("link variety: k must be >= 3");
  if (sys.k > max_k) {
    throw PreconditionError("link variety: k=" + std::to_string(sys.k) + " exceeds enumeration limit " +
                            std::to_string(max_k));
  }
  if (sys.mu == Complex(0.0, 0.0)) throw PreconditionError("link variety: mu must be nonzero");
}

inline Complex product_except(const std::vector<Complex>& p, std::size_t skip_a, std::size_t skip_b) {
  Complex r{1.0, 0.0};
  for (std::size_t j = 0; j < p.size(); ++j)
    if (j != skip_a && j != skip_b) r *= p[j];
  return r;
}

}  // namespace detail

/// max_i |f_i(p)| / (|mu p_i^(k-1)| + |prod_{j != i} p_j|), with 0/0 read as 0.
inline double link_residual(const LinkSystem& sys, const std::vector<Complex>& p) {
  double worst = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Complex lead = sys.mu * detail::cpow(p[i], sys.k - 1);
    const Complex rest = detail::product_except(p, i, i);
    const double scale = std::abs(lead) + std::abs(rest);
    if (scale > 0) worst = std::max(worst, std::abs(lead - rest) / scale);
  }
  return worst;
}

inline VarietyReport solve_link_variety(const LinkSystem& sys) {
  detail::validate(sys, kLinkVarietyMaxK);
  const int k = sys.k;
  const int vars = sys.variables();
  if (vars < 1) throw PreconditionError("link variety: no variables");

  std::vector<Complex> targets;
  if (sys.delta == 0) {
    targets.push_back(detail::cpow(sys.mu, -(k - 1)));
  } else {
    const Complex xi = std::sqrt(detail::cpow(sys.mu, 2 - k));
    targets = {xi, -xi};
  }

  VarietyReport rep;
  for (const Complex& t : targets) {
    const Complex base = std::pow(t / sys.mu, 1.0 / k);
    std::vector<Complex> roots(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) roots[static_cast<std::size_t>(j)] = base * std::polar(1.0, 2.0 * std::numbers::pi * j / k);

    std::vector<int> choice(static_cast<std::size_t>(vars - 1), 0);
    while (true) {
      std::vector<Complex> p(static_cast<std::size_t>(vars));
      Complex partial{1.0, 0.0};
      for (std::size_t i = 0; i < choice.size(); ++i) {
        p[i] = roots[static_cast<std::size_t>(choice[i])];
        partial *= p[i];
      }
      p.back() = t / partial;
      const double res = link_residual(sys, p);
      if (!(res <= 1e-12)) {
        throw InternalError("link variety: closed-form solution has residual " + std::to_string(res));
      }
      rep.max_residual = std::max(rep.max_residual, res);
      rep.nonzero_solutions.push_back(std::move(p));

      std::size_t pos = 0;
      while (pos < choice.size() && ++choice[pos] == k) choice[pos++] = 0;
      if (pos == choice.size()) break;
    }
  }
  rep.nonzero_total = static_cast<long long>(rep.nonzero_solutions.size());
  rep.bezout = ipow(k - 1, vars).convert_to<long long>();
  rep.origin_multiplicity = rep.bezout - rep.nonzero_total;
  return rep;
}

/// Jacobian at p: diagonal (k-1) mu p_i^(k-2), off-diagonal -prod_{l != i,j} p_l.
inline std::vector<std::vector<Complex>> link_jacobian(const LinkSystem& sys, const std::vector<Complex>& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<Complex>> j(n, std::vector<Complex>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      j[r][c] = r == c ? Complex(sys.k - 1) * sys.mu * detail::cpow(p[r], sys.k - 2) : -detail::product_except(p, r, c);
  return j;
}

/// True iff the Jacobian at the solution p is strictly diagonally dominant by
/// rows in modulus, which certifies that p is a simple root.
inline bool jacobian_nonsingular(const LinkSystem& sys, const std::vector<Complex>& p) {
  detail::validate(sys, 64);
  if (p.size() != static_cast<std::size_t>(sys.variables())) {
    throw PreconditionError("jacobian_nonsingular: point has " + std::to_string(p.size()) + " coordinates, expected " +
                            std::to_string(sys.variables()));
  }
  if (!(link_residual(sys, p) <= 1e-9)) throw PreconditionError("jacobian_nonsingular: point is not a solution");
  const auto j = link_jacobian(sys, p);
  for (std::size_t r = 0; r < j.size(); ++r) {
    double off = 0.0;
    for (std::size_t c = 0; c < j.size(); ++c)
      if (c != r) off += std::abs(j[r][c]);
    if (!(std::abs(j[r][r]) > off)) return false;
  }
  return true;
}

}  // namespace powerhg
