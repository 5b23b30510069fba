#pragma once

// Dense symmetric eigenvalues by cyclic Jacobi rotations, and the signed and
// unsigned spectral quantities built on them: spectral radius, rho_V, rho_E
// with its weakest edges, and rho_Gamma over switching classes.

#include "powerhg/errors.hpp"
#include "powerhg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace powerhg {

/// Absolute band within which two spectral radii are treated as equal.
inline constexpr double kTieTolerance = 1e-9;

class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t dim() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// Real eigenvalues in ascending order.
struct Spectrum {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double largest() const { return values.empty() ? 0.0 : values.back(); }
  double smallest() const { return values.empty() ? 0.0 : values.front(); }
  /// lambda_2 in descending numbering.
  double second_largest() const { return values.size() < 2 ? smallest() : values[values.size() - 2]; }
  double radius() const { return values.empty() ? 0.0 : std::max(largest(), -smallest()); }
  double sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }
  double sum_of_squares() const {
    return std::accumulate(values.begin(), values.end(), 0.0, [](double s, double x) { return s + x * x; });
  }
};

struct EigenSystem {
  Spectrum spectrum;
  DenseMatrix vectors;  // column j belongs to spectrum.values[j]
};

/// Cyclic Jacobi. Stops once the off-diagonal Frobenius mass is below 1e-13
/// of the initial Frobenius norm; at most 100 sweeps.
inline EigenSystem sym_eig_system(const DenseMatrix& m) {
  const std::size_t n = m.dim();
  double norm0 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(m(i, j) - m(j, i)) > 1e-12) {
        throw PreconditionError("sym_eig: matrix is not symmetric at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
      }
      norm0 += m(i, j) * m(i, j);
    }
  }
  norm0 = std::sqrt(norm0);

  DenseMatrix a = m;
  DenseMatrix v = DenseMatrix::identity(n);
  auto off_mass = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  bool converged = norm0 == 0.0;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    if (off_mass() <= 1e-13 * norm0) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < std::numeric_limits<double>::min()) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double g = a(r, p), h = a(r, q);
            a(r, p) = a(p, r) = g - s * (h + g * tau);
            a(r, q) = a(q, r) = h + s * (g - h * tau);
          }
          const double g = v(r, p), h = v(r, q);
          v(r, p) = g - s * (h + g * tau);
          v(r, q) = h + s * (g - h * tau);
        }
      }
    }
  }
  if (!converged && off_mass() > 1e-13 * norm0) throw InternalError("sym_eig: no convergence in 100 sweeps");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  EigenSystem out{Spectrum{std::vector<double>(n)}, DenseMatrix(n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.spectrum.values[j] = a(order[j], order[j]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, j) = v(r, order[j]);
  }
  return out;
}

inline Spectrum sym_eig(const DenseMatrix& m) { return sym_eig_system(m).spectrum; }

inline DenseMatrix adjacency(const Graph& g) {
  DenseMatrix a(g.order());
  for (const Edge& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1.0;
  return a;
}

inline DenseMatrix adjacency(const SignedGraph& sg) {
  DenseMatrix a(sg.graph().order());
  for (std::size_t i = 0; i < sg.graph().size(); ++i) {
    const Edge& e = sg.graph().edge(i);
    a(e.u, e.v) = a(e.v, e.u) = sg.sign(i);
  }
  return a;
}

inline Spectrum spectrum(const Graph& g) { return sym_eig(adjacency(g)); }
inline Spectrum spectrum(const SignedGraph& sg) { return sym_eig(adjacency(sg)); }

/// max(lambda_1, -lambda_n); for a disconnected graph this is the max over components.
inline double spectral_radius(const SignedGraph& sg) { return spectrum(sg).radius(); }
inline double spectral_radius(const Graph& g) { return spectrum(g).radius(); }

struct PerronPair {
  double value = 0.0;
  std::vector<double> vector;  // strictly positive, smallest entry scaled to 1
};

inline PerronPair perron_pair(const Graph& g) {
  require_connected(g, "perron_pair");
  const EigenSystem es = sym_eig_system(adjacency(g));
  const std::size_t n = g.order();
  const std::size_t top = n - 1;
  std::vector<double> y(n);
  double total = 0.0;
  for (std::size_t r = 0; r < n; ++r) total += es.vectors(r, top);
  const double flip = total < 0 ? -1.0 : 1.0;
  for (std::size_t r = 0; r < n; ++r) y[r] = flip * es.vectors(r, top);
  const double lo = *std::min_element(y.begin(), y.end());
  if (!(lo > 1e-12)) throw InternalError("perron_pair: top eigenvector is not strictly positive");
  for (double& x : y) x /= lo;
  return {es.spectrum.largest(), std::move(y)};
}

/// max over v of rho(G - v).
inline double rho_V(const Graph& g) {
  require_connected(g, "rho_V");
  if (g.order() < 2) throw PreconditionError("rho_V: needs at least 2 vertices");
  double best = 0.0;
  for (std::size_t v = 0; v < g.order(); ++v) best = std::max(best, spectral_radius(delete_vertex(g, v).graph));
  return best;
}

struct WeakestEdge {
  std::size_t index = 0;
  Edge edge;
  int delta = 1;  // 0 for a pendant edge, 1 otherwise
  double rho = 0.0;
};

struct WeakestEdgeReport {
  double rho_E = 0.0;
  std::vector<WeakestEdge> edges;
  std::vector<double> rho_per_edge;  // rho(G - e), indexed by edge

  std::size_t count(int delta) const {
    return static_cast<std::size_t>(
        std::count_if(edges.begin(), edges.end(), [&](const WeakestEdge& w) { return w.delta == delta; }));
  }
  std::size_t pendant_count() const { return count(0); }
  std::size_t non_pendant_count() const { return count(1); }
};

inline WeakestEdgeReport weakest_edges(const Graph& g, double tie_tol = kTieTolerance) {
  require_connected(g, "weakest_edges");
  if (g.size() < 2) throw PreconditionError("weakest_edges: needs at least 2 edges");
  WeakestEdgeReport r;
  r.rho_per_edge.resize(g.size());
  for (std::size_t e = 0; e < g.size(); ++e) r.rho_per_edge[e] = spectral_radius(delete_edge(g, e));
  r.rho_E = *std::max_element(r.rho_per_edge.begin(), r.rho_per_edge.end());
  for (std::size_t e = 0; e < g.size(); ++e) {
    if (r.rho_per_edge[e] >= r.rho_E - tie_tol) {
      r.edges.push_back({e, g.edge(e), is_pendant_edge(g, e) ? 0 : 1, r.rho_per_edge[e]});
    }
  }
  return r;
}

inline double rho_E(const Graph& g) { return weakest_edges(g).rho_E; }

struct SwitchingClassRadius {
  SignedGraph representative;
  double rho = 0.0;
  bool balanced = false;
  bool antibalanced = false;
};

/// Spectral radius of every switching class; fails if numeric attainment of
/// rho(G) ever disagrees with the balanced/antibalanced test.
inline std::vector<SwitchingClassRadius> switching_class_radii(const Graph& g, double tol = kTieTolerance) {
  const double rho = spectral_radius(g);
  std::vector<SwitchingClassRadius> out;
  for (SignedGraph& rep : switching_class_representatives(g)) {
    SwitchingClassRadius c{rep, spectral_radius(rep), is_balanced(rep).balanced, is_antibalanced(rep).balanced};
    const bool attains = c.rho >= rho - tol;
    if (attains != (c.balanced || c.antibalanced)) {
      throw InternalError("switching class radius " + std::to_string(c.rho) + " vs rho(G) " + std::to_string(rho) +
                          " disagrees with the balance test");
    }
    out.push_back(std::move(c));
  }
  return out;
}

/// Largest spectral radius among signings strictly below rho(G); empty when
/// every signing attains rho(G).
inline std::optional<double> rho_Gamma(const Graph& g, double tol = kTieTolerance) {
  require_connected(g, "rho_Gamma");
  const double rho = spectral_radius(g);
  std::optional<double> best;
  for (const SwitchingClassRadius& c : switching_class_radii(g, tol)) {
    if (c.rho < rho - tol) best = std::max(best.value_or(0.0), c.rho);
  }
  return best;
}

}  // namespace powerhg
