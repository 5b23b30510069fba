#pragma once

// The k-power hypergraph G^(k) of a graph G: every edge {u,v} becomes the
// hyperedge {u,v} + N_e with k-2 fresh vertices N_e.
//
// Everything spectral about G^(k) is reduced to signed (sub)graphs of G:
//  - rho(G^(k))^k = rho(G)^2, and for k >= 4 the second-largest modulus
//    Lambda satisfies Lambda^k = rho_E(G)^2 (k = 3 has a class-dependent form);
//  - spectral moments are exact sums over connected edge subsets weighted by
//    covering parity-closed walk counts;
//  - multiplicities of rho and Lambda are closed-form big integers;
//  - a Lambda-eigenvector is lifted from the Perron pair of G_e, where e is a
//    weakest edge.

#include "powerhg/bigint.hpp"
#include "powerhg/errors.hpp"
#include "powerhg/graph.hpp"
#include "powerhg/link_variety.hpp"
#include "powerhg/spectra.hpp"
#include "powerhg/walks.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace powerhg {

class PowerHypergraph {
 public:
  PowerHypergraph(Graph base, int k) : k_(k), base_(std::move(base)) {
    if (k_ < 3) throw PreconditionError("power hypergraph: k must be >= 3, got " + std::to_string(k_));
    const std::size_t n = base_.order();
    const std::size_t per_edge = static_cast<std::size_t>(k_ - 2);
    order_ = n + per_edge * base_.size();
    owner_.assign(order_, std::nullopt);
    incidence_.assign(order_, {});
    hyperedges_.reserve(base_.size());
    for (std::size_t e = 0; e < base_.size(); ++e) {
      std::vector<std::size_t> h{base_.edge(e).u, base_.edge(e).v};
      for (std::size_t j = 0; j < per_edge; ++j) {
        const std::size_t c = n + e * per_edge + j;
        owner_[c] = e;
        h.push_back(c);
      }
      for (std::size_t v : h) incidence_[v].push_back(e);
      hyperedges_.push_back(std::move(h));
    }
  }

  int k() const noexcept { return k_; }
  const Graph& base() const noexcept { return base_; }
  std::size_t order() const noexcept { return order_; }
  std::size_t size() const noexcept { return hyperedges_.size(); }

  /// Hyperedge e: both endpoints of base edge e first, then its added vertices.
  const std::vector<std::size_t>& hyperedge(std::size_t e) const { return hyperedges_.at(e); }
  const std::vector<std::vector<std::size_t>>& hyperedges() const noexcept { return hyperedges_; }

  /// N_e, the k-2 vertices added on base edge e.
  std::span<const std::size_t> added_vertices(std::size_t e) const {
    return std::span<const std::size_t>(hyperedges_.at(e)).subspan(2);
  }

  bool is_original(std::size_t v) const noexcept { return v < base_.order(); }
  std::optional<std::size_t> owner_edge(std::size_t v) const { return owner_.at(v); }
  const std::vector<std::size_t>& incident(std::size_t v) const { return incidence_.at(v); }
  std::size_t degree(std::size_t v) const { return incidence_.at(v).size(); }

  /// Degree-one vertices: every added vertex and every original pendant vertex.
  std::vector<std::size_t> core_vertices() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < order_; ++v)
      if (degree(v) == 1) out.push_back(v);
    return out;
  }

 private:
  int k_;
  Graph base_;
  std::size_t order_ = 0;
  std::vector<std::vector<std::size_t>> hyperedges_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::vector<std::optional<std::size_t>> owner_;
};

inline PowerHypergraph build_power(const Graph& g, int k) { return PowerHypergraph(g, k); }

namespace detail {

inline void require_power_k(int k, int min_k, const char* what) {
  if (k < min_k) throw PreconditionError(std::string(what) + ": k must be >= " + std::to_string(min_k));
}

inline void require_second_modulus(const Graph& g, const char* what) {
  require_connected(g, what);
  if (g.size() < 2) throw PreconditionError(std::string(what) + ": needs at least 2 edges (no second modulus)");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Spectral radius and the second-largest modulus.

inline double power_spectral_radius(const Graph& g, int k) {
  detail::require_power_k(k, 3, "power_spectral_radius");
  require_connected(g, "power_spectral_radius");
  return std::pow(spectral_radius(g), 2.0 / k);
}

/// Quantities that can realise Lambda^3 for k = 3; absent ones are not
/// candidates for this graph's class.
struct CubicLambdaCandidates {
  GraphClass graph_class = GraphClass::Tree;
  double rho_V = 0.0;
  std::optional<double> rho_Gamma;
  std::optional<double> minus_lambda_min;  // only for non-bipartite graphs
};

inline CubicLambdaCandidates cubic_lambda_candidates(const Graph& g) {
  detail::require_second_modulus(g, "lambda");
  CubicLambdaCandidates c;
  c.graph_class = classify(g);
  c.rho_V = rho_V(g);
  if (c.graph_class == GraphClass::BipartiteNonTree || c.graph_class == GraphClass::General) c.rho_Gamma = rho_Gamma(g);
  if (c.graph_class == GraphClass::OddUnicyclic || c.graph_class == GraphClass::General)
    c.minus_lambda_min = -spectrum(g).smallest();
  return c;
}

/// Second-largest modulus among the eigenvalues of G^(k).
inline double lambda(const Graph& g, int k) {
  detail::require_power_k(k, 3, "lambda");
  detail::require_second_modulus(g, "lambda");
  if (k >= 4) return std::pow(weakest_edges(g).rho_E, 2.0 / k);
  const CubicLambdaCandidates c = cubic_lambda_candidates(g);
  double best = c.rho_V;
  if (c.rho_Gamma) best = std::max(best, *c.rho_Gamma);
  if (c.minus_lambda_min) best = std::max(best, *c.minus_lambda_min);
  return std::pow(best, 2.0 / 3.0);
}

inline constexpr std::size_t kModuliEdgeCap = 8;

/// Distinct nonzero sigma^2 over eigenvalues sigma of signed subgraphs of G
/// (k >= 4) or signed induced subgraphs (k = 3), ascending, merged within 1e-9.
inline std::vector<double> squared_signed_eigenvalues(const Graph& g, int k) {
  detail::require_power_k(k, 3, "eigenvalue_moduli");
  if (g.size() > kModuliEdgeCap) {
    throw PreconditionError("eigenvalue_moduli: more than " + std::to_string(kModuliEdgeCap) + " edges");
  }
  std::vector<double> sq;
  auto collect = [&](const Graph& h) {
    for (const SignedGraph& rep : switching_class_representatives(h))
      for (double s : spectrum(rep).values)
        if (std::abs(s) > 1e-9) sq.push_back(s * s);
  };
  if (k >= 4) {
    for (const auto& subset : connected_edge_subsets(g, g.size())) collect(edge_subgraph(g, subset).graph);
  } else {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.order()); ++mask) {
      std::vector<std::size_t> keep;
      for (std::size_t v = 0; v < g.order(); ++v)
        if ((mask >> v) & 1U) keep.push_back(v);
      const Graph h = induced_subgraph(g, keep).graph;
      if (h.size() > 0 && is_connected(h)) collect(h);
    }
  }
  std::sort(sq.begin(), sq.end());
  std::vector<double> out;
  for (double x : sq)
    if (out.empty() || x - out.back() > 1e-9) out.push_back(x);
  return out;
}

/// Distinct nonzero eigenvalue moduli of G^(k), ascending.
inline std::vector<double> eigenvalue_moduli(const Graph& g, int k) {
  std::vector<double> m;
  for (double x : squared_signed_eigenvalues(g, k)) m.push_back(std::pow(x, 1.0 / k));
  return m;
}

// ---------------------------------------------------------------------------
// Multiplicities.

/// Algebraic multiplicity of rho(G^(k)): k^{|E|(k-3)+|V|-1}.
inline BigInt am_rho(const Graph& g, int k) {
  detail::require_power_k(k, 3, "am_rho");
  require_connected(g, "am_rho");
  const long long e = static_cast<long long>(g.size()), v = static_cast<long long>(g.order());
  return ipow(k, e * (k - 3) + v - 1);
}

/// Per-weakest-edge contribution to am_Lambda, in the all-integer form
/// k^{|E|(k-3)+|V|+1-k+delta} (k-1)^{k-1-delta} - 2^delta k^{|E|(k-3)+|V|-1}.
inline BigInt lambda_edge_contribution(const Graph& g, int k, int delta) {
  const long long e = static_cast<long long>(g.size()), v = static_cast<long long>(g.order());
  const long long base = e * (k - 3) + v - 1;
  return ipow(k, base + 2 - k + delta) * ipow(k - 1, k - 1 - delta) - ipow(2, delta) * ipow(k, base);
}

/// G_e: G minus a weakest edge e, and minus its pendant endpoint when e is pendant.
struct EdgeRemoval {
  std::size_t edge = 0;
  int delta = 1;
  std::optional<std::size_t> pendant_vertex;  // label in G
  Relabeled reduced;                          // G_e with labels relative to G
};

inline EdgeRemoval remove_weakest_edge(const Graph& g, std::size_t e) {
  EdgeRemoval r;
  r.edge = e;
  const Edge& ed = g.edge(e);
  const Graph without = delete_edge(g, e);
  std::vector<std::size_t> keep;
  if (g.degree(ed.u) == 1 || g.degree(ed.v) == 1) {
    r.delta = 0;
    r.pendant_vertex = g.degree(ed.u) == 1 ? ed.u : ed.v;
  }
  for (std::size_t v = 0; v < g.order(); ++v)
    if (!r.pendant_vertex || v != *r.pendant_vertex) keep.push_back(v);
  r.reduced = induced_subgraph(without, keep);
  if (!is_connected(r.reduced.graph)) {
    throw InternalError("G_e is disconnected for weakest edge {" + std::to_string(ed.u) + "," + std::to_string(ed.v) +
                        "}");
  }
  return r;
}

struct EdgeMultiplicity {
  std::size_t edge_index = 0;
  Edge edge;
  int delta = 1;
  BigInt v_rho_size;           // |V_rho(G_e^(k))|
  BigInt origin_multiplicity;  // m_delta(0) of the link variety
  BigInt contribution;         // v_rho_size * origin_multiplicity
};

struct VLambdaCount {
  BigInt size;   // |V_Lambda|
  BigInt total;  // #V_Lambda, points counted with multiplicity
  std::vector<EdgeMultiplicity> per_edge;
};

/// Eigenvector side: V_Lambda is the disjoint union over weakest edges e of
/// V_rho(G_e^(k)), each point carrying the origin multiplicity of the link
/// variety for delta(e).
inline VLambdaCount count_V_lambda(const Graph& g, int k) {
  detail::require_power_k(k, 4, "count_V_lambda");
  detail::require_second_modulus(g, "count_V_lambda");
  const WeakestEdgeReport w = weakest_edges(g);
  BigInt origin[2];
  for (int delta : {0, 1}) {
    origin[delta] = k <= kLinkVarietyMaxK ? BigInt(solve_link_variety({k, delta, {1.0, 0.0}}).origin_multiplicity)
                                          : link_origin_multiplicity(k, delta);
  }
  VLambdaCount out;
  for (const WeakestEdge& we : w.edges) {
    const EdgeRemoval r = remove_weakest_edge(g, we.index);
    EdgeMultiplicity em;
    em.edge_index = we.index;
    em.edge = we.edge;
    em.delta = r.delta;
    em.v_rho_size = am_rho(r.reduced.graph, k);
    em.origin_multiplicity = origin[r.delta];
    em.contribution = em.v_rho_size * em.origin_multiplicity;
    out.size += em.v_rho_size;
    out.total += em.contribution;
    out.per_edge.push_back(std::move(em));
  }
  return out;
}

struct MultiplicityReport {
  int k = 0;
  BigInt am_rho;
  BigInt am_lambda;
  BigInt v_lambda_size;
  BigInt v_lambda_total;
  std::size_t n0 = 0;  // pendant weakest edges
  std::size_t n1 = 0;  // non-pendant weakest edges
  BigInt f0, f1;
  std::vector<EdgeMultiplicity> per_edge;
};

/// am_Lambda from the weakest-edge formula, cross-checked against the
/// eigenvector count; a mismatch is an InternalError.
inline MultiplicityReport am_lambda(const Graph& g, int k) {
  if (k == 3) throw PreconditionError("k=3 multiplicity not provided by the method");
  detail::require_power_k(k, 4, "am_lambda");
  detail::require_second_modulus(g, "am_lambda");
  MultiplicityReport r;
  r.k = k;
  r.am_rho = am_rho(g, k);
  const WeakestEdgeReport w = weakest_edges(g);
  r.n0 = w.pendant_count();
  r.n1 = w.non_pendant_count();
  r.f0 = lambda_edge_contribution(g, k, 0);
  r.f1 = lambda_edge_contribution(g, k, 1);
  r.am_lambda = r.f0 * r.n0 + r.f1 * r.n1;
  VLambdaCount c = count_V_lambda(g, k);
  r.v_lambda_size = c.size;
  r.v_lambda_total = c.total;
  r.per_edge = std::move(c.per_edge);
  if (r.v_lambda_total != r.am_lambda) {
    throw InternalError("#V_Lambda " + to_decimal(r.v_lambda_total) + " != am_Lambda " + to_decimal(r.am_lambda));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Spectral moments.

/// S_d(G^(k)) exactly: zero unless k | d; otherwise the sum over connected
/// edge subsets F with |F| <= d/k of
///   2^{|E_F|-|V_F|} (k-1)^{|V|-|V_F|+(k-2)(|E|-|E_F|)} k^{|V_F|+|E_F|(k-3)} p_{2d/k}(F).
inline BigInt spectral_moment(const Graph& g, int k, int d) {
  detail::require_power_k(k, 3, "spectral_moment");
  if (d < 1) throw PreconditionError("spectral_moment: d must be >= 1");
  if (d % k != 0) return 0;
  const int ell = d / k;
  const std::size_t max_edges = std::min<std::size_t>(static_cast<std::size_t>(ell), g.size());
  if (max_edges > kCoveringWalkEdgeCap) {
    throw PreconditionError("spectral_moment: subsets of more than " + std::to_string(kCoveringWalkEdgeCap) +
                            " edges required");
  }
  const long long n = static_cast<long long>(g.order()), m = static_cast<long long>(g.size());
  BigInt total = 0;
  for (const auto& subset : connected_edge_subsets(g, max_edges)) {
    const Graph f = edge_subgraph(g, subset).graph;
    BigInt term = covering_parity_closed_walks(f, 2 * ell).count;
    if (term == 0) continue;
    const long long vf = static_cast<long long>(f.order()), ef = static_cast<long long>(f.size());
    term *= ipow(k - 1, n - vf + (k - 2) * (m - ef)) * ipow(k, vf + ef * (k - 3));
    const long long twos = ef - vf;
    if (twos >= 0) {
      term <<= static_cast<unsigned>(twos);
    } else {
      const BigInt div = ipow(2, -twos);
      if (term % div != 0) throw InternalError("spectral_moment: non-integral subset contribution");
      term /= div;
    }
    total += term;
  }
  return total;
}

namespace detail {

inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

using HiFloat = boost::multiprecision::cpp_bin_float_100;

// Rayleigh quotient iteration from the double-precision top eigenpair. Cubic
// convergence, so a handful of steps reaches the full 100 digits. g may be
// disconnected (G - e for a cut edge).
inline HiFloat refined_radius(const Graph& g) {
  const std::size_t n = g.order();
  const EigenSystem es = sym_eig_system(adjacency(g));
  std::vector<HiFloat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = es.vectors(i, n - 1);
  HiFloat mu = es.spectrum.largest();
  auto normalize = [&](std::vector<HiFloat>& v) {
    HiFloat s = 0;
    for (const HiFloat& t : v) s += t * t;
    s = sqrt(s);
    for (HiFloat& t : v) t /= s;
  };
  normalize(x);
  for (int it = 0; it < 8; ++it) {
    // solve (A - mu I) y = x by partial-pivot elimination
    std::vector<std::vector<HiFloat>> m(n, std::vector<HiFloat>(n + 1, HiFloat(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (const Incidence& inc : g.incident(i)) m[i][inc.neighbor] = 1;
      m[i][i] -= mu;
      m[i][n] = x[i];
    }
    bool singular = false;
    for (std::size_t c = 0; c < n && !singular; ++c) {
      std::size_t piv = c;
      for (std::size_t r = c + 1; r < n; ++r)
        if (abs(m[r][c]) > abs(m[piv][c])) piv = r;
      if (m[piv][c] == 0) {
        singular = true;
        break;
      }
      std::swap(m[c], m[piv]);
      for (std::size_t r = c + 1; r < n; ++r) {
        const HiFloat f = m[r][c] / m[c][c];
        if (f == 0) continue;
        for (std::size_t j = c; j <= n; ++j) m[r][j] -= f * m[c][j];
      }
    }
    if (singular) break;  // mu is exact to working precision
    std::vector<HiFloat> y(n);
    for (std::size_t i = n; i-- > 0;) {
      HiFloat acc = m[i][n];
      for (std::size_t j = i + 1; j < n; ++j) acc -= m[i][j] * y[j];
      y[i] = acc / m[i][i];
    }
    normalize(y);
    x = std::move(y);
    HiFloat q = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (const Incidence& inc : g.incident(i)) q += x[i] * x[inc.neighbor];
    mu = q;
  }
  return mu;
}

}  // namespace detail

/// rho(G)^2 as an exact integer when it is one. rho^2 is an algebraic integer,
/// so it is rational only if integral; the candidate is confirmed by
/// det(A^2 - R I) = 0 in exact arithmetic.
inline std::optional<BigInt> exact_square_radius(const Graph& g) {
  const double r2 = std::pow(spectral_radius(g), 2);
  const double rounded = std::round(r2);
  if (std::abs(r2 - rounded) > 1e-7) return std::nullopt;
  const std::size_t n = g.order();
  std::vector<std::vector<BigInt>> a2(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (const Incidence& x : g.incident(i))
      for (const Incidence& y : g.incident(x.neighbor)) a2[i][y.neighbor] += 1;
  const BigInt r(static_cast<long long>(rounded));
  for (std::size_t i = 0; i < n; ++i) a2[i][i] -= r;
  if (detail::bareiss_determinant(std::move(a2)) != 0) return std::nullopt;
  return r;
}

struct MomentEstimate {
  int ell = 0;
  BigInt moment;                     // S_{k ell}(G^(k))
  std::optional<BigRational> exact;  // present when rho(G)^2 and rho_E(G)^2 are integers
  long double value = 0.0L;
};

/// (S_{k ell} - k^{|E|(k-3)+|V|} rho(G)^{2 ell}) / (k rho_E(G)^{2 ell}), which
/// tends to am_Lambda as ell grows.
inline MomentEstimate moment_estimate_am_lambda(const Graph& g, int k, int ell) {
  detail::require_power_k(k, 4, "moment_estimate_am_lambda");
  detail::require_second_modulus(g, "moment_estimate_am_lambda");
  if (ell < 1) throw PreconditionError("moment_estimate_am_lambda: ell must be >= 1");
  MomentEstimate est;
  est.ell = ell;
  est.moment = spectral_moment(g, k, k * ell);
  const BigInt top_count = ipow(k, static_cast<long long>(g.size()) * (k - 3) + static_cast<long long>(g.order()));

  const WeakestEdgeReport w = weakest_edges(g);
  const auto rho2 = exact_square_radius(g);
  const auto rhoE2 = exact_square_radius(delete_edge(g, w.edges.front().index));
  if (rho2 && rhoE2) {
    const BigRational num = BigRational(est.moment - top_count * ipow(*rho2, ell));
    est.exact = num / BigRational(k * ipow(*rhoE2, ell));
    est.value = to_long_double(*est.exact);
  } else {
    // the subtraction cancels (rho / rho_E)^{2 ell} worth of digits
    using detail::HiFloat;
    const HiFloat rho = detail::refined_radius(g);
    const HiFloat rhoE = detail::refined_radius(delete_edge(g, w.edges.front().index));
    const HiFloat num = HiFloat(est.moment) - HiFloat(top_count) * pow(rho, 2 * ell);
    est.value = static_cast<long double>(num / (HiFloat(k) * pow(rhoE, 2 * ell)));
  }
  return est;
}

// ---------------------------------------------------------------------------
// Eigenpairs.

struct Eigenpair {
  Complex lambda;
  std::vector<Complex> vector;
  double residual = 0.0;
};

/// max_i | sum_{h containing i} x^{h \ i} - lambda x_i^{k-1} |.
inline double eigen_residual(const PowerHypergraph& h, Complex lambda, std::span<const Complex> x) {
  if (x.size() != h.order()) {
    throw PreconditionError("eigen_residual: vector has " + std::to_string(x.size()) + " entries, hypergraph has " +
                            std::to_string(h.order()) + " vertices");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < h.order(); ++i) {
    Complex sum{0.0, 0.0};
    for (std::size_t e : h.incident(i)) {
      Complex prod{1.0, 0.0};
      for (std::size_t j : h.hyperedge(e))
        if (j != i) prod *= x[j];
      sum += prod;
    }
    worst = std::max(worst, std::abs(sum - lambda * detail::cpow(x[i], h.k() - 1)));
  }
  return worst;
}

struct EigenpairCheck {
  bool ok = false;
  double residual = 0.0;
};

inline EigenpairCheck verify_eigenpair(const PowerHypergraph& h, const Eigenpair& pair, double tol) {
  const double r = eigen_residual(h, pair.lambda, pair.vector);
  bool nonzero = false;
  for (const Complex& c : pair.vector) nonzero = nonzero || c != Complex(0.0, 0.0);
  return {nonzero && r <= tol, r};
}

struct LiftedEigenpair {
  Eigenpair pair;
  std::size_t edge_index = 0;
  int delta = 1;
  std::vector<std::size_t> zero_support;  // vertices of G^(k) with x_v = 0, ascending
};

/// Lambda-eigenvector of G^(k) supported off the weakest edge e: the Perron
/// pair (beta, y) of G_e gives x_u = y_u^{2/k} on kept original vertices and
/// x_v = sqrt(x_a x_b / Lambda) on every added vertex of a kept edge {a,b};
/// N_e (and the pendant endpoint when delta = 0) are zero.
inline LiftedEigenpair lift_eigenvector(const Graph& g, int k, std::size_t e) {
  detail::require_power_k(k, 4, "lift_eigenvector");
  detail::require_second_modulus(g, "lift_eigenvector");
  if (e >= g.size()) throw std::out_of_range("lift_eigenvector: edge index out of range");
  const WeakestEdgeReport w = weakest_edges(g);
  if (std::none_of(w.edges.begin(), w.edges.end(), [&](const WeakestEdge& we) { return we.index == e; })) {
    throw PreconditionError("lift_eigenvector: edge {" + std::to_string(g.edge(e).u) + "," +
                            std::to_string(g.edge(e).v) + "} is not a weakest edge");
  }
  const EdgeRemoval r = remove_weakest_edge(g, e);
  const PerronPair pp = perron_pair(r.reduced.graph);
  const double lam = std::pow(pp.value, 2.0 / k);

  const PowerHypergraph h(g, k);
  std::vector<Complex> x(h.order(), Complex(0.0, 0.0));
  for (std::size_t v = 0; v < g.order(); ++v)
    if (const auto nv = r.reduced.new_label[v]) x[v] = std::pow(pp.vector[*nv], 2.0 / k);
  for (std::size_t f = 0; f < g.size(); ++f) {
    if (f == e) continue;
    const double c = std::sqrt(x[g.edge(f).u].real() * x[g.edge(f).v].real() / lam);
    for (std::size_t v : h.added_vertices(f)) x[v] = c;
  }

  LiftedEigenpair out;
  out.edge_index = e;
  out.delta = r.delta;
  for (std::size_t v = 0; v < x.size(); ++v)
    if (x[v] == Complex(0.0, 0.0)) out.zero_support.push_back(v);
  out.pair.lambda = lam;
  out.pair.residual = eigen_residual(h, out.pair.lambda, x);
  out.pair.vector = std::move(x);
  return out;
}

/// One lifted eigenpair per weakest edge, in edge order.
inline std::vector<LiftedEigenpair> lift_all_eigenvectors(const Graph& g, int k) {
  detail::require_second_modulus(g, "lift_all_eigenvectors");
  std::vector<LiftedEigenpair> out;
  for (const WeakestEdge& we : weakest_edges(g).edges) out.push_back(lift_eigenvector(g, k, we.index));
  return out;
}

}  // namespace powerhg
