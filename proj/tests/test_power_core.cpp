#include "powerhg/power.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace powerhg;

namespace {

const double kSqrt2 = std::sqrt(2.0);

std::set<std::size_t> expected_zero_support(const Graph& g, const PowerHypergraph& h, std::size_t e, int delta) {
  std::set<std::size_t> z(h.added_vertices(e).begin(), h.added_vertices(e).end());
  if (delta == 0) z.insert(g.degree(g.edge(e).u) == 1 ? g.edge(e).u : g.edge(e).v);
  return z;
}

}  // namespace

TEST(BuildPower, Examples) {
  const PowerHypergraph p3 = build_power(family::path(3), 4);
  EXPECT_EQ(p3.order(), 7u);
  EXPECT_EQ(p3.size(), 2u);
  for (const auto& e : p3.hyperedges()) EXPECT_EQ(e.size(), 4u);
  EXPECT_EQ(build_power(family::complete(3), 3).order(), 6u);
  EXPECT_EQ(build_power(family::complete(3), 3).size(), 3u);
  EXPECT_EQ(build_power(family::path(2), 5).order(), 5u);
  EXPECT_EQ(build_power(family::path(2), 5).size(), 1u);
  EXPECT_THROW(build_power(family::path(2), 2), PreconditionError);
}

TEST(BuildPower, VertexLayout) {
  const PowerHypergraph h = build_power(family::path(3), 4);
  EXPECT_EQ(h.hyperedge(1), std::vector<std::size_t>({1, 2, 5, 6}));
  EXPECT_EQ(h.owner_edge(4), std::optional<std::size_t>(0));
  EXPECT_FALSE(h.owner_edge(1).has_value());
  EXPECT_TRUE(h.is_original(2));
  EXPECT_FALSE(h.is_original(3));
  EXPECT_EQ(h.degree(1), 2u);
  // degree-one vertices: both pendant originals and all four added vertices
  EXPECT_EQ(h.core_vertices(), std::vector<std::size_t>({0, 2, 3, 4, 5, 6}));
}

TEST(PowerRadius, Examples) {
  for (int k = 3; k <= 7; ++k) EXPECT_NEAR(power_spectral_radius(family::path(2), k), 1.0, 1e-12);
  EXPECT_NEAR(power_spectral_radius(family::path(3), 4), std::pow(2.0, 0.25), 1e-12);
  EXPECT_NEAR(power_spectral_radius(family::complete(3), 4), kSqrt2, 1e-12);
}

TEST(Lambda, Examples) {
  EXPECT_NEAR(lambda(family::path(3), 4), 1.0, 1e-12);
  EXPECT_NEAR(lambda(family::cycle(4), 4), std::sqrt((1 + std::sqrt(5.0)) / 2), 1e-9);
  EXPECT_NEAR(lambda(family::complete(4), 4), std::sqrt((1 + std::sqrt(17.0)) / 2), 1e-9);
  EXPECT_NEAR(lambda(family::complete(3), 3), 1.0, 1e-12);
  EXPECT_NEAR(lambda(family::cycle(4), 3), std::cbrt(2.0), 1e-9);
  EXPECT_THROW(lambda(family::path(2), 4), PreconditionError);
}

TEST(Moduli, Examples) {
  const auto p3 = eigenvalue_moduli(family::path(3), 4);
  ASSERT_EQ(p3.size(), 2u);
  EXPECT_NEAR(p3[0], 1.0, 1e-12);
  EXPECT_NEAR(p3[1], std::pow(2.0, 0.25), 1e-12);
  const auto k2 = eigenvalue_moduli(family::path(2), 4);
  ASSERT_EQ(k2.size(), 1u);
  EXPECT_NEAR(k2[0], 1.0, 1e-12);
  const auto k3 = eigenvalue_moduli(family::complete(3), 4);
  ASSERT_EQ(k3.size(), 3u);
  EXPECT_NEAR(k3[0], 1.0, 1e-12);
  EXPECT_NEAR(k3[1], std::pow(2.0, 0.25), 1e-12);
  EXPECT_NEAR(k3[2], kSqrt2, 1e-12);
}

// The largest two moduli are rho(G^(k)) and Lambda, and Lambda is itself a modulus.
TEST(Moduli, TopTwoMatchRadiusAndLambda) {
  for (const Graph& g : testsupport::connected_graphs(6, 5)) {
    if (g.size() < 2) continue;
    for (int k : {3, 4, 5}) {
      const auto m = eigenvalue_moduli(g, k);
      ASSERT_GE(m.size(), 2u);
      EXPECT_NEAR(m.back(), power_spectral_radius(g, k), 1e-9) << format_edge_list(g) << "k=" << k;
      EXPECT_NEAR(m[m.size() - 2], lambda(g, k), 1e-9) << format_edge_list(g) << "k=" << k;
    }
  }
}

TEST(AmRho, Examples) {
  EXPECT_EQ(am_rho(family::path(2), 4), 16);
  EXPECT_EQ(am_rho(family::path(3), 4), 256);
  EXPECT_EQ(am_rho(family::complete(3), 3), 9);
}

TEST(AmLambda, Examples) {
  const MultiplicityReport p3 = am_lambda(family::path(3), 4);
  EXPECT_EQ(p3.am_lambda, 352);
  EXPECT_EQ(p3.n0, 2u);
  EXPECT_EQ(p3.n1, 0u);
  EXPECT_EQ(p3.f0, 176);
  ASSERT_EQ(p3.per_edge.size(), 2u);
  for (const EdgeMultiplicity& e : p3.per_edge) {
    EXPECT_EQ(e.v_rho_size, 16);
    EXPECT_EQ(e.origin_multiplicity, 11);
  }

  const MultiplicityReport k3 = am_lambda(family::complete(3), 4);
  EXPECT_EQ(k3.am_lambda, 768);
  EXPECT_EQ(k3.n1, 3u);
  EXPECT_EQ(k3.f1, 256);

  const MultiplicityReport c4 = am_lambda(family::cycle(4), 4);
  EXPECT_EQ(c4.am_lambda, 16384);
  EXPECT_EQ(c4.n1, 4u);
  EXPECT_EQ(c4.f1, 4096);
}

TEST(AmLambda, CubicCaseIsRefused) {
  try {
    am_lambda(family::path(3), 3);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_STREQ(e.what(), "k=3 multiplicity not provided by the method");
  }
}

TEST(AmLambda, EdgeContributionFactorisation) {
  // f_delta = |V_rho(G_e^(k))| * m_delta(0) with the re-derived exponents
  for (const Graph& g : testsupport::connected_graphs(6, 6)) {
    if (g.size() < 2) continue;
    for (int k = 4; k <= 9; ++k) {
      const long long e = static_cast<long long>(g.size()), v = static_cast<long long>(g.order());
      for (int delta : {0, 1}) {
        const BigInt size = ipow(k, e * (k - 3) + v + 1 - k + delta);
        const BigInt origin = ipow(k - 1, k - 1 - delta) - ipow(2, delta) * ipow(k, k - 2 - delta);
        EXPECT_EQ(size * origin, lambda_edge_contribution(g, k, delta));
        EXPECT_EQ(origin, link_origin_multiplicity(k, delta));
      }
    }
  }
}

TEST(CountVLambda, Examples) {
  const VLambdaCount p3 = count_V_lambda(family::path(3), 4);
  EXPECT_EQ(p3.size, 32);
  EXPECT_EQ(p3.total, 352);
  // three weakest edges, G_e = P_3 each: 4^{2+3-1} = 256 points per edge
  const VLambdaCount k3 = count_V_lambda(family::complete(3), 4);
  EXPECT_EQ(k3.size, 768);
  EXPECT_EQ(k3.total, 768);
  for (const EdgeMultiplicity& e : k3.per_edge) EXPECT_EQ(e.origin_multiplicity, 1);
  const VLambdaCount c4 = count_V_lambda(family::cycle(4), 4);
  EXPECT_EQ(c4.size, 4 * 4096);
  EXPECT_EQ(c4.total, am_lambda(family::cycle(4), 4).am_lambda);
}

TEST(CountVLambda, MatchesFormulaOnCorpus) {
  for (const Graph& g : testsupport::connected_graphs(7, 5)) {
    if (g.size() < 2) continue;
    for (int k : {4, 5, 6, 9}) EXPECT_EQ(count_V_lambda(g, k).total, am_lambda(g, k).am_lambda);
  }
}

TEST(SpectralMoment, Examples) {
  EXPECT_EQ(spectral_moment(family::path(2), 4, 4), 64);
  EXPECT_EQ(spectral_moment(family::path(3), 4, 8), 5504);
  for (const Graph& g : {family::path(3), family::complete(4), family::cycle(5)}) EXPECT_EQ(spectral_moment(g, 4, 6), 0);
}

TEST(SpectralMoment, SingleEdgeHost) {
  // one hyperedge
  for (int k = 3; k <= 7; ++k) EXPECT_EQ(spectral_moment(family::path(2), k, k), ipow(k, k - 1));
}

TEST(SpectralMoment, VanishesOffMultiplesOfK) {
  for (const Graph& g : testsupport::connected_graphs(5, 5))
    for (int k : {3, 4, 5})
      for (int d = 1; d <= 3 * k; ++d)
        if (d % k != 0) {
          EXPECT_EQ(spectral_moment(g, k, d), 0);
        }
}

TEST(SpectralMoment, ClosedFormsForPathAndTriangle) {
  for (int ell = 1; ell <= 10; ++ell) {
    EXPECT_EQ(spectral_moment(family::path(3), 4, 4 * ell), 1024 * ipow(2, ell) + 1408);
    EXPECT_EQ(spectral_moment(family::complete(3), 4, 4 * ell), 4096 * ipow(4, ell) + 3072 * ipow(2, ell) + 24128);
  }
}

// S_{k l} = sum_j c_j (sigma_j^2)^l over the distinct squared signed eigenvalues;
// the fitted weights are nonnegative multiples of k, with k am_rho on top and
// k am_Lambda next.
TEST(SpectralMoment, ModuliFitRecoversMultiplicities) {
  const int k = 4;
  for (const Graph& g : testsupport::connected_graphs(6, 4)) {
    if (g.size() < 2) continue;
    const auto sq = squared_signed_eigenvalues(g, k);
    const std::size_t r = sq.size();
    std::vector<long double> bases(sq.begin(), sq.end()), sums;
    for (std::size_t ell = 1; ell <= r; ++ell)
      sums.push_back(spectral_moment(g, k, k * static_cast<int>(ell)).convert_to<long double>());
    const auto c = testsupport::fit_power_sums(bases, sums);
    std::vector<long long> ci;
    for (long double x : c) {
      const long long rounded = std::llround(x);
      EXPECT_NEAR(static_cast<double>(x), static_cast<double>(rounded), 1e-4) << format_edge_list(g);
      EXPECT_GE(rounded, 0);
      EXPECT_EQ(rounded % k, 0) << format_edge_list(g);
      ci.push_back(rounded);
    }
    EXPECT_EQ(BigInt(ci.back()), k * am_rho(g, k)) << format_edge_list(g);
    EXPECT_EQ(BigInt(ci[r - 2]), k * am_lambda(g, k).am_lambda) << format_edge_list(g);
    for (std::size_t extra = 1; extra <= 3; ++extra) {
      const int ell = static_cast<int>(r + extra);
      long double predicted = 0;
      for (std::size_t j = 0; j < r; ++j) predicted += ci[j] * std::pow(bases[j], static_cast<long double>(ell));
      const long double actual = spectral_moment(g, k, k * ell).convert_to<long double>();
      EXPECT_NEAR(static_cast<double>(predicted / actual), 1.0, 1e-9) << format_edge_list(g);
    }
  }
}

TEST(MomentEstimate, Examples) {
  const MomentEstimate p3 = moment_estimate_am_lambda(family::path(3), 4, 3);
  ASSERT_TRUE(p3.exact.has_value());
  EXPECT_EQ(*p3.exact, 352);
  for (int ell = 1; ell <= 15; ++ell) EXPECT_EQ(*moment_estimate_am_lambda(family::path(3), 4, ell).exact, 352);

  // the third modulus 2^{1/4} decays against sqrt 2 like 2^{-ell}
  const MomentEstimate k3 = moment_estimate_am_lambda(family::complete(3), 4, 20);
  ASSERT_TRUE(k3.exact.has_value());
  EXPECT_EQ(*k3.exact, BigRational(768) + BigRational(6032, 1 << 20));
  EXPECT_THROW(moment_estimate_am_lambda(family::path(2), 4, 3), PreconditionError);
}

TEST(MomentEstimate, IrrationalRadiusFallsBack) {
  // rho_E^2 is the golden ratio squared; the next squared modulus is 2
  const MomentEstimate c4 = moment_estimate_am_lambda(family::cycle(4), 4, 60);
  EXPECT_FALSE(c4.exact.has_value());
  EXPECT_NEAR(static_cast<double>(c4.value), 16384.0, 0.1);
  // large ell would lose every digit in long double
  EXPECT_NEAR(static_cast<double>(moment_estimate_am_lambda(family::cycle(4), 4, 100).value), 16384.0, 1e-6);
  // weakest edge of P_4 is a cut edge, so G - e is disconnected
  const MomentEstimate p4 = moment_estimate_am_lambda(family::path(4), 4, 40);
  EXPECT_FALSE(p4.exact.has_value());
  EXPECT_NEAR(static_cast<double>(p4.value), static_cast<double>(am_lambda(family::path(4), 4).am_lambda), 0.1);
}

TEST(ExactSquareRadius, Detection) {
  EXPECT_EQ(exact_square_radius(family::complete(3)), std::optional<BigInt>(4));
  EXPECT_EQ(exact_square_radius(family::path(3)), std::optional<BigInt>(2));
  EXPECT_EQ(exact_square_radius(family::star(5)), std::optional<BigInt>(5));
  EXPECT_FALSE(exact_square_radius(family::path(4)).has_value());
}

TEST(Lift, PathExample) {
  const Graph p3 = family::path(3);
  const LiftedEigenpair lp = lift_eigenvector(p3, 4, *p3.edge_index(0, 1));
  EXPECT_NEAR(lp.pair.lambda.real(), 1.0, 1e-12);
  EXPECT_LE(lp.pair.residual, 1e-15);
  EXPECT_EQ(lp.delta, 0);
  const std::vector<double> want = {0, 1, 1, 0, 0, 1, 1};
  for (std::size_t v = 0; v < want.size(); ++v) EXPECT_NEAR(std::abs(lp.pair.vector[v] - want[v]), 0.0, 1e-12) << v;
}

TEST(Lift, TriangleExample) {
  const Graph k3 = family::complete(3);
  const std::size_t e = *k3.edge_index(0, 1);
  const LiftedEigenpair lp = lift_eigenvector(k3, 4, e);
  const PowerHypergraph h(k3, 4);
  EXPECT_NEAR(lp.pair.lambda.real(), std::pow(2.0, 0.25), 1e-12);
  EXPECT_LT(lp.pair.residual, 1e-12);
  EXPECT_NEAR(lp.pair.vector[0].real(), 1.0, 1e-12);
  EXPECT_NEAR(lp.pair.vector[1].real(), 1.0, 1e-12);
  EXPECT_NEAR(lp.pair.vector[2].real(), std::pow(2.0, 0.25), 1e-12);
  for (std::size_t f = 0; f < k3.size(); ++f)
    for (std::size_t v : h.added_vertices(f)) EXPECT_NEAR(lp.pair.vector[v].real(), f == e ? 0.0 : 1.0, 1e-12);
}

TEST(Lift, RejectsNonWeakestEdge) {
  // the bridge of a paw is not weakest
  const Graph paw(4, {make_edge(0, 1), make_edge(1, 2), make_edge(0, 2), make_edge(2, 3)});
  const WeakestEdgeReport w = weakest_edges(paw);
  for (std::size_t e = 0; e < paw.size(); ++e) {
    const bool weakest =
        std::any_of(w.edges.begin(), w.edges.end(), [&](const WeakestEdge& x) { return x.index == e; });
    if (!weakest) {
      EXPECT_THROW(lift_eigenvector(paw, 4, e), PreconditionError);
    }
  }
  EXPECT_THROW(lift_eigenvector(family::complete(3), 3, 0), PreconditionError);
}

TEST(Lift, ResidualAndZeroSupportOnCorpus) {
  for (const Graph& g : testsupport::connected_graphs_between(3, 6)) {
    for (int k : {4, 5}) {
      const PowerHypergraph h(g, k);
      for (const LiftedEigenpair& lp : lift_all_eigenvectors(g, k)) {
        EXPECT_LE(lp.pair.residual, 1e-10) << format_edge_list(g);
        const auto want = expected_zero_support(g, h, lp.edge_index, lp.delta);
        EXPECT_EQ(std::set<std::size_t>(lp.zero_support.begin(), lp.zero_support.end()), want) << format_edge_list(g);
        EXPECT_TRUE(verify_eigenpair(h, lp.pair, 1e-10).ok);
      }
    }
  }
}

TEST(VerifyEigenpair, Examples) {
  for (int k = 3; k <= 6; ++k) {
    const PowerHypergraph h(family::path(2), k);
    const Eigenpair ones{1.0, std::vector<Complex>(h.order(), 1.0), 0.0};
    const EigenpairCheck c = verify_eigenpair(h, ones, 1e-12);
    EXPECT_TRUE(c.ok);
    EXPECT_EQ(c.residual, 0.0);
  }
  const PowerHypergraph h4(family::path(2), 4);
  const EigenpairCheck bad = verify_eigenpair(h4, {2.0, std::vector<Complex>(4, 1.0), 0.0}, 1e-6);
  EXPECT_FALSE(bad.ok);
  EXPECT_NEAR(bad.residual, 1.0, 1e-12);
  EXPECT_FALSE(verify_eigenpair(h4, {1.0, std::vector<Complex>(4, 0.0), 0.0}, 1e-6).ok);
  EXPECT_THROW(verify_eigenpair(h4, {1.0, std::vector<Complex>(3, 1.0), 0.0}, 1e-6), PreconditionError);
}
