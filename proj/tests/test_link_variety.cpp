#include "powerhg/link_variety.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace powerhg;

namespace {

const std::vector<Complex> kMus = {{1.0, 0.0}, {2.0, 0.0}, {1.0, 1.0}};

double scaled_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double d = 0.0, s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d = std::max(d, std::abs(a[i] - b[i]));
    s = std::max({s, std::abs(a[i]), std::abs(b[i])});
  }
  return d / s;
}

}  // namespace

TEST(LinkVariety, Examples) {
  const VarietyReport a = solve_link_variety({4, 1, {1.0, 0.0}});
  EXPECT_EQ(a.nonzero_total, 8);
  EXPECT_EQ(a.origin_multiplicity, 1);
  EXPECT_EQ(a.bezout, 9);
  for (const auto& p : a.nonzero_solutions) {
    EXPECT_NEAR(std::abs(p[1] - std::pow(p[0], 3)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(std::pow(p[0], 8) - 1.0), 0.0, 1e-12);
  }
  const VarietyReport b = solve_link_variety({3, 0, {1.0, 0.0}});
  EXPECT_EQ(b.nonzero_total, 3);
  EXPECT_EQ(b.origin_multiplicity, 1);
  const VarietyReport c = solve_link_variety({4, 0, {1.0, 0.0}});
  EXPECT_EQ(c.nonzero_total, 16);
  EXPECT_EQ(c.origin_multiplicity, 11);
}

TEST(LinkVariety, Preconditions) {
  EXPECT_THROW(solve_link_variety({4, 2, {1.0, 0.0}}), PreconditionError);
  EXPECT_THROW(solve_link_variety({2, 0, {1.0, 0.0}}), PreconditionError);
  EXPECT_THROW(solve_link_variety({4, 0, {0.0, 0.0}}), PreconditionError);
  EXPECT_THROW(solve_link_variety({kLinkVarietyMaxK + 1, 0, {1.0, 0.0}}), PreconditionError);
}

TEST(LinkVariety, CountsAndDistinctness) {
  for (int k = 3; k <= 7; ++k) {
    for (int delta : {0, 1}) {
      for (const Complex& mu : kMus) {
        const LinkSystem sys{k, delta, mu};
        const VarietyReport r = solve_link_variety(sys);
        EXPECT_EQ(BigInt(r.nonzero_total), link_nonzero_count(k, delta));
        EXPECT_EQ(BigInt(r.origin_multiplicity), link_origin_multiplicity(k, delta));
        EXPECT_LE(r.max_residual, 1e-12);
        for (const auto& p : r.nonzero_solutions) EXPECT_TRUE(jacobian_nonsingular(sys, p));
        if (r.nonzero_solutions.size() <= 2000) {
          for (std::size_t i = 0; i < r.nonzero_solutions.size(); ++i)
            for (std::size_t j = i + 1; j < r.nonzero_solutions.size(); ++j)
              ASSERT_GT(scaled_distance(r.nonzero_solutions[i], r.nonzero_solutions[j]), 1e-6);
        }
      }
    }
  }
}

// Multiplying by k-th roots of unity whose product is 1 permutes the solutions.
TEST(LinkVariety, RootOfUnityClosure) {
  for (int k = 4; k <= 6; ++k) {
    for (int delta : {0, 1}) {
      const LinkSystem sys{k, delta, {1.0, 1.0}};
      const VarietyReport r = solve_link_variety(sys);
      const std::size_t vars = static_cast<std::size_t>(sys.variables());
      const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / k);
      for (std::size_t s = 0; s < std::min<std::size_t>(r.nonzero_solutions.size(), 20); ++s) {
        std::vector<Complex> q = r.nonzero_solutions[s];
        q[0] *= w;
        q[vars - 1] *= std::conj(w);
        EXPECT_LE(link_residual(sys, q), 1e-12);
        const bool listed = std::any_of(r.nonzero_solutions.begin(), r.nonzero_solutions.end(),
                                        [&](const auto& p) { return scaled_distance(p, q) < 1e-9; });
        EXPECT_TRUE(listed);
      }
    }
  }
}

TEST(Jacobian, Examples) {
  const LinkSystem a{4, 1, {1.0, 0.0}};
  for (const auto& p : solve_link_variety(a).nonzero_solutions) {
    EXPECT_TRUE(jacobian_nonsingular(a, p));
    const auto j = link_jacobian(a, p);
    EXPECT_NEAR(std::abs(j[0][0]), 3.0, 1e-12);
    EXPECT_NEAR(std::abs(j[0][1]), 1.0, 1e-12);
  }
  EXPECT_FALSE(jacobian_nonsingular(a, {0.0, 0.0}));
  const LinkSystem b{5, 0, {2.0, 0.0}};
  for (const auto& p : solve_link_variety(b).nonzero_solutions) EXPECT_TRUE(jacobian_nonsingular(b, p));
  EXPECT_THROW(jacobian_nonsingular(a, {1.0, 2.0}), PreconditionError);
  EXPECT_THROW(jacobian_nonsingular(a, {1.0}), PreconditionError);
}

// Nonzero solutions have |p_i| = |mu|^{-1/2} (delta = 1) or |mu|^{-1} (delta = 0).
TEST(LinkVariety, SolutionModuli) {
  for (int k = 4; k <= 6; ++k) {
    for (int delta : {0, 1}) {
      const Complex mu{1.0, 1.0};
      const double want = delta == 1 ? std::pow(std::abs(mu), -0.5) : 1.0 / std::abs(mu);
      for (const auto& p : solve_link_variety({k, delta, mu}).nonzero_solutions)
        for (const Complex& c : p) EXPECT_NEAR(std::abs(c), want, 1e-12);
    }
  }
}
