#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "zetareg/errors.hpp"
#include "zetareg/random.hpp"
#include "zetareg/specfun.hpp"
#include "zetareg/volumes.hpp"

namespace zetareg {
namespace {

double rel_err(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

ComplexMatrix random_matrix(std::mt19937_64& rng, int n) {
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = Complex(uniform(rng, -1, 1), uniform(rng, -1, 1));
  }
  return a;
}

ComplexMatrix random_positive(std::mt19937_64& rng, int n) {
  const ComplexMatrix b = random_matrix(rng, n);
  return b * b.adjoint() + 0.5 * ComplexMatrix::Identity(n, n);
}

TEST(GaussianIntegralTest, Examples) {
  ComplexMatrix a(1, 1);
  a(0, 0) = kTwoPi;
  EXPECT_LT(std::abs(gaussian_integral(a) - 1.0), 1e-15);
  a(0, 0) = 1.0;
  EXPECT_LT(rel_err(gaussian_integral(a), kTwoPi), 1e-15);
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  EXPECT_LT(rel_err(gaussian_integral(d), 19.7392088021787172377), 1e-15);
}

TEST(GaussianIntegralTest, InverseDeterminantProperty) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    auto rng = substream(71, i);
    const int n = 1 + static_cast<int>(i % 6);
    const ComplexMatrix a = random_positive(rng, n);
    const Complex det = (a / kTwoPi).determinant();
    EXPECT_LT(std::abs(gaussian_integral(a) * det - 1.0), 1e-12);
  }
}

TEST(GaussianIntegralTest, Errors) {
  ComplexMatrix singular = ComplexMatrix::Zero(2, 2);
  singular(0, 0) = 1.0;
  EXPECT_THROW(gaussian_integral(singular), SingularMatrixError);
  ComplexMatrix negative = ComplexMatrix::Identity(2, 2);
  negative(1, 1) = -1.0;
  EXPECT_THROW(gaussian_integral(negative), DomainError);
  EXPECT_THROW(gaussian_integral(ComplexMatrix(2, 3)), DomainError);
}

TEST(GaussianIntegralTest, MonteCarloAgreesWithinFourStandardErrors) {
  for (std::uint64_t i = 0; i < 4; ++i) {
    auto rng = substream(72, i);
    const ComplexMatrix a = random_positive(rng, 1 + static_cast<int>(i % 3));
    TruncationControl ctl;
    ctl.mc_samples = 200'000;
    ctl.seed = 1000 + i;
    const auto mc = gaussian_integral_mc(a, ctl);
    const Complex exact = gaussian_integral(a);
    EXPECT_EQ(mc.samples, ctl.mc_samples);
    EXPECT_GT(mc.standard_error, 0.0);
    EXPECT_LE(std::abs(mc.estimate - exact), 4.0 * mc.standard_error)
        << "exact=" << exact << " mc=" << mc.estimate << " se=" << mc.standard_error;
  }
}

TEST(GaussianIntegralTest, MonteCarloIsReproducible) {
  ComplexMatrix a = ComplexMatrix::Identity(2, 2);
  a(0, 1) = Complex(0.2, 0.1);
  a(1, 0) = std::conj(a(0, 1));
  TruncationControl ctl;
  ctl.mc_samples = 10'000;
  ctl.seed = 5;
  const auto first = gaussian_integral_mc(a, ctl);
  const auto second = gaussian_integral_mc(a, ctl);
  EXPECT_EQ(first.estimate, second.estimate);
  EXPECT_EQ(first.standard_error, second.standard_error);
  ctl.seed = 6;
  EXPECT_NE(gaussian_integral_mc(a, ctl).estimate, first.estimate);
  ctl.mc_samples = 0;
  EXPECT_THROW(gaussian_integral_mc(a, ctl), DomainError);
}

TEST(BerezinDetTest, Examples) {
  EXPECT_EQ(berezin_det(ComplexMatrix(0, 0)), Complex(1.0, 0.0));
  ComplexMatrix one(1, 1);
  one(0, 0) = Complex(3.0, -2.0);
  EXPECT_LT(std::abs(berezin_det(one) - Complex(3.0, -2.0)), 1e-15);
  ComplexMatrix swap = ComplexMatrix::Zero(2, 2);
  swap(0, 1) = 1.0;
  swap(1, 0) = 1.0;
  EXPECT_LT(std::abs(berezin_det(swap) + 1.0), 1e-15);
  EXPECT_THROW(berezin_det(ComplexMatrix::Identity(9, 9)), DimensionError);
}

TEST(BerezinDetTest, MatchesLuDeterminant) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    auto rng = substream(73, i);
    const int n = 1 + static_cast<int>(i % 6);
    const ComplexMatrix a = random_matrix(rng, n);
    const Complex lu = a.partialPivLu().determinant();
    EXPECT_LT(std::abs(berezin_det(a) - lu), 1e-12 * std::max(1.0, std::abs(lu))) << n;
  }
}

TEST(BerezinDetTest, MultiplicativeUnderRowAndColumnPermutations) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    auto rng = substream(74, i);
    const int n = 2 + static_cast<int>(i % 4);
    const ComplexMatrix a = random_matrix(rng, n);
    Eigen::PermutationMatrix<Eigen::Dynamic> p(n);
    Eigen::PermutationMatrix<Eigen::Dynamic> q(n);
    p.setIdentity();
    q.setIdentity();
    std::shuffle(p.indices().data(), p.indices().data() + n, rng);
    std::shuffle(q.indices().data(), q.indices().data() + n, rng);
    const ComplexMatrix paq = p * a * q;
    const double sign = static_cast<double>(p.determinant() * q.determinant());
    EXPECT_LT(std::abs(berezin_det(paq) - sign * berezin_det(a)), 1e-12);
  }
}

TEST(EquivariantVolumeTest, DegenerateFormGivesTwoPiOverLambdaSquared) {
  for (double lambda : {0.5, 1.0, 3.0}) {
    ComplexMatrix form = ComplexMatrix::Zero(2, 2);
    form(0, 1) = Complex(0.0, lambda);
    form(1, 0) = Complex(0.0, lambda);
    // Pfaffian-squared of the 2x2 block: det = lambda^2 up to i^2.
    const Complex det = berezin_det(form);
    EXPECT_LT(std::abs(det - lambda * lambda), 1e-14);
    const double expected = std::pow(kTwoPi / lambda, 2);
    EXPECT_LT(rel_err(kTwoPi * kTwoPi / det, expected), 1e-14);
  }
}

TEST(EquivariantVolumeTest, SuperintegralIsIndependentOfMu) {
  const std::vector<double> lambdas = {1.0, 2.5, 0.3};
  const double expected = equivariant_volume(lambdas);
  for (double mu : {0.1, 1.0, 17.0}) {
    EXPECT_LT(rel_err(equivariant_volume_superintegral(lambdas, mu), expected), 1e-13) << mu;
  }
  EXPECT_THROW(equivariant_volume_superintegral(lambdas, 0.0), DomainError);
  EXPECT_THROW(equivariant_volume(std::vector<double>{1.0, -1.0}), DomainError);
}

TEST(CharacterTest, Examples) {
  const std::vector<double> one = {1.0};
  const std::vector<double> two = {1.0, 2.0};
  EXPECT_NEAR(character_closed_form(1.0, one), 1.58197670686932642438, 1e-15);
  EXPECT_NEAR(character_closed_form(1.0, two), 1.82958397191339219757, 1e-15);
  EXPECT_NEAR(character_trace(1.0, one, 40), 1.58197670686932642438, 1e-15);
  EXPECT_NEAR(character_trace(1.0, two, 40), 1.82958397191339219757, 1e-15);
  EXPECT_EQ(character_trace(1.0, two, 0), 1.0);
  // Degree 1: 1 + e^-1 + e^-2.
  EXPECT_NEAR(character_trace(1.0, two, 1), 1.0 + std::exp(-1.0) + std::exp(-2.0), 1e-15);
}

TEST(CharacterTest, TruncationIncreasesToClosedFormWithinBound) {
  for (std::uint64_t i = 0; i < 30; ++i) {
    auto rng = substream(75, i);
    std::vector<double> lambdas;
    const int k = 1 + static_cast<int>(i % 4);
    for (int j = 0; j < k; ++j) lambdas.push_back(uniform(rng, 0.5, 3.0));
    if (i % 5 == 0) lambdas.push_back(lambdas.front());
    const double beta = uniform(rng, 0.5, 2.0);
    const double closed = character_closed_form(beta, lambdas);
    double previous = 0.0;
    for (std::size_t d = 0; d <= 60; d += 5) {
      const double trace = character_trace(beta, lambdas, d);
      EXPECT_GE(trace, previous);
      EXPECT_LE(closed - trace, character_tail_bound(beta, lambdas, d) * (1 + 1e-12) + 1e-14);
      previous = trace;
    }
  }
}

TEST(ClassicalLimitTest, Examples) {
  const std::vector<double> one = {1.0};
  EXPECT_NEAR(classical_limit_ratio(one, 1e-2) - 1.0, 0.0050083333, 1e-10);
  EXPECT_NEAR(classical_limit_ratio(one, 1e-3) - 1.0, 0.00050008333, 1e-11);
  EXPECT_NEAR(classical_limit_ratio(one, 1e-4) - 1.0, 5.00008333e-5, 1e-12);
}

TEST(ClassicalLimitTest, ChecksPassAndDecrease) {
  const std::vector<double> lambdas = {1.0, 2.0, 0.5};
  const std::vector<double> betas = {1e-1, 1e-2, 1e-3, 1e-4};
  const auto reports = classical_limit_check(lambdas, betas);
  ASSERT_EQ(reports.size(), betas.size());
  for (std::size_t k = 0; k < reports.size(); ++k) {
    EXPECT_TRUE(reports[k].pass) << reports[k].params;
    if (k > 0) EXPECT_LT(reports[k].abs_err, reports[k - 1].abs_err);
  }
  const std::vector<double> increasing = {1e-3, 1e-2};
  EXPECT_THROW(classical_limit_check(lambdas, increasing), DomainError);
}

TEST(ModePartitionTest, Examples) {
  EXPECT_NEAR(mode_partition_3d(1.0, 1.0, 1.0, 0).real(), 1.58197670686932642438, 1e-15);
  const Complex full = mode_partition_3d(std::log(2.0), 1.0, 1.0, std::nullopt, 1e-14);
  EXPECT_LT(rel_err(full, 3.46274661945506361153795734292), 1e-13);
  const Complex q_gamma_value =
      q_gamma(std::exp(-1.0), std::exp(-1.0), 1e-15);
  EXPECT_LT(rel_err(mode_partition_3d(1.0, 1.0, 1.0, std::nullopt, 1e-14), q_gamma_value), 1e-13);
  EXPECT_THROW(mode_partition_3d(0.0, 1.0, 1.0, 3), DomainError);
}

TEST(ModePartitionTest, PerModeFactorMatchesDeterminant) {
  for (std::uint64_t i = 0; i < 40; ++i) {
    auto rng = substream(76, i);
    const double beta = uniform(rng, 0.1, 3.0);
    const double hbar = uniform(rng, 0.1, 2.0);
    const double lambda = uniform(rng, 0.1, 2.0);
    const auto n = static_cast<std::size_t>(uniform(rng, 0.0, 12.0));
    const auto check = mode_factor_check(beta, hbar, lambda, n);
    EXPECT_LT(rel_err(check.via_regdet, check.direct), 1e-12);
    EXPECT_LT(rel_err(check.via_zeta, check.direct), 1e-12);
  }
}

}  // namespace
}  // namespace zetareg
