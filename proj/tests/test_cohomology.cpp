#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "knotrep/cohomology.hpp"
#include "knotrep/figure8.hpp"

using namespace knotrep;
using knotrep::testing::random_word;

namespace {

PresentationPtr free2() {
  return std::make_shared<const Presentation>(Alphabet::make(std::vector<std::string>{"x", "y"}, true),
                                              std::vector<Word>{});
}

MatrixRep random_free_rep(std::size_t m, std::uint64_t seed) {
  auto [a, b] = random_sl_pair(m, seed);
  return MatrixRep(free2(), {a, b});
}

const figure8::Bundle& bundle() {
  static const figure8::Bundle b = figure8::build_bundle();
  return b;
}

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

// sum_g (dr/dg) (rho(g) - I) = rho(r) - I.
double fundamental_identity_residual(const Word& r, const MatrixRep& rep) {
  const long n = static_cast<long>(rep.dim());
  CMatrix sum = CMatrix::Zero(n, n);
  for (std::uint32_t g = 0; g < rep.presentation()->generator_count(); ++g)
    sum += fox_derivative(r, GeneratorId{g}, rep, false) * (rep.image(GeneratorId{g}) - CMatrix::Identity(n, n));
  return max_abs(sum - (rep.eval(r) - CMatrix::Identity(n, n)));
}

}  // namespace

TEST(SlCoordinates, BasisIsDual) {
  for (std::size_t n : {2u, 3u, 4u}) {
    const std::size_t d = n * n - 1;
    for (std::size_t i = 0; i < d; ++i) {
      const CMatrix e = sl_basis_element(n, i);
      EXPECT_LE(std::abs(e.trace()), 1e-15);
      const auto c = sl_coordinates(e);
      ASSERT_EQ(static_cast<std::size_t>(c.size()), d);
      for (std::size_t j = 0; j < d; ++j) EXPECT_EQ(c(static_cast<long>(j)), Complex(i == j ? 1 : 0, 0));
    }
  }
}

TEST(Adjoint, IsAHomomorphism) {
  const CMatrix a = random_sl(3, 1), b = random_sl(3, 2);
  EXPECT_LE(max_abs(adjoint_matrix(a * b) - adjoint_matrix(a) * adjoint_matrix(b)), 1e-11);
  EXPECT_LE(max_abs(adjoint_matrix(CMatrix::Identity(3, 3)) - CMatrix::Identity(8, 8)), 0.0);
  const CMatrix x = sl_basis_element(3, 5);
  const auto lhs = sl_coordinates(a * x * a.inverse());
  EXPECT_LE((lhs - adjoint_matrix(a) * sl_coordinates(x)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Fox, BaseRules) {
  const MatrixRep rho = random_free_rep(2, 3);
  const auto& p = *rho.presentation();
  const GeneratorId x{0}, y{1};
  const CMatrix id = CMatrix::Identity(2, 2);
  EXPECT_LE(max_abs(fox_derivative(p.parse("x"), x, rho, false) - id), 0.0);
  EXPECT_LE(max_abs(fox_derivative(p.parse("x"), y, rho, false)), 0.0);
  EXPECT_LE(max_abs(fox_derivative(p.parse("x^2"), x, rho, false) - (id + rho.image(x))), 1e-15);
  EXPECT_LE(max_abs(fox_derivative(p.parse("x^-1"), x, rho, false) + rho.image(x).inverse()), 1e-15);
  EXPECT_LE(max_abs(fox_derivative(p.parse("y x"), x, rho, false) - rho.image(y)), 1e-15);
  EXPECT_LE(max_abs(fox_derivative(p.parse("x"), x, rho, true) - CMatrix::Identity(3, 3)), 0.0);
}

TEST(Fox, FundamentalIdentity) {
  const MatrixRep rho = random_free_rep(3, 4);
  std::mt19937_64 rng(10);
  for (int i = 0; i < 50; ++i)
    EXPECT_LE(fundamental_identity_residual(random_word(rho.presentation()->alphabet(), 16, rng), rho), 1e-9);

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto [a, bm] = random_sl_pair(2, seed);
    const auto ind = figure8::induce_figure8(bundle(), a, bm);
    for (const auto* rep : {&ind.st, &ind.sa})
      for (const auto& r : rep->presentation()->relators()) EXPECT_LE(fundamental_identity_residual(r, *rep), 1e-9);
    const MatrixRep alpha = figure8::alpha_rep(bundle(), a, bm);
    for (const auto& r : alpha.presentation()->relators()) EXPECT_LE(fundamental_identity_residual(r, alpha), 1e-9);
  }
}

TEST(H1, FreeGroupSl2) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const DimReport d = h1_dimension(random_free_rep(2, seed));
    EXPECT_EQ(d.dim_Z1, 6u);
    EXPECT_EQ(d.dim_B1, 3u);
    EXPECT_EQ(d.dim_H0, 0u);
    EXPECT_EQ(d.dim_H1, 3u);
    EXPECT_FALSE(d.flagged);
  }
}

TEST(H1, FreeGroupSl4) {
  const DimReport d = h1_dimension(random_free_rep(4, 1));
  EXPECT_EQ(d.dim_Z1, 30u);
  EXPECT_EQ(d.dim_H0, 0u);
  EXPECT_EQ(d.dim_H1, 15u);
}

TEST(H1, TrivialRep) {
  const DimReport d = h1_dimension(trivial_rep(free2(), 2));
  EXPECT_EQ(d.dim_H0, 3u);
  EXPECT_EQ(d.dim_B1, 0u);
  EXPECT_EQ(d.dim_H1, 6u);
}

TEST(H1, FigureEightInduced) {
  const auto [a, bm] = random_sl_pair(2, 0);
  const auto ind = figure8::induce_figure8(bundle(), a, bm).st;
  const DimReport d = h1_dimension(ind);
  EXPECT_EQ(d.dim_H1, d.dim_Z1 - d.dim_B1);
  EXPECT_EQ(d.dim_B1, 99u - d.dim_H0);
  EXPECT_EQ(d.dim_H0, 0u);
  EXPECT_GE(d.dim_H1, 3u);
  EXPECT_FALSE(d.flagged);
}

TEST(Jacobian, ConstantPipeline) {
  const auto [a, b] = random_sl_pair(2, 1);
  const TracePipeline constant = [](const CMatrix&, const CMatrix&) {
    return std::vector<Complex>{Complex(1, 0), Complex(2, 0)};
  };
  EXPECT_EQ(character_jacobian_rank(constant, a, b).estimate.rank, 0u);
}

TEST(Jacobian, IdentityPipelineAndStepStability) {
  const auto words = sample_words(free2()->alphabet(), WordSample{});
  const TracePipeline identity = [&](const CMatrix& a, const CMatrix& b) {
    const MatrixRep rho(free2(), {a, b}, std::nullopt, MatrixRep::Check::deferred);
    return character(rho, words).traces;
  };
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto [a, b] = random_sl_pair(2, seed);
    for (double h : {1e-4, 1e-5, 1e-6}) {
      const auto j = character_jacobian_rank(identity, a, b, h);
      EXPECT_EQ(j.estimate.rank, 3u) << "h = " << h;
      EXPECT_FALSE(j.inconclusive());
      EXPECT_EQ(j.parameters, 6u);
    }
  }
}

TEST(Jacobian, FigureEightPipeline) {
  const auto words = sample_words(bundle().st->alphabet(), WordSample{});
  const auto pipeline = figure8::character_pipeline(bundle(), words);
  const auto [a, b] = random_sl_pair(2, 2);
  std::size_t prev = 0;
  for (double h : {1e-4, 1e-5, 1e-6}) {
    const auto j = character_jacobian_rank(pipeline, a, b, h);
    EXPECT_EQ(j.estimate.rank, 3u);
    EXPECT_FALSE(j.inconclusive());
    EXPECT_GE(j.estimate.gap, 10.0);
    prev = j.estimate.rank;
  }
  // A larger sample never lowers the rank.
  const auto more = figure8::character_pipeline(bundle(), sample_words(bundle().st->alphabet(), WordSample{3, 100, 12, 0}));
  EXPECT_GE(character_jacobian_rank(more, a, b).estimate.rank, prev);
}

TEST(Rank, EstimateFromValues) {
  const auto r = estimate_rank(std::vector<double>{1.0, 0.5, 1e-12}, 3, 1e-8);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.nullity(), 1u);
  EXPECT_TRUE(r.conclusive);
  const auto unclear = estimate_rank(std::vector<double>{1.0, 5e-8}, 2, 1e-8);
  EXPECT_FALSE(unclear.conclusive);
  const auto zero = estimate_rank(std::vector<double>{0.0, 0.0}, 2, 1e-8);
  EXPECT_EQ(zero.rank, 0u);
}
