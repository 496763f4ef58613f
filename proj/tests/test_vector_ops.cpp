#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vrsd/vector_ops.hpp"

namespace {

using vrsd::Vector;

TEST(Dot, Examples) {
  EXPECT_EQ(vrsd::dot(Vector{1.0, 0.0}, Vector{0.0, 1.0}), 0.0);
  EXPECT_EQ(vrsd::dot(Vector{3.0, 1.0}, Vector{8.0, 2.0}), 26.0);
  EXPECT_EQ(vrsd::dot(Vector{3.0, 2.0}, Vector{3.0, 2.0}), 13.0);
}

TEST(Dot, DimensionMismatchThrows) {
  EXPECT_THROW(vrsd::dot({1.0, 2.0}, {1.0, 2.0, 3.0}), vrsd::DimensionMismatch);
}

TEST(Norm, Examples) {
  EXPECT_EQ(vrsd::norm({0.0, 0.0}), 0.0);
  EXPECT_EQ(vrsd::norm({3.0, 4.0}), 5.0);
  EXPECT_DOUBLE_EQ(vrsd::norm({8.0, 2.0}), 8.246211251235321);
}

TEST(Cosine, Examples) {
  // A vector against itself is exactly 1, even after rounding.
  EXPECT_EQ(vrsd::cosine({8.0, 2.0}, {8.0, 2.0}), 1.0);
  EXPECT_EQ(vrsd::cosine({1.0, 0.0}, {0.0, 1.0}), 0.0);
  EXPECT_DOUBLE_EQ(vrsd::cosine({3.0, 1.0}, {8.0, 2.0}), 0.9970544855015815);
  EXPECT_EQ(vrsd::cosine({1.0, 0.0}, {-2.0, 0.0}), -1.0);
}

TEST(Cosine, IntegerMultipleIsExactlyOne) {
  EXPECT_EQ(vrsd::cosine({4.0, 1.0}, {8.0, 2.0}), 1.0);
  EXPECT_EQ(vrsd::cosine({24.0, 6.0}, {8.0, 2.0}), 1.0);
}

TEST(Cosine, ZeroNormThrows) {
  EXPECT_THROW(vrsd::cosine({0.0, 0.0}, {1.0, 0.0}), vrsd::ZeroNorm);
  EXPECT_THROW(vrsd::cosine({1.0, 0.0}, {0.0, 0.0}), vrsd::ZeroNorm);
}

TEST(Cosine, DimensionMismatchThrows) {
  EXPECT_THROW(vrsd::cosine({1.0}, {1.0, 0.0}), vrsd::DimensionMismatch);
}

TEST(SumVectors, Examples) {
  const std::vector<Vector> single = {{3.0, 1.0}};
  EXPECT_EQ(vrsd::sum_vectors(single), (Vector{3.0, 1.0}));

  const std::vector<Vector> pair = {{3.0, 1.0}, {5.0, 1.0}};
  EXPECT_EQ(vrsd::sum_vectors(pair), (Vector{8.0, 2.0}));

  const std::vector<Vector> cancel = {{1.0, -2.0}, {-1.0, 2.0}};
  EXPECT_EQ(vrsd::sum_vectors(cancel), (Vector{0.0, 0.0}));
}

TEST(SumVectors, EmptyThrows) {
  const std::vector<Vector> none;
  EXPECT_THROW(vrsd::sum_vectors(none), vrsd::EmptyInput);
}

TEST(SumVectors, DimensionMismatchThrows) {
  const std::vector<Vector> bad = {{1.0, 2.0}, {1.0}};
  EXPECT_THROW(vrsd::sum_vectors(bad), vrsd::DimensionMismatch);
}

TEST(Normalize, Examples) {
  EXPECT_EQ(vrsd::normalize({3.0, 4.0}), (Vector{0.6, 0.8}));
  const Vector u = vrsd::normalize({8.0, 2.0});
  EXPECT_DOUBLE_EQ(u[0], 0.9701425001453319);
  EXPECT_DOUBLE_EQ(u[1], 0.24253562503633297);
  EXPECT_NEAR(vrsd::norm(u), 1.0, 1e-12);
}

TEST(Normalize, ZeroThrows) {
  EXPECT_THROW(vrsd::normalize({0.0, 0.0, 0.0}), vrsd::ZeroNorm);
}

TEST(CosineProperties, RangeSymmetryAndScale) {
  std::mt19937_64 rng(20240801);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(rng() % 15);
    const Vector a = testsupport::random_vector(rng, d);
    const Vector b = testsupport::random_vector(rng, d);
    const double c = vrsd::cosine(a, b);
    EXPECT_GE(c, -1.0);
    EXPECT_LE(c, 1.0);
    EXPECT_EQ(vrsd::cosine(b, a), c);
    EXPECT_NEAR(vrsd::cosine(a, a), 1.0, 1e-12);
    for (const double scale : {0.25, 4.0, 1024.0}) {
      Vector sa = a;
      for (double& x : sa) x *= scale;
      EXPECT_NEAR(vrsd::cosine(sa, b), c, 1e-12);
    }
  }
}

TEST(CosineProperties, OrthogonalInvariance) {
  std::mt19937_64 rng(20240802);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = 3 + static_cast<std::size_t>(rng() % 10);
    const Vector a = testsupport::random_vector(rng, d);
    const Vector b = testsupport::random_vector(rng, d);
    const testsupport::Orthogonal rot(rng, d);
    EXPECT_NEAR(vrsd::cosine(rot.apply(a), rot.apply(b)), vrsd::cosine(a, b), 1e-9);
    EXPECT_NEAR(vrsd::norm(rot.apply(a)), vrsd::norm(a), 1e-9);
  }
}

TEST(SumVectorsProperties, PermutationInvariantWithinTolerance) {
  std::mt19937_64 rng(20240803);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(rng() % 6);
    std::vector<Vector> vs;
    for (int i = 0; i < 8; ++i) vs.push_back(testsupport::random_vector(rng, d));
    const Vector base = vrsd::sum_vectors(vs);
    std::shuffle(vs.begin(), vs.end(), rng);
    const Vector shuffled = vrsd::sum_vectors(vs);
    for (std::size_t c = 0; c < d; ++c) EXPECT_NEAR(shuffled[c], base[c], 1e-12);
  }
}

}  // namespace
