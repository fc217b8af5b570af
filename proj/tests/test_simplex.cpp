#include <algorithm>
#include <array>

#include "entaxiom/random.hpp"
#include "entaxiom/simplex.hpp"
#include "test_support.hpp"

using namespace entaxiom;
using W = std::vector<double>;

TEST(MakeDist, AcceptsNormalizedInput) {
  EXPECT_EQ(weights(make_dist({0.5, 0.5})), (W{0.5, 0.5}));
  EXPECT_EQ(weights(make_dist({1.0})), (W{1.0}));
}

TEST(MakeDist, RejectsBadInput) {
  EXPECT_ERROR_CODE(make_dist({0.3, 0.8}), ErrorCode::bad_normalization);
  EXPECT_ERROR_CODE(make_dist({1.5, -0.5}), ErrorCode::negative_mass);
  EXPECT_ERROR_CODE(make_dist(std::span<const double>{}), ErrorCode::bad_size);
}

TEST(MakeDist, SnapsTinyWeightsToZero) {
  const Dist d = make_dist({1.0 - 1e-13, 1e-13});
  EXPECT_EQ(d[1], 0.0);
  EXPECT_TRUE(d.is_degenerate());
}

TEST(MakeDist, ErrorMessageNamesTheInvariant) {
  try {
    make_dist({0.6, 0.6});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("BadNormalization"), std::string::npos);
  }
}

TEST(Uniform, Values) {
  EXPECT_EQ(weights(uniform(2)), (W{0.5, 0.5}));
  EXPECT_EQ(weights(uniform(1)), (W{1.0}));
  EXPECT_EQ(weights(uniform(4)), (W{0.25, 0.25, 0.25, 0.25}));
}

TEST(Degenerate, ZeroBasedPosition) {
  EXPECT_EQ(weights(degenerate(3, 1)), (W{0.0, 1.0, 0.0}));
  EXPECT_EQ(weights(degenerate(1, 0)), (W{1.0}));
  EXPECT_ERROR_CODE(degenerate(2, 2), ErrorCode::bad_index);
}

TEST(Refine, SplitsInPlace) {
  EXPECT_EQ(weights(refine({make_dist({0.5, 0.5}), 1, {0.25, 0.25}})),
            (W{0.5, 0.25, 0.25}));
  EXPECT_EQ(weights(refine({make_dist({0.9, 0.1}), 0, {0.45, 0.45}})),
            (W{0.45, 0.45, 0.1}));
  EXPECT_ERROR_CODE(refine({make_dist({0.5, 0.5}), 1, {0.1, 0.1}}),
                    ErrorCode::split_mass_mismatch);
  EXPECT_ERROR_CODE(refine({make_dist({0.5, 0.5}), 2, {0.25, 0.25}}),
                    ErrorCode::bad_index);
}

TEST(ConditionalChild, Normalizes) {
  EXPECT_EQ(weights(conditional_child({make_dist({0.9, 0.1}), 0, {0.45, 0.45}})),
            (W{0.5, 0.5}));
  EXPECT_EQ(weights(conditional_child({make_dist({0.5, 0.5}), 1, {0.5, 0.0}})),
            (W{1.0, 0.0}));
  const Dist c = conditional_child({make_dist({0.6, 0.4}), 1, {0.2, 0.1, 0.1}});
  EXPECT_NEAR(c[0], 0.5, 1e-15);
  EXPECT_NEAR(c[1], 0.25, 1e-15);
  EXPECT_NEAR(c[2], 0.25, 1e-15);
}

TEST(ConditionalChild, ZeroMassSplit) {
  EXPECT_ERROR_CODE(conditional_child({make_dist({1.0, 0.0}), 1, {0.0, 0.0}}),
                    ErrorCode::zero_mass_split);
}

TEST(Product, RowMajor) {
  EXPECT_EQ(weights(product(uniform(2), uniform(2))), (W{0.25, 0.25, 0.25, 0.25}));
  const Dist q = make_dist({0.2, 0.3, 0.5});
  EXPECT_EQ(weights(product(uniform(1), q)), weights(q));
  const Dist pq = product(make_dist({0.9, 0.1}), uniform(2));
  EXPECT_NEAR(pq[0], 0.45, 1e-15);
  EXPECT_NEAR(pq[1], 0.45, 1e-15);
  EXPECT_NEAR(pq[2], 0.05, 1e-15);
  EXPECT_NEAR(pq[3], 0.05, 1e-15);
}

TEST(Joint, Examples) {
  const Dist p = uniform(2);
  const CondDist diag = make_cond_dist(std::vector<W>{{1.0, 0.0}, {0.0, 1.0}});
  EXPECT_EQ(weights(joint(p, diag)), (W{0.5, 0.0, 0.0, 0.5}));
  const CondDist same = make_cond_dist(std::vector<W>{{0.5, 0.5}, {0.5, 0.5}});
  EXPECT_EQ(weights(joint(p, same)), (W{0.25, 0.25, 0.25, 0.25}));
  EXPECT_ERROR_CODE(make_cond_dist(std::vector<W>{{0.5, 0.5}, {0.2, 0.3, 0.5}}),
                    ErrorCode::shape_mismatch);
  const CondDist three = make_cond_dist(std::vector<W>{{0.5, 0.5}, {0.5, 0.5}, {1, 0}});
  EXPECT_ERROR_CODE(joint(p, three), ErrorCode::shape_mismatch);
}

TEST(PadZero, ZeroBasedPosition) {
  EXPECT_EQ(weights(pad_zero(uniform(2), 2)), (W{0.5, 0.5, 0.0}));
  EXPECT_EQ(weights(pad_zero(uniform(1), 0)), (W{0.0, 1.0}));
  EXPECT_ERROR_CODE(pad_zero(uniform(2), 4), ErrorCode::bad_index);
}

TEST(Permute, ZeroBasedSigma) {
  const Dist p = make_dist({0.2, 0.3, 0.5});
  const std::array<std::size_t, 3> sigma = {2, 0, 1};
  EXPECT_EQ(weights(permute(p, sigma)), (W{0.5, 0.2, 0.3}));
  const std::array<std::size_t, 3> id = {0, 1, 2};
  EXPECT_EQ(permute(p, id), p);
  const std::array<std::size_t, 2> repeated = {0, 0};
  EXPECT_ERROR_CODE(permute(uniform(2), repeated), ErrorCode::bad_permutation);
}

TEST(SampleRandom, Contract) {
  EXPECT_EQ(weights(sample_random(1, 7)), (W{1.0}));
  const Dist d = sample_random(3, 11);
  double total = 0.0;
  for (double x : d.weights()) {
    EXPECT_GE(x, 0.0);
    total += x;
  }
  EXPECT_NEAR(total, 1.0, kTolNorm);
  EXPECT_EQ(sample_random(5, 99), sample_random(5, 99));
  EXPECT_NE(sample_random(5, 99), sample_random(5, 100));
}

// Properties over many sampled inputs.

class SimplexProperty : public ::testing::TestWithParam<std::uint64_t> {
 protected:
  Rng rng{GetParam()};
  std::size_t size() { return rng.uniform_int(1, 8); }
};

TEST_P(SimplexProperty, ProductMarginalizes) {
  for (int t = 0; t < 200; ++t) {
    const Dist p = sample_random(size(), rng);
    const Dist q = sample_random(size(), rng);
    const Dist pq = product(p, q);
    for (std::size_t i = 0; i < p.size(); ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < q.size(); ++j) row += pq[i * q.size() + j];
      EXPECT_NEAR(row, p[i], kTolNorm);
    }
    for (std::size_t j = 0; j < q.size(); ++j) {
      double col = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) col += pq[i * q.size() + j];
      EXPECT_NEAR(col, q[j], kTolNorm);
    }
  }
}

TEST_P(SimplexProperty, JointWithEqualRowsIsProduct) {
  for (int t = 0; t < 200; ++t) {
    const Dist p = sample_random(size(), rng);
    const Dist q = sample_random(size(), rng);
    const CondDist c = make_cond_dist(std::vector<Dist>(p.size(), q));
    EXPECT_EQ(joint(p, c), product(p, q));
  }
}

TEST_P(SimplexProperty, PadThenDropIsExact) {
  for (int t = 0; t < 200; ++t) {
    const Dist p = sample_random(size(), rng);
    const std::size_t pos = rng.uniform_int(0, p.size());
    W padded = weights(pad_zero(p, pos));
    ASSERT_EQ(padded[pos], 0.0);
    padded.erase(padded.begin() + static_cast<long>(pos));
    EXPECT_EQ(padded, weights(p));
  }
}

TEST_P(SimplexProperty, PermutePreservesMultiset) {
  for (int t = 0; t < 200; ++t) {
    const Dist p = sample_random(size(), rng);
    std::vector<std::size_t> sigma(p.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = i;
    for (std::size_t i = sigma.size(); i > 1; --i) {
      std::swap(sigma[i - 1], sigma[rng.uniform_int(0, i - 1)]);
    }
    W a = weights(permute(p, sigma));
    W b = weights(p);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
  }
}

TEST_P(SimplexProperty, SamplesSatisfyInvariants) {
  for (int t = 0; t < 500; ++t) {
    const Dist p = sample_random(size(), rng);
    double total = 0.0;
    for (double x : p.weights()) {
      EXPECT_GE(x, 0.0);
      EXPECT_LE(x, 1.0);
      total += x;
    }
    EXPECT_NEAR(total, 1.0, kTolNorm);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SimplexProperty, ::testing::Values(1u, 2u, 42u, 12345u));

TEST(SampleRandom, UniformOnSimplexMean) {
  Rng rng(2024);
  constexpr int kDraws = 20'000;
  std::array<double, 3> mean{};
  for (int t = 0; t < kDraws; ++t) {
    const Dist d = sample_random(3, rng);
    for (std::size_t i = 0; i < 3; ++i) mean[i] += d[i] / kDraws;
  }
  for (double m : mean) EXPECT_NEAR(m, 1.0 / 3.0, 0.01);
}

TEST(Random, DerivedSeedsDiffer) {
  EXPECT_NE(derive_seed(42, 0, 0), derive_seed(42, 0, 1));
  EXPECT_NE(derive_seed(42, 0, 0), derive_seed(42, 1, 0));
  EXPECT_EQ(derive_seed(42, 3, 9), derive_seed(42, 3, 9));
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform01();
    EXPECT_GT(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}
