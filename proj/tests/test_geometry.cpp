#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <random>

#include "p2p/geometry.hpp"
#include "p2p/homography_json.hpp"
#include "oracles.hpp"

using namespace p2p;

TEST(ApplyHomography, IdentityFixesPoints) {
  const Point2 p = apply_homography(identity_homography(), {37, 41});
  EXPECT_DOUBLE_EQ(p.x, 37.0);
  EXPECT_DOUBLE_EQ(p.y, 41.0);
}

TEST(ApplyHomography, PureTranslation) {
  const Point2 p = apply_homography(translation(10, 5), {0, 0});
  EXPECT_DOUBLE_EQ(p.x, 10.0);
  EXPECT_DOUBLE_EQ(p.y, 5.0);
}

TEST(ApplyHomography, ProjectiveDivision) {
  const Homography h = make_homography({1, 0, 0, 0, 1, 0, 0.001, 0, 1});
  const Point2 p = apply_homography(h, {100, 50});
  EXPECT_NEAR(p.x, 1000.0 / 11.0, 1e-12);  // 90.9091
  EXPECT_NEAR(p.y, 500.0 / 11.0, 1e-12);   // 45.4545
}

TEST(ApplyHomography, PointAtInfinityIsError) {
  const Homography h = make_homography({1, 0, 0, 0, 1, 0, 1, 0, 1});
  EXPECT_THROW(apply_homography(h, {-1.0, 5.0}), DegenerateInput);
}

TEST(ApplyHomography, NonFinitePointIsError) {
  EXPECT_THROW(
      apply_homography(identity_homography(),
                       {std::numeric_limits<double>::quiet_NaN(), 0.0}),
      InvalidArgument);
}

TEST(Homography, ComposeWithIdentity) {
  std::mt19937_64 rng(7);
  const Homography h = oracle::random_homography(rng);
  const Homography c = compose(identity_homography(), h);
  for (int i = 0; i < 9; ++i) EXPECT_NEAR(c.m[i], h.m[i], 1e-12);
}

TEST(Homography, ComposeWithInverseIsIdentity) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const Homography h = oracle::random_homography(rng);
    const Homography c = compose(h, invert(h));
    const Homography id = identity_homography();
    for (int i = 0; i < 9; ++i) EXPECT_NEAR(c.m[i], id.m[i], 1e-9);
  }
}

TEST(Homography, InverseOfTranslation) {
  const Homography inv = invert(translation(10, 5));
  const Homography expect = translation(-10, -5);
  for (int i = 0; i < 9; ++i) EXPECT_NEAR(inv.m[i], expect.m[i], 1e-12);
}

TEST(Homography, SingularMatrixRejected) {
  EXPECT_THROW(make_homography({1, 2, 3, 2, 4, 6, 0, 0, 1}), DegenerateInput);
}

TEST(Homography, NormalizationMakesH22One) {
  const Homography h = make_homography({2, 0, 0, 0, 2, 0, 0, 0, 2});
  EXPECT_DOUBLE_EQ(h.m[8], 1.0);
  EXPECT_DOUBLE_EQ(h.m[0], 1.0);
}

TEST(Homography, FrobeniusFallbackWhenH22Vanishes) {
  const Homography h = make_homography({0, 0, 1, 0, 1, 0, 1, 0, 0});
  EXPECT_DOUBLE_EQ(h.m[8], 0.0);
  EXPECT_NEAR(frobenius(h), 1.0, 1e-12);
  // Canonical sign: largest-magnitude entry positive.
  double big = 0.0;
  for (double v : h.m)
    if (std::abs(v) > std::abs(big)) big = v;
  EXPECT_GT(big, 0.0);
}

// apply(compose(h1,h2), p) == apply(h1, apply(h2, p))
TEST(HomographyProperty, CompositionMatchesSequentialApplication) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 50; ++t) {
    const Homography h1 = oracle::random_mild_homography(rng, 512);
    const Homography h2 = oracle::random_mild_homography(rng, 512);
    const Point2 p{uniform_range(rng, 0, 512), uniform_range(rng, 0, 512)};
    const Point2 a = apply_homography(compose(h1, h2), p);
    const Point2 b = apply_homography(h1, apply_homography(h2, p));
    EXPECT_NEAR(a.x, b.x, 1e-9);
    EXPECT_NEAR(a.y, b.y, 1e-9);
  }
}

TEST(HomographyJson, RoundTripIsExact) {
  std::mt19937_64 rng(5);
  const Homography h = oracle::random_homography(rng);
  const auto path =
      (std::filesystem::temp_directory_path() / "h_roundtrip.json").string();
  save_homography(path, h);
  const Homography back = load_homography(path);
  EXPECT_EQ(0, std::memcmp(h.m.data(), back.m.data(), sizeof(h.m)));
  std::filesystem::remove(path);
}

TEST(HomographyJson, MalformedRejected) {
  EXPECT_THROW(homography_from_json(nlohmann::json{{"h", {1, 2, 3}}}), IoError);
}
