#include <gtest/gtest.h>

#include "p2p/patches.hpp"

using namespace p2p;

TEST(SamplePatches, AllCornersStayInFrame) {
  const ImageBuffer img(1920, 1440, 3);
  const auto patches = sample_patches(img, 32, 32.0, 2024);
  ASSERT_EQ(patches.size(), 32u);
  for (const auto& p : patches)
    for (const auto& c : p.corners) {
      EXPECT_GE(c.x, 0.0);
      EXPECT_LT(c.x, 1920.0);
      EXPECT_GE(c.y, 0.0);
      EXPECT_LT(c.y, 1440.0);
    }
}

TEST(SamplePatches, SingleValidPlacementHitsFrameCorners) {
  const ImageBuffer img(32, 32, 1);
  const auto patches = sample_patches(img, 1, 32.0, 7);
  ASSERT_EQ(patches.size(), 1u);
  const auto& p = patches[0];
  EXPECT_DOUBLE_EQ(p.center.x, 16.0);
  EXPECT_DOUBLE_EQ(p.center.y, 16.0);
  EXPECT_DOUBLE_EQ(p.corners[0].x, 0.0);
  EXPECT_DOUBLE_EQ(p.corners[0].y, 0.0);
  EXPECT_DOUBLE_EQ(p.corners[2].x, 32.0);
  EXPECT_DOUBLE_EQ(p.corners[2].y, 32.0);
}

TEST(SamplePatches, DeterministicGivenSeed) {
  const ImageBuffer img(200, 150, 3);
  const auto a = sample_patches(img, 32, 32.0, 555);
  const auto b = sample_patches(img, 32, 32.0, 555);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_DOUBLE_EQ(a[i].center.x, b[i].center.x);
    EXPECT_DOUBLE_EQ(a[i].center.y, b[i].center.y);
  }
  const auto c = sample_patches(img, 32, 32.0, 556);
  bool any_diff = false;
  for (std::size_t i = 0; i < a.size(); ++i)
    any_diff |= a[i].center.x != c[i].center.x;
  EXPECT_TRUE(any_diff);
}

TEST(SamplePatches, ImageSmallerThanPatchIsError) {
  const ImageBuffer img(31, 64, 1);
  EXPECT_THROW(sample_patches(img, 1, 32.0, 1), InvalidArgument);
}

TEST(SamplePatches, CornersFormAxisAlignedSquare) {
  const ImageBuffer img(100, 100, 1);
  const auto patches = sample_patches(img, 8, 32.0, 9);
  for (const auto& p : patches) {
    EXPECT_DOUBLE_EQ(p.corners[1].x - p.corners[0].x, 32.0);
    EXPECT_DOUBLE_EQ(p.corners[3].y - p.corners[0].y, 32.0);
    EXPECT_DOUBLE_EQ(p.corners[0].y, p.corners[1].y);
    EXPECT_DOUBLE_EQ(p.corners[0].x, p.corners[3].x);
    EXPECT_DOUBLE_EQ(p.center.x, (p.corners[0].x + p.corners[2].x) / 2);
  }
}

TEST(KeypointSet, TracksFourPointsPerPatch) {
  const ImageBuffer img(100, 100, 1);
  const auto patches = sample_patches(img, 5, 16.0, 3);
  const auto kps = KeypointSet::from_patches(patches);
  ASSERT_EQ(kps.points.size(), 20u);
  ASSERT_EQ(kps.patch_index.size(), 20u);
  for (int i = 0; i < 5; ++i) {
    const auto corners = kps.corners_of(i);
    for (int k = 0; k < 4; ++k) {
      EXPECT_DOUBLE_EQ(corners[k].x, patches[i].corners[k].x);
      EXPECT_EQ(kps.patch_index[i * 4 + k], i);
    }
  }
}
