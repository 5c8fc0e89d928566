#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "p2p/geometry.hpp"
#include "p2p/image.hpp"
#include "p2p/rng.hpp"

namespace p2p {

// A sampled square patch. Corners are kept in fixed TL, TR, BR, BL order and
// are tracked through augmentation as keypoints.
struct Patch {
  Point2 center;
  double size = 32.0;
  std::array<Point2, 4> corners;  // TL, TR, BR, BL

  static Patch axis_aligned(Point2 center, double size) {
    Patch p;
    p.center = center;
    p.size = size;
    const double h = size / 2.0;
    p.corners = {Point2{center.x - h, center.y - h},
                 Point2{center.x + h, center.y - h},
                 Point2{center.x + h, center.y + h},
                 Point2{center.x - h, center.y + h}};
    return p;
  }
};

// Flat list of tracked keypoints, 4 per patch, ordering stable through
// augmentation.
struct KeypointSet {
  std::vector<Point2> points;
  std::vector<int> patch_index;  // owner patch per point

  static KeypointSet from_patches(const std::vector<Patch>& patches) {
    KeypointSet k;
    k.points.reserve(patches.size() * 4);
    k.patch_index.reserve(patches.size() * 4);
    for (std::size_t i = 0; i < patches.size(); ++i)
      for (const auto& c : patches[i].corners) {
        k.points.push_back(c);
        k.patch_index.push_back(static_cast<int>(i));
      }
    return k;
  }

  std::array<Point2, 4> corners_of(int patch) const {
    return {points[patch * 4 + 0], points[patch * 4 + 1],
            points[patch * 4 + 2], points[patch * 4 + 3]};
  }
};

// n random square patches with centers uniform over all placements that keep
// the square fully in-frame. Overlaps are allowed.
inline std::vector<Patch> sample_patches(const ImageBuffer& img, int n,
                                         double size, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("sample_patches: n must be >= 1");
  if (img.width < size || img.height < size)
    throw InvalidArgument("sample_patches: image smaller than patch size");
  std::mt19937_64 rng(seed);
  const double half = size / 2.0;
  std::vector<Patch> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double cx = uniform_range(rng, half, img.width - half);
    const double cy = uniform_range(rng, half, img.height - half);
    out.push_back(Patch::axis_aligned({cx, cy}, size));
  }
  return out;
}

}  // namespace p2p
