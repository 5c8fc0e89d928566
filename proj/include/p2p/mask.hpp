#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "p2p/geometry.hpp"
#include "p2p/image.hpp"

namespace p2p {

// Scanline rasterization of a quadrilateral: pixels whose centers lie inside
// the polygon become 255, everything else 0. The polygon is clipped to the
// frame implicitly. A degenerate (zero-area) quadrilateral yields an empty
// mask rather than an error.
inline ImageBuffer rasterize_mask(const std::array<Point2, 4>& corners, int w,
                                  int h) {
  if (w < 1 || h < 1) throw InvalidArgument("rasterize_mask: zero-size frame");
  for (const auto& c : corners)
    if (!c.finite()) throw InvalidArgument("rasterize_mask: non-finite corner");
  ImageBuffer mask(w, h, 1, 0);

  double ymin = corners[0].y, ymax = corners[0].y;
  for (const auto& c : corners) {
    ymin = std::min(ymin, c.y);
    ymax = std::max(ymax, c.y);
  }
  const int row_lo = std::max(0, static_cast<int>(std::floor(ymin - 0.5)));
  const int row_hi = std::min(h - 1, static_cast<int>(std::ceil(ymax)));

  std::vector<double> xs;
  for (int row = row_lo; row <= row_hi; ++row) {
    const double y = row + 0.5;
    xs.clear();
    for (int e = 0; e < 4; ++e) {
      const Point2 a = corners[e];
      const Point2 b = corners[(e + 1) % 4];
      // Half-open rule: an edge spans [min(y), max(y)); horizontal edges
      // contribute nothing.
      if ((a.y <= y && b.y > y) || (b.y <= y && a.y > y)) {
        const double t = (y - a.y) / (b.y - a.y);
        xs.push_back(a.x + t * (b.x - a.x));
      }
    }
    std::sort(xs.begin(), xs.end());
    for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
      // Pixel centers strictly inside (xa, xb).
      int first = static_cast<int>(std::floor(xs[k] - 0.5)) + 1;
      int last = static_cast<int>(std::ceil(xs[k + 1] - 0.5)) - 1;
      first = std::max(first, 0);
      last = std::min(last, w - 1);
      for (int col = first; col <= last; ++col) mask.at(col, row, 0) = 255;
    }
  }
  return mask;
}

inline std::size_t foreground_count(const ImageBuffer& mask) {
  std::size_t n = 0;
  for (auto v : mask.data) n += (v != 0);
  return n;
}

inline Point2 foreground_centroid(const ImageBuffer& mask) {
  double sx = 0, sy = 0;
  std::size_t n = 0;
  for (int y = 0; y < mask.height; ++y)
    for (int x = 0; x < mask.width; ++x)
      if (mask.at(x, y, 0)) {
        sx += x + 0.5;
        sy += y + 0.5;
        ++n;
      }
  if (n == 0) return {0, 0};
  return {sx / n, sy / n};
}

}  // namespace p2p
