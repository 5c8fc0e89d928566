#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "p2p/errors.hpp"

namespace p2p {

// Interleaved 8-bit image, row-major. Continuous coordinates put the center
// of pixel (ix, iy) at (ix + 0.5, iy + 0.5); the frame spans [0,w] x [0,h].
struct ImageBuffer {
  int width = 0;
  int height = 0;
  int channels = 0;  // 1, 3 or 4
  std::vector<std::uint8_t> data;

  ImageBuffer() = default;
  ImageBuffer(int w, int h, int c, std::uint8_t fill = 0)
      : width(w), height(h), channels(c),
        data(static_cast<std::size_t>(w) * h * c, fill) {
    if (w < 1 || h < 1 || (c != 1 && c != 3 && c != 4))
      throw InvalidArgument("ImageBuffer: bad dimensions");
  }

  std::uint8_t& at(int x, int y, int c) {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  std::uint8_t at(int x, int y, int c) const {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }
  std::size_t size() const { return data.size(); }
  bool same_shape(const ImageBuffer& o) const {
    return width == o.width && height == o.height && channels == o.channels;
  }
};

inline std::uint8_t clamp_u8(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
}

// Bilinear sample of channel c at continuous position (x, y); out-of-frame
// neighbors contribute 0.
inline double sample_bilinear(const ImageBuffer& img, double x, double y,
                              int c) {
  const double gx = x - 0.5, gy = y - 0.5;
  const int x0 = static_cast<int>(std::floor(gx));
  const int y0 = static_cast<int>(std::floor(gy));
  const double fx = gx - x0, fy = gy - y0;
  double acc = 0.0;
  for (int dy = 0; dy < 2; ++dy) {
    for (int dx = 0; dx < 2; ++dx) {
      const int xi = x0 + dx, yi = y0 + dy;
      if (!img.in_bounds(xi, yi)) continue;
      const double w = (dx ? fx : 1.0 - fx) * (dy ? fy : 1.0 - fy);
      acc += w * img.at(xi, yi, c);
    }
  }
  return acc;
}

inline ImageBuffer resize_bilinear(const ImageBuffer& img, int out_w,
                                   int out_h) {
  if (out_w < 1 || out_h < 1)
    throw InvalidArgument("resize_bilinear: zero-size output");
  if (out_w == img.width && out_h == img.height) return img;
  ImageBuffer out(out_w, out_h, img.channels);
  const double sx = static_cast<double>(img.width) / out_w;
  const double sy = static_cast<double>(img.height) / out_h;
  for (int y = 0; y < out_h; ++y) {
    for (int x = 0; x < out_w; ++x) {
      const double src_x = (x + 0.5) * sx;
      const double src_y = (y + 0.5) * sy;
      for (int c = 0; c < img.channels; ++c)
        out.at(x, y, c) = clamp_u8(sample_bilinear(img, src_x, src_y, c));
    }
  }
  return out;
}

// Shrinks so the long side is at most `long_side`, aspect preserved.
// Never upscales.
inline ImageBuffer resize_long_side(const ImageBuffer& img, int long_side) {
  const int cur = std::max(img.width, img.height);
  if (cur <= long_side) return img;
  const double s = static_cast<double>(long_side) / cur;
  const int w = std::max(1, static_cast<int>(std::lround(img.width * s)));
  const int h = std::max(1, static_cast<int>(std::lround(img.height * s)));
  return resize_bilinear(img, w, h);
}

inline ImageBuffer to_gray(const ImageBuffer& img) {
  if (img.channels == 1) return img;
  ImageBuffer out(img.width, img.height, 1);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) {
      const double v = 0.299 * img.at(x, y, 0) + 0.587 * img.at(x, y, 1) +
                       0.114 * img.at(x, y, 2);
      out.at(x, y, 0) = clamp_u8(v);
    }
  return out;
}

}  // namespace p2p
