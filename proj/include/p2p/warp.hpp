#pragma once

#include <cmath>

#include "p2p/geometry.hpp"
#include "p2p/image.hpp"

namespace p2p {

enum class Interpolation { kNearest, kBilinear };

// Warps `img` by homography `h` into an out_w x out_h frame. Output pixel
// (u, v) samples the input at h^-1 applied to the pixel center; samples that
// fall outside the input are black.
inline ImageBuffer warp_image(const ImageBuffer& img, const Homography& h,
                              int out_w, int out_h,
                              Interpolation interp = Interpolation::kBilinear) {
  if (out_w < 1 || out_h < 1)
    throw InvalidArgument("warp_image: zero-size output");
  const Homography hinv = invert(h);
  ImageBuffer out(out_w, out_h, img.channels);
  for (int v = 0; v < out_h; ++v) {
    for (int u = 0; u < out_w; ++u) {
      const double cx = u + 0.5, cy = v + 0.5;
      const double w = hinv.m[6] * cx + hinv.m[7] * cy + hinv.m[8];
      if (std::abs(w) < 1e-12) continue;  // maps to infinity, leave black
      const double sx = (hinv.m[0] * cx + hinv.m[1] * cy + hinv.m[2]) / w;
      const double sy = (hinv.m[3] * cx + hinv.m[4] * cy + hinv.m[5]) / w;
      if (interp == Interpolation::kNearest) {
        const int ix = static_cast<int>(std::floor(sx));
        const int iy = static_cast<int>(std::floor(sy));
        if (!img.in_bounds(ix, iy)) continue;
        for (int c = 0; c < img.channels; ++c)
          out.at(u, v, c) = img.at(ix, iy, c);
      } else {
        for (int c = 0; c < img.channels; ++c)
          out.at(u, v, c) = clamp_u8(sample_bilinear(img, sx, sy, c));
      }
    }
  }
  return out;
}

}  // namespace p2p
