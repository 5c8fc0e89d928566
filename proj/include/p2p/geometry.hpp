#pragma once

#include <array>
#include <cmath>

#include "p2p/errors.hpp"

namespace p2p {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }

// 3x3 projective transform, row-major. Stored in normalized form:
// h22 = 1 whenever h22 is significantly nonzero, otherwise unit Frobenius
// norm with the largest-magnitude entry made positive. Normalized form is
// unique, so homographies can be compared elementwise.
struct Homography {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  double& operator()(int r, int c) { return m[r * 3 + c]; }
  double operator()(int r, int c) const { return m[r * 3 + c]; }

  double det() const {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) -
           m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
  }
};

inline double frobenius(const Homography& h) {
  double s = 0.0;
  for (double v : h.m) s += v * v;
  return std::sqrt(s);
}

inline Homography normalized(Homography h) {
  const double f = frobenius(h);
  if (!(f > 0.0) || !std::isfinite(f))
    throw DegenerateInput("homography: non-finite or zero matrix");
  if (std::abs(h.m[8]) > 1e-9 * f) {
    const double inv = 1.0 / h.m[8];
    for (double& v : h.m) v *= inv;
  } else {
    int imax = 0;
    for (int i = 1; i < 9; ++i)
      if (std::abs(h.m[i]) > std::abs(h.m[imax])) imax = i;
    const double s = (h.m[imax] < 0.0 ? -1.0 : 1.0) / f;
    for (double& v : h.m) v *= s;
  }
  return h;
}

// Validates invertibility and returns the canonical representation.
inline Homography make_homography(const std::array<double, 9>& m) {
  Homography h;
  h.m = m;
  h = normalized(h);
  if (std::abs(h.det()) <= 1e-12)
    throw DegenerateInput("homography: singular matrix");
  return h;
}

inline Homography identity_homography() { return Homography{}; }

inline Homography translation(double tx, double ty) {
  return make_homography({1, 0, tx, 0, 1, ty, 0, 0, 1});
}

// Rotation by `deg` degrees about (cx, cy), optional isotropic scale.
inline Homography rotation_about(double deg, double cx, double cy,
                                 double scale = 1.0) {
  const double a = deg * M_PI / 180.0;
  const double c = std::cos(a) * scale, s = std::sin(a) * scale;
  return make_homography({c, -s, cx - c * cx + s * cy,
                          s, c, cy - s * cx - c * cy,
                          0, 0, 1});
}

inline Point2 apply_homography(const Homography& h, Point2 p) {
  if (!p.finite()) throw InvalidArgument("apply_homography: non-finite point");
  const double w = h.m[6] * p.x + h.m[7] * p.y + h.m[8];
  if (std::abs(w) < 1e-12)
    throw DegenerateInput("apply_homography: point maps to infinity");
  return {(h.m[0] * p.x + h.m[1] * p.y + h.m[2]) / w,
          (h.m[3] * p.x + h.m[4] * p.y + h.m[5]) / w};
}

// compose(h1, h2) applies h2 first, then h1.
inline Homography compose(const Homography& h1, const Homography& h2) {
  Homography r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += h1(i, k) * h2(k, j);
      r(i, j) = s;
    }
  return make_homography(r.m);
}

inline Homography invert(const Homography& h) {
  const double d = h.det();
  if (std::abs(d) <= 1e-12) throw DegenerateInput("invert: singular matrix");
  const auto& m = h.m;
  std::array<double, 9> adj = {
      m[4] * m[8] - m[5] * m[7], m[2] * m[7] - m[1] * m[8],
      m[1] * m[5] - m[2] * m[4], m[5] * m[6] - m[3] * m[8],
      m[0] * m[8] - m[2] * m[6], m[2] * m[3] - m[0] * m[5],
      m[3] * m[7] - m[4] * m[6], m[1] * m[6] - m[0] * m[7],
      m[0] * m[4] - m[1] * m[3]};
  for (double& v : adj) v /= d;
  return make_homography(adj);
}

struct Correspondence {
  Point2 src;
  Point2 dst;
  double score = 1.0;  // match confidence in [-1, 1], 1.0 if unknown
};

}  // namespace p2p
