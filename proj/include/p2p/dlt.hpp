#pragma once

#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "p2p/geometry.hpp"

namespace p2p {

namespace detail {

// Hartley conditioning: translate the centroid to the origin and scale so
// the mean distance from it is sqrt(2).
inline Homography hartley_transform(const std::vector<Point2>& pts) {
  double mx = 0, my = 0;
  for (const auto& p : pts) {
    mx += p.x;
    my += p.y;
  }
  mx /= pts.size();
  my /= pts.size();
  double mean_dist = 0;
  for (const auto& p : pts) mean_dist += std::hypot(p.x - mx, p.y - my);
  mean_dist /= pts.size();
  const double s = mean_dist > 1e-12 ? std::sqrt(2.0) / mean_dist : 1.0;
  Homography t;
  t.m = {s, 0, -s * mx, 0, s, -s * my, 0, 0, 1};
  return t;
}

}  // namespace detail

// Least-squares homography from >= 4 correspondences via the direct linear
// transform on Hartley-normalized coordinates.
inline Homography estimate_homography_dlt(
    const std::vector<Correspondence>& corrs) {
  const int n = static_cast<int>(corrs.size());
  if (n < 4)
    throw InvalidArgument("estimate_homography_dlt: need >= 4 correspondences");

  std::vector<Point2> src(n), dst(n);
  for (int i = 0; i < n; ++i) {
    if (!corrs[i].src.finite() || !corrs[i].dst.finite())
      throw InvalidArgument("estimate_homography_dlt: non-finite point");
    src[i] = corrs[i].src;
    dst[i] = corrs[i].dst;
  }
  const Homography ts = detail::hartley_transform(src);
  const Homography td = detail::hartley_transform(dst);

  Eigen::MatrixXd a(2 * n, 9);
  for (int i = 0; i < n; ++i) {
    const Point2 p = apply_homography(ts, src[i]);
    const Point2 q = apply_homography(td, dst[i]);
    a.row(2 * i) << p.x, p.y, 1, 0, 0, 0, -q.x * p.x, -q.x * p.y, -q.x;
    a.row(2 * i + 1) << 0, 0, 0, p.x, p.y, 1, -q.y * p.x, -q.y * p.y, -q.y;
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  // Rank must be 8 for the solution to be unique up to scale.
  if (sv(7) <= 1e-9 * sv(0))
    throw DegenerateInput(
        "estimate_homography_dlt: degenerate configuration (collinear or "
        "coincident points)");
  const Eigen::VectorXd hvec = svd.matrixV().col(8);

  Homography hn;
  for (int i = 0; i < 9; ++i) hn.m[i] = hvec(i);
  // Undo the conditioning: H = Td^-1 * Hn * Ts.
  return compose(invert(td), compose(make_homography(hn.m), ts));
}

}  // namespace p2p
