#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "p2p/dlt.hpp"
#include "p2p/rng.hpp"

namespace p2p {

struct RansacResult {
  Homography h;
  std::vector<bool> inlier_mask;
  int inlier_count = 0;
  double mean_inlier_error_px = 0.0;
  int iterations_run = 0;
};

// Symmetric transfer error in pixels: the larger of forward and backward
// reprojection displacements.
inline double symmetric_transfer_error(const Homography& h,
                                       const Homography& hinv,
                                       const Correspondence& c) {
  const Point2 fwd = apply_homography(h, c.src);
  const Point2 bwd = apply_homography(hinv, c.dst);
  return std::max(norm(fwd - c.dst), norm(bwd - c.src));
}

// Classic RANSAC over 4-point DLT models. Deterministic given `seed`.
// Refits on the largest consensus set and re-scores the refit, so the
// returned mask and mean error describe the returned homography.
inline RansacResult ransac_homography(const std::vector<Correspondence>& corrs,
                                      double inlier_threshold_px,
                                      int max_iters, std::uint64_t seed) {
  const int n = static_cast<int>(corrs.size());
  if (n < 4)
    throw InvalidArgument("ransac_homography: need >= 4 correspondences");
  if (!(inlier_threshold_px > 0))
    throw InvalidArgument("ransac_homography: threshold must be > 0");
  if (max_iters < 1)
    throw InvalidArgument("ransac_homography: max_iters must be >= 1");

  std::mt19937_64 rng(seed);
  std::vector<int> best_inliers;
  double best_err_sum = 0.0;

  auto score = [&](const Homography& h, std::vector<int>& inliers,
                   double& err_sum) {
    inliers.clear();
    err_sum = 0.0;
    Homography hinv;
    try {
      hinv = invert(h);
    } catch (const DegenerateInput&) {
      return;
    }
    for (int i = 0; i < n; ++i) {
      double e;
      try {
        e = symmetric_transfer_error(h, hinv, corrs[i]);
      } catch (const DegenerateInput&) {
        continue;  // point on the line at infinity for this model
      }
      if (e <= inlier_threshold_px) {
        inliers.push_back(i);
        err_sum += e;
      }
    }
  };

  std::vector<int> sample(4), trial_inliers;
  std::vector<Correspondence> minimal(4);
  int iters_done = 0;
  long adaptive_limit = max_iters;
  for (int iter = 0; iter < max_iters && iter < adaptive_limit; ++iter) {
    ++iters_done;
    // Draw 4 distinct indices.
    for (int k = 0; k < 4; ++k) {
      int idx;
      bool dup;
      do {
        idx = uniform_int(rng, 0, n - 1);
        dup = false;
        for (int j = 0; j < k; ++j)
          if (sample[j] == idx) dup = true;
      } while (dup);
      sample[k] = idx;
    }
    for (int k = 0; k < 4; ++k) minimal[k] = corrs[sample[k]];

    Homography h;
    try {
      h = estimate_homography_dlt(minimal);
    } catch (const DegenerateInput&) {
      continue;
    } catch (const InvalidArgument&) {
      continue;
    }

    double err_sum = 0.0;
    score(h, trial_inliers, err_sum);
    const bool better =
        trial_inliers.size() > best_inliers.size() ||
        (trial_inliers.size() == best_inliers.size() &&
         !trial_inliers.empty() && err_sum < best_err_sum);
    if (better) {
      best_inliers = trial_inliers;
      best_err_sum = err_sum;
      // Standard adaptive stopping rule at 99.9% confidence.
      const double w = static_cast<double>(best_inliers.size()) / n;
      const double p_outlier_free = std::pow(w, 4);
      if (p_outlier_free > 1.0 - 1e-12) {
        adaptive_limit = iter + 1;
      } else if (p_outlier_free > 0) {
        adaptive_limit = std::min<long>(
            max_iters,
            1 + static_cast<long>(std::log(0.001) /
                                  std::log(1.0 - p_outlier_free)));
      }
    }
  }

  if (static_cast<int>(best_inliers.size()) < 4)
    throw NoConsensus("ransac_homography: no model with >= 4 inliers");

  // Refit on the consensus set; fall back to re-estimating from it minimally
  // if the full refit is degenerate.
  std::vector<Correspondence> consensus;
  consensus.reserve(best_inliers.size());
  for (int i : best_inliers) consensus.push_back(corrs[i]);
  Homography refit;
  try {
    refit = estimate_homography_dlt(consensus);
  } catch (const DegenerateInput&) {
    throw NoConsensus("ransac_homography: consensus set is degenerate");
  }

  RansacResult res;
  res.h = refit;
  res.iterations_run = iters_done;
  res.inlier_mask.assign(n, false);
  const Homography refit_inv = invert(refit);
  double err_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    double e;
    try {
      e = symmetric_transfer_error(refit, refit_inv, corrs[i]);
    } catch (const DegenerateInput&) {
      continue;
    }
    if (e <= inlier_threshold_px) {
      res.inlier_mask[i] = true;
      ++res.inlier_count;
      err_sum += e;
    }
  }
  if (res.inlier_count < 4)
    throw NoConsensus("ransac_homography: refit lost consensus");
  res.mean_inlier_error_px = err_sum / res.inlier_count;
  return res;
}

}  // namespace p2p
