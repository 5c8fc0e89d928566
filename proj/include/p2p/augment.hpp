#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "p2p/geometry.hpp"
#include "p2p/image.hpp"
#include "p2p/mask.hpp"
#include "p2p/patches.hpp"
#include "p2p/rng.hpp"
#include "p2p/warp.hpp"

namespace p2p {

// Sampling ranges for one augmentation draw. Defaults follow common practice
// for the augmentation families named by the method; every knob is
// configurable.
struct AugmentationRanges {
  double rotation_deg_lo = -25.0, rotation_deg_hi = 25.0;
  double scale_lo = 0.8, scale_hi = 1.2;
  double translate_frac_lo = -0.1, translate_frac_hi = 0.1;  // per axis
  double shear_deg_lo = -8.0, shear_deg_hi = 8.0;
  double noise_sigma_lo = 0.0, noise_sigma_hi = 12.75;  // intensity units
  double contrast_gain_lo = 0.75, contrast_gain_hi = 1.5;

  void validate() const {
    auto check = [](double lo, double hi, const char* name) {
      if (!(lo <= hi))
        throw InvalidArgument(std::string("augmentation range '") + name +
                              "' inverted (lo > hi)");
    };
    check(rotation_deg_lo, rotation_deg_hi, "rotation_deg");
    check(scale_lo, scale_hi, "scale");
    check(translate_frac_lo, translate_frac_hi, "translate_frac");
    check(shear_deg_lo, shear_deg_hi, "shear_deg");
    check(noise_sigma_lo, noise_sigma_hi, "noise_sigma");
    check(contrast_gain_lo, contrast_gain_hi, "contrast_gain");
    if (scale_lo <= 0) throw InvalidArgument("augmentation scale must be > 0");
    if (noise_sigma_lo < 0)
      throw InvalidArgument("augmentation noise sigma must be >= 0");
  }

  // Collapses every range to the identity transform (tests, audits).
  static AugmentationRanges identity() {
    AugmentationRanges r;
    r.rotation_deg_lo = r.rotation_deg_hi = 0.0;
    r.scale_lo = r.scale_hi = 1.0;
    r.translate_frac_lo = r.translate_frac_hi = 0.0;
    r.shear_deg_lo = r.shear_deg_hi = 0.0;
    r.noise_sigma_lo = r.noise_sigma_hi = 0.0;
    r.contrast_gain_lo = r.contrast_gain_hi = 1.0;
    return r;
  }
};

// One fully resolved augmentation. A spec plus an image size determines the
// output exactly, so augmented views are reproducible.
struct AugmentationSpec {
  double rotation_deg = 0.0;
  double scale = 1.0;
  double translate_frac_x = 0.0;
  double translate_frac_y = 0.0;
  double shear_deg = 0.0;
  double noise_sigma = 0.0;
  double contrast_gain = 1.0;
  std::uint64_t rng_seed = 0;

  bool geometric_identity() const {
    return rotation_deg == 0.0 && scale == 1.0 && translate_frac_x == 0.0 &&
           translate_frac_y == 0.0 && shear_deg == 0.0;
  }
  bool photometric_identity() const {
    return noise_sigma == 0.0 && contrast_gain == 1.0;
  }
};

inline AugmentationSpec draw_augmentation_spec(std::uint64_t seed,
                                               const AugmentationRanges& r) {
  r.validate();
  std::mt19937_64 rng(seed);
  AugmentationSpec s;
  s.rotation_deg = uniform_range(rng, r.rotation_deg_lo, r.rotation_deg_hi);
  s.scale = uniform_range(rng, r.scale_lo, r.scale_hi);
  s.translate_frac_x =
      uniform_range(rng, r.translate_frac_lo, r.translate_frac_hi);
  s.translate_frac_y =
      uniform_range(rng, r.translate_frac_lo, r.translate_frac_hi);
  s.shear_deg = uniform_range(rng, r.shear_deg_lo, r.shear_deg_hi);
  s.noise_sigma = uniform_range(rng, r.noise_sigma_lo, r.noise_sigma_hi);
  s.contrast_gain = uniform_range(rng, r.contrast_gain_lo, r.contrast_gain_hi);
  s.rng_seed = derive_seed(seed, "spec-noise");
  return s;
}

// The affine map of a spec about the image center:
// translate . rotate . shear . scale, all around (w/2, h/2).
inline Homography affine_of_spec(const AugmentationSpec& s, int w, int h) {
  const double cx = w / 2.0, cy = h / 2.0;
  const double a = s.rotation_deg * M_PI / 180.0;
  const double sh = std::tan(s.shear_deg * M_PI / 180.0);
  const double ca = std::cos(a), sa = std::sin(a);
  // Linear part R * Shear * Scale.
  const double l00 = s.scale * ca, l01 = s.scale * (ca * sh - sa);
  const double l10 = s.scale * sa, l11 = s.scale * (sa * sh + ca);
  const double tx = s.translate_frac_x * w + cx - (l00 * cx + l01 * cy);
  const double ty = s.translate_frac_y * h + cy - (l10 * cx + l11 * cy);
  return make_homography({l00, l01, tx, l10, l11, ty, 0, 0, 1});
}

namespace detail {

inline void apply_photometric(ImageBuffer& img, const AugmentationSpec& s) {
  if (s.photometric_identity()) return;
  std::mt19937_64 noise_rng(s.rng_seed);
  const bool noisy = s.noise_sigma > 0.0;
  // Box-Muller in pairs; both outputs are consumed.
  double spare = 0.0;
  bool have_spare = false;
  auto next_gauss = [&]() {
    if (have_spare) {
      have_spare = false;
      return spare;
    }
    double u1 = uniform01(noise_rng);
    const double u2 = uniform01(noise_rng);
    if (u1 < 1e-300) u1 = 1e-300;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * M_PI * u2;
    spare = r * std::sin(t);
    have_spare = true;
    return r * std::cos(t);
  };
  for (std::size_t i = 0; i < img.data.size(); ++i) {
    double v = 127.5 + s.contrast_gain * (img.data[i] - 127.5);
    if (noisy) v += s.noise_sigma * next_gauss();
    img.data[i] = clamp_u8(v);
  }
}

}  // namespace detail

// Applies the spec to an image and its tracked keypoints: the affine map
// (bilinear, black fill) acts on both, then contrast about mid-gray and
// additive Gaussian noise act on the image only. Output size equals input
// size; keypoints move by the exact affine map.
inline std::pair<ImageBuffer, KeypointSet> apply_augmentation(
    const ImageBuffer& img, const KeypointSet& kps,
    const AugmentationSpec& spec) {
  const Homography affine = affine_of_spec(spec, img.width, img.height);
  ImageBuffer out =
      spec.geometric_identity()
          ? img
          : warp_image(img, affine, img.width, img.height,
                       Interpolation::kBilinear);
  KeypointSet moved = kps;
  if (!spec.geometric_identity())
    for (auto& p : moved.points) p = apply_homography(affine, p);
  detail::apply_photometric(out, spec);
  return {std::move(out), std::move(moved)};
}

// One augmented view: the augmented full image plus the black-white mask of
// the patch it supervises.
struct AugmentedView {
  ImageBuffer image;     // augmented source image (3 channels)
  ImageBuffer mask;      // 1 channel, values in {0, 255}
  int patch_index = -1;  // which patch this view supervises
  AugmentationSpec spec;
};

// 32 positive pairs built from one source image: views_a[i] and views_b[i]
// show patch i under two independently drawn augmentations.
struct PairBatch {
  std::vector<AugmentedView> views_a;
  std::vector<AugmentedView> views_b;
  std::vector<Patch> patches;  // the shared pre-augmentation patches
  std::string source_image_id;
};

struct PairBatchConfig {
  int patches_per_image = 32;
  double patch_size = 32.0;
  AugmentationRanges ranges;
};

inline PairBatch make_pair_batch(const ImageBuffer& img,
                                 const std::string& image_id,
                                 std::uint64_t seed,
                                 const PairBatchConfig& cfg = {}) {
  const std::uint64_t id_hash = hash64(image_id);
  const auto patches =
      sample_patches(img, cfg.patches_per_image, cfg.patch_size,
                     derive_seed(seed, "patches", id_hash));
  const KeypointSet kps = KeypointSet::from_patches(patches);

  PairBatch batch;
  batch.source_image_id = image_id;
  batch.patches = patches;
  batch.views_a.resize(patches.size());
  batch.views_b.resize(patches.size());

  const int n = static_cast<int>(patches.size());
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < 2 * n; ++k) {
    const int i = k % n;
    const bool side_a = k < n;
    const char* tag = side_a ? "view-a" : "view-b";
    const AugmentationSpec spec = draw_augmentation_spec(
        derive_seed(seed, tag, id_hash, static_cast<std::uint64_t>(i)),
        cfg.ranges);
    auto [image, moved] = apply_augmentation(img, kps, spec);
    AugmentedView view;
    view.image = std::move(image);
    view.mask = rasterize_mask(moved.corners_of(i), img.width, img.height);
    view.patch_index = i;
    view.spec = spec;
    (side_a ? batch.views_a : batch.views_b)[i] = std::move(view);
  }
  return batch;
}

}  // namespace p2p
