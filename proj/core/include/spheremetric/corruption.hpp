// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "spheremetric/image.hpp"

namespace spheremetric {

/// Vertical field-of-view reduction. fov_reduction_deg (v) degrees are
/// removed in total, half from the top and half from the bottom; the central
/// fixed_band_deg band is kept pixel-exact and the remaining outer bands are
/// stretched back to the original extent.
struct FovReductionConfig {
    double fov_reduction_deg = 0.0;
    double fixed_band_deg = 90.0;
};

Image reduce_vertical_fov(const Image& img, const FovReductionConfig& cfg);

/// Each pixel is independently replaced by 0 or 255 (equal odds) with
/// probability p. Deterministic in (seed, image_index).
Image salt_pepper(const Image& img, double p, std::uint64_t seed, std::uint64_t image_index = 0);

/// Adds i.i.d. zero-mean Gaussian noise with the given std on the [0, 255]
/// scale, clamped back to range. Deterministic in (seed, image_index).
Image gaussian_noise(const Image& img, double sigma, std::uint64_t seed, std::uint64_t image_index = 0);

/// Separable Gaussian convolution, kernel radius ceil(3*sigma). Horizontal
/// padding wraps (equirectangular seam stays seamless), vertical replicates.
Image gaussian_blur(const Image& img, double sigma);

/// Removes round(fraction * width) columns from each side; the output keeps
/// the reduced width. fraction must be in [0, 0.1].
Image crop_seam(const Image& img, double fraction);

enum class CorruptionOp { FovReduction, SaltPepper, GaussianNoise, GaussianBlur, CropSeam };

const char* to_string(CorruptionOp op);
bool corruption_op_from_string(std::string_view s, CorruptionOp& out);

/// One point of a corruption sweep: the op plus its strength scalar
/// (degrees for fov, flip probability, noise sigma, blur sigma, or the
/// per-side crop fraction).
struct NoiseLevel {
    CorruptionOp op;
    double strength = 0.0;
    std::uint64_t seed = 0;
};

Image apply_corruption(const Image& img, const NoiseLevel& level, std::uint64_t image_index);

/// Four-step default sweeps, mild to severe.
std::vector<double> default_levels(CorruptionOp op);

} // namespace spheremetric
