// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

namespace spheremetric {

/// Interleaved RGB raster with float intensities on the [0, 255] scale.
/// Row-major, origin at the top-left pixel. An equirectangular image is an
/// Image with width == 2 * height covering 360x180 degrees; helpers below
/// validate that where an operation requires it.
struct Image {
    int width = 0;
    int height = 0;
    int channels = 3;
    std::vector<float> data;

    Image() = default;
    Image(int w, int h, int c = 3, float fill = 0.0f);

    float& at(int x, int y, int c) { return data[(static_cast<std::size_t>(y) * width + x) * channels + c]; }
    float at(int x, int y, int c) const { return data[(static_cast<std::size_t>(y) * width + x) * channels + c]; }

    bool empty() const { return data.empty(); }
    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
};

enum class Sampling { Bilinear, Nearest };

bool is_equirect(const Image& img);

/// Throws InvalidInputError unless img is a nonempty RGB image with
/// width == 2 * height.
void require_equirect(const Image& img, const char* where);

/// Throws InvalidInputError unless img is a nonempty RGB image.
void require_rgb(const Image& img, const char* where);

/// True when every intensity is finite and within [0, 255].
bool is_valid_range(const Image& img);

/// Bilinear sample at continuous coordinates (pixel centers at integers).
/// Horizontal coordinate wraps around (equirectangular seam), vertical is
/// clamped to the image rows.
float sample_wrap_clamp(const Image& img, double x, double y, int c);

/// Bilinear sample with both coordinates clamped (plain rasters, cube faces).
float sample_clamp(const Image& img, double x, double y, int c);

float sample_nearest_wrap_clamp(const Image& img, double x, double y, int c);
float sample_nearest_clamp(const Image& img, double x, double y, int c);

/// Bilinear resampling to the target size; same-size calls return a
/// bit-identical copy. Throws InvalidInputError on non-positive targets.
Image resize_bilinear(const Image& img, int new_width, int new_height);

Image flip_vertical(const Image& img);

/// Horizontal roll: out(x) = in((x + shift) mod width). Used for yaw
/// rotations of equirectangular images by whole pixel counts.
Image rotate_columns(const Image& img, int shift);

/// Mean squared error over all channels; images must have identical shape.
/// rows in [skip_top, height - skip_bottom) are included.
double mse(const Image& a, const Image& b, int skip_top = 0, int skip_bottom = 0);

/// Peak signal-to-noise ratio on the [0, 255] scale.
double psnr(const Image& a, const Image& b, int skip_top = 0, int skip_bottom = 0);

} // namespace spheremetric
