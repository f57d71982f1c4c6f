// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#include "spheremetric/corruption.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spheremetric/errors.hpp"
#include "spheremetric/rng.hpp"

namespace spheremetric {

namespace {

// rng stream ids; part of the reproducibility contract, do not renumber
constexpr std::uint32_t kOpSaltPepper = 1;
constexpr std::uint32_t kOpGaussianNoise = 2;

inline float clamp255(double v) {
    return static_cast<float>(std::clamp(v, 0.0, 255.0));
}

// Vertical-only bilinear fetch at a continuous row coordinate.
inline float sample_row(const Image& img, int x, double y, int c) {
    const double fy = std::floor(y);
    const double t = y - fy;
    const int y0 = std::clamp(static_cast<int>(fy), 0, img.height - 1);
    const int y1 = std::clamp(static_cast<int>(fy) + 1, 0, img.height - 1);
    const float a = img.at(x, y0, c);
    const float b = img.at(x, y1, c);
    return static_cast<float>(a + (b - a) * t);
}

} // namespace

Image reduce_vertical_fov(const Image& img, const FovReductionConfig& cfg) {
    require_equirect(img, "reduce_vertical_fov");
    const double v = cfg.fov_reduction_deg;
    const double band = cfg.fixed_band_deg;
    if (v < 0.0)
        throw InvalidInputError("reduce_vertical_fov: negative reduction angle");
    if (v == 0.0)
        return img;
    if (band <= 0.0 || band + v >= 180.0)
        throw InvalidInputError("reduce_vertical_fov: fixed band " + std::to_string(band) +
                                " deg plus reduction " + std::to_string(v) +
                                " deg does not fit in 180 deg");

    const int h = img.height;
    const double rows_per_deg = h / 180.0;
    const int band_top = static_cast<int>(std::llround((90.0 - band / 2.0) * rows_per_deg));
    const int band_bot = h - band_top; // symmetric band
    const double crop = v / 2.0 * rows_per_deg;

    Image out(img.width, h, img.channels);
    const std::size_t row_floats = static_cast<std::size_t>(img.width) * img.channels;

    // fixed central band, copied bit-exactly
    std::copy_n(img.data.begin() + static_cast<std::size_t>(band_top) * row_floats,
                static_cast<std::size_t>(band_bot - band_top) * row_floats,
                out.data.begin() + static_cast<std::size_t>(band_top) * row_floats);

    // top band: source rows [crop, band_top) stretched onto [0, band_top)
    for (int j = 0; j < band_top; ++j) {
        const double src_y = crop + (j + 0.5) * (band_top - crop) / band_top - 0.5;
        for (int x = 0; x < img.width; ++x)
            for (int c = 0; c < img.channels; ++c)
                out.at(x, j, c) = sample_row(img, x, src_y, c);
    }
    // bottom band: source rows [band_bot, h - crop) stretched onto [band_bot, h)
    for (int j = band_bot; j < h; ++j) {
        const double src_y = band_bot + (j - band_bot + 0.5) * (h - crop - band_bot) / (h - band_bot) - 0.5;
        for (int x = 0; x < img.width; ++x)
            for (int c = 0; c < img.channels; ++c)
                out.at(x, j, c) = sample_row(img, x, src_y, c);
    }
    return out;
}

Image salt_pepper(const Image& img, double p, std::uint64_t seed, std::uint64_t image_index) {
    require_rgb(img, "salt_pepper");
    if (p < 0.0 || p > 1.0)
        throw InvalidInputError("salt_pepper: flip probability must be in [0, 1]");
    if (p == 0.0)
        return img;

    Image out = img;
    const CorruptionRng rng(seed, image_index, kOpSaltPepper);
    const std::size_t n = img.pixel_count();
    for (std::size_t px = 0; px < n; ++px) {
        const auto u = rng.uniforms(px);
        if (u[0] < p) {
            const float v = u[1] < 0.5 ? 0.0f : 255.0f;
            for (int c = 0; c < img.channels; ++c)
                out.data[px * img.channels + c] = v;
        }
    }
    return out;
}

Image gaussian_noise(const Image& img, double sigma, std::uint64_t seed, std::uint64_t image_index) {
    require_rgb(img, "gaussian_noise");
    if (sigma < 0.0)
        throw InvalidInputError("gaussian_noise: negative sigma");
    if (sigma == 0.0)
        return img;

    Image out = img;
    const CorruptionRng rng(seed, image_index, kOpGaussianNoise);
    const std::size_t n = img.pixel_count();
    for (std::size_t px = 0; px < n; ++px) {
        const auto z = rng.normals3(px);
        for (int c = 0; c < img.channels; ++c)
            out.data[px * img.channels + c] =
                clamp255(img.data[px * img.channels + c] + sigma * z[c]);
    }
    return out;
}

Image gaussian_blur(const Image& img, double sigma) {
    require_rgb(img, "gaussian_blur");
    if (sigma < 0.0)
        throw InvalidInputError("gaussian_blur: negative sigma");
    if (sigma == 0.0)
        return img;

    const int radius = static_cast<int>(std::ceil(3.0 * sigma));
    std::vector<double> kernel(2 * radius + 1);
    double sum = 0.0;
    for (int k = -radius; k <= radius; ++k) {
        kernel[k + radius] = std::exp(-0.5 * (k / sigma) * (k / sigma));
        sum += kernel[k + radius];
    }
    for (double& w : kernel)
        w /= sum;

    const int w = img.width, h = img.height, ch = img.channels;
    // horizontal pass, wrapped
    Image tmp(w, h, ch);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            for (int c = 0; c < ch; ++c) {
                double acc = 0.0;
                for (int k = -radius; k <= radius; ++k) {
                    int xx = (x + k) % w;
                    if (xx < 0)
                        xx += w;
                    acc += kernel[k + radius] * img.at(xx, y, c);
                }
                tmp.at(x, y, c) = static_cast<float>(acc);
            }
    // vertical pass, clamped
    Image out(w, h, ch);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            for (int c = 0; c < ch; ++c) {
                double acc = 0.0;
                for (int k = -radius; k <= radius; ++k) {
                    const int yy = std::clamp(y + k, 0, h - 1);
                    acc += kernel[k + radius] * tmp.at(x, yy, c);
                }
                out.at(x, y, c) = clamp255(acc);
            }
    return out;
}

Image crop_seam(const Image& img, double fraction) {
    require_rgb(img, "crop_seam");
    if (fraction < 0.0 || fraction > 0.1)
        throw InvalidInputError("crop_seam: fraction must be in [0, 0.1]");
    const int cut = static_cast<int>(std::lround(fraction * img.width));
    if (cut == 0)
        return img;
    const int new_w = img.width - 2 * cut;
    if (new_w < 6)
        throw InvalidInputError("crop_seam: image too narrow to crop");

    Image out(new_w, img.height, img.channels);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < new_w; ++x)
            for (int c = 0; c < img.channels; ++c)
                out.at(x, y, c) = img.at(x + cut, y, c);
    return out;
}

const char* to_string(CorruptionOp op) {
    switch (op) {
    case CorruptionOp::FovReduction: return "fov";
    case CorruptionOp::SaltPepper: return "salt-pepper";
    case CorruptionOp::GaussianNoise: return "gaussian-noise";
    case CorruptionOp::GaussianBlur: return "gaussian-blur";
    case CorruptionOp::CropSeam: return "crop-seam";
    }
    return "?";
}

bool corruption_op_from_string(std::string_view s, CorruptionOp& out) {
    for (CorruptionOp op : {CorruptionOp::FovReduction, CorruptionOp::SaltPepper,
                            CorruptionOp::GaussianNoise, CorruptionOp::GaussianBlur,
                            CorruptionOp::CropSeam}) {
        if (s == to_string(op)) {
            out = op;
            return true;
        }
    }
    return false;
}

Image apply_corruption(const Image& img, const NoiseLevel& level, std::uint64_t image_index) {
    switch (level.op) {
    case CorruptionOp::FovReduction:
        return reduce_vertical_fov(img, {level.strength, 90.0});
    case CorruptionOp::SaltPepper:
        return salt_pepper(img, level.strength, level.seed, image_index);
    case CorruptionOp::GaussianNoise:
        return gaussian_noise(img, level.strength, level.seed, image_index);
    case CorruptionOp::GaussianBlur:
        return gaussian_blur(img, level.strength);
    case CorruptionOp::CropSeam:
        return crop_seam(img, level.strength);
    }
    throw InvalidInputError("apply_corruption: unknown operator");
}

std::vector<double> default_levels(CorruptionOp op) {
    switch (op) {
    case CorruptionOp::FovReduction: return {10, 20, 30, 40};
    case CorruptionOp::SaltPepper: return {0.01, 0.05, 0.1, 0.2};
    case CorruptionOp::GaussianNoise: return {5, 10, 20, 40};
    case CorruptionOp::GaussianBlur: return {1, 2, 4, 8};
    case CorruptionOp::CropSeam: return {0.0025};
    }
    return {};
}

} // namespace spheremetric
