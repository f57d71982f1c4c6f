// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#include "spheremetric/image.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spheremetric/errors.hpp"

namespace spheremetric {

Image::Image(int w, int h, int c, float fill)
    : width(w), height(h), channels(c),
      data(static_cast<std::size_t>(w) * h * c, fill) {}

bool is_equirect(const Image& img) {
    return !img.empty() && img.width == 2 * img.height;
}

void require_rgb(const Image& img, const char* where) {
    if (img.empty() || img.width <= 0 || img.height <= 0)
        throw InvalidInputError(std::string(where) + ": empty image");
    if (img.channels != 3)
        throw InvalidInputError(std::string(where) + ": expected 3-channel RGB image, got " +
                                std::to_string(img.channels) + " channels");
}

void require_equirect(const Image& img, const char* where) {
    require_rgb(img, where);
    if (img.width != 2 * img.height)
        throw InvalidInputError(std::string(where) + ": expected 2:1 equirectangular image, got " +
                                std::to_string(img.width) + "x" + std::to_string(img.height));
}

bool is_valid_range(const Image& img) {
    for (float v : img.data) {
        if (!std::isfinite(v) || v < 0.0f || v > 255.0f)
            return false;
    }
    return true;
}

namespace {

inline int wrap_index(int i, int n) {
    i %= n;
    return i < 0 ? i + n : i;
}

inline int clamp_index(int i, int n) {
    return std::clamp(i, 0, n - 1);
}

// lerp in the a + (b-a)*t form so equal endpoints reproduce exactly
inline float lerp(float a, float b, double t) {
    return static_cast<float>(a + (b - a) * t);
}

} // namespace

float sample_wrap_clamp(const Image& img, double x, double y, int c) {
    const double fx0 = std::floor(x);
    const double fy0 = std::floor(y);
    const double tx = x - fx0;
    const double ty = y - fy0;
    const int x0 = wrap_index(static_cast<int>(fx0), img.width);
    const int x1 = wrap_index(static_cast<int>(fx0) + 1, img.width);
    const int y0 = clamp_index(static_cast<int>(fy0), img.height);
    const int y1 = clamp_index(static_cast<int>(fy0) + 1, img.height);
    const float top = lerp(img.at(x0, y0, c), img.at(x1, y0, c), tx);
    const float bot = lerp(img.at(x0, y1, c), img.at(x1, y1, c), tx);
    return lerp(top, bot, ty);
}

float sample_clamp(const Image& img, double x, double y, int c) {
    const double fx0 = std::floor(x);
    const double fy0 = std::floor(y);
    const double tx = x - fx0;
    const double ty = y - fy0;
    const int x0 = clamp_index(static_cast<int>(fx0), img.width);
    const int x1 = clamp_index(static_cast<int>(fx0) + 1, img.width);
    const int y0 = clamp_index(static_cast<int>(fy0), img.height);
    const int y1 = clamp_index(static_cast<int>(fy0) + 1, img.height);
    const float top = lerp(img.at(x0, y0, c), img.at(x1, y0, c), tx);
    const float bot = lerp(img.at(x0, y1, c), img.at(x1, y1, c), tx);
    return lerp(top, bot, ty);
}

float sample_nearest_wrap_clamp(const Image& img, double x, double y, int c) {
    const int xi = wrap_index(static_cast<int>(std::lround(x)), img.width);
    const int yi = clamp_index(static_cast<int>(std::lround(y)), img.height);
    return img.at(xi, yi, c);
}

float sample_nearest_clamp(const Image& img, double x, double y, int c) {
    const int xi = clamp_index(static_cast<int>(std::lround(x)), img.width);
    const int yi = clamp_index(static_cast<int>(std::lround(y)), img.height);
    return img.at(xi, yi, c);
}

Image resize_bilinear(const Image& img, int new_width, int new_height) {
    require_rgb(img, "resize_bilinear");
    if (new_width <= 0 || new_height <= 0)
        throw InvalidInputError("resize_bilinear: target dimensions must be positive");
    if (new_width == img.width && new_height == img.height)
        return img;

    Image out(new_width, new_height, img.channels);
    const double sx = static_cast<double>(img.width) / new_width;
    const double sy = static_cast<double>(img.height) / new_height;
    for (int y = 0; y < new_height; ++y) {
        const double src_y = (y + 0.5) * sy - 0.5;
        for (int x = 0; x < new_width; ++x) {
            const double src_x = (x + 0.5) * sx - 0.5;
            for (int c = 0; c < img.channels; ++c)
                out.at(x, y, c) = sample_clamp(img, src_x, src_y, c);
        }
    }
    return out;
}

Image flip_vertical(const Image& img) {
    Image out(img.width, img.height, img.channels);
    const std::size_t row = static_cast<std::size_t>(img.width) * img.channels;
    for (int y = 0; y < img.height; ++y)
        std::copy_n(img.data.begin() + static_cast<std::size_t>(y) * row, row,
                    out.data.begin() + static_cast<std::size_t>(img.height - 1 - y) * row);
    return out;
}

Image rotate_columns(const Image& img, int shift) {
    Image out(img.width, img.height, img.channels);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            const int sx = wrap_index(x + shift, img.width);
            for (int c = 0; c < img.channels; ++c)
                out.at(x, y, c) = img.at(sx, y, c);
        }
    return out;
}

double mse(const Image& a, const Image& b, int skip_top, int skip_bottom) {
    if (a.width != b.width || a.height != b.height || a.channels != b.channels)
        throw InvalidInputError("mse: image shapes differ");
    const int y0 = skip_top;
    const int y1 = a.height - skip_bottom;
    if (y0 >= y1)
        throw InvalidInputError("mse: no rows left after skipping");
    double acc = 0.0;
    for (int y = y0; y < y1; ++y)
        for (int x = 0; x < a.width; ++x)
            for (int c = 0; c < a.channels; ++c) {
                const double d = static_cast<double>(a.at(x, y, c)) - b.at(x, y, c);
                acc += d * d;
            }
    const std::size_t n = static_cast<std::size_t>(y1 - y0) * a.width * a.channels;
    return acc / static_cast<double>(n);
}

double psnr(const Image& a, const Image& b, int skip_top, int skip_bottom) {
    const double m = mse(a, b, skip_top, skip_bottom);
    if (m <= 0.0)
        return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / m);
}

} // namespace spheremetric
