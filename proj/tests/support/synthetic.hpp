// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
//
// Synthetic spherical test imagery. Every generator evaluates an analytic
// field of viewing direction, so the same scene can be rendered at any
// resolution (resolution-robustness tests rely on that).
#pragma once

#include <cstdint>
#include <vector>

#include "spheremetric/image.hpp"

namespace smtest {

using spheremetric::Image;

Image constant_image(int width, int height, float value);

/// Smooth band-limited field on the sphere. Yaw-dependent terms carry a
/// cos(pitch)^m envelope, so the field stays single-valued at the poles.
/// `variant` selects the coefficients; `max_order` bounds the angular
/// frequency (higher orders give gaussian-blur sweeps something to remove).
Image sphere_field(int width, int height, std::uint32_t variant, int max_order = 24);

/// Dataset of n distinct smooth spherical images.
std::vector<Image> sphere_dataset(int n, int width, int height, std::uint32_t seed);

/// Smooth spherical images with strong per-image random texture on the polar
/// caps (|pitch| > 50 deg) and mild variation elsewhere. Vertical
/// field-of-view changes move exactly this content.
std::vector<Image> pole_textured_dataset(int n, int width, int height, std::uint32_t seed);

/// Horizontally periodic, smooth panorama: seamless across the wrap border.
Image seamless_panorama(int width, int height, std::uint32_t variant);

/// Seamless panorama plus a full-width linear ramp of the given contrast:
/// smooth everywhere except a hidden step of `step` intensity units at the
/// wrap border.
Image stepped_panorama(int width, int height, double step, std::uint32_t variant);

/// stepped_panorama overlaid with a periodic medium-frequency texture.
/// 8-bit quantization leaves smooth gradients with near-zero derivative
/// responses, which makes ratio scores noisy; the texture keeps file-backed
/// (PNG) test imagery well-conditioned.
Image textured_panorama(int width, int height, double step, std::uint32_t variant);

} // namespace smtest
