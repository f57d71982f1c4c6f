// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "spheremetric/image.hpp"

namespace spheremetric {

/// The six cube faces of the tangential spherical cubemap. F/R/B/L are the
/// frontal ring, U and D the polar caps.
enum class FaceLabel { F = 0, R = 1, B = 2, L = 3, U = 4, D = 5 };

inline constexpr std::array<FaceLabel, 6> kAllFaces = {
    FaceLabel::F, FaceLabel::R, FaceLabel::B, FaceLabel::L, FaceLabel::U, FaceLabel::D};

const char* to_string(FaceLabel face);
std::optional<FaceLabel> face_from_string(std::string_view s);

/// Viewing direction. Yaw in [-180, 180) degrees, positive toward the right
/// (east); pitch in [-90, 90] degrees, positive up. (0, 0) is the center of
/// the equirectangular frame.
struct Direction {
    double yaw_deg = 0.0;
    double pitch_deg = 0.0;
};

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

Vec3 direction_to_unit(const Direction& dir);
Direction unit_to_direction(const Vec3& v);

struct FaceCoord {
    FaceLabel face;
    double u; // in [0, 1], left -> right
    double v; // in [0, 1], top -> bottom
};

/// Maps a direction to the unique cube face whose axis has the largest
/// absolute dot product with it (ties broken in F, R, B, L, U, D order) and
/// to the gnomonic in-face coordinates. Total over all directions.
///
/// Face orientation convention:
///   F centered at (yaw 0, pitch 0), R at yaw +90, B at yaw 180, L at -90;
///   U at pitch +90 with its top edge adjoining B; D at pitch -90 with its
///   top edge adjoining F. Each face spans exactly 90x90 degrees.
FaceCoord spherical_to_face(const Direction& dir);

/// Inverse of spherical_to_face for in-face coordinates.
Direction face_to_spherical(FaceLabel face, double u, double v);

/// Six square faces of a tangential cubemap, indexed by FaceLabel.
struct CubemapSet {
    std::array<Image, 6> faces;
    int face_size = 0;

    Image& face(FaceLabel f) { return faces[static_cast<int>(f)]; }
    const Image& face(FaceLabel f) const { return faces[static_cast<int>(f)]; }
};

/// face_size = equirect height / 2 keeps per-degree sampling density.
int default_face_size(const Image& equirect);

/// Renders the six cube faces by inverse mapping: face pixel center ->
/// direction -> equirectangular coordinates (horizontal wrap, vertical
/// clamp) -> sampled color. Throws InvalidInputError on non-2:1 input or
/// face_size < 2.
CubemapSet equirect_to_cubemap(const Image& img, int face_size,
                               Sampling sampling = Sampling::Bilinear);

/// Re-projects a cubemap back to an equirectangular image of the given size
/// (width must equal 2 * height).
Image cubemap_to_equirect(const CubemapSet& cm, int width, int height,
                          Sampling sampling = Sampling::Bilinear);

} // namespace spheremetric
