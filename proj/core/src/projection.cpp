// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#include "spheremetric/projection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "spheremetric/errors.hpp"

namespace spheremetric {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;

struct FaceFrame {
    Vec3 center; // unit axis through the face center
    Vec3 right;  // in-face +u direction on the tangent plane
    Vec3 down;   // in-face +v direction on the tangent plane
};

// World frame: x forward (yaw 0), y right (yaw +90), z up (pitch +90).
// U's top edge (v = 0) adjoins B, D's top edge adjoins F.
constexpr std::array<FaceFrame, 6> kFrames = {{
    {{1, 0, 0}, {0, 1, 0}, {0, 0, -1}},   // F
    {{0, 1, 0}, {-1, 0, 0}, {0, 0, -1}},  // R
    {{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}, // B
    {{0, -1, 0}, {1, 0, 0}, {0, 0, -1}},  // L
    {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}},    // U
    {{0, 0, -1}, {0, 1, 0}, {-1, 0, 0}},  // D
}};

inline double dot(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

} // namespace

const char* to_string(FaceLabel face) {
    switch (face) {
    case FaceLabel::F: return "F";
    case FaceLabel::R: return "R";
    case FaceLabel::B: return "B";
    case FaceLabel::L: return "L";
    case FaceLabel::U: return "U";
    case FaceLabel::D: return "D";
    }
    return "?";
}

std::optional<FaceLabel> face_from_string(std::string_view s) {
    for (FaceLabel f : kAllFaces)
        if (s == to_string(f))
            return f;
    return std::nullopt;
}

Vec3 direction_to_unit(const Direction& dir) {
    const double yaw = dir.yaw_deg * kDegToRad;
    const double pitch = dir.pitch_deg * kDegToRad;
    const double cp = std::cos(pitch);
    return {cp * std::cos(yaw), cp * std::sin(yaw), std::sin(pitch)};
}

Direction unit_to_direction(const Vec3& v) {
    const double norm = std::sqrt(dot(v, v));
    const double pitch = std::asin(std::clamp(v.z / norm, -1.0, 1.0)) * kRadToDeg;
    double yaw = std::atan2(v.y, v.x) * kRadToDeg;
    if (yaw >= 180.0)
        yaw -= 360.0;
    return {yaw, pitch};
}

FaceCoord spherical_to_face(const Direction& dir) {
    const Vec3 p = direction_to_unit(dir);
    FaceLabel best = FaceLabel::F;
    double best_dot = dot(p, kFrames[0].center);
    for (int i = 1; i < 6; ++i) {
        const double d = dot(p, kFrames[i].center);
        if (d > best_dot) { // strict: earlier faces win ties
            best_dot = d;
            best = static_cast<FaceLabel>(i);
        }
    }
    const FaceFrame& fr = kFrames[static_cast<int>(best)];
    const double inv = 1.0 / best_dot; // best_dot >= 1/sqrt(3) > 0
    const double a = dot(p, fr.right) * inv;
    const double b = dot(p, fr.down) * inv;
    return {best, std::clamp((a + 1.0) * 0.5, 0.0, 1.0), std::clamp((b + 1.0) * 0.5, 0.0, 1.0)};
}

Direction face_to_spherical(FaceLabel face, double u, double v) {
    const FaceFrame& fr = kFrames[static_cast<int>(face)];
    const double a = 2.0 * u - 1.0;
    const double b = 2.0 * v - 1.0;
    const Vec3 p = {fr.center.x + a * fr.right.x + b * fr.down.x,
                    fr.center.y + a * fr.right.y + b * fr.down.y,
                    fr.center.z + a * fr.right.z + b * fr.down.z};
    return unit_to_direction(p);
}

int default_face_size(const Image& equirect) {
    return equirect.height / 2;
}

CubemapSet equirect_to_cubemap(const Image& img, int face_size, Sampling sampling) {
    require_equirect(img, "equirect_to_cubemap");
    if (face_size < 2)
        throw InvalidInputError("equirect_to_cubemap: face_size must be >= 2, got " +
                                std::to_string(face_size));

    CubemapSet cm;
    cm.face_size = face_size;
    const double w = img.width;
    const double h = img.height;
    for (FaceLabel label : kAllFaces) {
        Image& face = cm.face(label);
        face = Image(face_size, face_size, 3);
        for (int j = 0; j < face_size; ++j) {
            const double v = (j + 0.5) / face_size;
            for (int i = 0; i < face_size; ++i) {
                const double u = (i + 0.5) / face_size;
                const Direction dir = face_to_spherical(label, u, v);
                const double x = (dir.yaw_deg + 180.0) / 360.0 * w - 0.5;
                const double y = (90.0 - dir.pitch_deg) / 180.0 * h - 0.5;
                for (int c = 0; c < 3; ++c)
                    face.at(i, j, c) = sampling == Sampling::Bilinear
                                           ? sample_wrap_clamp(img, x, y, c)
                                           : sample_nearest_wrap_clamp(img, x, y, c);
            }
        }
    }
    return cm;
}

Image cubemap_to_equirect(const CubemapSet& cm, int width, int height, Sampling sampling) {
    if (width != 2 * height || height <= 0)
        throw InvalidInputError("cubemap_to_equirect: output must be 2:1, got " +
                                std::to_string(width) + "x" + std::to_string(height));
    const int n = cm.face_size;
    for (FaceLabel label : kAllFaces) {
        const Image& f = cm.face(label);
        if (f.width != n || f.height != n || f.channels != 3 || f.empty())
            throw InvalidInputError("cubemap_to_equirect: inconsistent cubemap faces");
    }

    Image out(width, height, 3);
    for (int j = 0; j < height; ++j) {
        const double pitch = 90.0 - (j + 0.5) / height * 180.0;
        for (int i = 0; i < width; ++i) {
            const double yaw = (i + 0.5) / width * 360.0 - 180.0;
            const FaceCoord fc = spherical_to_face({yaw, pitch});
            const Image& face = cm.face(fc.face);
            const double x = fc.u * n - 0.5;
            const double y = fc.v * n - 0.5;
            for (int c = 0; c < 3; ++c)
                out.at(i, j, c) = sampling == Sampling::Bilinear
                                      ? sample_clamp(face, x, y, c)
                                      : sample_nearest_clamp(face, x, y, c);
        }
    }
    return out;
}

} // namespace spheremetric
