// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#include "spheremetric/rng.hpp"

#include <cmath>
#include <numbers>

namespace spheremetric {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

inline Philox4x32::Counter round_once(const Philox4x32::Counter& c, const Philox4x32::Key& k) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, c[0], hi0, lo0);
    mulhilo(kPhiloxM1, c[2], hi1, lo1);
    return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

} // namespace

Philox4x32::Counter Philox4x32::block(Counter ctr, Key key) {
    for (int r = 0; r < 10; ++r) {
        if (r > 0) {
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        ctr = round_once(ctr, key);
    }
    return ctr;
}

CorruptionRng::CorruptionRng(std::uint64_t seed, std::uint64_t image_index, std::uint32_t operator_id)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      image_word_(static_cast<std::uint32_t>(image_index ^ (image_index >> 32))),
      operator_word_(operator_id) {}

std::array<std::uint32_t, 4> CorruptionRng::block(std::uint64_t draw_index) const {
    const Philox4x32::Counter ctr = {
        static_cast<std::uint32_t>(draw_index),
        static_cast<std::uint32_t>(draw_index >> 32),
        image_word_,
        operator_word_,
    };
    return Philox4x32::block(ctr, key_);
}

std::array<double, 4> CorruptionRng::uniforms(std::uint64_t draw_index) const {
    const auto b = block(draw_index);
    // (w + 0.5) / 2^32 keeps values strictly inside (0, 1)
    constexpr double scale = 1.0 / 4294967296.0;
    return {(b[0] + 0.5) * scale, (b[1] + 0.5) * scale, (b[2] + 0.5) * scale, (b[3] + 0.5) * scale};
}

std::array<double, 3> CorruptionRng::normals3(std::uint64_t draw_index) const {
    const auto u = uniforms(draw_index);
    const double r0 = std::sqrt(-2.0 * std::log(u[0]));
    const double r1 = std::sqrt(-2.0 * std::log(u[2]));
    const double a0 = 2.0 * std::numbers::pi * u[1];
    const double a1 = 2.0 * std::numbers::pi * u[3];
    return {r0 * std::cos(a0), r0 * std::sin(a0), r1 * std::cos(a1)};
}

} // namespace spheremetric
