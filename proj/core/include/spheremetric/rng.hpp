// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

namespace spheremetric {

/// Philox4x32-10 counter-based generator (Salmon et al., "Parallel random
/// numbers: as easy as 1, 2, 3"). Stateless: each (counter, key) pair maps to
/// an independent 128-bit block, so draws can be indexed rather than
/// sequenced. This is what makes per-image corruption order-independent.
struct Philox4x32 {
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter block(Counter ctr, Key key);
};

/// Deterministic random stream for one (global seed, image index, operator)
/// triple. Draws are addressed by index (typically the pixel index), so the
/// result does not depend on traversal or scheduling order.
class CorruptionRng {
public:
    CorruptionRng(std::uint64_t seed, std::uint64_t image_index, std::uint32_t operator_id);

    /// Raw 4x32-bit block for the given draw index.
    std::array<std::uint32_t, 4> block(std::uint64_t draw_index) const;

    /// Four uniforms in the open interval (0, 1).
    std::array<double, 4> uniforms(std::uint64_t draw_index) const;

    /// Three independent standard normals (Box-Muller over one block).
    std::array<double, 3> normals3(std::uint64_t draw_index) const;

private:
    Philox4x32::Key key_;
    std::uint32_t image_word_;
    std::uint32_t operator_word_;
};

} // namespace spheremetric
