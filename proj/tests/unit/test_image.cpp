// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "spheremetric/errors.hpp"
#include "spheremetric/image.hpp"
#include "synthetic.hpp"

using namespace spheremetric;

TEST_SUITE_BEGIN("image");

TEST_CASE("resize preserves 2:1 on the dataset protocol sizes") {
    const Image src = smtest::sphere_field(1920, 960, 7);
    const Image dst = resize_bilinear(src, 1024, 512);
    CHECK(dst.width == 1024);
    CHECK(dst.height == 512);
    CHECK(dst.width == 2 * dst.height);
    CHECK(is_valid_range(dst));
}

TEST_CASE("same-size resize is bit-identical") {
    const Image src = smtest::sphere_field(64, 32, 3);
    const Image dst = resize_bilinear(src, 64, 32);
    CHECK(dst.data == src.data);
}

TEST_CASE("constant image stays constant under resize") {
    const Image src = smtest::constant_image(40, 20, 77.0f);
    for (auto [w, h] : {std::pair{13, 9}, {80, 40}, {7, 64}}) {
        const Image dst = resize_bilinear(src, w, h);
        for (float v : dst.data)
            CHECK(v == 77.0f);
    }
}

TEST_CASE("resize rejects non-positive targets") {
    const Image src = smtest::constant_image(8, 4, 0.0f);
    CHECK_THROWS_AS((void)resize_bilinear(src, 0, 10), InvalidInputError);
    CHECK_THROWS_AS((void)resize_bilinear(src, 10, -1), InvalidInputError);
}

TEST_CASE("resize down-up keeps values in range and finite") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<float> dist(0.0f, 255.0f);
    Image src(33, 17, 3);
    for (float& v : src.data)
        v = dist(rng);
    const Image down = resize_bilinear(src, 9, 5);
    const Image up = resize_bilinear(down, 51, 23);
    CHECK(is_valid_range(down));
    CHECK(is_valid_range(up));
}

TEST_CASE("horizontal sampling wraps, vertical clamps") {
    Image img(4, 2, 3);
    for (int c = 0; c < 3; ++c) {
        img.at(0, 0, c) = 10.0f;
        img.at(3, 0, c) = 30.0f;
    }
    // halfway between the last and first column, across the wrap
    CHECK(sample_wrap_clamp(img, 3.5, 0.0, 0) == doctest::Approx(20.0));
    // above the top row clamps to it
    CHECK(sample_wrap_clamp(img, 0.0, -2.0, 0) == doctest::Approx(10.0));
}

TEST_CASE("rotate_columns by width is identity") {
    const Image src = smtest::sphere_field(32, 16, 11);
    const Image rot = rotate_columns(src, 32);
    CHECK(rot.data == src.data);
}

TEST_CASE("psnr is infinite for identical images and finite otherwise") {
    const Image a = smtest::sphere_field(64, 32, 2);
    Image b = a;
    CHECK(std::isinf(psnr(a, b)));
    b.at(5, 5, 0) += 10.0f;
    CHECK(psnr(a, b) < 1e9);
    CHECK(psnr(a, b) > 0.0);
}

TEST_SUITE_END();
