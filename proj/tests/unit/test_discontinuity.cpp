// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spheremetric/corruption.hpp"
#include "spheremetric/discontinuity.hpp"
#include "spheremetric/errors.hpp"
#include "synthetic.hpp"

using namespace spheremetric;

TEST_SUITE_BEGIN("discontinuity");

namespace {

// vertically constant strip with the given 6 column values
SeamStrip strip_of_columns(const float cols[6], int length) {
    SeamStrip s;
    s.length = length;
    s.values.resize(static_cast<std::size_t>(length) * 6);
    for (int y = 0; y < length; ++y)
        for (int k = 0; k < 6; ++k)
            s.at(k, y) = cols[k];
    return s;
}

} // namespace

TEST_CASE("strip extraction: wrap order and greyscale") {
    // left half 200, right half 50: the wrap places the right edge first
    Image img(64, 8, 3);
    for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 64; ++x)
            for (int c = 0; c < 3; ++c)
                img.at(x, y, c) = x < 32 ? 200.0f : 50.0f;

    const auto strips = extract_seam_strips(img);
    REQUIRE(strips.size() == 1);
    const SeamStrip& s = strips[0];
    CHECK(s.length == 8);
    for (int y = 0; y < 8; ++y) {
        for (int k = 0; k < 3; ++k)
            CHECK(s.at(k, y) == doctest::Approx(50.0f)); // columns W-3..W-1
        for (int k = 3; k < 6; ++k)
            CHECK(s.at(k, y) == doctest::Approx(200.0f)); // columns 0..2
    }

    // greyscale uses BT.601 weights
    Image colored(8, 2, 3);
    for (int y = 0; y < 2; ++y)
        for (int x = 0; x < 8; ++x) {
            colored.at(x, y, 0) = 100.0f;
            colored.at(x, y, 1) = 50.0f;
            colored.at(x, y, 2) = 200.0f;
        }
    const auto cs = extract_seam_strips(colored);
    const float expected = 0.299f * 100.0f + 0.587f * 50.0f + 0.114f * 200.0f;
    CHECK(cs[0].at(0, 0) == doctest::Approx(expected));
}

TEST_CASE("strip extraction shapes and rejection") {
    const auto strips = extract_seam_strips(smtest::constant_image(1024, 512, 10.0f));
    REQUIRE(strips.size() == 1);
    CHECK(strips[0].length == 512);
    CHECK(strips[0].values.size() == 512 * 6);
    CHECK_THROWS_AS((void)extract_seam_strips(smtest::constant_image(5, 4, 0.0f)),
                    InvalidInputError);
}

TEST_CASE("first-order response of step and ramp strips") {
    DsConfig cfg;
    cfg.kernel = DsKernel::ScharrFirstOrder;

    // zero strip -> zero response
    const float zeros[6] = {0, 0, 0, 0, 0, 0};
    const StripResponse rz = convolve_kernel(strip_of_columns(zeros, 16), cfg);
    for (int y = 0; y < 16; ++y)
        for (int x = 1; x <= 4; ++x)
            CHECK(rz.at(x, y) == 0.0f);

    // step 0 -> 255 between columns 2 and 3
    const float step[6] = {0, 0, 0, 255, 255, 255};
    const StripResponse rs = convolve_kernel(strip_of_columns(step, 16), cfg);
    for (int y = 0; y < 16; ++y) {
        CHECK(rs.at(1, y) == 0.0f);
        CHECK(rs.at(2, y) == doctest::Approx(4080.0f)); // 16 * 255
        CHECK(rs.at(3, y) == doctest::Approx(4080.0f));
        CHECK(rs.at(4, y) == 0.0f);
    }

    // linear ramp value(col j) = 10 j
    const float ramp[6] = {0, 10, 20, 30, 40, 50};
    const StripResponse rr = convolve_kernel(strip_of_columns(ramp, 16), cfg);
    for (int y = 0; y < 16; ++y)
        for (int x = 1; x <= 4; ++x)
            CHECK(rr.at(x, y) == doctest::Approx(320.0f)); // 16 * 20
}

TEST_CASE("second-order kernel kills ramps and keeps steps") {
    DsConfig cfg; // default scharr-second-order
    const float ramp[6] = {0, 10, 20, 30, 40, 50};
    const StripResponse rr = convolve_kernel(strip_of_columns(ramp, 8), cfg);
    for (int x = 1; x <= 4; ++x)
        CHECK(rr.at(x, 3) == doctest::Approx(0.0f)); // second difference of a ramp

    const float step[6] = {0, 0, 0, 255, 255, 255};
    const StripResponse rs = convolve_kernel(strip_of_columns(step, 8), cfg);
    CHECK(std::abs(rs.at(2, 3)) == doctest::Approx(16.0f * 255.0f));
    CHECK(std::abs(rs.at(3, 3)) == doctest::Approx(16.0f * 255.0f));
    CHECK(rs.at(1, 3) == 0.0f);
    CHECK(rs.at(4, 3) == 0.0f);
}

TEST_CASE("strip scores match the hand-derived values") {
    DsConfig cfg;
    cfg.kernel = DsKernel::ScharrFirstOrder;
    cfg.c = 0.1;

    const float zeros[6] = {0, 0, 0, 0, 0, 0};
    CHECK(ds_strip(convolve_kernel(strip_of_columns(zeros, 32), cfg), cfg) == 0.0);

    const float step[6] = {0, 0, 0, 255, 255, 255};
    const double step_score = ds_strip(convolve_kernel(strip_of_columns(step, 32), cfg), cfg);
    CHECK(step_score == doctest::Approx(40800.0).epsilon(1e-6)); // 4080 / 0.1

    const float ramp[6] = {0, 10, 20, 30, 40, 50};
    const double ramp_score = ds_strip(convolve_kernel(strip_of_columns(ramp, 32), cfg), cfg);
    CHECK(ramp_score == doctest::Approx(320.0 / 320.1).epsilon(1e-6)); // ~0.99969
}

TEST_CASE("image-level score: constants, strip identity") {
    CHECK(ds_image(smtest::constant_image(128, 64, 77.0f)) == 0.0);

    const Image img = smtest::stepped_panorama(256, 128, 30.0, 5);
    DsConfig cfg;
    const auto strips = extract_seam_strips(img);
    const double strip_score = ds_strip(convolve_kernel(strips[0], cfg), cfg);
    CHECK(ds_image(img, cfg) == doctest::Approx(strip_score)); // L == H
}

TEST_CASE("hidden seam appears when the image is rotated 180 degrees") {
    const Image img = smtest::stepped_panorama(256, 128, 40.0, 9);
    const Image rotated = rotate_columns(img, img.width / 2);
    const double at_seam = ds_image(img);
    const double hidden = ds_image(rotated);
    // rotating moves the step into the image interior, leaving a smooth wrap
    CHECK(at_seam > 10.0 * hidden);
    CHECK(at_seam != hidden);
}

TEST_CASE("vertical flip leaves the score exactly unchanged") {
    const Image img = smtest::stepped_panorama(128, 64, 25.0, 3);
    CHECK(ds_image(flip_vertical(img)) == ds_image(img));
}

TEST_CASE("intensity scaling never decreases the score") {
    // compare an image against its exact half-intensity copy (s = 2, no clamp)
    const Image img = smtest::stepped_panorama(128, 64, 10.0, 7);
    Image half = img;
    for (float& v : half.data)
        v *= 0.5f;
    CHECK(ds_image(img) >= ds_image(half));
}

TEST_CASE("seamless panoramas score low; hard seams score at least 10x higher") {
    double seamless_max = 0.0;
    for (std::uint32_t variant = 0; variant < 6; ++variant) {
        const double d = ds_image(smtest::seamless_panorama(256, 128, 100 + variant));
        seamless_max = std::max(seamless_max, d);
    }
    CHECK(seamless_max <= 1.1); // ratio calibration for smooth gradients

    for (std::uint32_t variant = 0; variant < 6; ++variant) {
        const double d = ds_image(smtest::stepped_panorama(256, 128, 60.0, 100 + variant));
        CHECK(d >= 10.0 * seamless_max);
    }
}

TEST_CASE("crop_seam strictly increases the score of a seamless panorama") {
    const Image img = smtest::seamless_panorama(512, 256, 77);
    const Image cropped = crop_seam(img, 0.0025);
    CHECK(ds_image(cropped) > ds_image(img));
}

TEST_CASE("graded seam contrast orders the scores") {
    std::vector<double> scores;
    for (int i = 0; i < 10; ++i)
        scores.push_back(ds_image(smtest::stepped_panorama(256, 128, 4.0 * (i + 1), 50)));
    for (std::size_t i = 1; i < scores.size(); ++i)
        CHECK(scores[i] > scores[i - 1]);
}

TEST_CASE("rank order is stable across rendering resolutions") {
    auto ranks = [](const std::vector<double>& scores) {
        std::vector<int> order(scores.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return scores[a] < scores[b]; });
        return order;
    };
    // one shared background, graded seam contrasts: the injected step must
    // drive the ordering at every resolution
    std::vector<double> lo, hi;
    for (int i = 0; i < 10; ++i) {
        const double step = 3.0 + 4.0 * i;
        lo.push_back(ds_image(smtest::stepped_panorama(512, 256, step, 200)));
        hi.push_back(ds_image(smtest::stepped_panorama(2048, 1024, step, 200)));
    }
    CHECK(ranks(lo) == ranks(hi));
}

TEST_CASE("dataset summary: zeros, percentile exemplars, ordering") {
    {
        const std::vector<Image> flats(4, smtest::constant_image(64, 32, 5.0f));
        const DsSummary s = ds_dataset(flats);
        CHECK(s.mean == 0.0);
        for (double v : s.per_image)
            CHECK(v == 0.0);
    }
    {
        // constructed scores: exemplars must land on the known order
        const std::vector<double> scores = {5.0, 1.0, 3.0, 2.0, 4.0};
        const DsSummary s = summarize_ds(scores);
        CHECK(s.mean == doctest::Approx(3.0));
        CHECK(s.median == doctest::Approx(3.0));
        REQUIRE(s.percentile_exemplars.size() == 11);
        CHECK(s.percentile_exemplars.front().percentile == 0);
        CHECK(s.percentile_exemplars.front().image_index == 1); // score 1.0
        CHECK(s.percentile_exemplars.back().percentile == 100);
        CHECK(s.percentile_exemplars.back().image_index == 0); // score 5.0
        const auto& p50 = s.percentile_exemplars[5];
        CHECK(p50.percentile == 50);
        CHECK(p50.image_index == 2); // score 3.0
    }
    CHECK_THROWS_AS((void)summarize_ds({}), InvalidInputError);
}

TEST_CASE("kernel names parse both long and short forms") {
    DsKernel k;
    CHECK(ds_kernel_from_string("scharr-second-order", k));
    CHECK(k == DsKernel::ScharrSecondOrder);
    CHECK(ds_kernel_from_string("scharr1", k));
    CHECK(k == DsKernel::ScharrFirstOrder);
    CHECK_FALSE(ds_kernel_from_string("sobel", k));
}

TEST_SUITE_END();
