// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <cmath>

#include "spheremetric/discontinuity.hpp"

namespace {

using namespace spheremetric;

Image make_panorama(int width, int height) {
    Image img(width, height, 3);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            for (int c = 0; c < 3; ++c)
                img.at(x, y, c) = 127.5f + 100.0f * std::sin(0.05f * x + 0.11f * y + c);
    return img;
}

void BM_DsImage(benchmark::State& state) {
    const int h = static_cast<int>(state.range(0));
    const Image img = make_panorama(2 * h, h);
    const DsConfig cfg;
    for (auto _ : state)
        benchmark::DoNotOptimize(ds_image(img, cfg));
}

} // namespace

BENCHMARK(BM_DsImage)->Arg(512)->Arg(1024);
