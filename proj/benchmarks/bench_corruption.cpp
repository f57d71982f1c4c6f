// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "spheremetric/corruption.hpp"

namespace {

using namespace spheremetric;

Image make_image(int width, int height) {
    Image img(width, height, 3);
    for (std::size_t i = 0; i < img.data.size(); ++i)
        img.data[i] = static_cast<float>((i * 2654435761u) % 256);
    return img;
}

void BM_SaltPepper(benchmark::State& state) {
    const Image img = make_image(1024, 512);
    for (auto _ : state) {
        Image out = salt_pepper(img, 0.1, 7);
        benchmark::DoNotOptimize(out.data.data());
    }
}

void BM_GaussianNoise(benchmark::State& state) {
    const Image img = make_image(1024, 512);
    for (auto _ : state) {
        Image out = gaussian_noise(img, 10.0, 7);
        benchmark::DoNotOptimize(out.data.data());
    }
}

void BM_GaussianBlur(benchmark::State& state) {
    const Image img = make_image(1024, 512);
    const double sigma = static_cast<double>(state.range(0));
    for (auto _ : state) {
        Image out = gaussian_blur(img, sigma);
        benchmark::DoNotOptimize(out.data.data());
    }
}

void BM_FovReduction(benchmark::State& state) {
    const Image img = make_image(1024, 512);
    for (auto _ : state) {
        Image out = reduce_vertical_fov(img, {40.0, 90.0});
        benchmark::DoNotOptimize(out.data.data());
    }
}

} // namespace

BENCHMARK(BM_SaltPepper);
BENCHMARK(BM_GaussianNoise);
BENCHMARK(BM_GaussianBlur)->Arg(2)->Arg(8);
BENCHMARK(BM_FovReduction);
