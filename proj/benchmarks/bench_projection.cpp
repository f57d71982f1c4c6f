// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "spheremetric/projection.hpp"

namespace {

using namespace spheremetric;

Image make_equirect(int width, int height) {
    Image img(width, height, 3);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            for (int c = 0; c < 3; ++c)
                img.at(x, y, c) = static_cast<float>((x * 7 + y * 13 + c * 31) % 256);
    return img;
}

void BM_EquirectToCubemap(benchmark::State& state) {
    const int h = static_cast<int>(state.range(0));
    const Image img = make_equirect(2 * h, h);
    const int face = h / 2;
    for (auto _ : state) {
        CubemapSet cm = equirect_to_cubemap(img, face);
        benchmark::DoNotOptimize(cm.face(FaceLabel::F).data.data());
    }
    state.SetItemsProcessed(state.iterations() * 6 * face * face);
}

void BM_CubemapToEquirect(benchmark::State& state) {
    const int h = static_cast<int>(state.range(0));
    const Image img = make_equirect(2 * h, h);
    const CubemapSet cm = equirect_to_cubemap(img, h / 2);
    for (auto _ : state) {
        Image out = cubemap_to_equirect(cm, 2 * h, h);
        benchmark::DoNotOptimize(out.data.data());
    }
    state.SetItemsProcessed(state.iterations() * 2 * h * h);
}

void BM_Resize(benchmark::State& state) {
    const Image img = make_equirect(1920, 960);
    for (auto _ : state) {
        Image out = resize_bilinear(img, 1024, 512);
        benchmark::DoNotOptimize(out.data.data());
    }
}

} // namespace

BENCHMARK(BM_EquirectToCubemap)->Arg(256)->Arg(512);
BENCHMARK(BM_CubemapToEquirect)->Arg(256)->Arg(512);
BENCHMARK(BM_Resize);
