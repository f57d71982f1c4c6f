// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <random>

#include <Eigen/Dense>

#include "spheremetric/frechet.hpp"

namespace {

using namespace spheremetric;

Eigen::MatrixXd spd(int d, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::MatrixXd b(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            b(i, j) = n(rng);
    return b.transpose() * b / d + 0.05 * Eigen::MatrixXd::Identity(d, d);
}

void BM_TraceSqrtProduct(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const Eigen::MatrixXd s1 = spd(d, 1);
    const Eigen::MatrixXd s2 = spd(d, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(trace_sqrt_product(s1, s2));
}

void BM_EstimateGaussian(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937 rng(3);
    std::normal_distribution<float> dist(0.0f, 1.0f);
    std::vector<FeatureVector> feats(n);
    for (auto& f : feats) {
        f.values.resize(64);
        for (float& v : f.values)
            v = dist(rng);
    }
    for (auto _ : state) {
        GaussianStats g = estimate_gaussian(feats);
        benchmark::DoNotOptimize(g.covariance.data());
    }
}

} // namespace

BENCHMARK(BM_TraceSqrtProduct)->Arg(8)->Arg(64)->Arg(256);
BENCHMARK(BM_EstimateGaussian)->Arg(128)->Arg(1024);
