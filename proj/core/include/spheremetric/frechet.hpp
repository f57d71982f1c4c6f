// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "spheremetric/features.hpp"
#include "spheremetric/projection.hpp"

namespace spheremetric {

/// Sample mean and covariance of a feature set. Covariance uses the n-1
/// divisor and is kept symmetric by construction.
struct GaussianStats {
    Eigen::VectorXd mean;
    Eigen::MatrixXd covariance;
    std::int64_t sample_count = 0;

    int dim() const { return static_cast<int>(mean.size()); }
};

/// Fits mean and covariance to >= 2 equal-dimension feature vectors.
/// Accumulation runs in a fixed order, so results are bit-reproducible for
/// the same input sequence.
GaussianStats estimate_gaussian(const std::vector<FeatureVector>& features);

/// tr((S1 S2)^(1/2)) computed through the symmetric form
/// S1^(1/2) S2 S1^(1/2): the sum of square roots of its eigenvalues.
/// Eigenvalues below noise level are clamped to zero. Inputs must be
/// symmetric and PSD up to noise (lambda_min >= -1e-8 * lambda_max).
double trace_sqrt_product(const Eigen::MatrixXd& s1, const Eigen::MatrixXd& s2);

/// Wasserstein-2 distance between the fitted Gaussians:
/// |mu1 - mu2|^2 + tr(S1 + S2 - 2 (S1 S2)^(1/2)).
/// Results within numeric tolerance of zero are clamped to exactly 0.
double frechet_distance(const GaussianStats& g1, const GaussianStats& g2);

/// Sets with fewer samples than this carry a small-sample bias warning by
/// default (FID is biased at low n).
inline constexpr int kDefaultBiasWarnFloor = 2048;

/// FID between two image sets through the given extractor.
double fid(const std::vector<Image>& set_a, const std::vector<Image>& set_b,
           const FeatureExtractor& extractor);

enum class ViewGroup { Frontal = 0, Up = 1, Down = 2 };

const char* to_string(ViewGroup g);

/// Frontal = mean of the F, R, B, L features; Up and Down pass through. All
/// six faces must be present with one common dimension.
std::array<FeatureVector, 3> group_features(const std::array<FeatureVector, 6>& per_face);

struct OmniFidReport {
    double fid_bar_frontal = 0.0;
    double fid_bar_up = 0.0;
    double fid_bar_down = 0.0;
    double omnifid = 0.0;

    double fid_bar(ViewGroup g) const {
        switch (g) {
        case ViewGroup::Frontal: return fid_bar_frontal;
        case ViewGroup::Up: return fid_bar_up;
        case ViewGroup::Down: return fid_bar_down;
        }
        return 0.0;
    }
};

/// Per-view-group feature rows for one dataset: element i holds the group
/// vectors of cubemap i.
using GroupedFeatures = std::vector<std::array<FeatureVector, 3>>;

/// Group FID-bar per view group plus their mean (OmniFID) from grouped
/// feature rows of the two datasets.
OmniFidReport omnifid_from_grouped(const GroupedFeatures& a, const GroupedFeatures& b);

/// Full pipeline over two equirectangular datasets: cubemap projection,
/// per-face features, per-group averaging, FID-bar per group, mean.
/// face_size <= 0 selects height / 2 per image.
OmniFidReport omnifid(const std::vector<Image>& set_a, const std::vector<Image>& set_b,
                      const FeatureExtractor& extractor, int face_size = 0);

/// Versioned binary persistence for reference-set statistics.
struct StatsFile {
    GaussianStats stats;
    std::string extractor_name;
    std::string preprocessing;
};

void save_stats(const StatsFile& sf, const std::filesystem::path& path);
StatsFile load_stats(const std::filesystem::path& path);

} // namespace spheremetric
