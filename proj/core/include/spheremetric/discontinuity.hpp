// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>
#include <vector>

#include "spheremetric/image.hpp"

namespace spheremetric {

/// Greyscale strip of width 6 straddling a potential seam; the seam runs
/// between columns 2 and 3. Rows = seam length L.
struct SeamStrip {
    int length = 0;
    std::vector<float> values; // row-major L x 6

    float at(int col, int row) const { return values[static_cast<std::size_t>(row) * 6 + col]; }
    float& at(int col, int row) { return values[static_cast<std::size_t>(row) * 6 + col]; }
};

/// "scharr2" is the separable product of the Scharr smoothing column
/// (3, 10, 3)^T with the second-difference row (1, -2, 1); "scharr1" is the
/// classic first-order Scharr x-derivative (-3,0,3 / -10,0,10 / -3,0,3).
enum class DsKernel { ScharrSecondOrder, ScharrFirstOrder };

const char* to_string(DsKernel k);
bool ds_kernel_from_string(std::string_view s, DsKernel& out);

struct DsConfig {
    DsKernel kernel = DsKernel::ScharrSecondOrder;
    double c = 0.1; // ratio stabilizer; calibrated for the [0, 255] scale
};

/// One strip per known seam. Equirectangular images have exactly one: the
/// horizontal wrap-around, built from columns [W-3, W-2, W-1, 0, 1, 2] and
/// converted to greyscale with BT.601 weights. Needs width >= 6.
std::vector<SeamStrip> extract_seam_strips(const Image& img);

/// Kernel response of a strip. Correlation with the 3x3 kernel, vertical
/// replicate padding. Only columns 1..4 are defined (0 and 5 stay zero).
struct StripResponse {
    int length = 0;
    std::vector<float> values; // row-major L x 6

    float at(int col, int row) const { return values[static_cast<std::size_t>(row) * 6 + col]; }
    float& at(int col, int row) { return values[static_cast<std::size_t>(row) * 6 + col]; }
};

StripResponse convolve_kernel(const SeamStrip& strip, const DsConfig& cfg);

/// Relative seam response of one strip:
/// (1/2L) * sum_y ( |r(2,y)| / (|r(1,y)| + c) + |r(3,y)| / (|r(4,y)| + c) ).
double ds_strip(const StripResponse& response, const DsConfig& cfg);

/// Image-level score: sum over seams of (L_i / H) * DS(strip_i). With the
/// single equirectangular seam (L = H) this equals the strip score.
double ds_image(const Image& img, const DsConfig& cfg = {});

struct DsSummary {
    std::vector<double> per_image; // in input order
    double mean = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    /// Image indices at the 0th, 10th, ..., 100th percentile of the score
    /// distribution, each with its score.
    struct Exemplar {
        int percentile;
        int image_index;
        double score;
    };
    std::vector<Exemplar> percentile_exemplars;
};

/// Summary statistics over precomputed per-image scores.
DsSummary summarize_ds(const std::vector<double>& scores);

DsSummary ds_dataset(const std::vector<Image>& images, const DsConfig& cfg = {});

} // namespace spheremetric
