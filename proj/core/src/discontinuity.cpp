// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#include "spheremetric/discontinuity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spheremetric/errors.hpp"

namespace spheremetric {

const char* to_string(DsKernel k) {
    switch (k) {
    case DsKernel::ScharrSecondOrder: return "scharr-second-order";
    case DsKernel::ScharrFirstOrder: return "scharr-first-order";
    }
    return "?";
}

bool ds_kernel_from_string(std::string_view s, DsKernel& out) {
    if (s == "scharr-second-order" || s == "scharr2") {
        out = DsKernel::ScharrSecondOrder;
        return true;
    }
    if (s == "scharr-first-order" || s == "scharr1") {
        out = DsKernel::ScharrFirstOrder;
        return true;
    }
    return false;
}

std::vector<SeamStrip> extract_seam_strips(const Image& img) {
    require_rgb(img, "extract_seam_strips");
    if (img.width < 6)
        throw InvalidInputError("extract_seam_strips: image width " + std::to_string(img.width) +
                                " < 6");

    SeamStrip strip;
    strip.length = img.height;
    strip.values.resize(static_cast<std::size_t>(img.height) * 6);
    const int cols[6] = {img.width - 3, img.width - 2, img.width - 1, 0, 1, 2};
    for (int y = 0; y < img.height; ++y)
        for (int k = 0; k < 6; ++k) {
            const int x = cols[k];
            // BT.601 luma
            strip.at(k, y) = 0.299f * img.at(x, y, 0) + 0.587f * img.at(x, y, 1) +
                             0.114f * img.at(x, y, 2);
        }
    return {std::move(strip)};
}

StripResponse convolve_kernel(const SeamStrip& strip, const DsConfig& cfg) {
    if (strip.length <= 0 || strip.values.size() != static_cast<std::size_t>(strip.length) * 6)
        throw InvalidInputError("convolve_kernel: malformed strip");
    // Both kernels share the Scharr smoothing column (3, 10, 3)^T; the row is
    // the first difference (-1, 0, 1) or the second difference (1, -2, 1).
    // The 3*(above+below) form makes vertical flips bit-exact.
    const bool first_order = cfg.kernel == DsKernel::ScharrFirstOrder;

    StripResponse r;
    r.length = strip.length;
    r.values.assign(static_cast<std::size_t>(strip.length) * 6, 0.0f);
    const int last = strip.length - 1;
    for (int y = 0; y < strip.length; ++y) {
        const int ym = std::max(y - 1, 0); // replicate rows at the ends
        const int yp = std::min(y + 1, last);
        double smoothed[6];
        for (int x = 0; x < 6; ++x)
            smoothed[x] = 3.0 * (static_cast<double>(strip.at(x, ym)) + strip.at(x, yp)) +
                          10.0 * strip.at(x, y);
        for (int x = 1; x <= 4; ++x) {
            const double acc = first_order
                                   ? smoothed[x + 1] - smoothed[x - 1]
                                   : smoothed[x - 1] - 2.0 * smoothed[x] + smoothed[x + 1];
            r.at(x, y) = static_cast<float>(acc);
        }
    }
    return r;
}

double ds_strip(const StripResponse& response, const DsConfig& cfg) {
    if (cfg.c <= 0.0)
        throw InvalidInputError("ds_strip: stabilizer c must be positive");
    if (response.length <= 0)
        throw InvalidInputError("ds_strip: empty response");
    const auto term = [&](int y) {
        return std::abs(response.at(2, y)) / (std::abs(response.at(1, y)) + cfg.c) +
               std::abs(response.at(3, y)) / (std::abs(response.at(4, y)) + cfg.c);
    };
    // pair rows symmetrically so a vertical flip sums in the same order
    double acc = 0.0;
    const int n = response.length;
    for (int y = 0; y < n / 2; ++y)
        acc += term(y) + term(n - 1 - y);
    if (n % 2 == 1)
        acc += term(n / 2);
    return acc / (2.0 * n);
}

double ds_image(const Image& img, const DsConfig& cfg) {
    double total = 0.0;
    for (const SeamStrip& strip : extract_seam_strips(img)) {
        const double weight = static_cast<double>(strip.length) / img.height;
        total += weight * ds_strip(convolve_kernel(strip, cfg), cfg);
    }
    return total;
}

namespace {

// linear-interpolation quantile over a sorted vector
double quantile_sorted(const std::vector<double>& sorted, double q) {
    if (sorted.empty())
        return 0.0;
    if (sorted.size() == 1)
        return sorted.front();
    const double h = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double t = h - static_cast<double>(lo);
    return sorted[lo] + (sorted[hi] - sorted[lo]) * t;
}

} // namespace

DsSummary summarize_ds(const std::vector<double>& scores) {
    if (scores.empty())
        throw InvalidInputError("summarize_ds: no scores");
    DsSummary s;
    s.per_image = scores;

    double acc = 0.0;
    for (double v : scores)
        acc += v;
    s.mean = acc / static_cast<double>(scores.size());

    // rank images by score, ties broken by input index for stable reports
    std::vector<int> order(scores.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (scores[a] != scores[b])
            return scores[a] < scores[b];
        return a < b;
    });
    std::vector<double> sorted(scores.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        sorted[i] = scores[order[i]];

    s.q1 = quantile_sorted(sorted, 0.25);
    s.median = quantile_sorted(sorted, 0.50);
    s.q3 = quantile_sorted(sorted, 0.75);

    const std::size_t n = sorted.size();
    for (int p = 0; p <= 100; p += 10) {
        const std::size_t idx =
            static_cast<std::size_t>(std::llround(p / 100.0 * static_cast<double>(n - 1)));
        s.percentile_exemplars.push_back({p, order[idx], sorted[idx]});
    }
    return s;
}

DsSummary ds_dataset(const std::vector<Image>& images, const DsConfig& cfg) {
    if (images.empty())
        throw InvalidInputError("ds_dataset: no images");
    std::vector<double> scores;
    scores.reserve(images.size());
    for (const Image& img : images)
        scores.push_back(ds_image(img, cfg));
    return summarize_ds(scores);
}

} // namespace spheremetric
