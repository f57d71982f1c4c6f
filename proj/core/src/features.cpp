// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#include "spheremetric/features.hpp"

#include <cmath>
#include <cstdlib>

#include "spheremetric/errors.hpp"

namespace spheremetric {

NetInput preprocess_inception(const Image& img) {
    require_rgb(img, "preprocess_inception");
    const Image resized = resize_bilinear(img, 299, 299);
    NetInput t;
    t.width = 299;
    t.height = 299;
    t.channels = 3;
    t.data.resize(static_cast<std::size_t>(3) * 299 * 299);
    const std::size_t plane = static_cast<std::size_t>(299) * 299;
    for (int y = 0; y < 299; ++y)
        for (int x = 0; x < 299; ++x)
            for (int c = 0; c < 3; ++c)
                t.data[plane * c + static_cast<std::size_t>(y) * 299 + x] =
                    resized.at(x, y, c) / 127.5f - 1.0f;
    return t;
}

FeatureVector FeatureExtractor::extract_one(const Image& img) const {
    auto out = extract({img});
    return std::move(out.front());
}

FeatureVector mock_extract(const Image& img) {
    require_rgb(img, "mock_extract");
    if (img.width < 2 || img.height < 2)
        throw InvalidInputError("mock_extract: image must be at least 2x2");

    const int hx = img.width / 2;
    const int hy = img.height / 2;
    // quadrants: TL, TR, BL, BR; right/bottom take the odd remainder
    const int x0s[4] = {0, hx, 0, hx};
    const int x1s[4] = {hx, img.width, hx, img.width};
    const int y0s[4] = {0, 0, hy, hy};
    const int y1s[4] = {hy, hy, img.height, img.height};

    FeatureVector fv;
    fv.values.resize(8);
    for (int q = 0; q < 4; ++q) {
        double sum = 0.0, sum2 = 0.0;
        const std::int64_t n =
            static_cast<std::int64_t>(x1s[q] - x0s[q]) * (y1s[q] - y0s[q]) * img.channels;
        for (int y = y0s[q]; y < y1s[q]; ++y)
            for (int x = x0s[q]; x < x1s[q]; ++x)
                for (int c = 0; c < img.channels; ++c) {
                    const double v = img.at(x, y, c);
                    sum += v;
                    sum2 += v * v;
                }
        const double mean = sum / static_cast<double>(n);
        const double var = std::max(0.0, sum2 / static_cast<double>(n) - mean * mean);
        fv.values[2 * q] = static_cast<float>(mean / 255.0);
        fv.values[2 * q + 1] = static_cast<float>(std::sqrt(var) / 255.0);
    }
    return fv;
}

std::vector<FeatureVector> MockExtractor::extract(const std::vector<Image>& batch) const {
    if (batch.empty())
        throw InvalidInputError("MockExtractor::extract: empty batch");
    std::vector<FeatureVector> out;
    out.reserve(batch.size());
    for (const Image& img : batch)
        out.push_back(mock_extract(img));
    return out;
}

std::unique_ptr<FeatureExtractor> make_extractor(const std::string& kind,
                                                 const std::string& model_path) {
    if (kind == "mock")
        return std::make_unique<MockExtractor>();
    if (kind == "inception-onnx") {
        std::string path = model_path;
        if (path.empty()) {
            if (const char* env = std::getenv("SPHEREMETRIC_MODEL"))
                path = env;
        }
        if (path.empty())
            throw BackendError("inception-onnx backend needs a model file: pass --model-path "
                               "or set SPHEREMETRIC_MODEL");
        return std::make_unique<OnnxExtractor>(path);
    }
    throw BackendError("unknown extractor '" + kind + "' (expected 'mock' or 'inception-onnx')");
}

} // namespace spheremetric
