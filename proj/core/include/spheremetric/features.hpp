// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "spheremetric/image.hpp"

namespace spheremetric {

struct FeatureVector {
    std::vector<float> values;

    int dim() const { return static_cast<int>(values.size()); }
};

/// Planar CHW tensor fed to the neural backend, values in [-1, 1].
struct NetInput {
    int width = 0;
    int height = 0;
    int channels = 3;
    std::vector<float> data; // channel-major planes
};

/// Bilinear resize to 299x299, RGB channel order, [0, 255] mapped to [-1, 1].
NetInput preprocess_inception(const Image& img);

/// Deterministic per-image feature source. Implementations must be
/// order-preserving and partition-independent over batches.
class FeatureExtractor {
public:
    virtual ~FeatureExtractor() = default;

    virtual std::string name() const = 0;
    virtual int dim() const = 0;
    /// Preprocessing provenance string; part of cache keys and reports.
    virtual std::string preprocessing() const = 0;
    virtual std::vector<FeatureVector> extract(const std::vector<Image>& batch) const = 0;

    FeatureVector extract_one(const Image& img) const;
};

/// Test-scale extractor: mean and standard deviation of all channel samples
/// in each image quadrant (TL, TR, BL, BR), divided by 255. d = 8. Quadrant
/// pooling makes vertical content shifts visible in feature space.
class MockExtractor final : public FeatureExtractor {
public:
    std::string name() const override { return "mock"; }
    int dim() const override { return 8; }
    std::string preprocessing() const override { return "quadrant-meanstd-div255"; }
    std::vector<FeatureVector> extract(const std::vector<Image>& batch) const override;
};

FeatureVector mock_extract(const Image& img);

/// Inception-V3 features (2048-d pooled activations) through ONNX Runtime.
/// Only available when the library was built with ONNX Runtime; otherwise
/// construction throws BackendError.
class OnnxExtractor final : public FeatureExtractor {
public:
    explicit OnnxExtractor(const std::string& model_path);
    ~OnnxExtractor() override;

    std::string name() const override { return "inception-onnx"; }
    int dim() const override;
    std::string preprocessing() const override { return "bilinear-299x299-rgb-[-1,1]"; }
    std::vector<FeatureVector> extract(const std::vector<Image>& batch) const override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

bool onnx_backend_available();

/// kind is "mock" or "inception-onnx". model_path may be empty for mock; for
/// the ONNX backend an empty path falls back to the SPHEREMETRIC_MODEL
/// environment variable. Throws BackendError when the backend cannot load.
std::unique_ptr<FeatureExtractor> make_extractor(const std::string& kind,
                                                 const std::string& model_path = {});

} // namespace spheremetric
