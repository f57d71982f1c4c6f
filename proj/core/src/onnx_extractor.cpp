// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#include "spheremetric/features.hpp"

#include <array>
#include <filesystem>

#include "spheremetric/errors.hpp"

#ifdef SPHEREMETRIC_WITH_ONNX
#include <onnxruntime_cxx_api.h>
#endif

namespace spheremetric {

#ifdef SPHEREMETRIC_WITH_ONNX

struct OnnxExtractor::Impl {
    Ort::Env env{ORT_LOGGING_LEVEL_WARNING, "spheremetric"};
    Ort::SessionOptions options;
    std::unique_ptr<Ort::Session> session;
    std::string input_name;
    std::string output_name;
    int dim = 0;
};

OnnxExtractor::OnnxExtractor(const std::string& model_path) : impl_(std::make_unique<Impl>()) {
    if (!std::filesystem::exists(model_path))
        throw BackendError("model file not found: " + model_path);
    try {
        impl_->options.SetIntraOpNumThreads(1);
        impl_->session = std::make_unique<Ort::Session>(impl_->env, model_path.c_str(), impl_->options);
        Ort::AllocatorWithDefaultOptions alloc;
        impl_->input_name = impl_->session->GetInputNameAllocated(0, alloc).get();
        impl_->output_name = impl_->session->GetOutputNameAllocated(0, alloc).get();
        const auto out_info = impl_->session->GetOutputTypeInfo(0).GetTensorTypeAndShapeInfo();
        const auto shape = out_info.GetShape();
        impl_->dim = shape.empty() ? 0 : static_cast<int>(shape.back());
        if (impl_->dim <= 0)
            throw BackendError("model output has no fixed feature dimension: " + model_path);
    } catch (const Ort::Exception& e) {
        throw BackendError("failed to load ONNX model '" + model_path + "': " + e.what());
    }
}

OnnxExtractor::~OnnxExtractor() = default;

int OnnxExtractor::dim() const {
    return impl_->dim;
}

std::vector<FeatureVector> OnnxExtractor::extract(const std::vector<Image>& batch) const {
    if (batch.empty())
        throw InvalidInputError("OnnxExtractor::extract: empty batch");
    std::vector<FeatureVector> out;
    out.reserve(batch.size());
    Ort::MemoryInfo mem = Ort::MemoryInfo::CreateCpu(OrtArenaAllocator, OrtMemTypeDefault);
    const char* in_names[] = {impl_->input_name.c_str()};
    const char* out_names[] = {impl_->output_name.c_str()};
    // Images run one at a time so results cannot depend on batch partitioning.
    for (const Image& img : batch) {
        NetInput t = preprocess_inception(img);
        const std::array<std::int64_t, 4> shape = {1, 3, t.height, t.width};
        Ort::Value input = Ort::Value::CreateTensor<float>(mem, t.data.data(), t.data.size(),
                                                           shape.data(), shape.size());
        try {
            auto results = impl_->session->Run(Ort::RunOptions{nullptr}, in_names, &input, 1,
                                               out_names, 1);
            const float* p = results.front().GetTensorData<float>();
            const auto n = results.front().GetTensorTypeAndShapeInfo().GetElementCount();
            if (static_cast<int>(n) != impl_->dim)
                throw NumericError("ONNX output element count " + std::to_string(n) +
                                   " does not match feature dimension " + std::to_string(impl_->dim));
            FeatureVector fv;
            fv.values.assign(p, p + n);
            out.push_back(std::move(fv));
        } catch (const Ort::Exception& e) {
            throw BackendError(std::string("ONNX inference failed: ") + e.what());
        }
    }
    return out;
}

bool onnx_backend_available() {
    return true;
}

#else // !SPHEREMETRIC_WITH_ONNX

struct OnnxExtractor::Impl {};

OnnxExtractor::OnnxExtractor(const std::string& model_path) {
    throw BackendError("this build has no ONNX Runtime support; the inception-onnx backend "
                       "cannot load '" + model_path + "' (rebuild with ONNX Runtime, or use "
                       "--extractor mock)");
}

OnnxExtractor::~OnnxExtractor() = default;

int OnnxExtractor::dim() const {
    return 0;
}

std::vector<FeatureVector> OnnxExtractor::extract(const std::vector<Image>&) const {
    throw BackendError("ONNX backend unavailable");
}

bool onnx_backend_available() {
    return false;
}

#endif

} // namespace spheremetric
