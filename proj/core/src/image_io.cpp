// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#include "spheremetric/image_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>
#include <openssl/evp.h>

#include "spheremetric/errors.hpp"

namespace spheremetric {

bool is_supported_image_file(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

Image load_image(const std::filesystem::path& path) {
    cv::Mat mat = cv::imread(path.string(), cv::IMREAD_COLOR); // 8-bit BGR
    if (mat.empty())
        throw DatasetError("cannot decode image: " + path.string());

    Image img(mat.cols, mat.rows, 3);
    for (int y = 0; y < mat.rows; ++y) {
        const cv::Vec3b* row = mat.ptr<cv::Vec3b>(y);
        for (int x = 0; x < mat.cols; ++x) {
            img.at(x, y, 0) = row[x][2];
            img.at(x, y, 1) = row[x][1];
            img.at(x, y, 2) = row[x][0];
        }
    }
    return img;
}

namespace {

inline std::uint8_t quantize(float v) {
    return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
}

} // namespace

void save_image(const Image& img, const std::filesystem::path& path) {
    require_rgb(img, "save_image");
    cv::Mat mat(img.height, img.width, CV_8UC3);
    for (int y = 0; y < img.height; ++y) {
        cv::Vec3b* row = mat.ptr<cv::Vec3b>(y);
        for (int x = 0; x < img.width; ++x) {
            row[x][2] = quantize(img.at(x, y, 0));
            row[x][1] = quantize(img.at(x, y, 1));
            row[x][0] = quantize(img.at(x, y, 2));
        }
    }
    if (!cv::imwrite(path.string(), mat))
        throw DatasetError("cannot write image: " + path.string());
}

std::string content_hash(const Image& img) {
    require_rgb(img, "content_hash");
    std::vector<std::uint8_t> bytes;
    bytes.reserve(8 + img.data.size());
    const std::uint32_t w = static_cast<std::uint32_t>(img.width);
    const std::uint32_t h = static_cast<std::uint32_t>(img.height);
    for (int i = 0; i < 4; ++i)
        bytes.push_back(static_cast<std::uint8_t>(w >> (8 * i)));
    for (int i = 0; i < 4; ++i)
        bytes.push_back(static_cast<std::uint8_t>(h >> (8 * i)));
    for (float v : img.data)
        bytes.push_back(quantize(v));

    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int digest_len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &digest_len, EVP_sha256(), nullptr) != 1)
        throw NumericError("content_hash: SHA-256 failed");

    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * digest_len);
    for (unsigned int i = 0; i < digest_len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xF]);
    }
    return out;
}

} // namespace spheremetric
