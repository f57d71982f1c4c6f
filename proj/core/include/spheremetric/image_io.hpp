// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>

#include "spheremetric/image.hpp"

namespace spheremetric {

/// True for file extensions the decoder handles (.png, .jpg, .jpeg, any case).
bool is_supported_image_file(const std::filesystem::path& path);

/// Decodes an 8-bit PNG/JPEG into the internal float RGB representation.
/// Throws DatasetError on missing or undecodable files.
Image load_image(const std::filesystem::path& path);

/// Writes an image as 8-bit PNG or JPEG depending on the extension. Values
/// are clamped to [0, 255] and rounded.
void save_image(const Image& img, const std::filesystem::path& path);

/// Hex SHA-256 of the decoded pixel content (dimensions plus 8-bit RGB
/// bytes), so re-encodings of identical pixels hash identically.
std::string content_hash(const Image& img);

} // namespace spheremetric
