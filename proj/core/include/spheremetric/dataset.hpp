// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "spheremetric/features.hpp"
#include "spheremetric/image.hpp"

namespace spheremetric {

struct ManifestEntry {
    std::string id;            // relative path with '/' separators
    std::string relative_path; // same as id in this version
    std::string hash;          // hex SHA-256 of decoded pixels
    int width = 0;
    int height = 0;
};

struct DatasetManifest {
    std::filesystem::path root;
    std::vector<ManifestEntry> entries;
};

/// Recursively scans root for decodable PNG/JPEG files and builds a manifest
/// ordered lexicographically by relative path. `globs` holds optional
/// case-insensitive filename suffixes (e.g. ".png"); empty means all
/// supported types. Undecodable files are skipped with a warning. Throws
/// DatasetError on unreadable roots or when nothing remains.
DatasetManifest scan(const std::filesystem::path& root, const std::vector<std::string>& globs = {},
                     std::vector<std::string>* warnings = nullptr);

struct LoadOptions {
    int target_width = 0; // 0 = keep native resolution
    int target_height = 0;
    bool strict_aspect = true; // require width == 2 * height after load
};

/// Decodes one manifest entry, optionally resizes (bilinear), and validates
/// the 2:1 aspect in strict mode.
Image load_and_normalize(const DatasetManifest& manifest, const ManifestEntry& entry,
                         const LoadOptions& opts);

/// Which features a cache record holds: the whole image (1 vector) or the
/// six cubemap faces (face_size recorded in the key).
struct ProjectionConfig {
    bool cubemap = false;
    int face_size = 0; // 0 = equirect height / 2, resolved per image

    std::string layout_string() const;
};

/// Append-only binary feature cache keyed by
/// (content hash, extractor name, preprocessing spec, layout).
/// Records read up to the first corruption are kept; the corrupt tail is
/// discarded with a warning on the next open.
class FeatureCache {
public:
    explicit FeatureCache(std::filesystem::path path);

    std::optional<std::vector<FeatureVector>> lookup(const std::string& hash,
                                                     const std::string& extractor,
                                                     const std::string& preprocessing,
                                                     const std::string& layout) const;

    void store(const std::string& hash, const std::string& extractor,
               const std::string& preprocessing, const std::string& layout,
               const std::vector<FeatureVector>& vecs);

    const std::vector<std::string>& warnings() const { return warnings_; }
    std::size_t size() const { return keys_.size(); }

private:
    std::filesystem::path path_;
    std::vector<std::string> keys_;
    std::vector<std::vector<FeatureVector>> records_;
    std::vector<std::string> warnings_;

    void load();
};

/// Feature rows of one image: 1 vector for equirect layout, 6 (face order
/// F, R, B, L, U, D) for cubemap layout.
using FeatureRows = std::vector<FeatureVector>;

/// Computes (or serves from cache) features for every manifest entry.
/// Deterministic in (directory content, options); extractor calls are
/// skipped entirely on full cache hits. `jobs` bounds decode/extract
/// parallelism; output order follows the manifest.
std::vector<FeatureRows> get_or_compute_features(const DatasetManifest& manifest,
                                                 const FeatureExtractor& extractor,
                                                 const ProjectionConfig& projection,
                                                 const LoadOptions& load_opts,
                                                 FeatureCache* cache = nullptr, int jobs = 1);

} // namespace spheremetric
