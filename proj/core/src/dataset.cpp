// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#include "spheremetric/dataset.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>

#include "spheremetric/errors.hpp"
#include "spheremetric/image_io.hpp"
#include "spheremetric/parallel.hpp"
#include "spheremetric/projection.hpp"

namespace spheremetric {

namespace {

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool matches_globs(const std::filesystem::path& p, const std::vector<std::string>& globs) {
    if (globs.empty())
        return true;
    const std::string name = to_lower(p.filename().string());
    for (const std::string& g : globs) {
        const std::string suffix = to_lower(g);
        if (name.size() >= suffix.size() &&
            name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
            return true;
    }
    return false;
}

std::string generic_relative(const std::filesystem::path& p, const std::filesystem::path& root) {
    return std::filesystem::relative(p, root).generic_string();
}

} // namespace

DatasetManifest scan(const std::filesystem::path& root, const std::vector<std::string>& globs,
                     std::vector<std::string>* warnings) {
    std::error_code ec;
    if (!std::filesystem::is_directory(root, ec))
        throw DatasetError("scan: not a readable directory: " + root.string());

    std::vector<std::filesystem::path> files;
    for (auto it = std::filesystem::recursive_directory_iterator(
             root, std::filesystem::directory_options::skip_permission_denied, ec);
         it != std::filesystem::recursive_directory_iterator(); ++it) {
        if (!it->is_regular_file(ec))
            continue;
        const std::filesystem::path& p = it->path();
        if (!is_supported_image_file(p)) {
            // sidecar files (reports, manifests) are expected next to images
            const std::string ext = to_lower(p.extension().string());
            const bool sidecar = ext == ".json" || ext == ".csv" || ext == ".txt" || ext == ".md";
            const std::string name = p.filename().string();
            if (warnings && !sidecar && !name.empty() && name.front() != '.')
                warnings->push_back("skipped non-image file: " + generic_relative(p, root));
            continue;
        }
        if (matches_globs(p, globs))
            files.push_back(p);
    }
    std::sort(files.begin(), files.end(), [&](const auto& a, const auto& b) {
        return generic_relative(a, root) < generic_relative(b, root);
    });

    DatasetManifest manifest;
    manifest.root = root;
    for (const std::filesystem::path& p : files) {
        const std::string rel = generic_relative(p, root);
        try {
            const Image img = load_image(p);
            manifest.entries.push_back({rel, rel, content_hash(img), img.width, img.height});
        } catch (const DatasetError& e) {
            if (warnings)
                warnings->push_back(std::string("skipped unreadable file: ") + e.what());
        }
    }
    if (manifest.entries.empty())
        throw DatasetError("scan: no decodable images under " + root.string());
    return manifest;
}

Image load_and_normalize(const DatasetManifest& manifest, const ManifestEntry& entry,
                         const LoadOptions& opts) {
    Image img = load_image(manifest.root / entry.relative_path);
    if (opts.target_width > 0 && opts.target_height > 0)
        img = resize_bilinear(img, opts.target_width, opts.target_height);
    if (opts.strict_aspect && img.width != 2 * img.height)
        throw DatasetError("strict 2:1 aspect violated by " + entry.relative_path + " (" +
                           std::to_string(img.width) + "x" + std::to_string(img.height) +
                           "); rerun with strict aspect disabled to accept it");
    return img;
}

std::string ProjectionConfig::layout_string() const {
    if (!cubemap)
        return "equirect";
    return "cubemap" + std::to_string(face_size);
}

namespace {

constexpr char kCacheMagic[4] = {'S', 'M', 'F', 'C'};
constexpr std::uint32_t kCacheVersion = 1;

std::string cache_key(const std::string& hash, const std::string& extractor,
                      const std::string& preprocessing, const std::string& layout) {
    return hash + "\x1f" + extractor + "\x1f" + preprocessing + "\x1f" + layout;
}

void put_u32(std::string& buf, std::uint32_t v) {
    for (int i = 0; i < 4; ++i)
        buf.push_back(static_cast<char>(v >> (8 * i)));
}

void put_string(std::string& buf, const std::string& s) {
    put_u32(buf, static_cast<std::uint32_t>(s.size()));
    buf.append(s);
}

bool get_u32(const std::string& buf, std::size_t& pos, std::uint32_t& v) {
    if (pos + 4 > buf.size())
        return false;
    v = 0;
    for (int i = 0; i < 4; ++i)
        v |= static_cast<std::uint32_t>(static_cast<unsigned char>(buf[pos + i])) << (8 * i);
    pos += 4;
    return true;
}

bool get_string(const std::string& buf, std::size_t& pos, std::string& s) {
    std::uint32_t n = 0;
    if (!get_u32(buf, pos, n) || pos + n > buf.size())
        return false;
    s.assign(buf, pos, n);
    pos += n;
    return true;
}

} // namespace

FeatureCache::FeatureCache(std::filesystem::path path) : path_(std::move(path)) {
    load();
}

void FeatureCache::load() {
    std::ifstream is(path_, std::ios::binary);
    if (!is)
        return; // fresh cache
    std::string buf((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    std::size_t pos = 0;

    if (buf.size() < 8 || buf.compare(0, 4, kCacheMagic, 4) != 0) {
        warnings_.push_back("feature cache " + path_.string() + " is not recognizable; rebuilding");
        std::filesystem::remove(path_);
        return;
    }
    pos = 4;
    std::uint32_t version = 0;
    get_u32(buf, pos, version);
    if (version != kCacheVersion) {
        warnings_.push_back("feature cache " + path_.string() + " has unsupported version " +
                            std::to_string(version) + "; rebuilding");
        std::filesystem::remove(path_);
        return;
    }

    std::size_t good_end = pos;
    while (pos < buf.size()) {
        std::string hash, extractor, preprocessing, layout;
        std::uint32_t n_vecs = 0, dim = 0;
        if (!get_string(buf, pos, hash) || !get_string(buf, pos, extractor) ||
            !get_string(buf, pos, preprocessing) || !get_string(buf, pos, layout) ||
            !get_u32(buf, pos, n_vecs) || !get_u32(buf, pos, dim))
            break;
        const std::size_t payload = static_cast<std::size_t>(n_vecs) * dim * sizeof(float);
        if (pos + payload > buf.size() || n_vecs > 1u << 20 || dim > 1u << 20)
            break;
        std::vector<FeatureVector> vecs(n_vecs);
        for (std::uint32_t v = 0; v < n_vecs; ++v) {
            vecs[v].values.resize(dim);
            std::memcpy(vecs[v].values.data(), buf.data() + pos, sizeof(float) * dim);
            pos += sizeof(float) * dim;
        }
        keys_.push_back(cache_key(hash, extractor, preprocessing, layout));
        records_.push_back(std::move(vecs));
        good_end = pos;
    }

    if (good_end != buf.size()) {
        warnings_.push_back("feature cache " + path_.string() +
                            " has a corrupt tail; keeping the valid prefix");
        std::filesystem::resize_file(path_, good_end);
    }
}

std::optional<std::vector<FeatureVector>> FeatureCache::lookup(const std::string& hash,
                                                               const std::string& extractor,
                                                               const std::string& preprocessing,
                                                               const std::string& layout) const {
    const std::string key = cache_key(hash, extractor, preprocessing, layout);
    for (std::size_t i = keys_.size(); i-- > 0;) // newest record wins
        if (keys_[i] == key)
            return records_[i];
    return std::nullopt;
}

void FeatureCache::store(const std::string& hash, const std::string& extractor,
                         const std::string& preprocessing, const std::string& layout,
                         const std::vector<FeatureVector>& vecs) {
    const bool fresh = !std::filesystem::exists(path_);
    std::ofstream os(path_, std::ios::binary | std::ios::app);
    if (!os)
        throw DatasetError("feature cache: cannot open for append: " + path_.string());
    std::string buf;
    if (fresh) {
        buf.append(kCacheMagic, 4);
        put_u32(buf, kCacheVersion);
    }
    put_string(buf, hash);
    put_string(buf, extractor);
    put_string(buf, preprocessing);
    put_string(buf, layout);
    put_u32(buf, static_cast<std::uint32_t>(vecs.size()));
    const std::uint32_t dim = vecs.empty() ? 0 : static_cast<std::uint32_t>(vecs.front().dim());
    put_u32(buf, dim);
    for (const FeatureVector& v : vecs)
        buf.append(reinterpret_cast<const char*>(v.values.data()), sizeof(float) * dim);
    os.write(buf.data(), static_cast<std::streamsize>(buf.size())); // one append per record
    os.flush();

    keys_.push_back(cache_key(hash, extractor, preprocessing, layout));
    records_.push_back(vecs);
}

std::vector<FeatureRows> get_or_compute_features(const DatasetManifest& manifest,
                                                 const FeatureExtractor& extractor,
                                                 const ProjectionConfig& projection,
                                                 const LoadOptions& load_opts,
                                                 FeatureCache* cache, int jobs) {
    // preprocessing key covers everything between file bytes and features
    std::string prep = extractor.preprocessing();
    if (load_opts.target_width > 0)
        prep += ";resize" + std::to_string(load_opts.target_width) + "x" +
                std::to_string(load_opts.target_height);
    const std::string layout = projection.layout_string();

    const std::size_t n = manifest.entries.size();
    std::vector<FeatureRows> rows(n);
    std::vector<std::size_t> missing;
    for (std::size_t i = 0; i < n; ++i) {
        if (cache) {
            auto hit = cache->lookup(manifest.entries[i].hash, extractor.name(), prep, layout);
            if (hit) {
                rows[i] = std::move(*hit);
                continue;
            }
        }
        missing.push_back(i);
    }

    parallel_for(missing.size(), jobs, [&](std::size_t k) {
        const std::size_t i = missing[k];
        const Image img = load_and_normalize(manifest, manifest.entries[i], load_opts);
        if (projection.cubemap) {
            const int fs = projection.face_size > 0 ? projection.face_size : default_face_size(img);
            const CubemapSet cm = equirect_to_cubemap(img, fs);
            rows[i] = extractor.extract(std::vector<Image>(cm.faces.begin(), cm.faces.end()));
        } else {
            rows[i] = extractor.extract({img});
        }
    });

    if (cache) // single-writer appends, manifest order
        for (std::size_t i : missing)
            cache->store(manifest.entries[i].hash, extractor.name(), prep, layout, rows[i]);

    return rows;
}

} // namespace spheremetric
