// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#include "spheremetric/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <memory>
#include <string>

#include <json.hpp>

#include "spheremetric/corruption.hpp"
#include "spheremetric/dataset.hpp"
#include "spheremetric/errors.hpp"
#include "spheremetric/image_io.hpp"
#include "spheremetric/parallel.hpp"
#include "spheremetric/projection.hpp"

namespace spheremetric {

namespace {

using Clock = std::chrono::steady_clock;

LoadOptions load_options(const RunConfig& c) {
    return {c.resize_width, c.resize_height, c.strict_aspect};
}

DsConfig ds_config(const RunConfig& c) {
    DsConfig cfg;
    if (!ds_kernel_from_string(c.ds_kernel, cfg.kernel))
        throw InvalidInputError("unknown DS kernel '" + c.ds_kernel + "'");
    if (c.ds_c <= 0.0)
        throw InvalidInputError("--ds-c must be positive");
    cfg.c = c.ds_c;
    return cfg;
}

void warn_small_sample(MetricReport& rep, const char* which, std::size_t n, int floor) {
    if (static_cast<int>(n) < floor)
        rep.warnings.push_back(std::string(which) + " set has " + std::to_string(n) +
                               " images (< " + std::to_string(floor) +
                               "); FID-family scores are biased at small sample sizes");
}

std::vector<FeatureVector> flatten_single(std::vector<FeatureRows>&& rows) {
    std::vector<FeatureVector> out;
    out.reserve(rows.size());
    for (FeatureRows& r : rows)
        out.push_back(std::move(r.front()));
    return out;
}

GroupedFeatures to_grouped(std::vector<FeatureRows>&& rows) {
    GroupedFeatures out;
    out.reserve(rows.size());
    for (FeatureRows& r : rows) {
        if (r.size() != 6)
            throw NumericError("expected 6 per-face feature rows, got " + std::to_string(r.size()));
        std::array<FeatureVector, 6> per_face;
        for (int i = 0; i < 6; ++i)
            per_face[i] = std::move(r[i]);
        out.push_back(group_features(per_face));
    }
    return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os)
        throw DatasetError("cannot write " + path.string());
    os.write(text.data(), static_cast<std::streamsize>(text.size()));
}

void write_report_files(const MetricReport& rep) {
    if (rep.config.out_dir.empty())
        return;
    const std::filesystem::path out(rep.config.out_dir);
    std::filesystem::create_directories(out);
    write_text(out / "report.json", rep.to_json());
    if (rep.config.format == "csv")
        write_text(out / "report.csv", rep.to_csv());
    if (!rep.ds_rows.empty())
        write_text(out / "ds_per_image.csv", rep.ds_rows_csv());
}

std::string level_string(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15)
        return std::to_string(static_cast<long long>(v));
    return nlohmann::json(v).dump();
}

void write_manifest_json(const DatasetManifest& manifest, const std::filesystem::path& path) {
    nlohmann::json j;
    j["entries"] = nlohmann::json::array();
    for (const ManifestEntry& e : manifest.entries)
        j["entries"].push_back({{"id", e.id},
                                {"path", e.relative_path},
                                {"hash", e.hash},
                                {"width", e.width},
                                {"height", e.height}});
    write_text(path, j.dump(2) + "\n");
}

std::unique_ptr<FeatureCache> open_cache(const RunConfig& c, MetricReport& rep) {
    if (c.cache_path.empty())
        return nullptr;
    auto cache = std::make_unique<FeatureCache>(c.cache_path);
    for (const std::string& w : cache->warnings())
        rep.warnings.push_back(w);
    return cache;
}

} // namespace

MetricReport run_fid(const RunConfig& config) {
    const auto t0 = Clock::now();
    MetricReport rep;
    rep.config = config;
    if (config.ref_dir.empty() || config.eval_dir.empty())
        throw InvalidInputError("fid needs --ref and --eval");

    const auto extractor = make_extractor(config.extractor, config.model_path);
    const auto cache = open_cache(config, rep);
    const LoadOptions lo = load_options(config);
    const ProjectionConfig proj{false, 0};

    const DatasetManifest mref = scan(config.ref_dir, {}, &rep.warnings);
    const DatasetManifest meval = scan(config.eval_dir, {}, &rep.warnings);
    rep.n_ref = static_cast<int>(mref.entries.size());
    rep.n_eval = static_cast<int>(meval.entries.size());
    warn_small_sample(rep, "ref", mref.entries.size(), config.bias_warn_floor);
    warn_small_sample(rep, "eval", meval.entries.size(), config.bias_warn_floor);

    auto fa = flatten_single(
        get_or_compute_features(mref, *extractor, proj, lo, cache.get(), config.jobs));
    auto fb = flatten_single(
        get_or_compute_features(meval, *extractor, proj, lo, cache.get(), config.jobs));
    rep.fid = frechet_distance(estimate_gaussian(fa), estimate_gaussian(fb));

    rep.total_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    write_report_files(rep);
    return rep;
}

MetricReport run_omnifid(const RunConfig& config) {
    const auto t0 = Clock::now();
    MetricReport rep;
    rep.config = config;
    if (config.ref_dir.empty() || config.eval_dir.empty())
        throw InvalidInputError("omnifid needs --ref and --eval");

    const auto extractor = make_extractor(config.extractor, config.model_path);
    const auto cache = open_cache(config, rep);
    const LoadOptions lo = load_options(config);

    const DatasetManifest mref = scan(config.ref_dir, {}, &rep.warnings);
    const DatasetManifest meval = scan(config.eval_dir, {}, &rep.warnings);
    rep.n_ref = static_cast<int>(mref.entries.size());
    rep.n_eval = static_cast<int>(meval.entries.size());
    warn_small_sample(rep, "ref", mref.entries.size(), config.bias_warn_floor);
    warn_small_sample(rep, "eval", meval.entries.size(), config.bias_warn_floor);

    // plain FID on the equirect frames, for side-by-side reporting
    const ProjectionConfig equirect{false, 0};
    auto fa = flatten_single(
        get_or_compute_features(mref, *extractor, equirect, lo, cache.get(), config.jobs));
    auto fb = flatten_single(
        get_or_compute_features(meval, *extractor, equirect, lo, cache.get(), config.jobs));
    rep.fid = frechet_distance(estimate_gaussian(fa), estimate_gaussian(fb));

    const ProjectionConfig cubemap{true, config.face_size};
    auto ga = to_grouped(
        get_or_compute_features(mref, *extractor, cubemap, lo, cache.get(), config.jobs));
    auto gb = to_grouped(
        get_or_compute_features(meval, *extractor, cubemap, lo, cache.get(), config.jobs));
    rep.omnifid = omnifid_from_grouped(ga, gb);

    rep.total_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    write_report_files(rep);
    return rep;
}

MetricReport run_ds(const RunConfig& config) {
    const auto t0 = Clock::now();
    MetricReport rep;
    rep.config = config;
    if (config.eval_dir.empty())
        throw InvalidInputError("ds needs --eval");
    const DsConfig cfg = ds_config(config);

    const DatasetManifest m = scan(config.eval_dir, {}, &rep.warnings);
    rep.n_eval = static_cast<int>(m.entries.size());
    const LoadOptions lo = load_options(config);

    std::vector<double> scores(m.entries.size());
    parallel_for(m.entries.size(), config.jobs, [&](std::size_t i) {
        scores[i] = ds_image(load_and_normalize(m, m.entries[i], lo), cfg);
    });

    const DsSummary summary = summarize_ds(scores);
    DsReportSummary out;
    out.mean = summary.mean;
    out.q1 = summary.q1;
    out.median = summary.median;
    out.q3 = summary.q3;
    for (const auto& e : summary.percentile_exemplars)
        out.percentile_exemplars.push_back({e.percentile, m.entries[e.image_index].id, e.score});
    rep.ds = out;
    for (std::size_t i = 0; i < scores.size(); ++i)
        rep.ds_rows.push_back({m.entries[i].id, scores[i]});

    rep.total_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    write_report_files(rep);
    return rep;
}

MetricReport run_corrupt(const RunConfig& config) {
    const auto t0 = Clock::now();
    MetricReport rep;
    rep.config = config;
    if (config.in_dir.empty() || config.out_dir.empty())
        throw InvalidInputError("corrupt needs --in and --out");
    CorruptionOp op;
    if (!corruption_op_from_string(config.corrupt_op, op))
        throw InvalidInputError("unknown corruption op '" + config.corrupt_op + "'");
    std::vector<double> levels = config.levels.empty() ? default_levels(op) : config.levels;
    rep.config.levels = levels; // echo resolved sweep

    const DatasetManifest m = scan(config.in_dir, {}, &rep.warnings);
    rep.n_eval = static_cast<int>(m.entries.size());
    const LoadOptions lo = load_options(config);
    const std::filesystem::path out_root(config.out_dir);

    for (double level : levels) {
        const std::filesystem::path level_dir =
            out_root / (std::string(to_string(op)) + "_" + level_string(level));
        std::filesystem::create_directories(level_dir);

        const NoiseLevel nl{op, level, config.seed};
        parallel_for(m.entries.size(), config.jobs, [&](std::size_t i) {
            const Image img = load_and_normalize(m, m.entries[i], lo);
            const Image corrupted = apply_corruption(img, nl, i);
            std::filesystem::path target =
                level_dir / std::filesystem::path(m.entries[i].relative_path);
            target.replace_extension(".png"); // lossless output regardless of source format
            std::filesystem::create_directories(target.parent_path());
            save_image(corrupted, target);
        });
        write_manifest_json(scan(level_dir), level_dir / "manifest.json");
    }

    rep.total_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    write_report_files(rep);
    return rep;
}

MetricReport run_project(const RunConfig& config) {
    const auto t0 = Clock::now();
    MetricReport rep;
    rep.config = config;
    if (config.in_dir.empty() || config.out_dir.empty())
        throw InvalidInputError("project needs --in and --out");

    const DatasetManifest m = scan(config.in_dir, {}, &rep.warnings);
    rep.n_eval = static_cast<int>(m.entries.size());
    const LoadOptions lo = load_options(config);
    const std::filesystem::path out_root(config.out_dir);

    parallel_for(m.entries.size(), config.jobs, [&](std::size_t i) {
        const Image img = load_and_normalize(m, m.entries[i], lo);
        const int fs = config.face_size > 0 ? config.face_size : default_face_size(img);
        const CubemapSet cm = equirect_to_cubemap(img, fs);
        const std::filesystem::path rel(m.entries[i].relative_path);
        const std::filesystem::path dir = out_root / rel.parent_path();
        std::filesystem::create_directories(dir);
        for (FaceLabel f : kAllFaces) {
            const std::string name = rel.stem().string() + "_" + to_string(f) + ".png";
            save_image(cm.face(f), dir / name);
        }
    });

    rep.total_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    write_report_files(rep);
    return rep;
}

MetricReport run(const RunConfig& config) {
    if (config.command == "fid")
        return run_fid(config);
    if (config.command == "omnifid")
        return run_omnifid(config);
    if (config.command == "ds")
        return run_ds(config);
    if (config.command == "corrupt")
        return run_corrupt(config);
    if (config.command == "project")
        return run_project(config);
    throw InvalidInputError("unknown command '" + config.command + "'");
}

} // namespace spheremetric
