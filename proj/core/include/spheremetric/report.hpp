// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spheremetric/discontinuity.hpp"
#include "spheremetric/frechet.hpp"

namespace spheremetric {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

/// Everything needed to reproduce a run. Serialized verbatim into every
/// report, and accepted back through `replay`.
struct RunConfig {
    std::string command;  // fid | omnifid | ds | corrupt | project
    std::string ref_dir;  // reference dataset (fid/omnifid)
    std::string eval_dir; // evaluated dataset (fid/omnifid/ds)
    std::string in_dir;   // input dataset (corrupt/project)
    std::string out_dir;  // output directory (reports, corrupted sets, faces)

    std::string extractor = "mock"; // mock | inception-onnx
    std::string model_path;
    int face_size = 0; // 0 = equirect height / 2

    std::string ds_kernel = "scharr-second-order";
    double ds_c = 0.1;

    std::string corrupt_op; // fov | salt-pepper | gaussian-noise | gaussian-blur | crop-seam
    std::vector<double> levels;

    std::uint64_t seed = 0;
    int jobs = 1;
    std::string format = "json"; // json | csv
    bool strict_aspect = true;

    int resize_width = 0; // optional dataset-wide resize before anything else
    int resize_height = 0;

    int bias_warn_floor = kDefaultBiasWarnFloor;
    std::string cache_path; // optional feature cache file

    std::string to_json() const;
    static RunConfig from_json(const std::string& json_text);
};

struct DsReportSummary {
    double mean = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    struct Exemplar {
        int percentile;
        std::string id;
        double score;
    };
    std::vector<Exemplar> percentile_exemplars;
};

struct DsRow {
    std::string id;
    double score;
};

struct MetricReport {
    RunConfig config;
    std::optional<double> fid;
    std::optional<OmniFidReport> omnifid;
    std::optional<DsReportSummary> ds;
    std::vector<DsRow> ds_rows;
    int n_ref = 0;
    int n_eval = 0;
    std::vector<std::string> warnings;
    double total_seconds = 0.0;

    /// Full JSON document (schema_version, tool_version, config, results,
    /// warnings, timing).
    std::string to_json() const;

    /// Flat one-row-per-metric table: metric,value
    std::string to_csv() const;

    /// Per-image DS table: path,ds
    std::string ds_rows_csv() const;
};

} // namespace spheremetric
