// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
//
// Geometry-aware fidelity metrics for spherical images: FID, cubemap-grouped
// FID (OmniFID), the seam Discontinuity Score, plus the corruption and
// projection tooling needed to run controlled sweeps.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spheremetric/errors.hpp"
#include "spheremetric/pipeline.hpp"

namespace {

// stable scripting surface: bad args 2, dataset 3, backend 4, numeric 5
constexpr int kExitBadArgs = 2;
constexpr int kExitDataset = 3;
constexpr int kExitBackend = 4;
constexpr int kExitNumeric = 5;

using spheremetric::MetricReport;
using spheremetric::RunConfig;

void add_dataset_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores)");
    cmd->add_option("--out", cfg.out_dir, "Output directory for reports and artifacts");
    cmd->add_option("--format", cfg.format, "Report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--strict-aspect", cfg.strict_aspect,
                    "Require 2:1 aspect on loaded images (true/false)");
    std::string resize;
    cmd->add_option_function<std::string>(
           "--resize",
           [&cfg](const std::string& s) {
               const auto x = s.find('x');
               if (x == std::string::npos)
                   throw CLI::ValidationError("--resize expects WIDTHxHEIGHT, e.g. 1024x512");
               cfg.resize_width = std::stoi(s.substr(0, x));
               cfg.resize_height = std::stoi(s.substr(x + 1));
           },
           "Resize every image to WIDTHxHEIGHT before processing (e.g. 1024x512)");
}

void add_extractor_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--extractor", cfg.extractor, "Feature extractor: mock or inception-onnx")
        ->check(CLI::IsMember({"mock", "inception-onnx"}));
    cmd->add_option("--model-path", cfg.model_path,
                    "ONNX model file (falls back to $SPHEREMETRIC_MODEL)");
    cmd->add_option("--face-size", cfg.face_size, "Cubemap face edge in pixels (0 = height/2)");
    cmd->add_option("--cache", cfg.cache_path, "Feature cache file (created on demand)");
    cmd->add_option("--bias-warn-floor", cfg.bias_warn_floor,
                    "Warn when a set has fewer images than this");
}

void add_ds_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--ds-kernel", cfg.ds_kernel,
                    "Seam kernel: scharr-second-order or scharr-first-order")
        ->check(CLI::IsMember({"scharr-second-order", "scharr-first-order", "scharr2", "scharr1"}));
    cmd->add_option("--ds-c", cfg.ds_c, "Ratio stabilizer c (> 0)");
}

void emit(const MetricReport& rep) {
    // files are written by the pipeline when --out is set; stdout always
    // carries the report so runs compose in shells
    if (rep.config.format == "csv")
        std::cout << rep.to_csv();
    else
        std::cout << rep.to_json();
}

int dispatch(const RunConfig& cfg) {
    try {
        emit(spheremetric::run(cfg));
        return 0;
    } catch (const spheremetric::InvalidInputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const spheremetric::DatasetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataset;
    } catch (const spheremetric::BackendError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBackend;
    } catch (const spheremetric::NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geometry fidelity metrics for spherical images"};
    app.require_subcommand(1);
    app.set_version_flag("--version", spheremetric::kToolVersion);

    RunConfig fid_cfg, omni_cfg, ds_cfg, corrupt_cfg, project_cfg;
    std::string replay_path;

    CLI::App* fid = app.add_subcommand("fid", "FID between two equirectangular datasets");
    fid->add_option("--ref", fid_cfg.ref_dir, "Reference dataset directory")->required();
    fid->add_option("--eval", fid_cfg.eval_dir, "Evaluated dataset directory")->required();
    add_extractor_flags(fid, fid_cfg);
    add_dataset_flags(fid, fid_cfg);

    CLI::App* omni = app.add_subcommand(
        "omnifid", "FID plus cubemap-grouped OmniFID between two datasets");
    omni->add_option("--ref", omni_cfg.ref_dir, "Reference dataset directory")->required();
    omni->add_option("--eval", omni_cfg.eval_dir, "Evaluated dataset directory")->required();
    add_extractor_flags(omni, omni_cfg);
    add_dataset_flags(omni, omni_cfg);

    CLI::App* ds = app.add_subcommand("ds", "Discontinuity score over a dataset");
    ds->add_option("--eval", ds_cfg.eval_dir, "Dataset directory to score")->required();
    add_ds_flags(ds, ds_cfg);
    add_dataset_flags(ds, ds_cfg);
    // seam-cropped datasets are legitimately narrower than 2:1
    ds_cfg.strict_aspect = false;

    CLI::App* corrupt = app.add_subcommand("corrupt", "Write corrupted sweep copies of a dataset");
    corrupt->add_option("--in", corrupt_cfg.in_dir, "Input dataset directory")->required();
    corrupt->add_option("--op", corrupt_cfg.corrupt_op,
                        "fov | salt-pepper | gaussian-noise | gaussian-blur | crop-seam")
        ->required()
        ->check(CLI::IsMember({"fov", "salt-pepper", "gaussian-noise", "gaussian-blur", "crop-seam"}));
    corrupt->add_option("--levels", corrupt_cfg.levels,
                        "Sweep strengths (comma separated; defaults per op)")
        ->delimiter(',');
    corrupt->add_option("--seed", corrupt_cfg.seed, "Global RNG seed for stochastic operators");
    add_dataset_flags(corrupt, corrupt_cfg);
    corrupt->get_option("--out")->required();

    CLI::App* project = app.add_subcommand("project", "Write cubemap faces for every image");
    project->add_option("--in", project_cfg.in_dir, "Input dataset directory")->required();
    project->add_option("--face-size", project_cfg.face_size,
                        "Cubemap face edge in pixels (0 = height/2)");
    add_dataset_flags(project, project_cfg);
    project->get_option("--out")->required();

    CLI::App* replay = app.add_subcommand(
        "replay", "Re-run the config embedded in a report (or a bare config file)");
    replay->add_option("file", replay_path, "report.json or config JSON")->required();

    fid_cfg.command = "fid";
    omni_cfg.command = "omnifid";
    ds_cfg.command = "ds";
    corrupt_cfg.command = "corrupt";
    project_cfg.command = "project";

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadArgs;
    }

    if (fid->parsed())
        return dispatch(fid_cfg);
    if (omni->parsed())
        return dispatch(omni_cfg);
    if (ds->parsed())
        return dispatch(ds_cfg);
    if (corrupt->parsed())
        return dispatch(corrupt_cfg);
    if (project->parsed())
        return dispatch(project_cfg);
    if (replay->parsed()) {
        std::ifstream is(replay_path);
        if (!is) {
            std::cerr << "error: cannot open " << replay_path << "\n";
            return kExitDataset;
        }
        std::stringstream buf;
        buf << is.rdbuf();
        try {
            return dispatch(RunConfig::from_json(buf.str()));
        } catch (const spheremetric::InvalidInputError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitBadArgs;
        }
    }
    return kExitBadArgs;
}
