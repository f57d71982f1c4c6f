// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "spheremetric/report.hpp"

namespace spheremetric {

/// FID between --ref and --eval. Writes report files under config.out_dir
/// when set.
MetricReport run_fid(const RunConfig& config);

/// FID plus the cubemap-grouped scores (FID-bar per view group and their
/// mean) between --ref and --eval.
MetricReport run_omnifid(const RunConfig& config);

/// Discontinuity scores over --eval: per-image rows plus summary with
/// percentile exemplars.
MetricReport run_ds(const RunConfig& config);

/// Applies config.corrupt_op at each level of config.levels to every image
/// of --in, writing one directory per level under --out (PNG plus a
/// manifest.json). Returns the run report (file counts in warnings-free
/// form; no metric values).
MetricReport run_corrupt(const RunConfig& config);

/// Writes the six cube faces of every image of --in under --out with
/// _F/_R/_B/_L/_U/_D suffixes.
MetricReport run_project(const RunConfig& config);

/// Dispatches on config.command.
MetricReport run(const RunConfig& config);

} // namespace spheremetric
