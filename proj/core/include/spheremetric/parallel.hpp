// Copyright (c) the spheremetric project authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <exception>
#include <functional>

namespace spheremetric {

/// Runs fn(i) for i in [0, n) across up to `jobs` threads (jobs <= 0 picks
/// the hardware concurrency). Each index is processed exactly once; callers
/// get deterministic results by writing to per-index slots. The first
/// exception thrown by any worker is rethrown after all workers join.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

} // namespace spheremetric
