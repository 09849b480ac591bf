#pragma once

// Data-parallel drivers over families of instances. Each instance is solved
// by a single-threaded engine call; the parallel kernels distribute
// instances over OpenMP threads and must agree exactly with the serial
// reference versions kept alongside them.

#include <optional>
#include <vector>

#include "covkit/engines.hpp"

namespace covkit {

struct GrowthRow {
  /// Unary instance size n.
  Int size;
  /// Shortest witness length, absent when the cap was exceeded.
  std::optional<std::size_t> length;
  /// Position of the (source, target) pair in the input family.
  std::size_t index;
};

/// Shortest witness length for every (source, target) pair on a fixed
/// model, sorted by n (ties keep input order).
std::vector<GrowthRow> witness_growth(const Model& model,
                                      const std::vector<std::pair<Configuration, Configuration>>& family,
                                      std::size_t cap);
std::vector<GrowthRow> witness_growth_serial(
    const Model& model, const std::vector<std::pair<Configuration, Configuration>>& family,
    std::size_t cap);

std::vector<Verdict> decide_all(const std::vector<CoverInstance>& instances, Engine engine,
                                const SearchLimits& limits = {});
std::vector<Verdict> decide_all_serial(const std::vector<CoverInstance>& instances, Engine engine,
                                       const SearchLimits& limits = {});

/// Number of threads the parallel kernels use (1 without OpenMP).
int worker_count();

}  // namespace covkit
