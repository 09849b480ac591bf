#include "covkit/batch.hpp"

#include <algorithm>
#include <exception>

#include "covkit/size.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace covkit {

namespace {

GrowthRow growth_row(const Model& model, const std::pair<Configuration, Configuration>& pair,
                     std::size_t cap, std::size_t index) {
  CoverInstance instance{model, pair.first, pair.second, Encoding::Unary};
  GrowthRow row{*size_report(instance).unary_instance_size, std::nullopt, index};
  row.length = shortest_witness_length(instance, cap);
  return row;
}

void sort_rows(std::vector<GrowthRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const GrowthRow& a, const GrowthRow& b) { return a.size < b.size; });
}

// Runs body(i) for i in [0, n) across threads. The first exception thrown
// by any iteration is rethrown on the calling thread.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < static_cast<long>(n); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(covkit_batch_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<GrowthRow> witness_growth(const Model& model,
                                      const std::vector<std::pair<Configuration, Configuration>>& family,
                                      std::size_t cap) {
  std::vector<GrowthRow> rows(family.size());
  parallel_for(family.size(), [&](std::size_t i) { rows[i] = growth_row(model, family[i], cap, i); });
  sort_rows(rows);
  return rows;
}

std::vector<GrowthRow> witness_growth_serial(
    const Model& model, const std::vector<std::pair<Configuration, Configuration>>& family,
    std::size_t cap) {
  std::vector<GrowthRow> rows;
  rows.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) rows.push_back(growth_row(model, family[i], cap, i));
  sort_rows(rows);
  return rows;
}

std::vector<Verdict> decide_all(const std::vector<CoverInstance>& instances, Engine engine,
                                const SearchLimits& limits) {
  std::vector<Verdict> out(instances.size());
  parallel_for(instances.size(), [&](std::size_t i) { out[i] = decide(instances[i], engine, limits); });
  return out;
}

std::vector<Verdict> decide_all_serial(const std::vector<CoverInstance>& instances, Engine engine,
                                       const SearchLimits& limits) {
  std::vector<Verdict> out;
  out.reserve(instances.size());
  for (const auto& instance : instances) out.push_back(decide(instance, engine, limits));
  return out;
}

int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace covkit
