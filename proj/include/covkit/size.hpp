#pragma once

#include <cstddef>
#include <optional>

#include "covkit/model.hpp"

namespace covkit {

/// A size in binary encoding: the real value of the logarithmic formula and
/// its exact integer ceiling.
struct BinarySize {
  double value = 0;
  Int ceiling = 0;
};

struct SizeReport {
  std::size_t dimension = 0;
  /// Vectors of a VAS, transitions of a VASS or Petri net.
  std::size_t vector_count = 0;
  Int unary_model_size = 0;
  BinarySize binary_model_size;
  /// Present only when an instance was given.
  std::optional<Int> unary_instance_size;
  std::optional<BinarySize> binary_instance_size;
};

/// ‖v‖₁
Int unary_size(const IntVector& v);
/// d·log₂(‖v‖∞+1)
BinarySize binary_size(const IntVector& v);

SizeReport size_report(const Model& model);
SizeReport size_report(const CoverInstance& instance);

}  // namespace covkit
