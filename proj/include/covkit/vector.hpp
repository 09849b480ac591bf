#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace covkit {

/// Arbitrary-precision signed integer used for every counter and update.
using Int = mpz_class;

/// Thrown when two vectors or configurations of different shape meet.
class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// d-component integer vector. Arithmetic is exact; there is no overflow.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::size_t dim);
  IntVector(std::initializer_list<long> values);
  explicit IntVector(std::vector<Int> values) : values_(std::move(values)) {}

  std::size_t dim() const { return values_.size(); }
  const Int& operator[](std::size_t i) const { return values_[i]; }
  Int& operator[](std::size_t i) { return values_[i]; }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }
  const std::vector<Int>& values() const { return values_; }

  IntVector operator+(const IntVector& rhs) const;
  IntVector operator-(const IntVector& rhs) const;
  IntVector& operator+=(const IntVector& rhs);

  friend bool operator==(const IntVector& a, const IntVector& b) {
    return a.values_ == b.values_;
  }
  // Lexicographic; used only for canonical ordering, not for coverage.
  friend bool operator<(const IntVector& a, const IntVector& b);

  bool is_nonnegative() const;
  bool is_zero() const;
  Int norm1() const;
  Int norm_inf() const;

  /// "(a,b,c)"
  std::string str() const;

 private:
  std::vector<Int> values_;
};

std::ostream& operator<<(std::ostream& os, const IntVector& v);

/// a ⊑ b componentwise. Throws ShapeMismatch on differing dimensions.
bool leq(const IntVector& a, const IntVector& b);

/// Componentwise max.
IntVector max(const IntVector& a, const IntVector& b);

std::size_t hash_value(const Int& x);

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const;
};

/// Parse a decimal integer token (ASCII minus allowed). Returns nullopt on
/// malformed input.
std::optional<Int> parse_int(const std::string& token);

/// Exact ceil(log2(x)) for x >= 1.
std::size_t ceil_log2(const Int& x);

/// log2(x) as a double for x >= 1; exact when x is a power of two.
double log2_of(const Int& x);

}  // namespace covkit
