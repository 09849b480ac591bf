#include "covkit/vector.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace covkit {

IntVector::IntVector(std::size_t dim) : values_(dim, Int(0)) {}

IntVector::IntVector(std::initializer_list<long> values) {
  values_.reserve(values.size());
  for (long v : values) values_.emplace_back(v);
}

static void require_same_dim(const IntVector& a, const IntVector& b) {
  if (a.dim() != b.dim())
    throw ShapeMismatch("dimension mismatch: " + std::to_string(a.dim()) +
                        " vs " + std::to_string(b.dim()));
}

IntVector IntVector::operator+(const IntVector& rhs) const {
  IntVector out(*this);
  out += rhs;
  return out;
}

IntVector& IntVector::operator+=(const IntVector& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += rhs.values_[i];
  return *this;
}

IntVector IntVector::operator-(const IntVector& rhs) const {
  require_same_dim(*this, rhs);
  IntVector out(*this);
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] -= rhs.values_[i];
  return out;
}

bool operator<(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.values_.begin(), a.values_.end(),
                                      b.values_.begin(), b.values_.end());
}

bool IntVector::is_nonnegative() const {
  for (const auto& v : values_)
    if (sgn(v) < 0) return false;
  return true;
}

bool IntVector::is_zero() const {
  for (const auto& v : values_)
    if (sgn(v) != 0) return false;
  return true;
}

Int IntVector::norm1() const {
  Int sum = 0;
  for (const auto& v : values_) sum += abs(v);
  return sum;
}

Int IntVector::norm_inf() const {
  Int best = 0;
  for (const auto& v : values_) {
    Int a = abs(v);
    if (a > best) best = a;
  }
  return best;
}

std::string IntVector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += values_[i].get_str();
  }
  out += ')';
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntVector& v) { return os << v.str(); }

bool leq(const IntVector& a, const IntVector& b) {
  require_same_dim(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

IntVector max(const IntVector& a, const IntVector& b) {
  require_same_dim(a, b);
  IntVector out(a);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (b[i] > out[i]) out[i] = b[i];
  return out;
}

std::size_t hash_value(const Int& x) {
  const mpz_srcptr z = x.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) + 0x9e3779b97f4a7c15ULL;
  const std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i)
    h ^= std::hash<mp_limb_t>{}(mpz_getlimbn(z, static_cast<mp_size_t>(i))) +
         0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::size_t IntVectorHash::operator()(const IntVector& v) const {
  std::size_t h = v.dim();
  for (const auto& x : v) h ^= hash_value(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::optional<Int> parse_int(const std::string& token) {
  if (token.empty()) return std::nullopt;
  std::size_t start = (token[0] == '-' || token[0] == '+') ? 1 : 0;
  if (start == token.size()) return std::nullopt;
  for (std::size_t i = start; i < token.size(); ++i)
    if (token[i] < '0' || token[i] > '9') return std::nullopt;
  Int out;
  if (out.set_str(token[0] == '+' ? token.substr(1) : token, 10) != 0) return std::nullopt;
  return out;
}

std::size_t ceil_log2(const Int& x) {
  if (x <= 1) return 0;
  Int y = x - 1;
  return mpz_sizeinbase(y.get_mpz_t(), 2);
}

double log2_of(const Int& x) {
  if (x <= 0) throw std::domain_error("log2 of non-positive value");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());  // x = mant * 2^exp, mant in [0.5,1)
  return std::log2(mant) + static_cast<double>(exp);
}

}  // namespace covkit
