#pragma once

// Exact max-plus arithmetic over Q ∪ {-oo}.
//
//   x ⊕ y = max(x, y)      zero = -oo
//   x ⊗ y = x + y          one  = 0

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tropdd {

using Rational = boost::multiprecision::mpq_rational;

/// Element of the max-plus semiring. Default-constructed value is -oo.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Rational value) : value_(std::move(value)) {}
  Scalar(long value) : value_(Rational(value)) {}
  Scalar(int value) : value_(Rational(value)) {}

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(0); }

  bool is_zero() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  /// Finite value. Throws std::domain_error on -oo.
  const Rational& value() const;

  friend bool operator==(const Scalar& x, const Scalar& y) { return x.value_ == y.value_; }
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

 private:
  std::optional<Rational> value_;
};

Scalar tadd(const Scalar& x, const Scalar& y);
Scalar tmul(const Scalar& x, const Scalar& y);
/// Multiplicative inverse (-x). Throws std::domain_error on -oo.
Scalar tinv(const Scalar& x);

/// Accepts "-oo", integers, decimals ("2.5", "-0.125") and "p/q" with q > 0.
/// Decimals are read exactly. Throws std::invalid_argument.
Scalar parse_scalar(std::string_view text);
/// Inverse of parse_scalar: "-oo", "3", "-5/2".
std::string to_string(const Scalar& x);

using IndexSet = std::vector<std::size_t>;  // sorted, 0-based

/// Dense vector over the semiring. Also used for inequality rows.
class TVector {
 public:
  TVector() = default;
  explicit TVector(std::size_t dim) : entries_(dim) {}
  explicit TVector(std::vector<Scalar> entries) : entries_(std::move(entries)) {}
  TVector(std::initializer_list<Scalar> entries) : entries_(entries) {}

  /// Vector with a single `one` entry at `i`.
  static TVector unit(std::size_t dim, std::size_t i);

  std::size_t dim() const { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Scalar>& entries() const { return entries_; }

  bool is_zero() const;

  friend bool operator==(const TVector&, const TVector&) = default;
  /// Lexicographic, -oo lowest.
  friend std::strong_ordering operator<=>(const TVector& u, const TVector& v);

 private:
  std::vector<Scalar> entries_;
};

std::string to_string(const TVector& x);

struct DotResult {
  Scalar value;
  IndexSet argmax;  // empty iff value is -oo
};

/// max_i row_i + x_i.
Scalar dot(const TVector& row, const TVector& x);
DotResult dot_argmax(const TVector& row, const TVector& x);

/// alpha ⊗ u ⊕ beta ⊗ v.
TVector combine(const Scalar& alpha, const TVector& u, const Scalar& beta, const TVector& v);
/// lambda ⊗ x.
TVector scale(const Scalar& lambda, const TVector& x);

IndexSet support(const TVector& x);

/// Shifts x so that its first finite entry is 0. Throws on the zero vector.
TVector normalize(const TVector& x);

/// True iff v = lambda ⊗ u for a finite lambda. Throws on zero vectors.
bool is_proportional(const TVector& u, const TVector& v);

/// Pair of n×d matrices (A, B) describing the cone { x | A x <= B x }.
class IneqSystem {
 public:
  explicit IneqSystem(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rows() const { return a_.size(); }

  void add_row(TVector a, TVector b);
  const TVector& a(std::size_t k) const { return a_[k]; }
  const TVector& b(std::size_t k) const { return b_[k]; }

  /// Subsystem formed by the listed rows, in the listed order.
  IneqSystem select(const std::vector<std::size_t>& rows) const;

  bool row_holds(std::size_t k, const TVector& x) const;
  bool contains(const TVector& x) const;

  friend bool operator==(const IneqSystem&, const IneqSystem&) = default;

 private:
  std::size_t dim_;
  std::vector<TVector> a_;
  std::vector<TVector> b_;
};

}  // namespace tropdd
