#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bihom {

/// Exact element of the rational field.
///
/// Values that fit in a pair of 64-bit integers are stored inline; anything
/// larger is promoted to a GMP rational. The representation is canonical:
/// the denominator is positive, the fraction is reduced, and a value that
/// fits inline is never stored in the big form. Equality can therefore
/// compare representations directly.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) noexcept : num_(value) {}           // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);
  explicit Rational(const mpq_class& value);

  /// Parses "p", "-p" or "p/q" with q > 0. Throws ParseError otherwise.
  static Rational parse(std::string_view text);

  [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_integer() const noexcept;
  [[nodiscard]] int sign() const noexcept;
  [[nodiscard]] bool is_small() const noexcept { return !big_; }

  /// Inline numerator/denominator; only meaningful when is_small().
  [[nodiscard]] std::int64_t small_numerator() const noexcept { return num_; }
  [[nodiscard]] std::int64_t small_denominator() const noexcept { return den_; }

  [[nodiscard]] mpq_class to_mpq() const;
  [[nodiscard]] std::string str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& value);

  friend bool operator==(const Rational& lhs, const Rational& rhs) noexcept;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  static Rational from_i128(__int128 numerator, __int128 denominator);
  static Rational from_big(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace bihom
