#pragma once

#include <cstdint>
#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace foliate {

using BigInt = mpz_class;

std::string to_string(const BigInt& value);

/// Exact rational number, always held in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT
  /// Throws DomainError when `den` is zero.
  Rational(const BigInt& num, const BigInt& den);

  static Rational from_mpq(mpq_class value);

  /// Accepts "n", "-n", "n/d" with optional surrounding whitespace.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  BigInt floor() const;
  BigInt ceil() const;
  Rational reciprocal() const;
  Rational abs() const { return from_mpq(::abs(value_)); }

  /// "n" for integers, "n/d" otherwise.
  std::string str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const { return from_mpq(-value_); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Regular continued fraction [u0; u1, ..., un] with every term >= 1 and,
/// when n >= 1, un >= 2. The canonical form makes the expansion unique.
struct ContinuedFraction {
  std::vector<std::int64_t> terms;

  Rational evaluate() const;
  std::int64_t term_sum() const;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

/// Euclid's algorithm on p/q. Requires p, q >= 1 and gcd(p, q) = 1.
ContinuedFraction regular_continued_fraction(std::int64_t p, std::int64_t q);

/// Determinant of the tridiagonal matrix with `entries` on the diagonal and
/// -1 on both off-diagonals. Every entry must be >= 2.
BigInt continuant_det(std::span<const std::int64_t> entries);

/// Unrestricted continuant recurrence (empty sequence gives 1). Used where
/// the chain is a tail of a validated string.
BigInt continuant(std::span<const std::int64_t> entries);

BigInt binomial(const BigInt& n, unsigned long k);
BigInt factorial(unsigned long n);
BigInt lcm_list(std::span<const BigInt> values);
BigInt lcm_list(std::span<const std::int64_t> values);

std::int64_t gcd(std::int64_t a, std::int64_t b);

}  // namespace foliate
