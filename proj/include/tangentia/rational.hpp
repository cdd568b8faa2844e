#pragma once

// Exact rational arithmetic on top of GMP.
//
// A Rat is always stored in lowest terms with a positive denominator, so
// equality is plain structural equality of (num, den).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace tangentia {

using BigInt = mpz_class;

class Rat {
public:
  Rat() = default;
  Rat(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Rat(const BigInt& n) : value_(n) {}
  Rat(const BigInt& num, const BigInt& den);
  Rat(long num, long den) : Rat(BigInt(num), BigInt(den)) {}

  /// Parses "num/den" or "num"; throws std::invalid_argument on malformed
  /// text and std::domain_error on a zero denominator.
  static Rat parse(std::string_view text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Largest integer not exceeding the value.
  BigInt floor() const;
  /// Value reduced into [0, 1).
  Rat frac() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  /// Throws std::domain_error when rhs is zero.
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "num/den", with "/den" omitted when den == 1.
  std::string str() const;

  const mpq_class& raw() const { return value_; }

private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

enum class ArithOp { Add, Sub, Mul, Div };

/// Applies op to (a, b); the only failure is division by zero, reported as
/// an empty optional.
std::optional<Rat> rat_arith(const Rat& a, const Rat& b, ArithOp op);

/// Generalized binomial coefficient n(n-1)...(n-k+1)/k!, zero for k < 0.
BigInt binomial(long n, long k);

/// Converts an integer-valued BigInt to long; throws std::overflow_error if it
/// does not fit.
long to_long(const BigInt& v);

std::string to_string(const BigInt& v);

}  // namespace tangentia
