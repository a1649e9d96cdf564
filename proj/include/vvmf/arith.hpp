#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace vvmf {

using BigInt = mpz_class;

enum class ErrorCode {
  InvalidArgument,
  NotPrime,
  ExponentOutOfRange,
  ExponentsNotDistinct,
  GcdNotOne,
  NonIntegralWeight,
  EigenvalueCollision,
  ParityViolation,
  PrimeDoesNotDivideLevel,
  OrderExceeded,
  ExponentMismatch,
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

// Every rejected input surfaces as one of these; the code names the violated
// invariant so callers (and the CLI) can report it without string matching.
class InputError : public std::invalid_argument {
 public:
  InputError(ErrorCode code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long value) : q_(value) {}  // NOLINT: implicit by design of the algebra
  ExactRational(const BigInt& value) : q_(value) {}  // NOLINT
  ExactRational(const BigInt& num, const BigInt& den);
  explicit ExactRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses the canonical "num/den" (or "num") form.
  static ExactRational parse(std::string_view text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// "num/den", denominator omitted when it is 1.
  std::string str() const { return q_.get_str(); }

  ExactRational& operator+=(const ExactRational& o) { q_ += o.q_; return *this; }
  ExactRational& operator-=(const ExactRational& o) { q_ -= o.q_; return *this; }
  ExactRational& operator*=(const ExactRational& o) { q_ *= o.q_; return *this; }
  ExactRational& operator/=(const ExactRational& o);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
  friend ExactRational operator-(const ExactRational& a) { return ExactRational(mpq_class(-a.q_)); }

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

/// p-adic valuation: a finite integer, or +inf for the valuation of zero.
class ValuationValue {
 public:
  constexpr ValuationValue() = default;  // +inf
  constexpr explicit ValuationValue(long v) : v_(v) {}
  static constexpr ValuationValue infinity() { return ValuationValue(); }

  constexpr bool is_infinite() const { return !v_.has_value(); }
  long value() const;  // throws std::logic_error on +inf

  friend ValuationValue operator+(ValuationValue a, ValuationValue b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ValuationValue(*a.v_ + *b.v_);
  }
  friend ValuationValue operator+(ValuationValue a, long k) {
    return a.is_infinite() ? a : ValuationValue(*a.v_ + k);
  }
  friend bool operator==(const ValuationValue&, const ValuationValue&) = default;
  friend std::strong_ordering operator<=>(const ValuationValue& a, const ValuationValue& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() <=> b.is_infinite();
    }
    return *a.v_ <=> *b.v_;
  }

  std::string str() const { return is_infinite() ? "inf" : std::to_string(*v_); }

 private:
  std::optional<long> v_;
};

bool is_prime(std::int64_t p);

/// Exponent of p in a nonzero integer; no primality check.
long count_factor(const BigInt& n, unsigned long p);

ValuationValue valuation_p(const BigInt& x, std::int64_t p);
ValuationValue valuation_p(const ExactRational& x, std::int64_t p);

/// Bernoulli number B_k for even k >= 2 (memoized, thread-safe).
ExactRational bernoulli(int k);

/// Sum of k-th powers of the positive divisors of n.
BigInt sigma_k(int k, std::int64_t n);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
std::int64_t to_int64(const BigInt& x);

}  // namespace vvmf
