#include "vvmf/arith.hpp"

#include <mutex>
#include <vector>

namespace vvmf {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::NotPrime: return "not-prime";
    case ErrorCode::ExponentOutOfRange: return "exponent-out-of-range";
    case ErrorCode::ExponentsNotDistinct: return "exponents-not-distinct";
    case ErrorCode::GcdNotOne: return "gcd-not-one";
    case ErrorCode::NonIntegralWeight: return "non-integral-weight";
    case ErrorCode::EigenvalueCollision: return "eigenvalue-collision";
    case ErrorCode::ParityViolation: return "parity-violation";
    case ErrorCode::PrimeDoesNotDivideLevel: return "prime-does-not-divide-level";
    case ErrorCode::OrderExceeded: return "order-exceeded";
    case ErrorCode::ExponentMismatch: return "exponent-mismatch";
    case ErrorCode::ParseError: return "parse-error";
  }
  return "unknown";
}

ExactRational::ExactRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InputError(ErrorCode::InvalidArgument, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
  mpq_class q;
  const std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw InputError(ErrorCode::ParseError, "not a rational: '" + s + "'");
  }
  q.canonicalize();
  return ExactRational(q);
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  q_ /= o.q_;
  return *this;
}

long ValuationValue::value() const {
  if (!v_) throw std::logic_error("valuation is +inf");
  return *v_;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0 || p % 3 == 0) return false;
  if (p < (std::int64_t{1} << 40)) {
    for (std::int64_t d = 5; d * d <= p; d += 6) {
      if (p % d == 0 || p % (d + 2) == 0) return false;
    }
    return true;
  }
  BigInt n(std::to_string(p));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

long count_factor(const BigInt& n, unsigned long p) {
  if (n == 0) return 0;
  BigInt rest;
  BigInt fp(std::to_string(p));
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), fp.get_mpz_t()));
}

namespace {

void require_prime(std::int64_t p) {
  if (!is_prime(p)) {
    throw InputError(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  }
}

}  // namespace

ValuationValue valuation_p(const BigInt& x, std::int64_t p) {
  require_prime(p);
  if (x == 0) return ValuationValue::infinity();
  return ValuationValue(count_factor(x, static_cast<unsigned long>(p)));
}

ValuationValue valuation_p(const ExactRational& x, std::int64_t p) {
  require_prime(p);
  if (x.is_zero()) return ValuationValue::infinity();
  const auto up = static_cast<unsigned long>(p);
  return ValuationValue(count_factor(x.num(), up) - count_factor(x.den(), up));
}

ExactRational bernoulli(int k) {
  if (k < 2 || k % 2 != 0) {
    throw InputError(ErrorCode::InvalidArgument,
                     "Bernoulli index must be even and >= 2, got " + std::to_string(k));
  }
  static std::mutex mu;
  static std::vector<mpq_class> table{mpq_class(1)};  // B_0
  std::lock_guard lock(mu);
  // sum_{j=0}^{m} C(m+1, j) B_j = 0, solved for B_m.
  for (int m = static_cast<int>(table.size()); m <= k; ++m) {
    mpq_class acc = 0;
    BigInt binom = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      acc += mpq_class(binom) * table[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    mpq_class bm = -acc / mpq_class(m + 1);
    bm.canonicalize();
    table.push_back(bm);
  }
  return ExactRational(table[k]);
}

BigInt sigma_k(int k, std::int64_t n) {
  if (n <= 0) {
    throw InputError(ErrorCode::InvalidArgument,
                     "sigma_k needs n >= 1, got " + std::to_string(n));
  }
  if (k < 0) throw InputError(ErrorCode::InvalidArgument, "sigma_k needs k >= 0");
  BigInt total = 0;
  auto power = [k](std::int64_t d) {
    BigInt r;
    BigInt base(std::to_string(d));
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
  };
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    total += power(d);
    if (d != n / d) total += power(n / d);
  }
  return total;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::int64_t to_int64(const BigInt& x) {
  if (!mpz_fits_slong_p(x.get_mpz_t())) {
    throw std::overflow_error("integer does not fit in 64 bits: " + x.get_str());
  }
  return mpz_get_si(x.get_mpz_t());
}

}  // namespace vvmf
