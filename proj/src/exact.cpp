#include "unicell/exact.hpp"

#include <stdexcept>

namespace unicell {

ExactInteger factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  ExactInteger r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

ExactInteger double_factorial(long n) {
  if (n <= 0) return 1;
  ExactInteger r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

ExactInteger binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  ExactInteger r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

ExactRational generalized_binomial(const ExactRational& x, long k) {
  if (k < 0) return 0;
  ExactRational r = 1;
  for (long i = 0; i < k; ++i) {
    r *= x - i;
    r /= i + 1;
  }
  r.canonicalize();
  return r;
}

ExactInteger multinomial(long n, std::initializer_list<long> parts) {
  long sum = 0;
  for (long p : parts) {
    if (p < 0) return 0;
    sum += p;
  }
  if (sum != n) return 0;
  ExactInteger r = factorial(n);
  for (long p : parts) r /= factorial(p);
  return r;
}

ExactInteger power(const ExactInteger& base, unsigned long e) {
  ExactInteger r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::string to_decimal(const ExactInteger& v) { return v.get_str(10); }

std::string to_decimal(const ExactRational& v) { return v.get_str(10); }

bool is_integer(const ExactRational& v) { return v.get_den() == 1; }

}  // namespace unicell
