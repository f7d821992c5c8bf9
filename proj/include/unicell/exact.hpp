#pragma once

#include <gmpxx.h>

#include <string>

namespace unicell {

using ExactInteger = mpz_class;
using ExactRational = mpq_class;

ExactInteger factorial(long n);

// (2k-1)!! style product n*(n-2)*...; equals 1 for n <= 0.
ExactInteger double_factorial(long n);

// Zero unless 0 <= k <= n.
ExactInteger binomial(long n, long k);

// x(x-1)...(x-k+1)/k!, with C(x,0) = 1 and C(x,k) = 0 for k < 0.
ExactRational generalized_binomial(const ExactRational& x, long k);

ExactInteger multinomial(long n, std::initializer_list<long> parts);

ExactInteger power(const ExactInteger& base, unsigned long e);

std::string to_decimal(const ExactInteger& v);
std::string to_decimal(const ExactRational& v);

bool is_integer(const ExactRational& v);

}  // namespace unicell
