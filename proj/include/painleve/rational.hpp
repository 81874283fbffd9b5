#ifndef PAINLEVE_RATIONAL_HPP
#define PAINLEVE_RATIONAL_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace painleve {

/// Exact rational scalar. GMP keeps every arithmetic result canonical
/// (positive denominator, gcd 1); construct through make_rational() so
/// literal p/q inputs are canonicalized too.
using Rational = mpq_class;
using Integer = mpz_class;
using Complex = std::complex<double>;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// "p/q", with "/q" omitted when q == 1.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

bool is_canonical(const Rational& q);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

/// Prime factorization of |n| (n != 0). Small primes by trial division, the
/// remaining cofactor by Pollard-Brent rho; a cofactor that resists rho within
/// the iteration budget is reported with `probable_prime == false`.
struct Factorization {
  std::map<Integer, unsigned> factors;
  Integer unfactored = 1;  // 1 when the factorization is complete
  bool probable_prime_cofactor = true;
};
Factorization factorize(const Integer& n);

/// Builds an integer from a printed factorization: prod p^e.
Integer from_factorization(const std::map<Integer, unsigned>& factors);

/// "2^272*3^130*...".
std::string factorization_string(const Factorization& f);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace painleve

#endif  // PAINLEVE_RATIONAL_HPP
