#include "painleve/rational.hpp"

#include <stdexcept>
#include <string>

namespace painleve {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
  if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
  q.canonicalize();
  return q;
}

bool is_canonical(const Rational& q) {
  if (sgn(q.get_den()) <= 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return g == 1;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

namespace {

// Brent's variant of Pollard rho; returns a nontrivial factor or 0.
Integer pollard_brent(const Integer& n, unsigned long seed, unsigned long budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  Integer y = seed, c = seed + 1, m = 128, g = 1, r = 1, q = 1, x, ys;
  auto f = [&](const Integer& v) {
    Integer t = v * v + c;
    return Integer(t % n);
  };
  unsigned long steps = 0;
  while (g == 1) {
    x = y;
    for (Integer i = 0; i < r; ++i) y = f(y);
    Integer k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (Integer i = 0; i < m && i < r - k; ++i) {
        y = f(y);
        Integer d = x - y;
        q = (q * abs(d)) % n;
        ++steps;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
      if (steps > budget) return 0;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      Integer d = x - ys;
      d = abs(d);
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g == n ? Integer(0) : g;
}

void split(const Integer& n, Factorization& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    out.factors[n] += 1;
    return;
  }
  for (unsigned long seed = 2; seed < 12; ++seed) {
    Integer d = pollard_brent(n, seed, 2'000'000);
    if (d != 0 && d != 1 && d != n) {
      split(d, out);
      split(Integer(n / d), out);
      return;
    }
  }
  out.unfactored *= n;
  out.probable_prime_cofactor = false;
}

}  // namespace

Factorization factorize(const Integer& n_in) {
  if (n_in == 0) throw std::domain_error("factorize(0)");
  Factorization out;
  Integer n = abs(n_in);
  for (unsigned long p = 2; p < 10000; p += (p == 2 ? 1 : 2)) {
    if (n == 1) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e) out.factors[Integer(p)] += e;
  }
  split(n, out);
  return out;
}

Integer from_factorization(const std::map<Integer, unsigned>& factors) {
  Integer r = 1;
  for (const auto& [p, e] : factors) {
    Integer t;
    mpz_pow_ui(t.get_mpz_t(), p.get_mpz_t(), e);
    r *= t;
  }
  return r;
}

std::string factorization_string(const Factorization& f) {
  std::string s;
  for (const auto& [p, e] : f.factors) {
    if (!s.empty()) s += "*";
    s += p.get_str();
    if (e > 1) s += "^" + std::to_string(e);
  }
  if (f.unfactored != 1) {
    if (!s.empty()) s += "*";
    s += "(" + f.unfactored.get_str() + ")";
  }
  return s.empty() ? "1" : s;
}

}  // namespace painleve
