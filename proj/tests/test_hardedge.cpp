#include <doctest.h>

#include "painleve/bessel.hpp"
#include "painleve/hardedge.hpp"

using namespace painleve;

TEST_SUITE("hardedge") {

TEST_CASE("leading coefficients") {
  const EtaSeries eta = eta_coefficients(1, 4);
  CHECK(eta.c[0] == -1);
  CHECK(eta.c[1] == make_rational(1, 192));
  for (int k = 1; k <= 10; ++k) {
    const EtaSeries e = eta_coefficients(k, 2);
    CHECK(e.c[0] == -k * k);
    CHECK(e.c[1] == make_rational(1, 64L * (4L * k * k - 1)));
  }
  CHECK_THROWS_AS(eta_coefficients(0, 3), std::invalid_argument);
}

TEST_CASE("eta is even") {
  const RationalSeries eta = eta_coefficients(3, 6).as_series();
  for (int n = 1; n <= eta.order(); n += 2) CHECK(eta[n] == 0);
}

TEST_CASE("sigma series boundary behaviour") {
  const RationalSeries s1 = sigma_series(1, 3);
  CHECK(s1[0] == -1);
  CHECK(s1[1] == make_rational(1, 8));
  CHECK(s1[2] == make_rational(1, 192));
  CHECK(sigma_series(2, 3)[0] == -4);
}

TEST_CASE("recurrence and Bessel oracle agree through x^{2k}") {
  // E(4x) = exp(-[x/2 + c1 4^2 x^2/2 + c2 4^4 x^4/4 + ...]): c2 is fixed by [x^4].
  for (int k = 1; k <= 4; ++k) {
    const RationalSeries recurrence = ehard_series(k, 2 * k + 2).series;
    const RationalSeries oracle = ehard_bessel(k, k, 2 * k + 2);
    CHECK(recurrence.truncated(2 * k) == oracle.truncated(2 * k));
    // The even ansatz drops the s^{2k+1} term carried by the true average.
    CHECK(recurrence[2 * k + 1] != oracle[2 * k + 1]);
  }
}

TEST_CASE("tau series") {
  const RationalSeries e = ehard_series(1, 2).series;
  CHECK(e[0] == 1);
  CHECK(e[1] == make_rational(-1, 2));
  CHECK(e[2] == make_rational(1, 12));
  for (int k = 1; k <= 5; ++k) CHECK(ehard_series(k, 3).series[0] == 1);
}

TEST_CASE("b_k at small k") {
  CHECK(bk_constant(1) == make_rational(1, 3));
  CHECK(bkprime_constant(1) == make_rational(1, 12));
  CHECK(bk_constant(2) == make_rational(61, 10080));
  CHECK(bkprime_constant(2) == make_rational(1, 6720));
  CHECK(bk_constant(3) == make_rational(277, 139708800));
  CHECK_THROWS_AS(bk_from_tau(3, ehard_series(3, 4).series), std::domain_error);
}

TEST_CASE("normalization constant") {
  CHECK(hardedge_normalization(1, 1) == 1);
  CHECK(hardedge_normalization(2, 2) == 12);  // 2! (2!/1!) (3!/2!)
  CHECK(hardedge_normalization(1, 0) == 1);
}

}
