#include <doctest.h>

#include <random>

#include "lacunary/complex.hpp"
#include "lacunary/congruences.hpp"
#include "lacunary/matrix.hpp"
#include "lacunary/quotient_poly.hpp"
#include "lacunary/residue.hpp"
#include "lacunary/root_of_unity.hpp"
#include "oracle.hpp"

using namespace lacunary;

namespace {

QuotientPoly<BigInt> poly(std::initializer_list<long long> coeffs, int sigma) {
  RingVector<BigInt> v(static_cast<Eigen::Index>(coeffs.size()));
  Eigen::Index i = 0;
  for (long long c : coeffs) v(i++) = c;
  return {v, sigma};
}

}  // namespace

TEST_CASE("quotient_mul folds by x^N = sigma") {
  CHECK(quotient_mul(poly({1, 1}, 1), poly({1, 1}, 1)) == poly({2, 2}, 1));
  CHECK(quotient_mul(poly({1, 1}, -1), poly({1, 1}, -1)) == poly({0, 2}, -1));
  const auto sq = quotient_mul(poly({1, 1}, -1), poly({1, 1}, -1));
  CHECK(quotient_mul(sq, poly({1, 1}, -1)) == poly({-2, 2}, -1));
}

TEST_CASE("quotient_mul is commutative and rejects mismatched operands") {
  const auto a = poly({3, -1, 4}, -1);
  const auto b = poly({1, 5, -9}, -1);
  CHECK(quotient_mul(a, b) == quotient_mul(b, a));
  CHECK_THROWS_AS(quotient_mul(poly({1, 1}, 1), poly({1, 1, 0}, 1)), DimensionMismatch);
  CHECK_THROWS_AS(quotient_mul(poly({1, 1}, 1), poly({1, 1}, -1)), DimensionMismatch);

  const auto r7 = QuotientPoly<Residue>::one_plus_x(3, 1, Residue::from_unsigned(1, 7));
  const auto r11 = QuotientPoly<Residue>::one_plus_x(3, 1, Residue::from_unsigned(1, 11));
  CHECK_THROWS_AS(quotient_mul(r7, r11), DimensionMismatch);
}

TEST_CASE("quotient_pow") {
  for (int n = 2; n <= 5; ++n)
    for (int sigma : {1, -1}) {
      const auto id = quotient_pow(QuotientPoly<BigInt>::one_plus_x(n, sigma), 0);
      CHECK(id[0] == 1);
      for (int k = 1; k < n; ++k) CHECK(id[k] == 0);
    }
  CHECK(quotient_pow(QuotientPoly<BigInt>::one_plus_x(3, 1), 5) == poly({11, 10, 11}, 1));
  CHECK(quotient_pow(QuotientPoly<BigInt>::one_plus_x(2, -1), 3) == poly({-2, 2}, -1));
}

TEST_CASE("quotient_pow properties: coefficient sum 2^m and unfolded binomials") {
  for (int n = 2; n <= 12; ++n) {
    auto p = QuotientPoly<BigInt>::constant(n, 1, BigInt(1));
    const auto gen = QuotientPoly<BigInt>::one_plus_x(n, 1);
    for (std::uint64_t m = 0; m <= 100; ++m) {
      if (m > 0) p = quotient_mul(p, gen);
      CHECK(p.coeffs().sum() == (BigInt(1) << m));
      if (m < static_cast<std::uint64_t>(n)) {
        const auto row = oracle::pascal_row(m);
        for (int k = 0; k < n; ++k) CHECK(p[k] == (k <= static_cast<int>(m) ? row[k] : BigInt(0)));
      }
    }
    CHECK(quotient_pow(gen, 100) == p);
  }
}

TEST_CASE("matrix_mul and matrix_pow") {
  RingMatrix<BigInt> c2(2, 2);
  c2 << 1, 1, 1, 1;
  RingMatrix<BigInt> expected(2, 2);
  expected << 4, 4, 4, 4;
  CHECK(matrices_equal(matrix_pow(c2, 3), expected));

  RingMatrix<BigInt> skew(2, 2);
  skew << 1, 1, -1, 1;
  expected << -2, 2, -2, -2;
  CHECK(matrices_equal(matrix_pow(skew, 3), expected));

  CHECK(matrices_equal(matrix_pow(skew, 0), RingMatrix<BigInt>::Identity(2, 2)));
  const RingMatrix<BigInt> id3 = RingMatrix<BigInt>::Identity(3, 3);
  CHECK_THROWS_AS(matrix_mul(c2, id3), DimensionMismatch);
}

TEST_CASE("matrix_pow of a residue matrix keeps its modulus") {
  RingMatrix<Residue> a(2, 2);
  const auto one = Residue::from_unsigned(1, 97);
  a << one, one, one, ring_zero(one);
  const auto p0 = matrix_pow(a, 0);
  CHECK(p0(0, 0).modulus() == 97);
  CHECK(p0(0, 1).modulus() == 97);
  // Fibonacci: F(50) mod 97.
  CHECK(matrix_pow(a, 50)(0, 1).value() == 12586269025ULL % 97);
}

TEST_CASE("powers of C_N are circulant and mirror the quotient ring") {
  for (int n = 2; n <= 8; ++n)
    for (bool skew : {false, true}) {
      RingMatrix<BigInt> c(n, n);
      const auto ref = oracle::circulant(n, skew);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c(i, j) = ref[i][j];
      RingMatrix<BigInt> p = identity_like(c);
      auto q = QuotientPoly<BigInt>::constant(n, skew ? -1 : 1, BigInt(1));
      const auto gen = QuotientPoly<BigInt>::one_plus_x(n, skew ? -1 : 1);
      for (std::uint64_t m = 0; m <= 50; ++m) {
        if (m > 0) {
          p = matrix_mul(p, c);
          q = quotient_mul(q, gen);
        }
        if (!skew) CHECK(is_circulant(p));
        for (int k = 0; k < n; ++k) CHECK(p(0, k) == q[k]);
      }
    }
}

TEST_CASE("residue arithmetic") {
  CHECK(Residue(-3, 7).value() == 4);
  CHECK(residue_inverse(Residue(6, 7)).value() == 6);
  CHECK(residue_inverse(Residue(2, 25)).value() == 13);
  CHECK(residue_inverse(Residue(1, 2)).value() == 1);
  CHECK(residue_inverse(Residue(1, 1000)).value() == 1);
  CHECK_THROWS_AS(residue_inverse(Residue(5, 25)), NotInvertible);
  CHECK_THROWS_AS(residue_inverse(Residue(0, 7)), NotInvertible);
  CHECK_THROWS_AS(Residue(1, 1), InvalidArgument);
  CHECK_THROWS_AS(Residue(1, 7) + Residue(1, 11), DimensionMismatch);

  // Unbound literals adopt the modulus of their partner.
  const Residue a(5, 7);
  CHECK((a + Residue(4)).value() == 2);
  CHECK((Residue(0) - a).value() == 2);
  CHECK(Residue(12) == Residue(5, 7));
}

TEST_CASE("residue_inverse is a two-sided inverse on every unit mod p < 100") {
  for (std::uint64_t p : primes_between(2, 99))
    for (std::uint64_t a = 1; a < p; ++a) {
      const auto x = Residue::from_unsigned(a, p);
      CHECK((x * residue_inverse(x)).value() == 1);
      CHECK(residue_inverse(residue_inverse(x)) == x);
    }
}

TEST_CASE("residue multiplication near the 2^63 modulus limit") {
  const std::uint64_t m = (1ULL << 63) - 25;  // largest prime below 2^63
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t x = rng() % m, y = rng() % m;
    const BigInt expected = (BigInt(x) * y) % m;
    CHECK(BigInt((Residue::from_unsigned(x, m) * Residue::from_unsigned(y, m)).value()) == expected);
    CHECK(BigInt((Residue::from_unsigned(x, m) + Residue::from_unsigned(y, m)).value()) == (BigInt(x) + y) % m);
  }
}

TEST_CASE("gaussian integers and roots of unity") {
  const Gaussian i = Gaussian::i();
  CHECK(i * i == Gaussian(BigInt(-1)));
  CHECK((Gaussian(BigInt(1), BigInt(1)) * Gaussian(BigInt(1), BigInt(1))) == Gaussian(BigInt(0), BigInt(2)));

  for (int d = 1; d <= 12; ++d)
    for (int j = 0; j < d; ++j) {
      const RootOfUnity w = make_root_of_unity(d, j);
      CHECK(std::abs(std::abs(w.approx) - 1.0) < 1e-12);
      CHECK(w.exact.has_value() == ((4 * j) % d == 0));
      if (w.exact) {
        CHECK(std::abs(w.exact->re.convert_to<double>() - w.approx.real()) < 1e-12);
        CHECK(std::abs(w.exact->im.convert_to<double>() - w.approx.imag()) < 1e-12);
      }
    }
  const auto w3 = root_of_unity_value<Real>(3, 1);
  const auto cube = w3 * w3 * w3;
  CHECK(abs(cube.re - 1) < Real("1e-45"));
  CHECK(abs(cube.im) < Real("1e-45"));
}
