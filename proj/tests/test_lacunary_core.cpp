#include <doctest.h>

#include "lacunary/errors.hpp"
#include "lacunary/lacunary.hpp"
#include "oracle.hpp"

using namespace lacunary;

TEST_CASE("SumParams validation and normalization") {
  CHECK_THROWS_AS(SumParams(1, 0, 5), InvalidArgument);
  CHECK(SumParams(5, -1, 3).r() == 4);
  CHECK(SumParams(5, 12, 3).r() == 2);
  CHECK(parse_kind("star") == Kind::alternating);
  CHECK_THROWS_AS(parse_kind("odd"), InvalidArgument);
}

TEST_CASE("direct_sum") {
  CHECK(direct_sum(SumParams(3, 0, 5)).value == 11);
  CHECK(direct_sum(SumParams(5, 3, 2)).value == 0);
  CHECK(direct_sum(SumParams(7, 0, 10)).value == 121);
  CHECK(direct_sum(SumParams(4, 2, 5)).value == 10);
  CHECK(direct_sum(SumParams(4, 2, 5)).params.kind() == Kind::plain);
}

TEST_CASE("direct_sum_alternating") {
  CHECK(direct_sum_alternating(SumParams(3, 0, 6)).value == -18);
  CHECK(direct_sum_alternating(SumParams(2, 0, 3)).value == -2);
  for (int n = 2; n <= 9; ++n) CHECK(direct_sum_alternating(SumParams(n, 0, 0)).value == 1);
}

TEST_CASE("star_from_plain") {
  CHECK(star_from_plain(3, 0, 6).value == -18);
  CHECK(star_from_plain(2, 0, 5).value == -4);
  for (int n = 2; n <= 6; ++n) CHECK(star_from_plain(n, 0, 0).value == 1);
}

TEST_CASE("plain_from_halves") {
  CHECK(plain_from_halves(6, 6).value == 2);
  CHECK(plain_from_halves(4, 5).value == 6);
  CHECK(plain_from_halves(2, 0).value == 1);
  CHECK_THROWS_AS(plain_from_halves(5, 3), ParityError);
}

TEST_CASE("direct sums agree with the Pascal-triangle oracle") {
  for (int n = 2; n <= 9; ++n)
    for (int r = 0; r < n; ++r)
      for (std::uint64_t m = 0; m <= 40; ++m) {
        CHECK(direct_sum(SumParams(n, r, m)).value == oracle::lacunary(n, r, m, false));
        CHECK(direct_sum_alternating(SumParams(n, r, m)).value == oracle::lacunary(n, r, m, true));
      }
}

TEST_CASE("residue classes partition the binomial row") {
  for (int n = 2; n <= 10; ++n)
    for (std::uint64_t m = 0; m <= 60; ++m) {
      BigInt total = 0;
      for (int r = 0; r < n; ++r) total += direct_sum(SumParams(n, r, m)).value;
      CHECK(total == (BigInt(1) << m));
    }
}

TEST_CASE("inter-family identities") {
  for (int n = 2; n <= 8; ++n)
    for (int r = 0; r < n; ++r)
      for (std::uint64_t m = 0; m <= 60; ++m)
        CHECK(star_from_plain(n, r, m).value == direct_sum_alternating(SumParams(n, r, m)).value);

  for (int n = 2; n <= 12; n += 2)
    for (std::uint64_t m = 0; m <= 60; ++m) {
      const BigInt sum = oracle::lacunary(n / 2, 0, m, false) + oracle::lacunary(n / 2, 0, m, true);
      CHECK(sum % 2 == 0);
      CHECK(plain_from_halves(n, m).value == direct_sum(SumParams(n, 0, m)).value);
    }
}

TEST_CASE("short rows and symmetry") {
  for (int n = 2; n <= 10; ++n)
    for (std::uint64_t m = 0; m < static_cast<std::uint64_t>(n); ++m) {
      CHECK(direct_sum(SumParams(n, 0, m)).value == 1);
      for (int r = 0; r <= static_cast<int>(m); ++r)
        CHECK(direct_sum(SumParams(n, r, m)).value == binomial(m, r));
    }
  for (int n = 2; n <= 8; ++n)
    for (std::uint64_t m = 0; m <= 40; ++m)
      for (int r = 0; r < n; ++r) {
        const long long mirrored = (static_cast<long long>(m) - r) % n;
        CHECK(direct_sum(SumParams(n, r, m)).value == direct_sum(SumParams(n, mirrored, m)).value);
      }
}

TEST_CASE("plain values are never negative") {
  for (int n = 2; n <= 7; ++n)
    for (int r = 0; r < n; ++r)
      for (std::uint64_t m = 0; m <= 30; ++m) CHECK(direct_sum(SumParams(n, r, m)).value >= 0);
}
