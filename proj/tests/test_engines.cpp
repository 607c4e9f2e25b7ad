#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "lacunary/engines.hpp"
#include "lacunary/errors.hpp"
#include "lacunary/evaluate.hpp"
#include "oracle.hpp"

using namespace lacunary;

TEST_CASE("poly_engine") {
  CHECK(poly_engine(SumParams(3, 0, 5)).value == 11);
  CHECK(poly_engine(SumParams(3, 1, 5)).value == 10);
  CHECK(poly_engine(SumParams(2, 0, 3, Kind::alternating)).value == -2);
  CHECK(poly_engine(SumParams(5, 0, 19), 1000).value() == 883);
  CHECK(poly_engine(SumParams(2, 0, 0)).value == 1);
}

TEST_CASE("circulant_engine") {
  CHECK(circulant_engine({2, false}, 3).front() == 4);
  CHECK(circulant_engine({2, true}, 3).front() == -2);
  for (int n = 2; n <= 6; ++n)
    for (bool skew : {false, true}) CHECK(circulant_engine({n, skew}, 0).front() == 1);

  for (int n = 2; n <= 8; ++n)
    for (bool skew : {false, true})
      for (std::uint64_t m = 0; m <= 25; ++m) {
        const auto row = circulant_engine({n, skew}, m);
        const auto ref = oracle::mat_pow_naive(oracle::circulant(n, skew), m);
        for (int k = 0; k < n; ++k) CHECK(row[k] == ref[0][k]);
      }
}

TEST_CASE("verify_shift_cycle") {
  CHECK(verify_shift_cycle(3, false));
  CHECK(verify_shift_cycle(3, true));
  CHECK(verify_shift_cycle(2, true));
  for (int n = 2; n <= 16; ++n) {
    CHECK(verify_shift_cycle(n, false));
    CHECK(verify_shift_cycle(n, true));
  }
  const RingMatrix<BigInt> u3 = CirculantSpec{3, true}.unit_shift<BigInt>();
  const RingMatrix<BigInt> minus_id = -RingMatrix<BigInt>::Identity(3, 3);
  CHECK(matrices_equal(matrix_pow(u3, 3), minus_id));
}

TEST_CASE("block_split") {
  const BlockSplit s63 = block_split(6, 3);
  RingMatrix<BigInt> a(2, 2), b(2, 2);
  a << 1, 1, 0, 1;
  b << 0, 0, 1, 0;
  CHECK(matrices_equal(s63.a, a));
  CHECK(matrices_equal(s63.b, b));

  const BlockSplit s62 = block_split(6, 2);
  RingMatrix<BigInt> a3(3, 3), b3(3, 3);
  a3 << 1, 1, 0, 0, 1, 1, 0, 0, 1;
  b3 << 0, 0, 0, 0, 0, 0, 1, 0, 0;
  CHECK(matrices_equal(s62.a, a3));
  CHECK(matrices_equal(s62.b, b3));

  const BlockSplit s44 = block_split(4, 4);
  CHECK(s44.a.rows() == 1);
  CHECK(s44.a(0, 0) == 1);
  CHECK(s44.b(0, 0) == 1);

  const BlockSplit s51 = block_split(5, 1);
  CHECK(matrices_equal(s51.a, CirculantSpec{5, false}.realize<BigInt>()));
  CHECK(s51.b.isZero());

  CHECK_THROWS_AS(block_split(6, 4), DivisibilityError);
}

TEST_CASE("block partition reassembles C_N and C*_N") {
  for (int n = 2; n <= 12; ++n)
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      for (bool skew : {false, true}) {
        const BlockSplit s = block_split(n, d, skew);
        CHECK(matrices_equal(s.reassemble(), CirculantSpec{n, skew}.realize<BigInt>()));
        if (d >= 2) {
          int nonzero = 0;
          for (Eigen::Index i = 0; i < s.b.size(); ++i) nonzero += s.b(i) != 0;
          CHECK(nonzero == 1);
        }
      }
    }
}

TEST_CASE("split_engine") {
  CHECK(split_engine(4, 2, 5).value.value == 6);
  CHECK(split_engine(4, 4, 4).value.value == 2);
  CHECK(split_engine(9, 3, 12).value.value == 221);
  CHECK_FALSE(split_engine(4, 4, 4).rounding_distance.has_value());
  CHECK(split_engine(9, 3, 12).rounding_distance.has_value());
  for (int n = 2; n <= 7; ++n)
    for (std::uint64_t m = 0; m <= 20; ++m)
      CHECK(split_engine(n, 1, m).value.value == circulant_engine({n, false}, m).front());
  CHECK_THROWS_AS(split_engine(6, 4, 3), DivisibilityError);
  CHECK_THROWS_AS(split_engine(9, 3, 3, Kind::plain, SplitArithmetic::exact_gaussian), InvalidArgument);
  CHECK_THROWS_AS(split_engine(9, 3, 400), NumericConfidenceError);
}

TEST_CASE("split_engine is constant in d, both kinds") {
  for (int n = 2; n <= 12; ++n)
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      for (std::uint64_t m = 1; m <= 60; ++m) {
        CHECK(split_engine(n, d, m).value.value == oracle::lacunary(n, 0, m, false));
        CHECK(split_engine(n, d, m, Kind::alternating).value.value == oracle::lacunary(n, 0, m, true));
      }
    }
}

TEST_CASE("exact and float split paths agree where both apply") {
  for (int n : {4, 8, 12})
    for (int d : {2, 4})
      for (std::uint64_t m = 1; m <= 40; ++m)
        CHECK(split_engine(n, d, m, Kind::plain, SplitArithmetic::complex_float).value.value ==
              split_engine(n, d, m, Kind::plain, SplitArithmetic::exact_gaussian).value.value);
}

TEST_CASE("first block term (a + b)^m carries T(N/d, 0, m)") {
  for (int n = 2; n <= 12; ++n)
    for (int d = 2; d <= n; ++d) {
      if (n % d != 0) continue;
      const BlockSplit s = block_split(n, d);
      const RingMatrix<BigInt> sum = s.a + s.b;
      for (std::uint64_t m = 0; m <= 40; ++m)
        CHECK(matrix_pow(sum, m)(0, 0) == oracle::lacunary(n / d, 0, m, false));
    }
}

TEST_CASE("skew_block_engine") {
  CHECK(skew_block_engine(2, 3).value == -2);
  CHECK(skew_block_engine(4, 5).value == -4);
  const BlockSplit s = block_split(6, 2);
  const RingMatrix<BigInt> diff = s.a - s.b;
  CHECK(matrices_equal(diff, CirculantSpec{3, true}.realize<BigInt>()));
  for (int n = 2; n <= 8; ++n)
    for (std::uint64_t m = 0; m <= 60; ++m) CHECK(skew_block_engine(n, m).value == oracle::lacunary(n, 0, m, true));
}

TEST_CASE("ramus_cosine") {
  CHECK(ramus_cosine(SumParams(2, 0, 5)).value.value == 16);
  CHECK(ramus_cosine(SumParams(3, 1, 5)).value.value == 10);
  CHECK(ramus_cosine(SumParams(4, 2, 5)).value.value == 10);
  CHECK_THROWS_AS(ramus_cosine(SumParams(3, 0, 0)), InvalidArgument);
  CHECK_THROWS_AS(ramus_cosine(SumParams(3, 0, 100)), RangeError);
  CHECK_THROWS_AS(ramus_cosine(SumParams(3, 0, 5, Kind::alternating)), InvalidArgument);
  for (int n = 2; n <= 12; ++n)
    for (int r = 0; r < n; ++r)
      for (std::uint64_t m = 1; m <= 50; ++m) {
        const EngineReport rep = ramus_cosine(SumParams(n, r, m));
        CHECK(rep.value.value == oracle::lacunary(n, r, m, false));
        CHECK(*rep.rounding_distance < rounding_confidence_threshold);
      }
}

TEST_CASE("cos_pi_over_3_closed") {
  CHECK(cos_pi_over_3_closed(0) == 1);
  CHECK(cos_pi_over_3_closed(2) == Rational(-1, 2));
  CHECK(cos_pi_over_3_closed(3) == -1);
  for (std::uint64_t m = 0; m <= 1000; ++m) {
    const double closed = cos_pi_over_3_closed(m).convert_to<double>();
    CHECK(std::abs(closed - std::cos(static_cast<double>(m) * std::numbers::pi / 3)) < 1e-12);
    CHECK(cos_pi_over_3_closed(m) == cos_pi_over_3_closed(m + 6));
  }
}

TEST_CASE("t9_expression") {
  CHECK(t9_expression(1).value.value == 1);
  CHECK(t9_expression(9).value.value == 2);
  CHECK(t9_expression(12).value.value == 221);
  for (std::uint64_t m = 1; m <= 40; ++m) {
    const EngineReport rep = t9_expression(m);
    CHECK(rep.value.value == oracle::lacunary(9, 0, m, false));
    CHECK(*rep.rounding_distance < 1e-6);
  }
}

TEST_CASE("skew-reading probe lists every candidate and flags the identity reading") {
  const SkewProbe odd = probe_skew_readings(3, 6);
  CHECK(odd.rows.size() == 7);
  CHECK_FALSE(odd.rows[2].candidates[0].has_value());
  CHECK(odd.rows[2].candidates[2].has_value());
  const SkewProbe even = probe_skew_readings(4, 12);
  for (const auto& row : even.rows) CHECK(row.expected == oracle::lacunary(4, 0, row.m, true));
}

TEST_CASE("evaluate dispatches every engine consistently") {
  for (const char* name : {"direct", "poly", "circulant", "recurrence", "split:1", "split:2"}) {
    const EngineId id = EngineId::parse(name);
    CHECK(id.str() == name);
    CHECK(evaluate(SumParams(4, 0, 13), id).value == 2016);
  }
  CHECK(evaluate(SumParams(5, 0, 19), EngineId::parse("recurrence"), 1000).value == 883);
  CHECK(evaluate(SumParams(5, 0, 19), EngineId::parse("circulant"), 1000).value == 883);
  CHECK(evaluate(SumParams(3, 0, 6, Kind::alternating), EngineId::parse("direct"), 7).value == 3);
  CHECK_THROWS_AS(EngineId::parse("split:x"), InvalidArgument);
  CHECK_THROWS_AS(EngineId::parse("fft"), InvalidArgument);
  CHECK_THROWS_AS(evaluate(SumParams(4, 1, 3), EngineId::parse("split:2")), InvalidArgument);
}

TEST_CASE("batch evaluation is independent of order and thread count") {
  std::vector<SumParams> batch;
  for (int n = 2; n <= 9; ++n)
    for (int r = 0; r < n; ++r)
      for (std::uint64_t m = 0; m <= 30; m += 3) batch.emplace_back(n, r, m, (m % 2) ? Kind::plain : Kind::alternating);

  const EngineId poly = EngineId::parse("poly");
  const auto sequential = evaluate_batch(batch, poly, std::nullopt, 1);

  std::vector<std::size_t> order(batch.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), std::mt19937(2024));
  std::vector<SumParams> shuffled;
  for (std::size_t i : order) shuffled.push_back(batch[i]);
  const auto parallel = evaluate_batch(shuffled, poly, std::nullopt, 4);

  REQUIRE(parallel.size() == sequential.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    CHECK(parallel[k].params == sequential[order[k]].params);
    CHECK(parallel[k].value == sequential[order[k]].value);
  }
}
