#include "lacunary/engines.hpp"

#include <cmath>

#include "lacunary/complex.hpp"
#include "lacunary/errors.hpp"
#include "lacunary/root_of_unity.hpp"

namespace lacunary {

LacunaryValue poly_engine(const SumParams& params) {
  const auto p = generator_power<BigInt>(params.n(), params.kind(), params.m());
  return {p[params.r()], params};
}

Residue poly_engine(const SumParams& params, std::uint64_t modulus) {
  const auto unit = Residue::from_unsigned(1, modulus);
  return generator_power(params.n(), params.kind(), params.m(), unit)[params.r()];
}

std::vector<BigInt> circulant_engine(const CirculantSpec& spec, std::uint64_t m) {
  return circulant_first_row<BigInt>(spec, m);
}

std::vector<Residue> circulant_engine(const CirculantSpec& spec, std::uint64_t m, std::uint64_t modulus) {
  return circulant_first_row(spec, m, Residue::from_unsigned(1, modulus));
}

bool verify_shift_cycle(int n, bool skew) {
  if (n < 2) throw InvalidArgument("verify_shift_cycle requires N >= 2");
  const CirculantSpec spec{n, skew};
  const RingMatrix<BigInt> u = spec.unit_shift<BigInt>();
  const RingMatrix<BigInt> c = spec.realize<BigInt>();
  RingMatrix<BigInt> u_pow = identity_like(u);
  RingMatrix<BigInt> c_pow = u_pow;
  for (int k = 0; k < n; ++k) {
    if (c_pow(0, 0) != 1) return false;
    // Before the cycle closes the first row of U^k is the unit vector e_k, never negated.
    for (int j = 0; j < n; ++j)
      if (u_pow(0, j) != (j == k ? 1 : 0)) return false;
    u_pow = matrix_mul(u_pow, u);
    c_pow = matrix_mul(c_pow, c);
  }
  const BigInt diagonal = skew ? -1 : 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (u_pow(i, j) != (i == j ? diagonal : BigInt(0))) return false;
  return true;
}

// ---------------------------------------------------------------------------

RingMatrix<BigInt> BlockSplit::block(int i, int j) const {
  const int k = block_dim();
  if (d == 1) return a;
  if (i == j) return a;
  if (j == i + 1) return b;
  if (i == d - 1 && j == 0) {
    if (!skew) return b;
    RingMatrix<BigInt> negated = -b;
    return negated;
  }
  return RingMatrix<BigInt>::Zero(k, k);
}

RingMatrix<BigInt> BlockSplit::reassemble() const {
  const int k = block_dim();
  RingMatrix<BigInt> full = RingMatrix<BigInt>::Zero(n, n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) full.block(i * k, j * k, k, k) = block(i, j);
  return full;
}

BlockSplit block_split(int n, int d, bool skew) {
  if (n < 2) throw InvalidArgument("block_split requires N >= 2");
  if (d < 1 || n % d != 0)
    throw DivisibilityError("block count " + std::to_string(d) + " does not divide N = " + std::to_string(n));
  BlockSplit s;
  s.n = n;
  s.d = d;
  s.skew = skew;
  const int k = n / d;
  if (d == 1) {
    s.a = CirculantSpec{n, skew}.realize<BigInt>();
    s.b = RingMatrix<BigInt>::Zero(n, n);
    return s;
  }
  s.a = RingMatrix<BigInt>::Identity(k, k);
  for (int i = 0; i + 1 < k; ++i) s.a(i, i + 1) = 1;
  s.b = RingMatrix<BigInt>::Zero(k, k);
  s.b(k - 1, 0) = 1;
  return s;
}

namespace {

template <class T>
RingMatrix<Complex<T>> to_complex(const RingMatrix<BigInt>& m) {
  RingMatrix<Complex<T>> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Complex<T>(T(m(i, j)));
  return out;
}

// Root w_j of w^d = 1 (plain) or w^d = -1 (alternating), as (order, index).
std::pair<int, int> split_root(int d, int j, Kind kind) {
  return kind == Kind::plain ? std::pair{d, j} : std::pair{2 * d, 2 * j + 1};
}

bool roots_are_gaussian(int d, Kind kind) {
  for (int j = 0; j < d; ++j) {
    const auto [order, index] = split_root(d, j, kind);
    if (!make_root_of_unity(order, index).exact) return false;
  }
  return true;
}

// Decimal digits of headroom kept free of rounding noise in the float path.
constexpr int guard_digits = 12;

template <class T>
T abs_distance_to_integer(const T& x) {
  using std::abs;
  using std::round;
  return abs(x - round(x));
}

}  // namespace

EngineReport split_engine(int n, int d, std::uint64_t m, Kind kind, SplitArithmetic arithmetic) {
  const BlockSplit s = block_split(n, d, kind == Kind::alternating);
  const SumParams params(n, 0, m, kind);
  const std::string id = "split:" + std::to_string(d);

  bool exact = roots_are_gaussian(d, kind);
  if (arithmetic == SplitArithmetic::exact_gaussian && !exact)
    throw InvalidArgument("split engine: roots of order " + std::to_string(d) + " are not Gaussian units");
  if (arithmetic == SplitArithmetic::complex_float) exact = false;

  if (exact) {
    const auto a = to_complex<BigInt>(s.a);
    const auto b = to_complex<BigInt>(s.b);
    Gaussian total(BigInt(0), BigInt(0));
    for (int j = 0; j < d; ++j) {
      const auto [order, index] = split_root(d, j, kind);
      const Gaussian w = *make_root_of_unity(order, index).exact;
      RingMatrix<Gaussian> base = a;
      for (Eigen::Index r = 0; r < b.rows(); ++r)
        for (Eigen::Index c = 0; c < b.cols(); ++c) base(r, c) += b(r, c) * w;
      total += matrix_pow(base, m)(0, 0);
    }
    if (total.im != 0 || total.re % d != 0)
      throw DivisibilityError("split engine: root-of-unity sum " + total.re.str() + " + " + total.im.str() +
                              "i is not divisible by d = " + std::to_string(d));
    return {id, {total.re / d, params}, std::nullopt};
  }

  const double magnitude_digits = static_cast<double>(m) * std::log10(2.0) + 1.0;
  if (magnitude_digits > std::numeric_limits<Real>::digits10 - guard_digits)
    throw NumericConfidenceError("split engine: 2^" + std::to_string(m) +
                                 " exceeds the precision of the complex-float path; use an exact engine");

  const auto a = to_complex<Real>(s.a);
  const auto b = to_complex<Real>(s.b);
  ComplexReal total(Real(0), Real(0));
  for (int j = 0; j < d; ++j) {
    const auto [order, index] = split_root(d, j, kind);
    const ComplexReal w = root_of_unity_value<Real>(order, index);
    RingMatrix<ComplexReal> base = a;
    for (Eigen::Index r = 0; r < b.rows(); ++r)
      for (Eigen::Index c = 0; c < b.cols(); ++c) base(r, c) += b(r, c) * w;
    total += matrix_pow(base, m)(0, 0);
  }
  const Real x = total.re / d;
  using std::abs;
  const Real distance = std::max(abs_distance_to_integer(x), Real(abs(total.im / d)));
  const double dist = distance.convert_to<double>();
  if (!(dist < rounding_confidence_threshold))
    throw NumericConfidenceError("split engine: result " + x.str(20) + " is not near an integer");
  return {id, {BigInt(round(x)), params}, dist};
}

LacunaryValue skew_block_engine(int n, std::uint64_t m) {
  const BlockSplit s = block_split(2 * n, 2, false);
  const RingMatrix<BigInt> base = s.a - s.b;
  return {matrix_pow(base, m)(0, 0), SumParams(n, 0, m, Kind::alternating)};
}

// ---------------------------------------------------------------------------

EngineReport ramus_cosine(const SumParams& params) {
  if (params.kind() != Kind::plain) throw InvalidArgument("the cosine form covers plain sums only");
  if (params.m() == 0) throw InvalidArgument("the cosine form requires m > 0");
  if (params.m() > ramus_cosine_max_m)
    throw RangeError("cosine engine: 2^" + std::to_string(params.m()) +
                     " exceeds the floating-point precision guard (m <= " + std::to_string(ramus_cosine_max_m) +
                     "); use an exact engine");

  const long double pi = 3.141592653589793238462643383279502884L;
  const long long n = params.n();
  const long long shift = static_cast<long long>(params.m()) - 2LL * params.r();
  long double total = 0;
  for (long long j = 0; j < n; ++j) {
    const long long phase = (((j * shift) % (2 * n)) + 2 * n) % (2 * n);
    total += std::pow(2.0L * std::cos(j * pi / n), static_cast<long double>(params.m())) *
             std::cos(phase * pi / n);
  }
  total /= n;
  const long double nearest = std::round(total);
  const double dist = static_cast<double>(std::fabs(total - nearest));
  if (!(dist < rounding_confidence_threshold))
    throw NumericConfidenceError("cosine engine: result is not near an integer");
  return {"cosine", {BigInt(static_cast<long long>(nearest)), params}, dist};
}

Rational cos_pi_over_3_closed(std::uint64_t m) {
  const std::uint64_t f = (m + 1) / 3;
  const int outer = f % 2 == 0 ? 1 : -1;
  const int inner = 3 + ((m + f) % 2 == 0 ? 1 : -1);
  return Rational(outer * inner, 4);
}

EngineReport t9_expression(std::uint64_t m) {
  if (m == 0) throw InvalidArgument("t9_expression requires m > 0");
  const double magnitude_digits = static_cast<double>(m) * std::log10(2.0) + 1.0;
  if (magnitude_digits > std::numeric_limits<Real>::digits10 - guard_digits)
    throw NumericConfidenceError("t9_expression: m too large for the complex-float path");

  // (1/3) T(3, 0, m) with T(3, 0, m) = (2^m + 2 cos(m pi / 3)) / 3, kept exact.
  const Rational first = (Rational(BigInt(1) << m) + 2 * cos_pi_over_3_closed(m)) / 9;

  const BlockSplit s = block_split(9, 3, false);
  const ComplexReal w = root_of_unity_value<Real>(3, 1);
  RingMatrix<ComplexReal> base = to_complex<Real>(s.a);
  for (Eigen::Index r = 0; r < 3; ++r)
    for (Eigen::Index c = 0; c < 3; ++c) base(r, c) += ComplexReal(Real(s.b(r, c))) * w;
  const Real second = 2 * matrix_pow(base, m)(0, 0).re / 3;

  const Real x = Real(numerator(first)) / Real(denominator(first)) + second;
  const double dist = abs_distance_to_integer(x).convert_to<double>();
  if (!(dist < rounding_confidence_threshold))
    throw NumericConfidenceError("t9_expression: result is not near an integer");
  return {"t9", {BigInt(round(x)), SumParams(9, 0, m)}, dist};
}

// ---------------------------------------------------------------------------

bool SkewProbe::reading_matches(std::size_t i) const {
  for (const auto& row : rows)
    if (!row.candidates.at(i) || *row.candidates[i] != row.expected) return false;
  return !rows.empty();
}

SkewProbe probe_skew_readings(int n, std::uint64_t max_m) {
  SkewProbe probe;
  probe.n = n;
  probe.readings = {
      {"C_N blocks, (a+-bi)^(2m)", n, true},
      {"C_N blocks, (a+-bi)^m", n, false},
      {"C_2N blocks, (a+-bi)^(2m)", 2 * n, true},
      {"C_2N blocks, (a+-bi)^m", 2 * n, false},
  };
  for (std::uint64_t m = 0; m <= max_m; ++m) {
    SkewProbeRow row;
    row.m = m;
    row.expected = direct_sum_alternating(SumParams(n, 0, m, Kind::alternating)).value;
    for (const auto& reading : probe.readings) {
      if (reading.block_source % 2 != 0) {
        row.candidates.emplace_back();
        continue;
      }
      const BlockSplit s = block_split(reading.block_source, 2, false);
      RingMatrix<Gaussian> base = to_complex<BigInt>(s.a);
      base += to_complex<BigInt>(s.b) * Gaussian::i();
      // ((a+bi)^k + (a-bi)^k) / 2 is the real part, since a and b are real.
      row.candidates.emplace_back(matrix_pow(base, reading.doubled_exponent ? 2 * m : m)(0, 0).re);
    }
    probe.rows.push_back(std::move(row));
  }
  return probe;
}

}  // namespace lacunary
