#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lacunary/lacunary.hpp"
#include "lacunary/matrix.hpp"
#include "lacunary/quotient_poly.hpp"
#include "lacunary/residue.hpp"

namespace lacunary {

/// Float-path results are rejected when farther than this from an integer.
inline constexpr double rounding_confidence_threshold = 0.25;

/// Outcome of one engine evaluation. `rounding_distance` is set only by
/// floating-point paths and measures |x - round(x)| before rounding.
struct EngineReport {
  std::string engine;
  LacunaryValue value;
  std::optional<double> rounding_distance;
};

inline int sigma_of(Kind kind) { return kind == Kind::plain ? 1 : -1; }

// ---------------------------------------------------------------------------
// Quotient-ring engine

/// (1 + x)^m in S[x]/(x^N - sigma); `unit` fixes the coefficient ring.
template <class S>
QuotientPoly<S> generator_power(int n, Kind kind, std::uint64_t m, const S& unit = S(1)) {
  return quotient_pow(QuotientPoly<S>::one_plus_x(n, sigma_of(kind), unit), m);
}

/// Coefficient r of (1 + x)^m modulo x^N -+ 1: T(N, r, m) for plain, T* for alternating.
LacunaryValue poly_engine(const SumParams& params);

/// poly_engine with every coefficient reduced modulo `modulus`.
Residue poly_engine(const SumParams& params, std::uint64_t modulus);

// ---------------------------------------------------------------------------
// Circulant engine

/// C_N = I + U_N, or its skew version with the lower-left entry negated.
struct CirculantSpec {
  int n = 2;
  bool skew = false;

  /// The unit (skew-)circulant U_N: ones on the superdiagonal, +-1 in the corner.
  template <class S>
  RingMatrix<S> unit_shift(const S& unit = S(1)) const {
    RingMatrix<S> u = RingMatrix<S>::Constant(n, n, ring_zero(unit));
    for (int i = 0; i + 1 < n; ++i) u(i, i + 1) = unit;
    u(n - 1, 0) = skew ? S(-unit) : unit;
    return u;
  }

  template <class S>
  RingMatrix<S> realize(const S& unit = S(1)) const {
    RingMatrix<S> c = unit_shift(unit);
    for (int i = 0; i < n; ++i) c(i, i) = unit;
    return c;
  }
};

template <class S>
std::vector<S> circulant_first_row(const CirculantSpec& spec, std::uint64_t m, const S& unit = S(1)) {
  const RingMatrix<S> p = matrix_pow(spec.realize(unit), m);
  std::vector<S> row(p.cols());
  for (Eigen::Index j = 0; j < p.cols(); ++j) row[j] = p(0, j);
  return row;
}

/// First row of C^m over the integers.
std::vector<BigInt> circulant_engine(const CirculantSpec& spec, std::uint64_t m);

/// First row of C^m over Z / modulus.
std::vector<Residue> circulant_engine(const CirculantSpec& spec, std::uint64_t m, std::uint64_t modulus);

/// Checks U^k cycling back to I (or reaching -I when skew) at k = N, and that
/// entry (0,0) of C^k is 1 for every k < N.
bool verify_shift_cycle(int n, bool skew);

// ---------------------------------------------------------------------------
// Block decomposition

/// C_N (or C*_N) viewed as a d x d block (skew-)circulant Circ_d(a, b, 0, ...).
///
/// For d >= 2, `a` is I + superdiagonal and `b` holds a single 1 in its
/// lower-left corner; the wrap-around block in position (d-1, 0) is -b when
/// skew. For d = 1 the whole matrix is `a` and `b` is zero.
struct BlockSplit {
  int n = 0;
  int d = 1;
  bool skew = false;
  RingMatrix<BigInt> a;
  RingMatrix<BigInt> b;

  int block_dim() const { return n / d; }

  /// Block (i, j) of the partitioned matrix.
  RingMatrix<BigInt> block(int i, int j) const;

  /// Rebuilds the full N x N matrix from the blocks.
  RingMatrix<BigInt> reassemble() const;
};

BlockSplit block_split(int n, int d, bool skew = false);

/// How split_engine evaluates the root-of-unity sum.
enum class SplitArithmetic {
  automatic,      ///< Gaussian integers when every root is a Gaussian unit, else complex floats
  exact_gaussian, ///< Gaussian integers; fails when a root is not a Gaussian unit
  complex_float,  ///< 50-digit complex floats with integer rounding
};

/// (1/d) sum_j (a + b w_j)^m at entry (0,0), w_j running over the d-th roots
/// of 1 (plain) or of -1 (alternating). Equals T(N, 0, m) or T*(N, 0, m).
EngineReport split_engine(int n, int d, std::uint64_t m, Kind kind = Kind::plain,
                          SplitArithmetic arithmetic = SplitArithmetic::automatic);

/// Entry (0,0) of (a - b)^m with (a, b) the d = 2 blocks of C_2N; equals T*(N, 0, m).
LacunaryValue skew_block_engine(int n, std::uint64_t m);

// ---------------------------------------------------------------------------
// Numeric forms

/// Ramus's cosine form in extended (long double) precision, rounded. Valid for any r.
EngineReport ramus_cosine(const SumParams& params);

/// Largest m accepted by ramus_cosine.
inline constexpr std::uint64_t ramus_cosine_max_m = 60;

/// cos(m pi / 3) from the floor-based closed form; always a multiple of 1/4.
Rational cos_pi_over_3_closed(std::uint64_t m);

/// T(9, 0, m) via (1/3) T(3, 0, m) + (2/3) Re((a + b w)^m)(0,0), w = exp(2 pi i / 3).
EngineReport t9_expression(std::uint64_t m);

// ---------------------------------------------------------------------------
// Diagnostic for the printed even-N skew formula

/// One candidate reading of T*(N,0,m) = ((a+bi)^k + (a-bi)^k)/2 at entry (0,0).
struct SkewReading {
  std::string label;
  int block_source = 0;  ///< dimension of the circulant that is split in two
  bool doubled_exponent = false;
};

struct SkewProbeRow {
  std::uint64_t m = 0;
  BigInt expected;
  /// Empty where a reading does not apply (C_N blocks need even N).
  std::vector<std::optional<BigInt>> candidates;
};

struct SkewProbe {
  int n = 0;
  std::vector<SkewReading> readings;
  std::vector<SkewProbeRow> rows;

  /// True when reading `i` matches T* on every row.
  bool reading_matches(std::size_t i) const;
};

SkewProbe probe_skew_readings(int n, std::uint64_t max_m);

}  // namespace lacunary
