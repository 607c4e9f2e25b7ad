#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "lacunary/errors.hpp"
#include "lacunary/lacunary.hpp"
#include "lacunary/residue.hpp"
#include "lacunary/ring.hpp"
#include "lacunary/types.hpp"

namespace lacunary {

enum class Family { plain, star, custom };

/// Linear recurrence c_N x_n + c_{N-1} x_{n-1} + ... + c_0 x_{n-N} = 0.
///
/// `coeffs` is stored in descending order [c_N, ..., c_0] with c_N = 1, trailing
/// zeros retained. The recurrence produces x_n for n >= seeds.size().
struct RecurrenceSpec {
  std::vector<BigInt> coeffs;
  std::vector<BigInt> seeds;
  Family family = Family::custom;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  /// Degree minus the number of trailing zero coefficients.
  int effective_order() const;
};

/// Characteristic recurrence (x-1)^N - 1 (plain) or (x-1)^N + 1 (star) with N seed ones.
RecurrenceSpec recurrence_coeffs(int n, Family family);

/// Same characteristic polynomial, seeded for residue class r: the m < N terms are C(m, r).
RecurrenceSpec recurrence_for(const SumParams& params);

/// Term m of the sequence, over any ring; `unit` fixes the coefficient ring.
template <class S>
S recur_eval_as(const RecurrenceSpec& spec, std::uint64_t m, const S& unit);

BigInt recur_eval(const RecurrenceSpec& spec, std::uint64_t m);

/// Minimal recurrence found by Berlekamp-Massey over Q.
///
/// `coeffs` = [1, c_1, ..., c_order] means x_n + c_1 x_{n-1} + ... + c_order x_{n-order} = 0,
/// valid for n >= linear_complexity. `order` counts only the nonzero characteristic roots;
/// `linear_complexity - order` leading terms are transient.
struct FittedRecurrence {
  std::vector<Rational> coeffs;
  int order = 0;
  int linear_complexity = 0;
  std::size_t valid_up_to = 0;

  /// Characteristic polynomial x^L C(1/x), descending coefficients, length L + 1.
  std::vector<Rational> characteristic_polynomial() const;
};

FittedRecurrence fit_minimal_recurrence(std::span<const BigInt> sequence);

/// Regenerates `count` terms from the first linear_complexity entries of `seeds`.
std::vector<Rational> replay(const FittedRecurrence& fit, std::span<const BigInt> seeds, std::size_t count);

/// d T(N, 0, m) - T(N/d, 0, m).
BigInt composite_sequence(int n, int d, std::uint64_t m);

/// Remainder of polynomial division over Q (descending coefficient vectors).
std::vector<Rational> polynomial_remainder(std::vector<Rational> dividend, const std::vector<Rational>& divisor);

// ---------------------------------------------------------------------------

template <class S>
S recur_eval_as(const RecurrenceSpec& spec, std::uint64_t m, const S& unit) {
  const int order = spec.effective_order();
  if (static_cast<int>(spec.seeds.size()) < order)
    throw InsufficientSeeds("recurrence of order " + std::to_string(order) + " needs at least that many seeds");
  auto lift = [&](const BigInt& v) {
    if constexpr (std::is_same_v<S, Residue>)
      return Residue::from_bigint(v, unit.modulus());
    else
      return S(v) * unit;
  };
  if (m < spec.seeds.size()) return lift(spec.seeds[m]);

  // x_n = -(c_{N-1} x_{n-1} + ... + c_0 x_{n-N}); only the effective window is needed.
  std::vector<S> weights(order);
  for (int k = 1; k <= order; ++k) weights[k - 1] = lift(-spec.coeffs[k]);

  std::vector<S> window;
  window.reserve(spec.seeds.size());
  for (const auto& s : spec.seeds) window.push_back(lift(s));
  // Keep the last `order` terms in a ring buffer; head points at x_{n-1}.
  std::vector<S> ring(window.end() - order, window.end());
  std::size_t head = order == 0 ? 0 : static_cast<std::size_t>(order - 1);
  S next = ring_zero(unit);
  for (std::uint64_t n = spec.seeds.size(); n <= m; ++n) {
    next = ring_zero(unit);
    for (int k = 0; k < order; ++k) next += weights[k] * ring[(head + order - k) % order];
    if (order > 0) {
      head = (head + 1) % order;
      ring[head] = next;
    }
  }
  return next;
}

}  // namespace lacunary
