#include "lacunary/recurrence.hpp"

#include <algorithm>

#include "lacunary/errors.hpp"

namespace lacunary {

int RecurrenceSpec::effective_order() const {
  int order = degree();
  for (auto it = coeffs.rbegin(); it != coeffs.rend() && order > 0 && *it == 0; ++it) --order;
  return order;
}

RecurrenceSpec recurrence_coeffs(int n, Family family) {
  if (n < 2) throw InvalidArgument("recurrence_coeffs requires N >= 2");
  if (family == Family::custom) throw InvalidArgument("recurrence_coeffs: family must be plain or star");
  RecurrenceSpec spec;
  spec.family = family;
  // Descending coefficients of (x - 1)^N.
  spec.coeffs.resize(n + 1);
  for (int k = 0; k <= n; ++k) spec.coeffs[k] = binomial(n, k) * (k % 2 == 0 ? 1 : -1);
  spec.coeffs[n] += family == Family::plain ? -1 : 1;
  spec.seeds.assign(n, BigInt(1));
  return spec;
}

RecurrenceSpec recurrence_for(const SumParams& params) {
  RecurrenceSpec spec =
      recurrence_coeffs(params.n(), params.kind() == Kind::plain ? Family::plain : Family::star);
  // For m < N at most the single index j = r contributes, with sign +1.
  for (int m = 0; m < params.n(); ++m) spec.seeds[m] = binomial(m, params.r());
  return spec;
}

BigInt recur_eval(const RecurrenceSpec& spec, std::uint64_t m) { return recur_eval_as(spec, m, BigInt(1)); }

std::vector<Rational> FittedRecurrence::characteristic_polynomial() const {
  std::vector<Rational> poly(linear_complexity + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) poly[i] = coeffs[i];
  return poly;
}

FittedRecurrence fit_minimal_recurrence(std::span<const BigInt> sequence) {
  std::vector<Rational> c{Rational(1)};
  std::vector<Rational> b{Rational(1)};
  int length = 0;
  std::size_t shift = 1;
  Rational last_discrepancy = 1;

  for (std::size_t n = 0; n < sequence.size(); ++n) {
    Rational discrepancy = Rational(sequence[n]);
    for (int i = 1; i <= length && static_cast<std::size_t>(i) < c.size(); ++i)
      discrepancy += c[i] * Rational(sequence[n - i]);
    if (discrepancy == 0) {
      ++shift;
      continue;
    }
    const Rational factor = discrepancy / last_discrepancy;
    std::vector<Rational> updated = c;
    if (updated.size() < b.size() + shift) updated.resize(b.size() + shift, Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) updated[i + shift] -= factor * b[i];
    if (2 * static_cast<std::size_t>(length) <= n) {
      b = std::move(c);
      length = static_cast<int>(n + 1) - length;
      last_discrepancy = discrepancy;
      shift = 1;
    } else {
      ++shift;
    }
    c = std::move(updated);
  }

  while (c.size() > 1 && c.back() == 0) c.pop_back();
  FittedRecurrence fit;
  fit.coeffs = std::move(c);
  fit.order = static_cast<int>(fit.coeffs.size()) - 1;
  fit.linear_complexity = length;
  fit.valid_up_to = sequence.empty() ? 0 : sequence.size() - 1;
  return fit;
}

std::vector<Rational> replay(const FittedRecurrence& fit, std::span<const BigInt> seeds, std::size_t count) {
  const auto l = static_cast<std::size_t>(fit.linear_complexity);
  if (seeds.size() < l) throw InsufficientSeeds("replay needs linear_complexity seeds");
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    if (n < l) {
      out.emplace_back(seeds[n]);
      continue;
    }
    Rational next = 0;
    for (std::size_t i = 1; i < fit.coeffs.size(); ++i) next -= fit.coeffs[i] * out[n - i];
    out.push_back(next);
  }
  return out;
}

BigInt composite_sequence(int n, int d, std::uint64_t m) {
  if (d < 2) throw InvalidArgument("composite_sequence requires d >= 2");
  if (n % d != 0) throw DivisibilityError(std::to_string(d) + " does not divide " + std::to_string(n));
  const BigInt whole = direct_sum(SumParams(n, 0, m)).value;
  const BigInt part = n / d == 1 ? BigInt(1) << m : direct_sum(SumParams(n / d, 0, m)).value;
  return d * whole - part;
}

std::vector<Rational> polynomial_remainder(std::vector<Rational> dividend, const std::vector<Rational>& divisor) {
  std::size_t lead = 0;
  while (lead < divisor.size() && divisor[lead] == 0) ++lead;
  if (lead == divisor.size()) throw InvalidArgument("division by the zero polynomial");
  const std::size_t dlen = divisor.size() - lead;
  if (dlen == 1) return {};
  for (std::size_t i = 0; i + dlen <= dividend.size(); ++i) {
    if (dividend[i] == 0) continue;
    const Rational q = dividend[i] / divisor[lead];
    for (std::size_t k = 0; k < dlen; ++k) dividend[i + k] -= q * divisor[lead + k];
  }
  const std::size_t keep = std::min(dividend.size(), dlen - 1);
  return std::vector<Rational>(dividend.end() - keep, dividend.end());
}

}  // namespace lacunary
