#include "lacunary/congruences.hpp"

#include <array>

#include "lacunary/engines.hpp"
#include "lacunary/errors.hpp"

namespace lacunary {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 e, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> small{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 q : small) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These twelve bases are deterministic for all n < 3.3 * 10^24.
  for (u64 a : small) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> primes_between(u64 lo, u64 hi) {
  std::vector<u64> out;
  for (u64 n = lo; n <= hi && n >= lo; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

PrimeContext::PrimeContext(u64 p) : p_(p), p_squared_(0) {
  if (p < 3 || !is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not an odd prime");
  if (p > max_prime) throw RangeError("prime too large: p^2 must stay below 2^63");
  p_squared_ = p * p;
  if (p <= inverse_table_limit) {
    inverses_.assign(p, 0);
    inverses_[1] = 1;
    for (u64 j = 2; j < p; ++j) inverses_[j] = (p - mul_mod(p / j, inverses_[p % j], p)) % p;
  }
}

Residue PrimeContext::inverse_mod_p(u64 j) const {
  if (j == 0 || j >= p_) throw NotInvertible("inverse_mod_p: index outside 1..p-1");
  if (!inverses_.empty()) return Residue::from_unsigned(inverses_[j], p_);
  return Residue::from_unsigned(j, p_).inverse();
}

Residue PrimeContext::inverse_mod_p2(u64 j) const {
  if (j == 0 || j >= p_) throw NotInvertible("inverse_mod_p2: index outside 1..p-1");
  return Residue::from_unsigned(j, p_squared_).inverse();
}

Residue PrimeContext::divide_by_p(const Residue& v) const {
  if (v.modulus() != p_squared_) throw DimensionMismatch("divide_by_p expects a residue mod p^2");
  if (v.value() % p_ != 0)
    throw DivisibilityError("value " + std::to_string(v.value()) + " is not divisible by p = " + std::to_string(p_));
  return Residue::from_unsigned(v.value() / p_, p_);
}

std::string_view to_string(CheckOutcome outcome) {
  switch (outcome) {
    case CheckOutcome::holds: return "holds";
    case CheckOutcome::fails: return "FAILS";
    default: return "n/a";
  }
}

std::pair<u64, u64> lerch_range(const PrimeContext& ctx, int k, int n) {
  if (n < 1 || k < 0 || k >= n) throw InvalidArgument("lerch_range requires 0 <= k < N");
  const u64 p = ctx.p();
  return {static_cast<u64>(k) * p / n + 1, static_cast<u64>(k + 1) * p / n};
}

bool lerch_range_nonempty(const PrimeContext& ctx, int k, int n) {
  auto [lo, hi] = lerch_range(ctx, k, n);
  if (hi >= ctx.p()) hi = ctx.p() - 1;
  return lo <= hi;
}

HarmonicResidue lerch_sum(const PrimeContext& ctx, int k, int n, bool alternating) {
  if (!lerch_range_nonempty(ctx, k, n))
    throw EmptyRangeError("s(" + std::to_string(k) + ", " + std::to_string(n) + ") is empty for p = " +
                          std::to_string(ctx.p()));
  auto [lo, hi] = lerch_range(ctx, k, n);
  if (hi >= ctx.p()) hi = ctx.p() - 1;  // j = p is excluded
  Residue total = ctx.mod_p(0);
  for (u64 j = lo; j <= hi; ++j) {
    const Residue inv = ctx.inverse_mod_p(j);
    if (alternating && j % 2 == 1)
      total -= inv;
    else
      total += inv;
  }
  return {total, k, n, alternating};
}

HarmonicResidue harmonic_floor(const PrimeContext& ctx, int n) {
  if (n < 2) throw InvalidArgument("harmonic_floor requires N >= 2");
  return lerch_sum(ctx, 0, n, false);
}

Residue fermat_quotient(const PrimeContext& ctx, u64 base) {
  if (base % ctx.p() == 0) throw InvalidArgument("fermat_quotient: base divisible by p");
  const Residue power = Residue::from_unsigned(base, ctx.p_squared()).pow(ctx.p() - 1);
  return ctx.divide_by_p(power - ctx.mod_p2(1));
}

Residue sum_mod_p2(int n, Kind kind, const PrimeContext& ctx) {
  return poly_engine(SumParams(n, 0, ctx.p(), kind), ctx.p_squared());
}

Residue sun_quotient(const PrimeContext& ctx, int n, Kind kind) {
  const Residue t = sum_mod_p2(n, kind, ctx);
  return ctx.divide_by_p(ctx.mod_p2(n) * (ctx.mod_p2(1) - t));
}

namespace {

// Shared body of the two Sun congruences: `harmonic_parity` is the parity of N
// for which the right side is s(0, N); the other parity uses s*(0, N) = -s(1, 2N).
CheckOutcome sun_check(const PrimeContext& ctx, int n, Kind kind, int harmonic_parity) {
  if (n < 2) throw InvalidArgument("Sun congruences require N >= 2");
  if (!lerch_range_nonempty(ctx, 0, n)) return CheckOutcome::not_applicable;
  const Residue lhs = sun_quotient(ctx, n, kind);
  if (n % 2 == harmonic_parity) return lhs == lerch_sum(ctx, 0, n, false).value ? CheckOutcome::holds : CheckOutcome::fails;
  const Residue alternating = lerch_sum(ctx, 0, n, true).value;
  if (!lerch_range_nonempty(ctx, 1, 2 * n)) return CheckOutcome::not_applicable;
  const Residue upper = -lerch_sum(ctx, 1, 2 * n, false).value;
  return lhs == alternating && lhs == upper ? CheckOutcome::holds : CheckOutcome::fails;
}

}  // namespace

CheckOutcome sun_plain_check(const PrimeContext& ctx, int n) { return sun_check(ctx, n, Kind::plain, 0); }

CheckOutcome sun_star_check(const PrimeContext& ctx, int n) { return sun_check(ctx, n, Kind::alternating, 1); }

CheckOutcome supplement_check(const PrimeContext& ctx, int n) {
  if (n < 1) throw InvalidArgument("supplement_check requires N >= 1");
  if (!lerch_range_nonempty(ctx, 0, 2 * n) || !lerch_range_nonempty(ctx, 0, n)) return CheckOutcome::not_applicable;
  const Residue lhs = lerch_sum(ctx, 0, 2 * n, false).value;
  const Residue rhs = lerch_sum(ctx, 0, n, false).value + lerch_sum(ctx, 0, n, true).value;
  return lhs == rhs ? CheckOutcome::holds : CheckOutcome::fails;
}

bool lehmer_check(const PrimeContext& ctx, int n, int j) {
  if (n < 1 || j < 0) throw InvalidArgument("lehmer_check requires N >= 1 and j >= 0");
  const u64 p = ctx.p();
  const u64 k = static_cast<u64>(j) * p / n;
  if (k < 1 || k > p - 1) throw RangeError("floor(jp/N) = " + std::to_string(k) + " lies outside 1..p-1");

  Residue binom = ctx.mod_p2(1);
  Residue harmonic = ctx.mod_p2(0);
  for (u64 i = 1; i <= k; ++i) {
    const Residue inv = ctx.inverse_mod_p2(i);
    binom *= Residue::from_unsigned(p - i, ctx.p_squared()) * inv;
    harmonic += inv;
  }
  Residue rhs = ctx.mod_p2(1) - Residue::from_unsigned(p, ctx.p_squared()) * harmonic;
  if (k % 2 == 1) rhs = -rhs;
  return binom == rhs;
}

std::vector<int> flt_scan_moduli() {
  std::vector<int> out;
  for (int n = 2; n <= 23; ++n) out.push_back(n);
  for (int n = 24; n <= 46; n += 2) out.push_back(n);
  return out;
}

CriterionReport flt_criterion_scan(const PrimeContext& ctx) {
  CriterionReport report;
  report.p = ctx.p();
  for (int n : flt_scan_moduli()) {
    if (static_cast<u64>(n) >= ctx.p()) {
      report.skipped.push_back(n);
      continue;
    }
    CriterionEntry entry;
    entry.n = n;
    entry.t_mod_p2 = sum_mod_p2(n, Kind::plain, ctx);
    // T(N, 0, p) = 1 (mod p) for N < p; anything else is a library bug.
    entry.quotient = ctx.divide_by_p(entry.t_mod_p2 - ctx.mod_p2(1));
    entry.one_mod_p2 = entry.t_mod_p2.value() == 1;
    if (entry.one_mod_p2) report.hits.push_back(n);
    report.entries.push_back(entry);
  }
  report.flt_first_case_obstruction_met = report.skipped.empty() && report.hits.size() == report.entries.size();
  return report;
}

}  // namespace lacunary
