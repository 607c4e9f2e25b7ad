#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "lacunary/lacunary.hpp"
#include "lacunary/residue.hpp"

namespace lacunary {

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Primes in [lo, hi].
std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi);

/// An odd prime p with p^2 representable as a Residue modulus.
///
/// Immutable after construction. For p up to `inverse_table_limit` a table of
/// j^-1 mod p is built eagerly; larger primes invert on demand.
class PrimeContext {
 public:
  static constexpr std::uint64_t inverse_table_limit = 1U << 16;
  /// Largest p with p^2 < 2^63.
  static constexpr std::uint64_t max_prime = 3037000493ULL;

  explicit PrimeContext(std::uint64_t p);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t p_squared() const noexcept { return p_squared_; }

  Residue mod_p(long long v) const { return Residue(v, p_); }
  Residue mod_p2(long long v) const { return Residue(v, p_squared_); }

  /// j^-1 mod p for 0 < j < p.
  Residue inverse_mod_p(std::uint64_t j) const;
  /// j^-1 mod p^2 for 0 < j < p.
  Residue inverse_mod_p2(std::uint64_t j) const;

  /// Lifts a residue mod p^2 that is divisible by p to its quotient mod p.
  Residue divide_by_p(const Residue& mod_p2_value) const;

 private:
  std::uint64_t p_;
  std::uint64_t p_squared_;
  std::vector<std::uint64_t> inverses_;
};

/// Result of a summation-range sensitive check. Empty ranges are not applicable.
enum class CheckOutcome { holds, fails, not_applicable };

std::string_view to_string(CheckOutcome outcome);

struct HarmonicResidue {
  Residue value;
  int k = 0;
  int n = 0;
  bool alternating = false;
};

/// Bounds floor(kp/N) + 1 .. floor((k+1)p/N) of the k-th block, before excluding j = p.
std::pair<std::uint64_t, std::uint64_t> lerch_range(const PrimeContext& ctx, int k, int n);

/// True when the k-th block holds at least one index other than p.
bool lerch_range_nonempty(const PrimeContext& ctx, int k, int n);

/// H_{floor(p/N)} mod p.
HarmonicResidue harmonic_floor(const PrimeContext& ctx, int n);

/// s(k, N) (or s*(k, N) when alternating): sum of 1/j (or (-1)^j / j) over the k-th block, j != p.
HarmonicResidue lerch_sum(const PrimeContext& ctx, int k, int n, bool alternating);

/// (base^(p-1) - 1) / p mod p.
Residue fermat_quotient(const PrimeContext& ctx, std::uint64_t base);

/// T(N, 0, p) or T*(N, 0, p) modulo p^2.
Residue sum_mod_p2(int n, Kind kind, const PrimeContext& ctx);

/// N (1 - T(N, 0, p)) / p mod p (T* when kind is alternating). Throws
/// DivisibilityError when the numerator is not divisible by p.
Residue sun_quotient(const PrimeContext& ctx, int n, Kind kind);

/// N(1 - T(N,0,p))/p = s(0,N) for even N, = s*(0,N) = -s(1,2N) for odd N (mod p).
CheckOutcome sun_plain_check(const PrimeContext& ctx, int n);

/// N(1 - T*(N,0,p))/p = s(0,N) for odd N, = s*(0,N) = -s(1,2N) for even N (mod p).
CheckOutcome sun_star_check(const PrimeContext& ctx, int n);

/// s(0, 2N) = s(0, N) + s*(0, N) (mod p).
CheckOutcome supplement_check(const PrimeContext& ctx, int n);

/// C(p-1, k) = (-1)^k (1 - p H_k) mod p^2 with k = floor(jp/N). Throws RangeError unless 1 <= k <= p-1.
bool lehmer_check(const PrimeContext& ctx, int n, int j);

/// Moduli examined by the first-case criterion: 2..23 and the even values 24..46.
std::vector<int> flt_scan_moduli();

struct CriterionEntry {
  int n = 0;
  Residue t_mod_p2;
  /// (T(N, 0, p) - 1) / p mod p.
  Residue quotient;
  bool one_mod_p2 = false;
};

struct CriterionReport {
  std::uint64_t p = 0;
  std::vector<CriterionEntry> entries;
  /// Moduli N >= p, where the block sums are empty and the class of 0 meets j = p.
  std::vector<int> skipped;
  /// Moduli with T(N, 0, p) = 1 (mod p^2).
  std::vector<int> hits;
  /// Every modulus was scanned and every one is a hit.
  bool flt_first_case_obstruction_met = false;
};

CriterionReport flt_criterion_scan(const PrimeContext& ctx);

}  // namespace lacunary
