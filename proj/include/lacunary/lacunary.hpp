#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lacunary/types.hpp"

namespace lacunary {

/// Plain sums T(N, r, m) or alternating sums T*(N, r, m).
enum class Kind { plain, alternating };

std::string_view to_string(Kind kind);
Kind parse_kind(std::string_view text);

/// Query object (N, r, m, kind). r is normalized into [0, N) on construction.
class SumParams {
 public:
  SumParams(long long n, long long r, std::uint64_t m, Kind kind = Kind::plain);

  int n() const noexcept { return n_; }
  int r() const noexcept { return r_; }
  std::uint64_t m() const noexcept { return m_; }
  Kind kind() const noexcept { return kind_; }

  SumParams with_kind(Kind k) const { return SumParams(n_, r_, m_, k); }

  friend bool operator==(const SumParams&, const SumParams&) = default;

 private:
  int n_;
  int r_;
  std::uint64_t m_;
  Kind kind_;
};

struct LacunaryValue {
  BigInt value;
  SumParams params;

  friend bool operator==(const LacunaryValue&, const LacunaryValue&) = default;
};

/// Row m of Pascal's triangle, C(m, 0) .. C(m, m).
std::vector<BigInt> binomial_row(std::uint64_t m);

BigInt binomial(std::uint64_t m, std::uint64_t k);

/// Sum of C(m, j) over j = r (mod N), by enumeration.
LacunaryValue direct_sum(const SumParams& params);

/// Sum of (-1)^((j - r)/N) C(m, j) over j = r (mod N), by enumeration.
LacunaryValue direct_sum_alternating(const SumParams& params);

/// Dispatches on params.kind().
LacunaryValue direct_value(const SumParams& params);

/// T*(N, r, m) through 2 T(2N, r, m) - T(N, r, m).
LacunaryValue star_from_plain(int n, int r, std::uint64_t m);

/// T(N, 0, m) for even N as (T(N/2, 0, m) + T*(N/2, 0, m)) / 2.
LacunaryValue plain_from_halves(int n, std::uint64_t m);

}  // namespace lacunary
