#include "lacunary/lacunary.hpp"

#include <algorithm>

#include "lacunary/errors.hpp"

namespace lacunary {

std::string_view to_string(Kind kind) { return kind == Kind::plain ? "plain" : "star"; }

Kind parse_kind(std::string_view text) {
  if (text == "plain" || text == "T") return Kind::plain;
  if (text == "star" || text == "alternating" || text == "T*") return Kind::alternating;
  throw InvalidArgument("unknown kind '" + std::string(text) + "' (expected plain or star)");
}

SumParams::SumParams(long long n, long long r, std::uint64_t m, Kind kind) : m_(m), kind_(kind) {
  if (n < 2) throw InvalidArgument("N must be at least 2");
  if (n > 1'000'000) throw InvalidArgument("N is unreasonably large");
  n_ = static_cast<int>(n);
  r_ = static_cast<int>(((r % n) + n) % n);
}

std::vector<BigInt> binomial_row(std::uint64_t m) {
  std::vector<BigInt> row;
  row.reserve(m + 1);
  BigInt c = 1;
  row.push_back(c);
  for (std::uint64_t j = 1; j <= m; ++j) {
    c *= (m - j + 1);
    c /= j;
    row.push_back(c);
  }
  return row;
}

BigInt binomial(std::uint64_t m, std::uint64_t k) {
  if (k > m) return 0;
  k = std::min(k, m - k);
  BigInt c = 1;
  for (std::uint64_t j = 1; j <= k; ++j) {
    c *= (m - k + j);
    c /= j;
  }
  return c;
}

namespace {

// Also accepts n = 1, which plain_from_halves needs for N = 2.
BigInt enumerate(int n, int r, std::uint64_t m, bool alternating) {
  const auto row = binomial_row(m);
  BigInt total = 0;
  bool negative = false;
  for (std::uint64_t j = static_cast<std::uint64_t>(r); j <= m; j += static_cast<std::uint64_t>(n)) {
    if (alternating && negative)
      total -= row[j];
    else
      total += row[j];
    negative = !negative;
  }
  return total;
}

}  // namespace

LacunaryValue direct_sum(const SumParams& params) {
  return {enumerate(params.n(), params.r(), params.m(), false), params.with_kind(Kind::plain)};
}

LacunaryValue direct_sum_alternating(const SumParams& params) {
  return {enumerate(params.n(), params.r(), params.m(), true), params.with_kind(Kind::alternating)};
}

LacunaryValue direct_value(const SumParams& params) {
  return params.kind() == Kind::plain ? direct_sum(params) : direct_sum_alternating(params);
}

LacunaryValue star_from_plain(int n, int r, std::uint64_t m) {
  const SumParams params(n, r, m, Kind::alternating);
  const BigInt doubled = direct_sum(SumParams(2LL * n, params.r(), m)).value;
  const BigInt single = direct_sum(params).value;
  return {2 * doubled - single, params};
}

LacunaryValue plain_from_halves(int n, std::uint64_t m) {
  if (n % 2 != 0) throw ParityError("plain_from_halves requires even N, got " + std::to_string(n));
  const BigInt total = enumerate(n / 2, 0, m, false) + enumerate(n / 2, 0, m, true);
  if (total % 2 != 0) throw DivisibilityError("T(N/2) + T*(N/2) is odd");
  return {total / 2, SumParams(n, 0, m)};
}

}  // namespace lacunary
