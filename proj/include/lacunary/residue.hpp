#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <utility>

#include <Eigen/Core>

#include "lacunary/errors.hpp"
#include "lacunary/types.hpp"

namespace lacunary {

/// Element of Z/nZ with a runtime modulus 2 <= n < 2^63.
///
/// A default-constructed (or integer-constructed) Residue is *unbound*: it
/// carries a plain signed integer and adopts the modulus of the first bound
/// operand it is combined with. This is what lets Eigen seed accumulators with
/// `Scalar(0)` and build identities with `Scalar(1)` without knowing the ring.
class Residue {
 public:
  using u64 = std::uint64_t;
  using u128 = unsigned __int128;

  static constexpr u64 max_modulus = u64{1} << 63;

  constexpr Residue() = default;
  constexpr Residue(int literal) : Residue(static_cast<long long>(literal)) {}
  constexpr Residue(long literal) : Residue(static_cast<long long>(literal)) {}
  constexpr Residue(long long literal)
      : value_(static_cast<u64>(literal)), modulus_(0) {}

  Residue(long long value, u64 modulus) : modulus_(check_modulus(modulus)) {
    long long r = value % static_cast<long long>(modulus);
    value_ = static_cast<u64>(r < 0 ? r + static_cast<long long>(modulus) : r);
  }

  static Residue from_unsigned(u64 value, u64 modulus) {
    Residue r;
    r.modulus_ = check_modulus(modulus);
    r.value_ = value % modulus;
    return r;
  }

  static Residue from_bigint(const BigInt& value, u64 modulus) {
    Residue r;
    r.modulus_ = check_modulus(modulus);
    r.value_ = floor_mod(value, BigInt(modulus)).convert_to<u64>();
    return r;
  }

  bool bound() const noexcept { return modulus_ != 0; }
  u64 modulus() const noexcept { return modulus_; }

  /// Normalized representative in [0, modulus). Unbound values must not be queried.
  u64 value() const {
    if (!bound()) throw InvalidArgument("unbound residue has no normalized value");
    return value_;
  }

  /// Signed integer carried by an unbound residue.
  long long literal() const noexcept { return static_cast<long long>(value_); }

  /// Representative in (-modulus/2, modulus/2].
  long long centered() const {
    u64 v = value();
    return v > modulus_ / 2 ? -static_cast<long long>(modulus_ - v) : static_cast<long long>(v);
  }

  friend Residue operator+(const Residue& a, const Residue& b) {
    auto [x, y] = align(a, b);
    if (!x.bound()) return Residue(x.literal() + y.literal());
    u64 s = x.value_ + y.value_;
    if (s >= x.modulus_) s -= x.modulus_;
    return raw(s, x.modulus_);
  }

  friend Residue operator-(const Residue& a, const Residue& b) {
    auto [x, y] = align(a, b);
    if (!x.bound()) return Residue(x.literal() - y.literal());
    u64 s = x.value_ >= y.value_ ? x.value_ - y.value_ : x.value_ + (x.modulus_ - y.value_);
    return raw(s, x.modulus_);
  }

  friend Residue operator*(const Residue& a, const Residue& b) {
    auto [x, y] = align(a, b);
    if (!x.bound()) return Residue(x.literal() * y.literal());
    return raw(static_cast<u64>(static_cast<u128>(x.value_) * y.value_ % x.modulus_), x.modulus_);
  }

  Residue operator-() const {
    if (!bound()) return Residue(-literal());
    return raw(value_ == 0 ? 0 : modulus_ - value_, modulus_);
  }

  Residue& operator+=(const Residue& o) { return *this = *this + o; }
  Residue& operator-=(const Residue& o) { return *this = *this - o; }
  Residue& operator*=(const Residue& o) { return *this = *this * o; }

  friend bool operator==(const Residue& a, const Residue& b) {
    if (!a.bound() && !b.bound()) return a.value_ == b.value_;
    auto [x, y] = align(a, b);
    return x.value_ == y.value_;
  }

  /// Multiplicative inverse by the extended Euclidean algorithm.
  Residue inverse() const;

  Residue pow(std::uint64_t exponent) const {
    Residue result = raw(1 % modulus_, modulus_);
    Residue base = *this;
    while (exponent > 0) {
      if (exponent & 1U) result *= base;
      base *= base;
      exponent >>= 1U;
    }
    return result;
  }

 private:
  static u64 check_modulus(u64 modulus) {
    if (modulus < 2 || modulus >= max_modulus)
      throw InvalidArgument("residue modulus must lie in [2, 2^63)");
    return modulus;
  }

  static Residue raw(u64 value, u64 modulus) {
    Residue r;
    r.value_ = value;
    r.modulus_ = modulus;
    return r;
  }

  Residue bind(u64 modulus) const {
    long long v = literal();
    long long m = static_cast<long long>(modulus);
    long long r = v % m;
    return raw(static_cast<u64>(r < 0 ? r + m : r), modulus);
  }

  static std::pair<Residue, Residue> align(const Residue& a, const Residue& b) {
    if (a.bound() && b.bound()) {
      if (a.modulus_ != b.modulus_) throw DimensionMismatch("residues from different rings");
      return {a, b};
    }
    if (a.bound()) return {a, b.bind(a.modulus_)};
    if (b.bound()) return {a.bind(b.modulus_), b};
    return {a, b};
  }

  u64 value_ = 0;
  u64 modulus_ = 0;
};

/// Free-function form of Residue::inverse.
inline Residue residue_inverse(const Residue& a) { return a.inverse(); }

std::ostream& operator<<(std::ostream& os, const Residue& r);

}  // namespace lacunary

namespace Eigen {

template <>
struct NumTraits<lacunary::Residue> : GenericNumTraits<lacunary::Residue> {
  using Real = lacunary::Residue;
  using NonInteger = lacunary::Residue;
  using Nested = lacunary::Residue;
  using Literal = lacunary::Residue;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 2,
    MulCost = 4,
  };
};

}  // namespace Eigen
