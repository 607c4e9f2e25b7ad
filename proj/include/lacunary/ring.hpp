#pragma once

#include "lacunary/complex.hpp"
#include "lacunary/residue.hpp"
#include "lacunary/types.hpp"

namespace lacunary {

// Ring constants shaped after an existing element, so residues stay bound to
// their modulus. The generic versions cover integers, reals, and complexes.

template <class S>
S ring_zero(const S&) {
  return S(0);
}

template <class S>
S ring_one(const S&) {
  return S(1);
}

inline Residue ring_zero(const Residue& like) {
  return like.bound() ? Residue::from_unsigned(0, like.modulus()) : Residue(0);
}

inline Residue ring_one(const Residue& like) {
  return like.bound() ? Residue::from_unsigned(1, like.modulus()) : Residue(1);
}

template <class T>
Complex<T> ring_zero(const Complex<T>& like) {
  return {ring_zero(like.re), ring_zero(like.re)};
}

template <class T>
Complex<T> ring_one(const Complex<T>& like) {
  return {ring_one(like.re), ring_zero(like.re)};
}

/// Element-wise ring identity: elements from different residue rings compare unequal
/// instead of throwing.
template <class S>
bool same_ring(const S&, const S&) {
  return true;
}

inline bool same_ring(const Residue& a, const Residue& b) {
  return !a.bound() || !b.bound() || a.modulus() == b.modulus();
}

/// Square-and-multiply over any multiplicative monoid with a ring_one.
template <class S, class Mul>
S power(const S& base, std::uint64_t exponent, const S& one, Mul mul) {
  S result = one;
  S square = base;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, square);
    exponent >>= 1U;
    if (exponent > 0) square = mul(square, square);
  }
  return result;
}

}  // namespace lacunary
