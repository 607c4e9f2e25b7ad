#pragma once

#include <complex>
#include <optional>

#include <boost/math/constants/constants.hpp>

#include "lacunary/complex.hpp"
#include "lacunary/errors.hpp"

namespace lacunary {

/// omega^index for omega = exp(2 pi i / order).
struct RootOfUnity {
  int order = 1;
  int index = 0;
  /// Present exactly when omega^index is one of 1, i, -1, -i.
  std::optional<Gaussian> exact;
  std::complex<double> approx;
};

/// Value of exp(2 pi i index / order) in the precision of Real.
template <class RealT>
Complex<RealT> root_of_unity_value(int order, int index) {
  using std::cos;
  using std::sin;
  const int k = ((index % order) + order) % order;
  // Exact quarter turns avoid sin(pi) ~ 1e-16 style residue in the imaginary part.
  if ((4 * k) % order == 0) {
    switch (4 * k / order) {
      case 0: return {RealT(1), RealT(0)};
      case 1: return {RealT(0), RealT(1)};
      case 2: return {RealT(-1), RealT(0)};
      default: return {RealT(0), RealT(-1)};
    }
  }
  const RealT angle = 2 * boost::math::constants::pi<RealT>() * k / order;
  return {cos(angle), sin(angle)};
}

inline RootOfUnity make_root_of_unity(int order, int index) {
  if (order < 1) throw InvalidArgument("root of unity order must be positive");
  RootOfUnity w;
  w.order = order;
  w.index = ((index % order) + order) % order;
  if ((4 * w.index) % order == 0) {
    static const Gaussian units[4] = {Gaussian(BigInt(1), BigInt(0)), Gaussian(BigInt(0), BigInt(1)),
                                      Gaussian(BigInt(-1), BigInt(0)), Gaussian(BigInt(0), BigInt(-1))};
    w.exact = units[4 * w.index / order];
  }
  const auto z = root_of_unity_value<double>(order, w.index);
  w.approx = {z.re, z.im};
  return w;
}

}  // namespace lacunary
