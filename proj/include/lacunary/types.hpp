#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <string>

namespace lacunary {

namespace mp = boost::multiprecision;

// Expression templates are disabled so the types behave as plain values inside
// Eigen expressions and generic code.
using BigInt = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

/// 50 decimal digits; enough to round lacunary sums exactly up to m ~ 150.
using Real = mp::number<mp::cpp_bin_float<50>, mp::et_off>;

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Mathematical floor modulus, result in [0, m).
inline BigInt floor_mod(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace lacunary
