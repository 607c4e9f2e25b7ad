#pragma once

#include <ostream>

#include <Eigen/Core>

#include "lacunary/types.hpp"

namespace lacunary {

/// x + iy over an arbitrary scalar ring T.
///
/// `Complex<BigInt>` is the ring of Gaussian integers; `Complex<Real>` and
/// `Complex<double>` are approximate complex numbers. std::complex is not used
/// because its behaviour is unspecified for non floating-point T.
template <class T>
struct Complex {
  T re{};
  T im{};

  Complex() = default;
  Complex(int re_) : re(re_), im(0) {}
  Complex(T re_) : re(std::move(re_)), im(0) {}
  Complex(T re_, T im_) : re(std::move(re_)), im(std::move(im_)) {}

  static Complex i() { return Complex(T(0), T(1)); }

  Complex conj() const { return Complex(re, -im); }
  T norm() const { return re * re + im * im; }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Complex operator-() const { return {-re, -im}; }

  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

  friend std::ostream& operator<<(std::ostream& os, const Complex& z) {
    return os << '(' << z.re << (z.im < 0 ? " - " : " + ") << (z.im < 0 ? T(-z.im) : z.im) << "i)";
  }
};

using Gaussian = Complex<BigInt>;
using ComplexReal = Complex<Real>;

}  // namespace lacunary

namespace Eigen {

template <class T>
struct NumTraits<lacunary::Complex<T>> : GenericNumTraits<lacunary::Complex<T>> {
  using Real = lacunary::Complex<T>;
  using NonInteger = lacunary::Complex<T>;
  using Nested = lacunary::Complex<T>;
  using Literal = lacunary::Complex<T>;
  // Reported as non-complex: conjugation-aware Eigen kernels are never needed here.
  enum {
    IsComplex = 0,
    IsInteger = NumTraits<T>::IsInteger,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2 * NumTraits<T>::ReadCost,
    AddCost = 2 * NumTraits<T>::AddCost,
    MulCost = 4 * NumTraits<T>::MulCost + 2 * NumTraits<T>::AddCost,
  };
};

}  // namespace Eigen
