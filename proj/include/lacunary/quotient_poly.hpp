#pragma once

#include <cstdint>
#include <utility>

#include <Eigen/Core>

#include "lacunary/errors.hpp"
#include "lacunary/matrix.hpp"
#include "lacunary/ring.hpp"

namespace lacunary {

/// Element of R[x]/(x^N - sigma), sigma = +1 or -1.
///
/// Multiplication by x is the unit circulant (sigma = +1) or its skew version
/// (sigma = -1), so powers of (1 + x) carry the first rows of C_N^m and (C*_N)^m.
template <class S>
class QuotientPoly {
 public:
  QuotientPoly(RingVector<S> coeffs, int sigma) : coeffs_(std::move(coeffs)), sigma_(sigma) {
    if (coeffs_.size() < 2) throw InvalidArgument("QuotientPoly: dimension N must be >= 2");
    if (sigma_ != 1 && sigma_ != -1) throw InvalidArgument("QuotientPoly: sigma must be +1 or -1");
  }

  /// The constant `c` in R[x]/(x^n - sigma).
  static QuotientPoly constant(Eigen::Index n, int sigma, const S& c) {
    RingVector<S> v = RingVector<S>::Constant(n, ring_zero(c));
    v(0) = c;
    return QuotientPoly(std::move(v), sigma);
  }

  /// 1 + x, the generator of the lacunary sums. `unit` fixes the coefficient ring.
  static QuotientPoly one_plus_x(Eigen::Index n, int sigma, const S& unit = S(1)) {
    RingVector<S> v = RingVector<S>::Constant(n, ring_zero(unit));
    v(0) = unit;
    v(1) = unit;
    return QuotientPoly(std::move(v), sigma);
  }

  Eigen::Index dim() const noexcept { return coeffs_.size(); }
  int sigma() const noexcept { return sigma_; }
  const RingVector<S>& coeffs() const noexcept { return coeffs_; }
  const S& operator[](Eigen::Index k) const { return coeffs_(k); }

  friend bool operator==(const QuotientPoly& a, const QuotientPoly& b) {
    return a.sigma_ == b.sigma_ && matrices_equal(a.coeffs_, b.coeffs_);
  }

 private:
  RingVector<S> coeffs_;
  int sigma_;
};

/// Product reduced eagerly by x^N = sigma.
template <class S>
QuotientPoly<S> quotient_mul(const QuotientPoly<S>& p1, const QuotientPoly<S>& p2) {
  const Eigen::Index n = p1.dim();
  if (n != p2.dim() || p1.sigma() != p2.sigma())
    throw DimensionMismatch("quotient_mul: operands differ in N or sigma");
  if (!same_ring(p1[0], p2[0])) throw DimensionMismatch("quotient_mul: operands over different rings");

  const S zero = ring_zero(p1[0]);
  RingVector<S> out = RingVector<S>::Constant(n, zero);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (p1[i] == zero) continue;
    for (Eigen::Index j = 0; j < n; ++j) {
      const Eigen::Index k = i + j;
      if (k < n) {
        out(k) += p1[i] * p2[j];
      } else if (p1.sigma() > 0) {
        out(k - n) += p1[i] * p2[j];
      } else {
        out(k - n) -= p1[i] * p2[j];
      }
    }
  }
  return QuotientPoly<S>(std::move(out), p1.sigma());
}

template <class S>
QuotientPoly<S> quotient_pow(const QuotientPoly<S>& base, std::uint64_t exponent) {
  const auto one = QuotientPoly<S>::constant(base.dim(), base.sigma(), ring_one(base[0]));
  return power(base, exponent, one, [](const QuotientPoly<S>& a, const QuotientPoly<S>& b) {
    return quotient_mul(a, b);
  });
}

}  // namespace lacunary
