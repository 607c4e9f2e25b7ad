#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "lacunary/errors.hpp"
#include "lacunary/ring.hpp"

namespace lacunary {

/// Dense square matrix over any of the library's scalar rings.
template <class S>
using RingMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class S>
using RingVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

/// Identity of the same size and ring as `like` (residue moduli preserved).
template <class Derived>
auto identity_like(const Eigen::MatrixBase<Derived>& like) {
  using S = typename Derived::Scalar;
  const S& proto = like(0, 0);
  RingMatrix<S> id = RingMatrix<S>::Constant(like.rows(), like.cols(), ring_zero(proto));
  for (Eigen::Index i = 0; i < like.rows(); ++i) id(i, i) = ring_one(proto);
  return id;
}

template <class S>
RingMatrix<S> matrix_mul(const RingMatrix<S>& a, const RingMatrix<S>& b) {
  if (a.cols() != b.rows() || a.rows() != a.cols() || b.rows() != b.cols())
    throw DimensionMismatch("matrix_mul: operands must be square of equal dimension");
  if (a.size() > 0 && !same_ring(a(0, 0), b(0, 0)))
    throw DimensionMismatch("matrix_mul: operands over different rings");
  RingMatrix<S> out = a.lazyProduct(b);
  return out;
}

template <class S>
RingMatrix<S> matrix_pow(const RingMatrix<S>& a, std::uint64_t exponent) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw DimensionMismatch("matrix_pow: matrix must be square and non-empty");
  return power(a, exponent, identity_like(a), [](const RingMatrix<S>& x, const RingMatrix<S>& y) {
    return matrix_mul(x, y);
  });
}

/// Entry-wise equality. Eigen's operator== is avoided because boost's generic
/// number comparisons get instantiated against Eigen expression types.
template <class A, class B>
bool matrices_equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

/// True when every row is the previous row rotated right by one place.
template <class Derived>
bool is_circulant(const Eigen::MatrixBase<Derived>& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) return false;
  for (Eigen::Index i = 1; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (!(m(i, j) == m(i - 1, (j + n - 1) % n))) return false;
  return true;
}

}  // namespace lacunary
