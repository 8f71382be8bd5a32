// Copyright 2026 The socnav Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SOCNAV_GEOMETRY_HPP_
#define SOCNAV_GEOMETRY_HPP_

#include <Eigen/Dense>

namespace socnav {

template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
using Points2 = Eigen::Matrix<Scalar, 2, Eigen::Dynamic>;

using Vec2d = Vec2<double>;
using Points2d = Points2<double>;

/// Euclidean distance between two planar points.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar distance(const Eigen::MatrixBase<DerivedA>& a,
                                   const Eigen::MatrixBase<DerivedB>& b) {
  return (a - b).norm();
}

/// Distances from `origin` to every column of `points`.
template <typename DerivedO, typename DerivedP>
Eigen::Array<typename DerivedP::Scalar, 1, Eigen::Dynamic> distances_from(
    const Eigen::MatrixBase<DerivedO>& origin,
    const Eigen::MatrixBase<DerivedP>& points) {
  return (points.colwise() - origin).colwise().norm().array();
}

/// Symmetric matrix of pairwise column distances.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
pairwise_distances(const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = points.cols();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    out.col(j) = (points.colwise() - points.col(j)).colwise().norm().transpose();
  }
  return out;
}

/// Unit vector at `heading` radians.
template <typename Scalar>
Vec2<Scalar> unit_heading(Scalar heading) {
  return Vec2<Scalar>(std::cos(heading), std::sin(heading));
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

}  // namespace socnav

#endif  // SOCNAV_GEOMETRY_HPP_
