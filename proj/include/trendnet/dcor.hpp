#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "trendnet/error.hpp"

namespace trendnet {

template <typename Scalar>
using SquareMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Pairwise distances |x_i - x_j| with row means and column means subtracted
/// and the grand mean added back.
template <typename Derived>
SquareMatrix<typename Derived::Scalar> double_centered_distances(const Eigen::MatrixBase<Derived>& x) {
    EIGEN_STATIC_ASSERT_VECTOR_ONLY(Derived);
    using Scalar = typename Derived::Scalar;
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> v = x.derived().reshaped();
    const Eigen::Index n = v.size();

    SquareMatrix<Scalar> a = (v.replicate(1, n) - v.transpose().replicate(n, 1)).cwiseAbs();
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> row_means = a.rowwise().mean();
    const Eigen::Matrix<Scalar, 1, Eigen::Dynamic> col_means = a.colwise().mean();
    const Scalar grand_mean = a.mean();
    a.colwise() -= row_means;
    a.rowwise() -= col_means;
    a.array() += grand_mean;
    return a;
}

/// Squared sample distance variance of a double-centered distance matrix.
template <typename Derived>
typename Derived::Scalar distance_variance_sq(const Eigen::MatrixBase<Derived>& centered) {
    const auto n = static_cast<typename Derived::Scalar>(centered.rows());
    return centered.squaredNorm() / (n * n);
}

/// Distance correlation from two double-centered matrices and their squared
/// distance variances. Returns 0 when either variance is 0.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar distance_correlation_centered(const Eigen::MatrixBase<DerivedA>& a,
                                                        const Eigen::MatrixBase<DerivedB>& b,
                                                        typename DerivedA::Scalar dvar_a,
                                                        typename DerivedA::Scalar dvar_b) {
    using Scalar = typename DerivedA::Scalar;
    if (dvar_a <= Scalar(0) || dvar_b <= Scalar(0)) {
        return Scalar(0);
    }
    const auto n = static_cast<Scalar>(a.rows());
    const Scalar dcov_sq = std::max(Scalar(0), a.cwiseProduct(b).sum() / (n * n));
    const Scalar r = std::sqrt(dcov_sq / std::sqrt(dvar_a * dvar_b));
    return std::clamp(r, Scalar(0), Scalar(1));
}

/// Sample distance correlation of two equal-length vectors, in [0, 1].
/// A constant input has zero distance variance and yields 0.
/// Throws LengthMismatch, SeriesTooShort (n < 2), or NonFiniteInput.
template <typename DerivedX, typename DerivedY>
typename DerivedX::Scalar distance_correlation(const Eigen::MatrixBase<DerivedX>& x,
                                               const Eigen::MatrixBase<DerivedY>& y) {
    if (x.size() != y.size()) {
        throw Error(Errc::LengthMismatch, "vectors of length " + std::to_string(x.size()) + " and " +
                                              std::to_string(y.size()));
    }
    if (x.size() < 2) {
        throw Error(Errc::SeriesTooShort, "distance correlation needs at least 2 observations");
    }
    if (!x.allFinite() || !y.allFinite()) {
        throw Error(Errc::NonFiniteInput, "distance correlation input contains NaN or infinity");
    }
    const auto a = double_centered_distances(x);
    const auto b = double_centered_distances(y);
    return distance_correlation_centered(a, b, distance_variance_sq(a), distance_variance_sq(b));
}

}  // namespace trendnet
