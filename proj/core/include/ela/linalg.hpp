#pragma once

// Conversions between low-order tensors and Eigen types.

#include <Eigen/Dense>

#include "ela/harmonic.hpp"
#include "ela/tensor.hpp"

namespace ela {

inline Eigen::Matrix3d to_matrix(const SymTensor<double>& a) {
    if (a.order() != 2) throw ArityError("to_matrix: order-2 tensor required");
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = a(i, j);
    return m;
}

inline SymTensor<double> from_matrix(const Eigen::Matrix3d& m, double tol = 1e-10) {
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > tol * std::max(1e-300, m.norm()))
        throw FormatError("from_matrix: matrix is not symmetric");
    Tensor<double> t(2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t(i, j) = 0.5 * (m(i, j) + m(j, i));
    return SymTensor<double>::trusted(std::move(t));
}

inline Eigen::Vector3d to_vector(const Tensor<double>& v) {
    if (v.order() != 1) throw ArityError("to_vector: order-1 tensor required");
    return {v[0], v[1], v[2]};
}

inline Tensor<double> from_vector(const Eigen::Vector3d& x) {
    Tensor<double> t(1);
    t[0] = x[0];
    t[1] = x[1];
    t[2] = x[2];
    return t;
}

/// Deviatoric (traceless) part of a symmetric matrix.
inline Eigen::Matrix3d deviator(const Eigen::Matrix3d& m) {
    return m - (m.trace() / 3.0) * Eigen::Matrix3d::Identity();
}

}  // namespace ela
