#pragma once

// Proper rotations of R^3 and their action on tensors; Haar-uniform sampling
// via normalized Gaussian quaternions.

#include <Eigen/Dense>

#include "ela/harmonic.hpp"
#include "ela/rng.hpp"
#include "ela/tensor.hpp"

namespace ela {

class Rotation {
public:
    /// Validates R^T R = I and det R = +1 within 1e-12; throws DomainError otherwise.
    explicit Rotation(const Eigen::Matrix3d& m);

    static Rotation identity() { return Rotation(); }

    /// Unit quaternion (w, x, y, z) to rotation matrix; the quaternion is normalized first.
    static Rotation from_quaternion(double w, double x, double y, double z);

    const Eigen::Matrix3d& matrix() const { return m_; }
    Rotation inverse() const;
    friend Rotation operator*(const Rotation& a, const Rotation& b);

private:
    Rotation() : m_(Eigen::Matrix3d::Identity()) {}
    struct trusted_tag {};
    Rotation(const Eigen::Matrix3d& m, trusted_tag) : m_(m) {}
    Eigen::Matrix3d m_;
};

/// Haar-uniform rotation from a caller-owned seeded generator (quaternion method).
Rotation random_rotation(Rng& rng);
Rotation random_rotation(std::uint64_t seed);

Tensor<double> rotate(const Rotation& g, const Tensor<double>& t);
SymTensor<double> rotate(const Rotation& g, const SymTensor<double>& t);
HarmonicTensor<double> rotate(const Rotation& g, const HarmonicTensor<double>& t);

}  // namespace ela
