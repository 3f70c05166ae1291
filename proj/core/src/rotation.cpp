#include "ela/rotation.hpp"

namespace ela {

Rotation::Rotation(const Eigen::Matrix3d& m) : m_(m) {
    const double ortho = (m.transpose() * m - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
    if (ortho > 1e-12 || std::abs(m.determinant() - 1.0) > 1e-12)
        throw DomainError("Rotation: matrix is not a proper rotation");
}

Rotation Rotation::from_quaternion(double w, double x, double y, double z) {
    const double n = std::sqrt(w * w + x * x + y * y + z * z);
    if (n == 0.0) throw DomainError("Rotation: zero quaternion");
    w /= n;
    x /= n;
    y /= n;
    z /= n;
    Eigen::Matrix3d m;
    m << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
        2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
        2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
    return Rotation(m, trusted_tag{});
}

Rotation Rotation::inverse() const { return Rotation(m_.transpose(), trusted_tag{}); }

Rotation operator*(const Rotation& a, const Rotation& b) {
    return Rotation(Eigen::Matrix3d(a.m_ * b.m_), Rotation::trusted_tag{});
}

Rotation random_rotation(Rng& rng) {
    const double w = rng.normal();
    const double x = rng.normal();
    const double y = rng.normal();
    const double z = rng.normal();
    return Rotation::from_quaternion(w, x, y, z);
}

Rotation random_rotation(std::uint64_t seed) {
    Rng rng(seed);
    return random_rotation(rng);
}

namespace {
struct RowAdapter {
    double r[3][3];
    explicit RowAdapter(const Eigen::Matrix3d& m) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r[i][j] = m(i, j);
    }
    const double* operator[](int i) const { return r[i]; }
};
}  // namespace

Tensor<double> rotate(const Rotation& g, const Tensor<double>& t) {
    return act(RowAdapter(g.matrix()), t);
}

SymTensor<double> rotate(const Rotation& g, const SymTensor<double>& t) {
    return SymTensor<double>::trusted(act(RowAdapter(g.matrix()), t.raw()));
}

HarmonicTensor<double> rotate(const Rotation& g, const HarmonicTensor<double>& t) {
    return HarmonicTensor<double>::trusted(rotate(g, t.sym()));
}

}  // namespace ela
