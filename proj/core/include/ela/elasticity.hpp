#pragma once

// The elasticity tensor (order 4, minor + major index symmetries, 21
// independent components), its Voigt 6x6 form, and the explicit harmonic
// decomposition E = (lambda, mu, d', v', H).

#include <Eigen/Dense>
#include <array>
#include <span>

#include "ela/harmonic.hpp"
#include "ela/linalg.hpp"
#include "ela/rng.hpp"
#include "ela/rotation.hpp"
#include "ela/tensor.hpp"

namespace ela {

using Voigt6 = Eigen::Matrix<double, 6, 6>;

class ElasticityTensor {
public:
    ElasticityTensor() : t_(4) {}

    /// 81 components in row-major (i,j,k,l) order. The minor and major
    /// symmetries are verified to hold exactly; FormatError otherwise.
    static ElasticityTensor from_components(std::span<const double> c);

    /// Symmetric 6x6 stiffness in plain Voigt convention (11,22,33,23,13,12;
    /// C_IJ = E_ijkl, no Kelvin factors). FormatError if not symmetric within
    /// 1e-10 relative.
    static ElasticityTensor from_voigt(const Voigt6& c);

    /// Wraps an order-4 tensor the caller guarantees to carry the elasticity
    /// symmetries (used for rotated copies; symmetries are preserved by the
    /// rotation action).
    static ElasticityTensor trusted(Tensor<double> t);

    /// E_ijkl = c1 d_ij d_kl + c2 (d_ik d_jl + d_il d_jk).
    static ElasticityTensor isotropic(double c1, double c2);

    /// 21 independent Voigt slots sampled i.i.d. standard normal.
    static ElasticityTensor random(Rng& rng);

    double operator()(int i, int j, int k, int l) const { return t_(i, j, k, l); }
    const Tensor<double>& as_tensor() const { return t_; }
    Voigt6 to_voigt() const;
    double norm() const { return ela::norm(t_); }

    friend ElasticityTensor operator+(const ElasticityTensor& a, const ElasticityTensor& b) {
        return ElasticityTensor(a.t_ + b.t_);
    }
    friend ElasticityTensor operator-(const ElasticityTensor& a, const ElasticityTensor& b) {
        return ElasticityTensor(a.t_ - b.t_);
    }
    friend ElasticityTensor operator*(const ElasticityTensor& a, double s) {
        return ElasticityTensor(a.t_ * s);
    }
    friend ElasticityTensor operator*(double s, const ElasticityTensor& a) { return a * s; }

private:
    explicit ElasticityTensor(Tensor<double> t) : t_(std::move(t)) {}
    Tensor<double> t_;
};

ElasticityTensor rotate(const Rotation& g, const ElasticityTensor& e);

/// Voigt index tables: pair (i,j) <-> slot I with 11->1, 22->2, 33->3,
/// 23->4, 13->5, 12->6 (zero-based in code).
int voigt_slot(int i, int j);
std::pair<int, int> voigt_pair(int slot);

/// Dilatation tensor d_ij = E_kkij.
SymTensor<double> dilatation(const ElasticityTensor& e);

/// Voigt tensor v_ij = E_kikj.
SymTensor<double> voigt_tensor(const ElasticityTensor& e);

struct HarmonicDecomposition {
    double lambda = 0;                  // tr d
    double mu = 0;                      // tr v
    HarmonicTensor<double> d_prime{2};  // deviatoric part of the dilatation tensor
    HarmonicTensor<double> v_prime{2};  // deviatoric part of the Voigt tensor
    HarmonicTensor<double> h{4};        // leading harmonic part of E^s
};

/// E = (lambda, mu, d', v', H) with H = E^s - q (.) a' - 7/30 (tr a) q (.) q,
/// a = 2/7 (d + 2v).
HarmonicDecomposition decompose(const ElasticityTensor& e);

/// Inverse of decompose (the decomposition is a linear isomorphism; the
/// inverse is the cached solve of the assembled 21x21 component map).
/// InvalidDecompositionError if d', v' or H fail tracelessness (1e-10 rel).
ElasticityTensor reconstruct(const HarmonicDecomposition& dec);

/// Random decomposition with standard-normal parts (traceless by projection).
HarmonicDecomposition random_decomposition(Rng& rng);

/// Random harmonic tensor of the given order (standard-normal symmetric
/// tensor, harmonically projected).
HarmonicTensor<double> random_harmonic(Rng& rng, int order);

}  // namespace ela
