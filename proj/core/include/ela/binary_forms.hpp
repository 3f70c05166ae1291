#pragma once

// Complex binary forms and their classical apparatus: transvectants, the
// SL(2,C) action and its SO(3,C) adjoint image, the Cartan correspondence
// between degree-2n forms and order-n harmonic tensors, and the six rational
// generators of the octavic invariant field (Maeda's theorem, via the
// corrected statements). Used to cross-validate the tensor-side covariant
// formulas numerically.

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "ela/errors.hpp"
#include "ela/genericity.hpp"
#include "ela/harmonic.hpp"
#include "ela/rng.hpp"
#include "ela/tensor.hpp"

namespace ela {

using Cplx = std::complex<double>;

inline constexpr int kMaxFormDegree = 16;

/// f(u,v) = a0 u^k + a1 u^{k-1} v + ... + ak v^k.
class BinaryForm {
public:
    BinaryForm() : a_(1, Cplx{}) {}
    explicit BinaryForm(int degree);
    static BinaryForm from_coefficients(std::vector<Cplx> coeffs);

    int degree() const { return static_cast<int>(a_.size()) - 1; }
    const Cplx& coefficient(int k) const { return a_[static_cast<std::size_t>(k)]; }
    Cplx& coefficient(int k) { return a_[static_cast<std::size_t>(k)]; }
    const std::vector<Cplx>& coefficients() const { return a_; }

    double norm() const;

    friend BinaryForm operator+(const BinaryForm& f, const BinaryForm& g);
    friend BinaryForm operator-(const BinaryForm& f, const BinaryForm& g);
    friend BinaryForm operator*(const BinaryForm& f, Cplx s);
    friend BinaryForm operator*(Cplx s, const BinaryForm& f) { return f * s; }

private:
    std::vector<Cplx> a_;
};

BinaryForm multiply(const BinaryForm& f, const BinaryForm& g);
BinaryForm form_pow(const BinaryForm& f, int k);

/// Classical transvectant <f,g>_r; degree p+q-2r; the zero form when
/// r > min(p,q). ArityError for r < 0.
BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int r);

class Moebius {
public:
    /// Validates ad - bc = 1 within 1e-12.
    explicit Moebius(const Eigen::Matrix2cd& m);
    static Moebius identity();
    const Eigen::Matrix2cd& matrix() const { return m_; }
    Moebius inverse() const;
    friend Moebius operator*(const Moebius& a, const Moebius& b);

private:
    struct trusted_tag {};
    Moebius(const Eigen::Matrix2cd& m, trusted_tag) : m_(m) {}
    Eigen::Matrix2cd m_;
};

/// Random SL(2,C) element (Gaussian entries rescaled to unit determinant).
Moebius random_moebius(Rng& rng);

/// (gamma * f)(xi) = f(gamma^{-1} xi).
BinaryForm sl2_act(const Moebius& gamma, const BinaryForm& f);

/// Adjoint image in SO(3,C), pinned against the Cartan map by
/// phi(gamma xi) = P phi(xi); then phi*(P * h) = gamma * phi*(h).
Eigen::Matrix3cd sl2_to_so3(const Moebius& gamma);

/// phi*(h) = h(phi(u,v)) for harmonic h of order n; a binary form of degree
/// 2n. DomainError if h is not harmonic.
BinaryForm cartan_pullback(const HarmonicTensor<Cplx>& h);

/// Inverse of the pullback on even-degree forms (degree 2n <= 12);
/// DomainError for odd degree.
HarmonicTensor<Cplx> cartan_pushforward(const BinaryForm& f);

/// kappa(p,q,r): the scale linking odd transvectants to tr^r(F x G).
double kappa(int p, int q, int r);

struct CorrespondenceReport {
    int transvectant_index = 0;
    double residual = 0;  // relative deviation between the two sides
    double lhs_norm = 0;
    double rhs_norm = 0;
};

/// Numerical check of the transvectant translation: for harmonic F (order p)
/// and G (order q) with f = phi*F, g = phi*G,
///   <f,g>_{2r}   vs 2^{-r}  phi*((F .r. G)')
///   <f,g>_{2r+1} vs kappa(p,q,r) phi*((tr^r(F x G))')
/// where s = transvectant index. ArityError when s is inadmissible.
CorrespondenceReport check_transvectant_correspondence(const HarmonicTensor<Cplx>& f_tensor,
                                                       const HarmonicTensor<Cplx>& g_tensor,
                                                       int s);

/// Maeda's six rational generators of the octavic invariant field, computed
/// with the corrected formulas. NonGenericError when |M| is below
/// threshold * ||t||^2 (the covariant t degenerates).
struct OctavicFieldGenerators {
    Cplx i2m, i3m, i4m;  // I^M_2, I^M_3, I^M_4
    Cplx j2m, j3m, j4m;  // J^M_2, J^M_3, J^M_4
};

OctavicFieldGenerators maeda_binary_invariants(const BinaryForm& octavic,
                                               double threshold = 1e-10);

/// Real tensor lifted to complex components.
Tensor<Cplx> complexify(const Tensor<double>& t);
HarmonicTensor<Cplx> complexify(const HarmonicTensor<double>& h);

/// Random complex harmonic tensor (independent Gaussian real/imag parts,
/// harmonically projected).
HarmonicTensor<Cplx> random_complex_harmonic(Rng& rng, int order);

}  // namespace ela
