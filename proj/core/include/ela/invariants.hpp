#pragma once

// Scalar invariants of the elasticity tensor and its order-4 harmonic part:
// the two minimal integrity bases of H^4 (J- and I-invariants) with their
// conversion tables, the mixed D/V invariants, the three generic separating
// sets (21 polynomial, 19 polynomial, 18 rational), the degree-12 covariant
// chain T6/w7/J18/M12 with the six rational field generators, and the
// classical invariants of order-2 tensors and pairs.

#include <Eigen/Dense>
#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ela/elasticity.hpp"
#include "ela/genericity.hpp"
#include "ela/harmonic.hpp"

namespace ela {

struct Invariant {
    std::string name;
    double value = 0;
    int degree = 0;  // total polynomial degree in E (for rational entries, the
                     // homogeneity degree: numerator minus denominator)
};

class InvariantVector {
public:
    void push(std::string name, double value, int degree) {
        entries_.push_back({std::move(name), value, degree});
    }
    const std::vector<Invariant>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    const Invariant& operator[](std::size_t k) const { return entries_[k]; }

    /// Value lookup by name; throws FormatError if absent.
    double value(std::string_view name) const;
    std::vector<double> values() const;

private:
    std::vector<Invariant> entries_;
};

/// d2 = tr13 H^2 and d3 = tr13 H^3 (second-order covariants of H).
std::pair<Eigen::Matrix3d, Eigen::Matrix3d> covariants_d2_d3(const HarmonicTensor<double>& h);

/// J_k = tr d_k, k = 2..10 (first minimal integrity basis of H^4).
InvariantVector j_invariants(const HarmonicTensor<double>& h);

/// I_2..I_10 = traces of words in d2, d3 (second minimal integrity basis).
InvariantVector i_invariants(const HarmonicTensor<double>& h);

/// Conversion tables between the two bases. Inputs are (J2..J10) resp.
/// (I2..I10); FormatError unless exactly 9 entries. Two coefficients of the
/// printed J->I table are corrected values recovered by exact rational fit:
/// the degree-9 line's 2025*J5*J2^2 term and the degree-10 denominator 1620.
std::array<double, 9> i_from_j(std::span<const double> j);
std::array<double, 9> j_from_i(std::span<const double> i);

/// D_k = d' : e_k and V_k = v' : e_k over the covariant words
/// e = (d2, d3, d2^2, (d2 d3)^s, [d2,d3]^2), with (ab)^s = ab + ba.
InvariantVector dv_invariants(const HarmonicDecomposition& dec);

/// The 21-invariant generic separating set:
/// (lambda, mu, I2..I10, D3,D4,D5,D6,D11, V3,V4,V5,V6,V11).
InvariantVector separating21(const ElasticityTensor& e);

struct CovariantSet {
    SymTensor<double> d2{2};
    SymTensor<double> d3{2};
    HarmonicTensor<double> t6{3};   // d2^2 x d2
    HarmonicTensor<double> w7{1};   // H .3. T6
    HarmonicTensor<double> j18{6};  // ((T6 .1. T6)' x T6)'
    double m12 = 0;                 // ||T6||^2
};

CovariantSet maeda_covariants(const HarmonicTensor<double>& h);

/// The six rational generators (i2, i3, i4, k4, k8, k9) of the invariant
/// field of H^4; NonGenericError when d2 fails the orthotropy threshold.
InvariantVector maeda_rational(const HarmonicTensor<double>& h,
                               double threshold = kDefaultGenericityThreshold);

/// 19 polynomial invariants: (lambda, mu, M12, K14, K27, K40i, K40k, K80,
/// K93, D..., V...). Polynomial in E; never errors.
InvariantVector separating19(const ElasticityTensor& e);
InvariantVector separating19(const HarmonicDecomposition& dec);

/// 18 rational invariants: (lambda, mu, i2, i3, i4, k4, k8, k9, D..., V...).
/// NonGenericError unless the genericity conditions hold.
InvariantVector separating18(const ElasticityTensor& e,
                             double threshold = kDefaultGenericityThreshold);
InvariantVector separating18(const HarmonicDecomposition& dec,
                             double threshold = kDefaultGenericityThreshold);

/// Minimal integrity basis of a pair of symmetric order-2 tensors:
/// tr a, tr a^2, tr a^3, tr b, tr b^2, tr b^3, tr ab, tr a^2 b, tr a b^2, tr a^2 b^2.
InvariantVector pair_invariants(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b);

/// Elementary symmetric functions (sigma1, sigma2, sigma3) of the eigenvalues.
std::array<double, 3> elementary_invariants(const Eigen::Matrix3d& a);

/// (tr a, tr a^2, tr a^3).
std::array<double, 3> trace_invariants(const Eigen::Matrix3d& a);

/// Conversions between the two order-2 bases.
std::array<double, 3> sigma_from_traces(const std::array<double, 3>& t);
std::array<double, 3> traces_from_sigma(const std::array<double, 3>& s);

namespace detail {
/// Test hook: offset added to the corrected degree-9 conversion coefficient
/// (exercises the self-check fault path). Zero in normal operation.
double& i9_coefficient_fault();
}  // namespace detail

}  // namespace ela
