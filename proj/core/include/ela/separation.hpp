#pragma once

// Orbit separation of generic elasticity tensors: the covariant basis of
// Sym^2, the Gram system recovering d' and v' coefficients, the equivalence
// decision over a separating invariant set, and rotation recovery.

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ela/elasticity.hpp"
#include "ela/genericity.hpp"
#include "ela/invariants.hpp"
#include "ela/rotation.hpp"

namespace ela {

/// B = (q, a, b, a^2, (ab)^s, [a,b]^2) together with the change-of-basis
/// determinant in the canonical Sym^2 coordinates (e11,e22,e33,e23,e13,e12)
/// and the reduced 3x3 off-diagonal block determinant det M (the one with the
/// closed eigenvalue formula when a is diagonal).
struct Sym2Basis {
    std::array<Eigen::Matrix3d, 6> elements;
    double det6 = 0;
    double det_m = 0;
};

/// SingularBasisError when the pair fails the genericity predicates.
Sym2Basis basis_sym2(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b,
                     double threshold = kDefaultGenericityThreshold);

/// The covariant words e_alpha = (d2, d3, d2^2, (d2 d3)^s, [d2,d3]^2), their
/// deviatoric parts, and the Gram matrix G_ab = e'_a : e'_b.
struct GramSystem {
    std::array<Eigen::Matrix3d, 5> eps;
    std::array<Eigen::Matrix3d, 5> eps_dev;
    Eigen::Matrix<double, 5, 5> gram;
};

/// NonGenericError (with report) when genericity fails for H.
GramSystem gram_system(const HarmonicTensor<double>& h,
                       double threshold = kDefaultGenericityThreshold);

struct DvCoefficients {
    Eigen::Matrix<double, 5, 1> d_coeffs;
    Eigen::Matrix<double, 5, 1> v_coeffs;
    double gram_condition = 0;
    bool ill_conditioned = false;  // condition number above 1e12
};

/// Solve (D3 D4 D5 D6 D11) = d'_alpha G (and the V system) for the expansion
/// of d', v' in the deviatoric covariant basis.
DvCoefficients reconstruct_dv(const HarmonicDecomposition& dec,
                              double threshold = kDefaultGenericityThreshold);

enum class Decision { Equivalent, Distinct, NonGeneric };

enum class InvariantSet { S21, S19, S18 };

struct InvariantDelta {
    std::string name;
    double value1 = 0;
    double value2 = 0;
    double delta = 0;
    double scale = 0;  // degree-weighted comparison scale
};

struct CompareResult {
    Decision decision = Decision::NonGeneric;
    GenericityReport report1, report2;
    std::vector<InvariantDelta> deltas;  // empty when NonGeneric
    double max_relative_delta = 0;       // max over entries of delta / (tol-free scale)
};

/// Decide whether E1 and E2 lie on the same rotation orbit by comparing a
/// generic separating set under a degree-weighted tolerance. For the s19/s18
/// sets, H is pre-normalized to unit norm and ||H|| compared separately (the
/// degree-93 entries are meaningless in raw doubles otherwise).
///
/// Equal invariants imply orbit equality only on the generic set; inputs
/// near the genericity threshold are classified by the detector policy
/// (NonGeneric when either detector falls below `threshold`), which is a
/// numerical convention rather than a statement about the boundary cases.
CompareResult equivalent(const ElasticityTensor& e1, const ElasticityTensor& e2,
                         double tol = 1e-7, double threshold = kDefaultGenericityThreshold,
                         InvariantSet set = InvariantSet::S21);

/// Recover a rotation g with g * E1 ~= E2 by aligning the eigenframes of the
/// d2 covariants (orthotropic, so unique up to the four proper sign flips).
/// Returns nullopt when no sign choice meets the residual bound
/// ||g*E1 - E2|| <= 1e-6 ||E1|| (distinguishes a false invariant collision).
std::optional<Rotation> recover_rotation(const ElasticityTensor& e1, const ElasticityTensor& e2,
                                         double threshold = kDefaultGenericityThreshold);

}  // namespace ela
