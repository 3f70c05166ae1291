#pragma once

// Genericity predicates (part of the separation machinery): orthotropy of an
// order-2 tensor and triclinicity of a pair, with scale-free detector values.

#include <Eigen/Dense>

#include "ela/errors.hpp"
#include "ela/harmonic.hpp"
#include "ela/tensor.hpp"

namespace ela {

inline constexpr double kDefaultGenericityThreshold = 1e-8;

struct OrthotropyResult {
    bool orthotropic = false;
    double detector = 0;  // ||a^2 x a|| / ||a||^3
};

struct TriclinicResult {
    bool triclinic = false;
    double detector_a = 0;  // ||(a v5) x v5|| / (||a||^3 ||b||^2)
    double detector_b = 0;  // ||(b v5) x v5|| / (||a||^2 ||b||^3)
};

struct GenericityReport {
    bool orthotropic_d2 = false;
    double orthotropy_detector = 0;
    bool triclinic_pair = false;
    double triclinic_detector_d2 = 0;
    double triclinic_detector_d3 = 0;
    bool generic = false;  // conjunction of the two flags
};

/// a is orthotropic (three distinct eigenvalues) iff a^2 x a != 0; the
/// detector is normalized by ||a||^3.
OrthotropyResult is_orthotropic(const Eigen::Matrix3d& a,
                                double threshold = kDefaultGenericityThreshold);

/// (a,b) is a triclinic pair iff (a v5) x v5 != 0 or (b v5) x v5 != 0,
/// with v5_i = eps_ijk (a b)_jk.
TriclinicResult is_triclinic_pair(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b,
                                  double threshold = kDefaultGenericityThreshold);

/// Genericity of an order-4 harmonic tensor: d2 orthotropic and (d2, d3) triclinic.
GenericityReport genericity(const HarmonicTensor<double>& h,
                            double threshold = kDefaultGenericityThreshold);

/// Non-generic input where the construction requires genericity.
struct NonGenericError : Error {
    NonGenericError(const std::string& what, GenericityReport r)
        : Error(what), report(std::move(r)) {}
    GenericityReport report;
};

}  // namespace ela
