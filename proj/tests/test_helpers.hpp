#pragma once

#include <doctest.h>

#include "ela/elasticity.hpp"
#include "ela/rng.hpp"
#include "ela/rotation.hpp"
#include "ela/tensor.hpp"

namespace elt {

inline ela::Tensor<double> random_tensor(ela::Rng& rng, int order) {
    ela::Tensor<double> t(order);
    for (std::size_t m = 0; m < t.size(); ++m) t[m] = rng.normal();
    return t;
}

inline ela::SymTensor<double> random_sym(ela::Rng& rng, int order) {
    return ela::SymTensor<double>::project(random_tensor(rng, order));
}

inline double rel_err(double a, double b, double scale) {
    return std::abs(a - b) / std::max(scale, 1e-300);
}

inline double rel_err(const ela::Tensor<double>& a, const ela::Tensor<double>& b) {
    return ela::norm(a - b) / std::max({ela::norm(a), ela::norm(b), 1e-300});
}

}  // namespace elt
