#pragma once

// Scalar-generic covariant and invariant kernels, shared between the double
// runtime path, the exact-rational conversion harness, and the complex-step
// Jacobian used by the transcendence-degree check.

#include <array>

#include "ela/harmonic.hpp"
#include "ela/tensor.hpp"

namespace ela::detail {

template <class S>
S mat_trace(const Tensor<S>& a) {
    return a[0] + a[4] + a[8];
}

template <class S>
Tensor<S> mat_mul(const Tensor<S>& a, const Tensor<S>& b) {
    return contract(a, b, 1);
}

template <class S>
struct SecondOrderCovariants {
    Tensor<S> d2{2};
    Tensor<S> d3{2};
};

/// d2 = tr13 H^2, d3 = tr13 H^3 with H^k the 2-contraction powers.
template <class S>
SecondOrderCovariants<S> d2_d3(const Tensor<S>& h) {
    const Tensor<S> h2 = contract(h, h, 2);
    const Tensor<S> h3 = contract(h2, h, 2);
    return {trace(h2, 0, 2), trace(h3, 0, 2)};
}

/// J_k = tr d_k, k = 2..10, with the covariant chain
/// d4 = d2^2, d5 = d2 (H:d2), d6 = d2^3, d7 = d2^2 (H:d2),
/// d8 = d2^2 (H^2:d2), d9 = d2^2 (H:d2^2), d10 = d2^2 (H^2:d2^2).
template <class S>
std::array<S, 9> j_list(const Tensor<S>& h) {
    const Tensor<S> h2 = contract(h, h, 2);
    const Tensor<S> h3 = contract(h2, h, 2);
    const Tensor<S> d2 = trace(h2, 0, 2);
    const Tensor<S> d3 = trace(h3, 0, 2);
    const Tensor<S> d2sq = mat_mul(d2, d2);
    const Tensor<S> hd2 = contract(h, d2, 2);
    const Tensor<S> h2d2 = contract(h2, d2, 2);
    const Tensor<S> hd2sq = contract(h, d2sq, 2);
    const Tensor<S> h2d2sq = contract(h2, d2sq, 2);
    return {mat_trace(d2),
            mat_trace(d3),
            mat_trace(d2sq),
            mat_trace(mat_mul(d2, hd2)),
            mat_trace(mat_mul(d2sq, d2)),
            mat_trace(mat_mul(d2sq, hd2)),
            mat_trace(mat_mul(d2sq, h2d2)),
            mat_trace(mat_mul(d2sq, hd2sq)),
            mat_trace(mat_mul(d2sq, h2d2sq))};
}

/// I_2..I_10 = traces of words in d2, d3.
template <class S>
std::array<S, 9> i_list(const Tensor<S>& h) {
    const auto cov = d2_d3(h);
    const Tensor<S>& d2 = cov.d2;
    const Tensor<S>& d3 = cov.d3;
    const Tensor<S> d2sq = mat_mul(d2, d2);
    const Tensor<S> d3sq = mat_mul(d3, d3);
    return {mat_trace(d2),
            mat_trace(d3),
            mat_trace(d2sq),
            mat_trace(mat_mul(d2, d3)),
            mat_trace(mat_mul(d2sq, d2)),
            mat_trace(mat_mul(d2sq, d3)),
            mat_trace(mat_mul(d2, d3sq)),
            mat_trace(mat_mul(d3, d3sq)),
            mat_trace(mat_mul(d2sq, d3sq))};
}

/// J -> I conversion. `c9` is the corrected coefficient of the J5*J2^2 term
/// in the degree-9 line (2025, recovered by exact fit); the degree-10
/// denominator is the corrected 1620.
template <class S>
std::array<S, 9> i_from_j_list(const std::array<S, 9>& j, const S& c9) {
    const S& j2 = j[0];
    const S& j3 = j[1];
    const S& j4 = j[2];
    const S& j5 = j[3];
    const S& j6 = j[4];
    const S& j7 = j[5];
    const S& j8 = j[6];
    const S& j9 = j[7];
    const S& j10 = j[8];
    std::array<S, 9> i{};
    i[0] = j2;
    i[1] = j3;
    i[2] = j4;
    i[3] = (S(3) * j5 + S(2) * j2 * j3) / S(6);
    i[4] = j6;
    i[5] = (S(3) * j7 + S(2) * j4 * j3) / S(6);
    i[6] = (S(1080) * j8 - S(1230) * j6 * j2 + S(495) * j5 * j3 - S(216) * j4 * j4 +
            S(1197) * j4 * j2 * j2 + S(140) * j3 * j3 * j2 - S(237) * j2 * j2 * j2 * j2) /
           S(1620);
    i[7] = (S(5184) * j9 - S(6480) * j7 * j2 + S(9456) * j6 * j3 + c9 * j5 * j2 * j2 -
            S(7974) * j4 * j3 * j2 + S(2500) * j3 * j3 * j3 + S(1596) * j3 * j2 * j2 * j2) /
           S(19440);
    i[8] = (S(1080) * j10 - S(675) * j8 * j2 + S(495) * j7 * j3 + S(24) * j6 * j4 -
            S(117) * j6 * j2 * j2 - S(171) * j4 * j4 * j2 + S(190) * j4 * j3 * j3 +
            S(228) * j4 * j2 * j2 * j2 - S(45) * j2 * j2 * j2 * j2 * j2) /
           S(1620);
    return i;
}

/// Covariant chain of the K polynomials (the M12-cleared numerators
/// of the six rational field generators), scalar-generic.
template <class S>
struct KChain {
    Tensor<S> d2{2};
    Tensor<S> d3{2};
    Tensor<S> t6{3};
    Tensor<S> w7{1};
    Tensor<S> j18{6};
    S m12{};
    S k14{}, k27{}, k40i{}, k40k{}, k80{}, k93{};
};

template <class S>
KChain<S> k_chain(const Tensor<S>& h) {
    using Sym = SymTensor<S>;
    using Harm = HarmonicTensor<S>;
    KChain<S> kc;
    const auto cov = d2_d3(h);
    kc.d2 = cov.d2;
    kc.d3 = cov.d3;
    const Sym d2s = Sym::trusted(cov.d2);
    const Sym d2sq = Sym::trusted(mat_mul(cov.d2, cov.d2));
    const Harm t6 = Harm::trusted(cross(d2sq, d2s));  // a^2 x a is harmonic
    kc.t6 = t6.raw();
    kc.m12 = full_contract(kc.t6, kc.t6);
    const Harm w7 = Harm::trusted(Sym::trusted(contract(h, kc.t6, 3)));
    kc.w7 = w7.raw();
    const Harm hh = Harm::trusted(Sym::trusted(h));
    const Harm up = harmonic_part(sym_contract(t6.sym(), t6.sym(), 1));
    const Harm j18 = harmonic_part(cross(up.sym(), t6.sym()));
    kc.j18 = j18.raw();

    const Harm w2 = harmonic_product(w7, w7);
    const Harm w3 = harmonic_product(w2, w7);
    const Harm w4 = harmonic_product(w3, w7);
    const Harm w6 = harmonic_product(w4, w2);
    const Tensor<S> t6t6 = contract(kc.t6, kc.t6, 1);  // order 4

    kc.k14 = full_contract(kc.w7, kc.w7);
    kc.k27 = full_contract(w3.raw(), kc.t6);
    kc.k40i = full_contract(w4.raw(), t6t6);

    const S c1 = full_contract(harmonic_product(hh, w3).raw(), harmonic_product(t6, up).raw());
    const S c2 = full_contract(cross(hh.sym(), w3.sym()).raw(), kc.j18);
    const S c3 = full_contract(contract(h, w3.raw(), 2), kc.t6);
    kc.k40k = c1 / S(5) + c2 / S(7) - (S(7) / S(99)) * kc.m12 * c3;

    const S w6j18 = full_contract(w6.raw(), kc.j18);
    kc.k80 = full_contract(cross(w7.sym(), hh.sym()).raw(), t6t6) * w6j18;

    const Tensor<S> hw7 = contract(h, kc.w7, 1);  // order 3, harmonic
    const S b1 = full_contract(harmonic_product(w2, hh).raw(), kc.j18);
    const S b2 = full_contract(cross(Sym::trusted(hw7), w7.sym()).raw(), kc.t6);
    kc.k93 = w6j18 * (S(36) * b1 + (S(28) / S(5)) * kc.m12 * b2);
    return kc;
}

/// The ten D/V pairings of the deviatoric parts against the covariant words
/// (d2, d3, d2^2, (d2 d3)^s, [d2,d3]^2); dp and vp are order-2 traceless.
template <class S>
std::array<S, 10> dv_values(const Tensor<S>& dp, const Tensor<S>& vp, const Tensor<S>& d2,
                            const Tensor<S>& d3) {
    const Tensor<S> e3 = mat_mul(d2, d2);
    const Tensor<S> e4 = mat_mul(d2, d3) + mat_mul(d3, d2);
    const Tensor<S> comm = mat_mul(d2, d3) - mat_mul(d3, d2);
    const Tensor<S> e5 = mat_mul(comm, comm);
    return {full_contract(dp, d2), full_contract(dp, d3), full_contract(dp, e3),
            full_contract(dp, e4), full_contract(dp, e5), full_contract(vp, d2),
            full_contract(vp, d3), full_contract(vp, e3), full_contract(vp, e4),
            full_contract(vp, e5)};
}

/// The 18 rational generator values plus M12, scalar-generic (used with
/// complex-step perturbations for exact Jacobians). Order matches
/// separating18: lambda, mu, i2, i3, i4, k4, k8, k9, D3..D11, V3..V11.
template <class S>
std::array<S, 19> sep18_with_m12(const S& lambda, const S& mu, const Tensor<S>& dp,
                                 const Tensor<S>& vp, const Tensor<S>& h) {
    const KChain<S> kc = k_chain(h);
    const S m = kc.m12;
    const S m2 = m * m;
    const S m3 = m2 * m;
    const auto dv = dv_values(dp, vp, kc.d2, kc.d3);
    std::array<S, 19> out{};
    out[0] = lambda;
    out[1] = mu;
    out[2] = kc.k14 / m;
    out[3] = kc.k27 / m2;
    out[4] = kc.k40i / m3;
    out[5] = kc.k40k / m3;
    out[6] = kc.k80 / (m3 * m3);
    out[7] = kc.k93 / (m3 * m3 * m);
    for (int k = 0; k < 10; ++k) out[static_cast<std::size_t>(8 + k)] = dv[static_cast<std::size_t>(k)];
    out[18] = m;
    return out;
}

/// I -> J conversion (as printed; verified exactly).
template <class S>
std::array<S, 9> j_from_i_list(const std::array<S, 9>& iv) {
    const S& i2 = iv[0];
    const S& i3 = iv[1];
    const S& i4 = iv[2];
    const S& i5 = iv[3];
    const S& i6 = iv[4];
    const S& i7 = iv[5];
    const S& i8 = iv[6];
    const S& i9 = iv[7];
    const S& i10 = iv[8];
    std::array<S, 9> j{};
    j[0] = i2;
    j[1] = i3;
    j[2] = i4;
    j[3] = (S(6) * i5 - S(2) * i2 * i3) / S(3);
    j[4] = i6;
    j[5] = (S(6) * i7 - S(2) * i4 * i3) / S(3);
    j[6] = (S(3240) * i8 - S(1980) * i5 * i3 + S(2460) * i6 * i2 + S(380) * i3 * i3 * i2 +
            S(432) * i4 * i4 - S(2394) * i4 * i2 * i2 + S(474) * i2 * i2 * i2 * i2) /
           S(2160);
    j[7] = (S(38880) * i9 + S(25920) * i7 * i2 - S(8100) * i5 * i2 * i2 - S(5000) * i3 * i3 * i3 -
            S(18912) * i3 * i6 + S(7308) * i3 * i4 * i2 - S(492) * i3 * i2 * i2 * i2) /
           S(10368);
    j[8] = (S(25920) * i10 + S(16200) * i8 * i2 - S(15840) * i7 * i3 - S(9900) * i5 * i3 * i2 +
            S(2240) * i3 * i3 * i4 + S(1900) * i3 * i3 * i2 * i2 - S(384) * i6 * i4 +
            S(14172) * i6 * i2 * i2 + S(4896) * i4 * i4 * i2 - S(15618) * i4 * i2 * i2 * i2 +
            S(3090) * i2 * i2 * i2 * i2 * i2) /
           S(17280);
    return j;
}

}  // namespace ela::detail
