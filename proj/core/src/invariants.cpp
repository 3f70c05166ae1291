#include "ela/invariants.hpp"

#include <cmath>

#include "ela/invariants_detail.hpp"
#include "ela/linalg.hpp"

namespace ela {

double InvariantVector::value(std::string_view name) const {
    for (const auto& e : entries_)
        if (e.name == name) return e.value;
    throw FormatError("invariant '" + std::string(name) + "' not present");
}

std::vector<double> InvariantVector::values() const {
    std::vector<double> v;
    v.reserve(entries_.size());
    for (const auto& e : entries_) v.push_back(e.value);
    return v;
}

std::pair<Eigen::Matrix3d, Eigen::Matrix3d> covariants_d2_d3(const HarmonicTensor<double>& h) {
    if (h.order() != 4) throw ArityError("covariants_d2_d3: order-4 harmonic tensor required");
    const auto cov = detail::d2_d3(h.raw());
    return {to_matrix(SymTensor<double>::trusted(cov.d2)),
            to_matrix(SymTensor<double>::trusted(cov.d3))};
}

InvariantVector j_invariants(const HarmonicTensor<double>& h) {
    const auto j = detail::j_list(h.raw());
    InvariantVector out;
    for (int k = 0; k < 9; ++k) out.push("J" + std::to_string(k + 2), j[static_cast<std::size_t>(k)], k + 2);
    return out;
}

InvariantVector i_invariants(const HarmonicTensor<double>& h) {
    const auto i = detail::i_list(h.raw());
    InvariantVector out;
    for (int k = 0; k < 9; ++k) out.push("I" + std::to_string(k + 2), i[static_cast<std::size_t>(k)], k + 2);
    return out;
}

namespace detail {
double& i9_coefficient_fault() {
    static double fault = 0.0;
    return fault;
}
}  // namespace detail

std::array<double, 9> i_from_j(std::span<const double> j) {
    if (j.size() != 9) throw FormatError("i_from_j: expected 9 entries (J2..J10)");
    std::array<double, 9> in;
    std::copy(j.begin(), j.end(), in.begin());
    return detail::i_from_j_list(in, 2025.0 + detail::i9_coefficient_fault());
}

std::array<double, 9> j_from_i(std::span<const double> i) {
    if (i.size() != 9) throw FormatError("j_from_i: expected 9 entries (I2..I10)");
    std::array<double, 9> in;
    std::copy(i.begin(), i.end(), in.begin());
    return detail::j_from_i_list(in);
}

namespace {

struct DvWords {
    Eigen::Matrix3d e1, e2, e3, e4, e5;  // d2, d3, d2^2, (d2 d3)^s, [d2,d3]^2
};

DvWords dv_words(const Eigen::Matrix3d& d2, const Eigen::Matrix3d& d3) {
    DvWords w;
    w.e1 = d2;
    w.e2 = d3;
    w.e3 = d2 * d2;
    w.e4 = d2 * d3 + d3 * d2;
    const Eigen::Matrix3d c = d2 * d3 - d3 * d2;
    w.e5 = c * c;
    return w;
}

double ddot(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b) {
    return (a.array() * b.array()).sum();
}

}  // namespace

InvariantVector dv_invariants(const HarmonicDecomposition& dec) {
    const auto [d2, d3] = covariants_d2_d3(dec.h);
    const DvWords w = dv_words(d2, d3);
    const Eigen::Matrix3d dp = to_matrix(dec.d_prime.sym());
    const Eigen::Matrix3d vp = to_matrix(dec.v_prime.sym());
    InvariantVector out;
    out.push("D3", ddot(dp, w.e1), 3);
    out.push("D4", ddot(dp, w.e2), 4);
    out.push("D5", ddot(dp, w.e3), 5);
    out.push("D6", ddot(dp, w.e4), 6);
    out.push("D11", ddot(dp, w.e5), 11);
    out.push("V3", ddot(vp, w.e1), 3);
    out.push("V4", ddot(vp, w.e2), 4);
    out.push("V5", ddot(vp, w.e3), 5);
    out.push("V6", ddot(vp, w.e4), 6);
    out.push("V11", ddot(vp, w.e5), 11);
    return out;
}

InvariantVector separating21(const ElasticityTensor& e) {
    const HarmonicDecomposition dec = decompose(e);
    InvariantVector out;
    out.push("lambda", dec.lambda, 1);
    out.push("mu", dec.mu, 1);
    const InvariantVector iv = i_invariants(dec.h);
    for (const auto& inv : iv.entries()) out.push(inv.name, inv.value, inv.degree);
    const InvariantVector dv = dv_invariants(dec);
    for (const auto& inv : dv.entries()) out.push(inv.name, inv.value, inv.degree);
    return out;
}

CovariantSet maeda_covariants(const HarmonicTensor<double>& h) {
    if (h.order() != 4) throw ArityError("maeda_covariants: order-4 harmonic tensor required");
    const detail::KChain<double> kc = detail::k_chain(h.raw());
    CovariantSet set;
    set.d2 = SymTensor<double>::trusted(kc.d2);
    set.d3 = SymTensor<double>::trusted(kc.d3);
    set.t6 = HarmonicTensor<double>::trusted(SymTensor<double>::trusted(kc.t6));
    set.w7 = HarmonicTensor<double>::trusted(SymTensor<double>::trusted(kc.w7));
    set.j18 = HarmonicTensor<double>::trusted(SymTensor<double>::trusted(kc.j18));
    set.m12 = kc.m12;
    return set;
}

InvariantVector maeda_rational(const HarmonicTensor<double>& h, double threshold) {
    const GenericityReport report = genericity(h, threshold);
    if (!report.orthotropic_d2)
        throw NonGenericError("maeda_rational: d2 is not orthotropic (M12 below threshold)",
                              report);
    const detail::KChain<double> kc = detail::k_chain(h.raw());
    const double m = kc.m12;
    const double m2 = m * m;
    const double m3 = m2 * m;
    InvariantVector out;
    out.push("i2", kc.k14 / m, 2);
    out.push("i3", kc.k27 / m2, 3);
    out.push("i4", kc.k40i / m3, 4);
    out.push("k4", kc.k40k / m3, 4);
    out.push("k8", kc.k80 / (m3 * m3), 8);
    out.push("k9", kc.k93 / (m3 * m3 * m), 9);
    return out;
}

InvariantVector separating19(const ElasticityTensor& e) { return separating19(decompose(e)); }

InvariantVector separating19(const HarmonicDecomposition& dec) {
    const detail::KChain<double> kc = detail::k_chain(dec.h.raw());
    InvariantVector out;
    out.push("lambda", dec.lambda, 1);
    out.push("mu", dec.mu, 1);
    out.push("M12", kc.m12, 12);
    out.push("K14", kc.k14, 14);
    out.push("K27", kc.k27, 27);
    out.push("K40i", kc.k40i, 40);
    out.push("K40k", kc.k40k, 40);
    out.push("K80", kc.k80, 80);
    out.push("K93", kc.k93, 93);
    const InvariantVector dv = dv_invariants(dec);
    for (const auto& inv : dv.entries()) out.push(inv.name, inv.value, inv.degree);
    return out;
}

InvariantVector separating18(const ElasticityTensor& e, double threshold) {
    return separating18(decompose(e), threshold);
}

InvariantVector separating18(const HarmonicDecomposition& dec, double threshold) {
    const GenericityReport report = genericity(dec.h, threshold);
    if (!report.generic)
        throw NonGenericError("separating18: genericity conditions fail", report);
    InvariantVector out;
    out.push("lambda", dec.lambda, 1);
    out.push("mu", dec.mu, 1);
    const InvariantVector ik = maeda_rational(dec.h, threshold);
    for (const auto& inv : ik.entries()) out.push(inv.name, inv.value, inv.degree);
    const InvariantVector dv = dv_invariants(dec);
    for (const auto& inv : dv.entries()) out.push(inv.name, inv.value, inv.degree);
    return out;
}

InvariantVector pair_invariants(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b) {
    const Eigen::Matrix3d a2 = a * a;
    const Eigen::Matrix3d b2 = b * b;
    InvariantVector out;
    out.push("tr_a", a.trace(), 1);
    out.push("tr_a2", a2.trace(), 2);
    out.push("tr_a3", (a2 * a).trace(), 3);
    out.push("tr_b", b.trace(), 1);
    out.push("tr_b2", b2.trace(), 2);
    out.push("tr_b3", (b2 * b).trace(), 3);
    out.push("tr_ab", (a * b).trace(), 2);
    out.push("tr_a2b", (a2 * b).trace(), 3);
    out.push("tr_ab2", (a * b2).trace(), 3);
    out.push("tr_a2b2", (a2 * b2).trace(), 4);
    return out;
}

std::array<double, 3> trace_invariants(const Eigen::Matrix3d& a) {
    const Eigen::Matrix3d a2 = a * a;
    return {a.trace(), a2.trace(), (a2 * a).trace()};
}

std::array<double, 3> sigma_from_traces(const std::array<double, 3>& t) {
    const double s1 = t[0];
    const double s2 = 0.5 * (t[0] * t[0] - t[1]);
    const double s3 = (t[0] * t[0] * t[0] - 3.0 * t[0] * t[1] + 2.0 * t[2]) / 6.0;
    return {s1, s2, s3};
}

std::array<double, 3> traces_from_sigma(const std::array<double, 3>& s) {
    const double t1 = s[0];
    const double t2 = s[0] * s[0] - 2.0 * s[1];
    const double t3 = s[0] * s[0] * s[0] - 3.0 * s[0] * s[1] + 3.0 * s[2];
    return {t1, t2, t3};
}

std::array<double, 3> elementary_invariants(const Eigen::Matrix3d& a) {
    return sigma_from_traces(trace_invariants(a));
}

}  // namespace ela
