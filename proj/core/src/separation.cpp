#include "ela/separation.hpp"

#include <cmath>

#include "ela/invariants_detail.hpp"
#include "ela/linalg.hpp"

namespace ela {

namespace {

Eigen::Vector3d axial(const Eigen::Matrix3d& m) {
    // eps_ijk m_jk
    return {m(1, 2) - m(2, 1), m(2, 0) - m(0, 2), m(0, 1) - m(1, 0)};
}

double safe_div(double num, double den) { return den > 0.0 ? num / den : 0.0; }

}  // namespace

OrthotropyResult is_orthotropic(const Eigen::Matrix3d& a, double threshold) {
    OrthotropyResult r;
    const double na = a.norm();
    if (na == 0.0) return r;
    const SymTensor<double> as = from_matrix(0.5 * (a + a.transpose()), 1e-9);
    const SymTensor<double> a2 = SymTensor<double>::trusted(detail::mat_mul(as.raw(), as.raw()));
    r.detector = safe_div(norm(cross(a2, as)), na * na * na);
    r.orthotropic = r.detector > threshold;
    return r;
}

TriclinicResult is_triclinic_pair(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b,
                                  double threshold) {
    TriclinicResult r;
    const double na = a.norm();
    const double nb = b.norm();
    if (na == 0.0 || nb == 0.0) return r;
    const Eigen::Vector3d v5 = axial(a * b);
    const Eigen::Vector3d da = (a * v5).cross(v5);
    const Eigen::Vector3d db = (b * v5).cross(v5);
    r.detector_a = da.norm() / (na * na * na * nb * nb);
    r.detector_b = db.norm() / (na * na * nb * nb * nb);
    r.triclinic = r.detector_a > threshold || r.detector_b > threshold;
    return r;
}

GenericityReport genericity(const HarmonicTensor<double>& h, double threshold) {
    const auto [d2, d3] = covariants_d2_d3(h);
    const OrthotropyResult ortho = is_orthotropic(d2, threshold);
    const TriclinicResult tri = is_triclinic_pair(d2, d3, threshold);
    GenericityReport rep;
    rep.orthotropic_d2 = ortho.orthotropic;
    rep.orthotropy_detector = ortho.detector;
    rep.triclinic_pair = tri.triclinic;
    rep.triclinic_detector_d2 = tri.detector_a;
    rep.triclinic_detector_d3 = tri.detector_b;
    rep.generic = rep.orthotropic_d2 && rep.triclinic_pair;
    return rep;
}

Sym2Basis basis_sym2(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b, double threshold) {
    if (!is_triclinic_pair(a, b, threshold).triclinic || !is_orthotropic(a, threshold).orthotropic)
        throw SingularBasisError("basis_sym2: pair is not triclinic with orthotropic first member");
    Sym2Basis out;
    out.elements[0] = Eigen::Matrix3d::Identity();
    out.elements[1] = a;
    out.elements[2] = b;
    out.elements[3] = a * a;
    out.elements[4] = a * b + b * a;
    const Eigen::Matrix3d c = a * b - b * a;
    out.elements[5] = c * c;

    Eigen::Matrix<double, 6, 6> coords;
    for (int k = 0; k < 6; ++k) {
        const Eigen::Matrix3d& m = out.elements[static_cast<std::size_t>(k)];
        coords.col(k) << m(0, 0), m(1, 1), m(2, 2), m(1, 2), m(0, 2), m(0, 1);
    }
    out.det6 = coords.determinant();

    // rows: the (23), (13), (12) components of b, (ab)^s, [a,b]^2
    Eigen::Matrix3d red;
    const Eigen::Matrix3d& e4 = out.elements[4];
    const Eigen::Matrix3d& e5 = out.elements[5];
    red << b(1, 2), e4(1, 2), e5(1, 2), b(0, 2), e4(0, 2), e5(0, 2), b(0, 1), e4(0, 1), e5(0, 1);
    out.det_m = red.determinant();
    return out;
}

GramSystem gram_system(const HarmonicTensor<double>& h, double threshold) {
    const GenericityReport rep = genericity(h, threshold);
    if (!rep.generic) throw NonGenericError("gram_system: genericity conditions fail", rep);
    const auto [d2, d3] = covariants_d2_d3(h);
    GramSystem g;
    g.eps[0] = d2;
    g.eps[1] = d3;
    g.eps[2] = d2 * d2;
    g.eps[3] = d2 * d3 + d3 * d2;
    const Eigen::Matrix3d c = d2 * d3 - d3 * d2;
    g.eps[4] = c * c;
    for (int k = 0; k < 5; ++k) g.eps_dev[static_cast<std::size_t>(k)] = deviator(g.eps[static_cast<std::size_t>(k)]);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            g.gram(i, j) = (g.eps_dev[static_cast<std::size_t>(i)].array() *
                            g.eps_dev[static_cast<std::size_t>(j)].array())
                               .sum();
    return g;
}

DvCoefficients reconstruct_dv(const HarmonicDecomposition& dec, double threshold) {
    const GramSystem g = gram_system(dec.h, threshold);
    const Eigen::Matrix3d dp = to_matrix(dec.d_prime.sym());
    const Eigen::Matrix3d vp = to_matrix(dec.v_prime.sym());
    Eigen::Matrix<double, 5, 1> dvec, vvec;
    for (int k = 0; k < 5; ++k) {
        dvec(k) = (dp.array() * g.eps_dev[static_cast<std::size_t>(k)].array()).sum();
        vvec(k) = (vp.array() * g.eps_dev[static_cast<std::size_t>(k)].array()).sum();
    }
    DvCoefficients out;
    const Eigen::JacobiSVD<Eigen::Matrix<double, 5, 5>> svd(
        g.gram, Eigen::ComputeFullU | Eigen::ComputeFullV);
    out.gram_condition =
        svd.singularValues()(0) / std::max(svd.singularValues()(4), 1e-300);
    out.ill_conditioned = out.gram_condition > 1e12;
    out.d_coeffs = svd.solve(dvec);
    out.v_coeffs = svd.solve(vvec);
    return out;
}

namespace {

struct ScaledVector {
    std::vector<Invariant> entries;
    std::vector<double> scales;
};

// Invariants plus their degree-weighted comparison scales. For s19/s18 the
// fourth-order part is normalized to unit norm first and ||H|| enters as its
// own entry; raw doubles carry no meaning at degree 93 otherwise.
ScaledVector scaled_invariants(const HarmonicDecomposition& dec, InvariantSet set,
                               double e_norm, double threshold) {
    ScaledVector out;
    const double nh = norm(dec.h.raw());
    const double nd = norm(dec.d_prime.raw());
    const double nv = norm(dec.v_prime.raw());

    auto push = [&out](const Invariant& inv, double scale) {
        out.entries.push_back(inv);
        out.scales.push_back(scale);
    };

    if (set == InvariantSet::S21) {
        push({"lambda", dec.lambda, 1}, e_norm);
        push({"mu", dec.mu, 1}, e_norm);
        const auto iv = i_invariants(dec.h);
        for (std::size_t k = 0; k < iv.size(); ++k)
            push(iv[k], std::pow(nh, iv[k].degree));
        const auto dv = dv_invariants(dec);
        for (std::size_t k = 0; k < dv.size(); ++k) {
            const double lin = dv[k].name[0] == 'D' ? nd : nv;
            push(dv[k], lin * std::pow(nh, dv[k].degree - 1));
        }
        return out;
    }

    HarmonicDecomposition unit = dec;
    if (nh > 0.0) unit.h = dec.h * (1.0 / nh);
    push({"lambda", dec.lambda, 1}, e_norm);
    push({"mu", dec.mu, 1}, e_norm);
    push({"normH", nh, 1}, nh);
    if (set == InvariantSet::S19) {
        const auto s19 = separating19(unit);
        for (std::size_t k = 2; k < s19.size(); ++k) {
            const auto& inv = s19[k];
            if (inv.name[0] == 'D' || inv.name[0] == 'V')
                push(inv, (inv.name[0] == 'D' ? nd : nv));
            else
                push(inv, 1.0 + std::abs(inv.value));
        }
    } else {
        const auto ik = maeda_rational(unit.h, threshold);
        for (std::size_t k = 0; k < ik.size(); ++k)
            push(ik[k], 1.0 + std::abs(ik[k].value));
        const auto dv = dv_invariants(unit);
        for (std::size_t k = 0; k < dv.size(); ++k)
            push(dv[k], dv[k].name[0] == 'D' ? nd : nv);
    }
    return out;
}

}  // namespace

CompareResult equivalent(const ElasticityTensor& e1, const ElasticityTensor& e2, double tol,
                         double threshold, InvariantSet set) {
    CompareResult res;
    const HarmonicDecomposition dec1 = decompose(e1);
    const HarmonicDecomposition dec2 = decompose(e2);
    res.report1 = genericity(dec1.h, threshold);
    res.report2 = genericity(dec2.h, threshold);
    if (!res.report1.generic || !res.report2.generic) {
        res.decision = Decision::NonGeneric;
        return res;
    }
    const double e_norm = std::max(e1.norm(), e2.norm());
    const ScaledVector a = scaled_invariants(dec1, set, e_norm, threshold);
    const ScaledVector b = scaled_invariants(dec2, set, e_norm, threshold);
    bool equal = true;
    res.max_relative_delta = 0;
    for (std::size_t k = 0; k < a.entries.size(); ++k) {
        InvariantDelta d;
        d.name = a.entries[k].name;
        d.value1 = a.entries[k].value;
        d.value2 = b.entries[k].value;
        d.delta = std::abs(d.value1 - d.value2);
        d.scale = std::max(a.scales[k], b.scales[k]);
        res.deltas.push_back(d);
        const double rel = d.scale > 0.0 ? d.delta / d.scale : (d.delta > 0.0 ? HUGE_VAL : 0.0);
        res.max_relative_delta = std::max(res.max_relative_delta, rel);
        if (d.delta > tol * d.scale) equal = false;
    }
    res.decision = equal ? Decision::Equivalent : Decision::Distinct;
    return res;
}

std::optional<Rotation> recover_rotation(const ElasticityTensor& e1, const ElasticityTensor& e2,
                                         double threshold) {
    const HarmonicDecomposition dec1 = decompose(e1);
    const HarmonicDecomposition dec2 = decompose(e2);
    if (!genericity(dec1.h, threshold).generic || !genericity(dec2.h, threshold).generic)
        return std::nullopt;

    auto frame = [](const HarmonicTensor<double>& h) {
        const auto [d2, d3] = covariants_d2_d3(h);
        (void)d3;
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(d2);
        Eigen::Matrix3d f = eig.eigenvectors();  // eigenvalues ascending
        if (f.determinant() < 0) f.col(2) *= -1.0;
        return f;
    };
    const Eigen::Matrix3d f1 = frame(dec1.h);
    const Eigen::Matrix3d f2 = frame(dec2.h);

    const double bound = 1e-6 * e1.norm();
    constexpr int kSigns[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    for (const auto& s : kSigns) {
        Eigen::Matrix3d sd = Eigen::Matrix3d::Zero();
        sd(0, 0) = s[0];
        sd(1, 1) = s[1];
        sd(2, 2) = s[2];
        const Eigen::Matrix3d gm = f2 * sd * f1.transpose();
        const Rotation g(gm);
        if ((rotate(g, e1) - e2).norm() <= bound) return g;
    }
    return std::nullopt;
}

}  // namespace ela
