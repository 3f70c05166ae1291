#include "ela/binary_forms.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace ela {

namespace {

long long falling(int n, int k) {
    long long f = 1;
    for (int i = 0; i < k; ++i) f *= n - i;
    return f;
}

long long binom(int n, int k) {
    long long b = 1;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

/// d^a/du^a d^b/dv^b of a form (degree drops by a+b).
BinaryForm form_derivative(const BinaryForm& f, int a, int b) {
    const int p = f.degree();
    const int r = a + b;
    if (r > p) return BinaryForm(0);
    BinaryForm out(p - r);
    for (int m = 0; m <= p; ++m) {
        if (p - m < a || m < b) continue;
        out.coefficient(m - b) += f.coefficient(m) *
                                  Cplx(static_cast<double>(falling(p - m, a)) *
                                           static_cast<double>(falling(m, b)),
                                       0.0);
    }
    return out;
}

}  // namespace

BinaryForm::BinaryForm(int degree) {
    if (degree < 0 || degree > kMaxFormDegree)
        throw FormatError("BinaryForm: degree outside 0.." + std::to_string(kMaxFormDegree));
    a_.assign(static_cast<std::size_t>(degree) + 1, Cplx{});
}

BinaryForm BinaryForm::from_coefficients(std::vector<Cplx> coeffs) {
    if (coeffs.empty() || coeffs.size() > kMaxFormDegree + 1)
        throw FormatError("BinaryForm: coefficient count must be degree+1, degree <= " +
                          std::to_string(kMaxFormDegree));
    BinaryForm f(static_cast<int>(coeffs.size()) - 1);
    f.a_ = std::move(coeffs);
    return f;
}

double BinaryForm::norm() const {
    double s = 0;
    for (const auto& c : a_) s += std::norm(c);
    return std::sqrt(s);
}

BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree() != g.degree()) throw ArityError("BinaryForm: degree mismatch");
    BinaryForm out = f;
    for (int k = 0; k <= g.degree(); ++k) out.coefficient(k) += g.coefficient(k);
    return out;
}

BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree() != g.degree()) throw ArityError("BinaryForm: degree mismatch");
    BinaryForm out = f;
    for (int k = 0; k <= g.degree(); ++k) out.coefficient(k) -= g.coefficient(k);
    return out;
}

BinaryForm operator*(const BinaryForm& f, Cplx s) {
    BinaryForm out = f;
    for (auto& c : out.a_) c *= s;
    return out;
}

BinaryForm multiply(const BinaryForm& f, const BinaryForm& g) {
    BinaryForm out(f.degree() + g.degree());
    for (int i = 0; i <= f.degree(); ++i)
        for (int j = 0; j <= g.degree(); ++j)
            out.coefficient(i + j) += f.coefficient(i) * g.coefficient(j);
    return out;
}

BinaryForm form_pow(const BinaryForm& f, int k) {
    if (k < 1) throw ArityError("form_pow: k >= 1 required");
    BinaryForm out = f;
    for (int i = 1; i < k; ++i) out = multiply(out, f);
    return out;
}

BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int r) {
    if (r < 0) throw ArityError("transvectant: r >= 0 required");
    const int p = f.degree();
    const int q = g.degree();
    const int deg = p + q - 2 * r;
    if (r > std::min(p, q)) return BinaryForm(std::max(deg, 0));
    const double pref =
        1.0 / (static_cast<double>(falling(p, r)) * static_cast<double>(falling(q, r)));
    BinaryForm out(deg);
    for (int i = 0; i <= r; ++i) {
        const BinaryForm df = form_derivative(f, r - i, i);
        const BinaryForm dg = form_derivative(g, i, r - i);
        const double c = static_cast<double>(binom(r, i)) * (i % 2 == 0 ? 1.0 : -1.0);
        const BinaryForm prod = multiply(df, dg);
        for (int k = 0; k <= deg; ++k) out.coefficient(k) += c * prod.coefficient(k);
    }
    return out * Cplx(pref, 0.0);
}

Moebius::Moebius(const Eigen::Matrix2cd& m) : m_(m) {
    const Cplx det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (std::abs(det - Cplx(1.0, 0.0)) > 1e-12)
        throw DomainError("Moebius: determinant must be 1");
}

Moebius Moebius::identity() { return Moebius(Eigen::Matrix2cd::Identity(), trusted_tag{}); }

Moebius Moebius::inverse() const {
    Eigen::Matrix2cd inv;
    inv << m_(1, 1), -m_(0, 1), -m_(1, 0), m_(0, 0);
    return Moebius(inv, trusted_tag{});
}

Moebius operator*(const Moebius& a, const Moebius& b) {
    return Moebius(Eigen::Matrix2cd(a.m_ * b.m_), Moebius::trusted_tag{});
}

Moebius random_moebius(Rng& rng) {
    Eigen::Matrix2cd m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = Cplx(rng.normal(), rng.normal());
    Cplx det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    while (std::abs(det) < 1e-6) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m(i, j) = Cplx(rng.normal(), rng.normal());
        det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    }
    m /= std::sqrt(det);
    return Moebius(m);
}

BinaryForm sl2_act(const Moebius& gamma, const BinaryForm& f) {
    const Eigen::Matrix2cd gi = gamma.inverse().matrix();
    const int p = f.degree();
    // u' = gi(0,0) u + gi(0,1) v, v' = gi(1,0) u + gi(1,1) v; expand f(u',v').
    BinaryForm out(p);
    // powers of u' and v' as forms of degree k
    std::vector<BinaryForm> pu(static_cast<std::size_t>(p) + 1, BinaryForm(0));
    std::vector<BinaryForm> pv(static_cast<std::size_t>(p) + 1, BinaryForm(0));
    BinaryForm lu(1), lv(1);
    lu.coefficient(0) = gi(0, 0);
    lu.coefficient(1) = gi(0, 1);
    lv.coefficient(0) = gi(1, 0);
    lv.coefficient(1) = gi(1, 1);
    pu[0].coefficient(0) = 1.0;
    pv[0].coefficient(0) = 1.0;
    for (int k = 1; k <= p; ++k) {
        pu[static_cast<std::size_t>(k)] = multiply(pu[static_cast<std::size_t>(k - 1)], lu);
        pv[static_cast<std::size_t>(k)] = multiply(pv[static_cast<std::size_t>(k - 1)], lv);
    }
    for (int m = 0; m <= p; ++m) {
        const BinaryForm term =
            multiply(pu[static_cast<std::size_t>(p - m)], pv[static_cast<std::size_t>(m)]);
        for (int k = 0; k <= p; ++k) out.coefficient(k) += f.coefficient(m) * term.coefficient(k);
    }
    return out;
}

Eigen::Matrix3cd sl2_to_so3(const Moebius& gamma) {
    const Eigen::Matrix2cd& m = gamma.matrix();
    const Cplx a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
    const Cplx I(0.0, 1.0);
    Eigen::Matrix3cd p;
    p(0, 0) = (a * a + b * b + c * c + d * d) / 2.0;
    p(0, 1) = I * (a * a + c * c - b * b - d * d) / 2.0;
    p(0, 2) = -I * (a * b + c * d);
    p(1, 0) = -I * (a * a + b * b - c * c - d * d) / 2.0;
    p(1, 1) = (a * a - b * b - c * c + d * d) / 2.0;
    p(1, 2) = -(a * b - c * d);
    p(2, 0) = I * (a * c + b * d);
    p(2, 1) = -(a * c - b * d);
    p(2, 2) = a * d + b * c;
    return p;
}

namespace {

/// phi components as quadratic forms (coefficients of u^2, uv, v^2).
constexpr int kQuad = 3;
using Quad = std::array<Cplx, kQuad>;

std::array<Quad, 3> cartan_quadrics() {
    const Cplx I(0.0, 1.0);
    return {Quad{Cplx(0.5, 0.0), Cplx(0.0, 0.0), Cplx(0.5, 0.0)},
            Quad{-I * 0.5, Cplx(0.0, 0.0), I * 0.5},
            Quad{Cplx(0.0, 0.0), I, Cplx(0.0, 0.0)}};
}

/// phi* of an arbitrary (not necessarily harmonic) symmetric tensor: the
/// q-multiples vanish on the null cone, so this computes phi* of the leading
/// harmonic part.
BinaryForm pullback_raw(const Tensor<Cplx>& t) {
    const int n = t.order();
    const auto quad = cartan_quadrics();
    BinaryForm out(2 * n);
    if (n == 0) {
        out.coefficient(0) = t[0];
        return out;
    }
    int digits[kMaxRawOrder];
    for (std::size_t m = 0; m < t.size(); ++m) {
        const Cplx coeff = t[m];
        if (coeff == Cplx{}) continue;
        detail::decode_index(m, n, digits);
        std::vector<Cplx> prod = {Cplx(1.0, 0.0)};  // binary poly, ascending v-power
        for (int k = 0; k < n; ++k) {
            const Quad& qd = quad[static_cast<std::size_t>(digits[k])];
            std::vector<Cplx> next(prod.size() + 2, Cplx{});
            for (std::size_t i = 0; i < prod.size(); ++i)
                for (int j = 0; j < kQuad; ++j)
                    next[i + static_cast<std::size_t>(j)] += prod[i] * qd[static_cast<std::size_t>(j)];
            prod = std::move(next);
        }
        for (int k = 0; k <= 2 * n; ++k) out.coefficient(k) += coeff * prod[static_cast<std::size_t>(k)];
    }
    return out;
}

/// Real orthonormal basis of the order-n harmonic subspace, complexified.
const std::vector<Tensor<Cplx>>& harmonic_basis_c(int order) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<std::vector<Tensor<Cplx>>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return *it->second;
    auto basis = std::make_unique<std::vector<Tensor<Cplx>>>();
    std::vector<Tensor<double>> real_basis;
    for (const std::size_t rep : detail::multiset_reps(order)) {
        Tensor<double> cand =
            harmonic_part(SymTensor<double>::project(detail::orbit_indicator<double>(rep, order)))
                .raw();
        for (const auto& b : real_basis) cand -= full_contract(cand, b) * b;
        const double n = norm(cand);
        if (n > 1e-8) real_basis.push_back(cand * (1.0 / n));
        if (real_basis.size() == static_cast<std::size_t>(2 * order + 1)) break;
    }
    if (real_basis.size() != static_cast<std::size_t>(2 * order + 1))
        throw Error("harmonic basis construction failed");
    for (const auto& b : real_basis) basis->push_back(complexify(b));
    auto& ref = *basis;
    cache.emplace(order, std::move(basis));
    return ref;
}

/// Cached LU of the pullback matrix on the harmonic basis of order n.
const Eigen::FullPivLU<Eigen::MatrixXcd>& pullback_lu(int order) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Eigen::FullPivLU<Eigen::MatrixXcd>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return *it->second;
    const auto& basis = harmonic_basis_c(order);
    const int dim = 2 * order + 1;
    Eigen::MatrixXcd a(dim, dim);
    for (int col = 0; col < dim; ++col) {
        const BinaryForm f = pullback_raw(basis[static_cast<std::size_t>(col)]);
        for (int row = 0; row < dim; ++row) a(row, col) = f.coefficient(row);
    }
    auto lu = std::make_unique<Eigen::FullPivLU<Eigen::MatrixXcd>>(a);
    auto& ref = *lu;
    cache.emplace(order, std::move(lu));
    return ref;
}

}  // namespace

BinaryForm cartan_pullback(const HarmonicTensor<Cplx>& h) {
    if (!is_harmonic(h.sym(), 1e-10))
        throw DomainError("cartan_pullback: input is not harmonic");
    return pullback_raw(h.raw());
}

HarmonicTensor<Cplx> cartan_pushforward(const BinaryForm& f) {
    if (f.degree() % 2 != 0) throw DomainError("cartan_pushforward: even degree required");
    const int order = f.degree() / 2;
    if (order > 6) throw DomainError("cartan_pushforward: degree > 12 unsupported");
    if (order == 0) {
        Tensor<Cplx> t(0);
        t[0] = f.coefficient(0);
        return HarmonicTensor<Cplx>::trusted(SymTensor<Cplx>::trusted(std::move(t)));
    }
    const int dim = 2 * order + 1;
    Eigen::VectorXcd rhs(dim);
    for (int k = 0; k < dim; ++k) rhs(k) = f.coefficient(k);
    const Eigen::VectorXcd c = pullback_lu(order).solve(rhs);
    const auto& basis = harmonic_basis_c(order);
    Tensor<Cplx> t(order);
    for (int k = 0; k < dim; ++k) t += basis[static_cast<std::size_t>(k)] * Cplx(c(k));
    return HarmonicTensor<Cplx>::trusted(SymTensor<Cplx>::trusted(std::move(t)));
}

double kappa(int p, int q, int r) {
    if (p < 1 || q < 1 || r < 0 || r > std::min(p, q) - 1)
        throw ArityError("kappa: require p,q >= 1 and 0 <= r <= min(p,q)-1");
    auto fact = [](int n) {
        double f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    return fact(p + q - 1) * fact(p - r - 1) * fact(q - r - 1) /
           (std::pow(2.0, 2 * r + 1) * fact(p + q - 1 - 2 * r) * fact(p - 1) * fact(q - 1));
}

CorrespondenceReport check_transvectant_correspondence(const HarmonicTensor<Cplx>& f_tensor,
                                                       const HarmonicTensor<Cplx>& g_tensor,
                                                       int s) {
    const int p = f_tensor.order();
    const int q = g_tensor.order();
    if (p < 1 || q < 1) throw ArityError("correspondence: orders >= 1 required");
    if (s < 0 || s > 2 * std::min(p, q) || (s % 2 == 1 && s == 2 * std::min(p, q)))
        throw ArityError("correspondence: inadmissible transvectant index");

    const BinaryForm f = cartan_pullback(f_tensor);
    const BinaryForm g = cartan_pullback(g_tensor);
    const BinaryForm lhs = transvectant(f, g, s);

    BinaryForm rhs(lhs.degree());
    if (s % 2 == 0) {
        // The pullback factors through symmetrization and kills q-multiples,
        // so the raw r-contraction suffices (avoids order-8 symmetrization).
        const int r = s / 2;
        const Tensor<Cplx> contracted = contract(f_tensor.raw(), g_tensor.raw(), r);
        rhs = pullback_raw(contracted) * Cplx(std::pow(2.0, -r), 0.0);
    } else {
        const int r = (s - 1) / 2;
        Tensor<Cplx> c = cross(f_tensor.sym(), g_tensor.sym()).raw();
        for (int k = 0; k < r; ++k) c = trace(c, 0, 1);
        rhs = pullback_raw(c) * Cplx(kappa(p, q, r), 0.0);
    }

    CorrespondenceReport rep;
    rep.transvectant_index = s;
    rep.lhs_norm = lhs.norm();
    rep.rhs_norm = rhs.norm();
    rep.residual = (lhs - rhs).norm() / std::max({rep.lhs_norm, rep.rhs_norm, 1e-300});
    return rep;
}

OctavicFieldGenerators maeda_binary_invariants(const BinaryForm& f, double threshold) {
    if (f.degree() != 8) throw ArityError("maeda_binary_invariants: octavic (degree 8) required");
    const BinaryForm q = transvectant(f, f, 6);
    const BinaryForm t = transvectant(transvectant(q, q, 2), q, 1);
    const BinaryForm theta = transvectant(f, t, 6);
    const Cplx m = transvectant(t, t, 6).coefficient(0);
    const BinaryForm j = transvectant(transvectant(t, t, 2), t, 1);

    // Scale-free degeneracy proxy: M and ||t||^2 are both of degree 12 in f.
    const double tn = t.norm();
    if (tn == 0.0 || std::abs(m) <= threshold * tn * tn)
        throw NonGenericError("maeda_binary_invariants: covariant M vanishes", GenericityReport{});

    const BinaryForm theta2 = multiply(theta, theta);
    const BinaryForm theta3 = multiply(theta2, theta);
    const BinaryForm theta4 = multiply(theta2, theta2);
    const BinaryForm theta6 = multiply(theta3, theta3);
    const BinaryForm tt2 = transvectant(t, t, 2);
    const Cplx m2 = m * m;
    const Cplx m3 = m2 * m;

    OctavicFieldGenerators out;
    out.i2m = transvectant(theta, theta, 2).coefficient(0) / m;
    out.i3m = transvectant(theta3, t, 6).coefficient(0) / m2;
    out.i4m = transvectant(theta4, tt2, 8).coefficient(0) / m3;
    out.j2m = transvectant(transvectant(theta, f, 1), tt2, 8).coefficient(0) *
              transvectant(theta6, j, 12).coefficient(0) / (m3 * m3);
    out.j3m = (36.0 * transvectant(multiply(theta2, f), j, 12).coefficient(0) / m2 -
               (28.0 / 5.0) * transvectant(transvectant(theta2, f, 3), t, 6).coefficient(0) / m) *
              transvectant(theta6, j, 12).coefficient(0) / (m3 * m2);
    out.j4m = 2.0 * transvectant(multiply(f, theta3), multiply(t, tt2), 14).coefficient(0) / m3 +
              (20.0 / 7.0) * transvectant(transvectant(f, theta3, 1), j, 12).coefficient(0) / m3 -
              (70.0 / 99.0) * transvectant(transvectant(f, theta3, 4), t, 6).coefficient(0) / m2;
    return out;
}

Tensor<Cplx> complexify(const Tensor<double>& t) {
    Tensor<Cplx> out(t.order());
    for (std::size_t m = 0; m < t.size(); ++m) out[m] = Cplx(t[m], 0.0);
    return out;
}

HarmonicTensor<Cplx> complexify(const HarmonicTensor<double>& h) {
    return HarmonicTensor<Cplx>::trusted(SymTensor<Cplx>::trusted(complexify(h.raw())));
}

HarmonicTensor<Cplx> random_complex_harmonic(Rng& rng, int order) {
    Tensor<Cplx> t(order);
    for (std::size_t m = 0; m < t.size(); ++m) t[m] = Cplx(rng.normal(), rng.normal());
    return harmonic_part(SymTensor<Cplx>::project(t));
}

}  // namespace ela
