#include "ela/elasticity.hpp"

#include <mutex>

namespace ela {

namespace {

constexpr int kPairToSlot[3][3] = {{0, 5, 4}, {5, 1, 3}, {4, 3, 2}};
constexpr int kSlotToPair[6][2] = {{0, 0}, {1, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}};

Tensor<double> tensor_from_voigt(const Voigt6& c) {
    Tensor<double> t(4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) t(i, j, k, l) = c(kPairToSlot[i][j], kPairToSlot[k][l]);
    return t;
}

double trace2(const SymTensor<double>& a) { return a(0, 0) + a(1, 1) + a(2, 2); }

}  // namespace

int voigt_slot(int i, int j) { return kPairToSlot[i][j]; }
std::pair<int, int> voigt_pair(int slot) { return {kSlotToPair[slot][0], kSlotToPair[slot][1]}; }

ElasticityTensor ElasticityTensor::from_components(std::span<const double> c) {
    if (c.size() != 81) throw FormatError("elasticity: expected 81 components");
    Tensor<double> t(4);
    for (std::size_t m = 0; m < 81; ++m) t[m] = c[m];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    const double e = t(i, j, k, l);
                    if (t(j, i, k, l) != e || t(i, j, l, k) != e || t(k, l, i, j) != e)
                        throw FormatError("elasticity: components violate the index symmetries");
                }
    return ElasticityTensor(std::move(t));
}

ElasticityTensor ElasticityTensor::from_voigt(const Voigt6& c) {
    const double scale = std::max(1e-300, c.norm());
    if ((c - c.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw FormatError("elasticity: Voigt matrix is not symmetric");
    const Voigt6 sym = 0.5 * (c + c.transpose());
    return ElasticityTensor(tensor_from_voigt(sym));
}

ElasticityTensor ElasticityTensor::trusted(Tensor<double> t) {
    if (t.order() != 4) throw ArityError("elasticity: order-4 tensor required");
    return ElasticityTensor(std::move(t));
}

ElasticityTensor ElasticityTensor::isotropic(double c1, double c2) {
    Tensor<double> t(4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    t(i, j, k, l) = c1 * (i == j) * (k == l) +
                                    c2 * ((i == k) * (j == l) + (i == l) * (j == k));
    return ElasticityTensor(std::move(t));
}

ElasticityTensor ElasticityTensor::random(Rng& rng) {
    Voigt6 c;
    for (int a = 0; a < 6; ++a)
        for (int b = a; b < 6; ++b) c(a, b) = c(b, a) = rng.normal();
    return ElasticityTensor(tensor_from_voigt(c));
}

Voigt6 ElasticityTensor::to_voigt() const {
    Voigt6 c;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            c(a, b) = t_(kSlotToPair[a][0], kSlotToPair[a][1], kSlotToPair[b][0], kSlotToPair[b][1]);
    return c;
}

ElasticityTensor rotate(const Rotation& g, const ElasticityTensor& e) {
    return ElasticityTensor::trusted(rotate(g, e.as_tensor()));
}

SymTensor<double> dilatation(const ElasticityTensor& e) {
    return SymTensor<double>::trusted(trace(e.as_tensor(), 0, 1));
}

SymTensor<double> voigt_tensor(const ElasticityTensor& e) {
    return SymTensor<double>::trusted(trace(e.as_tensor(), 0, 2));
}

HarmonicDecomposition decompose(const ElasticityTensor& e) {
    const SymTensor<double> q = SymTensor<double>::trusted(metric<double>());
    const SymTensor<double> d = dilatation(e);
    const SymTensor<double> v = voigt_tensor(e);
    const double lambda = trace2(d);
    const double mu = trace2(v);
    const SymTensor<double> dp = d - (lambda / 3.0) * q;
    const SymTensor<double> vp = v - (mu / 3.0) * q;

    const SymTensor<double> es = SymTensor<double>::project(e.as_tensor());
    const SymTensor<double> a = (2.0 / 7.0) * (d + 2.0 * v);
    const double tra = trace2(a);
    const SymTensor<double> ap = a - (tra / 3.0) * q;
    const SymTensor<double> h =
        es - sym_product(q, ap) - (7.0 / 30.0) * tra * sym_product(q, q);

    HarmonicDecomposition dec;
    dec.lambda = lambda;
    dec.mu = mu;
    dec.d_prime = HarmonicTensor<double>::trusted(dp);
    dec.v_prime = HarmonicTensor<double>::trusted(vp);
    dec.h = HarmonicTensor<double>::trusted(h);
    return dec;
}

namespace {

// Orthonormal bases of the order-2 and order-4 harmonic subspaces, and the
// inverse of the decomposition map assembled over the 21 Voigt slots.
struct DecompositionSolver {
    std::vector<Tensor<double>> onb2;  // 5 elements
    std::vector<Tensor<double>> onb4;  // 9 elements
    Eigen::FullPivLU<Eigen::Matrix<double, 21, 21>> lu;

    static std::vector<Tensor<double>> harmonic_onb(int order, std::size_t dim) {
        std::vector<Tensor<double>> onb;
        for (const std::size_t rep : detail::multiset_reps(order)) {
            const auto ind = detail::orbit_indicator<double>(rep, order);
            Tensor<double> cand =
                harmonic_part(SymTensor<double>::project(ind)).raw();
            for (const auto& b : onb) cand -= full_contract(cand, b) * b;
            const double n = norm(cand);
            if (n > 1e-8) onb.push_back(cand * (1.0 / n));
            if (onb.size() == dim) break;
        }
        if (onb.size() != dim) throw Error("harmonic basis construction failed");
        return onb;
    }

    Eigen::Matrix<double, 21, 1> coords(const HarmonicDecomposition& dec) const {
        Eigen::Matrix<double, 21, 1> x;
        x(0) = dec.lambda;
        x(1) = dec.mu;
        for (int k = 0; k < 5; ++k) {
            x(2 + k) = full_contract(dec.d_prime.raw(), onb2[static_cast<std::size_t>(k)]);
            x(7 + k) = full_contract(dec.v_prime.raw(), onb2[static_cast<std::size_t>(k)]);
        }
        for (int k = 0; k < 9; ++k)
            x(12 + k) = full_contract(dec.h.raw(), onb4[static_cast<std::size_t>(k)]);
        return x;
    }

    DecompositionSolver() {
        onb2 = harmonic_onb(2, 5);
        onb4 = harmonic_onb(4, 9);
        Eigen::Matrix<double, 21, 21> a;
        int col = 0;
        for (int p = 0; p < 6; ++p)
            for (int r = p; r < 6; ++r, ++col) {
                Voigt6 c = Voigt6::Zero();
                c(p, r) = c(r, p) = 1.0;
                a.col(col) = coords(decompose(ElasticityTensor::from_voigt(c)));
            }
        lu.compute(a);
    }
};

const DecompositionSolver& decomposition_solver() {
    static const DecompositionSolver solver;
    return solver;
}

}  // namespace

ElasticityTensor reconstruct(const HarmonicDecomposition& dec) {
    const double tol = 1e-10;
    if (!is_harmonic(dec.d_prime.sym(), tol) || !is_harmonic(dec.v_prime.sym(), tol) ||
        !is_harmonic(dec.h.sym(), tol))
        throw InvalidDecompositionError("reconstruct: parts are not traceless");
    const auto& solver = decomposition_solver();
    const Eigen::Matrix<double, 21, 1> x = solver.lu.solve(solver.coords(dec));
    Voigt6 c = Voigt6::Zero();
    int idx = 0;
    for (int p = 0; p < 6; ++p)
        for (int r = p; r < 6; ++r, ++idx) c(p, r) = c(r, p) = x(idx);
    return ElasticityTensor::from_voigt(c);
}

HarmonicTensor<double> random_harmonic(Rng& rng, int order) {
    Tensor<double> t(order);
    for (std::size_t m = 0; m < t.size(); ++m) t[m] = rng.normal();
    return harmonic_part(SymTensor<double>::project(t));
}

HarmonicDecomposition random_decomposition(Rng& rng) {
    HarmonicDecomposition dec;
    dec.lambda = rng.normal();
    dec.mu = rng.normal();
    dec.d_prime = random_harmonic(rng, 2);
    dec.v_prime = random_harmonic(rng, 2);
    dec.h = random_harmonic(rng, 4);
    return dec;
}

}  // namespace ela
