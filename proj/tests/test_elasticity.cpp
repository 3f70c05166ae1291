#include "test_helpers.hpp"

using namespace ela;

TEST_SUITE_BEGIN("elasticity");

TEST_CASE("dilatation and Voigt tensors of the isotropic family") {
    const double c1 = 1.7, c2 = -0.4;
    const ElasticityTensor e = ElasticityTensor::isotropic(c1, c2);
    const auto d = dilatation(e);
    const auto v = voigt_tensor(e);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(d(i, j) == doctest::Approx((3 * c1 + 2 * c2) * (i == j)));
            CHECK(v(i, j) == doctest::Approx((c1 + 4 * c2) * (i == j)));
        }

    const ElasticityTensor z = ElasticityTensor{};
    CHECK(norm(dilatation(z).raw()) == 0.0);
    CHECK(norm(voigt_tensor(z).raw()) == 0.0);
}

TEST_CASE("dilatation is equivariant") {
    Rng rng(301);
    for (int trial = 0; trial < 20; ++trial) {
        const ElasticityTensor e = ElasticityTensor::random(rng);
        const Rotation g = random_rotation(rng);
        CHECK(elt::rel_err(dilatation(rotate(g, e)).raw(), rotate(g, dilatation(e)).raw()) < 1e-12);
        CHECK(elt::rel_err(voigt_tensor(rotate(g, e)).raw(), rotate(g, voigt_tensor(e)).raw()) <
              1e-12);
    }
}

TEST_CASE("decomposition of isotropic and zero tensors") {
    const double c1 = 2.0, c2 = 3.0;
    const auto dec = decompose(ElasticityTensor::isotropic(c1, c2));
    CHECK(dec.lambda == doctest::Approx(3 * (3 * c1 + 2 * c2)));
    CHECK(dec.mu == doctest::Approx(3 * (c1 + 4 * c2)));
    CHECK(norm(dec.d_prime.raw()) < 1e-13);
    CHECK(norm(dec.v_prime.raw()) < 1e-13);
    CHECK(norm(dec.h.raw()) < 1e-13);

    const auto zero = decompose(ElasticityTensor{});
    CHECK(zero.lambda == 0.0);
    CHECK(norm(zero.h.raw()) == 0.0);
}

TEST_CASE("decompose is linear and equivariant; H is traceless") {
    Rng rng(302);
    for (int trial = 0; trial < 100; ++trial) {
        const ElasticityTensor e1 = ElasticityTensor::random(rng);
        const ElasticityTensor e2 = ElasticityTensor::random(rng);
        const double a = rng.normal(), b = rng.normal();
        const auto dl = decompose(a * e1 + b * e2);
        const auto d1 = decompose(e1);
        const auto d2 = decompose(e2);
        CHECK(dl.lambda == doctest::Approx(a * d1.lambda + b * d2.lambda));
        CHECK(norm(dl.h.raw() - (a * d1.h.raw() + b * d2.h.raw())) < 1e-12 * norm(dl.h.raw()));

        CHECK(max_abs(trace(d1.h.raw(), 0, 1)) < 1e-12 * norm(d1.h.raw()));

        const Rotation g = random_rotation(rng);
        const auto dr = decompose(rotate(g, e1));
        CHECK(dr.lambda == doctest::Approx(d1.lambda));
        CHECK(dr.mu == doctest::Approx(d1.mu));
        CHECK(elt::rel_err(dr.d_prime.raw(), rotate(g, d1.d_prime).raw()) < 1e-10);
        CHECK(elt::rel_err(dr.v_prime.raw(), rotate(g, d1.v_prime).raw()) < 1e-10);
        CHECK(elt::rel_err(dr.h.raw(), rotate(g, d1.h).raw()) < 1e-10);
    }
}

TEST_CASE("decompose/reconstruct round trips") {
    Rng rng(303);
    for (int trial = 0; trial < 50; ++trial) {
        const ElasticityTensor e = ElasticityTensor::random(rng);
        CHECK((reconstruct(decompose(e)) - e).norm() < 1e-12 * e.norm());

        const HarmonicDecomposition dec = random_decomposition(rng);
        const auto back = decompose(reconstruct(dec));
        CHECK(back.lambda == doctest::Approx(dec.lambda));
        CHECK(back.mu == doctest::Approx(dec.mu));
        CHECK(norm(back.d_prime.raw() - dec.d_prime.raw()) < 1e-12 * (1 + norm(dec.d_prime.raw())));
        CHECK(norm(back.v_prime.raw() - dec.v_prime.raw()) < 1e-12 * (1 + norm(dec.v_prime.raw())));
        CHECK(norm(back.h.raw() - dec.h.raw()) < 1e-12 * (1 + norm(dec.h.raw())));
    }

    // zero decomposition reconstructs the zero tensor
    CHECK(reconstruct(HarmonicDecomposition{}).norm() == 0.0);

    // the isotropic inverse
    const double c1 = 2.0, c2 = 3.0;
    HarmonicDecomposition iso;
    iso.lambda = 3 * (3 * c1 + 2 * c2);
    iso.mu = 3 * (c1 + 4 * c2);
    CHECK((reconstruct(iso) - ElasticityTensor::isotropic(c1, c2)).norm() < 1e-12);
}

TEST_CASE("reconstruct rejects non-traceless parts") {
    HarmonicDecomposition dec;
    Tensor<double> bad(2);
    bad(0, 0) = bad(1, 1) = bad(2, 2) = 1.0;
    dec.d_prime = HarmonicTensor<double>::trusted(SymTensor<double>::trusted(bad));
    CHECK_THROWS_AS(reconstruct(dec), InvalidDecompositionError);
}

TEST_CASE("the decomposition map has full rank 21") {
    // assemble E -> (lambda, mu, d', v', H) over the 21 Voigt slots
    Eigen::MatrixXd map(101, 21);
    int col = 0;
    for (int p = 0; p < 6; ++p)
        for (int r = p; r < 6; ++r, ++col) {
            Voigt6 c = Voigt6::Zero();
            c(p, r) = c(r, p) = 1.0;
            const auto dec = decompose(ElasticityTensor::from_voigt(c));
            int row = 0;
            map(row++, col) = dec.lambda;
            map(row++, col) = dec.mu;
            for (std::size_t m = 0; m < 9; ++m) map(row++, col) = dec.d_prime.raw()[m];
            for (std::size_t m = 0; m < 9; ++m) map(row++, col) = dec.v_prime.raw()[m];
            for (std::size_t m = 0; m < 81; ++m) map(row++, col) = dec.h.raw()[m];
        }
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(map);
    CHECK(svd.singularValues()(20) > 1e-8);
    CHECK(svd.singularValues()(0) / svd.singularValues()(20) < 1e3);
}

TEST_CASE("Voigt conventions") {
    const ElasticityTensor e = ElasticityTensor::from_voigt(Voigt6::Identity());
    CHECK(e(0, 0, 0, 0) == 1.0);
    CHECK(e(1, 2, 1, 2) == 1.0);
    CHECK(e(0, 1, 0, 1) == 1.0);
    CHECK(e(0, 0, 1, 1) == 0.0);

    Rng rng(304);
    Voigt6 c;
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j) c(i, j) = c(j, i) = rng.normal();
    // bit-exact round trip
    CHECK((ElasticityTensor::from_voigt(c).to_voigt() - c).cwiseAbs().maxCoeff() == 0.0);

    const double c1 = 1.25, c2 = 0.5;
    Voigt6 iso = Voigt6::Zero();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) iso(i, j) = c1 + (i == j ? 2 * c2 : 0.0);
    for (int k = 3; k < 6; ++k) iso(k, k) = c2;
    CHECK((ElasticityTensor::from_voigt(iso) - ElasticityTensor::isotropic(c1, c2)).norm() < 1e-14);

    Voigt6 asym = Voigt6::Identity();
    asym(0, 1) = 0.3;
    CHECK_THROWS_AS(ElasticityTensor::from_voigt(asym), FormatError);
}

TEST_CASE("raw component ingestion validates the index symmetries") {
    Rng rng(305);
    const ElasticityTensor e = ElasticityTensor::random(rng);
    std::array<double, 81> c{};
    for (std::size_t m = 0; m < 81; ++m) c[m] = e.as_tensor()[m];
    CHECK((ElasticityTensor::from_components(c) - e).norm() == 0.0);

    c[1] += 0.5;  // breaks E_1112 = E_1121
    CHECK_THROWS_AS(ElasticityTensor::from_components(c), FormatError);
    CHECK_THROWS_AS(ElasticityTensor::from_components(std::span<const double>(c.data(), 80)),
                    FormatError);
}

TEST_SUITE_END();
