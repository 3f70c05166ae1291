#include "ela/invariants.hpp"
#include "ela/linalg.hpp"
#include "test_helpers.hpp"

using namespace ela;

TEST_SUITE_BEGIN("invariants");

namespace {

HarmonicTensor<double> scaled(const HarmonicTensor<double>& h, double t) { return h * t; }

}  // namespace

TEST_CASE("second-order covariants d2, d3") {
    Rng rng(401);
    const HarmonicTensor<double> zero(4);
    const auto [zd2, zd3] = covariants_d2_d3(zero);
    CHECK(zd2.norm() == 0.0);
    CHECK(zd3.norm() == 0.0);

    const HarmonicTensor<double> h = random_harmonic(rng, 4);
    const auto [d2, d3] = covariants_d2_d3(h);

    // tr d2 equals the squared norm of H, and d2 matches the explicit
    // six-index loop for tr13(H (2). H)
    CHECK(d2.trace() == doctest::Approx(norm_sq(h.raw())));
    for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) {
            double s = 0;
            for (int i = 0; i < 3; ++i)
                for (int p = 0; p < 3; ++p)
                    for (int q = 0; q < 3; ++q) s += h(i, j, p, q) * h(p, q, i, l);
            CHECK(d2(j, l) == doctest::Approx(s));
        }

    for (int trial = 0; trial < 10; ++trial) {
        const Rotation g = random_rotation(rng);
        const auto [rd2, rd3] = covariants_d2_d3(rotate(g, h));
        const Eigen::Matrix3d gm = g.matrix();
        CHECK((rd2 - gm * d2 * gm.transpose()).norm() < 1e-10 * d2.norm());
        CHECK((rd3 - gm * d3 * gm.transpose()).norm() < 1e-10 * d3.norm());
    }

    // non-harmonic input cannot enter: the checked constructor is the guard
    CHECK_THROWS_AS(HarmonicTensor<double>::checked(elt::random_sym(rng, 4)), DomainError);
}

TEST_CASE("J-invariants: zeros, overlap with I, homogeneity") {
    Rng rng(402);
    CHECK(j_invariants(HarmonicTensor<double>(4)).values() == std::vector<double>(9, 0.0));
    CHECK(i_invariants(HarmonicTensor<double>(4)).values() == std::vector<double>(9, 0.0));

    const HarmonicTensor<double> h = random_harmonic(rng, 4);
    const auto j = j_invariants(h);
    const auto i = i_invariants(h);
    CHECK(j.value("J4") == doctest::Approx(i.value("I4")));
    CHECK(j.value("J2") == doctest::Approx(i.value("I2")));

    const auto j2 = j_invariants(scaled(h, 2.0));
    for (int k = 0; k < 9; ++k)
        CHECK(j2[static_cast<std::size_t>(k)].value ==
              doctest::Approx(std::pow(2.0, k + 2) * j[static_cast<std::size_t>(k)].value));
}

TEST_CASE("I-invariants: direct vs via-J identity and homogeneity") {
    Rng rng(403);
    const HarmonicTensor<double> h = random_harmonic(rng, 4);
    const auto i = i_invariants(h);
    const auto j = j_invariants(h);
    const auto [d2, d3] = covariants_d2_d3(h);
    CHECK(i.value("I5") == doctest::Approx((d2 * d3).trace()));
    CHECK(i.value("I5") ==
          doctest::Approx((3 * j.value("J5") + 2 * j.value("J2") * j.value("J3")) / 6.0));

    const auto it = i_invariants(scaled(h, 1.0 / 3.0));
    for (int k = 0; k < 9; ++k)
        CHECK(it[static_cast<std::size_t>(k)].value ==
              doctest::Approx(std::pow(1.0 / 3.0, k + 2) * i[static_cast<std::size_t>(k)].value));
}

TEST_CASE("conversion tables against direct evaluation") {
    Rng rng(404);
    const std::array<double, 9> zeros{};
    for (double v : i_from_j(zeros)) CHECK(v == 0.0);
    for (double v : j_from_i(zeros)) CHECK(v == 0.0);

    for (int trial = 0; trial < 25; ++trial) {
        const HarmonicTensor<double> h = random_harmonic(rng, 4);
        const double nh = norm(h.raw());
        const auto j = j_invariants(h).values();
        const auto i = i_invariants(h).values();
        const auto ic = i_from_j(j);
        const auto jc = j_from_i(i);
        for (int k = 0; k < 9; ++k) {
            CHECK(elt::rel_err(ic[static_cast<std::size_t>(k)], i[static_cast<std::size_t>(k)],
                               std::pow(nh, k + 2)) < 1e-9);
            CHECK(elt::rel_err(jc[static_cast<std::size_t>(k)], j[static_cast<std::size_t>(k)],
                               std::pow(nh, k + 2)) < 1e-9);
        }
        // spot identity for I7
        CHECK(i[5] == doctest::Approx((3 * j[5] + 2 * j[2] * j[1]) / 6.0));
    }

    const std::array<double, 8> short_vec{};
    CHECK_THROWS_AS(i_from_j(short_vec), FormatError);
    CHECK_THROWS_AS(j_from_i(short_vec), FormatError);
}

TEST_CASE("conversion fault hook shifts the degree-9 coefficient") {
    Rng rng(405);
    const HarmonicTensor<double> h = random_harmonic(rng, 4);
    const auto j = j_invariants(h).values();
    const auto clean = i_from_j(j);
    detail::i9_coefficient_fault() = 1.0;
    const auto faulty = i_from_j(j);
    detail::i9_coefficient_fault() = 0.0;
    CHECK(faulty[7] != clean[7]);
    CHECK(faulty[6] == clean[6]);
}

TEST_CASE("D/V invariants vanish with either factor and are invariant") {
    Rng rng(406);
    HarmonicDecomposition dec = random_decomposition(rng);
    dec.d_prime = HarmonicTensor<double>(2);
    dec.v_prime = HarmonicTensor<double>(2);
    for (const auto& e : dv_invariants(dec).entries()) CHECK(e.value == 0.0);

    HarmonicDecomposition dec2 = random_decomposition(rng);
    dec2.h = HarmonicTensor<double>(4);
    for (const auto& e : dv_invariants(dec2).entries()) CHECK(e.value == 0.0);

    for (int trial = 0; trial < 25; ++trial) {
        const ElasticityTensor e = ElasticityTensor::random(rng);
        const Rotation g = random_rotation(rng);
        const auto a = dv_invariants(decompose(e)).values();
        const auto b = dv_invariants(decompose(rotate(g, e))).values();
        for (std::size_t k = 0; k < a.size(); ++k)
            CHECK(elt::rel_err(a[k], b[k], 1.0 + std::abs(a[k])) < 1e-10);
    }
}

TEST_CASE("separating21: shape, isotropic values, invariance, sensitivity") {
    Rng rng(407);
    const auto iso = separating21(ElasticityTensor::isotropic(1.5, 0.5));
    CHECK(iso.size() == 21);
    CHECK(iso[0].name == "lambda");
    CHECK(iso[1].name == "mu");
    for (std::size_t k = 2; k < iso.size(); ++k) CHECK(std::abs(iso[k].value) < 1e-12);

    for (int trial = 0; trial < 50; ++trial) {
        const ElasticityTensor e = ElasticityTensor::random(rng);
        const Rotation g = random_rotation(rng);
        const auto a = separating21(e).values();
        const auto b = separating21(rotate(g, e)).values();
        for (std::size_t k = 0; k < a.size(); ++k)
            CHECK(elt::rel_err(a[k], b[k], 1.0 + std::abs(a[k])) < 1e-9);
    }

    const ElasticityTensor e = ElasticityTensor::random(rng);
    ElasticityTensor p = ElasticityTensor::random(rng);
    p = p * (e.norm() / p.norm());
    const auto a = separating21(e).values();
    const auto b = separating21(e + 1e-3 * p).values();
    double max_change = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
        max_change = std::max(max_change, std::abs(a[k] - b[k]) / (1.0 + std::abs(a[k])));
    CHECK(max_change > 1e-6);
}

TEST_CASE("covariant chain T6, w7, J18, M12") {
    Rng rng(408);
    const CovariantSet zero = maeda_covariants(HarmonicTensor<double>(4));
    CHECK(zero.m12 == 0.0);
    CHECK(norm(zero.t6.raw()) == 0.0);
    CHECK(norm(zero.w7.raw()) == 0.0);
    CHECK(norm(zero.j18.raw()) == 0.0);

    const HarmonicTensor<double> h = random_harmonic(rng, 4);
    const CovariantSet cov = maeda_covariants(h);
    CHECK(is_harmonic(cov.t6.sym(), 1e-11));
    CHECK(is_harmonic(cov.j18.sym(), 1e-11));
    CHECK(cov.m12 == doctest::Approx(norm_sq(cov.t6.raw())));
    CHECK(cov.m12 > 0.0);

    // w7 = H .3. T6 against the explicit contraction
    for (int i = 0; i < 3; ++i) {
        double s = 0;
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q)
                for (int r = 0; r < 3; ++r) s += h(i, p, q, r) * cov.t6(p, q, r);
        CHECK(cov.w7[static_cast<std::size_t>(i)] == doctest::Approx(s));
    }

    const CovariantSet cov2 = maeda_covariants(scaled(h, 2.0));
    CHECK(elt::rel_err(cov2.t6.raw(), cov.t6.raw() * std::pow(2.0, 6)) < 1e-12);
    CHECK(elt::rel_err(cov2.w7.raw(), cov.w7.raw() * std::pow(2.0, 7)) < 1e-12);
    CHECK(elt::rel_err(cov2.j18.raw(), cov.j18.raw() * std::pow(2.0, 18)) < 1e-12);
    CHECK(cov2.m12 == doctest::Approx(std::pow(2.0, 12) * cov.m12));
}

TEST_CASE("rational generators i2..k9") {
    Rng rng(409);
    const HarmonicTensor<double> h = random_harmonic(rng, 4);
    const auto ik = maeda_rational(h);
    CHECK(ik.size() == 6);
    CHECK(ik.value("i2") >= 0.0);

    // homogeneity degrees 2,3,4,4,8,9 under H -> 2H
    const auto ik2 = maeda_rational(scaled(h, 2.0));
    constexpr int deg[6] = {2, 3, 4, 4, 8, 9};
    for (int k = 0; k < 6; ++k)
        CHECK(ik2[static_cast<std::size_t>(k)].value ==
              doctest::Approx(std::pow(2.0, deg[k]) * ik[static_cast<std::size_t>(k)].value));

    CHECK_THROWS_AS(maeda_rational(HarmonicTensor<double>(4)), NonGenericError);

    // rotation invariance of the rational generators and the J family
    for (int trial = 0; trial < 25; ++trial) {
        const Rotation g = random_rotation(rng);
        const auto a = maeda_rational(h).values();
        const auto b = maeda_rational(rotate(g, h)).values();
        for (std::size_t k = 0; k < a.size(); ++k)
            CHECK(elt::rel_err(a[k], b[k], 1.0 + std::abs(a[k])) < 1e-8);
        const auto ja = j_invariants(h).values();
        const auto jb = j_invariants(rotate(g, h)).values();
        for (std::size_t k = 0; k < ja.size(); ++k)
            CHECK(elt::rel_err(ja[k], jb[k], 1.0 + std::abs(ja[k])) < 1e-8);
    }
}

TEST_CASE("separating19 and separating18") {
    Rng rng(410);
    const auto iso = separating19(ElasticityTensor::isotropic(2.0, 1.0));
    CHECK(iso.size() == 19);
    for (std::size_t k = 2; k < iso.size(); ++k) CHECK(std::abs(iso[k].value) < 1e-12);

    CHECK_THROWS_AS(separating18(ElasticityTensor::isotropic(2.0, 1.0)), NonGenericError);

    const ElasticityTensor e = ElasticityTensor::random(rng);
    const auto s18 = separating18(e);
    CHECK(s18.size() == 18);
    const auto s19 = separating19(e);
    const double m12 = s19.value("M12");
    CHECK(s19.value("K14") == doctest::Approx(s18.value("i2") * m12));
    CHECK(s19.value("K27") == doctest::Approx(s18.value("i3") * m12 * m12));
    CHECK(s19.value("K93") == doctest::Approx(s18.value("k9") * std::pow(m12, 7)));

    for (int trial = 0; trial < 10; ++trial) {
        const Rotation g = random_rotation(rng);
        const auto a = separating19(e).values();
        const auto b = separating19(rotate(g, e)).values();
        for (std::size_t k = 0; k < a.size(); ++k)
            CHECK(elt::rel_err(a[k], b[k], 1.0 + std::abs(a[k])) < 1e-8);
    }
}

TEST_CASE("pair invariants") {
    const Eigen::Matrix3d zero = Eigen::Matrix3d::Zero();
    for (const auto& e : pair_invariants(zero, zero).entries()) CHECK(e.value == 0.0);

    const Eigen::Matrix3d q = Eigen::Matrix3d::Identity();
    const auto qi = pair_invariants(q, zero);
    CHECK(qi.value("tr_a") == doctest::Approx(3.0));
    CHECK(qi.value("tr_a2") == doctest::Approx(3.0));
    CHECK(qi.value("tr_a3") == doctest::Approx(3.0));

    Rng rng(411);
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::Matrix3d a, b;
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) {
                a(i, j) = a(j, i) = rng.normal();
                b(i, j) = b(j, i) = rng.normal();
            }
        const Eigen::Matrix3d g = random_rotation(rng).matrix();
        const auto v1 = pair_invariants(a, b).values();
        const auto v2 =
            pair_invariants(g * a * g.transpose(), g * b * g.transpose()).values();
        for (std::size_t k = 0; k < v1.size(); ++k)
            CHECK(elt::rel_err(v1[k], v2[k], 1.0 + std::abs(v1[k])) < 1e-12);
    }
}

TEST_CASE("elementary invariants and trace conversions") {
    const Eigen::Matrix3d a = Eigen::Vector3d(1, 2, 3).asDiagonal();
    const auto s = elementary_invariants(a);
    CHECK(s[0] == doctest::Approx(6.0));
    CHECK(s[1] == doctest::Approx(11.0));
    CHECK(s[2] == doctest::Approx(6.0));

    const auto sq = elementary_invariants(Eigen::Matrix3d::Identity());
    CHECK(sq[0] == doctest::Approx(3.0));
    CHECK(sq[1] == doctest::Approx(3.0));
    CHECK(sq[2] == doctest::Approx(1.0));

    Rng rng(412);
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::Matrix3d m;
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) m(i, j) = m(j, i) = rng.normal();
        const auto tr = trace_invariants(m);
        const auto sig = elementary_invariants(m);
        const auto tr_back = traces_from_sigma(sig);
        const auto sig_back = sigma_from_traces(tr);
        for (int k = 0; k < 3; ++k) {
            CHECK(tr_back[static_cast<std::size_t>(k)] ==
                  doctest::Approx(tr[static_cast<std::size_t>(k)]).epsilon(1e-12));
            CHECK(sig_back[static_cast<std::size_t>(k)] ==
                  doctest::Approx(sig[static_cast<std::size_t>(k)]).epsilon(1e-12));
        }
        // sigma3 is the determinant
        CHECK(sig[2] == doctest::Approx(m.determinant()));
    }
}

TEST_SUITE_END();
