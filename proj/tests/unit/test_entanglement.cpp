#include "eoms/entanglement.hpp"
#include "eoms/errors.hpp"

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"

#include <cmath>
#include <stdexcept>

using namespace eoms;
using eoms::linalg::Matrix;

namespace {

const std::array<Mode, 3> kModes{Mode::Cavity, Mode::Exciton, Mode::Phonon};
const std::array<ModePair, 3> kPairs{ModePair::cavity_exciton, ModePair::cavity_phonon, ModePair::exciton_phonon};

// Two-mode squeezed pair on (first, second), vacuum elsewhere.
CovarianceMatrix embedded_tmsv(Mode first, Mode second, double r) {
    Matrix v = Matrix::identity(6) * 0.5;
    const Matrix t = oracle::two_mode_squeezed(r);
    const std::array<std::size_t, 4> idx{x_index(first), x_index(first) + 1, x_index(second), x_index(second) + 1};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            v(idx[i], idx[j]) = t(i, j);
        }
    }
    return CovarianceMatrix{v};
}

Matrix local_rotations(gen::Rng& rng) {
    Matrix s = Matrix::identity(6);
    for (std::size_t k = 0; k < 3; ++k) {
        s = gen::local_rotation(3, k, gen::uniform(rng, 0.0, constants::two_pi)) * s;
    }
    return s;
}

}  // namespace

TEST_CASE("ModePair: canonical pairs and rejection of repeats") {
    CHECK(ModePair::cavity_exciton.first() == Mode::Cavity);
    CHECK(ModePair::cavity_exciton.second() == Mode::Exciton);
    CHECK(ModePair::cavity_phonon.second() == Mode::Phonon);
    CHECK(ModePair::exciton_phonon.first() == Mode::Exciton);
    CHECK_THROWS_AS(ModePair(Mode::Phonon, Mode::Phonon), std::invalid_argument);
    CHECK(x_index(Mode::Cavity) == 0);
    CHECK(x_index(Mode::Exciton) == 2);
    CHECK(x_index(Mode::Phonon) == 4);
}

TEST_CASE("reduce_two_mode: examples") {
    const CovarianceMatrix vac{Matrix::identity(6) * 0.5};
    for (const auto& pair : kPairs) {
        CHECK(reduce_two_mode(vac, pair) == Matrix::identity(4) * 0.5);
    }
    Matrix blocks(6, 6);
    for (std::size_t m = 0; m < 3; ++m) {
        blocks(2 * m, 2 * m) = 1.0 + m;
        blocks(2 * m + 1, 2 * m + 1) = 2.0 + m;
        blocks(2 * m, 2 * m + 1) = 0.1 * (m + 1);
        blocks(2 * m + 1, 2 * m) = 0.1 * (m + 1);
    }
    const Matrix r = reduce_two_mode(CovarianceMatrix{blocks}, ModePair::cavity_phonon);
    CHECK(r == Matrix{{1.0, 0.1, 0.0, 0.0}, {0.1, 2.0, 0.0, 0.0}, {0.0, 0.0, 3.0, 0.1 * 3}, {0.0, 0.0, 0.1 * 3, 4.0}});
}

TEST_CASE("reduce_two_mode: index map audit") {
    gen::Rng rng(51);
    const Matrix v = gen::random_matrix(rng, 6, 6);
    for (const auto& pair : kPairs) {
        const Matrix r = reduce_two_mode(CovarianceMatrix{v}, pair);
        const std::array<std::size_t, 4> idx{x_index(pair.first()), x_index(pair.first()) + 1,
                                             x_index(pair.second()), x_index(pair.second()) + 1};
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                CHECK(r(i, j) == v(idx[i], idx[j]));
            }
        }
    }
}

TEST_CASE("log_negativity: vacuum is separable") {
    const CovarianceMatrix vac{Matrix::identity(6) * 0.5};
    for (const auto& pair : kPairs) {
        const Negativity n = log_negativity(vac, pair);
        CHECK(n.value == 0.0);
        CHECK(n.nu_minus == doctest::Approx(0.5).epsilon(1e-14));
    }
}

TEST_CASE("log_negativity: two-mode squeezed vacuum gives 2r") {
    for (double r : {0.05, 0.3, 0.7, 1.2, 2.0}) {
        const Negativity n = log_negativity_4x4(oracle::two_mode_squeezed(r));
        CHECK(n.value == doctest::Approx(2.0 * r).epsilon(1e-9));
        CHECK(n.nu_minus == doctest::Approx(std::exp(-2.0 * r) / 2.0).epsilon(1e-9));
        CHECK(oracle::nu_minus_two_mode(oracle::two_mode_squeezed(r)) ==
              doctest::Approx(std::exp(-2.0 * r) / 2.0).epsilon(1e-9));
        for (const auto& pair : kPairs) {
            const CovarianceMatrix v = embedded_tmsv(pair.first(), pair.second(), r);
            CHECK(log_negativity(v, pair).value == doctest::Approx(2.0 * r).epsilon(1e-9));
        }
    }
}

TEST_CASE("log_negativity: eigen-solver path matches the invariant formula") {
    gen::Rng rng(52);
    for (int trial = 0; trial < 200; ++trial) {
        const Matrix v4 = gen::random_physical_cm(rng, 2);
        const double closed = oracle::nu_minus_two_mode(v4);
        const Negativity n = log_negativity_4x4(v4);
        CHECK(std::abs(n.nu_minus - closed) <= 1e-9 * std::max(1.0, closed));
        CHECK((n.value > 0.0) == (n.nu_minus < 0.5));
    }
}

TEST_CASE("log_negativity: independent of which mode is transposed") {
    gen::Rng rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        const CovarianceMatrix v{gen::random_physical_cm(rng, 3)};
        for (const auto& pair : kPairs) {
            const Negativity a = log_negativity(v, pair);
            const Negativity b = log_negativity(v, ModePair(pair.second(), pair.first()));
            CHECK(a.value == doctest::Approx(b.value).epsilon(1e-9));
        }
    }
}

TEST_CASE("log_negativity: invariant under local rotations") {
    gen::Rng rng(54);
    for (int m = 0; m < 5; ++m) {
        const CovarianceMatrix v{gen::random_physical_cm(rng, 3)};
        for (int k = 0; k < 100; ++k) {
            const Matrix s = local_rotations(rng);
            const CovarianceMatrix w{s * v.v * s.transposed()};
            for (const auto& pair : kPairs) {
                CHECK(std::abs(log_negativity(w, pair).value - log_negativity(v, pair).value) <= 1e-9);
            }
            for (Mode single : kModes) {
                CHECK(std::abs(log_negativity_one_vs_two(w, single).value -
                               log_negativity_one_vs_two(v, single).value) <= 1e-9);
            }
        }
    }
}

TEST_CASE("log_negativity_one_vs_two: examples") {
    const CovarianceMatrix vac{Matrix::identity(6) * 0.5};
    for (Mode m : kModes) {
        CHECK(log_negativity_one_vs_two(vac, m).value == 0.0);
    }
    for (double r : {0.1, 0.5, 1.0}) {
        const CovarianceMatrix v = embedded_tmsv(Mode::Cavity, Mode::Exciton, r);
        CHECK(log_negativity_one_vs_two(v, Mode::Cavity).value == doctest::Approx(2.0 * r).epsilon(1e-9));
        CHECK(log_negativity_one_vs_two(v, Mode::Exciton).value == doctest::Approx(2.0 * r).epsilon(1e-9));
        CHECK(log_negativity_one_vs_two(v, Mode::Phonon).value <= 1e-12);
    }
}

TEST_CASE("residual contangles: examples") {
    const CovarianceMatrix vac{Matrix::identity(6) * 0.5};
    CHECK(min_residual_contangle(vac) == 0.0);
    for (double r : {0.1, 0.5, 1.0}) {
        for (const auto& pair : kPairs) {
            const CovarianceMatrix v = embedded_tmsv(pair.first(), pair.second(), r);
            CHECK(min_residual_contangle(v) == doctest::Approx(0.0).epsilon(1e-12));
            for (double res : residual_contangles(v)) {
                CHECK(std::abs(res) <= 1e-9);
            }
        }
    }
}

TEST_CASE("min_residual_contangle: clamping and violation thresholds") {
    CHECK(min_residual_contangle(std::array<double, 3>{0.3, 0.2, 0.5}) == 0.2);
    CHECK(min_residual_contangle(std::array<double, 3>{0.3, -5e-10, 0.5}) == 0.0);
    CHECK(min_residual_contangle(std::array<double, 3>{0.3, -5e-7, 0.5}) == -5e-7);
    CHECK_THROWS_AS((void)min_residual_contangle(std::array<double, 3>{0.3, -2e-6, 0.5}), MonogamyViolation);
}

TEST_CASE("contrast_ratio: examples and bounds") {
    CHECK(contrast_ratio(0.3, 0.1) == doctest::Approx(0.5));
    CHECK(contrast_ratio(0.25, 0.25) == 0.0);
    CHECK(contrast_ratio(0.4, 0.0) == 1.0);
    CHECK(contrast_ratio(0.0, 0.4) == 1.0);
    CHECK(contrast_ratio(0.0, 0.0) == 0.0);
    CHECK(contrast_ratio(1e-13, 5e-13) == 0.0);
    gen::Rng rng(55);
    for (int trial = 0; trial < 500; ++trial) {
        const double a = gen::uniform(rng, 0.0, 2.0);
        const double b = gen::uniform(rng, 0.0, 2.0);
        const double c = contrast_ratio(a, b);
        CHECK(c >= 0.0);
        CHECK(c <= 1.0);
        CHECK(c == contrast_ratio(b, a));
    }
}

TEST_CASE("analyze: report is consistent with the individual measures") {
    gen::Rng rng(56);
    for (int trial = 0; trial < 50; ++trial) {
        const CovarianceMatrix v{gen::random_physical_cm(rng, 3, 0.5)};
        const EntanglementReport r = analyze(v);
        CHECK(r.e_ca.value == log_negativity(v, ModePair::cavity_exciton).value);
        CHECK(r.e_cb.value == log_negativity(v, ModePair::cavity_phonon).value);
        CHECK(r.e_ab.value == log_negativity(v, ModePair::exciton_phonon).value);
        CHECK(r.e_c_ab.value == log_negativity_one_vs_two(v, Mode::Cavity).value);
        CHECK(r.e_a_cb.value == log_negativity_one_vs_two(v, Mode::Exciton).value);
        CHECK(r.e_b_ca.value == log_negativity_one_vs_two(v, Mode::Phonon).value);
        const auto res = residual_contangles(v);
        CHECK(r.residuals == res);
        const double worst = std::min({res[0], res[1], res[2]});
        CHECK(r.r_tau_min.has_value() == (worst >= -1e-6));
        for (const auto* n : {&r.e_ca, &r.e_cb, &r.e_ab, &r.e_c_ab, &r.e_a_cb, &r.e_b_ca}) {
            CHECK(n->value >= 0.0);
            CHECK((n->value > 0.0) == (n->nu_minus < 0.5));
        }
    }
}
