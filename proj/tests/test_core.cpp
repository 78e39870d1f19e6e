#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <limits>
#include <random>

#include "steerlab/cmatrix.hpp"
#include "steerlab/states.hpp"

using namespace steerlab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("pauli matrices") {
    CHECK(pauli(1).approx_equal(CMatrix(2, {0, 1, 1, 0})));
    CHECK(pauli(3).approx_equal(CMatrix(2, {1, 0, 0, -1})));
    for (int i : {1, 2, 3}) {
        CHECK((pauli(i) * pauli(i)).approx_equal(CMatrix::identity(2)));
        CHECK(pauli(i).is_hermitian());
        CHECK(std::abs(pauli(i).trace()) < 1e-15);
    }
    CHECK_THROWS_AS(pauli(0), std::invalid_argument);
    CHECK_THROWS_AS(pauli(4), std::invalid_argument);
}

TEST_CASE("tensor product") {
    const CMatrix id2 = CMatrix::identity(2);
    CHECK(tensor(id2, id2).approx_equal(CMatrix::identity(4)));

    const CMatrix zz = tensor(pauli(3), pauli(3));
    CHECK(zz.at(0, 0) == Complex(1));
    CHECK(zz.at(1, 1) == Complex(-1));
    CHECK(zz.at(2, 2) == Complex(-1));
    CHECK(zz.at(3, 3) == Complex(1));

    CHECK(std::abs(tensor(pauli(1), pauli(1)).trace()) < 1e-15);
    CHECK_THROWS_AS(tensor(CMatrix::identity(4), id2), std::invalid_argument);
}

TEST_CASE("tensor is bilinear and trace multiplicative") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> normal;
    const auto rand2 = [&] {
        CMatrix m(2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m.at(i, j) = Complex(normal(rng), normal(rng));
        return m;
    };
    for (int trial = 0; trial < 200; ++trial) {
        const CMatrix a = rand2(), b = rand2(), c = rand2();
        const Complex lambda(normal(rng), normal(rng));
        CHECK(tensor(a + b * lambda, c).approx_equal(tensor(a, c) + tensor(b, c) * lambda, 1e-12));
        CHECK(tensor(c, a + b * lambda).approx_equal(tensor(c, a) + tensor(c, b) * lambda, 1e-12));
        CHECK(std::abs(tensor(a, b).trace() - a.trace() * b.trace()) < 1e-12);
    }
}

TEST_CASE("rot_y closed form and unitarity") {
    CHECK(rot_y(0.0).approx_equal(CMatrix::identity(2)));
    const double r = std::sqrt(2.0) / 2.0;
    CHECK(rot_y(kPi / 4.0).approx_equal(CMatrix(2, {r, -r, r, r})));

    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> uni(-10.0, 10.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const double t = uni(rng);
        const CMatrix u = rot_y(t);
        CHECK((u * u.adjoint()).max_abs_diff(CMatrix::identity(2)) < 1e-12);
        CHECK((rot_y(t) * rot_y(-t)).max_abs_diff(CMatrix::identity(2)) < 1e-12);
    }
    // matrix exponential identity: e^{-i t sigma_2} = cos(t) I - i sin(t) sigma_2
    const double t = 0.37;
    const CMatrix expanded =
        CMatrix::identity(2) * std::cos(t) + pauli(2) * Complex(0, -std::sin(t));
    CHECK(rot_y(t).approx_equal(expanded, 1e-15));

    CHECK_THROWS_AS(rot_y(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
    CHECK_THROWS_AS(rot_y(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST_CASE("observable matrices") {
    CHECK(observable_matrix(Observable(1, 0, 0)).approx_equal(pauli(1)));
    const double r = std::sqrt(2.0) / 2.0;
    CHECK(observable_matrix(Observable(r, 0, -r))
              .approx_equal((pauli(1) - pauli(3)) * (1.0 / std::sqrt(2.0)), 1e-15));

    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> uni(-kPi, kPi);
    for (int trial = 0; trial < 500; ++trial) {
        const double theta = uni(rng);
        const double phi = uni(rng);
        const Observable o(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                           std::cos(theta));
        const CMatrix m = observable_matrix(o);
        CHECK(m.is_hermitian(1e-12));
        CHECK(std::abs(m.trace()) < 1e-12);
        CHECK((m * m).max_abs_diff(CMatrix::identity(2)) < 1e-12);
    }
    CHECK_THROWS_AS(Observable(1.0, 0.5, 0.0), std::invalid_argument);
}

TEST_CASE("hermitian eigenvalues") {
    const auto bell = max_entangled().mat();
    const auto ev = bell.hermitian_eigenvalues();
    CHECK(ev.size() == 4);
    CHECK(ev[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(ev[3] == doctest::Approx(1.0).epsilon(1e-12));

    const auto pev = pauli(2).hermitian_eigenvalues();
    CHECK(pev[0] == doctest::Approx(-1.0));
    CHECK(pev[1] == doctest::Approx(1.0));

    // random Hermitian: eigenvalue sum equals trace, squares sum to ||H||_F^2
    std::mt19937_64 rng(44);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 100; ++trial) {
        CMatrix g(4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) g.at(i, j) = Complex(normal(rng), normal(rng));
        const CMatrix h = g + g.adjoint();
        const auto evs = h.hermitian_eigenvalues();
        double sum = 0.0, sq = 0.0;
        for (double v : evs) {
            sum += v;
            sq += v * v;
        }
        CHECK(sum == doctest::Approx(h.trace().real()).epsilon(1e-10));
        CHECK(sq == doctest::Approx((h * h).trace().real()).epsilon(1e-10));
    }
}

TEST_CASE("entangled state constructors") {
    const DensityMatrix bell = max_entangled();
    CHECK(bell.mat().at(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(bell.mat().at(0, 3).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(bell.purity() == doctest::Approx(1.0).epsilon(1e-13));

    CHECK(partial_entangled(kPi / 4.0).mat().max_abs_diff(bell.mat()) < 1e-12);

    const DensityMatrix product = partial_entangled(0.0);
    CHECK(product.mat().at(0, 0).real() == doctest::Approx(1.0));
    CHECK(std::abs(product.mat().at(0, 3)) < 1e-15);

    const double a = 7.0 * kPi / 36.0;
    CHECK(partial_entangled(a).mat().at(0, 0).real() ==
          doctest::Approx(std::cos(a) * std::cos(a)).epsilon(1e-14));

    CHECK_THROWS_AS(partial_entangled(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(partial_entangled(kPi), std::invalid_argument);

    for (int k = 0; k <= 100; ++k) {
        const double alpha = kPi / 2.0 * k / 100.0;
        const DensityMatrix rho = partial_entangled(alpha);  // constructor validates
        CHECK(rho.mat().is_hermitian());
        CHECK(std::abs(rho.mat().trace().real() - 1.0) < 1e-12);
        CHECK(rho.mat().min_eigenvalue() > -1e-12);
    }
}

TEST_CASE("density matrix validation rejects bad inputs") {
    CMatrix not_psd(4);
    not_psd.at(0, 0) = 1.5;
    not_psd.at(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityMatrix{not_psd}, std::invalid_argument);

    CMatrix bad_trace(4);
    bad_trace.at(0, 0) = 0.7;
    CHECK_THROWS_AS(DensityMatrix{bad_trace}, std::invalid_argument);

    CMatrix not_hermitian = max_entangled().mat();
    not_hermitian.at(0, 1) = Complex(0.0, 0.3);
    CHECK_THROWS_AS(DensityMatrix{not_hermitian}, std::invalid_argument);
}
