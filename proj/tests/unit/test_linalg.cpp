#include <doctest.h>

#include <cmath>
#include <random>

#include "core/errors.hpp"
#include "core/linalg.hpp"

using jcm::linalg::DenseMatrix;
using jcm::linalg::jacobi_eigen;

namespace {

DenseMatrix random_symmetric(std::size_t n, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
    return m;
}

double reconstruction_error(const DenseMatrix& a, const jcm::linalg::SymmetricEigen& e)
{
    const std::size_t n = a.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) acc += e.vectors(i, k) * e.values[k] * e.vectors(j, k);
            worst = std::max(worst, std::abs(acc - a(i, j)));
        }
    return worst;
}

double orthogonality_error(const DenseMatrix& v)
{
    const DenseMatrix g = v.transposed() * v;
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            worst = std::max(worst, std::abs(g(i, j) - (i == j ? 1.0 : 0.0)));
    return worst;
}

}  // namespace

TEST_CASE("jacobi: 2x2 with known spectrum")
{
    DenseMatrix m(2);
    m(0, 0) = 2.0;
    m(1, 1) = 2.0;
    m(0, 1) = m(1, 0) = 1.0;
    const auto e = jacobi_eigen(m);
    CHECK(e.values[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(e.values[1] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(std::abs(std::abs(e.vectors(0, 1)) - std::sqrt(0.5)) < 1e-14);
}

TEST_CASE("jacobi: diagonal and degenerate input")
{
    DenseMatrix m(4);
    m(0, 0) = -0.4;
    m(3, 3) = 0.4;
    const auto e = jacobi_eigen(m);
    CHECK(e.values == std::vector<double>{-0.4, 0.0, 0.0, 0.4});
    CHECK(orthogonality_error(e.vectors) == 0.0);
}

TEST_CASE("jacobi: random symmetric matrices reconstruct and stay orthogonal")
{
    std::mt19937_64 rng(12345);
    for (std::size_t n : {1u, 3u, 4u, 7u, 20u, 60u}) {
        const DenseMatrix a = random_symmetric(n, rng);
        const auto e = jacobi_eigen(a);
        CAPTURE(n);
        CHECK(reconstruction_error(a, e) < 1e-12);
        CHECK(orthogonality_error(e.vectors) < 1e-12);
        for (std::size_t k = 1; k < n; ++k) CHECK(e.values[k - 1] <= e.values[k]);
    }
}

TEST_CASE("jacobi: deterministic")
{
    std::mt19937_64 rng(7);
    const DenseMatrix a = random_symmetric(12, rng);
    const auto e1 = jacobi_eigen(a);
    const auto e2 = jacobi_eigen(a);
    CHECK(e1.values == e2.values);
    CHECK(e1.vectors == e2.vectors);
}

TEST_CASE("jacobi: rejects non-symmetric input")
{
    DenseMatrix m(2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(jacobi_eigen(m), jcm::NumericalError);
}
