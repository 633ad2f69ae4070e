#include <doctest.h>

#include <cmath>

#include "core/errors.hpp"
#include "core/model.hpp"

using namespace jcm;

namespace {

ModelParams params(double l1, double l2, double om)
{
    ModelParams mp;
    mp.lambda1 = l1;
    mp.lambda2 = l2;
    mp.detuning = om;
    return mp;
}

}  // namespace

TEST_CASE("derive_model_params: unit oscillator")
{
    PhysicalParams p{.mass = 1.0, .omega = 1.0, .xi = 0.0, .chi = 0.0, .gamma = 1.0};
    const ModelParams mp = derive_model_params(p);
    // omega_tilde = 1, eta = 2, lambda = 2, lambda1 = 1.
    CHECK(mp.lambda1 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(mp.lambda2 == 0.0);
    CHECK(mp.detuning == doctest::Approx(0.5).epsilon(1e-15));

    p.chi = 2.0;
    CHECK(derive_model_params(p).lambda2 == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("derive_model_params: rejects invalid physical regimes")
{
    PhysicalParams p{.mass = 1.0, .omega = 1.0, .xi = -1.5, .chi = 1.0, .gamma = 1.0};
    CHECK_THROWS_AS(derive_model_params(p), InvalidArgument);
    p.xi = -1.0;
    CHECK_THROWS_AS(derive_model_params(p), InvalidArgument);
    p.xi = 0.0;
    p.mass = 0.0;
    CHECK_THROWS_AS(derive_model_params(p), InvalidArgument);
    p.mass = 1.0;
    p.omega = -1.0;
    CHECK_THROWS_AS(derive_model_params(p), InvalidArgument);
    p.omega = 1.0;
    p.gamma = 2.0;
    CHECK_THROWS_AS(derive_model_params(p), InvalidArgument);
}

TEST_CASE("build_block: sector 0 reference values")
{
    const auto b = build_block(0, params(0.3, 0.3, 0.2));
    const auto& h = b.matrix;
    REQUIRE(h.size() == 4);
    CHECK(h(0, 0) == doctest::Approx(-0.4));
    CHECK(h(1, 1) == 0.0);
    CHECK(h(2, 2) == 0.0);
    CHECK(h(3, 3) == doctest::Approx(0.4));
    CHECK(h(0, 1) == doctest::Approx(0.5196152422706632).epsilon(1e-15));  // a(0) = 0.3 sqrt 3
    CHECK(h(2, 3) == doctest::Approx(0.4242640687119285).epsilon(1e-15));  // b(0) = 0.3 sqrt 2
    CHECK(h(1, 3) == doctest::Approx(0.5196152422706632).epsilon(1e-15));  // c(0)
    CHECK(h(0, 2) == doctest::Approx(0.4242640687119285).epsilon(1e-15));  // d(0)
    CHECK(h(0, 3) == 0.0);
    CHECK(h(1, 2) == 0.0);
}

TEST_CASE("build_block: lowest sector is 3x3")
{
    const auto b = build_block(-2, params(0.3, 0.3, 0.2));
    const auto& h = b.matrix;
    REQUIRE(h.size() == 3);
    CHECK(h(0, 0) == doctest::Approx(-0.4));
    CHECK(h(1, 1) == 0.0);
    CHECK(h(2, 2) == doctest::Approx(0.4));
    CHECK(h(0, 1) == doctest::Approx(0.3));
    CHECK(h(1, 2) == doctest::Approx(0.3));
    CHECK(h(0, 2) == 0.0);
    CHECK(h.is_symmetric());
}

TEST_CASE("build_block: zero couplings give a diagonal block")
{
    const auto h = build_block(5, params(0.0, 0.0, 0.2)).matrix;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) CHECK(h(i, j) == 0.0);
    CHECK(h(0, 0) == doctest::Approx(-0.4));
    CHECK(h(3, 3) == doctest::Approx(0.4));
}

TEST_CASE("build_block: errors")
{
    CHECK_THROWS_AS(build_block(-3, params(0.3, 0.3, 0.2)), InvalidArgument);
    ModelParams mp = params(0.3, 0.3, 0.2);
    mp.policy = SectorPolicy::TruncatedAnsatz;
    CHECK_THROWS_AS(build_block(-1, mp), InvalidArgument);
    CHECK_NOTHROW(build_block(0, mp));
}

TEST_CASE("block invariants over many sectors")
{
    for (double l1 : {0.1, 0.3, 1.2})
        for (double l2 : {0.2, 0.8}) {
            const ModelParams mp = params(l1, l2, 0.2);
            for (int n = -1; n < 60; ++n) {
                const auto h = build_block(n, mp).matrix;
                CAPTURE(n);
                CHECK(h.is_symmetric());
                CHECK(h(0, 0) + h(1, 1) + h(2, 2) + h(3, 3) == 0.0);
                CHECK(h(0, 3) == 0.0);
                CHECK(h(1, 2) == 0.0);

                const auto k = block_couplings(n, mp);
                const auto prev = block_couplings(n - 1, mp);
                CHECK(k.b == prev.a);
                CHECK(k.d == prev.c);
                if (n > -1) {
                    CHECK(k.a > prev.a);
                    CHECK(k.b > prev.b);
                    CHECK(k.c > prev.c);
                    CHECK(k.d > prev.d);
                }
            }
        }
}

TEST_CASE("sector basis labels carry constant excitation I = n + 2")
{
    for (int n = -2; n < 10; ++n) {
        const auto basis = sector_basis(n);
        CHECK(static_cast<int>(basis.size()) == sector_dimension(n));
        for (const auto& l : basis) {
            const int dirac = (l.pair % 2) ? 1 : -1;
            const int iso = (l.pair / 2) ? 1 : -1;
            // I = n_photon + (iso - dirac) / 2
            CHECK(l.photons + (iso - dirac) / 2 == n + 2);
            CHECK(l.photons >= 0);
        }
    }
}

TEST_CASE("effective_n_max")
{
    ModelParams mp;
    mp.alpha = {3.0, 0.0};
    const int n = effective_n_max(mp);
    CHECK(n >= 40);
    mp.alpha = 0.0;
    CHECK(effective_n_max(mp) == 30);
    mp.n_max = 12;
    CHECK(effective_n_max(mp) == 12);
    mp.n_max = -1;
    CHECK_THROWS_AS(validate(mp), InvalidArgument);
}
