#include "core/model.hpp"

#include <cmath>
#include <string>

#include <fmt/format.h>

#include "core/errors.hpp"

namespace jcm {

void validate(const ModelParams& mp)
{
    auto finite_nonneg = [](double v, const char* name) {
        if (!std::isfinite(v) || v < 0.0)
            throw InvalidArgument(fmt::format("{} must be a finite value >= 0 (got {})", name, v));
    };
    finite_nonneg(mp.lambda1, "lambda1");
    finite_nonneg(mp.lambda2, "lambda2");
    if (!std::isfinite(mp.detuning)) throw InvalidArgument("omega must be finite");
    if (!std::isfinite(mp.alpha.real()) || !std::isfinite(mp.alpha.imag()))
        throw InvalidArgument("alpha must be finite");
    if (mp.n_max && *mp.n_max < 0) throw InvalidArgument("nmax must be >= 0");
}

int effective_n_max(const ModelParams& mp)
{
    if (mp.n_max) return *mp.n_max;
    const double r = std::abs(mp.alpha);
    const double mean = r * r;
    const int floor_n = std::max(30, static_cast<int>(std::ceil(mean + 8.0 * r)));

    // Poisson weights p_k = e^{-mean} mean^k / k!, accumulated until the
    // remaining mass is negligible.
    double p = std::exp(-mean);
    double sum = p;
    int n = 0;
    while (n < floor_n || 1.0 - sum >= 1e-14) {
        ++n;
        p *= mean / n;
        sum += p;
        if (n > 100000) throw InvalidArgument("alpha too large for automatic truncation");
    }
    return n;
}

ModelParams derive_model_params(const PhysicalParams& p, cplx alpha, std::optional<int> n_max,
                                SectorPolicy policy)
{
    if (!(p.mass > 0.0)) throw InvalidArgument("mass must be > 0");
    if (!(p.omega > 0.0)) throw InvalidArgument("omega must be > 0");
    if (!(1.0 + p.xi > 0.0))
        throw InvalidArgument("invalid frequency regime: 1 + xi must be > 0");
    const double rest_energy = p.mass;
    if (std::abs(p.gamma - rest_energy) > 1e-12 * std::max(1.0, std::abs(rest_energy)))
        throw InvalidArgument("resonance condition violated: gamma must equal mc^2");

    const double omega_tilde = p.omega * (1.0 + p.xi);
    const double eta = 2.0 * std::sqrt(p.mass * omega_tilde);
    const double lambda = eta * std::sqrt(rest_energy * p.omega);

    ModelParams mp;
    mp.lambda1 = 2.0 * std::sqrt(1.0 + p.xi) / eta / lambda;
    mp.lambda2 = std::abs(p.chi) / (eta * std::sqrt(rest_energy * p.omega)) / lambda;
    mp.detuning = rest_energy / lambda;
    mp.alpha = alpha;
    mp.n_max = n_max;
    mp.policy = policy;
    return mp;
}

int sector_dimension(int n)
{
    if (n < kLowestSector) throw InvalidArgument(fmt::format("sector index {} < -2", n));
    return n == kLowestSector ? 3 : 4;
}

std::vector<BasisLabel> sector_basis(int n)
{
    if (n < kLowestSector) throw InvalidArgument(fmt::format("sector index {} < -2", n));
    if (n == kLowestSector) return {{0, 0}, {1, 1}, {3, 0}};
    return {{0, n + 2}, {1, n + 3}, {2, n + 1}, {3, n + 2}};
}

int first_sector(SectorPolicy policy)
{
    return policy == SectorPolicy::FullSectors ? kLowestSector : 0;
}

BlockCouplings block_couplings(int n, const ModelParams& mp)
{
    if (n < kLowestSector) throw InvalidArgument(fmt::format("sector index {} < -2", n));
    const double up = std::sqrt(static_cast<double>(n + 3));
    const double down = std::sqrt(static_cast<double>(n + 2));
    return {mp.lambda1 * up, mp.lambda1 * down, mp.lambda2 * up, mp.lambda2 * down};
}

BlockHamiltonian build_block(int n, const ModelParams& mp)
{
    if (n < kLowestSector) throw InvalidArgument(fmt::format("sector index {} < -2", n));
    if (mp.policy == SectorPolicy::TruncatedAnsatz && n < 0)
        throw InvalidArgument(fmt::format("sector {} is not part of the truncated ansatz", n));

    const double two_omega = 2.0 * mp.detuning;
    const BlockCouplings k = block_couplings(n, mp);

    BlockHamiltonian block{n, linalg::DenseMatrix(sector_dimension(n))};
    auto& h = block.matrix;
    if (n == kLowestSector) {
        h(0, 0) = -two_omega;
        h(2, 2) = two_omega;
        h(0, 1) = h(1, 0) = k.a;
        h(1, 2) = h(2, 1) = k.c;
        return block;
    }
    h(0, 0) = -two_omega;
    h(3, 3) = two_omega;
    h(0, 1) = h(1, 0) = k.a;
    h(0, 2) = h(2, 0) = k.d;
    h(1, 3) = h(3, 1) = k.c;
    h(2, 3) = h(3, 2) = k.b;
    return block;
}

}  // namespace jcm
